"""ruledsym: exact Euclidean symmetries of rational ruled surfaces.

The library computes every isometry of three-space that maps a rational
ruled surface in standard form  x(t, s) = p(t) + s * q(t)  onto itself,
working entirely in the parameter domain with exact rational/algebraic
arithmetic, and lifts the same machinery to implicitly given algebraic
surfaces through the highest-order form of their defining polynomial.
"""

__version__ = "0.1.0"
