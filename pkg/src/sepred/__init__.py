"""sepred: exact-arithmetic toolkit for reducibility of separated polynomials.

Core surface: exact rationals and number fields, dense uni/bivariate
polynomials with complete factorization, polynomial composition structure
(decompositions, Ritt moves, Chebyshev/Dickson recognition), the named
polynomial families, a reducibility classifier with checkable witnesses, a
finite permutation-group engine, and integer scanners for reducible fibers.
"""

__version__ = "0.1.0"
