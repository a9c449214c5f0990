"""Exact verification of noncommutative principal bundles.

Structure-constant Hopf algebras and (co)module (co)algebras over Q or F_p,
the Hopf-Galois conditions with exact witnesses, descent theory, the
associated quantum category, and a typed morphism-expression language.
"""

__version__ = "0.1.0"
