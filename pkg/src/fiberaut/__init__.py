"""Exact computations in the structure M = Q ∪ Q² and its automorphism group.

Modules:

* :mod:`fiberaut.domain` -- elements of M and the interpretation of f, R, 0, 1
* :mod:`fiberaut.logic` -- terms, formulas, parser, evaluators
* :mod:`fiberaut.affine` -- affine normal forms and finite/cofinite solution sets
* :mod:`fiberaut.definability` -- definability certificates over {0, 1}
* :mod:`fiberaut.automorphisms` -- fiber-translation profiles and homomorphism checks
* :mod:`fiberaut.metrics` -- left-invariant metrics and escape witnesses
* :mod:`fiberaut.model_iso` -- extending parent automorphisms to the reduct
* :mod:`fiberaut.cli` -- command-line entry point
"""
from .domain import Child, Element, Parent, eval_F, interp_const, interp_f, interp_R

__version__ = '0.1.0'

__all__ = ['Child', 'Element', 'Parent', 'eval_F', 'interp_const', 'interp_f', 'interp_R']
