"""hopfsmith: a workbench for finitely presented strict n-categories with
the lax tensor product, and exact-arithmetic Hopf algebra computations."""

__version__ = "0.1.0"
