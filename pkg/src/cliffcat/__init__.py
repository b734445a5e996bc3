"""Exact-arithmetic workbench for pair-insertion quiver algebras.

Builds, for each n > 0, the pair-insertion quiver and its boxed product, the
F2 path-algebra quotients and the DG thickening of the tensor square, the
q,h-valued product on vertex classes with its Clifford specialization, the
per-pair bimodule complexes realizing that product, and the word-lifting
functor on complexes of projectives.
"""

__version__ = "0.1.0"
