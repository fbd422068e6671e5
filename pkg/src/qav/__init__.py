"""Exact verification toolkit for a sign-twisted quantum affine sl2.

Subpackages build the algebra presentations, complete degree-truncated
rewriting bases, construct root vectors and the loop-mode realization,
and mechanically check the commutation identities relating them.
"""

__version__ = "0.1.0"
