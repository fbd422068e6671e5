"""Exact Gaussian elimination over Q(q) on sparse dict-vectors.

Vectors are ``{key: QRat}`` maps with zero entries pruned.  Pivots are
chosen as the maximal key under a caller-supplied ordering, which keeps
elimination deterministic.
"""

from __future__ import annotations

from .scalars import QRat

__all__ = ["LinearSpan"]


def _axpy(vec: dict, c: QRat, row: dict):
    for k, v in row.items():
        s = vec.get(k)
        s = c * v if s is None else s + c * v
        if s:
            vec[k] = s
        else:
            vec.pop(k, None)


class LinearSpan:
    """Row space with optionally tracked source combinations."""

    def __init__(self, keyfunc=None):
        self.keyfunc = keyfunc or (lambda k: k)
        self.rows = []  # (pivot, vec, combo); vec[pivot] == 1

    def _eliminate(self, vec: dict, combo: dict):
        for pivot, row, rcombo in self.rows:
            c = vec.get(pivot)
            if c:
                _axpy(vec, -c, row)
                vec.pop(pivot, None)
                if rcombo is not None:
                    _axpy(combo, -c, rcombo)
        return vec, combo

    def add(self, vec: dict, label=None) -> bool:
        """Insert a vector; returns False if it was already in the span."""
        combo = {label: QRat.of_int(1)} if label is not None else None
        vec, combo = self._eliminate(dict(vec), combo or {})
        if not vec:
            return False
        pivot = max(vec, key=self.keyfunc)
        inv = vec[pivot].inverse()
        vec = {k: v * inv for k, v in vec.items()}
        if label is not None:
            combo = {k: v * inv for k, v in combo.items()}
        else:
            combo = None
        self.rows.append((pivot, vec, combo))
        return True

    def residual(self, vec: dict) -> dict:
        out, _ = self._eliminate(dict(vec), {})
        return out

    def contains(self, vec: dict) -> bool:
        return not self.residual(vec)

    def solve(self, target: dict):
        """Combination of labeled rows equaling target, or None."""
        vec, combo = self._eliminate(dict(target), {})
        if vec:
            return None
        return {k: -v for k, v in combo.items()}

    def dimension(self) -> int:
        return len(self.rows)
