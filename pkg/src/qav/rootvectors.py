"""Real and imaginary root vectors and the Heisenberg-mode images.

Everything is produced by iterating the braid automorphisms: the alpha_1
family by powers of (T1 Phi) on e1, the alpha_2 family by powers of
(T2^-1 Phi) on e2 (using the solved braid inverse), the f-side families
through the bar antiautomorphism, and the imaginary vectors through the
adjoint recursion on e1/f1.  All entries are cached in normal form with
respect to the attached basis, since every downstream identity check
reuses them heavily.
"""

from __future__ import annotations

from .freealg import NCPoly
from .morphisms import (GenImageMap, braid, compose, identity_map, omega,
                        phi, solve_braid_inverse)
from .rewrite import RewriteBasis
from .scalars import ONE, Q, QRat, qint, sign_pow

__all__ = ["RootTable", "b_coeff"]


def b_coeff(n: int, k: int) -> QRat:
    """Straightening coefficients for moving an imaginary vector past e1."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    sign = QRat.of_int(sign_pow(n - 1))
    if k < n:
        return sign * Q ** (-2 * (k - 1)) * (Q ** 2 - Q ** -2)
    return sign * Q ** (-2 * (n - 1)) * qint(2)


class RootTable:
    """Memoized root-vector families over one completed basis."""

    def __init__(self, uq, basis: RewriteBasis, max_n: int = 4):
        self.uq = uq
        self.basis = basis
        self.max_n = max_n
        alph = uq.alphabet
        self.alph = alph
        self.phi = phi(uq, basis)
        self.omega = omega(uq, basis)
        self.t1 = braid(uq, 1, basis)
        self.t2 = braid(uq, 2, basis)
        self.t1inv = solve_braid_inverse(uq, 1, basis)
        self.t2inv = solve_braid_inverse(uq, 2, basis)
        # power tables of the translation maps
        self._t1phi_pow = {0: identity_map(uq, basis)}
        self._t2invphi_pow = {0: identity_map(uq, basis)}
        self._cache = {}

    # -- translation maps ------------------------------------------------

    def t1phi_power(self, n: int) -> GenImageMap:
        tab = self._t1phi_pow
        if n in tab:
            return tab[n]
        if n > 0:
            step = compose(self.t1, self.phi, name="T1Phi")
            prev = self.t1phi_power(n - 1)
            tab[n] = compose(step, prev, name=f"(T1Phi)^{n}")
        else:
            step = compose(self.phi, self.t1inv, name="(T1Phi)^-1")
            prev = self.t1phi_power(n + 1)
            tab[n] = compose(step, prev, name=f"(T1Phi)^{n}")
        return tab[n]

    def t2invphi_power(self, n: int) -> GenImageMap:
        if n < 0:
            raise ValueError("only nonnegative powers are tabulated")
        tab = self._t2invphi_pow
        if n in tab:
            return tab[n]
        step = compose(self.t2inv, self.phi, name="T2invPhi")
        prev = self.t2invphi_power(n - 1)
        tab[n] = compose(step, prev, name=f"(T2invPhi)^{n}")
        return tab[n]

    # -- the mode images of the realization map ---------------------------

    def x_plus(self, n: int) -> NCPoly:
        key = ("x+", n)
        if key not in self._cache:
            self._cache[key] = self.basis.reduce(
                self.t1phi_power(n).apply(self.alph.gen("e1")))
        return self._cache[key]

    def x_minus(self, n: int) -> NCPoly:
        key = ("x-", n)
        if key not in self._cache:
            self._cache[key] = self.basis.reduce(
                self.t1phi_power(-n).apply(self.alph.gen("f1")))
        return self._cache[key]

    # -- root vector families ---------------------------------------------

    def real_root(self, n: int, i: int, sign: str) -> NCPoly:
        """E/F at n delta + alpha_i, in normal form."""
        if n < 0:
            raise ValueError("layer index must be nonnegative")
        if i not in (1, 2):
            raise ValueError("simple-root index must be 1 or 2")
        if sign not in ("E", "F"):
            raise ValueError("sign must be 'E' or 'F'")
        key = ("real", n, i, sign)
        if key in self._cache:
            return self._cache[key]
        if sign == "E":
            if i == 1:
                val = self.x_plus(n)
            else:
                val = self.basis.reduce(
                    self.t2invphi_power(n).apply(self.alph.gen("e2")))
        else:
            val = self.basis.reduce(self.omega.apply(
                self.real_root(n, i, "E")))
        self._cache[key] = val
        return val

    def imag_root(self, n: int, sign: str) -> NCPoly:
        """E/F at n delta via the adjoint recursion on the alpha_2 family."""
        if n < 1:
            raise ValueError("imaginary layer index must be positive")
        if sign not in ("E", "F"):
            raise ValueError("sign must be 'E' or 'F'")
        key = ("imag", n, sign)
        if key in self._cache:
            return self._cache[key]
        eps = QRat.of_int(sign_pow(n))
        if sign == "E":
            prev = self.real_root(n - 1, 2, "E")
            e1 = self.alph.gen("e1")
            val = e1 * prev + (prev * e1).scale(eps * Q ** -2)
        else:
            prev = self.real_root(n - 1, 2, "F")
            f1 = self.alph.gen("f1")
            val = prev * f1 + (f1 * prev).scale(eps * Q ** 2)
        val = self.basis.reduce(val)
        self._cache[key] = val
        return val

    # -- Heisenberg-mode images -------------------------------------------

    def psi_a(self, n: int) -> NCPoly:
        """Image of the Heisenberg mode a(n), by the defining recursion."""
        if n == 0:
            raise ValueError("mode index must be nonzero")
        key = ("psia", n)
        if key in self._cache:
            return self._cache[key]
        alph = self.alph
        qdiff = Q - Q ** -1
        if n > 0:
            gword = lambda m: alph.poly((1,) + ("k1", "k2") * m)
            val = gword(n) * self.imag_root(n, "E")
            for r in range(1, n):
                val = val - (gword(n - r) * self.imag_root(n - r, "E")
                             * self.psi_a(r)).scale(
                    qdiff * QRat.of_int(r) / QRat.of_int(n))
        else:
            k = -n
            gword = lambda m: alph.poly((1,) + ("k1inv", "k2inv") * m)
            val = self.imag_root(k, "F") * gword(k)
            for r in range(1, k):
                val = val + (self.psi_a(-r) * self.imag_root(k - r, "F")
                             * gword(k - r)).scale(
                    qdiff * QRat.of_int(r) / QRat.of_int(k))
        val = self.basis.reduce(val)
        self._cache[key] = val
        return val
