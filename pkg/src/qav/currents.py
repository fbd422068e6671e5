"""Formal-distribution calculus for the loop-mode realization.

This module owns everything series-shaped: the exponential expansion of
the diagonal currents k+-(z) in terms of the Heisenberg modes a(l), the
scalar structure functions g+-(z), windowed two-variable distributions,
and the coefficientwise comparison of current relations against the
mode relations.

It also houses the individual mode-relation families consumed by
``presentations.build_drinfeld`` so that every exact coefficient lives
in one place.
"""

from __future__ import annotations

from math import factorial

from .freealg import Alphabet, NCPoly
from .scalars import ONE, Q, QRat, qint, sign_pow

__all__ = ["k_modes_from_a", "heisenberg_relations", "mode_shift_relations",
           "same_sign_mode_relations", "pairing_relations", "pairing_modes"]

QDIFF = Q - Q ** -1
QDEN = QDIFF.inverse()


def _compositions(total: int, cap: int):
    """Ordered tuples of positive integers (each <= cap) summing to total."""
    if total == 0:
        yield ()
        return
    for first in range(1, min(total, cap) + 1):
        for rest in _compositions(total - first, cap):
            yield (first,) + rest


def _qint2_over(l: int) -> QRat:
    """[2l]/l, an even function of the nonzero integer l."""
    n = abs(l)
    return qint(2 * n) / QRat.of_int(n)


def _gamma_poly(alph: Alphabet, power: int) -> NCPoly:
    name = "gam" if power >= 0 else "gaminv"
    return NCPoly(alph, {alph.word(*([name] * abs(power))): ONE})


def _exp_part(alph: Alphabet, m: int, sign: str) -> NCPoly:
    """Order-m coefficient of exp(+-(q - q^-1) sum_l a(+-l) z^{-+l})."""
    if m == 0:
        return alph.one()
    acc = alph.zero()
    for comp in _compositions(m, m):
        j = len(comp)
        c = (QDIFF ** j) / QRat.of_int(factorial(j))
        if sign == "-" and j % 2:
            c = -c
        names = [f"a({l})" if sign == "+" else f"a({-l})" for l in comp]
        acc = acc + NCPoly(alph, {alph.word(*names): c})
    return acc


def _check_mode_order(alph: Alphabet, L: int):
    avail = max((abs(int(n[2:-1])) for n in alph.names if n.startswith("a(")),
                default=0)
    if L > avail:
        raise ValueError(f"window holds a-modes up to {avail}, need {L}")


def k_modes_from_a(alph: Alphabet, L: int, sign: str):
    """Modes of the diagonal currents as polynomials in k2^{+-1}, a(+-l).

    For sign "+" returns [k+(0), ..., k+(L)]; for "-" returns
    [k-(0), k-(-1), ..., k-(-L)].  The order-m mode collects every word
    a(l1)...a(lj) with l1+...+lj = m from the exponential series, scaled
    by (+-(q - q^-1))^j / j!, with the k2^{+-1} anchor kept on the side
    it sits in the generating function.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if L < 0:
        raise ValueError("mode order must be nonnegative")
    _check_mode_order(alph, L)
    out = []
    for m in range(L + 1):
        if sign == "+":
            out.append(alph.gen("k2") * _exp_part(alph, m, "+"))
        else:
            out.append(_exp_part(alph, m, "-") * alph.gen("k2inv"))
    return out


def pairing_rhs(alph: Alphabet, l: int, lp: int) -> NCPoly:
    """Value of [x+(l), x-(lp)] in the Cartan-Heisenberg subalgebra.

    With m = l + lp, the nonpositive-m part is gamma^{1-lp} k2^-1 times
    the order |m| content of exp(-(q - q^-1) sum a(-i) u^i), and the
    nonnegative-m part is -gamma^{-l-1} k2 times the order m content of
    the same exponential in the positive modes at a sign-flipped
    argument; both divided by (q - q^-1).  The naive k2^{+-1}-anchored,
    gamma^{+-l}-dressed form fails the transport cross-check against the
    Chevalley side already in the zero modes (which must pair to the
    k1-valued cross relation); this dressing is the one the cross-check
    verifies on the whole window.
    """
    m = l + lp
    _check_mode_order(alph, abs(m))
    out = alph.zero()
    if m <= 0:
        piece = (_gamma_poly(alph, 1 - lp) * alph.gen("k2inv")
                 * _exp_part(alph, -m, "-"))
        out = out + piece.scale(QDEN)
    if m >= 0:
        piece = (_gamma_poly(alph, -l - 1) * alph.gen("k2")
                 * _exp_part(alph, m, "+"))
        out = out - piece.scale(QDEN * QRat.of_int(sign_pow(m)))
    return out


# ---------------------------------------------------------------------------
# mode relation families
# ---------------------------------------------------------------------------

def _window(alph: Alphabet):
    K = max(int(n[3:-1]) for n in alph.names if n.startswith("xp("))
    L = max(int(n[2:-1]) for n in alph.names if n.startswith("a("))
    return K, L


def heisenberg_relations(alph: Alphabet, w):
    """[a(l), a(l')] pairs; the l + l' = 0 pairs carry the central value."""
    out = []
    ls = [l for l in range(-w.L, w.L + 1) if l]
    for i, l in enumerate(ls):
        for lp in ls[i + 1:]:
            rel = (alph.poly((1, f"a({l})", f"a({lp})"))
                   - alph.poly((1, f"a({lp})", f"a({l})")))
            if l + lp == 0:
                c = _qint2_over(l) * QDEN
                if l < 0:
                    c = -c
                rel = rel - (_gamma_poly(alph, abs(l))
                             - _gamma_poly(alph, -abs(l))).scale(c)
            out.append((f"D3:l={l},l'={lp}", rel))
    return out


def shift_law(sign: str, l: int):
    """Twist, coefficient and gamma power of the a(l)-vs-x law.

    On the aligned quadrants (positive modes against x+, negative modes
    against x-) the law is a plain commutator with a gamma^l dressing;
    on the mixed quadrants the commutator is twisted by (-1)^l and no
    gamma survives.  Coefficients pick up (-1)^l on the x- side.  The
    whole table is forced by the transport cross-check; the untwisted
    all-quadrant commutator form fails it whenever l and the x-sign
    disagree.
    """
    aligned = (l > 0) if sign == "p" else (l < 0)
    eps = 1 if aligned else sign_pow(l)
    gpow = l if aligned else 0
    c = _qint2_over(l)
    if sign == "p":
        c = -c
    else:
        c = c * QRat.of_int(sign_pow(l))
    return eps, c, gpow


def mode_shift_relations(alph: Alphabet, w):
    """a(l) against x+-(k): a(l) shifts the mode index by l."""
    out = []
    ls = [l for l in range(-w.L, w.L + 1) if l]
    for l in ls:
        for sign in ("p", "m"):
            for k in range(-w.K, w.K + 1):
                if abs(l + k) > w.K:
                    continue
                eps, c, gpow = shift_law(sign, l)
                xk, xlk = f"x{sign}({k})", f"x{sign}({l + k})"
                rel = (alph.poly((1, f"a({l})", xk))
                       - alph.poly((1, xk, f"a({l})")).scale(QRat.of_int(eps))
                       - (alph.gen(xlk) * _gamma_poly(alph, gpow)).scale(c))
                out.append((f"D4:sign={sign},l={l},k={k}", rel))
    return out


def same_sign_mode_relations(alph: Alphabet, w):
    """Shift-exchange law for two modes of the same sign.

    The exchange factor is q^-2 for the plus modes and q^2 for the minus
    modes (they are swapped by the bar antiautomorphism), with the
    parity twist (-1)^{k+k'+1} between the two orderings.
    """
    out = []
    for sign, factor in (("p", Q ** -2), ("m", Q ** 2)):
        for k in range(-w.K, w.K):
            for kp in range(-w.K, w.K):
                x = lambda j: f"x{sign}({j})"
                lhs = (alph.poly((1, x(k + 1), x(kp)))
                       - alph.poly((1, x(k), x(kp + 1))).scale(factor))
                rhs = (alph.poly((1, x(kp + 1), x(k)))
                       - alph.poly((1, x(kp), x(k + 1))).scale(factor))
                rel = lhs - rhs.scale(QRat.of_int(sign_pow(k + kp + 1)))
                if rel:
                    out.append((f"D5:sign={sign},k={k},k'={kp}", rel))
    return out


def pairing_relations(alph: Alphabet, w):
    """[x+(l), x-(l')] equals its gamma-dressed diagonal-mode value."""
    out = []
    for l in range(-w.K, w.K + 1):
        for lp in range(-w.K, w.K + 1):
            if abs(l + lp) > w.L:
                continue
            rel = (alph.poly((1, f"xp({l})", f"xm({lp})"))
                   - alph.poly((1, f"xm({lp})", f"xp({l})"))
                   - pairing_rhs(alph, l, lp))
            out.append((f"D6:l={l},l'={lp}", rel))
    return out
