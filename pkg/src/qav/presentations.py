"""Builders for the presented algebras.

``build_uq`` instantiates the sign-twisted quantum affine sl2 on the
Chevalley-style generators e_i, f_i, k_i^{+-1}; ``build_uq_tensor_square``
doubles it with commuting primed copies (the coproduct target); and
``build_drinfeld`` produces the window-truncated loop-mode algebra on
x+-(k), a(l), gamma^{+-1}, k2^{+-1}.

The Cartan matrix is fixed at ((2,-2),(-2,2)); nothing here aims at other
types.  Relation lists are built in a deterministic order so rebuilt
presentations hash identically.
"""

from __future__ import annotations

import hashlib
import json

from .freealg import Alphabet, NCPoly
from .rewrite import DegLex, complete
from .scalars import ONE, Q, QRat, qint, sign_pow

__all__ = ["Presentation", "ModeWindow", "build_uq",
           "build_uq_tensor_square", "build_drinfeld", "UQ_WEIGHTS"]

CARTAN = ((2, -2), (-2, 2))

# root-lattice weights (alpha1-count, alpha2-count) of the Chevalley letters
UQ_WEIGHTS = {
    "e1": (1, 0), "e2": (0, 1), "f1": (-1, 0), "f2": (0, -1),
    "k1": (0, 0), "k1inv": (0, 0), "k2": (0, 0), "k2inv": (0, 0),
}


class Presentation:
    """An alphabet with defining relations and a fixed monomial order."""

    def __init__(self, alphabet: Alphabet, relations, name: str,
                 metadata=None):
        self.alphabet = alphabet
        self.relations = list(relations)
        self.order = DegLex(alphabet)
        self.name = name
        self.metadata = dict(metadata or {})
        for i, rel in enumerate(self.relations):
            if not rel:
                raise ValueError(f"relation {i} of {name} is zero")

    def to_json(self) -> dict:
        names = self.alphabet.names
        rels = []
        for rel in self.relations:
            rels.append(sorted(
                ([list(c.num), list(c.den), c.shift, [names[i] for i in w]]
                 for w, c in rel.terms.items()),
                key=lambda t: (len(t[3]), t[3])))
        return {
            "format": "qav-presentation/1",
            "name": self.name,
            "alphabet": list(names),
            "display": {n: d for n, d in zip(names, self.alphabet.display)
                        if n != d},
            "inverse_pairs": sorted(
                [sorted((names[a], names[b]))
                 for a, b in self.alphabet.inverse.items() if a < b]),
            "blocks": list(self.alphabet.blocks),
            "order": self.order.to_json(),
            "metadata": self.metadata,
            "relations": rels,
        }

    @property
    def hash(self) -> str:
        doc = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(doc.encode()).hexdigest()

    def complete(self, max_degree: int, **kw):
        return complete(self, max_degree, **kw)

    def __repr__(self):
        return (f"Presentation({self.name}: {len(self.alphabet)} letters, "
                f"{len(self.relations)} relations)")


class ModeWindow:
    """Truncation of the loop-mode generator set: |k| <= K, 0 < |l| <= L."""

    __slots__ = ("K", "L")

    def __init__(self, K: int, L: int):
        if K < 1 or L < 1:
            raise ValueError("mode window requires K >= 1 and L >= 1")
        self.K = K
        self.L = L

    def __repr__(self):
        return f"ModeWindow(K={self.K}, L={self.L})"

    def __eq__(self, other):
        return (isinstance(other, ModeWindow)
                and (self.K, self.L) == (other.K, other.L))

    def __hash__(self):
        return hash((self.K, self.L))


def uq_alphabet() -> Alphabet:
    # ascending precedence; orients straightening toward F-K-E normal forms
    return Alphabet(
        ["f2", "f1", "k2inv", "k2", "k1inv", "k1", "e1", "e2"],
        display={"k1inv": "k1^-1", "k2inv": "k2^-1"},
        inverse_pairs=[("k1", "k1inv"), ("k2", "k2inv")],
    )


def _serre(alph: Alphabet, a: str, b: str) -> NCPoly:
    # x_a^3 x_b + c (x_a^2 x_b x_a + x_a x_b x_a^2) + x_b x_a^3,
    # with c = 1 - q^2 - q^-2
    c = ONE - Q ** 2 - Q ** -2
    return (alph.poly((1, a, a, a, b), (1, b, a, a, a))
            + alph.poly((1, a, a, b, a), (1, a, b, a, a)).scale(c))


def _uq_relations(alph: Alphabet, prime: str = ""):
    """The 19 defining relations, in a fixed order."""
    g = lambda n: n + prime
    p = alph.poly
    rels = []
    # group-likes commute; declared inverses
    rels.append(p((1, g("k1"), g("k2")), (-1, g("k2"), g("k1"))))
    for k, kinv in (("k1", "k1inv"), ("k2", "k2inv")):
        rels.append(p((1, g(k), g(kinv))) - 1)
        rels.append(p((1, g(kinv), g(k))) - 1)
    # k against e/f: twisted signs on the diagonal
    q2, qm2 = Q ** 2, Q ** -2
    for i, j in ((1, 1), (2, 2), (1, 2), (2, 1)):
        ki, ej, fj = g(f"k{i}"), g(f"e{j}"), g(f"f{j}")
        if i == j:
            rels.append(p((1, ki, ej)) + p((1, ej, ki)).scale(q2))
            rels.append(p((1, ki, fj)) + p((1, fj, ki)).scale(qm2))
        else:
            rels.append(p((1, ki, ej)) - p((1, ej, ki)).scale(qm2))
            rels.append(p((1, ki, fj)) - p((1, fj, ki)).scale(q2))
    # cross relations e_i f_j
    kdiff = (Q - Q ** -1).inverse()
    for i in (1, 2):
        for j in (1, 2):
            rel = p((1, g(f"e{i}"), g(f"f{j}"))) - p((1, g(f"f{j}"), g(f"e{i}")))
            if i == j:
                rel = rel - (p((1, g(f"k{i}"))) - p((1, g(f"k{i}inv")))).scale(kdiff)
            rels.append(rel)
    # quartic Serre relations, both orientations, e-side and f-side
    rels.append(_serre(alph, g("e1"), g("e2")))
    rels.append(_serre(alph, g("e2"), g("e1")))
    rels.append(_serre(alph, g("f1"), g("f2")))
    rels.append(_serre(alph, g("f2"), g("f1")))
    return rels


def _check_weight_homogeneous(rel: NCPoly, alph: Alphabet):
    weights = set()
    for w in rel.terms:
        tot = (0, 0)
        for i in w:
            base = alph.names[i].rstrip("'")
            wa, wb = UQ_WEIGHTS[base]
            tot = (tot[0] + wa, tot[1] + wb)
        weights.add(tot)
    if len(weights) > 1:
        raise ValueError(f"relation is not root-lattice homogeneous: {rel}")


def build_uq() -> Presentation:
    """Sign-twisted quantum affine sl2 by generators and relations."""
    alph = uq_alphabet()
    rels = _uq_relations(alph)
    for rel in rels:
        _check_weight_homogeneous(rel, alph)
    return Presentation(alph, rels, "uq", {"cartan": CARTAN})


def build_uq_tensor_square() -> Presentation:
    """Two commuting copies; the target of the coproduct."""
    base = uq_alphabet()
    alph = base.tensor_power(2)
    n = len(base)
    rels = _uq_relations(alph) + _uq_relations(alph, prime="'")
    for a in range(n):
        for b in range(n, 2 * n):
            w_ba = bytes([b, a])
            w_ab = bytes([a, b])
            rels.append(NCPoly(alph, {w_ba: ONE, w_ab: -ONE}))
    return Presentation(alph, rels, "uq2", {"cartan": CARTAN, "copies": 2})


# ---------------------------------------------------------------------------
# loop-mode algebra
# ---------------------------------------------------------------------------

def drinfeld_alphabet(w: ModeWindow) -> Alphabet:
    # group-likes weigh 0, Heisenberg modes 1, x-modes 2: every defining
    # relation then orients with its two-letter mode product in the lead,
    # which keeps completion PBW-shaped (plain length-deglex explodes)
    names = ["gaminv", "gam", "k2inv", "k2"]
    weights = [0, 0, 0, 0]
    names += [f"xm({k})" for k in range(-w.K, w.K + 1)]
    names += [f"xp({k})" for k in range(-w.K, w.K + 1)]
    weights += [2] * (2 * (2 * w.K + 1))
    names += [f"a({l})" for l in range(-w.L, 0)]
    names += [f"a({l})" for l in range(1, w.L + 1)]
    weights += [1] * (2 * w.L)
    return Alphabet(
        names,
        display={"gaminv": "gam^-1", "k2inv": "k2^-1"},
        inverse_pairs=[("gam", "gaminv"), ("k2", "k2inv")],
        weights=weights,
    )


def qint2_over(l: int) -> QRat:
    """[2l]/l as an exact scalar; an even function of l."""
    if l == 0:
        raise ValueError("mode index must be nonzero")
    n = abs(l)
    return qint(2 * n) / QRat.of_int(n)


def _gamma_word(alph: Alphabet, p: int) -> bytes:
    if p >= 0:
        return alph.word(*(["gam"] * p))
    return alph.word(*(["gaminv"] * (-p)))


def gamma_power(alph: Alphabet, p: int) -> NCPoly:
    return NCPoly(alph, {_gamma_word(alph, p): ONE})


def build_drinfeld(w: ModeWindow) -> Presentation:
    """Window-truncated presentation of the loop-mode realization.

    Relation instances whose modes fall outside the window are skipped,
    never approximated.  Families touching a(l) or sign-twisted mode
    pairs are instantiated for both signs of l; the instance list in the
    metadata records which sign produced each relation.
    """
    from . import currents

    alph = drinfeld_alphabet(w)
    K, L = w.K, w.L
    p = alph.poly
    rels = []
    instances = []

    def keep(tag, rel):
        rels.append(rel)
        instances.append(tag)

    # gamma and k2 commute; declared inverses
    keep("central:gam,k2", p((1, "gam", "k2"), (-1, "k2", "gam")))
    for kk, kinv in (("gam", "gaminv"), ("k2", "k2inv")):
        keep(f"inverse:{kk}", p((1, kk, kinv)) - 1)
        keep(f"inverse:{kinv}", p((1, kinv, kk)) - 1)

    # gamma/k2 against the modes
    ls = [l for l in range(-L, L + 1) if l]
    for l in ls:
        al = f"a({l})"
        keep(f"gamma-a:l={l}", p((1, "gam", al), (-1, al, "gam")))
        keep(f"k2-a:l={l}", p((1, "k2", al)) - p((1, al, "k2")).scale(
            QRat.of_int(sign_pow(l))))
    # k2 picks up (-1)^k q^{-+2} across x+-(k); the (-1)^{k+1} q^{+-2}
    # variant is the law of the loop Cartan element gam*k2^-1 instead
    for sign, qpow in (("p", -2), ("m", 2)):
        for k in range(-K, K + 1):
            xk = f"x{sign}({k})"
            keep(f"gamma-x{sign}:k={k}",
                 p((1, "gam", xk), (1, xk, "gam")))
            keep(f"k2-x{sign}:k={k}",
                 p((1, "k2", xk)) - p((1, xk, "k2")).scale(
                     Q ** qpow * QRat.of_int(sign_pow(k))))

    # gamma^{+-2} central (redundant given the sign rules above, but kept
    # as explicit relations; they reduce to zero during completion)
    for gg in ("gam", "gaminv"):
        for name in alph.names:
            if name in ("gam", "gaminv"):
                continue
            keep(f"central:{gg}^2,{name}",
                 p((1, gg, gg, name), (-1, name, gg, gg)))

    for tag, rel in currents.heisenberg_relations(alph, w):
        keep(tag, rel)
    for tag, rel in currents.mode_shift_relations(alph, w):
        keep(tag, rel)
    for tag, rel in currents.same_sign_mode_relations(alph, w):
        keep(tag, rel)
    for tag, rel in currents.pairing_relations(alph, w):
        keep(tag, rel)

    return Presentation(alph, rels, f"drinfeld(K={K},L={L})",
                        {"window": [K, L], "instances": instances})
