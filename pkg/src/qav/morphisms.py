"""Generator-image maps between presented algebras.

A map is a table of generator images plus two switches: hom vs anti-hom
(anti-homs multiply images in reversed word order) and an optional
coefficient twist by the bar involution q -> 1/q.  Application extends
the table multiplicatively and, when a rewriting basis is attached,
returns images in normal form.

Builders cover the index-swap involution, the bar antiautomorphism, the
braid automorphisms with ansatz-solved inverses, the Hopf structure
maps, and the two mode-realization maps in both directions.
"""

from __future__ import annotations

from .freealg import Alphabet, NCPoly, deglex_key, tensor
from .linalg import LinearSpan
from .rewrite import RewriteBasis
from .scalars import ONE, Q, QRat, ZERO, qint

__all__ = ["GenImageMap", "MissingImage", "BraidInverseError", "compose",
           "identity_map", "phi", "omega", "braid", "solve_braid_inverse",
           "coproduct", "antipode", "counit", "psi", "xi", "omega_drinfeld",
           "check_respects_relations"]


class MissingImage(KeyError):
    pass


class BraidInverseError(RuntimeError):
    """The inverse-braid ansatz admits no solution; carries the residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class GenImageMap:
    """A (anti)homomorphism given by generator images."""

    def __init__(self, name: str, source, target, images: dict,
                 kind: str = "hom", twist: str = "id",
                 basis: RewriteBasis | None = None):
        if kind not in ("hom", "anti"):
            raise ValueError("kind must be 'hom' or 'anti'")
        if twist not in ("id", "bar"):
            raise ValueError("twist must be 'id' or 'bar'")
        self.name = name
        self.source = source
        self.target = target
        self.kind = kind
        self.twist = twist
        self.basis = basis
        self.images = {}
        for g, img in images.items():
            gid = source.alphabet.id(g) if isinstance(g, str) else g
            self.images[gid] = img
        missing = [source.alphabet.names[i]
                   for i in range(len(source.alphabet)) if i not in self.images]
        if missing:
            raise MissingImage(f"{name}: no image for {missing}")
        self._word_cache = {}

    def with_basis(self, basis: RewriteBasis) -> "GenImageMap":
        return GenImageMap(self.name, self.source, self.target,
                           self.images, self.kind, self.twist, basis)

    def image_of_word(self, w: bytes) -> NCPoly:
        cached = self._word_cache.get(w)
        if cached is not None:
            return cached
        out = self.target.alphabet.one()
        letters = reversed(w) if self.kind == "anti" else w
        for i in letters:
            out = out * self.images[i]
        if self.basis is not None:
            out = self.basis.reduce(out)
        if len(self._word_cache) < 10_000:
            self._word_cache[w] = out
        return out

    def apply(self, p: NCPoly) -> NCPoly:
        if p.alphabet.key != self.source.alphabet.key:
            raise ValueError(f"{self.name}: polynomial not over source alphabet")
        out = self.target.alphabet.zero()
        bar = self.twist == "bar"
        for w, c in p.terms.items():
            if bar:
                c = c.bar()
            out = out + self.image_of_word(w).scale(c)
        if self.basis is not None:
            out = self.basis.reduce(out)
        return out

    def __repr__(self):
        return (f"GenImageMap({self.name}: {self.source.name} -> "
                f"{self.target.name}, {self.kind}, twist={self.twist})")


def compose(m2: GenImageMap, m1: GenImageMap, name=None) -> GenImageMap:
    """The map x -> m2(m1(x)); twists and kinds compose."""
    if m1.target.alphabet.key != m2.source.alphabet.key:
        raise ValueError("composition mismatch: "
                         f"{m1.name} lands off {m2.name}'s source")
    images = {gid: m2.apply(img) for gid, img in m1.images.items()}
    kind = "anti" if (m1.kind == "anti") != (m2.kind == "anti") else "hom"
    twist = "bar" if (m1.twist == "bar") != (m2.twist == "bar") else "id"
    return GenImageMap(name or f"{m2.name}*{m1.name}", m1.source, m2.target,
                       images, kind, twist, m2.basis)


def check_respects_relations(m: GenImageMap, basis: RewriteBasis):
    """Reduce the image of every defining relation of the source.

    Returns a list of (index, Membership); the map is well defined on
    the quotient exactly when every verdict is Member.
    """
    out = []
    for i, rel in enumerate(m.source.relations):
        img = m.apply(rel)
        out.append((i, basis.is_member(img)))
    return out


def check_inverse_pairs(m: GenImageMap, basis: RewriteBasis) -> bool:
    alph = m.source.alphabet
    one = m.target.alphabet.one()
    for a, b in alph.inverse.items():
        if basis.reduce(m.images[a] * m.images[b]) != one:
            return False
    return True


# ---------------------------------------------------------------------------
# builders on the Chevalley presentation
# ---------------------------------------------------------------------------

def identity_map(pres, basis=None) -> GenImageMap:
    images = {n: pres.alphabet.gen(n) for n in pres.alphabet.names}
    return GenImageMap("id", pres, pres, images, "hom", "id", basis)


def phi(uq, basis=None) -> GenImageMap:
    """Index swap 1 <-> 2; an involutive automorphism."""
    g = uq.alphabet.gen
    images = {"e1": g("e2"), "e2": g("e1"), "f1": g("f2"), "f2": g("f1"),
              "k1": g("k2"), "k2": g("k1"),
              "k1inv": g("k2inv"), "k2inv": g("k1inv")}
    return GenImageMap("Phi", uq, uq, images, "hom", "id", basis)


def omega(uq, basis=None) -> GenImageMap:
    """Bar antiautomorphism: e <-> f, k -> k^-1, q -> 1/q."""
    g = uq.alphabet.gen
    images = {"e1": g("f1"), "e2": g("f2"), "f1": g("e1"), "f2": g("e2"),
              "k1": g("k1inv"), "k2": g("k2inv"),
              "k1inv": g("k1"), "k2inv": g("k2")}
    return GenImageMap("Omega", uq, uq, images, "anti", "bar", basis)


def braid(uq, i: int, basis=None) -> GenImageMap:
    """The braid automorphism attached to the simple root alpha_i."""
    if i not in (1, 2):
        raise ValueError("braid index must be 1 or 2")
    j = 3 - i
    alph = uq.alphabet
    g = alph.gen
    ei, fi, ki = f"e{i}", f"f{i}", f"k{i}"
    ej, fj, kj = f"e{j}", f"f{j}", f"k{j}"
    two = qint(2)
    images = {
        ki: g(f"k{i}inv"),
        f"k{i}inv": g(ki),
        kj: g(kj) * g(ki) * g(ki),
        f"k{j}inv": g(f"k{j}inv") * g(f"k{i}inv") * g(f"k{i}inv"),
        ei: -(g(fi) * g(ki)),
        fi: -(g(f"k{i}inv") * g(ei)),
        ej: (g(ei) * g(ei) * g(ej) - (g(ej) * g(ei) * g(ei)).scale(Q ** -2)
             ).scale(two.inverse())
            + (g(ei) * g(ej) * g(ei)).scale((ONE - Q ** -2) / two),
        fj: ((g(fj) * g(fi) * g(fi))
             - (g(fi) * g(fi) * g(fj)).scale(Q ** 2)).scale(two.inverse())
            + (g(fi) * g(fj) * g(fi)).scale((ONE - Q ** 2) / two),
    }
    return GenImageMap(f"T{i}", uq, uq, images, "hom", "id", basis)


def solve_braid_inverse(uq, i: int, basis: RewriteBasis) -> GenImageMap:
    """Inverse of braid(i), with the degree-3 images solved exactly.

    The k- and index-i images are forced; the images of e_j and f_j are
    the unique cubic combinations alpha x_i^2 x_j + beta x_i x_j x_i +
    gamma x_j x_i^2 that the forward map sends back to the generator.
    The solved map carries a zero-residual certificate for every
    generator; an unsolvable ansatz raises BraidInverseError.
    """
    if i not in (1, 2):
        raise ValueError("braid index must be 1 or 2")
    j = 3 - i
    alph = uq.alphabet
    g = alph.gen
    fwd = braid(uq, i, basis)
    images = {
        f"k{i}": g(f"k{i}inv"),
        f"k{i}inv": g(f"k{i}"),
        f"k{j}": g(f"k{j}") * g(f"k{i}") * g(f"k{i}"),
        f"k{j}inv": g(f"k{j}inv") * g(f"k{i}inv") * g(f"k{i}inv"),
        f"e{i}": -(g(f"k{i}inv") * g(f"f{i}")),
        f"f{i}": -(g(f"e{i}") * g(f"k{i}")),
    }
    for kind in ("e", "f"):
        xi_, xj = f"{kind}{i}", f"{kind}{j}"
        words = [(xi_, xi_, xj), (xi_, xj, xi_), (xj, xi_, xi_)]
        span = LinearSpan(keyfunc=deglex_key)
        for label, names in enumerate(words):
            img = basis.reduce(fwd.apply(alph.poly((1,) + names)))
            span.add(dict(img.terms), label=label)
        target = basis.reduce(g(xj))
        combo = span.solve(dict(target.terms))
        if combo is None:
            raise BraidInverseError(
                f"T{i}^-1({xj}): cubic ansatz has no solution",
                residual=span.residual(dict(target.terms)))
        sol = alph.zero()
        for label, names in enumerate(words):
            c = combo.get(label, ZERO)
            if c:
                sol = sol + alph.poly((c,) + names)
        images[xj] = sol
    inv = GenImageMap(f"T{i}inv", uq, uq, images, "hom", "id", basis)
    certificate = {}
    for name in alph.names:
        res = basis.reduce(fwd.apply(inv.images[alph.id(name)]) - g(name))
        certificate[name] = res
        if res:
            raise BraidInverseError(
                f"T{i}^-1({name}): certificate residual is nonzero",
                residual=res)
    inv.certificate = certificate
    return inv


# ---------------------------------------------------------------------------
# Hopf structure maps
# ---------------------------------------------------------------------------

def coproduct(uq, uq2, basis=None) -> GenImageMap:
    """Comultiplication into the commuting double."""
    base = uq.alphabet
    alph2 = uq2.alphabet
    one = base.one()

    def t(a, b):
        return tensor(a, b, alph2)

    images = {}
    for idx in (1, 2):
        e, f, k, kinv = (base.gen(f"e{idx}"), base.gen(f"f{idx}"),
                         base.gen(f"k{idx}"), base.gen(f"k{idx}inv"))
        images[f"e{idx}"] = t(e, one) + t(k, e)
        images[f"f{idx}"] = t(one, f) + t(f, kinv)
        images[f"k{idx}"] = t(k, k)
        images[f"k{idx}inv"] = t(kinv, kinv)
    return GenImageMap("Delta", uq, uq2, images, "hom", "id", basis)


def antipode(uq, basis=None) -> GenImageMap:
    g = uq.alphabet.gen
    images = {}
    for idx in (1, 2):
        images[f"e{idx}"] = -(g(f"k{idx}inv") * g(f"e{idx}"))
        images[f"f{idx}"] = -(g(f"f{idx}") * g(f"k{idx}"))
        images[f"k{idx}"] = g(f"k{idx}inv")
        images[f"k{idx}inv"] = g(f"k{idx}")
    return GenImageMap("S", uq, uq, images, "anti", "id", basis)


def counit(p: NCPoly) -> QRat:
    """Evaluate: group-like letters to 1, e/f letters to 0."""
    alph = p.alphabet
    total = ZERO
    for w, c in p.terms.items():
        if all(alph.names[i].startswith("k") for i in w):
            total = total + c
    return total


# ---------------------------------------------------------------------------
# mode-realization maps
# ---------------------------------------------------------------------------

def psi(drinfeld, uq, roots, basis=None, name="Psi") -> GenImageMap:
    """Loop modes to root vectors; needs a root table covering the window."""
    g = uq.alphabet.gen
    images = {
        "gam": g("k1") * g("k2"),
        "gaminv": g("k1inv") * g("k2inv"),
        "k2": g("k2"),
        "k2inv": g("k2inv"),
    }
    for nm in drinfeld.alphabet.names:
        if nm.startswith("xp("):
            images[nm] = roots.x_plus(int(nm[3:-1]))
        elif nm.startswith("xm("):
            images[nm] = roots.x_minus(int(nm[3:-1]))
        elif nm.startswith("a("):
            images[nm] = roots.psi_a(int(nm[2:-1]))
    return GenImageMap(name, drinfeld, uq, images, "hom", "id", basis)


def xi(uq, drinfeld, basis=None) -> GenImageMap:
    """Chevalley generators to window modes (needs K >= 1)."""
    g = drinfeld.alphabet.gen
    needed = ("xp(0)", "xm(0)", "xp(-1)", "xm(1)")
    for nm in needed:
        if nm not in drinfeld.alphabet.index:
            raise ValueError(f"window too small to express {nm}")
    images = {
        "k1": g("gam") * g("k2inv"),
        "k1inv": g("k2") * g("gaminv"),
        "k2": g("k2"),
        "k2inv": g("k2inv"),
        "e1": g("xp(0)"),
        "f1": g("xm(0)"),
        "f2": -(g("k2") * g("xp(-1)")),
        "e2": -(g("xm(1)") * g("k2inv")),
    }
    return GenImageMap("Xi", uq, drinfeld, images, "hom", "id", basis)


def omega_drinfeld(drinfeld, basis=None) -> GenImageMap:
    """Bar antiautomorphism on the mode algebra."""
    g = drinfeld.alphabet.gen
    images = {"gam": g("gaminv"), "gaminv": g("gam"),
              "k2": g("k2inv"), "k2inv": g("k2")}
    for nm in drinfeld.alphabet.names:
        if nm.startswith("xp("):
            images[nm] = g(f"xm({-int(nm[3:-1])})")
        elif nm.startswith("xm("):
            images[nm] = g(f"xp({-int(nm[2:-1])})")
        elif nm.startswith("a("):
            images[nm] = g(f"a({-int(nm[2:-1])})")
    return GenImageMap("OmegaD", drinfeld, drinfeld, images, "anti", "bar",
                       basis)
