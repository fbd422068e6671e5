
import random

import pytest

from qav.freealg import Alphabet, NCPoly, deglex_key
from qav.linalg import LinearSpan
from qav.rewrite import (Membership, ResourceBudgetExceeded, RewriteBasis,
                         complete, verify_local_confluence)
from qav.scalars import Q, QRat, ONE


class Pres:
    """Minimal presentation stub for kernel-level tests."""

    def __init__(self, alphabet, relations, name="toy"):
        self.alphabet = alphabet
        self.relations = relations
        self.name = name
        self.hash = "toy-hash"


@pytest.fixture(scope="module")
def qplane():
    alph = Alphabet(["x", "y"])
    rel = alph.poly((1, "y", "x")) - alph.poly((1, "x", "y")).scale(Q)
    return complete(Pres(alph, [rel]), 4)


@pytest.fixture(scope="module")
def toy3():
    # three q-commuting letters with one inhomogeneous-looking twist:
    #   yx = q xy,  zy = q yz,  zx = xz + y^2   (all degree-2 homogeneous)
    alph = Alphabet(["x", "y", "z"])
    rels = [
        alph.poly((1, "y", "x")) - alph.poly((1, "x", "y")).scale(Q),
        alph.poly((1, "z", "y")) - alph.poly((1, "y", "z")).scale(Q),
        alph.poly((1, "z", "x")) - alph.poly((1, "x", "z"))
        - alph.poly((1, "y", "y")),
    ]
    pres = Pres(alph, rels, name="toy3")
    return pres, complete(pres, 4)


def test_single_relation_no_overlap(qplane):
    assert len(qplane.rules) == 1
    assert qplane.rules[0].lhs == qplane.alphabet.word("y", "x")


def test_reduce_straightens(qplane):
    alph = qplane.alphabet
    p = alph.poly((1, "y", "x", "x"))
    assert qplane.reduce(p) == alph.poly((1, "x", "x", "y")).scale(Q * Q)


def test_inverse_pair_rule():
    alph = Alphabet(["k", "kinv"], inverse_pairs=[("k", "kinv")])
    rels = [alph.poly((1, "kinv", "k")) - 1, alph.poly((1, "k", "kinv")) - 1]
    basis = complete(Pres(alph, rels), 4)
    assert basis.reduce(alph.poly((1, "k", "kinv"))) == alph.one()
    assert basis.reduce(alph.poly((1, "kinv", "k", "k"))) == alph.gen("k")


def test_relations_vanish_in_own_basis(toy3):
    pres, basis = toy3
    for rel in pres.relations:
        assert not basis.reduce(rel)


def test_local_confluence_certificate(toy3):
    _, basis = toy3
    assert verify_local_confluence(basis) == []


def test_completion_is_monotone_in_degree(toy3):
    pres, _ = toy3
    lhs_by_deg = {}
    for d in (2, 3, 4, 5):
        basis = complete(pres, d)
        lhs_by_deg[d] = {r.lhs for r in basis.rules}
    assert lhs_by_deg[2] <= lhs_by_deg[3] <= lhs_by_deg[4] <= lhs_by_deg[5]


def test_completion_is_deterministic(toy3):
    pres, basis = toy3
    again = complete(pres, 4)
    assert again.dumps() == basis.dumps()
    assert again.hash == basis.hash


def random_poly(alph, rng, max_deg=4, max_terms=4):
    letters = range(len(alph))
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = bytes(rng.choice(letters) for _ in range(rng.randint(0, max_deg)))
        c = QRat.of_int(rng.randint(-3, 3))
        if c:
            prev = terms.get(w)
            c = c if prev is None else prev + c
            if c:
                terms[w] = c
            else:
                terms.pop(w, None)
    return NCPoly(alph, terms)


def test_reduce_idempotent_and_linear(toy3):
    _, basis = toy3
    alph = basis.alphabet
    rng = random.Random(7)
    for _ in range(300):
        p = random_poly(alph, rng)
        r = random_poly(alph, rng)
        a = QRat.of_int(rng.randint(-3, 3))
        b = QRat.of_int(rng.randint(-3, 3))
        rp = basis.reduce(p)
        assert basis.reduce(rp) == rp
        lin = basis.reduce(p.scale(a) + r.scale(b))
        assert lin == rp.scale(a) + basis.reduce(r).scale(b)


SPAN_MAXDEG = 4


@pytest.fixture(scope="module")
def span(toy3):
    pres, _ = toy3
    alph = pres.alphabet
    sp = LinearSpan(keyfunc=deglex_key)
    letters = [bytes([i]) for i in range(len(alph))]
    words_by_len = {0: [b""]}
    for n in range(1, SPAN_MAXDEG + 1):
        words_by_len[n] = [w + l for w in words_by_len[n - 1] for l in letters]
    multiples = []
    for rel in pres.relations:
        d = rel.degree()
        for la in range(0, SPAN_MAXDEG - d + 1):
            for lb in range(0, SPAN_MAXDEG - d - la + 1):
                for a in words_by_len[la]:
                    for b in words_by_len[lb]:
                        vec = {a + w + b: c for w, c in rel.terms.items()}
                        sp.add(vec)
                        multiples.append(NCPoly(alph, vec))
    return sp, multiples, words_by_len


class TestBruteForceOracle:
    """Exhaustive span enumeration vs is_member on the 3-letter toy.

    The relations are degree-homogeneous, so the ideal's degree-d slice
    is spanned by the degree-d two-sided multiples of the relations.
    """

    MAXDEG = SPAN_MAXDEG

    def test_multiples_are_members(self, toy3, span):
        _, basis = toy3
        _, multiples, _ = span
        for m in multiples:
            assert basis.is_member(m).is_member

    def test_no_single_word_is_a_member(self, toy3, span):
        _, basis = toy3
        sp, _, words_by_len = span
        for n in range(0, self.MAXDEG + 1):
            for w in words_by_len[n]:
                vec = {w: ONE}
                assert not sp.contains(vec)
                verdict = basis.is_member(NCPoly(basis.alphabet, vec))
                assert verdict.kind == Membership.NOT_MEMBER

    def test_random_agreement(self, toy3, span):
        _, basis = toy3
        sp, multiples, _ = span
        alph = basis.alphabet
        rng = random.Random(11)
        for _ in range(200):
            p = random_poly(alph, rng)
            expected = sp.contains(dict(p.terms))
            got = basis.is_member(p)
            if expected:
                assert got.is_member
            else:
                assert got.kind == Membership.NOT_MEMBER
        for _ in range(100):
            combo = alph.zero()
            for _ in range(rng.randint(1, 3)):
                m = multiples[rng.randrange(len(multiples))]
                a = random_poly(alph, rng, max_deg=1, max_terms=2)
                combo = combo + a.scale(QRat.of_int(rng.randint(-2, 2))) * m
            if combo.degree() <= self.MAXDEG:
                assert basis.is_member(combo).is_member


def test_inconclusive_beyond_completion_degree(toy3):
    _, basis = toy3
    alph = basis.alphabet
    w = alph.poly((1, "x", "x", "x", "x", "x"))
    assert basis.is_member(w).kind == Membership.INCONCLUSIVE


def test_budget_is_an_explicit_error(toy3):
    pres, _ = toy3
    with pytest.raises(ResourceBudgetExceeded):
        complete(pres, 4, max_rules=2)


def test_persistence_round_trip(tmp_path, toy3):
    _, basis = toy3
    path = tmp_path / "toy3.json"
    basis.save(path)
    again = RewriteBasis.load(path)
    assert again.hash == basis.hash
    assert again.dumps() == basis.dumps()
    p = basis.alphabet.poly((1, "z", "y", "x"))
    assert again.reduce(p) == basis.reduce(p)
