import pytest
from hypothesis import given, settings, strategies as st

from qav.scalars import QRat, ONE, Q
from qav.freealg import (Alphabet, AlphabetMismatch, NCPoly, tensor,
                         tensor_contract, tensor_split)


@pytest.fixture(scope="module")
def abc():
    return Alphabet(["a", "b", "c"])


def test_alphabet_precedence_is_construction_order(abc):
    assert abc.word("a", "b", "c") == bytes([0, 1, 2])
    assert abc.id("c") == 2


def test_word_concatenation(abc):
    e, f = abc.gen("a"), abc.gen("b")
    p = e * f
    assert p.terms == {abc.word("a", "b"): ONE}


def test_unit_law(abc):
    p = abc.gen("a") + abc.gen("b")
    assert p * abc.one() == p
    assert abc.one() * p == p


def test_distribution_by_hand(abc):
    a, b = abc.gen("a"), abc.gen("b")
    p = a * b - (Q ** -2) * (b * a)
    r = p * a
    expect = abc.poly((ONE, "a", "b", "a"), (-(Q ** -2), "b", "a", "a"))
    assert r == expect


def test_alphabet_mismatch_rejected(abc):
    other = Alphabet(["x", "y"])
    with pytest.raises(AlphabetMismatch):
        abc.gen("a") * other.gen("x")


def words(alph):
    ids = st.integers(0, len(alph) - 1)
    return st.lists(ids, max_size=4).map(bytes)


def polys(alph):
    coeffs = st.integers(-3, 3).map(QRat.of_int)
    return st.dictionaries(words(alph), coeffs, max_size=4).map(
        lambda d: NCPoly(alph, {w: c for w, c in d.items() if c}))


class TestRandomizedLaws:
    alph = Alphabet(["a", "b", "c"])

    @given(polys(alph), polys(alph), polys(alph))
    @settings(max_examples=120, deadline=None)
    def test_associativity_and_distributivity(self, p, r, s):
        assert (p * r) * s == p * (r * s)
        assert p * (r + s) == p * r + p * s
        assert (p + r) * s == p * s + r * s

    @given(polys(alph))
    @settings(max_examples=60, deadline=None)
    def test_zero_pruning(self, p):
        assert all(c for c in (p - p).terms.values())
        assert not (p - p)


class TestTensor:
    base = Alphabet(["e1", "k1"])
    sq = base.tensor_power(2)

    def test_unit(self):
        one = tensor(self.base.one(), self.base.one(), self.sq)
        assert one == self.sq.one()

    def test_coproduct_shape(self):
        e1, k1 = self.base.gen("e1"), self.base.gen("k1")
        d = tensor(e1, self.base.one(), self.sq) + tensor(k1, e1, self.sq)
        assert d == self.sq.poly((1, "e1"), (1, "k1", "e1'"))

    def test_product_law(self):
        e1, k1 = self.base.gen("e1"), self.base.gen("k1")
        f1 = self.base.gen("k1")  # stand-in second letter
        lhs = tensor(e1, f1, self.sq) * tensor(k1, self.base.one(), self.sq)
        rhs = tensor(e1 * k1, f1, self.sq)
        assert lhs == rhs

    def test_cross_letters_commute(self):
        e1 = tensor(self.base.gen("e1"), self.base.one(), self.sq)
        e1p = tensor(self.base.one(), self.base.gen("e1"), self.sq)
        assert e1p * e1 == e1 * e1p

    @given(polys(base), polys(base), polys(base), polys(base))
    @settings(max_examples=60, deadline=None)
    def test_tensor_is_multiplicative(self, p1, p2, r1, r2):
        lhs = tensor(p1 * p2, r1 * r2, self.sq)
        rhs = tensor(p1, r1, self.sq) * tensor(p2, r2, self.sq)
        assert lhs == rhs

    def test_split_and_contract(self):
        e1, k1 = self.base.gen("e1"), self.base.gen("k1")
        tp = tensor(e1 * k1, k1, self.sq)
        (w, c), = tp.terms.items()
        u, v = tensor_split(w, self.base)
        assert u == self.base.word("e1", "k1")
        assert v == self.base.word("k1")
        assert tensor_contract(tp, self.base) == e1 * k1 * k1


class TestText:
    def test_round_readable(self):
        alph = Alphabet(["f1", "k1", "k1inv", "e1"],
                        display={"k1inv": "k1^-1"},
                        inverse_pairs=[("k1", "k1inv")])
        p = alph.poly((1, "f1", "e1")) + alph.gen("k1inv").scale(
            (Q - Q ** -1).inverse())
        assert str(p) == "f1*e1 + (q/(q^2 - 1))*k1^-1"

    def test_power_compression(self):
        alph = Alphabet(["e1", "e2"])
        p = alph.poly((1, "e2", "e1", "e1", "e1"))
        assert str(p) == "e2*e1^3"
