"""Free associative algebra over Q(q) on a finite generator alphabet.

Words are ``bytes`` of generator ids; the id order *is* the precedence
used by the degree-lexicographic monomial order, so leading-term queries
reduce to ``max()`` over ``(len(word), word)`` keys.  Polynomials are
zero-pruned ``{word: QRat}`` maps and are treated as immutable values.

An alphabet may be partitioned into commuting blocks (tensor factors).
Letters from different blocks commute; products canonicalize words by a
stable sort on the block index, so every letter of factor 0 ends up to
the left of every letter of factor 1.  Ordinary alphabets have a single
block and the sort is skipped.
"""

from __future__ import annotations

from .scalars import QRat, ZERO, ONE

__all__ = ["Alphabet", "NCPoly", "AlphabetMismatch", "tensor", "tensor_split",
           "tensor_contract"]


class AlphabetMismatch(ValueError):
    pass


class Alphabet:
    """Ordered alphabet; construction order is ascending precedence.

    Letters may carry order weights (default 1).  The induced monomial
    order compares (total weight, length, letters) and is multiplicative
    and well founded for nonnegative weights.
    """

    __slots__ = ("names", "display", "index", "inverse", "blocks",
                 "mixed_blocks", "paren_names", "weights", "uniform", "key")

    def __init__(self, names, display=None, inverse_pairs=(), blocks=None,
                 weights=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        if len(names) > 255:
            raise ValueError("alphabet too large for byte-packed words")
        self.names = names
        self.display = tuple((display or {}).get(n, n) for n in names)
        self.index = {n: i for i, n in enumerate(names)}
        for i, d in enumerate(self.display):
            self.index.setdefault(d, i)
        self.inverse = {}
        for a, b in inverse_pairs:
            ia, ib = self.index[a], self.index[b]
            self.inverse[ia] = ib
            self.inverse[ib] = ia
        self.blocks = tuple(blocks) if blocks is not None else (0,) * len(names)
        self.mixed_blocks = len(set(self.blocks)) > 1
        # names like "xp" that the expression parser must read as xp(<int>)
        self.paren_names = {n.split("(")[0] for n in names if "(" in n}
        if weights is None:
            self.weights = (1,) * len(names)
        else:
            self.weights = tuple(weights)
            if len(self.weights) != len(names) or min(self.weights) < 0:
                raise ValueError("need one nonnegative weight per letter")
        self.uniform = all(w == 1 for w in self.weights)
        self.key = (names, self.blocks, self.weights)

    def word_weight(self, w: bytes) -> int:
        if self.uniform:
            return len(w)
        weights = self.weights
        return sum(weights[i] for i in w)

    def order_key(self, w: bytes):
        if self.uniform:
            return (len(w), len(w), w)
        return (self.word_weight(w), len(w), w)

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def id(self, name: str) -> int:
        return self.index[name]

    def word(self, *names: str) -> bytes:
        return bytes(self.index[n] for n in names)

    def gen(self, name: str) -> "NCPoly":
        return NCPoly(self, {bytes([self.index[name]]): ONE})

    def one(self) -> "NCPoly":
        return NCPoly(self, {b"": ONE})

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def poly(self, *terms) -> "NCPoly":
        """Build from (coeff, name, name, ...) tuples."""
        acc = {}
        for coeff, *names in terms:
            if isinstance(coeff, int):
                coeff = QRat.of_int(coeff)
            w = self.word(*names)
            c = acc.get(w, ZERO) + coeff
            if c:
                acc[w] = c
            else:
                acc.pop(w, None)
        return NCPoly(self, acc)

    def block_canon(self, word: bytes) -> bytes:
        blocks = self.blocks
        return bytes(sorted(word, key=blocks.__getitem__))

    def tensor_power(self, k: int) -> "Alphabet":
        """k commuting copies; copy j carries j primes on every name."""
        names, display, blocks, pairs = [], {}, [], []
        for j in range(k):
            p = "'" * j
            for i, n in enumerate(self.names):
                nn = n + p
                names.append(nn)
                display[nn] = self.display[i] + p
                blocks.append(j)
            for a, b in _pairs_of(self.inverse):
                pairs.append((self.names[a] + p, self.names[b] + p))
        return Alphabet(names, display, pairs, blocks)

    def word_str(self, w: bytes) -> str:
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            d = self.display[w[i]]
            parts.append(d if j - i == 1 else f"{d}^{j - i}")
            i = j
        return "*".join(parts)


def _pairs_of(inverse: dict):
    seen = set()
    for a, b in inverse.items():
        if a not in seen and b not in seen:
            seen.update((a, b))
            yield a, b


def deglex_key(word: bytes):
    return (len(word), word)


class NCPoly:
    """Noncommutative polynomial: zero-pruned map word -> QRat."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: dict):
        self.alphabet = alphabet
        self.terms = terms

    # -- queries -------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def lterm(self):
        """Leading (word, coeff) under the order; None for zero."""
        if not self.terms:
            return None
        w = max(self.terms, key=self.alphabet.order_key)
        return w, self.terms[w]

    def sorted_terms(self):
        key = self.alphabet.order_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]),
                      reverse=True)

    def coeff(self, word: bytes) -> QRat:
        return self.terms.get(word, ZERO)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.alphabet.key == other.alphabet.key and self.terms == other.terms

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "NCPoly"):
        if self.alphabet.key != other.alphabet.key:
            raise AlphabetMismatch("operands live on different alphabets")

    def __add__(self, other):
        if isinstance(other, (int, QRat)):
            other = self.alphabet.one() * other
        self._check(other)
        big, small = (self.terms, other.terms)
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for w, c in small.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NCPoly(self.alphabet, out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, QRat)):
            other = self.alphabet.one() * other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: QRat) -> "NCPoly":
        if not c:
            return NCPoly(self.alphabet, {})
        if c.is_one():
            return self
        return NCPoly(self.alphabet, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(QRat.of_int(other))
        if isinstance(other, QRat):
            return self.scale(other)
        self._check(other)
        alph = self.alphabet
        out = {}
        canon = alph.block_canon if alph.mixed_blocks else None
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                if canon is not None:
                    w = canon(w)
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return NCPoly(alph, out)

    def __rmul__(self, other):
        if isinstance(other, (int, QRat)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a noncommutative polynomial")
        out = self.alphabet.one()
        for _ in range(k):
            out = out * self
        return out

    def map_coeffs(self, f) -> "NCPoly":
        out = {}
        for w, c in self.terms.items():
            c = f(c)
            if c:
                out[w] = c
        return NCPoly(self.alphabet, out)

    def reversed_words(self) -> "NCPoly":
        alph = self.alphabet
        canon = alph.block_canon if alph.mixed_blocks else None
        out = {}
        for w, c in self.terms.items():
            rw = w[::-1]
            if canon is not None:
                rw = canon(rw)
            s = out.get(rw)
            s = c if s is None else s + c
            if s:
                out[rw] = s
            else:
                out.pop(rw, None)
        return NCPoly(alph, out)

    # -- text --------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if w and cs == "1":
                body = self.alphabet.word_str(w)
            else:
                if " " in cs:
                    cs = f"({cs})"
                body = cs if not w else f"{cs}*{self.alphabet.word_str(w)}"
            if not parts:
                parts.append(body if not neg else f"-{body}")
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"NCPoly({self})"


# ---------------------------------------------------------------------------
# tensor square helpers
# ---------------------------------------------------------------------------

def tensor(p: NCPoly, r: NCPoly, target: Alphabet) -> NCPoly:
    """p (x) r inside the doubled alphabet, canonical block order."""
    if p.alphabet.key != r.alphabet.key:
        raise AlphabetMismatch("tensor factors live on different alphabets")
    n = len(p.alphabet)
    out = {}
    for w1, c1 in p.terms.items():
        for w2, c2 in r.terms.items():
            w = w1 + bytes(i + n for i in w2)
            c = c1 * c2
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return NCPoly(target, out)


def tensor_split(word: bytes, base: Alphabet, k: int = 2):
    """Split a block-canonical word into per-factor words over ``base``."""
    n = len(base)
    parts = [bytearray() for _ in range(k)]
    for i in word:
        parts[i // n].append(i % n)
    return tuple(bytes(p) for p in parts)


def tensor_contract(tp: NCPoly, base: Alphabet) -> NCPoly:
    """Multiplication map u (x) v -> u*v back into the base alphabet."""
    k = max(tp.alphabet.blocks) + 1 if tp.alphabet.blocks else 1
    out = {}
    for w, c in tp.terms.items():
        parts = tensor_split(w, base, k)
        word = b"".join(parts)
        s = out.get(word)
        s = c if s is None else s + c
        if s:
            out[word] = s
        else:
            out.pop(word, None)
    return NCPoly(base, out)
