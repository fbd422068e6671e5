"""Exact arithmetic in the rational function field Q(q).

Values are fractions q^shift * num(q) / den(q) with integer-coefficient
polynomials num, den.  The power of q carried in ``shift`` makes Laurent
polynomials (by far the common case) cheap: their denominator is the
constant 1 and no polynomial gcd is ever computed for them.

Canonical form (enforced by the constructor, relied on by hashing):

* num is trimmed at both ends; its low-degree zeros are absorbed into
  ``shift``; the zero element is num == ().
* den has a nonzero constant term and positive leading coefficient.
* gcd(num, den) = 1 as polynomials, and the integer contents of num and
  den are coprime.

Instances are immutable and therefore safe to share between threads.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd as _igcd

__all__ = ["QRat", "ZERO", "ONE", "Q", "qint", "qfact", "bar", "sign_pow"]


def sign_pow(n: int) -> int:
    """(-1)**n as an exact int, valid for negative n as well."""
    return -1 if n % 2 else 1


# ---------------------------------------------------------------------------
# dense integer polynomials as tuples, index == exponent
# ---------------------------------------------------------------------------

def _ptrim(c: list) -> tuple:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def _pneg(a: tuple) -> tuple:
    return tuple(-x for x in a)


@lru_cache(maxsize=1 << 16)
def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if a == (1,):
        return b
    if b == (1,):
        return a
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _pcontent(a: tuple) -> int:
    g = 0
    for x in a:
        g = _igcd(g, abs(x))
        if g == 1:
            return 1
    return g


def _pprimitive(a: tuple) -> tuple:
    c = _pcontent(a)
    if c <= 1:
        return a
    return tuple(x // c for x in a)


def _pprem(a: tuple, b: tuple) -> tuple:
    """Pseudo-remainder of a by b (content is irrelevant to callers)."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        lead = r[-1]
        r = [lb * c for c in r]
        for j, bc in enumerate(b):
            r[dr - db + j] -= lead * bc
        del r[-1]
        while r and r[-1] == 0:
            del r[-1]
    return tuple(r)


@lru_cache(maxsize=1 << 16)
def _pgcd(a: tuple, b: tuple) -> tuple:
    """Primitive positive-leading gcd via the primitive PRS."""
    if not a:
        g = _pprimitive(b)
    elif not b:
        g = _pprimitive(a)
    else:
        a = _pprimitive(a)
        b = _pprimitive(b)
        while b:
            r = _pprem(a, b)
            a, b = b, _pprimitive(r)
        g = a
    if g and g[-1] < 0:
        g = _pneg(g)
    return g


def _pdiv_exact(a: tuple, b: tuple) -> tuple:
    """Exact polynomial quotient a / b; b must divide a."""
    if not a:
        return ()
    if b == (1,):
        return a
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    out = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = r[i + db]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        t = c // lb
        out[i] = t
        if t:
            for j, bc in enumerate(b):
                r[i + j] -= t * bc
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return _ptrim(out)


# ---------------------------------------------------------------------------
# QRat
# ---------------------------------------------------------------------------

class QRat:
    """An element of Q(q) in canonical reduced form."""

    __slots__ = ("shift", "num", "den", "_hash")

    def __init__(self, shift: int, num: tuple, den: tuple, _raw: bool = False):
        if not _raw:
            shift, num, den = _canon(shift, num, den)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", hash((shift, num, den)))

    def __setattr__(self, *_):
        raise AttributeError("QRat is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of_int(n: int) -> "QRat":
        if n == 0:
            return ZERO
        if n == 1:
            return ONE
        return QRat(0, (n,), (1,), _raw=True)

    @staticmethod
    def q_power(k: int) -> "QRat":
        return QRat(k, (1,), (1,), _raw=True)

    @staticmethod
    def fraction(num: tuple, den: tuple, shift: int = 0) -> "QRat":
        return QRat(shift, num, den)

    # -- structure ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_one(self) -> bool:
        return self.shift == 0 and self.num == (1,) and self.den == (1,)

    def is_laurent(self) -> bool:
        return self.den == (1,)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QRat.of_int(other)
        elif not isinstance(other, QRat):
            return NotImplemented
        return (self.shift == other.shift and self.num == other.num
                and self.den == other.den)

    def __hash__(self) -> int:
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "QRat":
        if not self.num:
            return self
        return QRat(self.shift, _pneg(self.num), self.den, _raw=True)

    def __add__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        s = min(self.shift, other.shift)
        if self.den == other.den:
            a = _shift_up(self.num, self.shift - s)
            b = _shift_up(other.num, other.shift - s)
            num = _padd(a, b)
            if not num:
                return ZERO
            if self.den == (1,):
                return QRat(s, num, (1,))
            return QRat(s, num, self.den)
        a = _pmul(_shift_up(self.num, self.shift - s), other.den)
        b = _pmul(_shift_up(other.num, other.shift - s), self.den)
        return QRat(s, _padd(a, b), _pmul(self.den, other.den))

    __radd__ = __add__

    def __sub__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.den == (1,) and other.den == (1,):
            return QRat(self.shift + other.shift,
                        _pmul(self.num, other.num), (1,), _raw=True)
        # cross-cancel before multiplying to keep degrees small
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d2 != (1,):
            g = _pgcd(n1, d2)
            if g != (1,):
                n1 = _pdiv_exact(n1, g)
                d2 = _pdiv_exact(d2, g)
        if d1 != (1,):
            g = _pgcd(n2, d1)
            if g != (1,):
                n2 = _pdiv_exact(n2, g)
                d1 = _pdiv_exact(d1, g)
        return QRat(self.shift + other.shift, _pmul(n1, n2), _pmul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QRat(-self.shift, self.den, self.num)

    def __truediv__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "QRat":
        if k == 0:
            return ONE
        base = self if k > 0 else self.inverse()
        k = abs(k)
        out = base
        for _ in range(k - 1):
            out = out * base
        return out

    # -- the bar involution q -> 1/q ---------------------------------------

    def bar(self) -> "QRat":
        if not self.num:
            return self
        num = tuple(reversed(self.num))
        den = tuple(reversed(self.den))
        shift = -self.shift - (len(self.num) - 1) + (len(self.den) - 1)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return QRat(shift, num, den, _raw=True)

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if not self.num:
            return "0"
        ns = _laurent_str(self.shift, self.num)
        if self.den == (1,):
            return ns
        if sum(1 for c in self.num if c) > 1:
            ns = f"({ns})"
        ds = _laurent_str(0, self.den)
        if len(self.den) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"QRat({self})"


def _coerce(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, int):
        return QRat.of_int(x)
    return NotImplemented


def _shift_up(num: tuple, k: int) -> tuple:
    if k == 0:
        return num
    return (0,) * k + num


def _canon(shift: int, num: tuple, den: tuple):
    num = _ptrim(list(num))
    den = _ptrim(list(den))
    if not den:
        raise ZeroDivisionError("zero denominator in Q(q)")
    if not num:
        return 0, (), (1,)
    i = 0
    while num[i] == 0:
        i += 1
    if i:
        shift += i
        num = num[i:]
    j = 0
    while den[j] == 0:
        j += 1
    if j:
        shift -= j
        den = den[j:]
    if den != (1,):
        g = _pgcd(num, den)
        if g != (1,):
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        c = _igcd(_pcontent(num), _pcontent(den))
        if c > 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
    return shift, num, den


def _laurent_str(shift: int, num: tuple) -> str:
    parts = []
    for i in range(len(num) - 1, -1, -1):
        c = num[i]
        if not c:
            continue
        e = i + shift
        if e == 0:
            t = str(abs(c))
        else:
            qe = "q" if e == 1 else f"q^{e}"
            t = qe if abs(c) == 1 else f"{abs(c)}*{qe}"
        if not parts:
            parts.append(t if c > 0 else f"-{t}")
        else:
            parts.append(f" + {t}" if c > 0 else f" - {t}")
    return "".join(parts)


ZERO = QRat(0, (), (1,), _raw=True)
ONE = QRat(0, (1,), (1,), _raw=True)
Q = QRat.q_power(1)


# ---------------------------------------------------------------------------
# q-combinatorics
# ---------------------------------------------------------------------------

def qint(n: int) -> QRat:
    """The q-integer [n] = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial."""
    if n < 0:
        raise ValueError("q-integer index must be nonnegative")
    if n == 0:
        return ZERO
    num = [0] * (2 * n - 1)
    for j in range(n):
        num[2 * j] = 1
    return QRat(-(n - 1), tuple(num), (1,), _raw=True)


def qfact(n: int) -> QRat:
    """The q-factorial [n]! = [1][2]...[n]; empty product for n = 0."""
    if n < 0:
        raise ValueError("q-factorial index must be nonnegative")
    out = ONE
    for j in range(2, n + 1):
        out = out * qint(j)
    return out


def bar(x: QRat) -> QRat:
    """Substitute q -> 1/q and re-canonicalize."""
    return x.bar()
