"""Laurent polynomials in z, rational functions in s = q^(1/2), and exact
values in Q(sqrt q).

No floating point is used anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping


class LaurentZ:
    """Integer Laurent polynomial in ``z``; immutable."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {e: int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentZ":
        return cls({e: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __add__(self, other: "LaurentZ") -> "LaurentZ":
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentZ(out)

    def __mul__(self, other: "LaurentZ") -> "LaurentZ":
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentZ(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentZ) and self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"LaurentZ({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            if e == 0:
                mono = str(abs(c))
            else:
                z = "z" if e == 1 else f"z^{e}"
                mono = z if abs(c) == 1 else f"{abs(c)}*{z}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {m}" for s, m in parts[1:])


# --- dense polynomials over Q in s (coefficient lists, constant term first)

Poly = tuple[Fraction, ...]


def _trim(a: Iterable) -> Poly:
    a = [Fraction(x) for x in a]
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lb
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1])


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    return tuple(x / a[-1] for x in a)


def _shift(a: Poly, k: int) -> Poly:
    return _trim((Fraction(0),) * k + tuple(a)) if a else ()


class RationalFunctionS:
    """Exact rational function in ``s`` (where ``s**2 == q``).

    Canonical form: gcd-reduced, monic denominator.  Equality is therefore
    syntactic equality of the stored coefficient tuples.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable = (), den: Iterable = (1,)):
        n, d = _trim(num), _trim(den)
        if not d:
            raise ZeroDivisionError("zero denominator")
        if not n:
            self.num, self.den = (), (Fraction(1),)
            return
        g = _pgcd(n, d)
        if len(g) > 1:
            n = _pdivmod(n, g)[0]
            d = _pdivmod(d, g)[0]
        lead = d[-1]
        self.num = tuple(x / lead for x in n)
        self.den = tuple(x / lead for x in d)

    @classmethod
    def const(cls, c) -> "RationalFunctionS":
        return cls((c,))

    @classmethod
    def s_power(cls, e: int) -> "RationalFunctionS":
        if e >= 0:
            return cls(_shift((Fraction(1),), e))
        return cls((1,), _shift((Fraction(1),), -e))

    @classmethod
    def from_q_poly(cls, coeffs: Iterable) -> "RationalFunctionS":
        """Polynomial in q = s^2, coefficients constant term first."""
        return cls(_q_to_s(coeffs))

    def __add__(self, other) -> "RationalFunctionS":
        other = _coerce(other)
        return RationalFunctionS(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunctionS":
        return RationalFunctionS(_pneg(self.num), self.den)

    def __sub__(self, other) -> "RationalFunctionS":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RationalFunctionS":
        return _coerce(other) - self

    def __mul__(self, other) -> "RationalFunctionS":
        other = _coerce(other)
        return RationalFunctionS(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunctionS":
        other = _coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunctionS(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other) -> "RationalFunctionS":
        return _coerce(other) / self

    def __pow__(self, e: int) -> "RationalFunctionS":
        if e < 0:
            return RationalFunctionS.const(1) / (self ** (-e))
        out = RationalFunctionS.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunctionS.const(other)
        if not isinstance(other, RationalFunctionS):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return not self.num

    def evaluate(self, q: int) -> "QValue":
        """Exact value at ``s = sqrt(q)``."""
        return _peval(self.num, q) / _peval(self.den, q)

    def __repr__(self) -> str:
        return f"RationalFunctionS({self})"

    def __str__(self) -> str:
        n = _pstr(self.num)
        if self.den == (Fraction(1),):
            return n
        return f"({n})/({_pstr(self.den)})"


def _q_to_s(coeffs: Iterable) -> list:
    out: list = []
    for i, c in enumerate(coeffs):
        if i:
            out.append(0)
        out.append(c)
    return out


def _coerce(x) -> RationalFunctionS:
    if isinstance(x, RationalFunctionS):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunctionS.const(x)
    raise TypeError(f"cannot combine RationalFunctionS with {type(x).__name__}")


def _pstr(a: Poly) -> str:
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            mono = str(mag)
        else:
            s = "s" if e == 1 else f"s^{e}"
            mono = s if mag == 1 else f"{mag}*{s}"
        parts.append(("-" if c < 0 else "+", mono))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {sg} {m}" for sg, m in parts[1:])


def eval_laurent_at_z(p: LaurentZ) -> RationalFunctionS:
    """Substitute ``z = s - 1/s``."""
    z = RationalFunctionS((-1, 0, 1), (0, 1))
    out = RationalFunctionS.const(0)
    for e, c in p.coeffs.items():
        out = out + RationalFunctionS.const(c) * z**e
    return out


def color_normalizer(n: int) -> RationalFunctionS:
    """c_n = s^(n(n-1)/2) * prod_{i=1..n} (s^i - s^-i) / (s - s^-1)."""
    out = RationalFunctionS.s_power(n * (n - 1) // 2)
    base = RationalFunctionS.s_power(1) - RationalFunctionS.s_power(-1)
    for i in range(1, n + 1):
        out = out * (RationalFunctionS.s_power(i) - RationalFunctionS.s_power(-i)) / base
    return out


class QValue:
    """Exact element ``a + b*sqrt(q)`` of Q(sqrt q), with a, b rational.

    When ``q`` is a perfect square the irrational part is folded into ``a``.
    """

    __slots__ = ("q", "a", "b")

    def __init__(self, q: int, a=0, b=0):
        r = isqrt(q)
        a, b = Fraction(a), Fraction(b)
        if r * r == q:
            a, b = a + b * r, Fraction(0)
        self.q, self.a, self.b = q, a, b

    def _check(self, other) -> "QValue":
        if isinstance(other, (int, Fraction)):
            return QValue(self.q, other)
        if other.q != self.q:
            raise ValueError("mixing values for different q")
        return other

    def __add__(self, other) -> "QValue":
        o = self._check(other)
        return QValue(self.q, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "QValue":
        return QValue(self.q, -self.a, -self.b)

    def __sub__(self, other) -> "QValue":
        return self + (-self._check(other))

    def __mul__(self, other) -> "QValue":
        o = self._check(other)
        return QValue(self.q, self.a * o.a + self.b * o.b * self.q, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QValue":
        o = self._check(other)
        norm = o.a * o.a - o.b * o.b * self.q
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt q)")
        conj = QValue(self.q, o.a / norm, -o.b / norm)
        return self * conj

    def __rtruediv__(self, other) -> "QValue":
        return QValue(self.q, other) / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QValue):
            return NotImplemented
        return (self.q, self.a, self.b) == (other.q, other.a, other.b)

    def __hash__(self) -> int:
        return hash((self.q, self.a, self.b))

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self) -> str:
        return f"QValue(q={self.q}, {self})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        sb = "s" if self.b == 1 else ("-s" if self.b == -1 else f"{self.b}*s")
        if self.a == 0:
            return sb
        return f"{self.a} + {sb}" if self.b > 0 else f"{self.a} - {sb.lstrip('-')}"


def _peval(a: Poly, q: int) -> QValue:
    out = QValue(q)
    for e, c in enumerate(a):
        if c:
            half, odd = divmod(e, 2)
            out = out + (QValue(q, 0, c * q**half) if odd else QValue(q, c * q**half))
    return out


def q_power(q: int, half_exp: int) -> QValue:
    """``q ** (half_exp / 2)`` exactly."""
    return RationalFunctionS.s_power(half_exp).evaluate(q)
