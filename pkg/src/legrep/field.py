"""Finite fields F_q for q = p^d.

Elements are plain ints in ``range(q)``.  For ``d > 1`` the integer's base-p
digits are the coefficients of a polynomial in ``x`` (constant term first),
reduced modulo the field's monic irreducible modulus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

MAX_ORDER = 1 << 16


class FieldError(ValueError):
    pass


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _digits(v: int, p: int, d: int) -> list[int]:
    out = []
    for _ in range(d):
        v, r = divmod(v, p)
        out.append(r)
    return out


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``m`` (coefficient lists, low first)."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _is_irreducible(m: list[int], p: int) -> bool:
    # exhaustive trial division by every monic polynomial of degree 1..deg/2
    d = len(m) - 1
    for k in range(1, d // 2 + 1):
        for low in range(p**k):
            f = _digits(low, p, k) + [1]
            if not any(_poly_mod(m, f, p)):
                return False
    return True


def smallest_irreducible(p: int, d: int) -> list[int]:
    """Monic irreducible of degree ``d`` over F_p whose lower coefficients,
    read as a base-p integer, are smallest."""
    for low in range(p**d):
        m = _digits(low, p, d) + [1]
        if m[0] == 0 and d > 1:
            continue
        if _is_irreducible(m, p):
            return m
    raise FieldError(f"no irreducible polynomial of degree {d} over F_{p}")


@dataclass(frozen=True)
class FieldDescriptor:
    p: int
    d: int
    modulus: tuple[int, ...]
    q: int
    _add: tuple = field(repr=False, compare=False, default=())
    _neg: tuple = field(repr=False, compare=False, default=())
    _exp: tuple = field(repr=False, compare=False, default=())
    _log: tuple = field(repr=False, compare=False, default=())
    _mul: tuple = field(repr=False, compare=False, default=())

    @property
    def is_prime(self) -> bool:
        return self.d == 1

    def add(self, a: int, b: int) -> int:
        if self.d == 1:
            return (a + b) % self.p
        if self._add:
            return self._add[a][b]
        return self._digit_add(a, b)

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.d == 1:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.d == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in a field")
        if self.d == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def from_int(self, k: int) -> int:
        """Image of the integer ``k`` under Z -> F_q."""
        return k % self.p

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def __str__(self) -> str:
        return f"F_{self.q}"


def _mul_poly_elems(a: int, b: int, p: int, d: int, m: list[int]) -> int:
    da, db = _digits(a, p, d), _digits(b, p, d)
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    r = _poly_mod(prod, m, p)
    return sum(c * p**i for i, c in enumerate(r))


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldDescriptor:
    """Return the field of order ``q`` (deterministic encoding)."""
    if q < 2 or q > MAX_ORDER:
        raise FieldError(f"field order {q} outside supported range 2..{MAX_ORDER}")
    fac = factorize(q)
    if len(fac) != 1:
        pretty = " * ".join(f"{b}^{e}" if e > 1 else str(b) for b, e in sorted(fac.items()))
        raise FieldError(f"{q} is not a prime power ({q} = {pretty})")
    ((p, d),) = fac.items()
    if d == 1:
        return FieldDescriptor(p=p, d=1, modulus=(0, 1), q=q)
    m = smallest_irreducible(p, d)
    # discrete log tables from a primitive element
    for g in range(2, q):
        exp = [1]
        x = 1
        for _ in range(q - 2):
            x = _mul_poly_elems(x, g, p, d, m)
            if x == 1:
                break
            exp.append(x)
        if len(exp) == q - 1:
            break
    else:  # pragma: no cover - multiplicative group is cyclic
        raise FieldError("no primitive element found")
    log = [0] * q
    for i, v in enumerate(exp):
        log[v] = i
    exp2 = tuple(exp + exp)
    tmp = FieldDescriptor(p=p, d=d, modulus=tuple(m), q=q)
    neg = tuple(
        sum(((-c) % p) * p**i for i, c in enumerate(_digits(a, p, d))) for a in range(q)
    )
    add: tuple = ()
    mul: tuple = ()
    if q <= 256:
        add = tuple(tuple(tmp._digit_add(a, b) for b in range(q)) for a in range(q))
        mul = tuple(
            tuple(exp2[log[a] + log[b]] if a and b else 0 for b in range(q)) for a in range(q)
        )
    return FieldDescriptor(
        p=p, d=d, modulus=tuple(m), q=q, _add=add, _neg=neg, _exp=exp2, _log=tuple(log), _mul=mul
    )


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = prod_{i<n} (q^n - q^i)."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out
