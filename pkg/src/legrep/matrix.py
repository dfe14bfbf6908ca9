"""Dense matrices over F_q and exact Gaussian elimination.

A matrix is a tuple of row tuples of field elements (ints).  All functions
take the :class:`~legrep.field.FieldDescriptor` explicitly.
"""

from __future__ import annotations

import itertools
import operator
from functools import lru_cache
from typing import Iterator, Sequence

from .field import FieldDescriptor

Matrix = tuple[tuple[int, ...], ...]


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple((0,) * m for _ in range(n))


@lru_cache(maxsize=None)
def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def scalar(F: FieldDescriptor, c: int, n: int) -> Matrix:
    """``c * I`` for a field element ``c``."""
    return tuple(tuple(c if i == j else 0 for j in range(n)) for i in range(n))


def is_zero(A: Matrix) -> bool:
    return not any(any(r) for r in A)


def add(F: FieldDescriptor, A: Matrix, B: Matrix) -> Matrix:
    if F.d == 1:
        p = F.p
        return tuple(tuple((x + y) % p for x, y in zip(ra, rb)) for ra, rb in zip(A, B))
    return tuple(tuple(F.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def neg(F: FieldDescriptor, A: Matrix) -> Matrix:
    return tuple(tuple(F.neg(x) for x in r) for r in A)


def sub(F: FieldDescriptor, A: Matrix, B: Matrix) -> Matrix:
    return add(F, A, neg(F, B))


def scale(F: FieldDescriptor, c: int, A: Matrix) -> Matrix:
    return tuple(tuple(F.mul(c, x) for x in r) for r in A)


def mul(F: FieldDescriptor, A: Matrix, B: Matrix) -> Matrix:
    cols = tuple(zip(*B))
    if F.d == 1:
        p = F.p
        m = operator.mul
        return tuple(tuple(sum(map(m, r, c)) % p for c in cols) for r in A)
    if F._mul:
        add_t, mul_t = F._add, F._mul
        out = []
        for r in A:
            row = []
            for c in cols:
                s = 0
                for x, y in zip(r, c):
                    if x and y:
                        s = add_t[s][mul_t[x][y]]
                row.append(s)
            out.append(tuple(row))
        return tuple(out)
    out = []
    for r in A:
        row = []
        for c in cols:
            s = 0
            for x, y in zip(r, c):
                if x and y:
                    s = F.add(s, F.mul(x, y))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mul_chain(F: FieldDescriptor, mats: Sequence[Matrix], n: int) -> Matrix:
    out = identity(n)
    for M in mats:
        out = mul(F, out, M)
    return out


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def row_reduce(F: FieldDescriptor, rows: list[list[int]], ncols: int) -> list[int]:
    """Reduced row echelon form in place; returns pivot columns."""
    if F.d == 1:
        return _row_reduce_prime(F.p, rows, ncols)
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = F.neg(rows[i][c])
                rows[i] = [F.add(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _row_reduce_prime(p: int, rows: list[list[int]], ncols: int) -> list[int]:
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        pr = rows[r] = [inv * x % p for x in rows[r]]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(F: FieldDescriptor, A: Sequence[Sequence[int]]) -> int:
    rows = [list(r) for r in A]
    if not rows:
        return 0
    return len(row_reduce(F, rows, len(rows[0])))


def inverse(F: FieldDescriptor, A: Matrix) -> Matrix | None:
    """Inverse of a square matrix, or ``None`` when singular."""
    n = len(A)
    rows = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(A)]
    piv = row_reduce(F, rows, n)
    if len(piv) < n:
        return None
    return tuple(tuple(r[n:]) for r in rows)


def is_invertible(F: FieldDescriptor, A: Matrix) -> bool:
    return rank(F, A) == len(A)


def det(F: FieldDescriptor, A: Matrix) -> int:
    n = len(A)
    rows = [list(r) for r in A]
    d = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = F.neg(d)
        d = F.mul(d, rows[c][c])
        inv = F.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                f = F.neg(F.mul(rows[i][c], inv))
                rows[i] = [F.add(x, F.mul(f, y)) for x, y in zip(rows[i], rows[c])]
    return d


def solve_affine(
    F: FieldDescriptor, A: Sequence[Sequence[int]], b: Sequence[int], ncols: int
) -> tuple[list[int], list[list[int]]] | None:
    """Solve ``A x = b``.

    Returns ``(particular, kernel_basis)`` or ``None`` if inconsistent.
    """
    rows = [list(r) + [bi] for r, bi in zip(A, b)]
    piv = row_reduce(F, rows, ncols)
    for r in rows[len(piv):]:
        if r[ncols]:
            return None
    x = [0] * ncols
    for i, c in enumerate(piv):
        x[c] = rows[i][ncols]
    free = [c for c in range(ncols) if c not in set(piv)]
    kernel = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = F.neg(rows[i][f])
        kernel.append(v)
    return x, kernel


def nullspace(F: FieldDescriptor, A: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    if not A:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    res = solve_affine(F, A, [0] * len(A), ncols)
    assert res is not None
    return res[1]


def span_elements(
    F: FieldDescriptor, base: Sequence[int], basis: Sequence[Sequence[int]]
) -> Iterator[list[int]]:
    """Every vector ``base + sum c_i basis_i`` (q^len(basis) of them)."""
    for coeffs in itertools.product(range(F.q), repeat=len(basis)):
        v = list(base)
        for c, b in zip(coeffs, basis):
            if c:
                v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
        yield v


def all_matrices(F: FieldDescriptor, n: int) -> Iterator[Matrix]:
    for flat in itertools.product(range(F.q), repeat=n * n):
        yield tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def general_linear(F: FieldDescriptor, n: int) -> list[Matrix]:
    """All of GL_n(F_q) in lexicographic order of the flattened entries."""
    return [M for M in all_matrices(F, n) if is_invertible(F, M)]


def flatten(A: Matrix) -> tuple[int, ...]:
    return tuple(x for r in A for x in r)


def unflatten(v: Sequence[int], n: int) -> Matrix:
    return tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n))


def power(F: FieldDescriptor, A: Matrix, e: int, inv: Matrix | None = None) -> Matrix:
    n = len(A)
    if e < 0:
        base = inv if inv is not None else inverse(F, A)
        if base is None:
            raise ZeroDivisionError("negative power of a singular matrix")
        e = -e
    else:
        base = A
    out = identity(n)
    for _ in range(e):
        out = mul(F, out, base)
    return out


def trace(F: FieldDescriptor, A: Matrix) -> int:
    s = 0
    for i in range(len(A)):
        s = F.add(s, A[i][i])
    return s


def conjugacy_invariant(F: FieldDescriptor, A: Matrix) -> tuple:
    """A cheap invariant of the conjugacy class (equal for conjugate
    matrices, possibly equal for non-conjugate ones): trace, determinant and
    the ranks of powers of ``A - c I`` for every scalar ``c``."""
    n = len(A)
    ranks = []
    for c in range(F.q):
        B = sub(F, A, scalar(F, c, n))
        P = B
        rk = []
        for _ in range(n):
            rk.append(rank(F, P))
            P = mul(F, P, B)
        ranks.append(tuple(rk))
    return trace(F, A), det(F, A), tuple(ranks)
