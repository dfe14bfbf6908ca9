"""The n-dimensional representation category: Hom complexes, A-infinity
operations and the homotopy cardinality.

``Hom(rho1, rho2)`` is spanned over Mat_n(F_q) by ``y^`` (grading 0), ``x^``
(grading 1) and ``a^`` for each chord ``a`` (grading |a| + 1).

``m_k(alpha_1, ..., alpha_k)`` takes ``alpha_j`` in ``Hom(rho_{k+1-j},
rho_{k+2-j})`` and returns an element of ``Hom(rho_1, rho_{k+1})``.  It is
read off the (k+1)-copy differential twisted by the pure representation
``(rho_1, ..., rho_{k+1})``: in every matrix-valued generator the diagonal
entries are replaced by the representations, the entry (u, u+1) by the
coefficient that the argument for the copy pair (u, u+1) puts on the matching
dual generator, and all other entries by 0.  The (1, k+1) block of the
resulting block matrix is then exactly the sum over words with one mixed
letter per consecutive copy pair, in increasing order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import matrix as mx
from . import ncpoly
from .dga import CEDGA, grading_census
from .field import FieldDescriptor, gl_order
from .laurent import QValue, q_power
from .matrix import Matrix
from .reps import (
    Representation, _derivation, _Evaluator, enumerate_orbits, equivalence_classes, orbit_classes,
)


# --- Hom elements ----------------------------------------------------------


def hom_generators(g: CEDGA) -> list[tuple[str, int]]:
    """Dual generators with their gradings, in basis order."""
    return [("y", 0), ("x", 1)] + [(a.name, a.grading + 1) for a in g.generators]


@dataclass(frozen=True)
class HomElement:
    coeffs: tuple[tuple[str, Matrix], ...]  # nonzero coefficients only

    @classmethod
    def make(cls, items: Mapping[str, Matrix] | Sequence[tuple[str, Matrix]]) -> "HomElement":
        pairs = items.items() if isinstance(items, Mapping) else items
        return cls(tuple(sorted((k, v) for k, v in pairs if not mx.is_zero(v))))

    def __getitem__(self, gen: str) -> Matrix | None:
        for k, v in self.coeffs:
            if k == gen:
                return v
        return None

    def coeff(self, gen: str, n: int) -> Matrix:
        v = self[gen]
        return mx.zeros(n) if v is None else v

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[str]:
        return [k for k, _ in self.coeffs]

    def gradings(self, g: CEDGA) -> set[int]:
        gr = dict(hom_generators(g))
        return {gr[k] for k in self.support()}

    def add(self, F: FieldDescriptor, other: "HomElement") -> "HomElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs:
            out[k] = mx.add(F, out[k], v) if k in out else v
        return HomElement.make(out)

    def scale(self, F: FieldDescriptor, c: int) -> "HomElement":
        return HomElement.make({k: mx.scale(F, c, v) for k, v in self.coeffs})

    def right_mul(self, F: FieldDescriptor, M: Matrix) -> "HomElement":
        return HomElement.make({k: mx.mul(F, v, M) for k, v in self.coeffs})

    def homogeneous_parts(self, g: CEDGA) -> dict[int, "HomElement"]:
        gr = dict(hom_generators(g))
        parts: dict[int, dict] = {}
        for k, v in self.coeffs:
            parts.setdefault(gr[k], {})[k] = v
        return {d: HomElement.make(p) for d, p in parts.items()}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{[list(r) for r in v]}*{k}^" for k, v in self.coeffs)


ZERO = HomElement(())


def unit(F: FieldDescriptor, n: int) -> HomElement:
    """The strict unit -y^."""
    return HomElement.make({"y": mx.scalar(F, F.neg(1), n)})


def _sign(gradings: Sequence[int]) -> int:
    k = len(gradings)
    s = k * (k - 1) // 2
    for p in range(k):
        for q in range(p + 1, k):
            s += gradings[p] * gradings[q]
    s += sum(gradings[1::2])  # |alpha_2| + |alpha_4| + ...
    return -1 if s % 2 else 1


# --- block evaluation of the twisted (k+1)-copy ----------------------------


class _Blocks:
    """Block matrices for one pure representation and one argument list."""

    def __init__(self, g: CEDGA, chain: Sequence[Representation], coeffs: Sequence[HomElement]):
        self.g = g
        self.F = F = chain[0].field
        self.n = n = chain[0].n
        self.K = K = len(chain)
        self.N = K * n
        # coefficient maps per copy pair u = (u, u+1), 0-based; pair u gets
        # argument number K-1-u (0-based)
        self.pair = [coeffs[K - 2 - u] for u in range(K - 1)]
        self.chain = chain
        self._cache: dict = {}
        rho_t = [r.t for r in chain]
        self.Delta = self._assemble(rho_t, [None] * (K - 1))
        self.X = self._assemble([mx.identity(n)] * K, [p["x"] for p in self.pair])
        self.Y = self._assemble([mx.zeros(n)] * K, [p["y"] for p in self.pair])
        self.DX = mx.mul(F, self.Delta, self.X)
        Dinv = mx.inverse(F, self.Delta)
        Xinv = mx.inverse(F, self.X)
        self.Dinv = Dinv
        self.DXinv = mx.mul(F, Xinv, Dinv)

    def _assemble(self, diag: Sequence[Matrix | None], sup: Sequence[Matrix | None]) -> Matrix:
        n, N = self.n, self.N
        rows = [[0] * N for _ in range(N)]
        for u, D in enumerate(diag):
            if D is not None:
                for r in range(n):
                    rows[u * n + r][u * n:(u + 1) * n] = D[r]
        for u, S in enumerate(sup):
            if S is not None:
                for r in range(n):
                    rows[u * n + r][(u + 1) * n:(u + 2) * n] = S[r]
        return tuple(tuple(r) for r in rows)

    def chord(self, a: str) -> Matrix:
        if a not in self._cache:
            self._cache[a] = self._assemble(
                [r[a] for r in self.chain], [p[a] for p in self.pair]
            )
        return self._cache[a]

    def letter(self, x) -> Matrix:
        if ncpoly.is_t(x):
            key = ("t", x[2])
            if key not in self._cache:
                base = self.DX if x[2] > 0 else self.DXinv
                self._cache[key] = mx.power(self.F, base, abs(x[2]))
            return self._cache[key]
        return self.chord(x)

    def poly(self, p: Mapping) -> Matrix:
        F = self.F
        out = mx.zeros(self.N)
        for w, c in p.items():
            cc = F.from_int(c)
            if not cc:
                continue
            m = None
            for x in w:
                L = self.letter(x)
                m = L if m is None else mx.mul(F, m, L)
                if mx.is_zero(m):
                    break
            if m is None:
                m = mx.identity(self.N)
            out = mx.add(F, out, mx.scale(F, cc, m))
        return out

    def corner(self, B: Matrix) -> Matrix:
        n, K = self.n, self.K
        return tuple(tuple(B[r][(K - 1) * n:K * n]) for r in range(n))

    def output(self, gen: str) -> Matrix:
        F = self.F
        if gen == "y":
            B = mx.mul(F, self.Y, self.Y)
        elif gen == "x":
            B = mx.sub(
                F,
                mx.mul_chain(F, [self.Dinv, self.Y, self.DX], self.N),
                mx.mul(F, self.X, self.Y),
            )
        else:
            A = self.chord(gen)
            B = mx.add(F, self.poly(self.g.differential[gen]), mx.mul(F, self.Y, A))
            AY = mx.mul(F, A, self.Y)
            B = mx.add(F, B, AY) if self.g.degree[gen] % 2 else mx.sub(F, B, AY)
        return self.corner(B)


class _PairCoeffs:
    """Coefficient lookup for one argument, zero where absent."""

    def __init__(self, elem: HomElement, n: int):
        self.d = dict(elem.coeffs)
        self.n = n

    def __getitem__(self, gen: str) -> Matrix | None:
        return self.d.get(gen)


def a_infinity_op(
    g: CEDGA,
    chain: Sequence[Representation],
    args: Sequence[HomElement],
) -> HomElement:
    """m_k(args) with ``args[j-1]`` in Hom(chain[k-j], chain[k+1-j])."""
    k = len(args)
    if len(chain) != k + 1:
        raise ValueError("a chain of k+1 representations is needed for m_k")
    q, n = chain[0].q, chain[0].n
    if any(r.q != q or r.n != n for r in chain):
        raise ValueError("representations in the chain must share n and q")
    F = chain[0].field
    gens = hom_generators(g)
    total: dict[str, Matrix] = {}
    parts = [sorted(a.homogeneous_parts(g).items()) for a in args]
    for combo in itertools.product(*parts):
        degs = [d for d, _ in combo]
        target = sum(degs) + 2 - k
        blocks = _Blocks(g, chain, [_PairCoeffs(e, n) for _, e in combo])
        sgn = _sign(degs)
        for gen, d in gens:
            if d != target:
                continue
            v = blocks.output(gen)
            if mx.is_zero(v):
                continue
            if sgn < 0:
                v = mx.neg(F, v)
            total[gen] = mx.add(F, total[gen], v) if gen in total else v
    return HomElement.make(total)


def m1(g: CEDGA, rho1: Representation, rho2: Representation, alpha: HomElement) -> HomElement:
    return a_infinity_op(g, [rho1, rho2], [alpha])


def m2(g: CEDGA, chain: Sequence[Representation], alpha: HomElement, beta: HomElement) -> HomElement:
    """m_2(alpha, beta) for beta in Hom(chain[0], chain[1]) and alpha in
    Hom(chain[1], chain[2])."""
    return a_infinity_op(g, chain, [alpha, beta])


def stasheff_sum(g: CEDGA, chain: Sequence[Representation], args: Sequence[HomElement]) -> HomElement:
    """Left side of the A-infinity relation of arity k = len(args):
    sum over r + s + t = k of (-1)^(r + s*t + s*(|a_1| + ... + |a_r|))
    m_(r+1+t)(a_1, ..., a_r, m_s(a_(r+1), ..., a_(r+s)), ..., a_k).
    Arguments must be homogeneous."""
    k = len(args)
    F = chain[0].field
    degs = []
    for a in args:
        gr = a.gradings(g)
        if len(gr) > 1:
            raise ValueError("stasheff_sum needs homogeneous arguments")
        degs.append(gr.pop() if gr else 0)
    total = ZERO
    for s in range(1, k + 1):
        for r in range(k - s + 1):
            t = k - r - s
            inner = a_infinity_op(g, chain[k - r - s:k + 1 - r], args[r:r + s])
            outer_chain = list(chain[:k + 1 - r - s]) + list(chain[k - r:])
            val = a_infinity_op(g, outer_chain, list(args[:r]) + [inner] + list(args[r + s:]))
            if (r + s * t + s * sum(degs[:r])) % 2:
                val = val.scale(F, F.neg(1))
            total = total.add(F, val)
    return total


# --- closed forms for m_1 ---------------------------------------------------


def m1_closed_form(g: CEDGA, rho1: Representation, rho2: Representation, alpha: HomElement) -> HomElement:
    """m_1 computed straight from the words of the differential: the y^ part
    by the closed formula, the a^ and x^ parts by inserting the coefficient
    at each occurrence of the letter."""
    F, n = rho1.field, rho1.n
    t1, t2 = rho1.t, rho2.t
    t1i, t2i = mx.inverse(F, t1), mx.inverse(F, t2)
    out: dict[str, Matrix] = {}

    def acc(gen: str, M: Matrix) -> None:
        out[gen] = mx.add(F, out[gen], M) if gen in out else M

    M = alpha["y"]
    if M is not None:
        acc("x", mx.sub(F, mx.mul_chain(F, [t1i, M, t2], n), M))
        for a in g.chords_in_grading(0):
            acc(a, mx.sub(F, mx.mul(F, M, rho2[a]), mx.mul(F, rho1[a], M)))

    def rho_word(rho: Representation, w) -> Matrix:
        out_m = mx.identity(n)
        for x in w:
            if ncpoly.is_t(x):
                out_m = mx.mul(F, out_m, mx.power(F, rho.t, x[2]))
            else:
                out_m = mx.mul(F, out_m, rho[x])
        return out_m

    def t_entry(e: int, Mx: Matrix) -> Matrix:
        # (1,2) entry of (Delta X)^e in the 2-copy
        if e > 0:
            terms = [mx.mul_chain(F, [mx.power(F, t1, r), t1, Mx, mx.power(F, t2, e - 1 - r)], n) for r in range(e)]
        else:
            e = -e
            step = mx.neg(F, mx.mul(F, Mx, t2i))
            terms = [mx.mul_chain(F, [mx.power(F, t1i, r), step, mx.power(F, t2i, e - 1 - r)], n) for r in range(e)]
        total = mx.zeros(n)
        for T in terms:
            total = mx.add(F, total, T)
        return total

    Mx = alpha["x"]
    for b in g.names:
        for w, c in g.differential[b].items():
            cc = F.from_int(c)
            if not cc:
                continue
            for i, letter in enumerate(w):
                if ncpoly.is_t(letter):
                    if Mx is None:
                        continue
                    mid = t_entry(letter[2], Mx)
                else:
                    mid = alpha[letter]
                    if mid is None:
                        continue
                term = mx.mul_chain(F, [rho_word(rho1, w[:i]), mid, rho_word(rho2, w[i + 1:])], n)
                acc(b, mx.scale(F, cc, term))
    return HomElement.make(out)


def cocycle_criterion(
    g: CEDGA, rho1: Representation, rho2: Representation, M: Matrix, K: Mapping[str, Matrix]
) -> bool:
    """Matrix conditions for M y^ - sum K(a) a^ (a of grading -1) to be a
    cocycle: M rho2(t) = rho1(t) M and M rho2(a) - rho1(a) M = K~(d a) for
    every chord, K~ being the (rho1, rho2)-derivation extending K."""
    F, n = rho1.field, rho1.n
    if mx.mul(F, M, rho2.t) != mx.mul(F, rho1.t, M):
        return False
    left = _Evaluator(F, n, rho1.t, dict(rho1.values))
    right = _Evaluator(F, n, rho2.t, dict(rho2.values))
    for a in g.names:
        lhs = mx.sub(F, mx.mul(F, M, rho2[a]), mx.mul(F, rho1[a], M))
        if lhs != _derivation(F, n, g.differential[a], g.degree, left, right, dict(K)):
            return False
    return True


def cocycle_from(M: Matrix, K: Mapping[str, Matrix], F: FieldDescriptor) -> HomElement:
    """The element M y^ - sum K(a) a^."""
    items = {"y": M}
    items.update({a: mx.neg(F, v) for a, v in K.items()})
    return HomElement.make(items)


# --- filtration ---------------------------------------------------------------


def filtration_level(g: CEDGA, alpha: HomElement) -> int:
    """Largest I with alpha in F^I (F^-1 = all, F^0 = span{x^, a^},
    F^i = span{a_i^, a_{i+1}^, ...}); zero lies in every level."""
    if alpha.is_zero():
        return len(g.names) + 1
    sup = alpha.support()
    if "y" in sup:
        return -1
    if "x" in sup:
        return 0
    idx = {a: i + 1 for i, a in enumerate(g.names)}
    return min(idx[a] for a in sup)


def filtration_bound(levels: Sequence[int]) -> int:
    k = len(levels)
    return max(levels) if k == 2 else max(levels) + 1


# --- Hom complex ----------------------------------------------------------------


@dataclass
class HomComplex:
    n: int
    q: int
    basis: dict[int, list[tuple[str, int, int]]]  # grading -> (gen, row, col)
    m1: dict[int, list[list[int]]]  # grading i -> matrix Hom^i -> Hom^(i+1), rows = target coords
    ranks: dict[int, int]

    def dim(self, i: int) -> int:
        return len(self.basis.get(i, []))

    def boundary_dim(self, i: int) -> int:
        """dim B^i = rank of m_1 on Hom^(i-1)."""
        return self.ranks.get(i - 1, 0)

    def cocycle_dim(self, i: int) -> int:
        return self.dim(i) - self.ranks.get(i, 0)

    def cohomology_dim(self, i: int) -> int:
        return self.cocycle_dim(i) - self.boundary_dim(i)


def hom_basis(g: CEDGA, n: int) -> dict[int, list[tuple[str, int, int]]]:
    out: dict[int, list[tuple[str, int, int]]] = {}
    for gen, d in hom_generators(g):
        for r in range(n):
            for c in range(n):
                out.setdefault(d, []).append((gen, r, c))
    return out


def _unit_matrix(n: int, r: int, c: int) -> Matrix:
    return tuple(tuple(1 if (i, j) == (r, c) else 0 for j in range(n)) for i in range(n))


def element_from_vector(basis: list[tuple[str, int, int]], v: Sequence[int], n: int) -> HomElement:
    mats: dict[str, list[list[int]]] = {}
    for (gen, r, c), x in zip(basis, v):
        if x:
            mats.setdefault(gen, [[0] * n for _ in range(n)])[r][c] = x
    return HomElement.make({k: tuple(tuple(row) for row in m) for k, m in mats.items()})


def vector_from_element(basis: list[tuple[str, int, int]], alpha: HomElement, n: int) -> list[int]:
    out = []
    for gen, r, c in basis:
        v = alpha[gen]
        out.append(0 if v is None else v[r][c])
    return out


def hom_complex(
    g: CEDGA, rho1: Representation, rho2: Representation, gradings: Sequence[int] | None = None
) -> HomComplex:
    """m_1 as F_q-matrices; ``gradings`` limits which Hom^i get a matrix."""
    F, n = rho1.field, rho1.n
    basis = hom_basis(g, n)
    todo = sorted(basis) if gradings is None else [i for i in gradings if i in basis]
    m1s: dict[int, list[list[int]]] = {}
    ranks: dict[int, int] = {}
    for i in todo:
        tgt = basis.get(i + 1, [])
        cols = []
        for gen, r, c in basis[i]:
            e = HomElement.make({gen: _unit_matrix(n, r, c)})
            cols.append(vector_from_element(tgt, m1(g, rho1, rho2, e), n))
        mat = [[cols[j][r] for j in range(len(cols))] for r in range(len(tgt))]
        m1s[i] = mat
        ranks[i] = mx.rank(F, mat) if tgt else 0
    return HomComplex(n, rho1.q, basis, m1s, ranks)


def cocycle_space(F: FieldDescriptor, hc: HomComplex, i: int) -> list[list[int]]:
    mat = hc.m1[i]
    return mx.nullspace(F, mat, hc.dim(i))


def unit_cocycle_count(g: CEDGA, rho1: Representation, rho2: Representation) -> int:
    """Number of degree-0 cocycles in Hom(rho1, rho2) whose y^ coefficient is
    invertible."""
    F, n = rho1.field, rho1.n
    hc = hom_complex(g, rho1, rho2, gradings=[0])
    basis = hc.basis[0]
    Z = cocycle_space(F, hc, 0)
    ycols = [j for j, (gen, _, _) in enumerate(basis) if gen == "y"]
    proj = [[v[j] for j in ycols] for v in Z]
    rk = mx.rank(F, proj) if proj else 0
    # the projection image is spanned by the rows of proj
    rows = [list(r) for r in proj]
    piv = mx.row_reduce(F, rows, len(ycols)) if rows else []
    image_basis = rows[: len(piv)]
    invertible = 0
    for v in mx.span_elements(F, [0] * len(ycols), image_basis):
        if mx.is_invertible(F, mx.unflatten(v, n)):
            invertible += 1
    return invertible * F.q ** (len(Z) - rk)


def aut_order(g: CEDGA, rho: Representation) -> int:
    """|Aut(rho)|: invertible degree-0 cocycles modulo coboundaries."""
    F = rho.field
    hc = hom_complex(g, rho, rho, gradings=[-1, 0])
    units = unit_cocycle_count(g, rho, rho)
    b0 = hc.boundary_dim(0)
    if units % F.q**b0:  # pragma: no cover - coboundaries act freely
        raise AssertionError("unit count is not divisible by |B^0|")
    return units // F.q**b0


def inverse_cocycle(g: CEDGA, rho1: Representation, rho2: Representation, alpha: HomElement) -> HomElement:
    """beta in Hom^0(rho2, rho1) with m_2(alpha, beta) = -y^, built chord by
    chord in chord order."""
    F, n = rho1.field, rho1.n
    M = alpha["y"]
    if M is None or not mx.is_invertible(F, M):
        raise ValueError("the y^ coefficient of alpha is not invertible")
    Minv = mx.inverse(F, M)
    A = HomElement.make({k: v for k, v in alpha.coeffs if k != "y"})
    chain = [rho2, rho1, rho2]
    B: dict[str, Matrix] = {}
    for a in g.chords_in_grading(-1):
        prod = m2(g, chain, A, HomElement.make(B))
        corr = prod.coeff(a, n)
        Ai = A.coeff(a, n)
        Bi = mx.mul(F, mx.add(F, mx.neg(F, mx.mul(F, Minv, Ai)), corr), Minv)
        B[a] = Bi
    B["y"] = Minv
    return HomElement.make(B)


def composition_matrix(
    g: CEDGA, rho: Representation, rho0: Representation, f: HomElement, gi: HomElement
) -> list[list[int]]:
    """Matrix of alpha -> m_2(gi, m_2(f, alpha)) on Hom^0(rho, rho), for
    f in Hom^0(rho, rho0) and gi in Hom^0(rho0, rho); columns are inputs in
    the filtration-ordered basis (y^ first, then chords in chord order)."""
    n = rho.n
    basis = hom_basis(g, n)[0]
    cols = []
    for gen, r, c in basis:
        e = HomElement.make({gen: _unit_matrix(n, r, c)})
        inner = m2(g, [rho, rho, rho0], f, e)
        cols.append(vector_from_element(basis, m2(g, [rho, rho0, rho], gi, inner), n))
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(basis))]


def is_unipotent_lower(M: Sequence[Sequence[int]]) -> bool:
    """Identity plus a strictly lower triangular matrix."""
    return all(
        M[i][j] == (1 if i == j else M[i][j] if i > j else 0) for i in range(len(M)) for j in range(len(M))
    )


# --- homotopy cardinality -------------------------------------------------------


@dataclass
class ClassSummary:
    representative: Representation
    size: int
    aut: int
    cohomology: dict[int, int]  # grading -> dim H^i(rho, rho), i <= 0


def class_summary(g: CEDGA, cls: Sequence[Representation], size: int | None = None) -> ClassSummary:
    """Invariants of the class of ``cls[0]``; ``size`` defaults to len(cls)."""
    rho = cls[0]
    lowest = min([a.grading + 1 for a in g.generators] + [0])
    grades = list(range(lowest - 1, 1))
    hc = hom_complex(g, rho, rho, gradings=grades)
    coh = {i: hc.cohomology_dim(i) for i in range(lowest, 1)}
    return ClassSummary(rho, len(cls) if size is None else size, aut_order(g, rho), coh)


def categorical_term(s: ClassSummary, q: int) -> Fraction:
    e = sum(d if i % 2 else -d for i, d in s.cohomology.items() if i < 0)
    return Fraction(q) ** e / s.aut


def closed_form_cardinality(g: CEDGA, n: int, q: int, count: int) -> QValue:
    _, chi = grading_census(g)
    return q_power(q, n * n * (g.tb - chi)) * QValue(q, count) / gl_order(n, q)


@dataclass
class CardinalityReport:
    n: int
    q: int
    count: int
    classes: list[ClassSummary]
    categorical: QValue
    closed_form: QValue


def homotopy_cardinality(
    g: CEDGA, n: int, q: int, reps: list[Representation] | None = None
) -> CardinalityReport:
    """Both sides of the cardinality identity.  With ``reps`` the classes are
    built from the explicit list; without, from conjugation orbits."""
    if reps is not None:
        summaries = [class_summary(g, c) for c in equivalence_classes(g, reps)]
        count = len(reps)
    else:
        orbits = enumerate_orbits(g, n, q)
        summaries = [
            class_summary(g, [c[0].rep], sum(o.size for o in c)) for c in orbit_classes(g, orbits)
        ]
        count = sum(o.size for o in orbits)
    cat = sum((categorical_term(s, q) for s in summaries), Fraction(0))
    return CardinalityReport(n, q, count, summaries, QValue(q, cat), closed_form_cardinality(g, n, q, count))


# --- random elements for property checks -----------------------------------------


def random_matrix(F: FieldDescriptor, n: int, rng: random.Random) -> Matrix:
    return tuple(tuple(rng.randrange(F.q) for _ in range(n)) for _ in range(n))


def random_element(
    g: CEDGA, F: FieldDescriptor, n: int, rng: random.Random,
    grading: int | None = None, level: int | None = None,
) -> HomElement:
    """Random element, optionally homogeneous and/or inside F^level."""
    idx = {a: i + 1 for i, a in enumerate(g.names)}
    out = {}
    for gen, d in hom_generators(g):
        if grading is not None and d != grading:
            continue
        if level is not None:
            lv = -1 if gen == "y" else 0 if gen == "x" else idx[gen]
            if lv < level:
                continue
        out[gen] = random_matrix(F, n, rng)
    return HomElement.make(out)
