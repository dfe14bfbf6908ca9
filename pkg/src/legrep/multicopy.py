"""The k-copy DGA written out symbolically, and m_k read off its twisted
differential word by word.

This is a second, slower route to the A-infinity operations of
:mod:`legrep.repcat`, which works with block matrices instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import matrix as mx
from . import ncpoly
from .dga import CEDGA
from .repcat import HomElement, _sign, hom_generators
from .reps import Representation

PolyMatrix = list  # list of rows of NCPoly


def gen_name(base: str, i: int, j: int) -> str:
    return f"{base}[{i},{j}]"


@dataclass
class MultiCopyDGA:
    k: int
    names: list[str]
    degree: dict[str, int]
    differential: dict[str, dict]
    parts: dict[str, tuple[str, int, int]]  # name -> (base generator, i, j)

    def check(self) -> tuple[bool, str | None, object]:
        return ncpoly.check_differential(self.names, self.differential, self.degree)


def _pm_zero(k: int) -> PolyMatrix:
    return [[{} for _ in range(k)] for _ in range(k)]


def _pm_identity(k: int) -> PolyMatrix:
    m = _pm_zero(k)
    for i in range(k):
        m[i][i] = {(): 1}
    return m


def _pm_mul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    k = len(A)
    out = _pm_zero(k)
    for i in range(k):
        for l in range(k):
            if not A[i][l]:
                continue
            for j in range(k):
                if B[l][j]:
                    out[i][j] = ncpoly.padd(out[i][j], ncpoly.pmul(A[i][l], B[l][j]))
    return out


def _pm_add(A: PolyMatrix, B: PolyMatrix, c: int = 1) -> PolyMatrix:
    k = len(A)
    return [[ncpoly.padd(A[i][j], ncpoly.pscale(B[i][j], c)) for j in range(k)] for i in range(k)]


def multi_copy_dga(g: CEDGA, k: int) -> MultiCopyDGA:
    """The k-copy: every chord becomes a full k x k matrix of chords, with
    upper triangular x and y matrices and one t per copy."""
    names: list[str] = []
    degree: dict[str, int] = {}
    parts: dict[str, tuple[str, int, int]] = {}

    def add(base: str, i: int, j: int, deg: int) -> str:
        nm = gen_name(base, i, j)
        names.append(nm)
        degree[nm] = deg
        parts[nm] = (base, i, j)
        return nm

    A = {}
    for a in g.names:
        A[a] = [[{(add(a, i, j, g.degree[a]),): 1} for j in range(1, k + 1)] for i in range(1, k + 1)]
    X, Y = _pm_identity(k), _pm_zero(k)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            X[i - 1][j - 1] = {(add("x", i, j, 0),): 1}
            Y[i - 1][j - 1] = {(add("y", i, j, -1),): 1}
    Delta, Delta_inv = _pm_zero(k), _pm_zero(k)
    for i in range(k):
        Delta[i][i] = {(ncpoly.t_letter(i + 1, 1),): 1}
        Delta_inv[i][i] = {(ncpoly.t_letter(i + 1, -1),): 1}
    N = _pm_add(X, _pm_identity(k), -1)
    X_inv, term = _pm_identity(k), _pm_identity(k)
    for r in range(1, k):
        term = _pm_mul(term, N)
        X_inv = _pm_add(X_inv, term, (-1) ** r)
    DX = _pm_mul(Delta, X)
    DX_inv = _pm_mul(X_inv, Delta_inv)

    def image(letter) -> PolyMatrix:
        if ncpoly.is_t(letter):
            base = DX if letter[2] > 0 else DX_inv
            out = _pm_identity(k)
            for _ in range(abs(letter[2])):
                out = _pm_mul(out, base)
            return out
        return A[letter]

    def phi(p) -> PolyMatrix:
        out = _pm_zero(k)
        for w, c in p.items():
            m = _pm_identity(k)
            for x in w:
                m = _pm_mul(m, image(x))
            out = _pm_add(out, m, c)
        return out

    diff: dict[str, dict] = {}
    for a in g.names:
        D = phi(g.differential[a])
        D = _pm_add(D, _pm_mul(Y, A[a]))
        D = _pm_add(D, _pm_mul(A[a], Y), 1 if g.degree[a] % 2 else -1)
        for i in range(k):
            for j in range(k):
                if D[i][j]:
                    diff[gen_name(a, i + 1, j + 1)] = D[i][j]
    DX_part = _pm_mul(_pm_mul(_pm_mul(Delta_inv, Y), Delta), X)
    Dx = _pm_add(DX_part, _pm_mul(X, Y), -1)
    Dy = _pm_mul(Y, Y)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            if Dx[i - 1][j - 1]:
                diff[gen_name("x", i, j)] = Dx[i - 1][j - 1]
            if Dy[i - 1][j - 1]:
                diff[gen_name("y", i, j)] = Dy[i - 1][j - 1]
    return MultiCopyDGA(k, names, degree, diff, parts)


@dataclass(frozen=True)
class TwistedTerm:
    letters: tuple[str, ...]  # mixed generators, in order
    mats: tuple  # len(letters) + 1 coefficient matrices around them


def twisted_differential(
    mc: MultiCopyDGA, chain: Sequence[Representation], name: str
) -> list[TwistedTerm]:
    """Terms of the twisted differential of ``name`` that involve mixed
    generators only: each pure chord a[i,i] is replaced by rho_i(a) and each
    t_i by rho_i(t).  The constant term, if any, has ``letters == ()``."""
    F, n = chain[0].field, chain[0].n
    out: list[TwistedTerm] = []
    for w, c in mc.differential.get(name, {}).items():
        mats = [mx.scalar(F, F.from_int(c), n)]
        letters: list[str] = []
        dead = False
        for x in w:
            if ncpoly.is_t(x):
                rho = chain[x[1] - 1]
                mats[-1] = mx.mul(F, mats[-1], mx.power(F, rho.t, x[2]))
                continue
            base, i, j = mc.parts[x]
            if i == j:
                mats[-1] = mx.mul(F, mats[-1], chain[i - 1][base])
            else:
                letters.append(x)
                mats.append(mx.identity(n))
            if mx.is_zero(mats[-1]):
                dead = True
                break
        if not dead:
            out.append(TwistedTerm(tuple(letters), tuple(mats)))
    return out


class TwistError(ValueError):
    """The pure representation does not augment the multi-copy DGA."""


def constant_term(mc: MultiCopyDGA, chain: Sequence[Representation], name: str):
    F, n = chain[0].field, chain[0].n
    total = mx.zeros(n)
    for t in twisted_differential(mc, chain, name):
        if not t.letters:
            total = mx.add(F, total, t.mats[0])
    return total


def constant_terms_vanish(mc: MultiCopyDGA, chain: Sequence[Representation]) -> bool:
    """The twisted differential has no constant term on any generator."""
    return all(mx.is_zero(constant_term(mc, chain, name)) for name in mc.names)


def augmented_differential(mc: MultiCopyDGA, chain: Sequence[Representation]) -> dict[str, list[TwistedTerm]]:
    """Twisted differential of every generator; raises TwistError if some
    generator keeps a constant term."""
    if len(chain) != mc.k:
        raise TwistError(f"{len(chain)} representations given for a {mc.k}-copy")
    if len({(r.n, r.q) for r in chain}) != 1:
        raise TwistError("representations must share n and q")
    out = {}
    for name in mc.names:
        if not mx.is_zero(constant_term(mc, chain, name)):
            raise TwistError(f"constant term on {name}: not an augmentation")
        out[name] = twisted_differential(mc, chain, name)
    return out


def a_infinity_op_symbolic(g: CEDGA, chain: Sequence[Representation], args, mc: MultiCopyDGA | None = None):
    """m_k from the (k+1)-copy: the coefficient of each output generator is
    the sum over words a^(1,2) a^(2,3) ... a^(k,k+1) in the twisted
    differential of its (1, k+1) copy."""
    k = len(args)
    K = k + 1
    if mc is None:
        mc = multi_copy_dga(g, K)
    F, n = chain[0].field, chain[0].n
    total: dict[str, object] = {}
    grades = dict(hom_generators(g))
    parts = [sorted(a.homogeneous_parts(g).items()) for a in args]
    for combo in itertools.product(*parts):
        degs = [d for d, _ in combo]
        sgn = _sign(degs)
        # copy pair (u, u+1) reads argument number K - u (1-based)
        pair_arg = {u: combo[K - u - 1][1] for u in range(1, K)}
        for out_gen, d in grades.items():
            if d != sum(degs) + 2 - k:
                continue
            acc = mx.zeros(n)
            for term in twisted_differential(mc, chain, gen_name(out_gen, 1, K)):
                if len(term.letters) != k:
                    continue
                m = term.mats[0]
                ok = True
                for u, (letter, after) in enumerate(zip(term.letters, term.mats[1:]), start=1):
                    base, i, j = mc.parts[letter]
                    if (i, j) != (u, u + 1):
                        ok = False
                        break
                    C = pair_arg[u][base]
                    if C is None:
                        ok = False
                        break
                    m = mx.mul(F, mx.mul(F, m, C), after)
                if ok:
                    acc = mx.add(F, acc, m)
            if not mx.is_zero(acc):
                if sgn < 0:
                    acc = mx.neg(F, acc)
                total[out_gen] = mx.add(F, total[out_gen], acc) if out_gen in total else acc
    return HomElement.make(total)
