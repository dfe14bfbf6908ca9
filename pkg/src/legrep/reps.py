"""Representations of the CE DGA into n x n matrices over F_q.

A representation sends each grading-0 chord to a matrix, ``t`` to an
invertible matrix and every other chord to 0, and kills the differential.
Only the differentials of grading-1 chords impose conditions: every other
differential has no word made of grading-0 letters alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import matrix as mx
from . import ncpoly
from .dga import CEDGA, grading_census
from .field import FieldDescriptor, gl_order, make_field
from .laurent import QValue, q_power
from .matrix import Matrix


@dataclass(frozen=True)
class Representation:
    n: int
    q: int
    t: Matrix
    values: tuple[tuple[str, Matrix], ...]  # grading-0 chords in chord order

    @property
    def field(self) -> FieldDescriptor:
        return make_field(self.q)

    def __getitem__(self, name: str) -> Matrix:
        for k, v in self.values:
            if k == name:
                return v
        return mx.zeros(self.n)

    def key(self) -> tuple:
        return (mx.flatten(self.t),) + tuple(mx.flatten(v) for _, v in self.values)

    def to_json(self) -> dict:
        return {
            "t": [list(r) for r in self.t],
            "chords": {k: [list(r) for r in v] for k, v in self.values},
        }


@dataclass(frozen=True)
class HomotopyWitness:
    M: Matrix
    L: tuple[tuple[str, Matrix], ...]  # grading -1 chords


class _Evaluator:
    """Evaluates words under a partial assignment, caching t powers."""

    def __init__(self, F: FieldDescriptor, n: int, t: Matrix, values: Mapping[str, Matrix]):
        self.F, self.n = F, n
        self.t = t
        self.tinv = mx.inverse(F, t)
        self.values = values
        self._pow: dict[int, Matrix] = {}

    def letter(self, x) -> Matrix:
        if ncpoly.is_t(x):
            e = x[2]
            if e not in self._pow:
                self._pow[e] = mx.power(self.F, self.t if e > 0 else self.tinv, abs(e))
            return self._pow[e]
        v = self.values.get(x)
        return v if v is not None else mx.zeros(self.n)

    def word(self, w: Iterable) -> Matrix:
        out = None
        for x in w:
            m = self.letter(x)
            out = m if out is None else mx.mul(self.F, out, m)
        return mx.identity(self.n) if out is None else out

    def poly(self, p: Mapping) -> Matrix:
        F = self.F
        out = mx.zeros(self.n)
        for w, c in p.items():
            cc = F.from_int(c)
            if cc:
                out = mx.add(F, out, mx.scale(F, cc, self.word(w)))
        return out


def _degree_zero_part(g: CEDGA, p: Mapping) -> dict:
    """Drop words containing a chord of nonzero grading (they map to 0)."""
    deg = g.degree
    return {w: c for w, c in p.items() if all(ncpoly.is_t(x) or deg[x] == 0 for x in w)}


def evaluate(g: CEDGA, rho: Representation, p: Mapping) -> Matrix:
    vals = dict(rho.values)
    return _Evaluator(rho.field, rho.n, rho.t, vals).poly(p)


def is_representation(g: CEDGA, rho: Representation, all_generators: bool = True) -> bool:
    if not mx.is_invertible(rho.field, rho.t):
        return False
    names = g.names if all_generators else g.chords_in_grading(1)
    return all(mx.is_zero(evaluate(g, rho, g.differential[a])) for a in names)


def _compile_linear(F, rels: list[dict], x: str):
    """Split each word of each relation around the chord ``x``: returns per
    relation ``(terms, consts)`` with terms ``(c, prefix, suffix)``, or
    ``None`` if ``x`` occurs twice in some word."""
    out = []
    for p in rels:
        terms, consts = [], []
        for w, c in p.items():
            cc = F.from_int(c)
            if not cc:
                continue
            idx = [i for i, y in enumerate(w) if y == x]
            if len(idx) > 1:
                return None
            if idx:
                terms.append((cc, w[: idx[0]], w[idx[0] + 1:]))
            else:
                consts.append((cc, w))
        out.append((terms, consts))
    return out


def _linear_system(F, n, ev: _Evaluator, compiled):
    """Rows/rhs of the affine system in the n*n entries of a chord, from
    :func:`_compile_linear`: P X Q has (r, s) entry sum P[r][u] Q[v][s] X[u][v]."""
    cache: dict[tuple, Matrix] = {}

    def word(w):
        m = cache.get(w)
        if m is None:
            m = cache[w] = ev.word(w)
        return m

    nn = n * n
    rows, rhs = [], []
    for terms, consts in compiled:
        const = mx.zeros(n)
        for cc, w in consts:
            const = mx.add(F, const, mx.scale(F, cc, word(w)))
        pairs = [(mx.scale(F, cc, word(pre)), word(suf)) for cc, pre, suf in terms]
        if F.d == 1:
            p = F.p
            for r in range(n):
                for s_ in range(n):
                    rows.append([
                        sum(P[r][u] * Q[v][s_] for P, Q in pairs) % p
                        for u in range(n) for v in range(n)
                    ])
            rhs.extend(F.neg(y) for y in mx.flatten(const))
            continue
        for r in range(n):
            for s_ in range(n):
                row = [0] * nn
                for P, Q in pairs:
                    Pr = P[r]
                    for u in range(n):
                        pu = Pr[u]
                        if not pu:
                            continue
                        base = u * n
                        for v in range(n):
                            qv = Q[v][s_]
                            if qv:
                                row[base + v] = F.add(row[base + v], F.mul(pu, qv))
                rows.append(row)
        rhs.extend(F.neg(y) for y in mx.flatten(const))
    return rows, rhs


@dataclass(frozen=True)
class Orbit:
    """A conjugation orbit of representations: one member and its size."""

    rep: Representation
    size: int


def _orbit_reps(F: FieldDescriptor, cands: Iterable[Matrix], group: list[tuple[Matrix, Matrix]], n: int):
    """(X, stabilizer of X in group) for the least member X of each orbit
    of ``group`` acting on the invariant set ``cands`` by conjugation."""
    if len(group) == 1:
        for X in cands:
            yield X, group
        return
    seen: set[Matrix] = set()
    for X in sorted(cands):
        if X in seen:
            continue
        stab = []
        for M, Minv in group:
            Y = mx.mul_chain(F, [Minv, X, M], n)
            seen.add(Y)
            if Y == X:
                stab.append((M, Minv))
        yield X, stab


def enumerate_orbits(g: CEDGA, n: int, q: int) -> list[Orbit]:
    """One representative per conjugation orbit, with the orbit size.

    The search fixes chords one at a time; at each step only the least
    member of each orbit of the current stabilizer is tried, so every orbit
    is reached exactly once."""
    F = make_field(q)
    chords = g.chords_in_grading(0)
    rels = [_degree_zero_part(g, g.differential[a]) for a in g.chords_in_grading(1)]
    rels = [p for p in rels if p]
    pos = {a: i for i, a in enumerate(chords)}
    # each relation is checked once its last chord is assigned
    due: dict[int, list[dict]] = {i: [] for i in range(-1, len(chords))}
    for p in rels:
        last = max((pos[x] for w in p for x in w if not ncpoly.is_t(x)), default=-1)
        due[last].append(p)
    compiled = {j: _compile_linear(F, due[j], chords[j]) for j in range(len(chords)) if due[j]}
    all_mats = list(mx.all_matrices(F, n))
    gl = [(M, mx.inverse(F, M)) for M in mx.general_linear(F, n)]
    out: list[Orbit] = []

    def extend(j: int, vals: dict, ev: _Evaluator, t: Matrix, stab: list) -> None:
        if j == len(chords):
            rho = Representation(n, q, t, tuple((a, vals[a]) for a in chords))
            out.append(Orbit(rho, len(gl) // len(stab)))
            return
        a = chords[j]
        system = _linear_system(F, n, ev, compiled[j]) if compiled.get(j) is not None else None
        if system is not None:
            sol = mx.solve_affine(F, system[0], system[1], n * n)
            if sol is None:
                return
            cands = [mx.unflatten(v, n) for v in mx.span_elements(F, sol[0], sol[1])]
            check = False
        else:
            cands = all_mats
            check = bool(due[j])
        for X, sub in _orbit_reps(F, cands, stab, n):
            vals[a] = X
            if check and any(not mx.is_zero(ev.poly(p)) for p in due[j]):
                continue
            extend(j + 1, vals, ev, t, sub)
        vals.pop(a, None)

    def t_ok(t: Matrix) -> bool:
        ev = _Evaluator(F, n, t, {})
        return all(mx.is_zero(ev.poly(p)) for p in due[-1])

    for t, cent in _orbit_reps(F, [M for M, _ in gl if t_ok(M)], gl, n):
        vals: dict[str, Matrix] = {}
        extend(0, vals, _Evaluator(F, n, t, vals), t, cent)
    return out


def expand_orbit(orbit: Orbit) -> list[Representation]:
    rho = orbit.rep
    F = rho.field
    found = {}
    for M in mx.general_linear(F, rho.n):
        r = conjugate(rho, M)
        found.setdefault(r.key(), r)
    if len(found) != orbit.size:  # pragma: no cover - orbit-stabilizer
        raise AssertionError("orbit size does not match its expansion")
    return list(found.values())


def enumerate_reps(g: CEDGA, n: int, q: int) -> list[Representation]:
    """All n-dimensional representations over F_q, in lexicographic order."""
    out = [r for o in enumerate_orbits(g, n, q) for r in expand_orbit(o)]
    return sorted(out, key=Representation.key)


def count_from_orbits(orbits: Iterable[Orbit]) -> int:
    return sum(o.size for o in orbits)


def conjugate(rho: Representation, M: Matrix, Minv: Matrix | None = None) -> Representation:
    """M^-1 rho M."""
    F, n = rho.field, rho.n
    if Minv is None:
        Minv = mx.inverse(F, M)
    return Representation(
        n, rho.q, mx.mul_chain(F, [Minv, rho.t, M], n),
        tuple((a, mx.mul_chain(F, [Minv, v, M], n)) for a, v in rho.values),
    )


def brute_force_reps(g: CEDGA, n: int, q: int) -> list[Representation]:
    """Exhaustive search with no pruning; used as an oracle for small cases."""
    F = make_field(q)
    chords = g.chords_in_grading(0)
    out = []
    for t in mx.general_linear(F, n):
        for combo in itertools.product(list(mx.all_matrices(F, n)), repeat=len(chords)):
            rho = Representation(n, q, t, tuple(zip(chords, combo)))
            if is_representation(g, rho):
                out.append(rho)
    out.sort(key=Representation.key)
    return out


def count_reps(g: CEDGA, n: int, q: int) -> int:
    return count_from_orbits(enumerate_orbits(g, n, q))


def rep_number(g: CEDGA, n: int, q: int, count: int | None = None) -> QValue:
    """q^(-n^2 chi*/2) |GL_n(F_q)|^-1 #reps, exactly."""
    if count is None:
        count = count_reps(g, n, q)
    _, chi = grading_census(g)
    return q_power(q, -n * n * chi) * QValue(q, count) / gl_order(n, q)


# --- conjugate DGA homotopy ------------------------------------------------


def _derivation(F, n, p: Mapping, deg: Mapping[str, int], left: _Evaluator, right: _Evaluator, L: Mapping[str, Matrix]) -> Matrix:
    """(left, right)-derivation extending L (supported on grading -1 chords)."""
    out = mx.zeros(n)
    for w, c in p.items():
        cc = F.from_int(c)
        if not cc:
            continue
        for i, x in enumerate(w):
            if ncpoly.is_t(x) or x not in L:
                continue
            rest = w[:i] + w[i + 1:]
            if any(not ncpoly.is_t(y) and deg[y] != 0 for y in rest):
                continue
            term = mx.mul_chain(F, [left.word(w[:i]), L[x], right.word(w[i + 1:])], n)
            out = mx.add(F, out, mx.scale(F, cc, term))
    return out


def extend_unique_rep(
    g: CEDGA, rho: Representation, M: Matrix, A: Mapping[str, Matrix], check: bool = True
) -> Representation:
    """The unique rho0 with rho ~ M rho0 M^-1 through the derivation L = A.

    Built chord by chord in chord order: the derivation of d(a) only sees
    earlier chords, whose images under M rho0 M^-1 are already known."""
    F, n = rho.field, rho.n
    Minv = mx.inverse(F, M)
    if Minv is None:
        raise ValueError("conjugator is singular")
    deg = g.degree
    L = {a: A.get(a, mx.zeros(n)) for a in g.chords_in_grading(-1)}
    left = _Evaluator(F, n, rho.t, dict(rho.values))
    sigma_vals: dict[str, Matrix] = {}
    right = _Evaluator(F, n, rho.t, sigma_vals)  # sigma(t) = rho(t)
    out = []
    for a in g.names:
        if deg[a] != 0:
            continue
        s = mx.add(F, rho[a], _derivation(F, n, g.differential[a], deg, left, right, L))
        sigma_vals[a] = s
        out.append((a, mx.mul_chain(F, [Minv, s, M], n)))
    t0 = mx.mul_chain(F, [Minv, rho.t, M], n)
    rho0 = Representation(n, rho.q, t0, tuple(out))
    if check and not is_representation(g, rho0):  # pragma: no cover - guaranteed by construction
        raise AssertionError("unique extension is not a representation")
    return rho0


def homotopy_holds(g: CEDGA, rho1: Representation, rho2: Representation, w: HomotopyWitness) -> bool:
    """Check a witness: M rho2(t) M^-1 = rho1(t) and, on grading-0 chords,
    M rho2(a) M^-1 - rho1(a) = L~(d a)."""
    F, n = rho1.field, rho1.n
    Minv = mx.inverse(F, w.M)
    if Minv is None:
        return False
    if mx.mul_chain(F, [w.M, rho2.t, Minv], n) != rho1.t:
        return False
    sigma = {a: mx.mul_chain(F, [w.M, v, Minv], n) for a, v in rho2.values}
    left = _Evaluator(F, n, rho1.t, dict(rho1.values))
    right = _Evaluator(F, n, rho1.t, sigma)
    L = dict(w.L)
    for a in g.chords_in_grading(0):
        lhs = mx.sub(F, sigma[a], rho1[a])
        if lhs != _derivation(F, n, g.differential[a], g.degree, left, right, L):
            return False
    return True


def conjugate_homotopic(g: CEDGA, rho1: Representation, rho2: Representation) -> HomotopyWitness | None:
    """First witness (M, L) in lexicographic order of M, or None."""
    F, n = rho1.field, rho1.n
    if mx.conjugacy_invariant(F, rho1.t) != mx.conjugacy_invariant(F, rho2.t):
        return None
    deg = g.degree
    minus = g.chords_in_grading(-1)
    zero = g.chords_in_grading(0)
    nn = n * n
    for M in mx.general_linear(F, n):
        Minv = mx.inverse(F, M)
        if mx.mul_chain(F, [M, rho2.t, Minv], n) != rho1.t:
            continue
        sigma = {a: mx.mul_chain(F, [M, v, Minv], n) for a, v in rho2.values}
        left = _Evaluator(F, n, rho1.t, dict(rho1.values))
        right = _Evaluator(F, n, rho1.t, sigma)
        # the derivation is linear in L: assemble columns from unit matrices
        ncols = nn * len(minus)
        rows: list[list[int]] = []
        rhs: list[int] = []
        cols = []
        for ci in range(ncols):
            b, e = divmod(ci, nn)
            unit = tuple(tuple(1 if r * n + s == e else 0 for s in range(n)) for r in range(n))
            Ls = {x: (unit if j == b else mx.zeros(n)) for j, x in enumerate(minus)}
            cols.append([mx.flatten(_derivation(F, n, g.differential[a], deg, left, right, Ls)) for a in zero])
        for ai, a in enumerate(zero):
            target = mx.flatten(mx.sub(F, sigma[a], rho1[a]))
            for e in range(nn):
                rows.append([cols[ci][ai][e] for ci in range(ncols)])
                rhs.append(target[e])
        if ncols == 0:
            if all(x == 0 for x in rhs):
                return HomotopyWitness(M, ())
            continue
        sol = mx.solve_affine(F, rows, rhs, ncols)
        if sol is None:
            continue
        x = sol[0]
        L = tuple((a, mx.unflatten(x[j * nn:(j + 1) * nn], n)) for j, a in enumerate(minus))
        return HomotopyWitness(M, L)
    return None


def _derivation_values(g: CEDGA, n: int, F) -> Iterable[dict[str, Matrix]]:
    minus = g.chords_in_grading(-1)
    mats = list(mx.all_matrices(F, n))
    for combo in itertools.product(mats, repeat=len(minus)):
        yield dict(zip(minus, combo))


def equivalence_classes(g: CEDGA, reps: list[Representation], method: str = "orbit") -> list[list[Representation]]:
    """Partition into conjugate-homotopy classes; each class is sorted and
    classes are ordered by their least member.

    ``orbit`` generates each class as the image of (M, A) under the unique
    extension; ``pairwise`` runs union-find over ``conjugate_homotopic``."""
    if not reps:
        return []
    index = {r.key(): i for i, r in enumerate(reps)}
    parent = list(range(len(reps)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        a, b = find(i), find(j)
        if a != b:
            parent[max(a, b)] = min(a, b)

    if method == "pairwise":
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                if find(i) != find(j) and conjugate_homotopic(g, reps[i], reps[j]) is not None:
                    union(i, j)
    elif method == "orbit":
        F = reps[0].field
        n = reps[0].n
        gl = mx.general_linear(F, n)
        done: set[int] = set()
        for i, rho in enumerate(reps):
            if find(i) in done:
                continue
            for A in _derivation_values(g, n, F):
                for M in gl:
                    j = index.get(extend_unique_rep(g, rho, M, A, check=False).key())
                    if j is None:
                        raise ValueError("representation list is not closed under equivalence")
                    union(i, j)
            done.add(find(i))
    else:
        raise ValueError(f"unknown method {method!r}")
    groups: dict[int, list[Representation]] = {}
    for i, r in enumerate(reps):
        groups.setdefault(find(i), []).append(r)
    classes = [sorted(c, key=Representation.key) for c in groups.values()]
    classes.sort(key=lambda c: c[0].key())
    return classes


def canonical_key(rho: Representation, gl: list[Matrix] | None = None) -> tuple:
    """Least key over the conjugation orbit of ``rho``."""
    if gl is None:
        gl = mx.general_linear(rho.field, rho.n)
    return min(conjugate(rho, M).key() for M in gl)


def orbit_classes(g: CEDGA, orbits: list[Orbit]) -> list[list[Orbit]]:
    """Group conjugation orbits into equivalence classes.

    A homotopy through L with conjugator M lands on M^-1 sigma_L M, and
    sigma_L does not depend on M, so it is enough to try every L with M = 1
    and locate the orbit of the result."""
    if not orbits:
        return []
    rho0 = orbits[0].rep
    F, n = rho0.field, rho0.n
    minus = g.chords_in_grading(-1)
    if not minus:
        groups = [[o] for o in orbits]
    else:
        gl = mx.general_linear(F, n)
        index = {canonical_key(o.rep, gl): i for i, o in enumerate(orbits)}
        parent = list(range(len(orbits)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        one = mx.identity(n)
        for i, o in enumerate(orbits):
            for A in _derivation_values(g, n, F):
                image = extend_unique_rep(g, o.rep, one, A, check=False)
                j = index.get(canonical_key(image, gl))
                if j is None:
                    raise ValueError("orbit list is not closed under equivalence")
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        by_root: dict[int, list[Orbit]] = {}
        for i, o in enumerate(orbits):
            by_root.setdefault(find(i), []).append(o)
        groups = list(by_root.values())
    groups = [sorted(c, key=lambda o: o.rep.key()) for c in groups]
    groups.sort(key=lambda c: c[0].rep.key())
    return groups
