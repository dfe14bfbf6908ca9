"""Chekanov-Eliashberg DGA of a front via its Ng resolution.

Generators are the crossings and right cusps of the front.  Disks in the
resolution are enumerated directly on the front as pairs of x-monotone paths
(upper and lower boundary) that start together at a left cusp and end together
at a crossing (the crossing's left quadrant is the positive corner) or at a
right cusp.  Along the way a path may

* pass through a crossing,
* turn at a crossing so the disk fills only the top quadrant (lower path) or
  only the bottom quadrant (upper path): a negative corner,
* pass the basepoint, contributing ``t`` or ``t^-1``.

A path that runs into a right cusp alone kills the disk.  Every right cusp
also carries the constant disk of its resolution loop, so
``d(right cusp) = 1 + ...``.

Words are read counterclockwise from the positive corner: the upper path's
corners from right to left, then the lower path's from left to right.  The
knot is oriented so the basepoint strand runs leftward; a boundary passing the
basepoint in that direction reads ``t``, otherwise ``t^-1``.

Orientation signs: at a crossing of even grading two adjacent quadrants are
negative.  The default shades the left and top quadrants; the other choices
are kept for the sign-convention tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from . import ncpoly
from .diagram import FrontDiagram, classical_invariants, plat_problem
from .ncpoly import NCPoly

SIGN_CONVENTIONS = ("LT", "TR", "RB", "BL")
DEFAULT_SIGNS = "LT"
T = ("t", None, 1)
T_INV = ("t", None, -1)


class DGAError(RuntimeError):
    pass


@dataclass(frozen=True)
class ChordGenerator:
    name: str
    grading: int
    kind: str  # "crossing" or "right_cusp"
    event: int  # index of the event in the front


@dataclass(frozen=True)
class Disk:
    positive: str
    word: tuple
    sign: int


@dataclass
class CEDGA:
    """Generators listed in chord order: ``d`` of each one only involves
    earlier generators and ``t``."""

    generators: list[ChordGenerator]
    differential: dict[str, NCPoly]
    disks: list[Disk] = field(default_factory=list)
    tb: int = 0

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    @property
    def degree(self) -> dict[str, int]:
        return {g.name: g.grading for g in self.generators}

    def generator(self, name: str) -> ChordGenerator:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def chords_in_grading(self, i: int) -> list[str]:
        return [g.name for g in self.generators if g.grading == i]

    def to_json(self) -> dict:
        return {
            "generators": [
                {"name": g.name, "grading": g.grading, "kind": g.kind, "event": g.event + 1}
                for g in self.generators
            ],
            "differential": {
                g.name: [
                    [c, [_letter_token(x) for x in w]]
                    for w, c in sorted(self.differential[g.name].items(), key=_word_key)
                ]
                for g in self.generators
            },
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _letter_token(x) -> str:
    return f"t^{x[2]}" if ncpoly.is_t(x) else str(x)


def _word_key(item):
    w, _ = item
    return (len(w), [_letter_token(x) for x in w])


def _quadrant_sign(convention: str, grading: int, quadrant: str) -> int:
    if grading % 2:
        return 1
    return -1 if quadrant in convention else 1


def enumerate_disks(d: FrontDiagram, gradings: Mapping[int, int], signs: str = DEFAULT_SIGNS) -> list[tuple[int, tuple, int]]:
    """All admissible disks as ``(positive event, word, sign)``; chord letters
    are event indices (ints), ``t`` letters are ncpoly invertible letters."""
    events = d.events
    out: list[tuple[int, tuple, int]] = []

    def sweep(k: int, u: int, l: int, ul: tuple, ll: tuple, sign: int) -> None:
        while k < len(events):
            ev = events[k]
            i = ev.pos
            if ev.kind == "L":
                u = u if u < i else u + 2
                l = l if l < i else l + 2
            elif ev.kind == "R":
                if u == i and l == i + 1:
                    out.append((k, ul[::-1] + ll, sign))
                    return
                if u in (i, i + 1) or l in (i, i + 1):
                    return
                u = u if u < i else u - 2
                l = l if l < i else l - 2
            elif ev.kind == "*":
                if u == i:
                    ul = ul + (T,)
                if l == i:
                    ll = ll + (T_INV,)
            else:  # crossing
                g = gradings[k]
                if u == i and l == i + 1:
                    out.append((k, ul[::-1] + ll, sign * _quadrant_sign(signs, g, "L")))
                    return
                if u == i + 1:
                    # bottom-quadrant corner on the upper path, or pass through
                    sweep(k + 1, i + 1, l, ul + (k,), ll, sign * _quadrant_sign(signs, g, "B"))
                    u = i
                elif u == i:
                    u = i + 1
                if l == i:
                    sweep(k + 1, u, i, ul, ll + (k,), sign * _quadrant_sign(signs, g, "T"))
                    l = i + 1
                elif l == i + 1:
                    l = i
            k += 1

    for k, ev in enumerate(events):
        if ev.kind == "L":
            sweep(k + 1, ev.pos, ev.pos + 1, (), (), 1)
    return out


def build_dga(d: FrontDiagram, signs: str = DEFAULT_SIGNS) -> CEDGA:
    if signs not in SIGN_CONVENTIONS:
        raise ValueError(f"unknown sign convention {signs!r}")
    # the disk model misses disks that wrap around nested right cusps
    problem = plat_problem(d)
    if problem is not None:
        raise DGAError(f"front is not in plat position: {problem}")
    ci = classical_invariants(d)
    if ci.crossing_gradings is None:
        raise DGAError("the front has nonzero rotation number; no integer grading")
    grade = dict(ci.crossing_gradings)
    for k in d.right_cusps:
        grade[k] = 1
    raw: dict[int, NCPoly] = {k: {} for k in grade}
    for k in d.right_cusps:
        ncpoly.add_term(raw[k], (), 1)
    disks = enumerate_disks(d, grade, signs)
    for k, w, s in disks:
        ncpoly.add_term(raw[k], ncpoly.normalize(w), s)

    order = _triangular_order(raw)
    names = {k: f"a{i + 1}" for i, k in enumerate(order)}

    def rename(w):
        return tuple(x if ncpoly.is_t(x) else names[x] for x in w)

    gens = [
        ChordGenerator(names[k], grade[k], "right_cusp" if d.events[k].kind == "R" else "crossing", k)
        for k in order
    ]
    diff = {names[k]: {rename(w): c for w, c in raw[k].items()} for k in order}
    disk_list = [Disk(names[k], rename(ncpoly.normalize(w)), s) for k, w, s in disks]
    return CEDGA(gens, diff, disk_list, tb=ci.tb)


def _triangular_order(raw: Mapping[int, NCPoly]) -> list[int]:
    """Topological order of the dependency graph; ties go to the leftmost
    event."""
    deps = {k: {x for w in p for x in w if not ncpoly.is_t(x)} for k, p in raw.items()}
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < len(deps):
        ready = [k for k in deps if k not in placed and deps[k] <= placed]
        if not ready:
            raise DGAError("differential is not triangular for any chord order")
        k = min(ready)
        order.append(k)
        placed.add(k)
    return order


@dataclass(frozen=True)
class DGAReport:
    ok: bool
    generator: str | None = None
    problem: str | None = None
    word: tuple | None = None
    coefficient: int | None = None

    def __str__(self) -> str:
        if self.ok:
            return "pass: deg(d) = -1 and d^2 = 0"
        w = "*".join(_letter_token(x) for x in self.word) or "1"
        return f"fail: {self.problem} at {self.generator}, word {w} with coefficient {self.coefficient}"


def verify_dga(g: CEDGA) -> DGAReport:
    ok, gen, wit = ncpoly.check_differential(g.names, g.differential, g.degree)
    if ok:
        return DGAReport(True)
    kind, w, c = wit
    problem = "degree of d is not -1" if kind == "degree" else "d^2 is nonzero"
    return DGAReport(False, gen, problem, w, c)


def check_triangular(g: CEDGA) -> bool:
    seen: set[str] = set()
    for gen in g.generators:
        for w in g.differential[gen.name]:
            if any(not ncpoly.is_t(x) and x not in seen for x in w):
                return False
        seen.add(gen.name)
    return True


def grading_census(g: CEDGA) -> tuple[dict[int, int], int]:
    counts: dict[int, int] = {}
    for gen in g.generators:
        counts[gen.grading] = counts.get(gen.grading, 0) + 1
    # (-1)^i for i >= 0 and (-1)^(i+1) below 0, kept integral
    chi = sum(r if (i % 2 == 0) == (i >= 0) else -r for i, r in counts.items())
    return dict(sorted(counts.items())), chi


def mutate_sign(g: CEDGA, name: str, word: tuple) -> CEDGA:
    """Copy of ``g`` with the coefficient of ``word`` in ``d(name)`` negated."""
    diff = {k: dict(v) for k, v in g.differential.items()}
    diff[name][word] = -diff[name][word]
    return CEDGA(list(g.generators), diff, list(g.disks), g.tb)
