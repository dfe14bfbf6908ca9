"""Front diagrams of Legendrian knots as event words.

A front is read left to right as a sequence of events acting on the stack of
strands at the current x-slice (positions count from the top, 1-based in the
file format, 0-based internally):

``L p``  left cusp: two new strands appear at positions p, p+1
``R p``  right cusp: strands p, p+1 end
``X p``  crossing of strands p and p+1
``* p``  basepoint on strand p

The region between event k-1 and event k is *gap* k (gap 0 before the first
event).  A strand segment in a gap is a node ``(gap, position)``; these are the
edges on which Maslov potentials live.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

KINDS = ("L", "R", "X", "*")


class DiagramError(ValueError):
    """Invalid front; ``line``/``col`` locate the problem when parsing."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line, self.col = line, col
        where = f"line {line}, col {col}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class Event:
    kind: str
    pos: int  # 0-based

    def __str__(self) -> str:
        return f"{self.kind} {self.pos + 1}"


@dataclass(frozen=True)
class FrontDiagram:
    events: tuple[Event, ...]
    satellite: bool = False
    # satellites carry a potential inherited from the companion: one tuple per
    # gap, one entry per strand position
    inherited_potential: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        _validate(self)

    # -- slice structure -------------------------------------------------
    @property
    def widths(self) -> list[int]:
        out = [0]
        for ev in self.events:
            w = out[-1]
            out.append(w + 2 if ev.kind == "L" else w - 2 if ev.kind == "R" else w)
        return out

    def right_map(self, k: int) -> dict[int, int]:
        """Position map gap k -> gap k+1 across event k (cusp strands omitted)."""
        ev = self.events[k]
        w = self.widths[k]
        i = ev.pos
        out = {}
        for j in range(w):
            if ev.kind == "L":
                out[j] = j if j < i else j + 2
            elif ev.kind == "R":
                if j in (i, i + 1):
                    continue
                out[j] = j if j < i else j - 2
            elif ev.kind == "X" and j in (i, i + 1):
                out[j] = 2 * i + 1 - j
            else:
                out[j] = j
        return out

    def basepoints(self) -> list[int]:
        return [k for k, ev in enumerate(self.events) if ev.kind == "*"]

    @property
    def crossings(self) -> list[int]:
        return [k for k, ev in enumerate(self.events) if ev.kind == "X"]

    @property
    def right_cusps(self) -> list[int]:
        return [k for k, ev in enumerate(self.events) if ev.kind == "R"]

    @property
    def left_cusps(self) -> list[int]:
        return [k for k, ev in enumerate(self.events) if ev.kind == "L"]

    def serialize(self) -> str:
        head = "# satellite\n" if self.satellite else ""
        return head + "".join(f"{ev}\n" for ev in self.events)

    # -- traversal -------------------------------------------------------
    def components(self) -> list[list[tuple[int, int, int]]]:
        """Closed components as lists of ``(gap, position, direction)``.

        Direction +1 means the strand is traversed rightward.  Each component
        starts at its lexicographically first node, traversed so that the
        first step is rightward; the knot's basepoint component is instead
        oriented so the basepoint strand runs leftward (see
        :func:`orientation`).
        """
        widths = self.widths
        seen: set[tuple[int, int]] = set()
        comps = []
        for g in range(len(widths)):
            for j in range(widths[g]):
                if (g, j) in seen:
                    continue
                comp = list(self._trace(g, j, +1))
                for gg, jj, _ in comp:
                    seen.add((gg, jj))
                comps.append(comp)
        return comps

    def _trace(self, g: int, j: int, d: int) -> Iterator[tuple[int, int, int]]:
        rmaps = [self.right_map(k) for k in range(len(self.events))]
        lmaps = [{v: u for u, v in m.items()} for m in rmaps]
        start = (g, j, d)
        state = start
        while True:
            yield state
            g, j, d = state
            if d > 0:
                ev = self.events[g]
                if ev.kind == "R" and j in (ev.pos, ev.pos + 1):
                    state = (g, 2 * ev.pos + 1 - j, -1)
                else:
                    state = (g + 1, rmaps[g][j], +1)
            else:
                ev = self.events[g - 1]
                if ev.kind == "L" and j in (ev.pos, ev.pos + 1):
                    state = (g, 2 * ev.pos + 1 - j, +1)
                else:
                    state = (g - 1, lmaps[g - 1][j], -1)
            if state == start:
                return
            if (state[0], state[1]) == (start[0], start[1]):  # pragma: no cover
                raise DiagramError("inconsistent traversal")


def plat_problem(d: FrontDiagram) -> str | None:
    """Why ``d`` is not in plat position, or ``None`` if it is.

    Plat position: every left cusp comes before every crossing, every right
    cusp comes after every crossing, and cusps are stacked rather than nested
    (each cusp joins strands 2j+1 and 2j+2 for some j).  Basepoints may sit
    anywhere.
    """
    phase = 0
    order = {"L": 0, "X": 1, "R": 2}
    for k, ev in enumerate(d.events):
        if ev.kind == "*":
            continue
        p = order[ev.kind]
        if p < phase:
            return f"{ev.kind} at event {k + 1} comes after a later-phase event"
        phase = p
        if ev.kind in "LR" and ev.pos % 2:
            return f"cusp at event {k + 1} is nested (position {ev.pos + 1} is even)"
    return None


def _validate(d: FrontDiagram) -> None:
    w = 0
    for k, ev in enumerate(d.events):
        if ev.kind not in KINDS:
            raise DiagramError(f"unknown event kind {ev.kind!r} (event {k + 1})")
        lim = w + 1 if ev.kind == "L" else w - 1 if ev.kind in "RX" else w
        if not 0 <= ev.pos < max(lim, 0) or (ev.kind in "RX" and w < 2):
            raise DiagramError(f"invalid position {ev.pos + 1} for {ev.kind} at event {k + 1} with {w} strands")
        w += 2 if ev.kind == "L" else -2 if ev.kind == "R" else 0
    if w != 0:
        raise DiagramError(f"unbalanced cusps: {w} strands remain open at the right end")
    if d.satellite:
        return
    nb = len(d.basepoints())
    if nb == 0:
        raise DiagramError("no basepoint")
    if nb > 1:
        raise DiagramError(f"multiple basepoints ({nb})")
    if not d.events:
        raise DiagramError("empty diagram")
    if len(d.components()) != 1:
        raise DiagramError(f"multiple components ({len(d.components())}); a knot is required")


def parse_front(text: str, satellite: bool | None = None) -> FrontDiagram:
    """Parse the line-oriented front format."""
    events = []
    sat = False
    for ln, raw in enumerate(text.splitlines(), start=1):
        if raw.strip().lower() == "# satellite":
            sat = True
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = line.split()
        if len(toks) == 1 and len(toks[0]) > 1 and toks[0][0] in KINDS:
            toks = [toks[0][0], toks[0][1:]]  # compact form such as "X2"
        col = raw.index(toks[0]) + 1
        if toks[0] not in KINDS:
            raise DiagramError(f"unknown event {toks[0]!r}", ln, col)
        if len(toks) != 2:
            raise DiagramError(f"expected '<kind> <position>', got {line.strip()!r}", ln, col)
        try:
            p = int(toks[1])
        except ValueError:
            raise DiagramError(f"position {toks[1]!r} is not an integer", ln, raw.index(toks[1]) + 1) from None
        if p < 1:
            raise DiagramError(f"invalid position {p}", ln, raw.index(toks[1]) + 1)
        events.append((Event(toks[0], p - 1), ln, col))
    if satellite is not None:
        sat = satellite
    # locate the first failing event to report its line
    for cut in range(1, len(events) + 1):
        try:
            _check_prefix([e for e, _, _ in events[:cut]])
        except DiagramError as err:
            _, ln, col = events[cut - 1]
            raise DiagramError(str(err), ln, col) from None
    return FrontDiagram(tuple(e for e, _, _ in events), satellite=sat)


def _check_prefix(events: list[Event]) -> None:
    w = 0
    for k, ev in enumerate(events):
        lim = w + 1 if ev.kind == "L" else w - 1 if ev.kind in "RX" else w
        if not 0 <= ev.pos < max(lim, 0):
            raise DiagramError(f"invalid position {ev.pos + 1} for {ev.kind} with {w} strands")
        w += 2 if ev.kind == "L" else -2 if ev.kind == "R" else 0


# --- classical invariants --------------------------------------------------


@dataclass(frozen=True)
class MaslovPotential:
    values: tuple[tuple[int, ...], ...]  # per gap, per position

    def __call__(self, gap: int, pos: int) -> int:
        return self.values[gap][pos]


@dataclass(frozen=True)
class ClassicalInvariants:
    tb: int
    r: int
    writhe: int
    right_cusps: int
    crossing_gradings: dict[int, int] | None  # event index -> grading
    potential: MaslovPotential | None


def orientation(d: FrontDiagram) -> dict[tuple[int, int], int]:
    """Direction (+1 rightward / -1 leftward) of every node.

    For a knot the orientation is fixed so the basepoint strand is traversed
    leftward; satellite components keep their traversal default.
    """
    out: dict[tuple[int, int], int] = {}
    bps = d.basepoints()
    for comp in d.components():
        flip = 1
        if bps:
            k = bps[0]
            node = (k, d.events[k].pos)
            for g, j, dd in comp:
                if (g, j) == node:
                    flip = -1 if dd > 0 else 1
        for g, j, dd in comp:
            out[(g, j)] = dd * flip
    return out


def writhe(d: FrontDiagram) -> int:
    ori = orientation(d)
    w = 0
    for k in d.crossings:
        i = d.events[k].pos
        w += 1 if ori[(k, i)] == ori[(k, i + 1)] else -1
    return w


def _potential_and_rotation(d: FrontDiagram) -> tuple[dict[tuple[int, int], int] | None, int]:
    """Integer potential normalized at the basepoint, and the rotation number
    (first component for links)."""
    comps = d.components()
    pot: dict[tuple[int, int], int] = {}
    r_total = 0
    ok = True
    for comp in comps:
        start_idx = 0
        bps = d.basepoints()
        if bps:
            node = (bps[0], d.events[bps[0]].pos)
            for idx, (g, j, _) in enumerate(comp):
                if (g, j) == node:
                    start_idx = idx
        seq = comp[start_idx:] + comp[:start_idx]
        val = 0
        local = {}
        prev = None
        for g, j, dd in seq + [seq[0]]:
            if prev is not None:
                pg, pj, pd = prev
                if pd != dd:  # passed a cusp: same gap, other strand of the pair
                    val += 1 if j < pj else -1
            if (g, j) in local and prev is not None:
                break
            local[(g, j)] = val
            prev = (g, j, dd)
        # val is the potential after returning to the start node
        drift = val - local[(seq[0][0], seq[0][1])]
        if drift:
            ok = False
            r_total = r_total or drift // 2
        pot.update(local)
    return (pot if ok else None), r_total


def maslov_potential(d: FrontDiagram) -> MaslovPotential | None:
    if d.inherited_potential is not None:
        return MaslovPotential(d.inherited_potential)
    pot, _ = _potential_and_rotation(d)
    if pot is None:
        return None
    widths = d.widths
    return MaslovPotential(tuple(tuple(pot[(g, j)] for j in range(widths[g])) for g in range(len(widths))))


def rotation_number(d: FrontDiagram) -> int:
    """r = (#downward cusps - #upward cusps) / 2 along the orientation."""
    ori = orientation(d)
    down = up = 0
    for k, ev in enumerate(d.events):
        if ev.kind == "L":
            i = ev.pos
            # traversal leaves the cusp along the strand with direction +1
            if ori[(k + 1, i)] < 0:  # arrive on upper strand moving left
                down += 1
            else:
                up += 1
        elif ev.kind == "R":
            i = ev.pos
            if ori[(k, i)] > 0:  # arrive on upper strand moving right
                down += 1
            else:
                up += 1
    return (down - up) // 2


def crossing_grading(d: FrontDiagram, pot: MaslovPotential, k: int) -> int:
    """Grading of the chord at crossing event ``k``: potential of the strand
    descending through the crossing minus that of the ascending strand."""
    i = d.events[k].pos
    return pot(k, i) - pot(k, i + 1)


def classical_invariants(d: FrontDiagram) -> ClassicalInvariants:
    w = writhe(d)
    rc = len(d.right_cusps)
    r = rotation_number(d)
    pot = maslov_potential(d) if r == 0 else None
    grades = {k: crossing_grading(d, pot, k) for k in d.crossings} if pot else None
    return ClassicalInvariants(tb=w - rc, r=r, writhe=w, right_cusps=rc, crossing_gradings=grades, potential=pot)


CATALOG_TEXT = {
    "unknot": "L 1\n* 1\nR 1\n",
    "trefoil": "L 1\nL 1\nX 2\nX 2\nX 2\n* 1\nR 1\nR 1\n",
    # one downward and one upward zigzag on the top strand
    "unknot_s2": "L 1\nL 1\nX 1\nX 1\nX 2\n* 1\nR 1\nR 1\n",
    "figure8": "L 1\nL 3\nX 2\nX 2\nX 2\nX 1\nX 1\nX 1\nX 2\n* 1\nR 3\nR 1\n",
}


def catalog(name: str) -> FrontDiagram:
    try:
        return parse_front(CATALOG_TEXT[name])
    except KeyError:
        raise KeyError(f"unknown catalog knot {name!r}; choose from {sorted(CATALOG_TEXT)}") from None
