"""n-copy satellites with a positive permutation braid at the basepoint, and
the colored ruling polynomial.

The n-copy is the front pushed off vertically n-1 times.  Near a left cusp
the copies come out interleaved (U1 D1 U2 D2 ...) and each upper branch then
crosses the lower branches of the copies above it, leaving U1..Un D1..Dn;
right cusps mirror this.  A companion crossing becomes the n x n block
transposition.  Every strand inherits the Maslov potential of the companion
strand it copies.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .diagram import Event, FrontDiagram, maslov_potential
from .laurent import RationalFunctionS, color_normalizer, eval_laurent_at_z
from .rulings import ruling_polynomial


@dataclass(frozen=True)
class PermutationBraid:
    perm: tuple[int, ...]  # 1-based images: strand at position i ends at perm[i-1]
    word: tuple[int, ...]  # crossing positions, 1-based

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def n(self) -> int:
        return len(self.perm)


def _bubble_word(keys: Sequence) -> list[int]:
    """Adjacent swaps (0-based upper position) that bubble-sort ``keys``."""
    keys = list(keys)
    out = []
    for end in range(len(keys) - 1, 0, -1):
        for j in range(end):
            if keys[j] > keys[j + 1]:
                keys[j], keys[j + 1] = keys[j + 1], keys[j]
                out.append(j)
    return out


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])


def positive_braid(perm: Sequence[int]) -> PermutationBraid:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
    return PermutationBraid(perm, tuple(j + 1 for j in _bubble_word(perm)))


def cycle_count(perm: Sequence[int]) -> int:
    seen = set()
    cycles = 0
    for i in range(1, len(perm) + 1):
        if i in seen:
            continue
        cycles += 1
        while i not in seen:
            seen.add(i)
            i = perm[i - 1]
    return cycles


def satellite_front(d: FrontDiagram, b: PermutationBraid) -> FrontDiagram:
    pot = maslov_potential(d)
    if pot is None:
        raise ValueError("satellites need a front with rotation number 0")
    n = b.n
    events: list[Event] = []
    cur: list[int] = []  # potential of each satellite strand
    gaps: list[tuple[int, ...]] = [()]

    def emit(kind: str, pos: int) -> None:
        events.append(Event(kind, pos))
        if kind == "X":
            cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
        gaps.append(tuple(cur))

    def sort_block(base: int, keys: list) -> None:
        for j in _bubble_word(keys):
            emit("X", base + j)

    for k, ev in enumerate(d.events):
        i = ev.pos
        base = n * i
        if ev.kind == "L":
            mu_u, mu_d = pot(k + 1, i), pot(k + 1, i + 1)
            for c in range(n):
                cur[base + 2 * c:base + 2 * c] = [mu_u, mu_d]
                events.append(Event("L", base + 2 * c))
                gaps.append(tuple(cur))
            # interleaved U1 D1 U2 D2 ... -> U1..Un D1..Dn
            sort_block(base, [(h, c) for c in range(n) for h in (0, 1)])
        elif ev.kind == "R":
            sort_block(base, [(c, h) for h in (0, 1) for c in range(n)])
            for _ in range(n):
                del cur[base:base + 2]
                events.append(Event("R", base))
                gaps.append(tuple(cur))
        elif ev.kind == "X":
            sort_block(base, [1] * n + [0] * n)
        else:
            for j in b.word:
                emit("X", base + j - 1)
    return FrontDiagram(tuple(events), satellite=True, inherited_potential=tuple(gaps))


def all_permutations(n: int) -> list[tuple[int, ...]]:
    return list(itertools.permutations(range(1, n + 1)))


def colored_ruling_polynomial(d: FrontDiagram, n: int) -> RationalFunctionS:
    """(1/c_n) * sum over beta in S_n of s^len(beta) * R^0 of the satellite,
    with z = s - 1/s."""
    total = RationalFunctionS.const(0)
    for perm in all_permutations(n):
        b = positive_braid(perm)
        r = ruling_polynomial(satellite_front(d, b), 0)
        if r:
            total = total + RationalFunctionS.s_power(b.length) * eval_laurent_at_z(r)
    return total / color_normalizer(n)
