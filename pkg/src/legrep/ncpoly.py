"""Noncommutative polynomials over Z with invertible degree-0 letters.

A word is a tuple of letters.  A letter is either a generator name (``str``)
or an invertible letter ``("t", label, e)`` standing for ``t_label ** e``;
adjacent invertible letters with the same label are merged.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

Letter = object
Word = tuple
NCPoly = dict  # Word -> int, no zero coefficients


def t_letter(label, e: int = 1) -> tuple:
    return ("t", label, e)


def is_t(letter) -> bool:
    return isinstance(letter, tuple)


def normalize(word: Iterable) -> Word:
    out: list = []
    for x in word:
        if is_t(x) and out and is_t(out[-1]) and out[-1][1] == x[1]:
            e = out[-1][2] + x[2]
            out.pop()
            if e:
                out.append(("t", x[1], e))
        elif is_t(x) and x[2] == 0:
            continue
        else:
            out.append(x)
    return tuple(out)


def poly(*terms: tuple[int, Iterable]) -> NCPoly:
    out: NCPoly = {}
    for c, w in terms:
        add_term(out, normalize(w), c)
    return out


def add_term(p: NCPoly, w: Word, c: int) -> None:
    if not c:
        return
    v = p.get(w, 0) + c
    if v:
        p[w] = v
    else:
        p.pop(w, None)


def padd(*ps: Mapping) -> NCPoly:
    out: NCPoly = {}
    for p in ps:
        for w, c in p.items():
            add_term(out, w, c)
    return out


def pscale(p: Mapping, c: int) -> NCPoly:
    return {w: c * v for w, v in p.items()} if c else {}


def pmul(p: Mapping, q: Mapping) -> NCPoly:
    out: NCPoly = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            add_term(out, normalize(w1 + w2), c1 * c2)
    return out


ONE: NCPoly = {(): 1}


def word_degree(w: Word, degree: Mapping[str, int]) -> int:
    return sum(degree[x] for x in w if not is_t(x))


def apply_differential(
    p: Mapping, d: Mapping[str, Mapping], degree: Mapping[str, int]
) -> NCPoly:
    """Extend ``d`` (given on generators) to ``p`` by the signed Leibniz rule;
    invertible letters are cycles."""
    out: NCPoly = {}
    for w, c in p.items():
        sign = 1
        for i, x in enumerate(w):
            if is_t(x):
                continue
            dx = d.get(x)
            if dx:
                pre, post = w[:i], w[i + 1:]
                for dw, dc in dx.items():
                    add_term(out, normalize(pre + dw + post), sign * c * dc)
            if degree[x] % 2:
                sign = -sign
    return out


def substitute(
    p: Mapping, images: Callable[[object], Mapping]
) -> NCPoly:
    """Algebra map defined letter by letter (``images(letter)`` is a poly)."""
    out: NCPoly = {}
    for w, c in p.items():
        acc: NCPoly = {(): c}
        for x in w:
            acc = pmul(acc, images(x))
            if not acc:
                break
        for ww, cc in acc.items():
            add_term(out, ww, cc)
    return out


def format_letter(x) -> str:
    if is_t(x):
        lab = "" if x[1] is None else str(x[1])
        return f"t{lab}^{x[2]}"
    return str(x)


def format_poly(p: Mapping) -> str:
    if not p:
        return "0"
    parts = []
    for w in sorted(p, key=lambda w: (len(w), [format_letter(x) for x in w])):
        c = p[w]
        body = "*".join(format_letter(x) for x in w) or "1"
        if w and abs(c) == 1:
            mono = body
        elif w:
            mono = f"{abs(c)}*{body}"
        else:
            mono = str(abs(c))
        parts.append(("-" if c < 0 else "+", mono))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {m}" for s, m in parts[1:])


def check_differential(
    gens: Iterable[str], d: Mapping[str, Mapping], degree: Mapping[str, int]
) -> tuple[bool, str | None, object]:
    """Check deg(d) = -1 on every generator and d^2 = 0.

    Returns ``(ok, failing_generator, witness)`` where the witness is the
    first offending word (with its coefficient) in a deterministic order.
    """
    for g in gens:
        for w in sorted(d.get(g, {}), key=repr):
            if word_degree(w, degree) != degree[g] - 1:
                return False, g, ("degree", w, d[g][w])
    for g in gens:
        dd = apply_differential(d.get(g, {}), d, degree)
        if dd:
            w = min(dd, key=repr)
            return False, g, ("d^2", w, dd[w])
    return True, None, None
