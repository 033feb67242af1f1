"""Signed Gauss codes, projection words and face tracing.

A :class:`GaussCode` is read once around the knot.  Each pass through a
crossing records the crossing id, whether the strand goes over or under,
and the crossing sign.  Text form::

    O1+ U2+ O3+ U1+ O2+ U3+

Rotation convention
-------------------
Edge ``k`` runs from pass ``k`` to pass ``k + 1`` (cyclically).  At a
crossing the four edge ends are listed counter-clockwise as::

    positive:  over-in, under-in,  over-out, under-out
    negative:  over-in, under-out, over-out, under-in

so a crossing is positive exactly when the under strand points a quarter
turn counter-clockwise from the over strand.  Mirroring (swap over/under
and negate the sign) gives the same rotation, which is why the projection
and the face structure of ``D`` and ``D*`` coincide.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import GaussSyntaxError, StructureError, Unrealizable

_TOKEN = re.compile(r"^([OU])(\d+)([+\-−])$")


class Pass(NamedTuple):
    crossing: int
    over: bool
    sign: int


@dataclass(frozen=True)
class GaussCode:
    passes: tuple[Pass, ...]

    def __post_init__(self):
        _validate(self.passes)

    @property
    def crossings(self) -> int:
        return len(self.passes) // 2

    def crossing_signs(self) -> dict[int, int]:
        return {p.crossing: p.sign for p in self.passes}

    def __str__(self):
        return format_gauss(self)


@dataclass(frozen=True)
class ProjectionWord:
    symbols: tuple[int, ...]

    def __post_init__(self):
        counts: dict[int, int] = {}
        for s in self.symbols:
            counts[s] = counts.get(s, 0) + 1
        bad = sorted(s for s, c in counts.items() if c != 2)
        if bad:
            raise StructureError(f"symbols {bad} do not occur exactly twice")

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return " ".join(str(s) for s in self.symbols)


@dataclass(frozen=True)
class FaceSet:
    """Faces of the 4-valent plane map behind a Gauss code.

    ``faces[f]`` is the cyclic list of darts ``(edge, direction)`` bounding
    face ``f``; ``corners[f]`` lists ``(crossing, k)`` for every corner of the
    face, where ``k`` indexes the gap between rotation slots ``k`` and ``k+1``.
    """

    faces: tuple[tuple[tuple[int, int], ...], ...]
    corners: tuple[tuple[tuple[int, int], ...], ...]
    V: int
    E: int

    @property
    def F(self) -> int:
        return len(self.faces)


def _validate(passes):
    seen: dict[int, list[Pass]] = {}
    for p in passes:
        if p.crossing < 1:
            raise StructureError(f"crossing id must be positive, got {p.crossing}")
        if p.sign not in (1, -1):
            raise StructureError(f"sign must be +1 or -1, got {p.sign}")
        seen.setdefault(p.crossing, []).append(p)
    for cid, ps in seen.items():
        if len(ps) != 2:
            raise StructureError(f"crossing {cid} occurs {len(ps)} times")
        a, b = ps
        if a.over == b.over:
            raise StructureError(f"crossing {cid} has two {'over' if a.over else 'under'} passes")
        if a.sign != b.sign:
            raise StructureError(f"crossing {cid} has inconsistent signs")


def _renumber(passes) -> tuple[Pass, ...]:
    order: dict[int, int] = {}
    for p in passes:
        if p.crossing not in order:
            order[p.crossing] = len(order) + 1
    return tuple(Pass(order[p.crossing], p.over, p.sign) for p in passes)


def make_code(passes) -> GaussCode:
    """Validate and renumber ``passes`` (ids 1..n by first appearance)."""
    passes = tuple(Pass(int(c), bool(o), int(s)) for c, o, s in passes)
    _validate(passes)
    return GaussCode(_renumber(passes))


def parse_gauss(text: str) -> GaussCode:
    passes = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise GaussSyntaxError(f"bad token {tok!r}")
        strand, cid, sign = m.groups()
        if int(cid) == 0:
            raise GaussSyntaxError(f"bad token {tok!r}: crossing ids start at 1")
        passes.append((int(cid), strand == "O", 1 if sign == "+" else -1))
    return make_code(passes)


def format_gauss(code: GaussCode) -> str:
    return " ".join(
        f"{'O' if p.over else 'U'}{p.crossing}{'+' if p.sign > 0 else '-'}" for p in code.passes
    )


def parse_word(text: str) -> ProjectionWord:
    try:
        symbols = tuple(int(t) for t in text.split())
    except ValueError as exc:
        raise GaussSyntaxError(f"bad projection word {text!r}") from exc
    if any(s < 1 for s in symbols):
        raise GaussSyntaxError("projection word ids must be positive")
    return ProjectionWord(symbols)


def mirror(code: GaussCode) -> GaussCode:
    """Swap every over/under decoration (and hence every sign)."""
    return GaussCode(tuple(Pass(p.crossing, not p.over, -p.sign) for p in code.passes))


def projection_of(code: GaussCode) -> ProjectionWord:
    return ProjectionWord(tuple(p.crossing for p in code.passes))


def chord_diagram(word: ProjectionWord):
    from .chords import ChordDiagram

    return ChordDiagram.from_word(word.symbols)


def is_alternating(code: GaussCode) -> bool:
    ps = code.passes
    return all(ps[i].over != ps[(i + 1) % len(ps)].over for i in range(len(ps)))


def rotations(code: GaussCode) -> dict[int, list[tuple[str, int]]]:
    """Counter-clockwise edge ends ``("in"|"out", pass index)`` per crossing."""
    where: dict[int, dict[bool, int]] = {}
    for k, p in enumerate(code.passes):
        where.setdefault(p.crossing, {})[p.over] = k
    rot = {}
    for cid, w in where.items():
        o, u = w[True], w[False]
        if code.passes[o].sign > 0:
            rot[cid] = [("in", o), ("in", u), ("out", o), ("out", u)]
        else:
            rot[cid] = [("in", o), ("out", u), ("out", o), ("in", u)]
    return rot


def trace_faces(code: GaussCode) -> FaceSet:
    """Walk every face of the plane map; raise if Euler's formula fails."""
    n = len(code.passes)
    if n == 0:
        raise Unrealizable("the empty code has no crossings to trace")
    rot = rotations(code)
    slot = {}
    for cid, ends in rot.items():
        for i, end in enumerate(ends):
            slot[end] = (cid, i)

    def arrival(dart):
        e, d = dart
        return ("in", (e + 1) % n) if d == 0 else ("out", e)

    def leave(end):
        kind, k = end
        return (k, 0) if kind == "out" else ((k - 1) % n, 1)

    unvisited = {(e, d) for e in range(n) for d in (0, 1)}
    faces, corners = [], []
    while unvisited:
        start = min(unvisited)
        dart, face, corner = start, [], []
        while True:
            unvisited.discard(dart)
            face.append(dart)
            cid, i = slot[arrival(dart)]
            j = (i - 1) % 4
            corner.append((cid, j))
            dart = leave(rot[cid][j])
            if dart == start:
                break
        faces.append(tuple(face))
        corners.append(tuple(corner))
    V, E = n // 2, n
    fs = FaceSet(tuple(faces), tuple(corners), V, E)
    if fs.F != V + 2:
        raise Unrealizable(f"V - E + F = {V - E + fs.F}, expected 2")
    return fs
