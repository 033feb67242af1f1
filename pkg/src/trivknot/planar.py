"""Planar crossing builder used by the family generators.

Every crossing has four slots numbered counter-clockwise.  Horizontal
crossings (4-plat twists) use ``0=NE, 1=NW, 2=SW, 3=SE``; vertical ones
(pretzel columns) use the same compass layout, so a strand always runs
between opposite slots ``k`` and ``k+2``.  ``over`` names the slot pair
carrying the over-strand: ``0`` for NE-SW, ``1`` for NW-SE.

Endpoints are joined pairwise; virtual endpoints (closing caps) have
degree two and are spliced out when the map is resolved.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import GaussCode, make_code


@dataclass
class PlanarBuilder:
    over: list[int] = field(default_factory=list)
    links: dict = field(default_factory=dict)
    vertical: bool = False
    _virtual: int = 0

    def crossing(self, over: int) -> int:
        self.over.append(over)
        return len(self.over) - 1

    def cap(self) -> tuple:
        self._virtual += 1
        return ("v", self._virtual)

    def join(self, a: tuple, b: tuple):
        for x, y in ((a, b), (b, a)):
            self.links.setdefault(x, []).append(y)

    def _follow(self, prev, here):
        while here[0] == "v":
            nxt = [e for e in self.links[here] if e != prev]
            if not nxt:
                # cap joined to itself: both neighbours are prev
                nxt = [prev]
            prev, here = here, nxt[0]
        return here

    def resolve(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Map each crossing slot ``(c, k)`` to the slot it is wired to."""
        wire = {}
        for c in range(len(self.over)):
            for k in range(4):
                (nb,) = self.links[("x", c, k)]
                end = self._follow(("x", c, k), nb)
                wire[(c, k)] = (end[1], end[2])
        return wire

    def free_loops(self) -> int:
        """Closed components that meet no crossing."""
        seen, loops = set(), 0
        for node in self.links:
            if node[0] != "v" or node in seen:
                continue
            stack, touches = [node], False
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                for y in self.links[x]:
                    if y[0] == "x":
                        touches = True
                    elif y not in seen:
                        stack.append(y)
            loops += not touches
        return loops


@dataclass(frozen=True)
class TracedDiagram:
    """A traced planar diagram.

    ``components`` counts closed curves.  For a knot, ``code`` is the
    signed Gauss code, ``order[c]`` the builder crossing behind code id
    ``c + 1`` and ``entry[c]`` the two slots (over, under) through which
    the oriented strands enter builder crossing ``c``.
    """

    components: int
    code: GaussCode | None
    order: tuple[int, ...]
    entry: tuple[tuple[int, int], ...]


def trace(builder: PlanarBuilder) -> TracedDiagram:
    wire = builder.resolve()
    n = len(builder.over)
    used = set()
    walks = []
    for c in range(n):
        for k in range(4):
            if (c, k) in used:
                continue
            walk = []
            slot = (c, k)
            while slot not in used:
                cc, kk = slot
                used.add(slot)
                out = (cc, (kk + 2) % 4)
                used.add(out)
                walk.append((cc, kk))
                slot = wire[out]
            walks.append(walk)
    components = len(walks) + builder.free_loops()
    if components != 1:
        return TracedDiagram(components, None, (), ())

    (walk,) = walks
    entry: dict[int, dict[bool, int]] = {}
    for c, k in walk:
        entry.setdefault(c, {})[k % 2 == builder.over[c]] = k
    sign = {}
    for c, e in entry.items():
        sign[c] = 1 if e[False] == (e[True] + 1) % 4 else -1
    passes = [(c + 1, k % 2 == builder.over[c], sign[c]) for c, k in walk]
    code = make_code(passes)
    order = []
    for c, _ in walk:
        if c not in order:
            order.append(c)
    return TracedDiagram(
        1,
        code,
        tuple(order),
        tuple((entry[c][True], entry[c][False]) for c in range(n)),
    )
