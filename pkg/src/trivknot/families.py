"""Standard diagrams of 2-bridge and pretzel knots.

2-bridge diagrams ``D(a_1, ..., a_m)`` are built as 4-plats on four
horizontal positions (0 = top).  Box ``a_i`` twists positions 1-2 when
``i`` is odd (lower row) and positions 0-1 when ``i`` is even (upper row).
The left end is closed by caps 0-1 and 2-3; the right end by the same
caps when ``m`` is odd and by caps 1-2 and 0-3 when ``m`` is even.  Lower
boxes carry the over-strand on NW-SE, upper boxes on NE-SW, which makes
the diagram alternating and type-1a words positive.

Pretzel diagrams ``P(p_1, ..., p_2n)`` are vertical twist columns joined
left to right at top and bottom, with outer arcs closing the first column
to the last.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .codes import GaussCode
from .errors import GaussSyntaxError, HypothesisViolated, NotAKnot, NotUniformError
from .planar import PlanarBuilder, TracedDiagram, trace

LOWER_OVER = 1
UPPER_OVER = 0


class Kind(str, enum.Enum):
    TYPE1A = "1a"
    TYPE1B = "1b"
    TYPE2A = "2a"
    TYPE2B = "2b"
    NOT_UNIFORM = "NotUniform"


# Sign of every crossing of a uniform standard diagram, by type.  The odd-m
# assignment follows from D(3) being the positive trefoil.
PREDICTED_SIGN = {Kind.TYPE1A: 1, Kind.TYPE1B: -1, Kind.TYPE2A: -1, Kind.TYPE2B: 1}

# Parity of the box index whose boxes are I-chords, by type.
I_BOX_PARITY = {Kind.TYPE1A: 1, Kind.TYPE1B: 0, Kind.TYPE2A: 0, Kind.TYPE2B: 1}

CASE_PARAMETER = {Kind.TYPE1A: "r", Kind.TYPE1B: "s", Kind.TYPE2A: "t", Kind.TYPE2B: "u"}


@dataclass(frozen=True)
class TwoBridgeWord:
    a: tuple[int, ...]

    def __post_init__(self):
        if not self.a:
            raise ValueError("a 2-bridge word needs at least one box")
        if any(x < 1 for x in self.a):
            raise ValueError(f"box values must be positive: {self.a}")

    def __len__(self):
        return len(self.a)

    def __str__(self):
        return ",".join(map(str, self.a))


@dataclass(frozen=True)
class PretzelWord:
    p: tuple[int, ...]

    def __post_init__(self):
        if not self.p or len(self.p) % 2:
            raise ValueError("a pretzel word needs an even, positive number of columns")
        if any(x < 1 for x in self.p):
            raise ValueError(f"column values must be positive: {self.p}")

    def __str__(self):
        return ",".join(map(str, self.p))


def parse_int_word(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise GaussSyntaxError(f"bad word {text!r}") from exc
    if any(v < 1 for v in values):
        raise GaussSyntaxError(f"word entries must be positive: {text!r}")
    return values


@dataclass(frozen=True)
class DiagramClass:
    kind: Kind
    predicted_sign: int | None
    b: tuple[int, ...] = ()
    c: tuple[int, ...] = ()
    parameter: str | None = None
    # (b-box indices, c-group member indices), 0-based positions in the word
    b_boxes: tuple[int, ...] = ()
    c_groups: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def uniform(self) -> bool:
        return self.kind is not Kind.NOT_UNIFORM


def _odd(x):
    return x % 2 == 1


def classify(word: TwoBridgeWord) -> DiagramClass:
    a = (None,) + word.a  # 1-based
    m = len(word.a)
    if m % 2 == 0:
        n = m // 2
        odd_sum = sum(a[2 * i - 1] for i in range(1, n + 1))
        even_sum = sum(a[2 * i] for i in range(1, n + 1))
        if (
            all(not _odd(a[2 * i]) for i in range(1, n))
            and _odd(a[2 * n])
            and not _odd(odd_sum)
        ):
            kind = Kind.TYPE1A
        elif (
            _odd(a[1])
            and all(not _odd(a[2 * i - 1]) for i in range(2, n + 1))
            and not _odd(even_sum)
        ):
            kind = Kind.TYPE1B
        else:
            kind = Kind.NOT_UNIFORM
    else:
        n = (m - 1) // 2
        odd_sum = sum(a[2 * i - 1] for i in range(1, n + 2))
        even_sum = sum(a[2 * i] for i in range(1, n + 1))
        if (
            all(not _odd(a[2 * i - 1]) for i in range(2, n + 1))
            and _odd(a[1])
            and _odd(a[2 * n + 1])
            and _odd(even_sum)
        ):
            kind = Kind.TYPE2A
        elif all(not _odd(a[2 * i]) for i in range(1, n + 1)) and _odd(odd_sum):
            kind = Kind.TYPE2B
        else:
            kind = Kind.NOT_UNIFORM
    return DiagramClass(kind, PREDICTED_SIGN.get(kind))


@dataclass(frozen=True)
class StandardDiagram:
    """A generated knot diagram together with its twist-box bookkeeping.

    ``boxes[i]`` lists the Gauss-code crossing ids of box ``i`` from left
    to right (top to bottom for pretzel columns); ``parallel[i]`` records
    whether both strands traverse box ``i`` in the same direction.
    """

    code: GaussCode
    boxes: tuple[tuple[int, ...], ...]
    parallel: tuple[bool, ...]


def _finish(builder, raw_boxes, word) -> StandardDiagram:
    traced: TracedDiagram = trace(builder)
    if traced.components != 1:
        raise NotAKnot(f"{word} gives a {traced.components}-component link")
    code_id = {c: i + 1 for i, c in enumerate(traced.order)}
    boxes, parallel = [], []
    for box in raw_boxes:
        boxes.append(tuple(code_id[c] for c in box))
        # strands through one crossing enter on the same side iff parallel
        kinds = set()
        for c in box:
            o, u = traced.entry[c]
            kinds.add(_side(o, builder.vertical) == _side(u, builder.vertical))
        (flag,) = kinds
        parallel.append(flag)
    return StandardDiagram(traced.code, tuple(boxes), tuple(parallel))


def _side(slot, vertical):
    # horizontal twists: west slots 1, 2; vertical twists: north slots 0, 1
    return slot in ((0, 1) if vertical else (1, 2))


def two_bridge_diagram(word: TwoBridgeWord) -> StandardDiagram:
    b = PlanarBuilder()
    left_top, left_bottom = b.cap(), b.cap()
    front = {0: left_top, 1: left_top, 2: left_bottom, 3: left_bottom}
    raw_boxes = []
    for i, count in enumerate(word.a, 1):
        top, over = (1, LOWER_OVER) if i % 2 else (0, UPPER_OVER)
        box = []
        for _ in range(count):
            c = b.crossing(over)
            b.join(front[top], ("x", c, 1))
            b.join(front[top + 1], ("x", c, 2))
            front[top], front[top + 1] = ("x", c, 0), ("x", c, 3)
            box.append(c)
        raw_boxes.append(box)
    if len(word.a) % 2:
        b.join(front[0], front[1])
        b.join(front[2], front[3])
    else:
        b.join(front[1], front[2])
        b.join(front[0], front[3])
    return _finish(b, raw_boxes, f"D({word})")


def build_two_bridge(word: TwoBridgeWord) -> GaussCode:
    return two_bridge_diagram(word).code


def check_pretzel_hypothesis(word: PretzelWord):
    *head, last = word.p
    if last % 2 or any(x % 2 == 0 for x in head):
        raise HypothesisViolated(f"P({word}) needs p_2n even and every other p_i odd")


def pretzel_diagram(word: PretzelWord) -> StandardDiagram:
    check_pretzel_hypothesis(word)
    b = PlanarBuilder(vertical=True)
    columns = []
    for count in word.p:
        col = [b.crossing(0) for _ in range(count)]
        for upper, lower in zip(col, col[1:]):
            b.join(("x", upper, 2), ("x", lower, 1))
            b.join(("x", upper, 3), ("x", lower, 0))
        columns.append(col)
    for left, right in zip(columns, columns[1:]):
        b.join(("x", left[0], 0), ("x", right[0], 1))
        b.join(("x", left[-1], 3), ("x", right[-1], 2))
    b.join(("x", columns[0][0], 1), ("x", columns[-1][0], 0))
    b.join(("x", columns[0][-1], 2), ("x", columns[-1][-1], 3))
    return _finish(b, columns, f"P({word})")


def build_pretzel(word: PretzelWord) -> GaussCode:
    return pretzel_diagram(word).code


def box_kinds(word: TwoBridgeWord) -> list[str]:
    """``"I"`` when both strands enter a box from the same side, else ``"P"``."""
    if not classify(word).uniform:
        raise NotUniformError(f"D({word}) is not a positive or negative diagram")
    return ["I" if par else "P" for par in two_bridge_diagram(word).parallel]


def decompose_bc(word: TwoBridgeWord, cls: DiagramClass | None = None) -> DiagramClass:
    """Fill in the odd I-boxes ``b`` and the grouped P-box sums ``c``.

    The I-boxes are the boxes whose index has parity ``I_BOX_PARITY``; the
    odd-valued ones are the ``b``s.  ``c[j]`` sums the P-boxes lying
    between ``b_j`` and ``b_{j+1}`` (``c[0]`` left of ``b_1``, ``c[-1]``
    right of the last ``b``).
    """
    cls = cls or classify(word)
    if not cls.uniform:
        raise NotUniformError(f"D({word}) is not a positive or negative diagram")
    parity = I_BOX_PARITY[cls.kind]
    b_boxes, groups, current = [], [], []
    for i, x in enumerate(word.a, 1):
        if i % 2 == parity:
            if x % 2:
                b_boxes.append(i - 1)
                groups.append(tuple(current))
                current = []
        else:
            current.append(i - 1)
    groups.append(tuple(current))
    return replace(
        cls,
        b=tuple(word.a[i] for i in b_boxes),
        c=tuple(sum(word.a[i] for i in g) for g in groups),
        parameter=CASE_PARAMETER[cls.kind],
        b_boxes=tuple(b_boxes),
        c_groups=tuple(groups),
    )


def fraction(word: TwoBridgeWord) -> tuple[int, int]:
    """``a_m + 1/(a_{m-1} + ... + 1/a_1)`` in lowest terms."""
    f = Fraction(word.a[0])
    for x in word.a[1:]:
        f = x + 1 / f
    return f.numerator, f.denominator


def _csum(c, lo, hi, index):
    """``sum(c[index(j)] for lo <= j <= hi)``; empty ranges give 0."""
    return sum(c[index(j)] for j in range(lo, hi + 1))


def closed_form_terms(word: TwoBridgeWord, amended: bool = False) -> list[int]:
    """Every candidate inside the min of the case formula for ``word``.

    The free index runs over the deletions the case analysis walks through:
    type 1a ``0 <= p < r``, type 1b ``0 <= p < s``, type 2a ``0 <= p <= t``,
    type 2b ``-1 <= p < u``.  With ``amended`` the type-2a list gains the
    option of deleting both flank groups and keeping one I-chord, which the
    plain type-2a formula misses once there are three or more ``b`` boxes.
    """
    cls = decompose_bc(word)
    b, c, kind = cls.b, cls.c, cls.kind
    base = sum(x for i, x in enumerate(word.a, 1) if i % 2 == I_BOX_PARITY[kind])
    odd = lambda j: 2 * j - 1  # noqa: E731
    even = lambda j: 2 * j  # noqa: E731
    odd_from0 = lambda j: 2 * j + 1  # noqa: E731

    if kind in (Kind.TYPE1A, Kind.TYPE1B) and not b:
        return [base]
    if kind is Kind.TYPE1A:
        r = len(b) // 2
        terms = [base + _csum(c, 1, r, odd)]
        terms += [
            base + _csum(c, 1, p, odd) + _csum(c, p + 1, r, even) - 1 for p in range(r)
        ]
    elif kind is Kind.TYPE1B:
        s = len(b) // 2
        terms = [base + _csum(c, 1, s, odd)]
        terms += [
            base + _csum(c, 0, p, even) + _csum(c, p + 2, s, odd) - 1 for p in range(s)
        ]
    elif kind is Kind.TYPE2A:
        t = (len(b) - 1) // 2
        terms = [base + _csum(c, 0, t, odd_from0)]
        terms += [
            base + _csum(c, 0, p, even) + _csum(c, p + 1, t, odd_from0) for p in range(t + 1)
        ]
        if amended:
            terms.append(base + c[0] + c[2 * t + 1] - 1)
    else:
        u = (len(b) - 1) // 2
        terms = [
            base + _csum(c, 0, p, odd_from0) + _csum(c, p + 2, u, even) - 1
            for p in range(-1, u)
        ]
    return terms


def tr_closed_form_two_bridge(word: TwoBridgeWord, amended: bool = False) -> int:
    return min(closed_form_terms(word, amended))


def tr_closed_form_pretzel(word: PretzelWord) -> int:
    check_pretzel_hypothesis(word)
    return sum(word.p) - len(word.p) + 1
