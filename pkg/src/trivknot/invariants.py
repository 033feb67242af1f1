"""Writhe, checkerboard counts, signature and unknotting bounds.

Shading rule: at every crossing, rotate the under-strand clockwise onto
the over-strand; the two corners it sweeps are shaded (class ``B``).  In
the rotation of :mod:`trivknot.codes` the under-strand occupies slots 1
and 3, so the swept corners are the gaps 0-1 and 2-3.  The sense of the
rotation is fixed by the positive trefoil, which must get ``W = 2, B = 3``
and signature ``-2``; the counter-clockwise choice yields an odd value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .chords import trivializing_number
from .codes import GaussCode, FaceSet, is_alternating, trace_faces
from .errors import CertificateMismatch, NonIntegral, NotAlternating, NotReduced
from .families import PretzelWord, TwoBridgeWord, check_pretzel_hypothesis, classify

SHADED_GAPS = (0, 2)


class Certificate(str, enum.Enum):
    NONE = "none"
    EVEN_TWO_BRIDGE = "even_two_bridge"
    POSITIVE_PRETZEL = "positive_pretzel"


@dataclass(frozen=True)
class CheckerboardCounts:
    w: int
    W: int
    B: int

    @property
    def F(self) -> int:
        return self.W + self.B


@dataclass(frozen=True)
class BoundsReport:
    sigma: int
    u_lower: int
    tr_diagram: int
    u_exact: int | None = None
    tr_knot_exact: int | None = None
    certificate: Certificate = Certificate.NONE


def writhe(code: GaussCode) -> int:
    return sum(code.crossing_signs().values())


def face_colors(fs: FaceSet) -> list[int]:
    """Proper 2-coloring of the faces (the two sides of an edge differ)."""
    face_of = {}
    for f, darts in enumerate(fs.faces):
        for dart in darts:
            face_of[dart] = f
    color = [-1] * fs.F
    color[0] = 0
    stack = [0]
    while stack:
        f = stack.pop()
        for e, d in fs.faces[f]:
            g = face_of[(e, 1 - d)]
            if color[g] < 0:
                color[g] = 1 - color[f]
                stack.append(g)
            elif color[g] == color[f]:
                raise AssertionError("face adjacency is not bipartite")
    return color


def shaded_faces(fs: FaceSet) -> set[int]:
    """Faces holding a swept corner at the first crossing, plus their class."""
    color = face_colors(fs)
    first = min(c for corners in fs.corners for c, _ in corners)
    for f, corners in enumerate(fs.corners):
        if (first, SHADED_GAPS[0]) in corners:
            return {g for g in range(fs.F) if color[g] == color[f]}
    raise AssertionError("crossing corner not found")


def checkerboard(code: GaussCode) -> CheckerboardCounts:
    fs = trace_faces(code)
    B = len(shaded_faces(fs))
    return CheckerboardCounts(writhe(code), fs.F - B, B)


def signature_from_counts(w: int, W: int, B: int) -> int:
    twice = -w + (W - B)
    if twice % 2:
        raise NonIntegral(f"-w/2 + (W-B)/2 = {twice}/2 is not an integer")
    return twice // 2


def check_reduced_alternating(code: GaussCode) -> FaceSet:
    if not is_alternating(code):
        raise NotAlternating("over/under does not alternate along the knot")
    fs = trace_faces(code)
    for corners in fs.corners:
        seen = [c for c, _ in corners]
        if len(seen) != len(set(seen)):
            raise NotReduced("a face meets the same crossing twice (nugatory crossing)")
    return fs


def signature_alternating(code: GaussCode) -> int:
    """Signature of a reduced alternating diagram via the checkerboard formula."""
    fs = check_reduced_alternating(code)
    shaded = shaded_faces(fs)
    # every crossing of an alternating diagram must select the same class
    for f, corners in enumerate(fs.corners):
        for _, gap in corners:
            if (gap in SHADED_GAPS) != (f in shaded):
                raise NotAlternating("shading rule is inconsistent across crossings")
    B = len(shaded)
    return signature_from_counts(writhe(code), fs.F - B, B)


def even_two_bridge_applies(word: TwoBridgeWord) -> bool:
    a = word.a
    return len(a) % 2 == 0 and classify(word).uniform and (
        all(x % 2 == 0 for x in a[0::2]) or all(x % 2 == 0 for x in a[1::2])
    )


def bounds_report(code: GaussCode, family_hint=None) -> BoundsReport:
    sigma = signature_alternating(code)
    tr, _, _ = trivializing_number(code)
    u_lower = abs(sigma) // 2
    if isinstance(family_hint, TwoBridgeWord) and even_two_bridge_applies(family_hint):
        a = family_hint.a
        odd_boxes = a[0::2] if all(x % 2 == 0 for x in a[0::2]) else a[1::2]
        u_exact, cert = sum(odd_boxes) // 2, Certificate.EVEN_TWO_BRIDGE
    elif isinstance(family_hint, PretzelWord):
        check_pretzel_hypothesis(family_hint)
        p = family_hint.p
        u_exact, cert = (sum(p) - len(p) + 1) // 2, Certificate.POSITIVE_PRETZEL
    else:
        return BoundsReport(sigma, u_lower, tr)
    if tr != 2 * u_exact or u_lower != u_exact:
        raise CertificateMismatch(
            f"{cert.value}: tr(D) = {tr}, 2u = {2 * u_exact}, |sigma|/2 = {u_lower}"
        )
    return BoundsReport(sigma, u_lower, tr, u_exact, 2 * u_exact, cert)
