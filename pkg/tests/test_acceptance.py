"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are printed even
without ``-s``).  Every tolerance is exact integer equality; runtime caps are
asserted with a wall-clock timer.
"""

import random
import time
from dataclasses import dataclass, field

import pytest

from trivknot.chords import (
    ChordDiagram,
    brute_force_min_removal,
    is_noncrossing_set,
    is_parallel,
    min_removal,
    trivializing_number,
)
from trivknot.codes import is_alternating, mirror, projection_of, trace_faces
from trivknot.errors import NotAKnot
from trivknot.families import (
    PretzelWord,
    TwoBridgeWord,
    build_pretzel,
    build_two_bridge,
    classify,
    pretzel_diagram,
    tr_closed_form_pretzel,
    tr_closed_form_two_bridge,
    two_bridge_diagram,
)
from trivknot.invariants import bounds_report, checkerboard, signature_alternating, signature_from_counts
from trivknot.report import pretzel_words, two_bridge_words

from conftest import random_word

pytestmark = pytest.mark.acceptance

MAX_SUM = 13
MAX_LENGTH = 6


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail

    return emit


def chords_of(code):
    return ChordDiagram.from_word(projection_of(code).symbols)


def structural_failures(diagram, label):
    """Alternation, Euler count, mirror invariance and box-kind interleavement."""
    code = diagram.code
    out = []
    if not is_alternating(code):
        out.append(f"{label}: not alternating")
    if trace_faces(code).F != code.crossings + 2:
        out.append(f"{label}: F != V + 2")
    if trivializing_number(code)[0] != trivializing_number(mirror(code))[0]:
        out.append(f"{label}: tr(D) != tr(D*)")
    word = projection_of(code).symbols
    cd = ChordDiagram.from_word(word)
    chord = {word[a]: c for c, (a, _) in enumerate(cd.chords)}
    for box, parallel in zip(diagram.boxes, diagram.parallel):
        sub = [chord[x] for x in box]
        if any(_interleave(cd, x, y) != parallel for i, x in enumerate(sub) for y in sub[i + 1:]):
            out.append(f"{label}: box kind disagrees with internal interleavement")
    return out


def _interleave(cd, x, y):
    (i, j), (k, l) = cd.chords[x], cd.chords[y]
    return (i < k < j) != (i < l < j)


@dataclass
class TwoBridgeSweep:
    words: int = 0
    knots: int = 0
    uniform: int = 0
    uniform_short: int = 0
    closed_form_failures: list = field(default_factory=list)
    parity_failures: list = field(default_factory=list)
    sign_failures: list = field(default_factory=list)
    structural: list = field(default_factory=list)
    seconds: float = 0.0


@pytest.fixture(scope="module")
def two_bridge_sweep():
    start = time.perf_counter()
    s = TwoBridgeSweep()
    for word in two_bridge_words(MAX_SUM):
        s.words += 1
        try:
            diagram = two_bridge_diagram(word)
        except NotAKnot:
            continue
        s.knots += 1
        code = diagram.code
        cls = classify(word)
        signs = set(code.crossing_signs().values())
        expected = {cls.predicted_sign} if cls.uniform else {1, -1}
        if signs != expected:
            s.sign_failures.append((word.a, sorted(signs), cls.kind.value))
        s.structural += structural_failures(diagram, f"D({word})")
        if not cls.uniform:
            continue
        s.uniform += 1
        cd = chords_of(code)
        tr, _ = min_removal(cd)
        if tr % 2:
            s.parity_failures.append(word.a)
        if len(word) <= MAX_LENGTH:
            s.uniform_short += 1
            bf, _ = brute_force_min_removal(cd)
            closed = tr_closed_form_two_bridge(word)
            if not closed == tr == bf:
                s.closed_form_failures.append((word.a, closed, tr, bf))
    s.seconds = time.perf_counter() - start
    return s


def test_criterion_1_signature_example(report):
    value = signature_from_counts(-2, 5, 3)
    report(1, value == 2, f"signature_from_counts(-2, 5, 3) = {value} (expected 2)")


def test_criterion_2_trefoil(report):
    code = build_two_bridge(TwoBridgeWord((3,)))
    tr, _, _ = trivializing_number(code)
    sigma = signature_alternating(code)
    u_lower = bounds_report(code).u_lower
    ok = (tr, sigma, u_lower) == (2, -2, 1)
    report(2, ok, f"D(3): tr = {tr}, sigma = {sigma}, u_lower = {u_lower} (expected 2, -2, 1)")


def test_criterion_3_two_bridge_closed_form(report, two_bridge_sweep):
    s = two_bridge_sweep
    ok = not s.closed_form_failures and s.seconds < 60
    report(
        3, ok,
        f"{s.uniform_short} uniform knot diagrams (sum <= {MAX_SUM}, m <= {MAX_LENGTH}): "
        f"closed form = DP = brute force, {len(s.closed_form_failures)} discrepancies "
        f"{s.closed_form_failures[:3]}; sweep {s.seconds:.1f} s",
    )


def test_criterion_4_parity(report, two_bridge_sweep):
    s = two_bridge_sweep
    report(4, not s.parity_failures,
           f"{s.uniform} uniform diagrams, {len(s.parity_failures)} odd tr values")


def test_criterion_5_sign_uniformity(report, two_bridge_sweep):
    s = two_bridge_sweep
    report(
        5, not s.sign_failures,
        f"{s.knots} knot diagrams out of {s.words} words: traced signs match the "
        f"classifier in all but {len(s.sign_failures)} {s.sign_failures[:3]}",
    )


def test_criterion_6_even_two_bridge(report):
    start = time.perf_counter()
    failures, checked, excluded = [], 0, 0
    for word in two_bridge_words(MAX_SUM):
        a = word.a
        if len(a) % 2 or any(x % 2 for x in a[0::2]):
            continue
        # the certificate is stated for positive knots; other words are not covered
        if not classify(word).uniform:
            excluded += 1
            continue
        checked += 1
        code = build_two_bridge(word)
        odd_sum, even_sum = sum(a[0::2]), sum(a[1::2])
        r = bounds_report(code, word)
        counts = checkerboard(code)
        got = (r.sigma, r.u_exact, r.tr_diagram, counts.W, counts.B)
        want = (-odd_sum, odd_sum // 2, odd_sum, even_sum + 1, odd_sum + 1)
        if got != want:
            failures.append((a, got, want))
    seconds = time.perf_counter() - start
    report(
        6, not failures and seconds < 10,
        f"{checked} positive even-length words with even odd-index boxes "
        f"({excluded} non-positive words excluded): sigma, u_exact, tr, W, B "
        f"exact in all but {len(failures)} {failures[:3]}; {seconds:.1f} s",
    )


def test_criterion_7_pretzel(report):
    start = time.perf_counter()
    failures, checked = [], 0
    for word in pretzel_words(MAX_SUM):
        checked += 1
        code = build_pretzel(word)
        expected = sum(word.p) - len(word.p) + 1
        tr, _ = min_removal(chords_of(code))
        sigma = signature_alternating(code)
        if (tr, sigma, tr_closed_form_pretzel(word)) != (expected, -expected, expected):
            failures.append((word.p, tr, sigma))
    anchors = {
        p: min_removal(chords_of(build_pretzel(PretzelWord(p))))[0] for p in [(1, 2), (3, 2)]
    }
    seconds = time.perf_counter() - start
    ok = not failures and anchors == {(1, 2): 2, (3, 2): 4} and seconds < 10
    report(
        7, ok,
        f"{checked} pretzel words (sum <= {MAX_SUM}): tr = -sigma = sum p - 2n + 1 in all but "
        f"{len(failures)}; P(1,2) -> {anchors[(1, 2)]}, P(3,2) -> {anchors[(3, 2)]}; "
        f"{seconds:.1f} s",
    )


def test_criterion_8_oracle_equivalence(report):
    rng = random.Random(20261016)
    start = time.perf_counter()
    failures = []
    for trial in range(1000):
        n = rng.randint(0, 12)
        cd = ChordDiagram.from_word(random_word(rng, n))
        tr, witness = min_removal(cd)
        bf, _ = brute_force_min_removal(cd)
        valid = (
            len(witness.removed) == tr
            and is_noncrossing_set(cd, witness.kept)
            and is_parallel(cd.without(witness.removed))
        )
        if tr != bf or not valid:
            failures.append((trial, tr, bf))
    seconds = time.perf_counter() - start
    report(
        8, not failures and seconds < 30,
        f"1000 random words (n <= 12, seed 20261016): DP = brute force with valid witnesses "
        f"in all but {len(failures)}; {seconds:.1f} s",
    )


def test_criterion_9_structural_invariants(report, two_bridge_sweep):
    failures = list(two_bridge_sweep.structural)
    pretzels = 0
    for word in pretzel_words(MAX_SUM):
        pretzels += 1
        failures += structural_failures(pretzel_diagram(word), f"P({word})")
    report(
        9, not failures,
        f"{two_bridge_sweep.knots} two-bridge and {pretzels} pretzel diagrams: alternating, "
        f"F = V + 2, tr(D) = tr(D*), box kinds match interleavement; "
        f"{len(failures)} failures {failures[:3]}",
    )
