"""Report documents and exhaustive verification sweeps."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Iterator

from .chords import ChordDiagram, brute_force_min_removal, min_removal, BRUTE_FORCE_LIMIT
from .codes import GaussCode, ProjectionWord, is_alternating, projection_of, trace_faces
from .errors import CertificateMismatch, KnotError, NotAKnot
from .families import (
    PretzelWord,
    TwoBridgeWord,
    classify,
    decompose_bc,
    pretzel_diagram,
    tr_closed_form_pretzel,
    tr_closed_form_two_bridge,
    two_bridge_diagram,
)
from .invariants import Certificate, bounds_report, signature_alternating

SWEEP_LIMIT = 16


@dataclass
class ReportDocument:
    input_kind: str
    input_text: str
    status: str = "ok"
    crossings: int | None = None
    gauss: str | None = None
    diagram_class: dict | None = None
    tr_dp: int | None = None
    tr_closed: int | None = None
    parity_ok: bool | None = None
    sigma: int | None = None
    u_lower: int | None = None
    u_exact: int | None = None
    tr_knot_exact: int | None = None
    certificate: str = Certificate.NONE.value
    witness: list[int] = field(default_factory=list)
    discrepancies: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            ("class" if k == "diagram_class" else k): v for k, v in asdict(self).items()
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def flag(self, check: str, expected, actual, **extra):
        self.discrepancies.append({"check": check, "expected": expected, "actual": actual, **extra})


def _fill_tr(doc: ReportDocument, word: ProjectionWord, verify: bool):
    cd = ChordDiagram.from_word(word.symbols)
    tr, witness = min_removal(cd)
    doc.tr_dp = tr
    doc.parity_ok = tr % 2 == 0
    # chords are numbered by first endpoint; report the crossing labels
    doc.witness = sorted(word.symbols[cd.chords[c][0]] for c in witness.removed)
    if verify and cd.n <= BRUTE_FORCE_LIMIT:
        bf, bf_witness = brute_force_min_removal(cd)
        if bf != tr:
            doc.flag("brute_force", bf, tr)
        elif bf_witness != witness:
            doc.flag("witness", sorted(bf_witness.removed), sorted(witness.removed))


def report_word(word: ProjectionWord, text: str, verify: bool = False) -> ReportDocument:
    doc = ReportDocument("word", text, crossings=len(word) // 2)
    _fill_tr(doc, word, verify)
    return doc


def report_gauss(code: GaussCode, text: str, verify: bool = False) -> ReportDocument:
    doc = ReportDocument("gauss", text, crossings=code.crossings, gauss=str(code))
    _fill_tr(doc, projection_of(code), verify)
    if code.crossings:
        try:
            doc.sigma = signature_alternating(code)
            doc.u_lower = abs(doc.sigma) // 2
        except KnotError:
            pass
    if not doc.parity_ok:
        try:
            trace_faces(code)
        except KnotError:
            pass
        else:
            doc.flag("parity", "even", doc.tr_dp)
    return doc


def _class_dict(cls) -> dict:
    d = {"kind": cls.kind.value, "predicted_sign": cls.predicted_sign}
    if cls.parameter is not None:
        d.update(b=list(cls.b), c=list(cls.c), parameter=cls.parameter)
    return d


def _fill_diagram(doc: ReportDocument, diagram, hint, verify: bool):
    code = diagram.code
    doc.crossings = code.crossings
    doc.gauss = str(code)
    _fill_tr(doc, projection_of(code), verify)
    if not doc.parity_ok:
        doc.flag("parity", "even", doc.tr_dp)
    if verify:
        try:
            fs = trace_faces(code)
        except KnotError as exc:
            doc.flag("faces", "F = V + 2", str(exc))
        else:
            if fs.F != code.crossings + 2:
                doc.flag("faces", code.crossings + 2, fs.F)
        if not is_alternating(code):
            doc.flag("alternating", True, False)
    try:
        report = bounds_report(code, hint)
    except CertificateMismatch as exc:
        doc.flag("certificate", "tr(D) = 2u = |sigma|", str(exc))
        report = bounds_report(code)
    except KnotError:
        # e.g. the one-crossing diagram D(1) is not reduced
        return
    doc.sigma = report.sigma
    doc.u_lower = report.u_lower
    doc.u_exact = report.u_exact
    doc.tr_knot_exact = report.tr_knot_exact
    doc.certificate = report.certificate.value


def report_two_bridge(word: TwoBridgeWord, verify: bool = False) -> ReportDocument:
    doc = ReportDocument("two_bridge", str(word))
    cls = classify(word)
    doc.diagram_class = _class_dict(cls)
    try:
        diagram = two_bridge_diagram(word)
    except NotAKnot:
        doc.status = "link"
        doc.crossings = sum(word.a)
        return doc
    signs = set(diagram.code.crossing_signs().values())
    expected = {cls.predicted_sign} if cls.uniform else {1, -1}
    if signs != expected:
        doc.flag("sign_pattern", sorted(expected), sorted(signs))
    if cls.uniform:
        cls = decompose_bc(word, cls)
        doc.diagram_class = _class_dict(cls)
    else:
        doc.status = "not_uniform"
    _fill_diagram(doc, diagram, word, verify)
    if cls.uniform:
        doc.tr_closed = tr_closed_form_two_bridge(word)
        if doc.tr_closed != doc.tr_dp:
            amended = tr_closed_form_two_bridge(word, amended=True)
            doc.flag("closed_form", doc.tr_dp, doc.tr_closed, amended=amended)
    return doc


def report_pretzel(word: PretzelWord, verify: bool = False) -> ReportDocument:
    doc = ReportDocument("pretzel", str(word))
    diagram = pretzel_diagram(word)
    signs = set(diagram.code.crossing_signs().values())
    if signs != {1}:
        doc.flag("sign_pattern", [1], sorted(signs))
    _fill_diagram(doc, diagram, word, verify)
    doc.tr_closed = tr_closed_form_pretzel(word)
    if doc.tr_closed != doc.tr_dp:
        doc.flag("closed_form", doc.tr_dp, doc.tr_closed)
    if doc.sigma is not None and doc.sigma != -doc.tr_closed:
        doc.flag("signature", -doc.tr_closed, doc.sigma)
    return doc


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``total`` in lexicographic order."""
    if total == 0:
        return
    for first in range(1, total + 1):
        if first == total:
            yield (first,)
        else:
            for rest in compositions(total - first):
                yield (first,) + rest


def two_bridge_words(max_crossings: int, max_length: int | None = None):
    for total in range(1, max_crossings + 1):
        for a in compositions(total):
            if max_length is None or len(a) <= max_length:
                yield TwoBridgeWord(a)


def pretzel_words(max_crossings: int):
    """Words with ``p_2n`` even, the rest odd, in order of total then lexicographic."""
    for total in range(1, max_crossings + 1):
        for a in compositions(total):
            if len(a) % 2 == 0 and a[-1] % 2 == 0 and all(x % 2 for x in a[:-1]):
                yield PretzelWord(a)


def _sweep_one(args):
    family, values = args
    if family == "twobridge":
        return report_two_bridge(TwoBridgeWord(values), verify=True)
    return report_pretzel(PretzelWord(values), verify=True)


def sweep(family: str, max_crossings: int, workers: int = 1, max_length=None) -> Iterator[ReportDocument]:
    """Verified reports for every word, yielded in canonical word order."""
    if family == "twobridge":
        words = [w.a for w in two_bridge_words(max_crossings, max_length)]
    elif family == "pretzel":
        words = [w.p for w in pretzel_words(max_crossings)]
    else:
        raise ValueError(f"unknown family {family!r}")
    jobs = [(family, w) for w in words]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            # map preserves submission order
            yield from pool.map(_sweep_one, jobs, chunksize=32)
    else:
        yield from map(_sweep_one, jobs)


@dataclass
class SweepSummary:
    total: int = 0
    uniform: int = 0
    links_skipped: int = 0
    closed_form_matches: int = 0
    parity_failures: int = 0
    certificate_mismatches: int = 0
    discrepancies: int = 0

    def add(self, doc: ReportDocument):
        self.total += 1
        if doc.status == "link":
            self.links_skipped += 1
            return
        if doc.status == "ok":
            self.uniform += 1
            if doc.tr_closed == doc.tr_dp:
                self.closed_form_matches += 1
        checks = [d["check"] for d in doc.discrepancies]
        self.parity_failures += checks.count("parity")
        self.certificate_mismatches += checks.count("certificate")
        self.discrepancies += len(checks)

    def to_dict(self):
        return asdict(self)

