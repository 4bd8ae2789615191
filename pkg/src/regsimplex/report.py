"""Machine-readable reports and angle tables.

Rationals are written as ``{"num": "<int>", "den": "<int>"}`` with decimal
strings so big integers survive JSON untouched.
"""

from __future__ import annotations

import json
import math
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from typing import List, NamedTuple

from . import __version__
from .exact import CosineWitness
from .ledger import LemmaResult
from .simplex import central_angle_cosine, dihedral_cosine
from .sweep import CertificationReport, DimensionEntry

SIX_PLACES = Decimal("0.000001")


def rat_to_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rat_from_json(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


def _encode(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return rat_to_json(value)
    if isinstance(value, CosineWitness):
        return {"cos_sq": rat_to_json(value.cos_sq), "sign": value.sign}
    if isinstance(value, (tuple, list)):
        return [_encode(v) for v in value]
    raise TypeError(f"cannot serialize witness value {value!r}")


def _decode(value):
    if isinstance(value, list):
        return tuple(_decode(v) for v in value)
    if isinstance(value, dict):
        if set(value) == {"num", "den"}:
            return rat_from_json(value)
        if set(value) == {"cos_sq", "sign"}:
            return CosineWitness(rat_from_json(value["cos_sq"]), value["sign"])
        raise ValueError(f"unrecognized witness object {value!r}")
    return value


def _lemma_to_json(r: LemmaResult) -> dict:
    d = {
        "lemma_id": r.lemma_id,
        "statement": r.statement,
        "passed": r.passed,
        "witness": {k: _encode(v) for k, v in r.witness.items()},
    }
    if r.note:
        d["note"] = r.note
    return d


def _lemma_from_json(d: dict) -> LemmaResult:
    return LemmaResult(
        lemma_id=d["lemma_id"],
        statement=d["statement"],
        passed=d["passed"],
        witness={k: _decode(v) for k, v in d["witness"].items()},
        note=d.get("note", ""),
    )


def report_to_dict(report: CertificationReport) -> dict:
    entries = []
    for e in report.entries:
        entries.append({
            "n": e.n,
            "passed": e.passed,
            "well_built": e.well_built,
            "well_built_ratio": None if e.well_built_ratio is None else rat_to_json(e.well_built_ratio),
            "dihedral_cos": rat_to_json(e.dihedral_cos),
            "central_cos": rat_to_json(e.central_cos),
            "ledger": [_lemma_to_json(r) for r in e.ledger],
            "oracle_abs_err": None if e.oracle_abs_err is None else repr(e.oracle_abs_err),
        })
    npass = sum(e.passed for e in report.entries)
    return {
        "tool_version": __version__,
        "n_max": report.n_max,
        "base_case": report.base_case,
        "overall": report.overall,
        "entries": entries,
        "summary": {"passed": npass, "failed": len(report.entries) - npass},
        "notes": list(report.notes),
    }


def report_from_dict(doc: dict) -> CertificationReport:
    entries = []
    for d in doc["entries"]:
        ratio = d["well_built_ratio"]
        err = d["oracle_abs_err"]
        entries.append(DimensionEntry(
            n=d["n"],
            well_built=d["well_built"],
            well_built_ratio=None if ratio is None else rat_from_json(ratio),
            dihedral_cos=rat_from_json(d["dihedral_cos"]),
            central_cos=rat_from_json(d["central_cos"]),
            ledger=tuple(_lemma_from_json(r) for r in d["ledger"]),
            oracle_abs_err=None if err is None else float(err),
        ))
    return CertificationReport(doc["n_max"], tuple(entries), tuple(doc.get("notes", ())))


def dumps(report: CertificationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=True) + "\n"


def render_text(report: CertificationReport) -> str:
    lines = [f"regsimplex {__version__}: regular simplices, n = 2..{report.n_max}"]
    lines.append(f"base case (n=2, ratio 4): {'ok' if report.base_case else 'FAIL'}")
    for e in report.entries:
        nfail = sum(not r.passed for r in e.ledger)
        err = "n/a" if e.oracle_abs_err is None else f"{e.oracle_abs_err:.1e}"
        lines.append(
            f"n={e.n:<3d} {'PASS' if e.passed else 'FAIL'}  well-built={e.well_built!s:<5}  "
            f"dihedral={e.dihedral_cos}  central={e.central_cos}  "
            f"lemmas={len(e.ledger) - nfail}/{len(e.ledger)}  oracle_err={err}"
        )
        for r in e.ledger:
            if not r.passed:
                lines.append(f"    {r.lemma_id} failed: {r.statement}")
    npass = sum(e.passed for e in report.entries)
    lines.append(f"summary: {npass} passed, {len(report.entries) - npass} failed")
    lines.append("overall: " + ("PASS" if report.overall else "FAIL"))
    return "\n".join(lines) + "\n"


def degrees(cos: Fraction) -> str:
    """arccos in degrees, six places, round-half-even."""
    deg = Decimal(math.degrees(math.acos(float(cos))))
    return str(deg.quantize(SIX_PLACES, rounding=ROUND_HALF_EVEN))


class AngleRow(NamedTuple):
    n: int
    dihedral_cos: Fraction
    dihedral_deg: str
    central_cos: Fraction
    central_deg: str


TABLE_HEADER = ("n", "dihedral_cos", "dihedral_deg", "central_cos", "central_deg")


def angle_table(lo: int, hi: int) -> List[AngleRow]:
    if not 2 <= lo <= hi:
        raise ValueError("need 2 <= from <= to")
    rows = []
    for n in range(lo, hi + 1):
        d, c = dihedral_cosine(n), central_angle_cosine(n)
        rows.append(AngleRow(n, d, degrees(d), c, degrees(c)))
    return rows
