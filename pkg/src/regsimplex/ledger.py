"""Exact predicates for each step of the inductive construction.

Every entry of :data:`CATALOG` maps a frozen lemma id to a predicate over a
:class:`~regsimplex.scene.ConstructionScene`. Lengths are compared as
squares and angles as cosine witnesses, so a result is either exactly true or
exactly false. Ids ``L5.3``, ``L5.4`` and ``L5.7`` re-check the scene
invariants so that a tampered scene is caught even where later lemmas would
not notice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .exact import (
    DegenerateAngleError,
    DimensionError,
    add,
    angle_witness,
    collinear,
    dot,
    rank,
    scale,
    segment_parameter,
    sq_dist,
    sub,
)
from .scene import ConstructionScene, build_construction, perturb
from .simplex import CertificationError


@dataclass(frozen=True)
class LemmaResult:
    lemma_id: str
    statement: str
    passed: bool
    witness: Dict[str, object]
    note: str = ""


@dataclass(frozen=True)
class _Entry:
    statement: str
    check: Callable[[ConstructionScene], Tuple[bool, dict]]
    note: str = ""


CATALOG: Dict[str, _Entry] = {}


def _lemma(lemma_id: str, statement: str, note: str = ""):
    def deco(fn):
        CATALOG[lemma_id] = _Entry(statement, fn, note)
        return fn
    return deco


def _sq(s, p, q):
    return sq_dist(getattr(s, p), getattr(s, q))


def _angle(s, vertex, p, q):
    return angle_witness(getattr(s, vertex), getattr(s, p), getattr(s, q))


def _dot_at(s, vertex, p, q):
    v = getattr(s, vertex)
    return dot(sub(getattr(s, p), v), sub(getattr(s, q), v))


def _strictly_between(s, p, a, b):
    t = segment_parameter(getattr(s, p), getattr(s, a), getattr(s, b))
    return t is not None and 0 < t < 1, t


@_lemma("L5.3", "A, B, C, D, E, F, G, H span at most a 2-plane")
def _coplanar(s):
    r = rank([sub(p, s.B) for p in s.points().values()])
    return r <= 2, {"rank": r}


@_lemma("L5.4", "D lies strictly inside segment CF")
def _d_on_cf(s):
    ok, t = _strictly_between(s, "D", "C", "F")
    return ok, {"t": t}


@_lemma("L5.7", "E lies strictly inside segment CB")
def _e_on_cb(s):
    ok, t = _strictly_between(s, "E", "C", "B")
    return ok, {"t": t}


@_lemma("L5.11", "|AB|^2 = |CB|^2")
def _l11(s):
    ab, cb = _sq(s, "A", "B"), _sq(s, "C", "B")
    return ab == cb, {"AB2": ab, "CB2": cb}


@_lemma("L5.12", "(n+1)^2 |AF|^2 = n^2 |AB|^2 and (n+1)^2 |CE|^2 = n^2 |CB|^2")
def _l12(s):
    n = s.base_dim
    af, ab = _sq(s, "A", "F"), _sq(s, "A", "B")
    ce, cb = _sq(s, "C", "E"), _sq(s, "C", "B")
    ok = (n + 1) ** 2 * af == n * n * ab and (n + 1) ** 2 * ce == n * n * cb
    return ok, {"n": n, "AF2": af, "AB2": ab, "CE2": ce, "CB2": cb}


@_lemma("L5.13", "|AF|^2 = |CE|^2")
def _l13(s):
    af, ce = _sq(s, "A", "F"), _sq(s, "C", "E")
    return af == ce, {"AF2": af, "CE2": ce}


@_lemma("L5.14", "|EB|^2 = |BF|^2")
def _l14(s):
    eb, bf = _sq(s, "E", "B"), _sq(s, "B", "F")
    return eb == bf, {"EB2": eb, "BF2": bf}


@_lemma("L5.15a", "|BG|^2 = |BF|^2")
def _l15a(s):
    bg, bf = _sq(s, "B", "G"), _sq(s, "B", "F")
    return bg == bf, {"BG2": bg, "BF2": bf}


@_lemma("L5.15b", "|AE|^2 = |CF|^2")
def _l15b(s):
    ae, cf = _sq(s, "A", "E"), _sq(s, "C", "F")
    return ae == cf, {"AE2": ae, "CF2": cf}


@_lemma("L5.16", "angles CFA, CFB, AEC, AEB are right")
def _l16(s):
    w = {
        "FC.FA": _dot_at(s, "F", "C", "A"),
        "FC.FB": _dot_at(s, "F", "C", "B"),
        "EA.EC": _dot_at(s, "E", "A", "C"),
        "EA.EB": _dot_at(s, "E", "A", "B"),
    }
    return all(v == 0 for v in w.values()), w


@_lemma("L5.17", "angle ADF = angle CDE, with A, D, E and C, D, F collinear")
def _l17(s):
    adf, cde = _angle(s, "D", "A", "F"), _angle(s, "D", "C", "E")
    ade = collinear(s.A, s.D, s.E)
    cdf = collinear(s.C, s.D, s.F)
    return adf == cde and ade and cdf, {"ADF": adf, "CDE": cde,
                                         "ADE_collinear": ade, "CDF_collinear": cdf}


@_lemma("L5.18", "triangles ADF and CDE have equal corresponding sides")
def _l18(s):
    w = {"AD2": _sq(s, "A", "D"), "CD2": _sq(s, "C", "D"),
         "DF2": _sq(s, "D", "F"), "DE2": _sq(s, "D", "E"),
         "AF2": _sq(s, "A", "F"), "CE2": _sq(s, "C", "E")}
    ok = w["AD2"] == w["CD2"] and w["DF2"] == w["DE2"] and w["AF2"] == w["CE2"]
    return ok, w


@_lemma("L5.19", "|DF|^2 = |DE|^2")
def _l19(s):
    df, de = _sq(s, "D", "F"), _sq(s, "D", "E")
    return df == de, {"DF2": df, "DE2": de}


@_lemma("L5.21", "|BF|^2 = |BE|^2 = |BG|^2, with B the midpoint of EG")
def _l21(s):
    bf, be, bg = _sq(s, "B", "F"), _sq(s, "B", "E"), _sq(s, "B", "G")
    mid = scale(2, s.B) == add(s.E, s.G)
    return bf == be == bg and mid, {"BF2": bf, "BE2": be, "BG2": bg, "B_midpoint_EG": mid}


@_lemma("L5.22", "angle EFG is right (F on the circle with diameter EG)",
        note="printed text names angle ADF; the right angle at F subtending EG is checked")
def _l22(s):
    v = _dot_at(s, "F", "E", "G")
    return v == 0, {"FE.FG": v}


@_lemma("L5.23", "triangles DFB and DEB have equal sides (DF = DE, FB = EB, DB shared)",
        note="printed text repeats triangles ADF and CDE; the side-side-side pair DFB, DEB is checked")
def _l23(s):
    w = {"DF2": _sq(s, "D", "F"), "DE2": _sq(s, "D", "E"),
         "FB2": _sq(s, "F", "B"), "EB2": _sq(s, "E", "B"),
         "DB2": _sq(s, "D", "B")}
    return w["DF2"] == w["DE2"] and w["FB2"] == w["EB2"], w


@_lemma("L5.24", "2H = E + F")
def _l24(s):
    lhs, rhs = scale(2, s.H), add(s.E, s.F)
    return lhs == rhs, {"2H": lhs, "E+F": rhs}


@_lemma("L5.25", "triangles FBE and FBG are isosceles at B")
def _l25(s):
    bf, be, bg = _sq(s, "B", "F"), _sq(s, "B", "E"), _sq(s, "B", "G")
    return bf == be and bf == bg, {"BF2": bf, "BE2": be, "BG2": bg}


@_lemma("L5.26", "angle EHB is right")
def _l26(s):
    v = _dot_at(s, "H", "E", "B")
    return v == 0, {"HE.HB": v}


@_lemma("L5.27", "angle BGF = angle BFG")
def _l27(s):
    bgf, bfg = _angle(s, "G", "B", "F"), _angle(s, "F", "B", "G")
    return bgf == bfg, {"BGF": bgf, "BFG": bfg}


@_lemma("L5.28", "angles BFE and BFG are complementary")
def _l28(s):
    bfe, bfg = _angle(s, "F", "B", "E"), _angle(s, "F", "B", "G")
    ok = bfe.cos_sq + bfg.cos_sq == 1 and bfe.sign > 0 and bfg.sign > 0
    return ok, {"BFE": bfe, "BFG": bfg}


@_lemma("L5.29", "angle EFB = angle FEB")
def _l29(s):
    efb, feb = _angle(s, "F", "E", "B"), _angle(s, "E", "F", "B")
    return efb == feb, {"EFB": efb, "FEB": feb}


@_lemma("L5.30", "angles EBH and HEB are complementary")
def _l30(s):
    ebh, heb = _angle(s, "B", "E", "H"), _angle(s, "E", "H", "B")
    ok = ebh.cos_sq + heb.cos_sq == 1 and ebh.sign > 0 and heb.sign > 0
    return ok, {"EBH": ebh, "HEB": heb}


@_lemma("L5.31", "angle EBH = angle BFG")
def _l31(s):
    ebh, bfg = _angle(s, "B", "E", "H"), _angle(s, "F", "B", "G")
    return ebh == bfg, {"EBH": ebh, "BFG": bfg}


@_lemma("L5.32", "DB is parallel to FG")
def _l32(s):
    r = rank([sub(s.D, s.B), sub(s.G, s.F)])
    return r <= 1, {"rank": r}


@_lemma("L5.33", "|CD|^2 |BG|^2 = |DF|^2 |CB|^2, with C, D, F and C, B, G collinear")
def _l33(s):
    cd, bg, df, cb = _sq(s, "C", "D"), _sq(s, "B", "G"), _sq(s, "D", "F"), _sq(s, "C", "B")
    cdf = collinear(s.C, s.D, s.F)
    cbg = collinear(s.C, s.B, s.G)
    ok = cd * bg == df * cb and cdf and cbg
    return ok, {"CD2": cd, "BG2": bg, "DF2": df, "CB2": cb,
                "CDF_collinear": cdf, "CBG_collinear": cbg}


@_lemma("L5.35", "|CD|^2 = (n+1)^2 |DF|^2")
def _l35(s):
    n = s.base_dim
    cd, df = _sq(s, "C", "D"), _sq(s, "D", "F")
    return cd == (n + 1) ** 2 * df, {"n": n, "CD2": cd, "DF2": df}


def _order_key(lemma_id: str):
    major, _, minor = lemma_id[1:].partition(".")
    digits = minor.rstrip("ab")
    return (int(major), int(digits), minor[len(digits):])


LEMMA_IDS: Tuple[str, ...] = tuple(sorted(CATALOG, key=_order_key))


def check_lemma(scene: ConstructionScene, lemma_id: str) -> LemmaResult:
    try:
        entry = CATALOG[lemma_id]
    except KeyError:
        raise KeyError(f"unknown lemma id {lemma_id!r}") from None
    try:
        passed, witness = entry.check(scene)
    except (DegenerateAngleError, DimensionError, CertificationError) as exc:
        passed, witness = False, {"error": str(exc)}
    return LemmaResult(lemma_id, entry.statement, bool(passed), witness, entry.note)


def evaluate_scene(scene: ConstructionScene) -> List[LemmaResult]:
    return [check_lemma(scene, lid) for lid in LEMMA_IDS]


def run_ledger(n: int, inject: Optional[Tuple[str, int, object]] = None) -> List[LemmaResult]:
    """Build the scene for base dimension n and evaluate every lemma in order.

    ``inject`` is an optional ``(point, coord, delta)`` fault applied to the
    scene before evaluation.
    """
    scene = build_construction(n)
    if inject is not None:
        scene = perturb(scene, *inject)
    return evaluate_scene(scene)


def scene_dihedral_witness(scene: ConstructionScene):
    """Witness of angle CBF, the dihedral angle of the (n+1)-simplex."""
    return angle_witness(scene.B, scene.C, scene.F)
