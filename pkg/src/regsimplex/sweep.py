"""Instance-wise certification of the induction over dimension."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import List, Optional, Tuple

from .ledger import LemmaResult, run_ledger
from .oracle import OracleError, float_oracle_dihedral
from .simplex import (
    CertificationError,
    central_angle_cosine,
    dihedral_cosine,
    standard_simplex,
    well_built_ratio,
)

ORACLE_TOL = 1e-9

NOTES = (
    "step number 5.15 occurs twice; the two steps are checked as L5.15a and L5.15b",
    "L5.3, L5.4 and L5.7 re-check the construction: coplanarity, D on CF, E on CB",
)


@dataclass(frozen=True)
class DimensionEntry:
    n: int
    well_built: bool
    well_built_ratio: Optional[Fraction]
    dihedral_cos: Fraction
    central_cos: Fraction
    ledger: Tuple[LemmaResult, ...]
    oracle_abs_err: Optional[float]

    @property
    def passed(self) -> bool:
        return (
            self.well_built
            and self.dihedral_cos * self.n == 1
            and self.central_cos * self.n == -1
            and all(r.passed for r in self.ledger)
            and self.oracle_abs_err is not None
            and self.oracle_abs_err <= ORACLE_TOL
        )


@dataclass(frozen=True)
class CertificationReport:
    n_max: int
    entries: Tuple[DimensionEntry, ...]
    notes: Tuple[str, ...] = field(default=NOTES)

    @property
    def base_case(self) -> bool:
        return bool(self.entries) and self.entries[0].n == 2 and self.entries[0].well_built

    @property
    def overall(self) -> bool:
        return self.base_case and all(e.passed for e in self.entries)

    @property
    def failed_lemmas(self) -> List[Tuple[int, str]]:
        return [(e.n, r.lemma_id) for e in self.entries for r in e.ledger if not r.passed]


def certify_dimension(n: int, n_max: int, inject=None) -> DimensionEntry:
    try:
        ratio = well_built_ratio(standard_simplex(n))
    except CertificationError:
        ratio = None
    if inject is not None and inject[1] > n + 2:
        inject = None  # coordinate does not exist in this scene
    # the ledger at n is the inductive step n -> n+1
    ledger = tuple(run_ledger(n, inject)) if n < n_max else ()
    dih = dihedral_cosine(n)
    try:
        err = abs(float(dih) - float_oracle_dihedral(n))
    except OracleError:
        err = None
    return DimensionEntry(
        n=n,
        well_built=ratio == n * n,
        well_built_ratio=ratio,
        dihedral_cos=dih,
        central_cos=central_angle_cosine(n),
        ledger=ledger,
        oracle_abs_err=err,
    )


def induction_sweep(n_max: int, inject=None, workers: Optional[int] = None) -> CertificationReport:
    """Certify base case n=2, every step n -> n+1 below n_max, and both angle laws.

    With ``workers`` > 1 dimensions are evaluated in separate processes;
    entries are always returned in increasing n.
    """
    if n_max < 2:
        raise ValueError("the dimension must be at least 2")
    dims = range(2, n_max + 1)
    job = partial(certify_dimension, n_max=n_max, inject=inject)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = tuple(pool.map(job, dims))
    else:
        entries = tuple(map(job, dims))
    return CertificationReport(n_max, entries)
