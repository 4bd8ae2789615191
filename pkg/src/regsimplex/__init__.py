"""Exact certification of regular-simplex geometry: well-built ratio,
dihedral angle arccos(1/n) and central angle arccos(-1/n)."""

__version__ = "0.1.0"

from .exact import CosineWitness, cosine_witness, dot, rank_le, sq_dist  # noqa: E402
from .simplex import (  # noqa: E402
    Simplex,
    altitude_foot,
    apply_rational_similarity,
    central_angle_cosine,
    centroid,
    dihedral_cosine,
    face,
    standard_simplex,
    verify_altitude_properties,
    well_built_ratio,
)
from .scene import ConstructionScene, build_construction  # noqa: E402
from .ledger import LEMMA_IDS, LemmaResult, check_lemma, run_ledger  # noqa: E402
from .oracle import float_oracle_dihedral  # noqa: E402
from .sweep import CertificationReport, induction_sweep  # noqa: E402
