"""Computational lab for torsion theories over finite rings."""

from .classify import RingReport, TorsionVerdict, cg_splitting, classify_ring
from .corpus import Corpus, default_corpus, load_corpus
from .homological import injective_hull, is_injective, is_projective, projective_cover
from .limits import Limits, use_limits
from .modules import FinModule, Submodule, are_isomorphic, hom_count, submodule_lattice
from .parse import build_module, build_ring
from .report import emit_report
from .rings import FiniteRing
from .suites import SUITE_IDS, SuiteResult, analyze, run_suite
from .torsion import cg_radical, generalov_rho, singular_submodule, zstar

__all__ = [
    "Corpus", "FiniteRing", "FinModule", "Limits", "RingReport", "SUITE_IDS", "Submodule", "SuiteResult",
    "TorsionVerdict", "analyze", "are_isomorphic", "build_module", "build_ring", "cg_radical", "cg_splitting",
    "classify_ring", "default_corpus", "emit_report", "generalov_rho", "hom_count", "injective_hull",
    "is_injective", "is_projective", "load_corpus", "projective_cover", "run_suite", "singular_submodule",
    "submodule_lattice", "use_limits", "zstar",
]
