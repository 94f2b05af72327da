"""Exact combinatorial toolkit for knot diagrams and unknotting bounds."""

from .braid import (
    BraidWord,
    braid_closure,
    flip_letters,
    free_reduce,
    parse_braid,
    render_braid,
    vogel_braid,
)
from .certify import (
    CertificateStep,
    UnknottingCertificate,
    adjacency_certificate_10_139,
    check_certificate,
    composed_torus_bound,
    paper_certificate,
    parse_certificate,
    render_certificate,
    torus_cascade_certificate,
)
from .codes import (
    DTCode,
    GaussCode,
    dt_to_gauss,
    flip_entries,
    gauss_code,
    parse_dt,
    pd_to_dt,
    realize_dt,
    render_dt,
)
from .diagram import Crossing, PDDiagram, pd_from_text, pd_to_text, validate_pd
from .errors import (
    GordianError,
    InputError,
    InternalError,
    ResourceError,
    UnrealizableError,
)
from .invariants import (
    Fingerprint,
    alexander,
    determinant,
    fingerprint,
    jones,
    kauffman_bracket,
    murasugi_bound,
    seifert_matrix,
    signature,
    torus_diagram,
    torus_unknotting,
    wirtinger,
)
from .identify import (
    KnotTableEntry,
    build_table,
    default_table,
    identify,
    load_table,
    same_knot_evidence,
    save_table,
)
from .laurent import LaurentPoly
from .moves import (
    Move,
    apply_move,
    backtrack_randomize,
    connected_sum,
    crossing_change,
    deconnect_sum,
    find_moves,
    mirror,
    simplify_global,
    simplify_greedy,
)
from .search import (
    SearchConfig,
    SearchHit,
    evaluate_candidate,
    replay_hit,
    replay_line,
    run_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CertificateStep",
    "Crossing",
    "DTCode",
    "Fingerprint",
    "GaussCode",
    "GordianError",
    "InputError",
    "InternalError",
    "KnotTableEntry",
    "LaurentPoly",
    "Move",
    "PDDiagram",
    "ResourceError",
    "SearchConfig",
    "SearchHit",
    "UnknottingCertificate",
    "UnrealizableError",
    "adjacency_certificate_10_139",
    "alexander",
    "apply_move",
    "backtrack_randomize",
    "braid_closure",
    "build_table",
    "check_certificate",
    "composed_torus_bound",
    "connected_sum",
    "crossing_change",
    "deconnect_sum",
    "default_table",
    "determinant",
    "dt_to_gauss",
    "evaluate_candidate",
    "find_moves",
    "fingerprint",
    "flip_entries",
    "flip_letters",
    "free_reduce",
    "gauss_code",
    "identify",
    "jones",
    "kauffman_bracket",
    "load_table",
    "mirror",
    "murasugi_bound",
    "paper_certificate",
    "parse_braid",
    "parse_certificate",
    "parse_dt",
    "pd_from_text",
    "pd_to_dt",
    "pd_to_text",
    "realize_dt",
    "render_braid",
    "render_certificate",
    "render_dt",
    "replay_hit",
    "replay_line",
    "run_pipeline",
    "same_knot_evidence",
    "save_table",
    "seifert_matrix",
    "signature",
    "simplify_global",
    "simplify_greedy",
    "torus_cascade_certificate",
    "torus_diagram",
    "torus_unknotting",
    "validate_pd",
    "vogel_braid",
    "wirtinger",
]
