"""Exact Temperley-Lieb diagram calculus.

Crossingless matchings with loop-counting composition, formal linear
combinations over the rational functions of q, Jones-Wenzl and isotypic
projectors, skein-resolved braids, and verifiers for the algebraic
identities these objects satisfy.
"""

from .qring import (
    LaurentPoly,
    NonExpandableError,
    Scalar,
    qratio,
    quantum_int,
    series_expand,
)
from .diagrams import (
    BoundaryMismatchError,
    Matching,
    compose,
    elementary,
    enumerate_basis,
    identity,
    reflect,
    tensor,
    through_degree,
)
from .morphisms import Morphism, lincomb
from .sequences import SignSeq, enumerate_seqs
from .projectors import (
    CheckResult,
    InadmissibleSequenceError,
    ProjectorCache,
    f_coeff,
    higher_projector,
    jones_wenzl,
    p_eps,
    q_elem,
    top_half,
    verify_branching,
    verify_characterization,
    verify_lower_expansion,
    verify_resolution,
    verify_slide_through,
)
from .skein import (
    BraidWord,
    NotAnEigenvectorError,
    crossing,
    eigenvalue_on,
    full_twist,
    markov_trace,
    resolve_braid,
    trace_pairing,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryMismatchError",
    "BraidWord",
    "CheckResult",
    "InadmissibleSequenceError",
    "LaurentPoly",
    "Matching",
    "Morphism",
    "NonExpandableError",
    "NotAnEigenvectorError",
    "ProjectorCache",
    "Scalar",
    "SignSeq",
    "compose",
    "crossing",
    "eigenvalue_on",
    "elementary",
    "enumerate_basis",
    "enumerate_seqs",
    "f_coeff",
    "full_twist",
    "higher_projector",
    "identity",
    "jones_wenzl",
    "lincomb",
    "markov_trace",
    "p_eps",
    "q_elem",
    "qratio",
    "quantum_int",
    "reflect",
    "resolve_braid",
    "series_expand",
    "tensor",
    "through_degree",
    "top_half",
    "trace_pairing",
    "verify_branching",
    "verify_characterization",
    "verify_lower_expansion",
    "verify_resolution",
    "verify_slide_through",
]
