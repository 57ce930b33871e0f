"""Garside calculus for braid groups: normal forms, cyclic sliding, curves and components."""

from .curves import (
    CurveCoordinates,
    RoundFamily,
    act,
    coords_of,
    detect_round,
    image_family,
    invariant_round_families,
    minimal_standardizer,
    parse_family,
)
from .decompose import (
    Decomposition,
    all_components,
    component,
    compose_components,
    interior_braid,
    is_periodic,
    subbraid,
)
from .errors import GarsideError, ParseError, PreconditionError, ResourceCapError
from .families import (
    DeltaConjugateSpec,
    WitnessSpec,
    build_beta,
    build_witness_y,
    build_x,
    enumerate_delta_conjugates,
    sc_experiment,
)
from .normal_form import (
    NormalForm,
    delta,
    equals,
    identity,
    invert,
    meet,
    multiply,
    normal_form,
    tau,
)
from .sliding import (
    SlidingCircuitSet,
    conjugacy_test,
    cyclic_sliding,
    in_sliding_circuit,
    preferred_prefix,
    slide_to_circuit,
    sliding_circuit_set,
)
from .words import BraidWord, parse_word

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "CurveCoordinates", "Decomposition", "DeltaConjugateSpec", "GarsideError",
    "NormalForm", "ParseError", "PreconditionError", "ResourceCapError", "RoundFamily",
    "SlidingCircuitSet", "WitnessSpec", "act", "all_components", "build_beta", "build_witness_y",
    "build_x", "component", "compose_components", "conjugacy_test", "coords_of", "cyclic_sliding",
    "delta", "detect_round", "enumerate_delta_conjugates", "equals", "identity", "image_family",
    "in_sliding_circuit", "interior_braid", "invariant_round_families", "invert", "is_periodic",
    "meet", "minimal_standardizer", "multiply", "normal_form", "parse_family", "parse_word",
    "preferred_prefix", "sc_experiment", "slide_to_circuit", "sliding_circuit_set", "subbraid", "tau",
]
