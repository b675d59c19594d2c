"""Littlewood-Richardson coefficients, s-cuts of partitions, and when two
tensor products of irreducible polynomial GL(n) representations agree."""

from .cuts import SPoset, min_of_s_poset, s_cut, s_cut_witness, s_poset, witness_is_valid
from .errors import (
    DecompositionFailure,
    DegreeMismatch,
    LRTensorError,
    NotWeaklyDecreasing,
    ParseError,
    PartitionError,
    RankMismatch,
    SOutOfRange,
    TooManyParts,
)
from .lr import (
    Convention,
    Tableau,
    content,
    enumerate_lr,
    is_lattice_forward,
    is_lattice_reverse,
    is_semistandard,
    is_semistandard_reverse,
    lr_coefficient,
)
from .partition import (
    Partition,
    SkewShape,
    contains,
    lambda_minus,
    lambda_minus_minus,
    lex_compare,
    make_partition,
    partitions,
    size,
    sort_into_partition,
)
from .schur import MonomialPoly, SchurExpansion, product_schur_expansion, schur_polynomial
from .snn import (
    SnnCertificate,
    SnnVerdict,
    sigma_tau,
    snn_bruteforce,
    snn_certificates,
    snn_failure_test,
    verify_certificate,
)
from .tensor import (
    SolutionPair,
    TensorQuery,
    TrivialityBound,
    find_nontrivial,
    tensor_equal,
    tensor_solutions,
    triviality_bound,
    verify_theorem_bruteforce,
)

__version__ = "0.1.0"
