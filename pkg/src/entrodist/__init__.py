"""Entropy distance of linear codes and linear encoders over finite fields.

The entropy distance between two vectors is the log (base q) of the
surface area of the Hamming sphere whose radius is their Hamming
distance.  This package computes it exactly (surfaces as big integers),
together with code constructions, weight spectra, size bounds, encoder
bounds, and rough-sphere packing experiments.
"""

from .codes import (
    LinearCode,
    WeightDistribution,
    code_from_generator,
    dual,
    entropy_distance_of_code,
    hamming,
    hamming_distance_of_code,
    macwilliams_transform,
    puncture,
    reed_muller,
    repetition,
    rm_zero_subcode,
    shorten,
    simplex,
    spc,
    weight_distribution,
    weight_distribution_bruteforce,
)
from .entropy import (
    LogQValue,
    entropy_distance,
    entropy_weight,
    product_entropy_weight,
    qary_entropy,
    qary_entropy_inv,
    surface_count,
    weight_entropy,
)
from .errors import (
    BudgetExceededError,
    EntrodistError,
    InfeasibleParameterError,
    MatrixFormatError,
    RankDropError,
    SearchExhaustedError,
)
from .gf import FieldSpec, GFMatrix, GFVector, field_make, field_of_order

__all__ = [
    "BudgetExceededError",
    "EntrodistError",
    "FieldSpec",
    "GFMatrix",
    "GFVector",
    "InfeasibleParameterError",
    "LinearCode",
    "LogQValue",
    "MatrixFormatError",
    "RankDropError",
    "SearchExhaustedError",
    "WeightDistribution",
    "code_from_generator",
    "dual",
    "entropy_distance",
    "entropy_distance_of_code",
    "entropy_weight",
    "field_make",
    "field_of_order",
    "hamming",
    "hamming_distance_of_code",
    "macwilliams_transform",
    "product_entropy_weight",
    "puncture",
    "qary_entropy",
    "qary_entropy_inv",
    "reed_muller",
    "repetition",
    "rm_zero_subcode",
    "shorten",
    "simplex",
    "spc",
    "surface_count",
    "weight_distribution",
    "weight_distribution_bruteforce",
    "weight_entropy",
]

__version__ = "0.1.0"
