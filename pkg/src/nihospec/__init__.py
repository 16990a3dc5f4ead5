"""Exact differential, Walsh, boomerang and code-weight spectra of power maps over F_{p^{2m}}."""
from .boomerang import BoomerangDistribution, fbct_distribution, fbct_entry, sozd_distribution, sozd_entry
from .codes import WeightDistribution, codeword, codeword_weight, weight_distribution
from .cyclotomic import CyclotomicInteger
from .diff import DifferentialSpectrum, ddt_entry, delta_counts, differential_spectrum
from .errors import NihoSpecError, TooLarge
from .field import Field, FieldParams, build_field
from .niho import (
    NihoExponent,
    count_V,
    curve_points,
    cij_count,
    family_s_values,
    make_niho,
    predict,
    search_locally_apn,
    verify,
)
from .walsh import WalshDistribution, count_Nr, moment, moments, walsh_distribution, walsh_value

__version__ = "0.1.0"

__all__ = [
    "BoomerangDistribution",
    "CyclotomicInteger",
    "DifferentialSpectrum",
    "Field",
    "FieldParams",
    "NihoExponent",
    "NihoSpecError",
    "TooLarge",
    "WalshDistribution",
    "WeightDistribution",
    "build_field",
    "cij_count",
    "codeword",
    "codeword_weight",
    "count_Nr",
    "count_V",
    "curve_points",
    "ddt_entry",
    "delta_counts",
    "differential_spectrum",
    "family_s_values",
    "fbct_distribution",
    "fbct_entry",
    "make_niho",
    "moment",
    "moments",
    "predict",
    "search_locally_apn",
    "sozd_distribution",
    "sozd_entry",
    "verify",
    "walsh_distribution",
    "walsh_value",
]
