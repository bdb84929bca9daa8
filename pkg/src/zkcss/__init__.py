"""Zero-knowledge codes, CSS code pairs, and the transforms between them.

Everything is exact arithmetic over prime fields GF(p), with brute-force
oracles available for small instances.
"""

from .code import (
    LinearCode,
    dual,
    from_generator,
    from_parity_check,
    hamming_distance,
    hamming_weight,
    min_weight,
    min_weight_excluding,
    nearest_codeword,
)
from .css import CssCode, css_rate, distance, distance_x, distance_z, gallery, new_css
from .equiv import css_to_zk, roundtrip_check, roundtrip_check_css, zk_to_css
from .errors import BudgetExceededError, DegenerateCodeError, FormatError, OrthogonalityError
from .field import FieldElement, PrimeField, inner_product
from .matrix import Matrix, complete_basis, image_basis, kernel_basis, rank, rref, solve
from .zkenc import (
    RandomizedEncoder,
    decode,
    encode,
    is_decodable_from,
    is_t_zk_algebraic,
    is_t_zk_oracle,
    is_t_zk_support,
    is_uniform_t_zk,
    restriction_distribution,
    stronger_row_condition,
    support_contains_zero,
)

__version__ = "0.1.0"
