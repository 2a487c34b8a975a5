"""Deterministic encodings of prime-field elements into Hessian elliptic curves
and hyperelliptic curves of genus >= 2.

    >>> from hyperenc import HessianCurve, encode
    >>> encode(HessianCurve(5, 0), 0)
    CurvePoint(x=FieldElement(1, q=5), y=FieldElement(2, q=5))
"""

from .census import CensusReport, hessian_prediction, image_census, sample_curve, verify_family
from .curves import (
    FAMILIES,
    CurvePoint,
    DeMoivreCurve,
    Genus2Type1Curve,
    Genus2Type2Curve,
    HessianCurve,
    QuasiQuadraticCurve,
    curve_from_dict,
    is_on_curve,
    make_curve,
    validate,
)
from .encoders import (
    demoivre_encode,
    demoivre_preimages,
    demoivre_roots,
    encode,
    genus2_type1_encode,
    genus2_type2_encode,
    hessian_encode,
    hessian_preimages,
    icart_encode,
    preimages,
    quasiquadratic_encode,
    quasiquadratic_preimage,
)
from .exceptions import (
    CapabilityMissing,
    DegenerateCurve,
    EmptyDivisor,
    EvenModulus,
    FieldDivisionByZero,
    FieldError,
    FieldMismatch,
    FieldTooLarge,
    HashFailure,
    HyperencError,
    NoPreimage,
    NoRationalRoot,
    NoSquareRoot,
    NotEncodable,
    NotPrime,
    Undefined,
    VerificationFailure,
)
from .ffield import FieldCtx, FieldElement, arith, is_probable_prime, make_field, to_hex
from .hashing import hash_to_divisor, hash_to_point
from .invariants import hessian_j_invariant, igusa, igusa_locus_residual
from .jacobian import ReducedDivisor, encode_smooth_divisor, negate_point

__version__ = "0.1.0"
