"""Exact arithmetic for the ring of quasisymmetric functions over the
integers: the quasi-shuffle algebra on compositions, its lambda-ring
operations, symmetric-function plethysm, the elementary-Lyndon generator
basis with a constructive change of basis, and per-weight freeness
certificates checked in exact integer arithmetic."""

from .compositions import (
    Composition,
    cfl_factorize,
    composition,
    concat,
    concat_power,
    content_gcd,
    enumerate_compositions,
    enumerate_elementary_lyndon,
    format_composition,
    is_lyndon,
    lex_compare,
    parse_composition,
    reduce_content,
    weight,
    wll_compare,
    wll_key,
)
from .elements import (
    QSymmElement,
    element_from_json_obj,
    element_to_json_obj,
    format_element,
    parse_element,
    quasi_shuffle,
)
from .errors import ConsistencyError, IntegralityError, ParseError, QSymmError
from .generators import (
    FreenessCertificate,
    GeneratorPolynomial,
    certificate_to_json_obj,
    det_bareiss,
    enumerate_generator_monomials,
    expand,
    express,
    express_element,
    format_generator_polynomial,
    freeness_certificate,
    make_monomial,
    monomial_weight,
    parse_generator_polynomial,
    product_gen,
)
from .lambda_ops import (
    LambdaSeries,
    adams_from_lambda,
    elementary_gen,
    exp_identity_check,
    frobenius,
    lambda_n,
    lambda_series,
    power_gen,
)
from .oracle import (
    OracleReport,
    TruncatedPolynomial,
    elementary_of_monomials,
    expand_composition,
    expand_element,
    frobenius_poly,
    oracle_suite,
    poly_mul,
)
from .symmetric import (
    SymmPoly,
    e_compose_p,
    e_to_p,
    evaluate_at,
    format_symm,
    p_to_e,
    plethysm_compat_check,
    plethysm_p,
)

__version__ = "0.1.0"
