"""Exact certificates for the quadratic feasibility windows of a Yamabe test function."""

from .beta import IntegralIndex, integral_exact, leading_constant_check, reduce_to_base, sphere_volume, verify_recurrences
from .exact import PiScaled, RatFunc, UniPoly, partial_fractions
from .feasibility import (
    certify_intersection,
    certify_lemma_poly,
    certify_tail,
    falsify_scan,
    replay_certificate,
    replay_report,
    roots,
    window,
    witness_verify,
)
from .oracle import HPValue, OracleDisagreement, crosscheck, eval_hp, quad_moment, threshold
from .report import LemmaReport
from .sign import SignCert, replay, sqrtsum_sign
from .spectral import SpectralParams, d, delta, expansion_check, nu, p_prime_check, u

__version__ = "0.1.0"

__all__ = [
    "HPValue",
    "IntegralIndex",
    "LemmaReport",
    "OracleDisagreement",
    "PiScaled",
    "RatFunc",
    "SignCert",
    "SpectralParams",
    "UniPoly",
    "certify_intersection",
    "certify_lemma_poly",
    "certify_tail",
    "crosscheck",
    "d",
    "delta",
    "eval_hp",
    "expansion_check",
    "falsify_scan",
    "integral_exact",
    "leading_constant_check",
    "nu",
    "p_prime_check",
    "partial_fractions",
    "quad_moment",
    "reduce_to_base",
    "replay",
    "replay_certificate",
    "replay_report",
    "roots",
    "sphere_volume",
    "sqrtsum_sign",
    "threshold",
    "u",
    "verify_recurrences",
    "window",
    "witness_verify",
]
