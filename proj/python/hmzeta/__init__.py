"""Digamma, eta and zeta kernels, exact polynomial certificates and claim checks."""

import json

from ._core import (
    CertificationError,
    EvalResult,
    HarmonicMeanPole,
    PoleError,
    catalog,
    claim_ids,
    count_roots,
    digamma,
    digamma_zero,
    eta,
    eval_expr,
    harmonic_mean,
    lavrik_bound,
    polygamma,
    run_cli,
    stieltjes,
    stieltjes_bound,
    trigamma,
    zeta,
    zeta_regular,
    zeta_sandwich,
)
from . import _core


def certify(poly, a, b, expected_sign):
    """Sturm count and sign certificate as a dict. `poly` is a named
    polynomial (P, Q, P1, V, QUARTIC) or ascending coefficients "c0 c1 ..."."""
    return json.loads(_core._certify_json(poly, str(a), str(b), int(expected_sign)))


def verify(ids=("all",), grid_n=2000, threads=1):
    """Runs the selected claims and returns one dict per check."""
    return json.loads(_core._suite_json(list(ids), grid_n, threads))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
