"""Exact Rademacher averages and cotype-2 ratios of finite families in l_r.

The cotype-2 inequality with average exponent s bounds
(sum_k ||x_k||^2)^(1/2) by a constant times the s-average of
||sum_k eps_k x_k|| over independent signs eps.  For finitely many
vectors the average over [0,1] of the Rademacher combination equals the
uniform average over all 2^n sign patterns, which this module enumerates
exactly (capped at n = 24; no sampling fallback).

For l_r with 1 <= r <= 2 the smallest constant is known in closed form up
to the Khinchin branch point p0 ~ 1.84742: it equals 2^(1/r - 1/2) for
r <= p0, and for r > p0 that value is still a lower bound while
(1/sqrt2)*(Gamma((r+1)/2)/sqrt(pi))^(-1/r) bounds it above.  The pair
x1 = (1, 1), x2 = (1, -1) attains the lower bound for every s, since all
four sign combinations land on a vector of norm 2.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .constants import solve_p0, _khinchin_gamma
from .forms import MultilinearForm, sup_norm
from .mixed_norms import ExponentTuple, mixed_norm

#: Exact sign enumeration bound: instances with more vectors are rejected.
MAX_ENUM_VECTORS = 24

_CHUNK = 1 << 14

#: r within this distance above the branch point still counts as sharp.
SHARP_EDGE = 1e-9

_P0_TOL = 1e-10


@dataclass(frozen=True)
class CotypeInstance:
    """A finite vector family in l_r with its exact cotype-2 ratio for
    average exponent s: lhs = (sum ||x_k||_r^2)^(1/2), rhs = the exact
    Rademacher s-average, ratio = lhs/rhs."""

    r: float
    s: float
    vectors: np.ndarray
    lhs: float
    rhs: float
    ratio: float


@dataclass(frozen=True)
class CotypeBounds:
    r: float
    lower: float
    upper: float
    sharp: bool  # lower == upper, i.e. r at or below the branch point


def _as_matrix(vectors) -> np.ndarray:
    mat = np.asarray(vectors, dtype=float)
    if mat.ndim != 2 or mat.shape[0] < 1 or mat.shape[1] < 1:
        raise ValueError("need n >= 1 vectors of a common dimension d >= 1")
    if not np.all(np.isfinite(mat)):
        raise ValueError("vector entries must be finite")
    return mat


def rademacher_average(vectors, r: float, s: float) -> float:
    """(mean over all 2^n sign patterns of ||sum eps_k x_k||_r^s)^(1/s).

    Exact enumeration, vectorized in chunks of sign patterns; n is capped
    at MAX_ENUM_VECTORS.
    """
    mat = _as_matrix(vectors)
    n = mat.shape[0]
    if n > MAX_ENUM_VECTORS:
        raise ValueError(f"exact enumeration capped at {MAX_ENUM_VECTORS} vectors, got {n}")
    if r < 1.0:
        raise ValueError(f"need r >= 1, got {r}")
    if s <= 0.0:
        raise ValueError(f"need s > 0, got {s}")
    total_patterns = 2 ** n
    partials = []
    for start in range(0, total_patterns, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total_patterns), dtype=np.int64)
        signs = 1.0 - 2.0 * ((idx[:, None] >> np.arange(n)) & 1)
        sums = signs @ mat
        norms = (np.abs(sums) ** r).sum(axis=1) ** (1.0 / r)
        partials.append(float((norms ** s).sum()))
    return (math.fsum(partials) / total_patterns) ** (1.0 / s)


def cotype_ratio(vectors, r: float, s: float) -> float:
    """Smallest constant making the cotype-2 inequality hold for this
    family: (sum ||x_k||_r^2)^(1/2) divided by the Rademacher s-average."""
    mat = _as_matrix(vectors)
    if not np.any(mat):
        raise ValueError("cotype ratio undefined for an all-zero family")
    lhs = math.sqrt(math.fsum((np.abs(row) ** r).sum() ** (2.0 / r) for row in mat))
    rhs = rademacher_average(mat, r, s)
    return lhs / rhs


def make_instance(vectors, r: float, s: float) -> CotypeInstance:
    mat = _as_matrix(vectors)
    if not np.any(mat):
        raise ValueError("cotype ratio undefined for an all-zero family")
    lhs = math.sqrt(math.fsum((np.abs(row) ** r).sum() ** (2.0 / r) for row in mat))
    rhs = rademacher_average(mat, r, s)
    mat = mat.copy()
    mat.flags.writeable = False
    return CotypeInstance(float(r), float(s), mat, lhs, rhs, lhs / rhs)


def extremal_instance(r: float) -> CotypeInstance:
    """The pair (1, 1), (1, -1) in l_r with s = r; every sign pattern gives
    a vector of norm 2, so the ratio is exactly 2^(1/r - 1/2) regardless
    of the average exponent."""
    if r < 1.0:
        raise ValueError(f"need r >= 1, got {r}")
    return make_instance([[1.0, 1.0], [1.0, -1.0]], r, r)


def cotype_bounds(r: float) -> CotypeBounds:
    """Best known bounds for the cotype-2 constant of l_r, 1 <= r <= 2.

    The lower bound 2^(1/r - 1/2) holds for every average exponent; it is
    the exact constant up to the branch point, and above it the reciprocal
    of the gamma-branch Khinchin constant bounds from above.
    """
    if not 1.0 <= r <= 2.0:
        raise ValueError(f"bounds defined for 1 <= r <= 2, got {r}")
    lower = 2.0 ** (1.0 / r - 0.5)
    sharp = r <= solve_p0(_P0_TOL) + SHARP_EDGE
    # max() only absorbs rounding noise: the true constant is >= lower, so
    # raising a computed upper bound to lower keeps it valid (at r = 2 the
    # gamma branch evaluates one ulp below 1).
    upper = lower if sharp else max(lower, 1.0 / _khinchin_gamma(r))
    return CotypeBounds(float(r), lower, upper, sharp)


def bilinear_cotype_certificate(form: MultilinearForm, r: float) -> float:
    """Certified lower bound for the cotype-2 constant of l_r from one
    bilinear form: its (2, r) mixed norm over its sup norm.

    Fixing the second argument at basis vectors turns the form into an
    operator into l_r whose norm is at most the form's; the cotype
    inequality applied to its basis images then yields exactly this ratio
    as a lower bound.
    """
    if form.degree != 2:
        raise ValueError(f"certificate needs a bilinear form, got degree {form.degree}")
    if not 1.0 <= r <= 2.0:
        raise ValueError(f"certificate defined for 1 <= r <= 2, got {r}")
    if not np.any(form.coeffs):
        raise ValueError("certificate undefined for the zero form")
    mixed = mixed_norm(form, ExponentTuple(((1, 2.0), (1, float(r)))))
    return mixed / sup_norm(form).value


# ---------------------------------------------------------------------------
# JSON instance files: { "r": v, "s": v, "vectors": [[...], [...]] }
# ---------------------------------------------------------------------------

def instance_from_dict(doc: dict) -> CotypeInstance:
    try:
        r = float(doc["r"])
        s = float(doc["s"])
        vectors = doc["vectors"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"instance document needs r, s and vectors: {exc}") from exc
    return make_instance(vectors, r, s)


def load_instance(path) -> CotypeInstance:
    with open(path, "r", encoding="utf-8") as fh:
        return instance_from_dict(json.load(fh))
