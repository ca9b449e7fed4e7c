"""Finitely supported real multilinear forms and their sup norms.

A form of degree m is stored as a dense real coefficient tensor of shape
``dims``; evaluating it at vectors x^(1), ..., x^(m) contracts one tensor
axis per argument.  The sup norm here is the operator norm on c0: the
supremum of |U(x^(1), ..., x^(m))| over the unit balls of the sup norm.
For real scalars that supremum is attained at sign vectors (multilinearity
makes the objective affine in each coordinate), so forms small enough for
full vertex enumeration get an exact value; larger forms fall back to an
alternating coordinate-ascent heuristic whose result is still a valid
lower bound.

All user-facing I/O (the JSON form files) uses 1-based indices; the Python
API is 0-based like the underlying arrays.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

#: Vertex enumeration is used whenever the total number of sign vertices
#: (product of 2**dims[i]) does not exceed the evaluation budget.
DEFAULT_SUP_BUDGET = 2 ** 22

#: Restarts used by the heuristic ascent when enumeration is unaffordable.
ASCENT_RESTARTS = 32

_ASCENT_SEED = 7  # fixed internal seed: sup_norm must be deterministic


@dataclass(frozen=True)
class MultilinearForm:
    """Dense real coefficient tensor of a finitely supported m-linear form."""

    coeffs: np.ndarray
    label: str | None = None

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=float)
        if arr.ndim < 1:
            raise ValueError("a multilinear form needs degree >= 1")
        if any(d < 1 for d in arr.shape):
            raise ValueError(f"every slot needs support size >= 1, got dims {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("form coefficients must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return self.coeffs.ndim

    @property
    def dims(self) -> tuple[int, ...]:
        return self.coeffs.shape

    def scaled(self, c: float) -> "MultilinearForm":
        return MultilinearForm(c * self.coeffs, label=self.label)


@dataclass(frozen=True)
class SupNormResult:
    """Sup-norm value, whether it came from full vertex enumeration, and
    how many form evaluations were spent.  A non-exact value is always a
    valid lower bound of the true sup norm."""

    value: float
    exact: bool
    evaluations: int


def evaluate(form: MultilinearForm, points: Sequence[Sequence[float]]) -> float:
    """Evaluate the form at one vector per slot.

    Each vector must have exactly the slot's support size; the result is
    the full multilinear expansion sum(coeff * prod points[i][j_i]).
    """
    if len(points) != form.degree:
        raise ValueError(
            f"form of degree {form.degree} needs {form.degree} vectors, got {len(points)}"
        )
    vecs = []
    for i, p in enumerate(points):
        v = np.asarray(p, dtype=float)
        if v.ndim != 1 or v.shape[0] != form.dims[i]:
            raise ValueError(
                f"slot {i + 1} expects a vector of length {form.dims[i]}, "
                f"got length {v.shape[0] if v.ndim == 1 else 'non-vector'}"
            )
        vecs.append(v)
    val = form.coeffs
    for v in vecs:
        val = np.tensordot(v, val, axes=(0, 0))
    return float(val)


@lru_cache(maxsize=64)
def _sign_vertices(d: int) -> np.ndarray:
    """All 2**d sign vectors of length d, one per row, in a fixed order."""
    idx = np.arange(2 ** d, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(d)) & 1
    out = 1.0 - 2.0 * bits
    out.flags.writeable = False
    return out


def _vertex_values(coeffs: np.ndarray) -> np.ndarray:
    """Form values at every combination of sign vertices (flattened)."""
    arr = coeffs
    for axis in range(coeffs.ndim - 1, -1, -1):
        arr = np.tensordot(arr, _sign_vertices(coeffs.shape[axis]), axes=(axis, 1))
    return arr.ravel()


def _slot_gradient(coeffs: np.ndarray, signs: list[np.ndarray], slot: int) -> np.ndarray:
    """Contract every slot except `slot` with its sign vector."""
    arr = coeffs
    for axis in range(coeffs.ndim - 1, -1, -1):
        if axis == slot:
            continue
        arr = np.tensordot(arr, signs[axis], axes=(axis, 0))
    return arr


def _ascent(coeffs: np.ndarray, rng: np.random.Generator, max_evals: int) -> tuple[float, int]:
    """One run of alternating sign ascent from a random vertex.

    Per slot, the optimal signs given the others are the signs of the
    contracted coefficient vector; ties keep the current sign so the run
    is deterministic.  Returns (best |value|, evaluations used).
    """
    dims = coeffs.shape
    signs = [1.0 - 2.0 * rng.integers(0, 2, size=d).astype(float) for d in dims]
    value = abs(evaluate(MultilinearForm(coeffs), signs))
    evals = 1
    improved = True
    while improved:
        improved = False
        for slot in range(coeffs.ndim):
            if evals + dims[slot] > max_evals:
                return value, evals
            grad = _slot_gradient(coeffs, signs, slot)
            evals += dims[slot]
            new_signs = np.where(grad > 0, 1.0, np.where(grad < 0, -1.0, signs[slot]))
            new_value = float(np.dot(new_signs, grad))
            if new_value > value:
                signs[slot] = new_signs
                value = new_value
                improved = True
    return value, evals


def sup_norm(form: MultilinearForm, budget: int = DEFAULT_SUP_BUDGET) -> SupNormResult:
    """Sup norm over the unit balls of c0.

    If the full sign-vertex grid fits in `budget` evaluations the maximum
    is exact; otherwise alternating ascent with random restarts returns a
    deterministic lower bound flagged exact=False.
    """
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    n_vertices = 1
    for d in form.dims:
        n_vertices *= 2 ** d
    if n_vertices <= budget:
        values = _vertex_values(form.coeffs)
        return SupNormResult(float(np.max(np.abs(values))), True, n_vertices)

    best = 0.0
    used = 0
    for k in range(ASCENT_RESTARTS):
        if used >= budget:
            break
        rng = np.random.default_rng((_ASCENT_SEED, k))
        value, evals = _ascent(form.coeffs, rng, budget - used)
        used += evals
        best = max(best, value)
    return SupNormResult(best, False, used)


def littlewood2() -> MultilinearForm:
    """The extremal 2x2 bilinear sign form x1*y1 + x1*y2 + x2*y1 - x2*y2."""
    return MultilinearForm(np.array([[1.0, 1.0], [1.0, -1.0]]), label="littlewood2")


def triple221() -> MultilinearForm:
    """The 3-linear form on supports (4, 4, 2) built from two littlewood2
    blocks weighted by (z1 + z2) and (z1 - z2).

    Its sup norm is 4 and its (2,2,1) mixed norm is 4*sqrt(2), so it
    witnesses that the (2,2,1) constant is at least sqrt(2).
    """
    block = littlewood2().coeffs
    c = np.zeros((4, 4, 2))
    c[0:2, 0:2, 0] = block
    c[0:2, 0:2, 1] = block
    c[2:4, 2:4, 0] = block
    c[2:4, 2:4, 1] = -block
    return MultilinearForm(c, label="triple221")


CATALOG = {"littlewood2": littlewood2, "triple221": triple221}


def lift(form: MultilinearForm) -> MultilinearForm:
    """Extend an m-linear form to degree m+1 by multiplying with the first
    coordinate of a new leading argument.  The sup norm is unchanged: the
    new slot has support size 1, so its sign only flips the value."""
    label = f"lift({form.label})" if form.label else None
    return MultilinearForm(form.coeffs[np.newaxis, ...], label=label)


def permute_slots(form: MultilinearForm, order: Sequence[int]) -> MultilinearForm:
    """Reorder the argument slots (0-based permutation of range(degree))."""
    if sorted(order) != list(range(form.degree)):
        raise ValueError(f"order must be a permutation of 0..{form.degree - 1}, got {order}")
    return MultilinearForm(np.transpose(form.coeffs, order), label=form.label)


def random_sign_form(dims: Sequence[int], seed) -> MultilinearForm:
    """Deterministic form with i.i.d. coefficients in {-1, +1}."""
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise ValueError(f"dims must be nonempty and positive, got {dims}")
    rng = np.random.default_rng(seed)
    coeffs = 2.0 * rng.integers(0, 2, size=dims).astype(float) - 1.0
    return MultilinearForm(coeffs, label=f"random_sign{dims}")


# ---------------------------------------------------------------------------
# JSON form files (1-based indices, omitted entries are zero)
# ---------------------------------------------------------------------------

def form_to_dict(form: MultilinearForm) -> dict:
    entries = [
        {"index": [int(j) + 1 for j in idx], "value": float(form.coeffs[idx])}
        for idx in np.ndindex(*form.dims)
        if form.coeffs[idx] != 0.0
    ]
    doc = {"degree": form.degree, "dims": list(form.dims), "entries": entries}
    if form.label is not None:
        doc["label"] = form.label
    return doc


def form_from_dict(doc: dict) -> MultilinearForm:
    try:
        degree = int(doc["degree"])
        dims = tuple(int(d) for d in doc["dims"])
        entries = doc["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"form document needs degree, dims and entries: {exc}") from exc
    if degree != len(dims):
        raise ValueError(f"degree {degree} does not match {len(dims)} dims")
    coeffs = np.zeros(dims)
    seen = set()
    for entry in entries:
        idx = tuple(int(j) for j in entry["index"])
        if len(idx) != degree:
            raise ValueError(f"index {list(idx)} must have {degree} coordinates")
        if any(j < 1 or j > d for j, d in zip(idx, dims)):
            raise ValueError(f"index {list(idx)} out of range for dims {list(dims)}")
        if idx in seen:
            raise ValueError(f"duplicate index {list(idx)}")
        seen.add(idx)
        coeffs[tuple(j - 1 for j in idx)] = float(entry["value"])
    return MultilinearForm(coeffs, label=doc.get("label"))


def save_form(form: MultilinearForm, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(form_to_dict(form), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_form(path) -> MultilinearForm:
    with open(path, "r", encoding="utf-8") as fh:
        return form_from_dict(json.load(fh))
