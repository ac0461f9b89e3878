"""Product-witness tensor norms by see-saw maximization, and the
data-hiding ratio pipeline built on them.

The central quantity is sup tr((f x g) z) over contractions f on A and g
on B. With one side fixed, the optimum over the other side is closed form:
the spectral sign for Hermitian witnesses, the polar unitary for complex
ones. Alternating the two exact half-steps therefore gives a nondecreasing
objective; multistart over randomized initial contractions guards against
local maxima. Global optimality is never certified, so every reported
value is a lower bound carrying the witness pair that achieves it.

For a Hermitian witness pair (f, g), the two outcomes (1 +- f x g)/2 form
a local binary measurement with classical postprocessing, so
Hermitian-field values are achievable local distinguishability; the trace
norm can exceed them by at most the factor 2 sqrt(2) min(n_a, n_b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterator, NamedTuple

import numpy as np

from .linalg import (
    BipartiteOperator,
    DegenerateOperatorError,
    as_square_matrix,
    asymmetry,
    hermitian_sign,
    trace_norm,
)
from .states import gue_hermitian, stream

FIELD_HERMITIAN = "hermitian"
FIELD_COMPLEX = "complex"

# Slack accepted on contraction operator norms and on the ratio-vs-bound
# comparison; both absorb eigensolver rounding, nothing more.
OPNORM_SLACK = 1e-12
BOUND_TOL = 1e-6

_TINY = 1e-300


@dataclass(frozen=True)
class SeeSawConfig:
    """Budget and determinism knobs for the see-saw estimator."""

    restarts: int = 32
    max_iters: int = 500
    rel_tol: float = 1e-10
    seed: int = 0
    field: str = FIELD_HERMITIAN

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError(f"restarts must be positive, got {self.restarts}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be positive, got {self.max_iters}")
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.field not in (FIELD_HERMITIAN, FIELD_COMPLEX):
            raise ValueError(f'field must be "{FIELD_HERMITIAN}" or "{FIELD_COMPLEX}", got {self.field!r}')


@dataclass(frozen=True, eq=False)
class NormEstimate:
    """A lower bound on a product-witness norm together with the witnesses
    (best_f, best_g) that certify it: value = tr((best_f x best_g) z).

    value_history records the objective after every half-step of the best
    run; restart_index identifies the multistart seed that won (None for a
    bare see-saw run).
    """

    value: float
    is_lower_bound: bool
    iterations_used: int
    converged: bool
    best_f: np.ndarray
    best_g: np.ndarray
    value_history: tuple[float, ...]
    restart_index: int | None = None


@dataclass(frozen=True, eq=False)
class RatioReport:
    """Trace norm against the product-witness estimate for one operator."""

    trace_norm: float
    eps_estimate: NormEstimate
    ratio: float
    bound: float
    satisfied: bool
    margin: float


class FieldComparison(NamedTuple):
    complex_value: float
    hermitian_value: float
    ratio: float


def bound_factor(n_a: int, n_b: int) -> float:
    """2 sqrt(2) min(n_a, n_b): the proven cap on the ratio of trace norm
    to Hermitian product-witness norm on A x B."""
    return 2.0 * math.sqrt(2.0) * min(n_a, n_b)


def error_probability(norm_value: float) -> float:
    """Optimal error (1 - v)/2 for a distinguishability-norm value v of a
    discrimination operator. v must lie in [0, 1] up to 1e-9."""
    v = float(norm_value)
    if not -1e-9 <= v <= 1.0 + 1e-9:
        raise ValueError(f"norm value {v!r} lies outside [0, 1]")
    return (1.0 - min(max(v, 0.0), 1.0)) / 2.0


def witness_value(z: BipartiteOperator, estimate: NormEstimate) -> float:
    """Re-evaluate tr((best_f x best_g) z) from the stored witnesses."""
    val = np.einsum("ab,ij,bjai->", estimate.best_f, estimate.best_g, z.reshaped())
    return float(val.real)


def _operand_a(z4: np.ndarray, g: np.ndarray) -> np.ndarray:
    # tr_B[z (1 x g)]: the A-side operand once g is fixed
    return np.einsum("ibjc,cb->ij", z4, g)


def _operand_b(z4: np.ndarray, f: np.ndarray) -> np.ndarray:
    # tr_A[z (f x 1)]: the B-side operand once f is fixed
    return np.einsum("aicj,ca->ij", z4, f)


def _half_step(m: np.ndarray, field: str) -> tuple[np.ndarray, float]:
    """Exact optimizer of one half-step: the witness w maximizing
    tr(w m) over contractions of the given field, with the value."""
    if field == FIELD_HERMITIAN:
        h = (m + m.conj().T) / 2
        vals, vecs = np.linalg.eigh(h)
        w = (vecs * np.where(vals >= 0.0, 1.0, -1.0)) @ vecs.conj().T
        return (w + w.conj().T) / 2, float(np.abs(vals).sum())
    u, s, vh = np.linalg.svd(m)
    return (u @ vh).conj().T, float(s.sum())


def _check_start(g0, dim: int, field: str) -> np.ndarray:
    w = as_square_matrix(g0)
    if w.shape != (dim, dim):
        raise ValueError(f"initial contraction has shape {w.shape}, expected ({dim}, {dim})")
    opnorm = float(np.linalg.svd(w, compute_uv=False)[0]) if w.any() else 0.0
    if opnorm > 1.0 + OPNORM_SLACK:
        raise ValueError(f"initial contraction has operator norm {opnorm!r} > 1")
    if field == FIELD_HERMITIAN and asymmetry(w) > 1e-12:
        raise ValueError("hermitian-field see-saw needs a Hermitian initial contraction")
    return w


def _identity_estimate(n_a: int, n_b: int, restart_index: int | None = None) -> NormEstimate:
    return NormEstimate(
        value=0.0,
        is_lower_bound=True,
        iterations_used=1,
        converged=True,
        best_f=np.eye(n_a, dtype=np.complex128),
        best_g=np.eye(n_b, dtype=np.complex128),
        value_history=(0.0, 0.0),
        restart_index=restart_index,
    )


def seesaw_run(
    z: BipartiteOperator,
    g0,
    config: SeeSawConfig,
    *,
    start_side: str = "B",
) -> NormEstimate:
    """Alternate exact half-steps of tr((f x g) z) from one initial
    contraction.

    g0 lives on start_side (default "B"); the first half-step optimizes the
    opposite side, so a start with zero overlap against z can leave the run
    at the fixed point 0. Each half-step is the exact optimum of its side,
    hence value_history is nondecreasing up to eigensolver noise and the
    run is deterministic given (z, g0, config).

    Stops once the per-iteration improvement drops to rel_tol relative to
    the current value, or after max_iters iterations (converged=False).
    """
    if start_side not in ("A", "B"):
        raise ValueError(f'start_side must be "A" or "B", got {start_side!r}')
    field = config.field
    if field == FIELD_HERMITIAN and not z.hermitian:
        raise ValueError("hermitian-field see-saw requires a Hermitian operator")
    n_a, n_b = z.n_a, z.n_b
    start = _check_start(g0, n_b if start_side == "B" else n_a, field)
    if z.is_zero():
        return _identity_estimate(n_a, n_b)

    z4 = z.reshaped()
    f = start if start_side == "A" else None
    g = start if start_side == "B" else None
    history: list[float] = []
    prev = None
    converged = False
    iters = 0
    for iters in range(1, config.max_iters + 1):
        if start_side == "B":
            f, v = _half_step(_operand_a(z4, g), field)
            history.append(v)
            g, v = _half_step(_operand_b(z4, f), field)
            history.append(v)
        else:
            g, v = _half_step(_operand_b(z4, f), field)
            history.append(v)
            f, v = _half_step(_operand_a(z4, g), field)
            history.append(v)
        if prev is not None and v - prev <= config.rel_tol * max(abs(v), _TINY):
            converged = True
            break
        prev = v
    return NormEstimate(
        value=history[-1],
        is_lower_bound=True,
        iterations_used=iters,
        converged=converged,
        best_f=f,
        best_g=g,
        value_history=tuple(history),
    )


def initial_contractions(dim: int, config: SeeSawConfig) -> Iterator[tuple[int, np.ndarray]]:
    """Deterministic multistart seeds: the identity at index 0, then
    spectral signs of GUE samples on substreams (seed, restart_index)."""
    yield 0, np.eye(dim, dtype=np.complex128)
    for i in range(1, config.restarts + 1):
        yield i, hermitian_sign(gue_hermitian(dim, stream(config.seed, i)))


def epsilon_norm(z: BipartiteOperator, config: SeeSawConfig) -> NormEstimate:
    """Best see-saw value over the multistart: a lower bound on the
    product-witness (injective tensor) norm of z.

    Never exceeds ||z||_1, since f x g is itself a global contraction. The
    cases z = 0 and n_a = 1 or n_b = 1 are exact by closed form. Ties
    between restarts resolve to the lowest restart index, so the result
    does not depend on evaluation order.
    """
    if config.field == FIELD_HERMITIAN and not z.hermitian:
        raise ValueError("hermitian-field estimate requires a Hermitian operator")
    n_a, n_b = z.n_a, z.n_b
    if z.is_zero():
        return _identity_estimate(n_a, n_b, restart_index=0)
    if n_a == 1 or n_b == 1:
        # One factor is scalar: the single nontrivial side is solved exactly.
        w, v = _half_step(z.matrix, config.field)
        one = np.ones((1, 1), dtype=np.complex128)
        f, g = (one, w) if n_a == 1 else (w, one)
        return NormEstimate(v, True, 1, True, f, g, (v,), restart_index=0)

    best = None
    for index, g0 in initial_contractions(n_b, config):
        est = seesaw_run(z, g0, config)
        if best is None or est.value > best.value:
            best = replace(est, restart_index=index)
    return best


def lo_norm_lower(z: BipartiteOperator, config: SeeSawConfig) -> NormEstimate:
    """Hermitian-field estimate, reported as achievable local
    distinguishability.

    The witness pair maps to the binary local measurement with effects
    (1 +- best_f x best_g)/2, so the value is attainable with one round of
    local measurement and classical postprocessing; it lower-bounds every
    larger measurement class as well.
    """
    if not z.hermitian:
        raise ValueError("local-measurement estimate requires a Hermitian operator")
    return epsilon_norm(z, replace(config, field=FIELD_HERMITIAN))


def hiding_ratio(z: BipartiteOperator, config: SeeSawConfig) -> RatioReport:
    """Data-hiding ratio report: ||z||_1 over the Hermitian product-witness
    estimate, compared against the 2 sqrt(2) min(n_a, n_b) cap.

    The estimate is a lower bound, so ratio can only overestimate the true
    hiding ratio; satisfied allows 1e-6 slack on the cap.
    """
    if z.is_zero():
        raise DegenerateOperatorError("hiding ratio is undefined for the zero operator")
    tn = trace_norm(z.matrix)
    est = epsilon_norm(z, replace(config, field=FIELD_HERMITIAN))
    ratio = tn / est.value if est.value > 0 else math.inf
    bound = bound_factor(z.n_a, z.n_b)
    return RatioReport(
        trace_norm=tn,
        eps_estimate=est,
        ratio=ratio,
        bound=bound,
        satisfied=ratio <= bound + BOUND_TOL,
        margin=bound - ratio,
    )


def complex_vs_hermitian_check(z: BipartiteOperator, config: SeeSawConfig) -> FieldComparison:
    """Estimate both witness fields with matched budgets.

    The complex value dominates the Hermitian one (larger witness set) and
    provably exceeds it by at most sqrt(2); the returned ratio makes the
    factor observable."""
    if not z.hermitian:
        raise ValueError("field comparison requires a Hermitian operator")
    c = epsilon_norm(z, replace(config, field=FIELD_COMPLEX)).value
    h = epsilon_norm(z, replace(config, field=FIELD_HERMITIAN)).value
    if h > 0:
        ratio = c / h
    else:
        ratio = 1.0 if c == 0 else math.inf
    return FieldComparison(complex_value=c, hermitian_value=h, ratio=ratio)
