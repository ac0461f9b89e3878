"""Two-player XOR games with quantum questions.

A game distributes the two halves of a bipartite question state to
players who each answer one bit; the correct XOR is prescribed by a sign
per state. The optimal bias over unrestricted (entangled-measurement)
strategies is the trace norm of the game operator; over independent local
+-1 answers it is the Hermitian product-witness norm, so the two never
differ by more than the factor 2 sqrt(2) min(n_a, n_b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .linalg import BipartiteOperator, trace_norm
from .norms import (
    BOUND_TOL,
    FIELD_HERMITIAN,
    NormEstimate,
    SeeSawConfig,
    bound_factor,
    epsilon_norm,
    _identity_estimate,
)
from .states import check_density_matrix, random_density_matrix, rng_from

PROB_SUM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class QuantumXorGame:
    """Question states with signs and weights on A x B."""

    n_a: int
    n_b: int
    states: tuple[np.ndarray, ...]
    signs: tuple[int, ...]
    probs: tuple[float, ...]

    def __post_init__(self):
        if self.n_a < 1 or self.n_b < 1:
            raise ValueError(f"local dimensions must be >= 1, got ({self.n_a}, {self.n_b})")
        n = len(self.states)
        if n < 1:
            raise ValueError("a game needs at least one question state")
        if len(self.signs) != n or len(self.probs) != n:
            raise ValueError(
                f"got {n} states, {len(self.signs)} signs, {len(self.probs)} probs; "
                "all three must have equal length"
            )
        for c in self.signs:
            if c not in (-1, 1):
                raise ValueError(f"signs must be +1 or -1, got {c!r}")
        if min(self.probs) < 0.0:
            raise ValueError(f"probs must be nonnegative, got {min(self.probs)!r}")
        total = math.fsum(self.probs)
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise ValueError(f"probs sum to {total!r}, deviating from 1 by {abs(total - 1.0):.3e}")
        dim = self.n_a * self.n_b
        checked = []
        for x, state in enumerate(self.states):
            h = check_density_matrix(state, name=f"state {x}")
            if h.shape != (dim, dim):
                raise ValueError(
                    f"state {x} has shape {h.shape}, expected ({dim}, {dim}) "
                    f"for local dimensions ({self.n_a}, {self.n_b})"
                )
            h.flags.writeable = False
            checked.append(h)
        object.__setattr__(self, "states", tuple(checked))
        object.__setattr__(self, "signs", tuple(int(c) for c in self.signs))
        object.__setattr__(self, "probs", tuple(float(p) for p in self.probs))

    @property
    def num_states(self) -> int:
        return len(self.states)


@dataclass(frozen=True, eq=False)
class GameReport:
    """Unrestricted versus product-strategy optimal biases for one game.

    ratio is None when the game operator vanishes (both biases are then 0
    and every strategy is optimal)."""

    beta_all: float
    beta_product: NormEstimate
    ratio: float | None
    bound: float
    satisfied: bool


def game_operator(game: QuantumXorGame) -> BipartiteOperator:
    """The signed mixture sum_x c_x p_x rho_x.

    Hermitian with trace norm at most 1; opposite signs on identical
    states cancel, which is how degenerate games arise."""
    dim = game.n_a * game.n_b
    m = np.zeros((dim, dim), dtype=np.complex128)
    for c, p, state in zip(game.signs, game.probs, game.states):
        m += (c * p) * state
    return BipartiteOperator(game.n_a, game.n_b, m, hermitian=True)


def evaluate_game(game: QuantumXorGame, config: SeeSawConfig) -> GameReport:
    """Optimal biases of one game.

    beta_all is the trace norm of the game operator; beta_product is the
    Hermitian product-witness estimate (independent local +-1 answers), a
    lower bound on the true product bias. ratio compares the two against
    the 2 sqrt(2) min(n_a, n_b) cap with 1e-6 slack."""
    gop = game_operator(game)
    bound = bound_factor(game.n_a, game.n_b)
    if gop.is_zero():
        zero = _identity_estimate(game.n_a, game.n_b, restart_index=0)
        return GameReport(beta_all=0.0, beta_product=zero, ratio=None, bound=bound, satisfied=True)
    beta_all = trace_norm(gop.matrix)
    est = epsilon_norm(gop, replace(config, field=FIELD_HERMITIAN))
    ratio = beta_all / est.value if est.value > 0 else math.inf
    return GameReport(
        beta_all=beta_all,
        beta_product=est,
        ratio=ratio,
        bound=bound,
        satisfied=ratio <= bound + BOUND_TOL,
    )


def random_game(n_a: int, n_b: int, num_states: int = 4, seed=0, env: int | None = None) -> QuantumXorGame:
    """Random game: induced-measure question states, uniform weights,
    independent uniform signs."""
    if num_states < 1:
        raise ValueError(f"num_states must be >= 1, got {num_states}")
    rng = rng_from(seed)
    dim = n_a * n_b
    states = tuple(random_density_matrix(dim, env=env, seed=rng) for _ in range(num_states))
    signs = tuple(int(c) for c in rng.choice((-1, 1), size=num_states))
    probs = (1.0 / num_states,) * num_states
    return QuantumXorGame(n_a=n_a, n_b=n_b, states=states, signs=signs, probs=probs)
