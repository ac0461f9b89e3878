"""Seedable generators for random and structured bipartite operators.

Everything draws from counter-based Philox streams so runs are reproducible
and independent substreams can be derived from (seed, index) without
coordination between call sites.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import BipartiteOperator, hermitian_part

# Density-matrix admission tolerances: eigenvalues may dip this far below
# zero and the trace may deviate this much from one.
DENSITY_EIG_FLOOR = 1e-10
DENSITY_TRACE_TOL = 1e-10


def rng_from(seed) -> np.random.Generator:
    """Philox generator for an integer seed; Generator instances pass through."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed))))


def stream(seed: int, *key: int) -> np.random.Generator:
    """Independent Philox substream identified by (seed, *key)."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(ss))


def haar_unitary(n: int, seed) -> np.ndarray:
    """Haar-distributed n x n unitary.

    QR of a complex Ginibre sample with the R-diagonal phase correction,
    which removes the sign ambiguity that would otherwise bias QR output
    away from Haar measure.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    rng = rng_from(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    absd = np.abs(d)
    phases = np.where(absd > 0, d, 1.0) / np.where(absd > 0, absd, 1.0)
    return q * phases


def gue_hermitian(n: int, seed) -> np.ndarray:
    """GUE sample: N(0,1) real diagonal, off-diagonal real and imaginary
    parts independent N(0, 1/2). E tr(m^2) = n^2."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    rng = rng_from(seed)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2


def random_density_matrix(n: int, env: int | None = None, seed=0) -> np.ndarray:
    """Induced-measure density matrix G G^dag / tr(G G^dag) for an n x env
    complex Ginibre G.

    env defaults to n (the Hilbert-Schmidt measure); expected purity is
    (n + env)/(n*env + 1).
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    env = n if env is None else env
    if env < 1:
        raise ValueError(f"environment dimension must be >= 1, got {env}")
    rng = rng_from(seed)
    g = rng.standard_normal((n, env)) + 1j * rng.standard_normal((n, env))
    rho = g @ g.conj().T
    return hermitian_part(rho / np.trace(rho).real)


def check_density_matrix(
    m,
    name: str = "state",
    eig_floor: float = DENSITY_EIG_FLOOR,
    trace_tol: float = DENSITY_TRACE_TOL,
) -> np.ndarray:
    """Validate unit trace and positivity within tolerances; returns the
    Hermitian part."""
    h = hermitian_part(m)
    tr = float(np.trace(h).real)
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"{name} has trace {tr!r}, deviating from 1 by more than {trace_tol:.1e}")
    lam_min = float(np.linalg.eigvalsh(h)[0])
    if lam_min < -eig_floor:
        raise ValueError(f"{name} has eigenvalue {lam_min:.3e} below -{eig_floor:.1e}")
    return h


@dataclass(frozen=True, eq=False)
class DiscriminationInstance:
    """Inputs of binary state discrimination: two states on A x B and the
    prior probability p of the first."""

    rho: np.ndarray
    sigma: np.ndarray
    p: float
    n_a: int
    n_b: int

    def __post_init__(self):
        if self.n_a < 1 or self.n_b < 1:
            raise ValueError(f"local dimensions must be >= 1, got ({self.n_a}, {self.n_b})")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"prior must lie in [0, 1], got {self.p}")
        dim = self.n_a * self.n_b
        for name in ("rho", "sigma"):
            state = check_density_matrix(getattr(self, name), name=name)
            if state.shape != (dim, dim):
                raise ValueError(
                    f"{name} has shape {state.shape}, expected ({dim}, {dim}) "
                    f"for local dimensions ({self.n_a}, {self.n_b})"
                )
            state.flags.writeable = False
            object.__setattr__(self, name, state)


def werner_hiding_pair(d: int) -> DiscriminationInstance:
    """Normalized projectors onto the symmetric and antisymmetric subspaces
    of C^d x C^d at prior 1/2.

    Globally the pair is orthogonal (perfectly distinguishable); under local
    strategies its distinguishability decays with d, which is the hiding
    phenomenon these norms measure.
    """
    if d < 2:
        raise ValueError(f"hiding pair needs d >= 2 (no antisymmetric subspace at d={d})")
    eye = np.eye(d * d)
    flip = eye.reshape(d, d, d, d).swapaxes(0, 1).reshape(d * d, d * d)
    rho = (eye + flip) / (d * (d + 1))
    sigma = (eye - flip) / (d * (d - 1))
    return DiscriminationInstance(rho=rho, sigma=sigma, p=0.5, n_a=d, n_b=d)


def discrimination_operator(inst: DiscriminationInstance) -> BipartiteOperator:
    """z = p rho - (1-p) sigma; its distinguishability norms give the
    optimal discrimination error via (1 - ||z||)/2."""
    z = inst.p * inst.rho - (1.0 - inst.p) * inst.sigma
    return BipartiteOperator(inst.n_a, inst.n_b, z, hermitian=True)


def gue_operator(n_a: int, n_b: int, seed) -> BipartiteOperator:
    """GUE sample on the full product space, tagged with local dimensions."""
    return BipartiteOperator(n_a, n_b, gue_hermitian(n_a * n_b, seed), hermitian=True)


def induced_difference(n_a: int, n_b: int, seed, p: float = 0.5) -> BipartiteOperator:
    """Discrimination operator of two independent induced-measure states."""
    rng = rng_from(seed)
    dim = n_a * n_b
    rho = random_density_matrix(dim, seed=rng)
    sigma = random_density_matrix(dim, seed=rng)
    inst = DiscriminationInstance(rho=rho, sigma=sigma, p=p, n_a=n_a, n_b=n_b)
    return discrimination_operator(inst)
