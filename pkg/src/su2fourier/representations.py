"""Irreducible unitary representations of SU(2).

The representation pi_n (n >= 0) has dimension n+1 and acts on homogeneous
polynomials of degree n in two variables; in the orthonormal monomial basis
e_q = u^{n-q} v^q / sqrt((n-q)! q!) the matrix elements are explicit
binomial sums in (a, b, conj(a), conj(b)).  The character is

    chi_n(omega(theta)) = sin((n+1) theta) / sin(theta),

evaluated through the Chebyshev-U recurrence wherever sin(theta) is small
(|sin theta| < 1e-4), which removes the 0/0 cancellation at theta in {0, pi}
where the limits are n+1 and (-1)^n (n+1).

On the Euler tensor grid of ``group.haar_grid`` the matrices factorize as

    pi_n(x(alpha, beta, gamma))[p, q]
        = e^{i alpha (n-2p)/2} * d_n(beta)[p, q] * e^{i gamma (n-2q)/2}

with the real "little-d" factor d_n(beta) = pi_n((cos(beta/2), sin(beta/2))).
``fourier`` relies on this factorization for fast transforms; it is asserted
against the direct evaluation in the test suite.

Truncation index sets: the polyhedral set of order N is {0, ..., N}; the
spherical set collects |m - 1| <= N under the normalization that spaces the
shifted lattice at integers, giving {1} for N = 0 and {0, ..., N+1} for
N >= 1 (so the spherical set of order N equals the polyhedral one of order
N+1).  Block decompositions collapse accordingly: polyhedral blocks are the
singletons {j}; spherical blocks are {1}, {0, 2}, then singletons {j+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lgamma

import numpy as np

__all__ = [
    "MAX_REPR_DEGREE",
    "CHAR_POLE_THRESHOLD",
    "degree",
    "char_eval",
    "char_table",
    "repr_matrix",
    "repr_matrix_batch",
    "wigner_d",
    "TruncationSet",
    "truncation_set",
]

MAX_REPR_DEGREE = 64  # double precision cap for the binomial-sum evaluation
CHAR_POLE_THRESHOLD = 1e-4


def degree(n: int) -> int:
    """Dimension of pi_n."""
    return n + 1


def char_eval(n: int, theta) -> np.ndarray | float:
    """chi_n at conjugacy angle(s) theta, pole-safe.

    Uses sin((n+1)theta)/sin(theta) where |sin theta| >= 1e-4 and the
    Chebyshev recurrence U_n(cos theta) elsewhere.
    """
    th = np.asarray(theta, dtype=float)
    scalar = th.ndim == 0
    th = np.atleast_1d(th)
    s = np.sin(th)
    out = np.empty_like(th)
    safe = np.abs(s) >= CHAR_POLE_THRESHOLD
    out[safe] = np.sin((n + 1) * th[safe]) / s[safe]
    if (~safe).any():
        x = np.cos(th[~safe])
        u0 = np.ones_like(x)
        u1 = 2 * x
        if n == 0:
            out[~safe] = u0
        elif n == 1:
            out[~safe] = u1
        else:
            for _ in range(n - 1):
                u0, u1 = u1, 2 * x * u1 - u0
            out[~safe] = u1
    return float(out[0]) if scalar else out


def char_table(n_max: int, theta: np.ndarray) -> np.ndarray:
    """Table chi_n(theta) for n = 0..n_max, shape (n_max+1,) + theta.shape.

    The recurrence U_{n+1} = 2 cos(theta) U_n - U_{n-1} is stable on [0, pi]
    (solutions stay oscillatory), so one pass serves every angle including
    the poles.
    """
    th = np.atleast_1d(np.asarray(theta, dtype=float))
    x = np.cos(th)
    out = np.empty((n_max + 1,) + th.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 2 * x
    for n in range(2, n_max + 1):
        out[n] = 2 * x * out[n - 1] - out[n - 2]
    return out


def _check_degree(n: int) -> None:
    if not 0 <= n <= MAX_REPR_DEGREE:
        raise ValueError(f"representation degree n must be in [0, {MAX_REPR_DEGREE}], got {n}")


def _norm_factors(n: int) -> np.ndarray:
    lf = [lgamma(k + 1) for k in range(n + 1)]
    p = np.arange(n + 1)
    half = np.array([0.5 * (lf[n - k] + lf[k]) for k in p])
    return np.exp(half[:, None] - half[None, :])  # norm[p, q]


def repr_matrix_batch(n: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """pi_n at arrays of elements; returns shape a.shape + (n+1, n+1).

    Entry (p, q) is the coefficient of e_p in pi_n(x) e_q:

        sqrt((n-p)! p! / ((n-q)! q!)) *
        sum_i C(n-q, i) C(q, p-i) a^{n-q-i} (-conj b)^i b^{q-p+i} conj(a)^{p-i}
    """
    _check_degree(n)
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    shape = a.shape
    C = np.zeros((n + 1, n + 1))
    for i in range(n + 1):
        C[i, 0] = 1.0
        for j in range(1, i + 1):
            C[i, j] = C[i - 1, j - 1] + C[i - 1, j]
    norm = _norm_factors(n)
    ap = np.stack([a**k for k in range(n + 1)])
    acp = np.conj(ap)
    bp = np.stack([b**k for k in range(n + 1)])
    bcp = np.conj(bp)
    M = np.zeros(shape + (n + 1, n + 1), dtype=complex)
    for p in range(n + 1):
        for q in range(n + 1):
            acc = np.zeros(shape, dtype=complex)
            for i in range(max(0, p - q), min(n - q, p) + 1):
                coef = C[n - q, i] * C[q, p - i] * (-1.0) ** i
                acc += coef * ap[n - q - i] * bcp[i] * bp[q - p + i] * acp[p - i]
            M[..., p, q] = norm[p, q] * acc
    return M


def repr_matrix(n: int, x) -> np.ndarray:
    """pi_n(x) as an (n+1) x (n+1) unitary matrix."""
    return repr_matrix_batch(n, np.asarray(x.a), np.asarray(x.b))


def wigner_d(n: int, beta: np.ndarray) -> np.ndarray:
    """Real middle factor d_n(beta) of the Euler factorization, (len, n+1, n+1)."""
    be = np.atleast_1d(np.asarray(beta, dtype=float))
    return repr_matrix_batch(n, np.cos(be / 2) + 0j, np.sin(be / 2) + 0j).real


def euler_diag_freqs(n: int) -> np.ndarray:
    """Frequencies (n - 2p) of the diagonal Euler phase factors, p = 0..n."""
    return n - 2 * np.arange(n + 1)


@dataclass(frozen=True)
class TruncationSet:
    """Index set of a partial-sum truncation plus its block decomposition."""

    mode: str  # "polyhedral" | "spherical"
    N: int
    members: tuple
    blocks: tuple

    @property
    def max_index(self) -> int:
        return self.members[-1]


def truncation_set(mode: str, N: int) -> TruncationSet:
    """Polyhedral {0..N} or spherical {m >= 0 : |m-1| <= N} truncations.

    The spherical normalization spaces ||lambda_m - rho|| at the integers
    |m - 1|, so the spherical set of order N equals the polyhedral set of
    order N+1 for every N >= 1 (and is {1} at N = 0).
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if mode == "polyhedral":
        members = tuple(range(N + 1))
        blocks = tuple((j,) for j in range(N + 1))
    elif mode == "spherical":
        members = tuple(m for m in range(N + 2) if abs(m - 1) <= N)
        blocks = [(1,)]
        if N >= 1:
            blocks.append((0, 2))
        blocks.extend((j + 1,) for j in range(2, N + 1))
        blocks = tuple(blocks)
    else:
        raise ValueError(f"unknown truncation mode {mode!r}")
    return TruncationSet(mode=mode, N=N, members=members, blocks=blocks)
