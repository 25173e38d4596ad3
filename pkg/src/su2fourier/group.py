"""SU(2) group arithmetic, the bi-invariant chordal metric, and quadrature grids.

An element is stored as the complex pair (a, b) with |a|^2 + |b|^2 = 1,
representing the matrix

    [[ a,        b      ],
     [-conj(b),  conj(a)]].

The inverse is (conj(a), -b), the identity is (1, 0), and every element is
conjugate to omega(theta) = diag(e^{i theta}, e^{-i theta}) with
theta = arccos(Re a) in [0, pi] (the conjugacy angle).

The metric is d(x, y) = sqrt(tr((x-y)(x-y)^*) / 2)
              = sqrt(2 - 2 Re(a_x conj(a_y) + b_x conj(b_y))),
which is invariant under left and right translation.  Lie-algebra vectors
X = [[i c, beta], [-conj(beta), -i c]] carry the norm
||X|| = sqrt(c^2 + |beta|^2) = sqrt(tr(X X^*) / 2); with this pairing
d(e, exp X) = 2 sin(||X||/2), so metric radii and Lie-algebra radii agree to
first order.

Two integration rules are provided, both normalized to total mass 1:

* ``weyl_grid(order)``: composite Gauss-Legendre on [0, pi] with the class
  measure (2/pi) sin^2(theta) d(theta) absorbed into the weights.  The rule
  uses 32-node panels, ceil((order+4)/8) of them, which integrates
  cos(k theta) sin^2(theta) to machine precision for every k <= 2*order - 4.
  A single panel of `order` nodes could not do this (two points per
  oscillation is the hard floor), hence the internal oversampling.
  Optional ``cusps`` add geometrically graded panels around points where the
  integrand is not smooth (algebraic cusps of Hoelder-type integrands).

* ``haar_grid(order)``: Euler-angle product rule for the full Haar measure,
  x(alpha, beta, gamma) with a = cos(beta/2) e^{i(alpha+gamma)/2},
  b = sin(beta/2) e^{i(alpha-gamma)/2}, alpha in [0, 2pi), beta in [0, pi],
  gamma in [0, 4pi), d(mu) = sin(beta) d(alpha) d(beta) d(gamma) / (16 pi^2).
  Trapezoid (equal weight) in the periodic angles, Gauss-Legendre with the
  sin(beta) weight in beta.  Products of matrix coefficients of total degree
  <= order are integrated to near machine precision.

All operations are pure; quadrature sums are evaluated with a fixed
summation order, so results do not depend on execution interleaving.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss

__all__ = [
    "GroupElement",
    "LieVector",
    "QuadratureRule",
    "IDENTITY",
    "make_element",
    "conj_angle",
    "conj_angle_arrays",
    "metric_d",
    "metric_d_arrays",
    "exp_map",
    "exp_arrays",
    "mul_arrays",
    "weyl_grid",
    "haar_grid",
    "random_elements",
    "random_directions",
]

_NORM_TOL = 1e-6


@dataclass(frozen=True)
class GroupElement:
    """A point of SU(2), stored as the first row (a, b) of its matrix."""

    a: complex
    b: complex

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        a = self.a * other.a - self.b * np.conj(other.b)
        b = self.a * other.b + self.b * np.conj(other.a)
        return GroupElement(complex(a), complex(b))

    def inverse(self) -> "GroupElement":
        return GroupElement(np.conj(self.a), -self.b)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.a, self.b], [-np.conj(self.b), np.conj(self.a)]], dtype=complex
        )


IDENTITY = GroupElement(1.0 + 0.0j, 0.0 + 0.0j)


def make_element(a: complex, b: complex) -> GroupElement:
    """Build a group element, re-normalizing rounding drift up to 1e-6.

    Larger norm defects signal a caller bug and raise ValueError.
    """
    s = abs(a) ** 2 + abs(b) ** 2
    if abs(s - 1.0) > _NORM_TOL:
        raise ValueError(f"(a, b) is not on the unit sphere: |a|^2+|b|^2 = {s!r}")
    r = np.sqrt(s)
    return GroupElement(complex(a) / r, complex(b) / r)


def conj_angle(x: GroupElement) -> float:
    """Conjugacy angle theta in [0, pi]; x is conjugate to omega(theta)."""
    return float(np.arccos(np.clip(x.a.real, -1.0, 1.0)))


def conj_angle_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # b never enters: the trace is 2 Re(a).
    return np.arccos(np.clip(np.real(a), -1.0, 1.0))


def metric_d(x: GroupElement, y: GroupElement) -> float:
    """Bi-invariant chordal distance sqrt(tr((x-y)(x-y)^*)/2)."""
    inner = np.real(x.a * np.conj(y.a) + x.b * np.conj(y.b))
    return float(np.sqrt(max(0.0, 2.0 - 2.0 * inner)))


def metric_d_arrays(ax, bx, ay, by) -> np.ndarray:
    inner = np.real(ax * np.conj(ay) + bx * np.conj(by))
    return np.sqrt(np.maximum(0.0, 2.0 - 2.0 * inner))


def mul_arrays(a1, b1, a2, b2):
    """Entrywise product of elements given as (a, b) arrays (broadcasting)."""
    return a1 * a2 - b1 * np.conj(b2), a1 * b2 + b1 * np.conj(a2)


@dataclass(frozen=True)
class LieVector:
    """X = [[i c, beta], [-conj(beta), -i c]] in su(2)."""

    c: float
    beta: complex

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.c**2 + abs(self.beta) ** 2))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [[1j * self.c, self.beta], [-np.conj(self.beta), -1j * self.c]],
            dtype=complex,
        )


def exp_map(X: LieVector) -> GroupElement:
    """Matrix exponential of X; eigenvalues of X are +-i||X||.

    exp(X) = cos(||X||) I + (sin(||X||)/||X||) X, so
    a = cos t + i c sinc, b = beta sinc with t = ||X||.
    """
    t = X.norm
    if t == 0.0:
        return IDENTITY
    s = np.sin(t) / t
    return GroupElement(complex(np.cos(t) + 1j * X.c * s), complex(X.beta * s))


def exp_arrays(c: np.ndarray, beta: np.ndarray):
    """Vectorized exp_map for arrays of (c, beta)."""
    t = np.sqrt(c**2 + np.abs(beta) ** 2)
    s = np.sinc(t / np.pi)  # sin(t)/t, exact 1 at t = 0
    return np.cos(t) + 1j * c * s, beta * s


def random_elements(rng: np.random.Generator, size: int):
    """Haar-uniform elements via normalized Gaussian quaternions: (a, b) arrays."""
    v = rng.normal(size=(4, size))
    v /= np.linalg.norm(v, axis=0)
    return v[0] + 1j * v[1], v[2] + 1j * v[3]


def random_directions(rng: np.random.Generator, size: int):
    """Uniform unit vectors on the sphere of su(2): (c, beta) arrays."""
    v = rng.normal(size=(3, size))
    v /= np.linalg.norm(v, axis=0)
    return v[0], v[1] + 1j * v[2]


# --------------------------------------------------------------------------
# quadrature
# --------------------------------------------------------------------------

_PANEL_NODES = 32


@dataclass
class QuadratureRule:
    """Nodes and weights of a probability rule (weights sum to 1).

    kind "weyl_1d": nodes are angles theta in [0, pi], weights absorb
    (2/pi) sin^2(theta).  kind "haar_euler_3d": nodes are Euler triples
    (alpha, beta, gamma); the tensor factors are kept in ``axes`` for
    separable fast paths, and the flattened nodes/weights views are built
    lazily on first access (large rules never need them).
    """

    kind: str
    order: int
    axes: dict = field(default_factory=dict, repr=False)
    _nodes: np.ndarray | None = field(default=None, repr=False)
    _weights: np.ndarray | None = field(default=None, repr=False)
    _elements: tuple | None = field(default=None, repr=False)

    @property
    def nodes(self) -> np.ndarray:
        if self._nodes is None:
            self._materialize()
        return self._nodes

    @property
    def weights(self) -> np.ndarray:
        if self._weights is None:
            self._materialize()
        return self._weights

    def __len__(self) -> int:
        if self.kind == "weyl_1d":
            return len(self.weights)
        al, ga = self.axes["alpha"], self.axes["gamma"]
        return len(al) * len(self.axes["beta"]) * len(ga)

    def _materialize(self) -> None:
        if self.kind == "weyl_1d":
            return  # always built eagerly
        al, be, ga = self.axes["alpha"], self.axes["beta"], self.axes["gamma"]
        wb = self.axes["w_beta"]
        A, B, G = np.meshgrid(al, be, ga, indexing="ij")
        self._nodes = np.stack([A.ravel(), B.ravel(), G.ravel()], axis=1)
        W = np.broadcast_to(wb[None, :, None], A.shape) / (len(al) * len(ga))
        self._weights = W.ravel().copy()

    def element_arrays(self):
        """Flattened (a, b) arrays of the haar_euler_3d rule's elements."""
        if self.kind != "haar_euler_3d":
            raise ValueError("element_arrays is only defined for haar_euler_3d rules")
        if self._elements is None:
            n = self.nodes
            al, be, ga = n[:, 0], n[:, 1], n[:, 2]
            a = np.cos(be / 2) * np.exp(1j * (al + ga) / 2)
            b = np.sin(be / 2) * np.exp(1j * (al - ga) / 2)
            self._elements = (a, b)
        return self._elements

    def integrate(self, values: np.ndarray) -> complex | float:
        """Weighted sum over the rule's nodes (fixed summation order)."""
        return np.dot(self.weights, values)


def _panel_edges(order: int, cusps=()) -> np.ndarray:
    panels = int(np.ceil((order + 4) / 8))
    edges = set(np.linspace(0.0, np.pi, panels + 1))
    for c in cusps:
        if not 0.0 < c < np.pi:
            raise ValueError(f"cusp {c} outside (0, pi)")
        edges.add(c)
        for j in range(1, 35):  # grade down to ~3e-12 panel widths
            w = (np.pi / 64) * 2.0 ** (-j)
            if c - w > 0.0:
                edges.add(c - w)
            if c + w < np.pi:
                edges.add(c + w)
    return np.array(sorted(edges))


def weyl_grid(order: int, cusps=()) -> QuadratureRule:
    """Class-measure rule on [0, pi]: sum w_i f(theta_i) ~ (2/pi) int f sin^2.

    ``order`` is a resolution parameter: integrands cos(k theta) sin^2(theta)
    are exact (<= ~1e-14) for k <= 2*order - 4.  For oscillatory work follow
    the rule of thumb order >= 4*(max frequency) + 16 used throughout this
    package.  ``cusps`` lists interior points of reduced smoothness that get
    geometrically graded panels.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    edges = _panel_edges(order, cusps)
    xg, wg = leggauss(_PANEL_NODES)
    t = np.concatenate(
        [0.5 * (xg + 1) * (b - a) + a for a, b in zip(edges[:-1], edges[1:])]
    )
    w = np.concatenate([0.5 * (b - a) * wg for a, b in zip(edges[:-1], edges[1:])])
    w = w * (2.0 / np.pi) * np.sin(t) ** 2
    return QuadratureRule(kind="weyl_1d", order=order, _nodes=t, _weights=w)


def haar_grid(order: int) -> QuadratureRule:
    """Euler-angle product rule for normalized Haar measure.

    Sized so that products of matrix coefficients pi_k[i,j] conj(pi_m[k,l])
    with k + m <= order integrate to near machine precision: trapezoid counts
    n_alpha = order+8 and n_gamma = 2 n_alpha kill all aliases (n_gamma even
    also kills the half-integer cross-parity frequencies), Gauss-Legendre in
    beta with ~1.07*order nodes resolves the polynomial degree in cos(beta/2),
    sin(beta/2).  Spatial spacing is ~2 pi/order in each direction, which is
    what matters when integrating merely Lipschitz functions.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    na = int(2 * np.ceil((order + 8) / 2))
    nb = int(np.ceil(1.07 * order)) + 8
    ng = 2 * na
    al = 2 * np.pi * np.arange(na) / na
    ga = 4 * np.pi * np.arange(ng) / ng
    xg, wg = leggauss(nb)
    be = 0.5 * (xg + 1) * np.pi
    wb = 0.5 * np.pi * wg * np.sin(be) / 2.0  # int_0^pi sin = 2
    return QuadratureRule(
        kind="haar_euler_3d",
        order=order,
        axes={"alpha": al, "beta": be, "w_beta": wb, "gamma": ga},
    )
