"""Anonymous GNN computational kernels.

Polynomial graph filters, the closed-walk ("diagonal") module, white-input
Monte-Carlo variance estimation, and a brute-force walk oracle. None of this
is trainable: the point is that fixed-coefficient modules already produce
node features strong enough to separate graphs that color refinement cannot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from numpy.polynomial import polynomial as npoly

from .graphs import Graph, TooLargeError

if TYPE_CHECKING:  # pragma: no cover
    from .spectral import Spectrum


class DimensionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class FilterParams:
    """Coefficients h_0..h_{K-1} of a polynomial graph filter sum_k h_k S^k."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        c = tuple(float(x) for x in self.coeffs)
        if len(c) < 1:
            raise ValueError("filter needs at least one coefficient")
        if not all(np.isfinite(c)):
            raise ValueError("filter coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    def __len__(self) -> int:
        return len(self.coeffs)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coeffs)


@dataclass(frozen=True)
class Nonlinearity:
    """Pointwise activation. kind in {relu, leaky_relu, linear, square}."""

    kind: str
    alpha: float = 0.01  # leaky_relu slope for negative inputs

    _KINDS = ("relu", "leaky_relu", "linear", "square")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown nonlinearity {self.kind!r}; choose from {self._KINDS}")

    def apply(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if self.kind == "relu":
            return np.maximum(x, 0.0)
        if self.kind == "leaky_relu":
            # exact 0 maps to 0 either way
            return np.where(x >= 0.0, x, self.alpha * x)
        if self.kind == "square":
            return x * x
        return x.copy()

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.apply(x)


RELU = Nonlinearity("relu")
LINEAR = Nonlinearity("linear")
SQUARE = Nonlinearity("square")


def as_nonlinearity(sigma) -> Nonlinearity:
    if isinstance(sigma, Nonlinearity):
        return sigma
    if isinstance(sigma, str):
        aliases = {"leaky": "leaky_relu"}
        return Nonlinearity(aliases.get(sigma, sigma))
    raise TypeError(f"cannot interpret {sigma!r} as a nonlinearity")


@dataclass(frozen=True)
class StochasticConfig:
    """White random input: zero mean, covariance variance * I.

    Both supported distributions are white, which is all the covariance
    identity needs; rademacher is included to demonstrate that the result
    does not depend on gaussianity.
    """

    variance: float = 1.0
    samples: int = 100_000
    seed: int = 0
    distribution: str = "gaussian"

    def __post_init__(self):
        if self.variance <= 0:
            raise ValueError("variance must be positive")
        if self.samples < 1:
            raise ValueError("need at least one sample")
        if self.distribution not in ("gaussian", "rademacher"):
            raise ValueError(f"unknown distribution {self.distribution!r}")


def graph_filter(g: Graph, h: FilterParams, x: np.ndarray) -> np.ndarray:
    """Apply z = sum_k h_k S^k x by Horner nesting (no explicit matrix powers).

    x may be a vector of length n or an (n, D) feature matrix.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape[0] != g.n:
        raise DimensionMismatchError(f"input has {x.shape[0]} rows, graph has {g.n} nodes")
    s = g.adjacency
    c = h.coeffs
    acc = c[-1] * x
    for k in range(len(c) - 2, -1, -1):
        acc = s @ acc + c[k] * x
    return acc


def gnn_layer(g: Graph, x: np.ndarray, taps, sigma=LINEAR) -> np.ndarray:
    """One propagation layer Y = sigma(sum_k S^k X H_k).

    taps is the list [H_0, ..., H_{K-1}] of (D_in, D_out) matrices. Evaluated
    with the same Horner nesting as graph_filter.
    """
    sigma = as_nonlinearity(sigma)
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == 1:
        x = x[:, None]
    if x.shape[0] != g.n:
        raise DimensionMismatchError(f"input has {x.shape[0]} rows, graph has {g.n} nodes")
    hs = [np.atleast_2d(np.asarray(hk, dtype=np.float64)) for hk in taps]
    if not hs:
        raise DimensionMismatchError("need at least one tap matrix")
    for hk in hs:
        if hk.shape != hs[0].shape:
            raise DimensionMismatchError("all tap matrices must share one shape")
        if hk.shape[0] != x.shape[1]:
            raise DimensionMismatchError(
                f"tap expects {hk.shape[0]} input features, got {x.shape[1]}"
            )
    s = g.adjacency
    acc = x @ hs[-1]
    for k in range(len(hs) - 2, -1, -1):
        acc = s @ acc + x @ hs[k]
    return sigma(acc)


def diag_powers(g: Graph, depth: int = 10) -> np.ndarray:
    """Closed-walk count features: column k of the result is diag(S^k).

    Column 0 is all ones, column 1 all zeros (no self-loops), column 2 the
    degrees, column 3 twice the per-node triangle count, and so on. Entries
    are nonnegative integers stored as float64.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    out = np.empty((g.n, depth))
    p = np.eye(g.n)
    for k in range(depth):
        out[:, k] = np.diag(p)
        if k + 1 < depth:
            p = p @ g.adjacency
    return out


def closed_walk_count(g: Graph, v: int, k: int, *, max_n: int = 12, max_k: int = 8) -> int:
    """Count length-k walks v -> ... -> v by direct enumeration.

    Independent oracle for diag(S^k): walks are enumerated over the adjacency
    list with revisits allowed, never through matrix arithmetic. Exponential,
    hence the (n, k) caps.
    """
    if g.n > max_n or k > max_k:
        raise TooLargeError(f"enumeration bound exceeded (n={g.n} > {max_n} or k={k} > {max_k})")
    if not 0 <= v < g.n:
        raise ValueError(f"node {v} out of range")
    nbrs = [g.neighbors(i).tolist() for i in range(g.n)]

    def walks(u: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if u == v else 0
        return sum(walks(w, remaining - 1) for w in nbrs[u])

    return walks(v, k)


def diagonal_module(g: Graph, h: FilterParams, sigma=RELU) -> np.ndarray:
    """y = sigma(sum_k h_k diag(S^k)): the no-input closed-walk module."""
    sigma = as_nonlinearity(sigma)
    return sigma(diag_powers(g, len(h)) @ h.as_array())


def spectral_diagonal_module(s: "Spectrum", h: FilterParams) -> np.ndarray:
    """Frequency-domain form sum_n h~(lambda_n) |u_n|^2, pre-nonlinearity.

    Cross-validation path for diagonal_module: both must agree to ~1e-8 even
    though one never touches eigenvectors and the other never touches matrix
    powers.
    """
    responses = npoly.polyval(s.eigenvalues, h.as_array())
    return (s.eigenvectors**2) @ responses


def constant_input_response(g: Graph, h: FilterParams, sigma=RELU) -> np.ndarray:
    """y1 = sigma(sum_k h_k S^k 1): what a GNN sees from the all-ones input.

    Provided to demonstrate the information loss on graphs whose decisive
    eigenvectors are orthogonal to the all-ones vector.
    """
    sigma = as_nonlinearity(sigma)
    return sigma(graph_filter(g, h, np.ones(g.n)))


def self_convolve(h: FilterParams, variance: float = 1.0) -> FilterParams:
    """Coefficients h'_k = variance * sum_{m+l=k} h_m h_l (length 2K-1).

    The variance of a length-K filter driven by white noise equals the
    no-input filter with these coefficients.
    """
    c = np.asarray(h.coeffs)
    return FilterParams(tuple(variance * np.convolve(c, c)))


def stochastic_variance(
    g: Graph, h: FilterParams, cfg: StochasticConfig
) -> tuple[np.ndarray, np.ndarray]:
    """Monte-Carlo estimate of var[z] for z = filtered white input.

    Draws cfg.samples white vectors, filters each, and returns the per-node
    empirical mean of z^2 together with its standard error. The expectation
    equals diagonal_module(g, self_convolve(h, cfg.variance), linear).

    Sampling is counter-based (Philox keyed by cfg.seed) and consumed in
    sample-major order, so entry (node i, sample j) is a pure function of
    (seed, i, j, n); repeated calls are bit-identical.
    """
    n, m_total = g.n, cfg.samples
    s = g.adjacency
    c = h.coeffs
    scale = float(np.sqrt(cfg.variance))
    rng = np.random.Generator(np.random.Philox(cfg.seed))

    sum_z2 = np.zeros(n)
    sum_z4 = np.zeros(n)
    chunk = max(1, 1_048_576 // n)
    done = 0
    while done < m_total:
        m = min(chunk, m_total - done)
        if cfg.distribution == "gaussian":
            x = rng.standard_normal((m, n)) * scale
        else:
            x = (rng.integers(0, 2, size=(m, n)) * 2 - 1).astype(np.float64) * scale
        # rows are samples: S^k x per sample is x @ S^k (S symmetric)
        acc = c[-1] * x
        for k in range(len(c) - 2, -1, -1):
            acc = acc @ s + c[k] * x
        z2 = acc * acc
        sum_z2 += z2.sum(axis=0)
        sum_z4 += (z2 * z2).sum(axis=0)
        done += m

    estimate = sum_z2 / m_total
    if m_total > 1:
        sample_var = (sum_z4 - m_total * estimate**2) / (m_total - 1)
        stderr = np.sqrt(np.maximum(sample_var, 0.0) / m_total)
    else:
        stderr = np.full(n, np.inf)
    return estimate, stderr
