"""Grids on (0, inf), weighted L2 norms, and singularity-tolerant quadrature.

Grids are log- or linearly-spaced with end-corrected trapezoidal weights
(Euler-Maclaurin corrections through h^6, giving ~8th order on smooth
integrands).  Sampled functions carry a quintic spline in the grid's
natural coordinate for off-grid evaluation, plus a decay hint used for
norm tail estimates.  quad_singular handles endpoint power singularities
(Gauss-Jacobi) and interior principal values (symmetric excision with
epsilon-ladder extrapolation).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from typing import Callable, Literal, Optional

import numpy as np
from scipy.interpolate import make_interp_spline
from scipy.special import roots_jacobi, roots_legendre

__all__ = [
    "Grid",
    "SampledFunction",
    "WeightedNorm",
    "DecayHint",
    "EndpointPower",
    "PVInterior",
    "GridError",
    "NonIntegrableSingularityError",
    "PVConvergenceError",
    "DivergentTailError",
    "TailWarning",
    "make_grid",
    "quad_singular",
    "integrate_smooth",
    "norm_weighted",
    "norm_l2",
    "integral_completed",
    "read_csv",
    "write_csv",
]

DEFAULT_GRID_N = 512
DEFAULT_GRID_RANGE = (1e-4, 1e2)


class GridError(ValueError):
    pass


class NonIntegrableSingularityError(ValueError):
    pass


class PVConvergenceError(RuntimeError):
    pass


class DivergentTailError(ValueError):
    pass


class TailWarning(UserWarning):
    """Norm computed with a zero tail because no decay hint was available."""


# ----------------------------------------------------------------------
# end-corrected trapezoidal weights on a uniform mesh
# ----------------------------------------------------------------------


def _fd_weights(x0: float, nodes: np.ndarray, m: int) -> np.ndarray:
    """Fornberg weights for the m-th derivative at x0 from the given nodes."""
    n = len(nodes)
    c = np.zeros((n, m + 1))
    c1, c4 = 1.0, nodes[0] - x0
    c[0, 0] = 1.0
    for i in range(1, n):
        mn = min(i, m)
        c2, c5 = 1.0, c4
        c4 = nodes[i] - x0
        for j in range(i):
            c3 = nodes[i] - nodes[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c[:, m]


def _uniform_weights(n: int, h: float) -> np.ndarray:
    """Trapezoid + Euler-Maclaurin end corrections through the h^6 term."""
    if n < 16:
        raise GridError("need at least 16 points for end-corrected weights")
    w = np.full(n, h)
    w[0] = w[-1] = 0.5 * h
    stencil = np.arange(8, dtype=float)
    # integral = T - h^2/12 (f'_B - f'_A) + h^4/720 (f'''_B - f'''_A)
    #              - h^6/30240 (f^(5)_B - f^(5)_A)
    for deriv, coef in ((1, 1.0 / 12.0), (3, -1.0 / 720.0), (5, 1.0 / 30240.0)):
        cl = _fd_weights(0.0, stencil, deriv)
        w[:8] += coef * h ** (deriv + 1) * cl / h**deriv
        cr = _fd_weights(0.0, -stencil, deriv)
        w[-8:] -= coef * h ** (deriv + 1) * cr[::-1] / h**deriv
    return w


# ----------------------------------------------------------------------
# grids and sampled functions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Grid:
    points: np.ndarray
    weights: np.ndarray
    spacing: Literal["log", "linear"]

    def __post_init__(self):
        p = self.points
        if np.any(p <= 0):
            raise GridError("grid points must be positive")
        if np.any(np.diff(p) <= 0):
            raise GridError("grid points must be strictly increasing")
        if len(p) != len(self.weights):
            raise GridError("points/weights length mismatch")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def hull(self) -> tuple[float, float]:
        return float(self.points[0]), float(self.points[-1])

    def coord(self, x):
        """The grid's natural coordinate (log x on log grids)."""
        return np.log(x) if self.spacing == "log" else np.asarray(x, dtype=float)

    def interior_mask(self, fraction: float = 0.6) -> np.ndarray:
        """Mask selecting the central `fraction` of the hull in grid coordinate."""
        s = self.coord(self.points)
        lo = s[0] + (1.0 - fraction) / 2.0 * (s[-1] - s[0])
        hi = s[-1] - (1.0 - fraction) / 2.0 * (s[-1] - s[0])
        return (s >= lo) & (s <= hi)


def make_grid(
    n: int = DEFAULT_GRID_N,
    rng: tuple[float, float] = DEFAULT_GRID_RANGE,
    spacing: Literal["log", "linear"] = "log",
) -> Grid:
    a, b = rng
    if not (0 < a < b):
        raise GridError(f"invalid range ({a}, {b})")
    if n < 16:
        raise GridError("n must be >= 16")
    if spacing == "log":
        s = np.linspace(np.log(a), np.log(b), n)
        h = s[1] - s[0]
        pts = np.exp(s)
        w = _uniform_weights(n, h) * pts  # dx = x ds
    elif spacing == "linear":
        pts = np.linspace(a, b, n)
        w = _uniform_weights(n, pts[1] - pts[0])
    else:
        raise GridError(f"unknown spacing {spacing!r}")
    return Grid(points=pts, weights=w, spacing=spacing)


@dataclass(frozen=True)
class DecayHint:
    kind: Literal["compact_support", "exponential", "power"]
    a: float = 0.0
    b: float = np.inf
    p: float = 0.0

    @staticmethod
    def compact(a: float, b: float) -> "DecayHint":
        return DecayHint(kind="compact_support", a=a, b=b)

    @staticmethod
    def exponential() -> "DecayHint":
        return DecayHint(kind="exponential")

    @staticmethod
    def power(p: float) -> "DecayHint":
        return DecayHint(kind="power", p=p)


class SampledFunction:
    """A function on (0, inf) represented by grid samples plus decay metadata."""

    def __init__(self, grid: Grid, values, decay_hint: Optional[DecayHint] = None):
        values = np.asarray(values, dtype=float)
        if values.shape != grid.points.shape:
            raise GridError("values shape does not match grid")
        if not np.all(np.isfinite(values)):
            raise GridError("values must be finite")
        self.grid = grid
        self.values = values
        self.decay_hint = decay_hint
        self._spline = None
        self._dspline = None

    @classmethod
    def from_callable(cls, fn: Callable, grid: Grid, decay_hint: Optional[DecayHint] = None):
        return cls(grid, np.asarray(fn(grid.points), dtype=float), decay_hint)

    def _ensure_spline(self):
        if self._spline is None:
            s = self.grid.coord(self.grid.points)
            k = 5 if self.grid.n >= 8 else 3
            self._spline = make_interp_spline(s, self.values, k=k)
            self._dspline = self._spline.derivative()

    def __call__(self, x):
        """Interpolated values; zero outside the grid hull."""
        self._ensure_spline()
        x = np.asarray(x, dtype=float)
        a, b = self.grid.hull
        inside = (x >= a) & (x <= b)
        out = np.zeros_like(x, dtype=float)
        if np.any(inside):
            out[inside] = self._spline(self.grid.coord(x[inside]))
        return out

    def deriv(self, x):
        """Interpolated first derivative df/dx; zero outside the hull."""
        self._ensure_spline()
        x = np.asarray(x, dtype=float)
        a, b = self.grid.hull
        inside = (x >= a) & (x <= b)
        out = np.zeros_like(x, dtype=float)
        if np.any(inside):
            xi = x[inside]
            ds = self._dspline(self.grid.coord(xi))
            out[inside] = ds / xi if self.grid.spacing == "log" else ds
        return out

    _KEEP_HINT = object()

    def with_values(self, values, decay_hint=_KEEP_HINT) -> "SampledFunction":
        """New function on the same grid; omit decay_hint to inherit, pass
        None to clear it explicitly."""
        hint = self.decay_hint if decay_hint is SampledFunction._KEEP_HINT else decay_hint
        return SampledFunction(self.grid, values, hint)

    def __add__(self, other):
        self._check_same_grid(other)
        return SampledFunction(self.grid, self.values + other.values, self.decay_hint)

    def __sub__(self, other):
        self._check_same_grid(other)
        return SampledFunction(self.grid, self.values - other.values, self.decay_hint)

    def __mul__(self, c: float):
        return SampledFunction(self.grid, self.values * float(c), self.decay_hint)

    __rmul__ = __mul__

    def _check_same_grid(self, other):
        if other.grid is not self.grid and not np.array_equal(other.grid.points, self.grid.points):
            raise GridError("operands live on different grids")


@dataclass(frozen=True)
class WeightedNorm:
    """The power-weighted L2 norm: ||f||^2 = int_0^inf |f|^2 x^(2k+1) dx."""

    k: float = -0.5


# ----------------------------------------------------------------------
# quadrature
# ----------------------------------------------------------------------

_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}
_JACOBI_CACHE: dict[tuple[int, float, float], tuple[np.ndarray, np.ndarray]] = {}


def _gl_rule(n: int):
    if n not in _GL_CACHE:
        _GL_CACHE[n] = roots_legendre(n)
    return _GL_CACHE[n]


def _jacobi(n: int, alpha: float, beta: float):
    key = (n, round(alpha, 14), round(beta, 14))
    if key not in _JACOBI_CACHE:
        _JACOBI_CACHE[key] = roots_jacobi(n, alpha, beta)
    return _JACOBI_CACHE[key]


def geometric_breakpoints(a: float, b: float, ratio: float = 3.0, min_panels: int = 2) -> np.ndarray:
    """Breakpoints with bounded panel-length ratio from a toward b (a > 0)."""
    if a <= 0:
        raise GridError("geometric breakpoints require a > 0")
    n = max(min_panels, int(np.ceil(np.log(b / a) / np.log(ratio))))
    return np.geomspace(a, b, n + 1)


def integrate_smooth(f: Callable, a: float, b: float, *, n: int = 24, ratio: float = 3.0) -> float:
    """Panel Gauss-Legendre with geometric panels when (a, b) spans decades."""
    if b <= a:
        return 0.0
    if a > 0 and b / a > ratio:
        edges = geometric_breakpoints(a, b, ratio)
    else:
        edges = np.linspace(a, b, 5)
    x0, w0 = _gl_rule(n)
    lo, hi = edges[:-1], edges[1:]
    mid = 0.5 * (lo + hi)[:, None]
    half = 0.5 * (hi - lo)[:, None]
    xs = mid + half * x0[None, :]
    return float(np.sum(f(xs.ravel()).reshape(xs.shape) * half * w0[None, :]))


@dataclass(frozen=True)
class EndpointPower:
    """Integrand behaves like (x - at)^alpha near an endpoint of the interval."""

    alpha: float
    at: float


@dataclass(frozen=True)
class PVInterior:
    """Simple-pole singularity at an interior point; principal-value integral."""

    at: float


def _cluster_panels(f: Callable, a: float, b: float, cluster: str, scale: float, n: int = 20) -> float:
    """GL panels grading geometrically toward one endpoint.

    `scale` is the distance from the clustered endpoint to the actual
    singularity; panels shrink until they are comparable to it, so the
    integrand varies by a bounded factor on each panel.
    """
    if b <= a:
        return 0.0
    length = b - a
    dists = [length]
    d = length
    while d > 0.5 * scale:
        d *= 0.5
        dists.append(d)
    dists.append(0.0)
    offs = np.unique(np.asarray(dists))
    pts = (b - offs[::-1]) if cluster == "right" else (a + offs)
    x0, w0 = _gl_rule(n)
    lo, hi = pts[:-1], pts[1:]
    mid = 0.5 * (lo + hi)[:, None]
    half = 0.5 * (hi - lo)[:, None]
    xs = mid + half * x0[None, :]
    return float(np.sum(f(xs.ravel()).reshape(xs.shape) * half * w0[None, :]))


def quad_singular(f: Callable, interval: tuple[float, float], singularity=None, *, n: int = 96) -> float:
    """Integrate f over (a, b) with declared singularity handling.

    singularity is None, an EndpointPower(alpha, at) with at equal to one of
    the endpoints, or a PVInterior(at) for a simple pole inside (a, b).
    """
    a, b = float(interval[0]), float(interval[1])
    if singularity is None:
        return integrate_smooth(f, a, b)

    if isinstance(singularity, EndpointPower):
        alpha, at = singularity.alpha, singularity.at
        if alpha <= -1.0:
            raise NonIntegrableSingularityError(f"endpoint power {alpha} <= -1 is not integrable")
        if not (np.isclose(at, a) or np.isclose(at, b)):
            raise GridError("EndpointPower.at must be an interval endpoint")
        # split: Gauss-Jacobi panel near the singular end, smooth panels beyond
        split = a + 0.5 * (b - a)
        if np.isclose(at, a):
            xs, ws = _jacobi(n, 0.0, alpha)
            half = 0.5 * (split - a)
            x = a + half * (xs + 1.0)
            g = f(x) * (x - a) ** (-alpha)
            near = float(np.sum(ws * g)) * half ** (alpha + 1.0)
            far = integrate_smooth(f, split, b)
        else:
            xs, ws = _jacobi(n, alpha, 0.0)
            half = 0.5 * (b - split)
            x = split + half * (xs + 1.0)
            g = f(x) * (b - x) ** (-alpha)
            near = float(np.sum(ws * g)) * half ** (alpha + 1.0)
            far = integrate_smooth(f, a, split)
        return near + far

    if isinstance(singularity, PVInterior):
        c = singularity.at
        if not (a < c < b):
            raise GridError("PVInterior.at must lie inside the interval")
        eps0 = min(c - a, b - c) / 8.0
        ladder = eps0 * 2.0 ** (-np.arange(7, dtype=float))
        vals = np.empty_like(ladder)
        for j, eps in enumerate(ladder):
            left = _cluster_panels(f, a, c - eps, cluster="right", scale=eps)
            right = _cluster_panels(f, c + eps, b, cluster="left", scale=eps)
            vals[j] = left + right
        # I(eps) = I + c1 eps + c3 eps^3 + c5 eps^5 for a simple pole
        design = np.vander(ladder, 4, increasing=True)[:, [0, 1, 3]]
        design = np.column_stack([design, ladder**5])
        coef, *_ = np.linalg.lstsq(design, vals, rcond=None)
        resid = np.max(np.abs(design @ coef - vals))
        scale = max(1.0, np.max(np.abs(vals)))
        if resid > 1e-6 * scale:
            raise PVConvergenceError(f"PV ladder extrapolation residual {resid:.2e}")
        return float(coef[0])

    raise GridError(f"unknown singularity descriptor {singularity!r}")


# ----------------------------------------------------------------------
# norms
# ----------------------------------------------------------------------


def _tail_estimate(f: SampledFunction, k: float) -> float:
    """Integral of |f|^2 x^(2k+1) beyond the hull, from the decay hint."""
    hint = f.decay_hint
    a, b = f.grid.hull
    if hint is None:
        warnings.warn("no decay hint: norm computed with zero tail", TailWarning, stacklevel=3)
        return 0.0
    if hint.kind == "compact_support":
        return 0.0
    fb = abs(float(f.values[-1]))
    if fb < 1e-140:
        return 0.0
    if hint.kind == "exponential":
        # estimate the decay rate from the trailing samples
        pts, vals = f.grid.points, np.abs(f.values)
        mask = (pts > 0.5 * b) & (vals > 1e-140)
        if np.count_nonzero(mask) < 3:
            return 0.0
        lam = -np.polyfit(pts[mask], np.log(vals[mask]), 1)[0]
        if lam <= 0:
            raise DivergentTailError("exponential hint but samples do not decay")
        return fb**2 * b ** (2 * k + 1) / (2.0 * lam)
    if hint.kind == "power":
        p = hint.p
        expo = 2 * k + 2 - 2 * p
        if expo >= 0:
            raise DivergentTailError(f"power decay p={p} gives a divergent weighted tail")
        c = fb * b**p
        return c**2 * b**expo / (-expo)
    raise GridError(f"unknown decay hint {hint!r}")


def norm_weighted(f: SampledFunction, w: WeightedNorm = WeightedNorm()) -> float:
    """sqrt(int |f|^2 x^(2k+1) dx) over the hull plus a hint-driven tail."""
    x = f.grid.points
    core = float(np.sum(f.grid.weights * f.values**2 * x ** (2 * w.k + 1)))
    return float(np.sqrt(core + _tail_estimate(f, w.k)))


def integral_completed(f: SampledFunction) -> float:
    """Hull integral of f plus head/tail completion toward (0, inf).

    The head (0, a) uses a quadratic Taylor model of f at the left hull edge
    (only sensible for functions bounded at the origin); the tail comes from
    the decay hint.
    """
    core = float(np.sum(f.grid.weights * f.values))
    a, b = f.grid.hull
    f._ensure_spline()
    sa = f.grid.coord(np.array([a]))
    v0 = float(f._spline(sa)[0])
    d1 = float(f._dspline(sa)[0])
    d2 = float(f._spline.derivative(2)(sa)[0])
    if f.grid.spacing == "log":
        fp = d1 / a
        fpp = (d2 - d1) / (a * a)
    else:
        fp, fpp = d1, d2
    head = v0 * a - fp * a**2 / 2.0 + fpp * a**3 / 6.0
    tail = 0.0
    hint = f.decay_hint
    fb = float(f.values[-1])
    if hint is not None and abs(fb) > 1e-140:
        if hint.kind == "exponential":
            pts, vals = f.grid.points, np.abs(f.values)
            mask = (pts > 0.5 * b) & (vals > 1e-140)
            if np.count_nonzero(mask) >= 3:
                lam = -np.polyfit(pts[mask], np.log(vals[mask]), 1)[0]
                if lam > 0:
                    tail = fb / lam
        elif hint.kind == "power":
            if hint.p > 1:
                tail = fb * b / (hint.p - 1.0)
            else:
                raise DivergentTailError("power decay p <= 1 gives a divergent tail integral")
    return core + head + tail


def norm_l2(f: SampledFunction, interior: float = 1.0) -> float:
    """Plain L2(0, inf) hull norm; optionally restricted to the grid interior."""
    x = f.grid.points
    vals2 = f.values**2
    if interior < 1.0:
        mask = f.grid.interior_mask(interior)
        return float(np.sqrt(np.sum(f.grid.weights[mask] * vals2[mask])))
    return float(np.sqrt(np.sum(f.grid.weights * vals2)))


# ----------------------------------------------------------------------
# CSV interchange
# ----------------------------------------------------------------------


def _irregular_weights(x: np.ndarray) -> np.ndarray:
    """Quadrature weights on strictly increasing nodes via local cubic interpolation."""
    n = len(x)
    w = np.zeros(n)
    for i in range(n - 1):
        j0 = min(max(i - 1, 0), n - 4)
        idx = np.arange(j0, j0 + 4)
        # integrate the Lagrange basis on [x_i, x_{i+1}] exactly
        v = np.vander(x[idx], 4, increasing=True)
        powers = np.arange(1, 5, dtype=float)
        moments = (x[i + 1] ** powers - x[i] ** powers) / powers
        w[idx] += np.linalg.solve(v.T, moments)
    return w


def read_csv(path) -> SampledFunction:
    """Read `x,value` rows (header optional) into a SampledFunction."""
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) < 2:
                raise GridError(f"{path}:{lineno}: expected two comma-separated columns")
            try:
                rows.append((float(parts[0]), float(parts[1])))
            except ValueError:
                if lineno == 1:
                    continue  # header
                raise GridError(f"{path}:{lineno}: non-numeric row")
    if len(rows) < 16:
        raise GridError("need at least 16 samples")
    x = np.array([r[0] for r in rows])
    v = np.array([r[1] for r in rows])
    if np.any(np.diff(x) <= 0):
        raise GridError("x column must be strictly increasing")
    if np.any(x <= 0):
        raise GridError("x values must be positive")
    logs = np.diff(np.log(x))
    spacing = "log" if np.max(np.abs(logs - logs[0])) < 1e-8 * abs(logs[0]) else "linear"
    if spacing == "log":
        grid = Grid(points=x, weights=_uniform_weights(len(x), logs[0]) * x, spacing="log")
    else:
        grid = Grid(points=x, weights=_irregular_weights(x), spacing="linear")
    return SampledFunction(grid, v)


def write_csv(path, f: SampledFunction, header: bool = True) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            fh.write("x,value\n")
        for x, v in zip(f.grid.points, f.values):
            fh.write(f"{x:.17g},{v:.17g}\n")
