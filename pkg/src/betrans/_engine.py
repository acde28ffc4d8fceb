"""Shared quadrature engine for kernel operators on (0, inf).

A plan fixes, per output abscissa, the quadrature nodes, weights, and kernel
values for one operator on one grid.  Applying the operator to a sampled
function is then a single interpolation pass plus segmented sums, so plans
are cached per (operator, grid) and compositions stay cheap.

Three plan geometries cover every operator in the package:

* lower:  int_0^x K(x, t) f(t) dt   (optional (x-t)^alpha endpoint weight)
* upper:  int_x^B K(x, t) f(t) dt   (optional (t-x)^alpha endpoint weight)
* pv:     one-sided kernels with a simple pole at t = x; symmetric excision
          with a geometric epsilon ladder and polynomial extrapolation.

Below the grid hull the operand is evaluated by a quadratic Taylor model at
the hull edge (functions of interest are smooth at 0 or vanish there);
above the hull it is taken as zero (decaying operands).
"""

from __future__ import annotations

from typing import Callable, Optional

import numpy as np

from .numgrid import Grid, SampledFunction, _gl_rule, _jacobi, geometric_breakpoints

N_GL_BODY = 16
N_GL_HEAD = 12
N_JACOBI = 24
N_PV_BAND = 16
PV_RUNGS = 7
PV_BANDS = PV_RUNGS - 1


def eval_extended(f: SampledFunction, t: np.ndarray) -> np.ndarray:
    """f at arbitrary nodes: spline inside the hull, Taylor model below, 0 above."""
    a, b = f.grid.hull
    out = f(t)
    below = t < a
    if np.any(below):
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
        dt = t[below] - a
        out[below] = v0 + fp * dt + 0.5 * fpp * dt * dt
    return out


def deriv_extended(f: SampledFunction, t: np.ndarray) -> np.ndarray:
    a, b = f.grid.hull
    out = f.deriv(t)
    below = t < a
    if np.any(below):
        f._ensure_spline()
        sa = f.grid.coord(np.array([a]))
        d1 = float(f._dspline(sa)[0])
        d2 = float(f._spline.derivative(2)(sa)[0])
        if f.grid.spacing == "log":
            fp = d1 / a
            fpp = (d2 - d1) / (a * a)
        else:
            fp, fpp = d1, d2
        out[below] = fp + fpp * (t[below] - a)
    return out


def _panel_nodes(edges: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """GL nodes/weights for a sequence of panels given by breakpoint array."""
    x0, w0 = _gl_rule(n)
    lo, hi = edges[:-1], edges[1:]
    mid = 0.5 * (lo + hi)[:, None]
    half = 0.5 * (hi - lo)[:, None]
    return (mid + half * x0[None, :]).ravel(), (half * w0[None, :]).ravel()


def _jacobi_panel(lo: float, x: float, alpha: float, left_end: bool = False):
    """Gauss-Jacobi nodes/weights for a panel with (|x-t|)^alpha at one end.

    left_end=False: int_lo^x with singular factor (x-t)^alpha at t = x.
    left_end=True:  int_x^lo with singular factor (t-x)^alpha at t = x.
    The returned weights divide out the singular factor, so they pair with
    the full kernel (which contains it).
    """
    if left_end:
        xs, wj = _jacobi(N_JACOBI, 0.0, alpha)  # weight (1+xi)^alpha
        half = 0.5 * (lo - x)
        t = x + half * (xs + 1.0)
        w = wj * half ** (alpha + 1.0) * (t - x) ** (-alpha)
    else:
        xs, wj = _jacobi(N_JACOBI, alpha, 0.0)  # weight (1-xi)^alpha
        half = 0.5 * (x - lo)
        t = lo + half * (xs + 1.0)
        w = wj * half ** (alpha + 1.0) * (x - t) ** (-alpha)
    return t, w


_BODY_STRIDE = 4
_N_GL_SMALL = 8


def _body_edges(grid_pts: np.ndarray, lo: float, hi: float) -> np.ndarray:
    """Panel edges inside [lo, hi] aligned with (subsampled) grid points.

    Tying the panels to the grid guarantees the quadrature resolves any
    operand the grid itself resolves.
    """
    inner = grid_pts[_BODY_STRIDE::_BODY_STRIDE]
    inner = inner[(inner > lo * (1.0 + 1e-12)) & (inner < hi * (1.0 - 1e-12))]
    return np.concatenate([[lo], inner, [hi]])


def _needs_jacobi(alpha: Optional[float]) -> bool:
    """Endpoint powers that defeat plain Gauss panels: negative, or positive
    non-integer (Hoelder endpoints slow Gauss-Legendre to O(h^(1+alpha)))."""
    if alpha is None:
        return False
    return alpha < 0.0 or abs(alpha - round(alpha)) > 1e-9


def _lower_segment(x: float, grid_pts: np.ndarray, alpha: Optional[float], head: str = "taylor"):
    """Nodes/weights for int_0^x; optional (x-t)^alpha endpoint factor at t = x.

    head="taylor" extends the integral over (0, hull_a) using the operand's
    edge Taylor model; head="zero" omits it (for kernels singular at the
    origin, where operands must vanish below the hull anyway).
    """
    a = grid_pts[0]
    singular = _needs_jacobi(alpha)
    if x <= 2.0 * a:
        lo = a if head == "zero" else 0.0
        if x <= lo:
            return np.empty(0), np.empty(0)
        if singular:
            return _jacobi_panel(lo, x, alpha)
        return _panel_nodes(np.array([lo, x]), N_GL_HEAD)
    ts, ws = [], []
    if head != "zero":
        head_t, head_w = _panel_nodes(np.array([0.0, a]), N_GL_HEAD)
        ts.append(head_t)
        ws.append(head_w)
    if singular:
        # body up to the last aligned edge, then one Jacobi panel to x
        edges = _body_edges(grid_pts, a, x)
        split = edges[-2] if len(edges) > 2 else max(0.5 * x, a)
        body_t, body_w = _panel_nodes(edges[:-1] if len(edges) > 2 else np.array([a, split]), _N_GL_SMALL)
        ts.append(body_t)
        ws.append(body_w)
        t, w = _jacobi_panel(split, x, alpha)
        ts.append(t)
        ws.append(w)
    else:
        body_t, body_w = _panel_nodes(_body_edges(grid_pts, a, x), _N_GL_SMALL)
        ts.append(body_t)
        ws.append(body_w)
    return np.concatenate(ts), np.concatenate(ws)


def _upper_segment(x: float, grid_pts: np.ndarray, alpha: Optional[float]):
    """Nodes/weights for int_x^b; optional (t-x)^alpha singularity at t = x."""
    b = grid_pts[-1]
    if x >= b * (1.0 - 1e-14):
        return np.empty(0), np.empty(0)
    ts, ws = [], []
    singular = _needs_jacobi(alpha)
    if singular:
        edges = _body_edges(grid_pts, x, b)
        split = edges[1] if len(edges) > 2 else min(2.0 * x, b)
        t, w = _jacobi_panel(split, x, alpha, left_end=True)
        ts.append(t)
        ws.append(w)
        body_t, body_w = _panel_nodes(edges[1:] if len(edges) > 2 else np.array([split, b]), _N_GL_SMALL)
        ts.append(body_t)
        ws.append(body_w)
    else:
        body_t, body_w = _panel_nodes(_body_edges(grid_pts, x, b), _N_GL_SMALL)
        ts.append(body_t)
        ws.append(body_w)
    return np.concatenate(ts), np.concatenate(ws)


def _segmented_sum(values: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    nseg = len(offsets) - 1
    if len(values) == 0:
        return np.zeros(nseg)
    padded = np.append(values, 0.0)  # sentinel keeps trailing empty segments in range
    out = np.add.reduceat(padded, offsets[:-1])
    out[np.diff(offsets) == 0] = 0.0
    return out


class KernelPlan:
    """Cached quadrature for g(x_i) = int K(x_i, t) f(t) dt on one grid."""

    def __init__(self, grid: Grid, t_all, kw_all, offsets, use_deriv: bool = False):
        self.grid = grid
        self.t_all = t_all
        self.kw_all = kw_all
        self.offsets = offsets
        self.use_deriv = use_deriv

    def apply(self, f: SampledFunction) -> np.ndarray:
        vals = deriv_extended(f, self.t_all) if self.use_deriv else eval_extended(f, self.t_all)
        return _segmented_sum(self.kw_all * vals, self.offsets)


def build_lower_plan(
    grid: Grid,
    kernel: Callable[[np.ndarray, np.ndarray], np.ndarray],
    alpha: Optional[float] = None,
    use_deriv: bool = False,
    head: str = "taylor",
) -> KernelPlan:
    ts, ws, xs, offsets = [], [], [], [0]
    for x in grid.points:
        t, w = _lower_segment(float(x), grid.points, alpha, head=head)
        ts.append(t)
        ws.append(w)
        xs.append(np.full_like(t, x))
        offsets.append(offsets[-1] + len(t))
    t_all = np.concatenate(ts)
    w_all = np.concatenate(ws)
    x_all = np.concatenate(xs)
    return KernelPlan(grid, t_all, w_all * kernel(x_all, t_all), np.asarray(offsets), use_deriv)


def build_upper_plan(
    grid: Grid,
    kernel: Callable[[np.ndarray, np.ndarray], np.ndarray],
    alpha: Optional[float] = None,
    use_deriv: bool = False,
) -> KernelPlan:
    ts, ws, xs, offsets = [], [], [], [0]
    for x in grid.points:
        t, w = _upper_segment(float(x), grid.points, alpha)
        ts.append(t)
        ws.append(w)
        xs.append(np.full_like(t, x))
        offsets.append(offsets[-1] + len(t))
    t_all = np.concatenate(ts)
    w_all = np.concatenate(ws)
    x_all = np.concatenate(xs)
    return KernelPlan(grid, t_all, w_all * kernel(x_all, t_all), np.asarray(offsets), use_deriv)


class PVPlan:
    """Principal-value plan by exact pole subtraction.

    With K(x, y) = rho(x)/(x - y) + integrable near the diagonal,

        PV int K f dy = int [K(x,y) f(y) - rho f(x)/(x-y)] dy
                        + rho f(x) ln(x / (B - x)),

    and the bracket is evaluated on panels graded toward the diagonal (it
    retains integrable |x-y|^(-1/2)-type corrections but no pole).
    """

    def __init__(self, grid, t_all, kw_all, offsets, sub, log_term, rho):
        self.grid = grid
        self.t_all = t_all
        self.kw_all = kw_all
        self.offsets = offsets
        self.sub = sub  # per-point sum of w/(x - t): the discretized pole integral
        self.log_term = log_term
        self.rho = rho

    def apply(self, f: SampledFunction) -> np.ndarray:
        raw = _segmented_sum(self.kw_all * eval_extended(f, self.t_all), self.offsets)
        fx = f.values
        return raw - self.rho * fx * (self.sub - self.log_term)


def build_pv_plan(
    grid: Grid,
    kernel_lower: Callable[[np.ndarray, np.ndarray], np.ndarray],
    kernel_upper: Callable[[np.ndarray, np.ndarray], np.ndarray],
    rho: float = 1.0 / np.pi,
) -> PVPlan:
    """Plan for PV kernel pairs with residue rho at the diagonal.

    K_lower acts on t < x, K_upper on t > x; both behave like
    rho/(x - t) as t -> x (same one-sided residue).
    """
    a, b = grid.hull
    ts, ws, xs, offsets = [], [], [], [0]
    for x in grid.points:
        x = float(x)
        delta = 1e-7 * x  # innermost approach; bracket integrand is bounded there
        eps0 = max(min(x, b - x), delta * 4.0) / 8.0
        # far parts with grid-aligned panels
        seg_t, seg_w = [], []
        lo_far = x - eps0
        if lo_far > 0:
            ft, fw = _lower_segment(lo_far, grid.points, None)
            seg_t.append(ft)
            seg_w.append(fw)
        # graded panels from eps0 down to delta on each side
        d = eps0
        scales = [d]
        while d > delta:
            d = max(0.5 * d, delta)
            scales.append(d)
        sc = np.asarray(scales)
        lo_edges = x - sc
        lo_t, lo_w = _panel_nodes(lo_edges, _N_GL_SMALL)
        seg_t.append(lo_t)
        seg_w.append(lo_w)
        hi_cap = b - x
        if hi_cap > delta:
            sc_hi = sc[sc <= hi_cap]
            if len(sc_hi) < 2:
                sc_hi = np.asarray([min(eps0, hi_cap), delta])
            hi_edges = (x + sc_hi)[::-1]
            hi_t, hi_w = _panel_nodes(hi_edges, _N_GL_SMALL)
            seg_t.append(hi_t)
            seg_w.append(hi_w)
            start_far = x + sc_hi[0]
            if start_far < b * (1.0 - 1e-12):
                ut, uw = _upper_segment(start_far, grid.points, None)
                seg_t.append(ut)
                seg_w.append(uw)
        t = np.concatenate(seg_t)
        w = np.concatenate(seg_w)
        ts.append(t)
        ws.append(w)
        xs.append(np.full_like(t, x))
        offsets.append(offsets[-1] + len(t))

    t_all = np.concatenate(ts)
    w_all = np.concatenate(ws)
    x_all = np.concatenate(xs)
    kw_all = np.empty_like(w_all)
    lower_mask = t_all < x_all
    kw_all[lower_mask] = w_all[lower_mask] * kernel_lower(x_all[lower_mask], t_all[lower_mask])
    kw_all[~lower_mask] = w_all[~lower_mask] * kernel_upper(x_all[~lower_mask], t_all[~lower_mask])

    offsets = np.asarray(offsets)
    sub = _segmented_sum(w_all / (x_all - t_all), offsets)
    log_term = np.log(grid.points / np.maximum(b - grid.points, 1e-300))
    # at the top hull point B - x = 0: the upper side is empty and the
    # subtraction degenerates; the lower-side-only value keeps ln(x/delta)
    top = grid.points >= b * (1.0 - 1e-12)
    if np.any(top):
        log_term[top] = np.log(grid.points[top] / (1e-7 * grid.points[top]))
    return PVPlan(grid, t_all, kw_all, offsets, sub, log_term, rho)


# ----------------------------------------------------------------------
# grid differentiation (4th order, one-sided closures at the hull ends)
# ----------------------------------------------------------------------

_D_CENTRAL = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0


def _one_sided_rows():
    from .numgrid import _fd_weights

    nodes = np.arange(5, dtype=float)
    return [_fd_weights(float(i), nodes, 1) for i in range(2)]


_ONE_SIDED = None


def deriv_on_grid(values: np.ndarray, grid: Grid) -> np.ndarray:
    """d(values)/dx on the grid: 4th-order differences in the grid coordinate."""
    global _ONE_SIDED
    if _ONE_SIDED is None:
        _ONE_SIDED = _one_sided_rows()
    s = grid.coord(grid.points)
    h = s[1] - s[0]
    n = len(values)
    d = np.empty_like(values, dtype=float)
    d[2:-2] = (
        _D_CENTRAL[0] * values[:-4]
        + _D_CENTRAL[1] * values[1:-3]
        + _D_CENTRAL[3] * values[3:-1]
        + _D_CENTRAL[4] * values[4:]
    )
    for i in (0, 1):
        d[i] = float(np.dot(_ONE_SIDED[i], values[:5]))
        d[n - 1 - i] = -float(np.dot(_ONE_SIDED[i], values[::-1][:5]))
    d /= h
    if grid.spacing == "log":
        d = d / grid.points
    return d


def second_deriv_on_grid(values: np.ndarray, grid: Grid) -> np.ndarray:
    return deriv_on_grid(deriv_on_grid(values, grid), grid)
