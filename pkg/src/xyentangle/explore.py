"""Threshold temperatures, the zero-temperature jump locus, and parameter
sweeps (including presets for the four standard figure families).
"""
import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .entangle import concurrence, concurrence_numeric
from .errors import DomainError, InvalidInputError, XYEntangleError
from .spinmodel import ModelParams
from .thermal import ground_state

ZERO_C = 1e-14
SCAN_SAMPLES = 200
WORKERS_ENV = "XYENTANGLE_WORKERS"


@dataclass(frozen=True)
class ThresholdResult:
    """``t_star`` is None when C <= 1e-14 at every scanned temperature.

    ``saturated`` marks C > 0 still at ``t_max``, in which case
    ``t_star == t_max`` is only a lower bound.
    """

    t_star: float | None
    bracket: tuple
    evaluations: int
    path: str = ""
    saturated: bool = False


def threshold_temperature(p, t_max=50.0, tol=1e-9, samples=SCAN_SAMPLES):
    """Temperature above which the concurrence vanishes.

    C(T) is sampled on ``samples`` geometrically spaced temperatures from
    ``tol`` to ``t_max``; the last sample with C > 1e-14 and the next one
    bracket the final sign change, which bisection narrows to ``tol``.
    Scanning the whole grid first means a concurrence that dies and revives
    (or is zero at low T and appears at finite T) is still handled.
    """
    if tol <= 0 or t_max <= 0 or tol >= t_max:
        raise InvalidInputError("need 0 < tol < t_max")
    evals = 0
    path = ""

    def c(t):
        nonlocal evals, path
        evals += 1
        r = concurrence(p.replace(T=t))
        path = r.path.value
        return r.value

    grid = np.geomspace(tol, t_max, samples)
    last = -1
    for i, t in enumerate(grid):
        if c(t) > ZERO_C:
            last = i
    if last < 0:
        return ThresholdResult(None, (float(grid[0]), float(grid[-1])), evals, path)
    if last == samples - 1:
        return ThresholdResult(float(t_max), (float(t_max), float(t_max)), evals, path,
                               saturated=True)
    lo, hi = float(grid[last]), float(grid[last + 1])
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if c(mid) > ZERO_C:
            lo = mid
        else:
            hi = mid
    return ThresholdResult(0.5 * (lo + hi), (lo, hi), evals, path)


def _require_plain_xy(p):
    if p.gamma != 0.0 or p.K != 0.0:
        raise DomainError("jump locus formula needs gamma = K = 0")


def jump_locus_t0(p_base, theta):
    """Field magnitude where the T = 0 concurrence jumps, for a field at
    polar angle ``theta`` (degrees from z), with gamma = K = 0:
    2 B_perp^2 + B_par^2 = 2 J^2."""
    _require_plain_xy(p_base)
    th = math.radians(theta)
    return math.sqrt(2.0 * p_base.J ** 2 / (2.0 * math.cos(th) ** 2 + math.sin(th) ** 2))


def ground_concurrence(p):
    """T = 0 concurrence by ground_state + numeric Wootters (no closed forms)."""
    return concurrence_numeric(ground_state(p)).value


def detect_jump_t0(p_base, theta, b_max=None, samples=301, width=1e-6):
    """Locate the T = 0 concurrence discontinuity along a field direction
    numerically, without the closed-form locus.

    Scans C(|B|) for the largest step between neighbours, then bisects the
    step: a midpoint whose value is nearer the left neighbour's moves the
    left end, otherwise the right end. Returns ``(b_jump, (lo, hi))``.
    """
    if b_max is None:
        b_max = 3.0 * max(abs(p_base.J), 1e-3)
    fixed = dict(J=p_base.J, K=p_base.K, gamma=p_base.gamma,
                 gamma_prime=p_base.gamma_prime, strict=p_base.strict)

    def c(b):
        return ground_concurrence(ModelParams.polar(b, theta, **fixed))

    bs = np.linspace(0.0, b_max, samples)
    cs = np.array([c(b) for b in bs])
    k = int(np.argmax(np.abs(np.diff(cs))))
    lo, hi = float(bs[k]), float(bs[k + 1])
    clo, chi = cs[k], cs[k + 1]
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        cm = c(mid)
        if abs(cm - clo) < abs(cm - chi):
            lo, clo = mid, cm
        else:
            hi, chi = mid, cm
    return 0.5 * (lo + hi), (lo, hi)


# -- sweeps -----------------------------------------------------------------

CARTESIAN = ("j", "k", "gamma", "gamma_prime", "bx", "by", "bz", "t")
POLAR = ("bmag", "theta", "phi")
AXIS_NAMES = CARTESIAN + POLAR
QUANTITIES = ("concurrence", "threshold")
_FIELD_OF = {"j": "J", "k": "K", "gamma": "gamma", "gamma_prime": "gamma_prime",
             "bx": "Bx", "by": "By", "bz": "Bz", "t": "T"}


@dataclass(frozen=True)
class SweepGrid:
    """Cartesian product of named axes over a baseline parameter set.

    Axis names are ``j k gamma gamma_prime bx by bz t`` or the polar field
    coordinates ``bmag theta phi`` (degrees); polar and Cartesian field axes
    cannot be mixed. Rows come out in lexicographic order of the axes as
    listed, the last axis varying fastest.
    """

    axes: tuple
    base: ModelParams = field(default_factory=ModelParams)
    quantity: str = "concurrence"
    t_max: float = 50.0
    tol: float = 1e-9

    def __post_init__(self):
        axes = tuple((str(n), tuple(float(v) for v in vals)) for n, vals in self.axes)
        object.__setattr__(self, "axes", axes)
        if self.quantity not in QUANTITIES:
            raise InvalidInputError(f"unknown quantity {self.quantity!r}")
        names = [n for n, _ in axes]
        if len(set(names)) != len(names):
            raise InvalidInputError("duplicate axis names")
        for name, vals in axes:
            if name not in AXIS_NAMES:
                raise InvalidInputError(f"unknown axis {name!r}")
            if not vals:
                raise InvalidInputError(f"axis {name!r} is empty")
            arr = np.asarray(vals)
            if not np.all(np.isfinite(arr)):
                raise InvalidInputError(f"axis {name!r} has non-finite values")
            d = np.diff(arr)
            if len(d) and not (np.all(d > 0) or np.all(d < 0)):
                raise InvalidInputError(f"axis {name!r} is not strictly monotone")
        if self.polar and any(n in ("bx", "by", "bz") for n in names):
            raise InvalidInputError("cannot mix polar and Cartesian field axes")

    @property
    def polar(self):
        return any(n in POLAR for n, _ in self.axes)

    @property
    def columns(self):
        cols = [c for c in CARTESIAN if not (c == "t" and self.quantity == "threshold")]
        if self.polar:
            cols += ["bmag", "theta"]
        return cols

    @property
    def quantity_column(self):
        return "t_star" if self.quantity == "threshold" else "concurrence"

    def points(self):
        names = [n for n, _ in self.axes]
        for combo in itertools.product(*(vals for _, vals in self.axes)):
            yield dict(zip(names, combo))

    def __len__(self):
        return math.prod(len(v) for _, v in self.axes)

    def params_at(self, point):
        kw = {f: getattr(self.base, f) for f in
              ("J", "K", "gamma", "gamma_prime", "Bx", "By", "Bz", "T")}
        for name, val in point.items():
            if name in _FIELD_OF:
                kw[_FIELD_OF[name]] = val
        extra = {}
        if self.polar:
            base = self.base
            bmag = point.get("bmag", base.b_mag)
            theta = point.get("theta", math.degrees(math.atan2(base.b_par, base.Bz)))
            phi = point.get("phi", math.degrees(math.atan2(base.By, base.Bx)))
            for f in ("Bx", "By", "Bz"):
                kw.pop(f)
            p = ModelParams.polar(bmag, theta, phi, strict=base.strict, **kw)
            extra = {"bmag": bmag, "theta": theta}
        else:
            p = ModelParams(strict=self.base.strict, **kw)
        return p, extra


@dataclass(frozen=True)
class SweepRow:
    params: dict
    value: float
    path: str

    @property
    def ok(self):
        return not self.path.startswith("error")


def _param_values(p, extra, columns):
    full = {"j": p.J, "k": p.K, "gamma": p.gamma, "gamma_prime": p.gamma_prime,
            "bx": p.Bx, "by": p.By, "bz": p.Bz, "t": p.T, **extra}
    return {c: full[c] for c in columns}


def _evaluate(args):
    grid, point = args
    try:
        p, extra = grid.params_at(point)
    except XYEntangleError as exc:
        params = {c: point.get(c, math.nan) for c in grid.columns}
        return SweepRow(params, math.nan, f"error:{type(exc).__name__}")
    params = _param_values(p, extra, grid.columns)
    try:
        if grid.quantity == "threshold":
            r = threshold_temperature(p, t_max=grid.t_max, tol=grid.tol)
            value = 0.0 if r.t_star is None else r.t_star
            return SweepRow(params, value, r.path)
        r = concurrence(p)
        return SweepRow(params, r.value, r.path.value)
    except XYEntangleError as exc:
        return SweepRow(params, math.nan, f"error:{type(exc).__name__}")


def default_workers():
    cap = os.environ.get(WORKERS_ENV)
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise InvalidInputError(f"{WORKERS_ENV} must be an integer, got {cap!r}") from None
    return n


def run_sweep(grid, workers=None):
    """Evaluate every grid point; rows come back in grid order.

    Failures at a point become rows with value nan and path
    ``error:<ExceptionName>``; they never abort the sweep. ``workers`` > 1
    evaluates points in a process pool (default from the
    ``XYENTANGLE_WORKERS`` cap and the CPU count).
    """
    if workers is None:
        workers = default_workers()
    tasks = [(grid, pt) for pt in grid.points()]
    if workers <= 1 or len(tasks) < 2 * workers:
        return [_evaluate(t) for t in tasks]
    chunk = max(1, len(tasks) // (8 * workers))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_evaluate, tasks, chunksize=chunk))


# -- figure presets -----------------------------------------------------------

FIGURES = ("fig1", "fig2", "fig3a", "fig3b", "fig4")

# Artifact choices where the source figures give no numeric values in text.
PRESET_DEFAULTS = {
    "fig1": {"k": (0.5, 1.0, 1.5, 2.0)},
    "fig2": {"k": (1.0,)},
    "fig3a": {"b_par": (0.5, 1.0, 1.5, 2.0, 2.5)},
    "fig3b": {"theta": (0.0, 30.0, 45.0, 60.0, 90.0)},
    "fig4": {"theta": (0.0, 30.0, 60.0, 90.0)},
}


def _as_tuple(x):
    if x is None:
        return None
    if isinstance(x, (int, float)):
        return (float(x),)
    return tuple(float(v) for v in x)


def figure_preset(name, j=1.0, k=None, theta=None, b_par=None, points=None):
    """Sweep grid for one of the figure families.

    fig1   T* vs gamma' in [-1, 1] (step 0.01), B = 0, gamma = 0, one curve per K
    fig2   T* vs B_perp in [0, 3], gamma = 0, one curve per K
    fig3a  C vs T in (0, 3], B_perp = 0, gamma = K = 0, one curve per B_par
    fig3b  C vs |B| in [0, 3] at T = 0 and T = 1e-4, gamma = K = 0, one
           curve per theta
    fig4   T* vs |B| in [0, 4], gamma = K = 0, one curve per theta

    ``j`` is the exchange coupling (default 1). ``k``, ``theta`` and
    ``b_par`` replace the per-curve value lists; ``points`` replaces the
    number of samples on the continuous axis.
    """
    if name not in FIGURES:
        raise InvalidInputError(f"unknown figure {name!r}; choose from {', '.join(FIGURES)}")
    defaults = PRESET_DEFAULTS[name]
    k = _as_tuple(k) or defaults.get("k")
    theta = _as_tuple(theta) or defaults.get("theta")
    b_par = _as_tuple(b_par) or defaults.get("b_par")
    base = ModelParams(J=j)

    if name == "fig1":
        n = points or 201
        gp = tuple(np.round(np.linspace(-1.0, 1.0, n), 12))
        return SweepGrid((("k", k), ("gamma_prime", gp)), base, "threshold")
    if name == "fig2":
        n = points or 61
        return SweepGrid((("k", k), ("bz", tuple(np.linspace(0.0, 3.0, n)))), base,
                         "threshold")
    if name == "fig3a":
        n = points or 300
        ts = tuple(np.linspace(3.0 / n, 3.0, n))
        return SweepGrid((("bx", b_par), ("t", ts)), base, "concurrence")
    if name == "fig3b":
        n = points or 301
        return SweepGrid((("theta", theta), ("t", (0.0, 1e-4)),
                          ("bmag", tuple(np.linspace(0.0, 3.0, n)))), base, "concurrence")
    n = points or 41
    return SweepGrid((("theta", theta), ("bmag", tuple(np.linspace(0.0, 4.0, n)))), base,
                     "threshold")
