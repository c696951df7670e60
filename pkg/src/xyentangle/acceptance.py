"""Acceptance suite: the package's exit criteria, each run at its fixed
tolerance. Used by ``xyentangle selftest`` and ``tests/test_acceptance.py``.

Every check returns an :class:`Outcome`; :func:`run_all` runs them in order
and validates (criterion 9) every Gibbs/ground state built along the way.
"""
import math
import time
from dataclasses import dataclass

import numpy as np

from .entangle import (concurrence, concurrence_analytic_bz, concurrence_numeric,
                       concurrence_t0_closed)
from .explore import detect_jump_t0, jump_locus_t0, threshold_temperature
from .matcore import asymmetry, eig_hermitian
from .spinmodel import ModelParams, spectral_quantities
from .thermal import gibbs_state, ground_state, record_states

SEED = 20240611
T_STAR_XY = 1.0 / math.asinh(1.0)  # zero of sinh(1/T) = 1


@dataclass
class Outcome:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:>2}. {self.title}: {self.detail} ({self.seconds:.2f} s)"


def random_params(rng, b_par=True, T=None):
    bx, by = (rng.uniform(-2, 2), rng.uniform(-2, 2)) if b_par else (0.0, 0.0)
    return ModelParams(J=rng.uniform(-2, 2), K=rng.uniform(-2, 2),
                       gamma=rng.uniform(-1, 1), gamma_prime=rng.uniform(-1, 1),
                       Bx=bx, By=by, Bz=rng.uniform(-3, 3),
                       T=rng.uniform(0.05, 5) if T is None else T)


def _t_star(p):
    r = threshold_temperature(p)
    return 0.0 if r.t_star is None else r.t_star


def check_zero_t_closed_forms():
    rng = np.random.default_rng(SEED + 1)
    draws = []
    for i in range(200):
        p = random_params(rng, b_par=False, T=0.0)
        if i % 4 == 3:
            # exact mu = lambda_phi degeneracy: pick Bz with nu^2 + Bz^2 = mu^2
            sq = spectral_quantities(p)
            if sq.nu > sq.mu:
                p = p.replace(J=p.K, K=p.J, gamma=p.gamma_prime, gamma_prime=p.gamma)
                sq = spectral_quantities(p)
            p = p.replace(Bz=math.sqrt(max(sq.mu ** 2 - sq.nu ** 2, 0.0)))
        draws.append(p)
    draws.append(ModelParams(J=1, gamma=0.6, Bz=0.8))
    worst, kinds = 0.0, set()
    for p in draws:
        sq = spectral_quantities(p)
        kinds.add("deg" if abs(sq.mu - sq.lambda_phi) <= 1e-12 else
                  "mu>lam" if sq.mu > sq.lambda_phi else "mu<lam")
        worst = max(worst, abs(concurrence_numeric(ground_state(p)).value
                               - concurrence_t0_closed(p).value))
    fixture = concurrence_t0_closed(ModelParams(J=1, gamma=0.6, Bz=0.8)).value
    ok = worst < 1e-9 and len(kinds) == 3 and abs(fixture - 0.2) < 1e-12
    return ok, (f"max |numeric - closed| = {worst:.2e} over {len(draws)} draws, "
                f"branches {sorted(kinds)}, C(J=1,gamma=0.6,Bz=0.8) = {fixture:.12g}"), 1.0


def check_planar_jump_values():
    root2 = math.sqrt(2.0)
    fails = []
    rows = []
    for b, expect in ((1.0, 1.0), (root2, 2.0 / 3.0), (2.0, None)):
        p = ModelParams(J=1, Bx=b)
        closed = concurrence(p).value
        numeric = concurrence_numeric(ground_state(p)).value
        if expect is not None and abs(closed - expect) > 1e-12:
            fails.append(f"closed({b:.6g}) = {closed:.12g} != {expect:.12g}")
        if abs(closed - numeric) > 1e-9:
            fails.append(f"closed({b:.6g}) = {closed:.12g} vs numeric {numeric:.12g}")
        rows.append(f"B_par={b:.6g}: closed {closed:.9g}, numeric {numeric:.9g}")
    above = concurrence_t0_closed(ModelParams(J=1, Bx=2.0)).value
    if abs(above - 0.242535) > 1e-6:
        fails.append(f"C(B_par=2) = {above:.9g}, expected 0.242535")
    right = concurrence_numeric(ground_state(ModelParams(J=1, Bx=root2 + 1e-7))).value
    if abs(right - 1.0 / 3.0) > 1e-4:
        fails.append(f"right limit {right:.9g} != 1/3")
    rows.append(f"right limit {right:.9g}")
    detail = "; ".join(rows) + ("" if not fails else " | " + "; ".join(fails))
    return not fails, detail, None


def check_jump_locus():
    base = ModelParams(J=1)
    worst = 0.0
    for theta in (0.0, 30.0, 45.0, 60.0, 90.0):
        b, _ = detect_jump_t0(base, theta)
        worst = max(worst, abs(b - jump_locus_t0(base, theta)))
    at90 = jump_locus_t0(base, 90.0)
    ok = worst < 1e-5 and abs(at90 - math.sqrt(2.0)) < 1e-12
    return ok, f"max |detected - formula| = {worst:.2e}, locus(90 deg) = {at90:.12g}", None


def check_threshold_fixtures():
    out = []
    slowest = 0.0
    for p in (ModelParams(J=1), ModelParams(K=1)):
        t0 = time.perf_counter()
        r = threshold_temperature(p)
        slowest = max(slowest, time.perf_counter() - t0)
        out.append(r.t_star)
    errs = [abs(t - T_STAR_XY) if t is not None else math.inf for t in out]
    ok = max(errs) <= 1e-6 and slowest < 0.1
    return ok, (f"T*(J=1) = {out[0]:.9f}, T*(K=1) = {out[1]:.9f}, target {T_STAR_XY:.9f}, "
                f"slowest solve {slowest * 1e3:.1f} ms"), None


def check_flatness():
    ts = [_t_star(ModelParams(J=1, Bz=b)) for b in np.linspace(0.0, 3.0, 20)]
    spread = max(ts) - min(ts)
    return spread < 1e-6, f"T* spread over Bz in [0, 3] = {spread:.2e}", None


def check_enhancement():
    ts = [_t_star(ModelParams(J=1, K=1, Bz=b)) for b in np.linspace(0.0, 3.0, 20)]
    mono = all(b >= a for a, b in zip(ts, ts[1:]))
    t0 = _t_star(ModelParams(J=1))
    t4 = _t_star(ModelParams.polar(4.0, 90.0, J=1))
    ok_b = t4 > t0 + 0.05
    detail = (f"(a) T*(Bz) non-decreasing for K=1: {mono} "
              f"[{ts[0]:.4f} .. {ts[-1]:.4f}]; "
              f"(b) T*(B_par=4) = {t4:.6f} vs T*(0) + 0.05 = {t0 + 0.05:.6f}: {ok_b}")
    return mono and ok_b, detail, None


def check_revival():
    ts = np.linspace(0.015, 3.0, 200)
    c2 = np.array([concurrence(ModelParams(J=1, Bx=2.0, T=t)).value for t in ts])
    c0 = concurrence(ModelParams(J=1, Bx=2.0)).value
    interior = [i for i in range(1, len(ts) - 1) if c2[i] > c2[i - 1] and c2[i] >= c2[i + 1]]
    peak = max((c2[i] for i in interior), default=math.nan)
    ok_a = bool(interior) and peak > c0
    c1 = np.array([concurrence(ModelParams(J=1, Bx=1.0, T=t)).value for t in ts])
    ok_b = bool(np.all(np.diff(c1) <= 0.0))
    peak_t = ", ".join(f"{ts[i]:.3f}" for i in interior)
    detail = (f"(a) B_par=2: interior maxima at T = [{peak_t}], peak {peak:.6f} vs "
              f"C(T=0) = {c0:.6f}: {ok_a}; (b) B_par=1 non-increasing: {ok_b}")
    return ok_a and ok_b, detail, None


def check_paths_and_symmetries():
    rng = np.random.default_rng(SEED + 8)
    worst = {"path": 0.0, "sign": 0.0, "rotation": 0.0, "swap": 0.0}

    def numeric(p):
        return concurrence_numeric(gibbs_state(p)).value

    for _ in range(1000):
        p = random_params(rng, b_par=False)
        worst["path"] = max(worst["path"],
                            abs(numeric(p) - concurrence_analytic_bz(p).value))
    for _ in range(1000):
        p = random_params(rng, b_par=False)
        c = numeric(p)
        for q in (p.replace(J=-p.J), p.replace(K=-p.K), p.replace(Bz=-p.Bz)):
            worst["sign"] = max(worst["sign"], abs(numeric(q) - c))
    # in-plane rotation is a symmetry only when the sigma+ sigma+ amplitude
    # gamma J - i K vanishes; otherwise it shifts that amplitude's phase
    for _ in range(1000):
        p = random_params(rng).replace(gamma=0.0, K=0.0)
        c = numeric(p)
        bpar = p.b_par
        for phi in rng.uniform(0, 2 * math.pi, 10):
            q = p.replace(Bx=bpar * math.cos(phi), By=bpar * math.sin(phi))
            worst["rotation"] = max(worst["rotation"], abs(numeric(q) - c))
    for _ in range(1000):
        p = random_params(rng, b_par=False).replace(Bz=0.0)
        q = p.replace(J=p.K, K=p.J, gamma=p.gamma_prime, gamma_prime=p.gamma)
        worst["swap"] = max(worst["swap"], abs(numeric(p) - numeric(q)))
    ok = max(worst.values()) < 1e-10
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    return ok, (f"max deviations over 1000 draws each: {detail} "
                f"(rotation draws have gamma = K = 0)"), 5.0


def validate_states(states):
    """Criterion 9 predicate. Returns (n_checked, list_of_problems)."""
    problems = []
    for st in states:
        rho = st.rho
        tr = np.trace(rho)
        if abs(tr - 1.0) > 1e-12:
            problems.append(f"trace {tr}")
        if asymmetry(rho) > 1e-13:
            problems.append("not Hermitian")
        emin = eig_hermitian(rho).eigenvalues[0]
        if emin < -1e-12:
            problems.append(f"min eigenvalue {emin:.2e}")
    return len(states), problems


CHECKS = [
    (1, "zero-T closed forms (z field)", check_zero_t_closed_forms),
    (2, "zero-T planar-field values at and around the jump", check_planar_jump_values),
    (3, "zero-T jump locus", check_jump_locus),
    (4, "threshold temperature fixtures", check_threshold_fixtures),
    (5, "T* flat in B_perp for gamma = K = 0", check_flatness),
    (6, "T* enhancement by the field", check_enhancement),
    (7, "revival of C(T) above the planar jump", check_revival),
    (8, "path equivalence and symmetries", check_paths_and_symmetries),
]


def run_check(number):
    n, title, fn = next(c for c in CHECKS if c[0] == number)
    t0 = time.perf_counter()
    ok, detail, budget = fn()
    dt = time.perf_counter() - t0
    if budget is not None and dt >= budget:
        ok = False
        detail += f"; runtime {dt:.2f} s exceeds {budget} s"
    return Outcome(n, title, ok, detail, dt)


def run_all(report=None):
    """Run criteria 1-8 and then 9 over every state they built."""
    outcomes = []
    with record_states() as states:
        for n, _, _ in CHECKS:
            o = run_check(n)
            outcomes.append(o)
            if report:
                report(o.line())
    t0 = time.perf_counter()
    count, problems = validate_states(states)
    detail = f"{count} states checked, {len(problems)} violations"
    if problems:
        detail += f" (first: {problems[0]})"
    o = Outcome(9, "state validity (trace, Hermiticity, PSD)", not problems and count > 0,
                detail, time.perf_counter() - t0)
    outcomes.append(o)
    if report:
        report(o.line())
    return outcomes
