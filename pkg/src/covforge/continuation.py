"""Double-precision homotopy continuation for the small polynomial systems.

Total-degree start systems with a random path-perturbation constant, an
Euler predictor with a short Newton corrector and adaptive step halving,
endpoint polishing, chart-rescaling deduplication, and a second-chart
rescue pass for paths that head toward the chart's hyperplane at
infinity.  Endpoints of the stratum systems are re-polished in
high-precision arithmetic (the coefficients are exact, so the refinement
is limited only by working precision); this is what lets the
multiple-root classifier separate a genuine sixfold root cluster from
simple roots at the configured cluster radius.

The zero set tracked here is that of the literal (cross-doubled)
coordinate polynomials of the quadratic map: that is the system whose
zero set contains the multiple-root locus, so the component split the
census expects is a property of the literal system, not of the
unordered-pair tables (see the calibration notes in the bracket module).
"""

from __future__ import annotations

import cmath
import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp
import numpy as np

from . import construction
from .binform import expanded_coordinate_system
from .checks import CheckResult, _finish
from .construction import Y_NAMES
from .exlinalg import ExactMatrix, Subspace
from .mpoly import MPoly
from .scalar import CycScalar, embed_complex

_F = Fraction

CHART_VARS = ("x1", "x2", "x3", "x7", "x8", "x9")


@dataclass(frozen=True)
class TrackConfig:
    """Tolerances and limits for the tracker and the classifiers."""

    seed: int = 42
    tol_track: float = 1e-10
    tol_dedup: float = 1e-6
    tol_rank: float = 1e-8
    tol_match: float = 1e-8
    cluster_radius: float = 1e-4
    min_step: float = 1e-14
    max_step: float = 0.1
    first_step: float = 0.05
    corrector_iters: int = 3
    polish_iters: int = 20
    working_dps: int = 40
    sv_regular: float = 1e-6


# ---------------------------------------------------------------------------
# Compilation: exact polynomials -> term lists -> double / high precision


def _mp_scalar(value):
    """Exact coefficient to an mpmath complex at the current precision."""
    if isinstance(value, int):
        return mp.mpc(value)
    if isinstance(value, Fraction):
        return mp.mpc(mp.mpf(value.numerator) / mp.mpf(value.denominator))
    if isinstance(value, CycScalar):
        zeta = mp.exp(mp.mpc(0, 1) * mp.pi / 4)
        acc = mp.mpc(0)
        for k, c in enumerate(value.coords):
            acc += (mp.mpf(c.numerator) / mp.mpf(c.denominator)) * zeta ** k
        return acc
    raise TypeError(f"not an exact scalar: {value!r}")


def _poly_terms(poly: MPoly, var_order: tuple[str, ...]) -> list[tuple]:
    """Exact term list (coeff, exponent tuple) over the given variables."""
    idx = [poly.table.index(n) for n in var_order]
    idx_set = set(idx)
    out = []
    for mono, c in poly.terms.items():
        for pos, e in enumerate(mono):
            if e and pos not in idx_set:
                raise ValueError(
                    f"stray variable {poly.table.names[pos]} in compiled "
                    "polynomial")
        out.append((c, tuple(mono[i] for i in idx)))
    return out


def _linear_row_terms(coeffs, constant=0) -> list[tuple]:
    n = len(coeffs)
    terms = [(c, tuple(1 if j == i else 0 for j in range(n)))
             for i, c in enumerate(coeffs) if c != 0]
    if constant != 0:
        terms.append((constant, (0,) * n))
    return terms


class CompiledSystem:
    """Square or rectangular polynomial system over complex doubles.

    Built from exact term lists; evaluation and Jacobians run over a
    single stacked term array, and the same exact terms can be
    re-embedded at high precision for endpoint refinement.
    """

    def __init__(self, term_lists: list[list[tuple]], nvars: int) -> None:
        self.nvars = nvars
        self.exact_terms = term_lists
        self.degrees = [max(sum(e) for _c, e in terms)
                        for terms in term_lists]
        coeffs, exps, rows = [], [], []
        dcoeffs, dexps, dslots = [], [], []
        for k, terms in enumerate(term_lists):
            for c, e in terms:
                cc = complex(self._embed(c))
                coeffs.append(cc)
                exps.append(e)
                rows.append(k)
                for j in range(nvars):
                    if e[j]:
                        d = list(e)
                        d[j] -= 1
                        dcoeffs.append(cc * e[j])
                        dexps.append(d)
                        dslots.append(k * nvars + j)
        self._coeffs = np.array(coeffs, dtype=complex)
        self._exps = np.array(exps, dtype=np.int64).reshape(len(coeffs),
                                                            nvars)
        self._rows = np.array(rows, dtype=np.int64)
        self._dcoeffs = np.array(dcoeffs, dtype=complex)
        self._dexps = np.array(dexps, dtype=np.int64).reshape(len(dcoeffs),
                                                              nvars)
        self._dslots = np.array(dslots, dtype=np.int64)

    @staticmethod
    def _embed(c):
        if isinstance(c, (complex, float)):
            return complex(c)
        return embed_complex(c)

    @property
    def size(self) -> int:
        return len(self.exact_terms)

    def eval_all(self, x: np.ndarray) -> np.ndarray:
        mono = np.prod(x[None, :] ** self._exps, axis=1)
        out = np.zeros(self.size, dtype=complex)
        np.add.at(out, self._rows, self._coeffs * mono)
        return out

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        mono = np.prod(x[None, :] ** self._dexps, axis=1)
        flat = np.zeros(self.size * self.nvars, dtype=complex)
        np.add.at(flat, self._dslots, self._dcoeffs * mono)
        return flat.reshape(self.size, self.nvars)

    # -- high-precision re-embedding -------------------------------------

    def mp_terms(self) -> list[list[tuple]]:
        out = []
        for terms in self.exact_terms:
            out.append([(mp.mpc(complex(c)) if isinstance(c, (complex, float))
                         else _mp_scalar(c), e) for c, e in terms])
        return out


def _mp_eval(terms, x):
    acc = mp.mpc(0)
    for c, e in terms:
        prod = c
        for xx, ee in zip(x, e):
            if ee:
                prod *= xx ** ee
        acc += prod
    return acc


def _mp_jac_entry(terms, x, j):
    acc = mp.mpc(0)
    for c, e in terms:
        if e[j] == 0:
            continue
        prod = c * e[j]
        for k, (xx, ee) in enumerate(zip(x, e)):
            p = ee - 1 if k == j else ee
            if p:
                prod *= xx ** p
        acc += prod
    return acc


def mp_polish(system: CompiledSystem, x0: np.ndarray, dps: int = 40,
              iters: int = 12):
    """High-precision Newton refinement of a double-precision endpoint."""
    with mp.workdps(dps):
        terms = system.mp_terms()
        n = system.nvars
        x = [mp.mpc(v) for v in x0]
        for _ in range(iters):
            fx = mp.matrix([_mp_eval(t, x) for t in terms])
            jac = mp.matrix(n, n)
            for i, t in enumerate(terms):
                for j in range(n):
                    jac[i, j] = _mp_jac_entry(t, x, j)
            try:
                dx = mp.lu_solve(jac, fx)
            except Exception:
                break
            x = [xv - dv for xv, dv in zip(x, dx)]
            if max(abs(d) for d in dx) < mp.mpf(10) ** (-dps + 4):
                break
        return x


# ---------------------------------------------------------------------------
# Path tracking


@dataclass
class PathResult:
    index: int
    status: str                     # accepted | stalled | diverged | polish
    x: np.ndarray | None = None
    residual: float = math.inf
    steps: int = 0


@dataclass
class Endpoint:
    x: np.ndarray                   # chart-affine coordinates
    residual: float
    sv_min: float
    path_index: int
    chart_id: int = 0
    mp_x: list | None = None

    @property
    def unit(self) -> np.ndarray:
        return self.x / np.linalg.norm(self.x)


def _rng(seed, *tags) -> random.Random:
    return random.Random(":".join([str(seed), *map(str, tags)]))


def _unit_row(rng: random.Random, n: int) -> np.ndarray:
    row = np.array([complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
                    for _ in range(n)])
    return row / np.linalg.norm(row)


def _start_data(degrees: list[int], rng: random.Random):
    """Unit-circle constants and all start roots of x_i^d_i = b_i."""
    consts = [cmath.exp(2j * math.pi * rng.random()) for _ in degrees]
    roots = []
    for d, b in zip(degrees, consts):
        mag = abs(b) ** (1.0 / d)
        ang = cmath.phase(b) / d
        roots.append([mag * cmath.exp(1j * (ang + 2 * math.pi * k / d))
                      for k in range(d)])
    return consts, roots


def _residual_normalized(system: CompiledSystem, x: np.ndarray,
                         homogeneous_rows: int) -> float:
    """Largest equation value at the unit-norm representative, over the
    homogeneous rows (the chart row is pinned to 1 by construction)."""
    xhat = x / np.linalg.norm(x)
    vals = system.eval_all(xhat)
    return float(max(abs(v) for v in vals[:homogeneous_rows])) \
        if homogeneous_rows else 0.0


def track(system: CompiledSystem, seed, cfg: TrackConfig | None = None,
          rng: random.Random | None = None) -> tuple[list[PathResult], int]:
    """Track every total-degree path of a square system.

    Returns the per-path results and the Bézout path count.  One
    endpoint attempt per path; failures carry their terminal status.
    """
    cfg = cfg or TrackConfig()
    if rng is None:
        rng = _rng(seed, "track")
    n = system.nvars
    if system.size != n:
        raise ValueError("tracker needs a square system")
    degrees = system.degrees
    consts, roots = _start_data(degrees, rng)
    gamma = cmath.exp(2j * math.pi * rng.random())
    start_terms = []
    for i, (d, b) in enumerate(zip(degrees, consts)):
        e_hi = tuple(d if j == i else 0 for j in range(n))
        start_terms.append([(complex(1.0), e_hi), (complex(-b), (0,) * n)])
    start = CompiledSystem(start_terms, n)

    results = []
    for idx, choice in enumerate(itertools.product(*[range(d)
                                                     for d in degrees])):
        x0 = np.array([roots[i][k] for i, k in enumerate(choice)],
                      dtype=complex)
        results.append(_track_one(idx, x0, start, system, gamma, cfg))
    return results, len(results)


def _track_one(index: int, x0: np.ndarray, start: CompiledSystem,
               target: CompiledSystem, gamma: complex,
               cfg: TrackConfig) -> PathResult:
    x = x0.copy()
    t = 0.0
    h = cfg.first_step
    steps = 0
    while t < 1.0:
        if steps > 20000:
            return PathResult(index, "stalled", steps=steps)
        h = min(h, 1.0 - t)
        gs, fs = start.eval_all(x), target.eval_all(x)
        jg, jf = start.jacobian(x), target.jacobian(x)
        jh = gamma * (1.0 - t) * jg + t * jf
        ht = -gamma * gs + fs
        try:
            dx = np.linalg.solve(jh, -ht * h)
        except np.linalg.LinAlgError:
            h *= 0.5
            if h < cfg.min_step:
                return PathResult(index, "stalled", steps=steps)
            continue
        xn = x + dx
        tn = t + h
        ok = False
        for _ in range(cfg.corrector_iters):
            hv = gamma * (1.0 - tn) * start.eval_all(xn) \
                + tn * target.eval_all(xn)
            jn = gamma * (1.0 - tn) * start.jacobian(xn) \
                + tn * target.jacobian(xn)
            try:
                delta = np.linalg.solve(jn, hv)
            except np.linalg.LinAlgError:
                break
            xn = xn - delta
            steps += 1
            if np.linalg.norm(delta) < 1e-9 * (1.0 + np.linalg.norm(xn)):
                ok = True
                break
        if ok:
            x, t = xn, tn
            h = min(h * 1.5, cfg.max_step)
            if np.linalg.norm(x) > 1e10:
                return PathResult(index, "diverged", steps=steps)
        else:
            h *= 0.5
            if h < cfg.min_step:
                return PathResult(index, "stalled", steps=steps)
    # Endpoint polish on the target system.
    converged = False
    for _ in range(cfg.polish_iters):
        fv = target.eval_all(x)
        try:
            delta = np.linalg.solve(target.jacobian(x), fv)
        except np.linalg.LinAlgError:
            return PathResult(index, "polish", steps=steps)
        x = x - delta
        steps += 1
        if np.linalg.norm(delta) < 1e-13 * (1.0 + np.linalg.norm(x)):
            converged = True
            break
    res = float(np.max(np.abs(target.eval_all(x))))
    # The affine residual scales with the coordinate size, so the strict
    # projective tolerance is enforced on the unit-norm representative by
    # the caller; here the gate is Newton convergence plus a degree-scaled
    # residual bound.
    dmax = max(target.degrees)
    scale = (1.0 + float(np.linalg.norm(x))) ** dmax
    if not converged or not np.isfinite(res) or res >= cfg.tol_track * scale:
        return PathResult(index, "polish", x=x, residual=res, steps=steps)
    return PathResult(index, "accepted", x=x, residual=res, steps=steps)


def _chordal(a: np.ndarray, b: np.ndarray) -> float:
    ah = a / np.linalg.norm(a)
    bh = b / np.linalg.norm(b)
    inner = abs(np.vdot(ah, bh))
    return math.sqrt(max(0.0, 1.0 - min(1.0, inner) ** 2))


def _dedup(endpoints: list[Endpoint], tol: float) -> list[Endpoint]:
    reps: list[Endpoint] = []
    for e in endpoints:
        if all(_chordal(e.x, r.x) > tol for r in reps):
            reps.append(e)
    return reps


def solve_projective(polys_exact: list[MPoly] | list[list[tuple]],
                     var_order: tuple[str, ...], seed, tag: str,
                     cfg: TrackConfig, extra_rows: list[list[tuple]] = (),
                     ) -> dict:
    """Chart-fix, track, polish, rescue, and deduplicate a projective system.

    `polys_exact` are homogeneous polynomials (exact or precompiled term
    lists); `extra_rows` are additional homogeneous precompiled rows
    (slices, alignment conditions).  A random unit-norm chart form set
    to 1 makes the system square.  Paths whose endpoints fail are
    retried in a second random chart and merged projectively.
    """
    n = len(var_order)
    base_terms = []
    for p in polys_exact:
        base_terms.append(_poly_terms(p, var_order) if isinstance(p, MPoly)
                          else p)
    base_terms = base_terms + list(extra_rows)
    rng = _rng(seed, tag)

    def run_chart(chart_id: int):
        chart = _unit_row(rng, n)
        rows = base_terms + [_linear_row_terms(list(chart), constant=-1.0)]
        system = CompiledSystem(rows, n)
        path_rng = _rng(seed, tag, "paths", chart_id)
        results, count = track(system, seed, cfg, rng=path_rng)
        accepted = []
        for r in results:
            if r.status != "accepted":
                continue
            res_norm = _residual_normalized(system, r.x, system.size - 1)
            if res_norm >= cfg.tol_track:
                r.status = "polish"
                r.residual = res_norm
                continue
            jac = system.jacobian(r.x / np.linalg.norm(r.x))
            sv = np.linalg.svd(jac, compute_uv=False)
            accepted.append(Endpoint(x=r.x, residual=res_norm,
                                     sv_min=float(sv[-1]), path_index=r.index,
                                     chart_id=chart_id))
        return system, results, accepted, count

    system, results, accepted, path_count = run_chart(0)
    failed = [r for r in results if r.status != "accepted"]
    rescue_added = 0
    if failed:
        _sys2, results2, accepted2, _c2 = run_chart(1)
        known = [e.x for e in accepted]
        for e in accepted2:
            if all(_chordal(e.x, k) > cfg.tol_dedup for k in known):
                accepted.append(e)
                known.append(e.x)
                rescue_added += 1
    distinct = _dedup(accepted, cfg.tol_dedup)
    return {
        "system": system,
        "results": results,
        "accepted": accepted,
        "distinct": distinct,
        "path_count": path_count,
        "failed": [(r.index, r.status) for r in failed],
        "rescue_added": rescue_added,
    }


# ---------------------------------------------------------------------------
# The stratum census


def literal_pure_quadrics() -> tuple[MPoly, ...]:
    """The five literal quadric coordinates restricted to the octic block."""
    cut = {n: _F(0) for n in ("s0", "s1", "s2", "s3", "s4", "s5", "eps")}
    return tuple(p.substitute(cut) for p in expanded_coordinate_system())


def literal_restricted_quadrics(r: tuple) -> tuple[MPoly, ...]:
    """The literal quadrics on the parameterized slice, in six coordinates."""
    r1, r2, r3 = (_F(v) if isinstance(v, int) else v for v in r)
    table = construction.DEFAULT_TABLE
    bindings = {
        "x4": r1 * MPoly.var("x1", table),
        "x5": r2 * MPoly.var("x2", table),
        "x6": r3 * MPoly.var("x3", table),
    }
    return tuple(q.substitute(bindings) for q in literal_pure_quadrics())


_OCTIC_COEFF_COLUMNS = None


def _octic_coeff_columns():
    """Exact 9x9 matrix: column i = degree-ordered coefficients of basis i."""
    global _OCTIC_COEFF_COLUMNS
    if _OCTIC_COEFF_COLUMNS is None:
        _OCTIC_COEFF_COLUMNS = [form.coeffs
                                for form in construction.octic_basis()]
    return _OCTIC_COEFF_COLUMNS


def octic_root_clusters(vec9, cluster_radius: float, dps: int = 40):
    """Root clusters of the octic with the given basis coordinates.

    Roots are computed at high precision and clustered by spherical
    (chordal) distance with a union-find at the given radius; vanishing
    leading coefficients count as roots at infinity.  Returns the sorted
    cluster sizes.
    """
    with mp.workdps(dps):
        cols = _octic_coeff_columns()
        coeffs = []
        for d in range(9):
            acc = mp.mpc(0)
            for i, v in enumerate(vec9):
                base = cols[i][d]
                if base == 0:
                    continue
                acc += (v if isinstance(v, mp.mpc) else mp.mpc(v)) \
                    * _mp_scalar(base)
            coeffs.append(acc)
        # Degree-ordered: coeffs[d] multiplies z1^(8-d) z2^d.  As a
        # univariate polynomial in z1 (z2 = 1) the list is already
        # highest-first.
        scale = max(abs(c) for c in coeffs)
        if scale == 0:
            return [9]
        normalized = [c / scale for c in coeffs]
        at_infinity = 0
        while normalized and abs(normalized[0]) < mp.mpf("1e-30"):
            normalized.pop(0)
            at_infinity += 1
        finite = []
        if len(normalized) > 1:
            # Exactly multiple roots slow the iteration down; widen the
            # budget before giving up.
            ladder = ((300, 120), (1000, 240), (3000, 480))
            for attempt, (maxsteps, extraprec) in enumerate(ladder):
                try:
                    finite = mp.polyroots(normalized, maxsteps=maxsteps,
                                          extraprec=extraprec, error=False)
                    break
                except mp.libmp.NoConvergence:
                    if attempt == len(ladder) - 1:
                        raise
        points = [("f", z) for z in finite] + [("inf", None)] * at_infinity

        def chordal(p, q):
            kp, zp = p
            kq, zq = q
            if kp == "inf" and kq == "inf":
                return mp.mpf(0)
            if kp == "inf":
                return 1 / mp.sqrt(1 + abs(zq) ** 2)
            if kq == "inf":
                return 1 / mp.sqrt(1 + abs(zp) ** 2)
            return abs(zp - zq) / mp.sqrt((1 + abs(zp) ** 2)
                                          * (1 + abs(zq) ** 2))

        parent = list(range(len(points)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                if chordal(points[i], points[j]) < cluster_radius:
                    parent[find(i)] = find(j)
        sizes: dict[int, int] = {}
        for i in range(len(points)):
            root = find(i)
            sizes[root] = sizes.get(root, 0) + 1
        return sorted(sizes.values(), reverse=True)


@dataclass
class StratumPoint:
    endpoint: Endpoint
    coords: list                    # polished high-precision 6-vector
    stratum: str                    # "L0" | "L1" | "L2" | "L3" | "Lopen" | "?"
    multiple_root: bool
    cluster_sizes: list[int]


@dataclass
class StratumCensus:
    r: tuple
    seed: int
    partition: dict
    points: list[StratumPoint]
    path_count: int
    accepted_count: int
    distinct_count: int
    failed: list
    rescue_added: int
    min_sv: float
    notes: list[str] = field(default_factory=list)


def _classify_point(point_mp, r, cfg: TrackConfig) -> tuple[str, bool, list]:
    """Stratum label and multiple-root flag for a polished chart point."""
    norm = mp.sqrt(sum(abs(c) ** 2 for c in point_mp))
    unit = [c / norm for c in point_mp]
    zero = [abs(unit[i]) < cfg.tol_match for i in range(3)]
    nz = [i for i, z in enumerate(zero) if not z]
    if len(nz) == 0:
        stratum = "L0"
    elif len(nz) == 1:
        stratum = f"L{nz[0] + 1}"
    elif len(nz) == 3:
        stratum = "Lopen"
    else:
        stratum = "?"
    r_mp = [_mp_scalar(_F(v) if isinstance(v, int) else v) for v in r]
    x1, x2, x3, x7, x8, x9 = unit
    vec9 = [x1, x2, x3, r_mp[0] * x1, r_mp[1] * x2, r_mp[2] * x3, x7, x8, x9]
    sizes = octic_root_clusters(vec9, cfg.cluster_radius, cfg.working_dps)
    return stratum, (sizes[0] >= 6), [int(s) for s in sizes]


_CENSUS_CACHE: dict = {}


def count_stratum_points(r: tuple, seed, cfg: TrackConfig | None = None
                         ) -> StratumCensus:
    """Track the five restricted quadrics and classify every endpoint.

    The partition counts endpoints by coordinate-vanishing stratum and,
    within each stratum, by the multiple-root classifier (a sixfold or
    larger root cluster) versus its complement.  Runs are deterministic
    in (r, seed, configuration) and memoized.
    """
    cfg = cfg or TrackConfig()
    r = tuple(_F(v) if isinstance(v, int) else v for v in r)
    key = (r, seed, cfg)
    if key in _CENSUS_CACHE:
        return _CENSUS_CACHE[key]
    for ineq in construction.domain_inequations():
        val = ineq.evaluate({"r1": r[0], "r2": r[1], "r3": r[2]})
        if val == 0:
            raise ValueError("parameter triple violates the leading-"
                             "coefficient inequations")
    polys = literal_restricted_quadrics(r)
    run = solve_projective(list(polys), CHART_VARS, seed,
                           f"stratum:{r[0]},{r[1]},{r[2]}", cfg)
    sys6: CompiledSystem = run["system"]
    points = []
    min_sv = math.inf
    with mp.workdps(cfg.working_dps):
        for e in run["distinct"]:
            e.mp_x = mp_polish(sys6, e.x, cfg.working_dps)
            stratum, multiple, sizes = _classify_point(e.mp_x, r, cfg)
            points.append(StratumPoint(endpoint=e, coords=e.mp_x,
                                       stratum=stratum, multiple_root=multiple,
                                       cluster_sizes=sizes))
            min_sv = min(min_sv, e.sv_min)
    partition = {"L0": 0}
    for j in (1, 2, 3):
        partition[f"L{j}_X1"] = 0
        partition[f"L{j}_X2"] = 0
    partition["Lopen_X1"] = 0
    partition["Lopen_X2"] = 0
    notes = []
    for p in points:
        if p.stratum == "L0":
            partition["L0"] += 1
        elif p.stratum in ("L1", "L2", "L3"):
            partition[f"{p.stratum}_X{1 if p.multiple_root else 2}"] += 1
        elif p.stratum == "Lopen":
            partition[f"Lopen_X{1 if p.multiple_root else 2}"] += 1
        else:
            notes.append("endpoint with exactly one vanishing leading "
                         "coordinate (unclassifiable)")
    census = StratumCensus(r=r, seed=seed, partition=partition, points=points,
                           path_count=run["path_count"],
                           accepted_count=len(run["accepted"]),
                           distinct_count=len(run["distinct"]),
                           failed=run["failed"],
                           rescue_added=run["rescue_added"],
                           min_sv=min_sv, notes=notes)
    _CENSUS_CACHE[key] = census
    return census


def _mp_chordal(a, b) -> float:
    na = mp.sqrt(sum(abs(c) ** 2 for c in a))
    nb = mp.sqrt(sum(abs(c) ** 2 for c in b))
    inner = abs(sum(x * mp.conj(y) for x, y in zip(a, b))) / (na * nb)
    inner = min(inner, mp.mpf(1))
    return float(mp.sqrt(1 - inner ** 2))


def h_orbit_signs() -> list[tuple]:
    """Sign vectors of the diagonal subgroup on the six chart coordinates,
    read off the stored generator matrices."""
    table = construction.action_table()
    idx = [0, 1, 2, 6, 7, 8]
    om = construction.octic_block(table["omega"])
    rh = construction.octic_block(table["rho"])
    ident = [[_F(1) if i == j else _F(0) for j in range(9)] for i in range(9)]
    prod = [[sum(om[i][k] * rh[k][j] for k in range(9)) for j in range(9)]
            for i in range(9)]
    return [tuple(mat[i][i] for i in idx) for mat in (ident, om, rh, prod)]


def u_dprime_image(census: StratumCensus, tol: float = 1e-6):
    """Common chart image of the non-multiple-root open-stratum points.

    Returns (image as a 9-vector of mp complex, pairwise spread, count).
    """
    pts = [p for p in census.points
           if p.stratum == "Lopen" and not p.multiple_root]
    images = []
    with mp.workdps(40):
        for p in pts:
            x1, x2, x3, x7, x8, x9 = p.coords
            y = [x2 * x3 / x1, x3 * x1 / x2, x1 * x2 / x3,
                 x7, x8, x9, mp.mpc(0), mp.mpc(0), mp.mpc(0)]
            images.append(y)
        spread = 0.0
        for a, b in itertools.combinations(images, 2):
            spread = max(spread, _mp_chordal(a, b))
    return images, spread, len(pts)


# ---------------------------------------------------------------------------
# The fiber probe


def _fiber_equations_exact(r: tuple) -> list[MPoly]:
    env = {"r1": r[0], "r2": r[1], "r3": r[2], "eps": _F(1)}
    return [e.substitute(env) for e in construction.y_equations_4_5()]


_PROBE_CACHE: dict = {}


def fiber_probe(r: tuple, seed, cfg: TrackConfig | None = None,
                slice_count: int = 1) -> dict:
    """Slice the chart-space fiber over r and collect geometry evidence.

    Each random codimension-3 slice cuts the two quadrics and three
    linear equations down to a square chart system; the probe records
    the endpoint count per slice, a numeric rank of the fiber Jacobian
    at a sample endpoint, and the sampled points themselves.  Runs are
    deterministic in the arguments and memoized.
    """
    cfg = cfg or TrackConfig()
    r = tuple(_F(v) if isinstance(v, int) else v for v in r)
    key = (r, seed, cfg, slice_count)
    if key in _PROBE_CACHE:
        return _PROBE_CACHE[key]
    eqs = _fiber_equations_exact(r)
    base_rows = [_poly_terms(e, Y_NAMES) for e in eqs]
    fiber_sys = CompiledSystem(base_rows, 9)
    slice_results = []
    sampled_points = []
    for s in range(slice_count):
        rng = _rng(seed, "fiber-slice", r, s)
        extra = [_linear_row_terms(list(_unit_row(rng, 9))) for _ in range(3)]
        run = solve_projective(base_rows, Y_NAMES, seed,
                               f"fiber:{r}:{s}", cfg, extra_rows=extra)
        slice_results.append(run)
        sampled_points.extend(e.x for e in run["distinct"])
    if not sampled_points:
        raise RuntimeError("no fiber slice produced an accepted endpoint")
    jac = fiber_sys.jacobian(sampled_points[0] /
                             np.linalg.norm(sampled_points[0]))
    sv = np.linalg.svd(jac, compute_uv=False)
    rank = int(np.sum(sv > cfg.tol_rank * sv[0]))
    probe = {
        "slice_runs": slice_results,
        "slice_counts": [len(run["distinct"]) for run in slice_results],
        "path_counts": [run["path_count"] for run in slice_results],
        "sampled_points": sampled_points,
        "fiber_jacobian_rank": rank,
        "fiber_jacobian_sv": [float(v) for v in sv],
        "fiber_system": fiber_sys,
    }
    _PROBE_CACHE[key] = probe
    return probe


def projection_data():
    """Exact data of the linear projection: center, target, and the
    coordinate extraction of the target part."""
    centers = [list(v) for v in construction.center_space_vectors()]
    targets = [list(v) for v in construction.target_space_basis()]
    center_space = Subspace(9, centers)
    target_space = Subspace(9, targets)
    columns = [list(c) for c in centers] + [list(t) for t in targets]
    m = ExactMatrix.from_columns(columns)
    inv = m.inverse()
    # Rows 5..8 of the inverse read off the target-basis coordinates.
    extract = [inv.rows[i] for i in range(5, 9)]
    return {
        "center_space": center_space,
        "target_space": target_space,
        "center_rank": center_space.dim,
        "target_rank": target_space.dim,
        "intersection_dim": center_space.intersection(target_space).dim,
        "matrix": m,
        "extract_rows": extract,
    }


# ---------------------------------------------------------------------------
# CheckResult wrappers


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return _F(num, den)
    return None


def _stratum_anchor_vectors(r1: Fraction) -> list[list] | None:
    """Exact single-pair-stratum chart vectors at a slice value whose
    square-root relation has a rational root."""
    a = _rational_sqrt(25 * r1 * r1 - 900)
    if a is None:
        return None
    out = []
    for sgn in (1, -1):
        out.append([_F(sgn), _F(0), _F(0), r1, _F(1), _F(0)])
        out.append([sgn * a, _F(0), _F(0), 90 - 5 * r1 * r1, -5 * r1, _F(6)])
    return out


def check_stratum_counts(seed: int = 42,
                         sample_r: tuple = (_F(10), _F(1, 2), _F(1, 3)),
                         cfg: TrackConfig | None = None) -> CheckResult:
    """Numeric census of the restricted system over two parameter values.

    At the generic sample the thirty-two paths must produce thirty-two
    accepted, regular, distinct endpoints partitioned 4 + (2 per stratum
    and class) + (12 + 4); the exact anchor points must each match an
    endpoint; the four non-multiple-root open-stratum points must form a
    single orbit of the diagonal subgroup.  At the parameter origin the
    open stratum must carry sixteen points.
    """
    cfg = cfg or TrackConfig(seed=seed)
    started = time.perf_counter()
    residuals: list[str] = []
    sample_r = tuple(_F(v) if isinstance(v, int) else v for v in sample_r)

    census = count_stratum_points(sample_r, seed, cfg)
    residuals.extend(census.notes)
    expected = {"L0": 4, "L1_X1": 2, "L1_X2": 2, "L2_X1": 2, "L2_X2": 2,
                "L3_X1": 2, "L3_X2": 2, "Lopen_X1": 12, "Lopen_X2": 4}
    if census.path_count != 32:
        residuals.append(f"path count {census.path_count} != 32")
    if census.accepted_count != 32 or census.distinct_count != 32:
        residuals.append(
            f"accepted {census.accepted_count}, distinct "
            f"{census.distinct_count}: expected 32 accepted, 32 distinct "
            f"(failed paths: {census.failed})")
    if census.partition != expected:
        residuals.append(f"partition {census.partition} != {expected}")
    if census.min_sv <= cfg.sv_regular:
        residuals.append(
            f"smallest endpoint singular value {census.min_sv:.3e} is not "
            f"above {cfg.sv_regular:.0e} (a multiple point)")

    # Exact anchors: the four sparse solutions, always; the single-pair
    # instances whenever the square-root relation has a rational root.
    with mp.workdps(cfg.working_dps):
        sparse = construction.special_points()["sparse_solutions"]
        for p in sparse:
            anchor = [_F(0), _F(0), _F(0)] + [_F(v) for v in p]
            target = [_mp_scalar(c) for c in anchor]
            if not any(_mp_chordal(pt.coords, target) < cfg.tol_match
                       for pt in census.points if pt.stratum == "L0"):
                residuals.append(f"sparse anchor {p} matches no endpoint")
        anchors = _stratum_anchor_vectors(sample_r[0])
        if anchors is not None:
            for anchor in anchors:
                target = [_mp_scalar(c) for c in anchor]
                if not any(_mp_chordal(pt.coords, target) < cfg.tol_match
                           for pt in census.points if pt.stratum == "L1"):
                    residuals.append(
                        "single-pair-stratum anchor "
                        f"{[str(c) for c in anchor]} matches no endpoint")

        # Orbit structure of the four non-multiple-root open-stratum points.
        orbit_pts = [p for p in census.points
                     if p.stratum == "Lopen" and not p.multiple_root]
        if len(orbit_pts) != 4:
            residuals.append(
                f"open-stratum non-multiple-root count {len(orbit_pts)} != 4")
        else:
            base = orbit_pts[0].coords
            matched = set()
            for signs in h_orbit_signs():
                image = [_mp_scalar(s) * c for s, c in zip(signs, base)]
                hits = [i for i, p in enumerate(orbit_pts)
                        if _mp_chordal(p.coords, image) < cfg.tol_match]
                if len(hits) == 1:
                    matched.add(hits[0])
                else:
                    residuals.append(
                        "diagonal-subgroup image of an open-stratum point "
                        f"matched {len(hits)} endpoints")
            if matched != {0, 1, 2, 3}:
                residuals.append(
                    "the four open-stratum points are not a single "
                    "diagonal-subgroup orbit")

    origin = count_stratum_points((0, 0, 0), seed, cfg)
    open_total = origin.partition["Lopen_X1"] + origin.partition["Lopen_X2"]
    if open_total != 16:
        residuals.append(
            f"open-stratum count at the parameter origin is {open_total}, "
            "expected 16")

    closed = sum(census.partition[f"L{j}_X{k}"]
                 for j in (1, 2, 3) for k in (1, 2))
    open_count = (census.partition["Lopen_X1"]
                  + census.partition["Lopen_X2"])
    details = {
        "sample_r": [str(v) for v in sample_r],
        "partition": census.partition,
        "partition_display": (f"{census.partition['L0']}+{closed}"
                              f"+{open_count}="
                              f"{census.partition['L0'] + closed + open_count}"),
        "origin_partition": origin.partition,
        "min_singular_value": census.min_sv,
        "failed_paths": census.failed,
        "rescued": census.rescue_added,
        "tolerances": {"track": cfg.tol_track, "dedup": cfg.tol_dedup,
                       "match": cfg.tol_match,
                       "cluster_radius": cfg.cluster_radius},
        "seed": seed,
    }
    return _finish("numeric/lemma6_2", started, residuals, details)


def check_fiber_geometry(seed: int = 42,
                         cfg: TrackConfig | None = None) -> CheckResult:
    """Numeric geometry of the parameter-origin fiber and the projection.

    The fiber sliced by a random codimension-3 space has degree four;
    its Jacobian has numeric rank five at a sample point (dimension
    three); the common chart image of the non-multiple-root open-stratum
    points recovers the stored fiber point; the exact projection data
    (center and target ranks, empty intersection) holds; sampled fiber
    points project onto a spanning set of the target; the projection
    differential has rank three; and each of ten random targets has
    exactly one regular preimage on the fiber.
    """
    cfg = cfg or TrackConfig(seed=seed)
    started = time.perf_counter()
    residuals: list[str] = []
    origin = (_F(0), _F(0), _F(0))

    probe = fiber_probe(origin, seed, cfg, slice_count=5)
    if probe["slice_counts"][0] != 4:
        residuals.append(
            f"first slice endpoint count {probe['slice_counts'][0]} != 4")
    if any(c != 4 for c in probe["slice_counts"]):
        residuals.append(f"slice counts {probe['slice_counts']} are not all 4")
    if any(c != 4 for c in probe["path_counts"]):
        residuals.append(f"path counts {probe['path_counts']} are not all 4")
    if probe["fiber_jacobian_rank"] != 5:
        residuals.append(
            f"fiber Jacobian rank {probe['fiber_jacobian_rank']} != 5")

    # The common chart image of the open-stratum non-multiple-root points.
    census = count_stratum_points(origin, seed, cfg)
    images, spread, count = u_dprime_image(census)
    points = construction.special_points()
    with mp.workdps(cfg.working_dps):
        exact_image = [_mp_scalar(c) for c in points["u_dprime_0"].coords]
        if count != 4:
            residuals.append(f"open-stratum non-multiple-root count {count} "
                             "!= 4 at the parameter origin")
        if spread > 1e-6:
            residuals.append(f"chart images disagree (spread {spread:.2e})")
        for y in images:
            for k in (6, 7, 8):
                if abs(y[k]) > 1e-8:
                    residuals.append("chart image has a nonzero trailing "
                                     "coordinate")
                    break
        if images and _mp_chordal(images[0], exact_image) > 1e-6:
            residuals.append(
                "chart image of the non-multiple-root orbit misses the "
                "stored fiber point")

    # Small-parameter continuity of the common image.
    small = tuple(v * _F(1, 100000) for v in (_F(10), _F(1, 2), _F(1, 3)))
    census_small = count_stratum_points(small, seed, cfg)
    images_small, spread_small, count_small = u_dprime_image(census_small)
    with mp.workdps(cfg.working_dps):
        if count_small != 4 or spread_small > 1e-4:
            residuals.append(
                f"small-parameter image: count {count_small}, spread "
                f"{spread_small:.2e}")
        elif _mp_chordal(images_small[0], exact_image) > 1e-2:
            residuals.append("small-parameter image is not close to the "
                             "parameter-origin image")

    # Exact projection data.
    proj = projection_data()
    if proj["center_rank"] != 5:
        residuals.append(f"center rank {proj['center_rank']} != 5")
    if proj["target_rank"] != 4:
        residuals.append(f"target rank {proj['target_rank']} != 4")
    if proj["intersection_dim"] != 0:
        residuals.append(
            f"center/target intersection dimension "
            f"{proj['intersection_dim']} != 0")
    if proj["matrix"].rank() != 9:
        residuals.append("center plus target do not span the chart space")

    extract = np.array([[complex(embed_complex(v)) for v in row]
                        for row in proj["extract_rows"]])
    samples = probe["sampled_points"]
    if len(samples) < 20:
        residuals.append(f"only {len(samples)} sampled fiber points, "
                         "expected at least 20")
    images_mat = np.array([extract @ (p / np.linalg.norm(p))
                           for p in samples])
    sv_img = np.linalg.svd(images_mat, compute_uv=False)
    img_rank = int(np.sum(sv_img > cfg.tol_rank * sv_img[0]))
    if img_rank != 4:
        residuals.append(f"projected fiber samples span rank {img_rank} != 4")

    # Projection differential rank at a sample point.
    sample = samples[0] / np.linalg.norm(samples[0])
    fiber_sys: CompiledSystem = probe["fiber_system"]
    jac = fiber_sys.jacobian(sample)
    _u, _s, vh = np.linalg.svd(jac)
    tangent = vh.conj().T[:, 5:]           # 4-dim kernel, includes the scale
    pushed = extract @ tangent             # 4 x 4
    sv_push = np.linalg.svd(pushed, compute_uv=False)
    push_rank = int(np.sum(sv_push > cfg.tol_rank * sv_push[0]))
    if push_rank != 4:
        residuals.append(
            f"projection differential spans rank {push_rank} != 4 "
            "(projective rank 3 expected)")

    # Preimage counts of random targets.
    eqs = _fiber_equations_exact(origin)
    base_rows = [_poly_terms(e, Y_NAMES) for e in eqs]
    preimage_counts = []
    for trial in range(10):
        rng = _rng(seed, "preimage", trial)
        n_coords = np.array([complex(rng.gauss(0, 1), rng.gauss(0, 1))
                             for _ in range(4)])
        pivot = int(np.argmax(np.abs(n_coords)))
        align = []
        for j in range(4):
            if j == pivot:
                continue
            row = n_coords[j] * extract[pivot] - n_coords[pivot] * extract[j]
            align.append(_linear_row_terms(list(row)))
        run = solve_projective(base_rows, Y_NAMES, seed,
                               f"preimage:{trial}", cfg, extra_rows=align)
        regular = [e for e in run["distinct"] if e.sv_min > cfg.sv_regular]
        preimage_counts.append(len(regular))
    if any(c != 1 for c in preimage_counts):
        residuals.append(
            f"regular preimage counts {preimage_counts} are not all 1")

    details = {
        "slice_counts": probe["slice_counts"],
        "fiber_jacobian_rank": probe["fiber_jacobian_rank"],
        "center_rank": proj["center_rank"],
        "target_rank": proj["target_rank"],
        "intersection_dim": proj["intersection_dim"],
        "image_span_rank": img_rank,
        "differential_span_rank": push_rank,
        "preimage_counts": preimage_counts,
        "tolerances": {"track": cfg.tol_track, "dedup": cfg.tol_dedup,
                       "rank": cfg.tol_rank},
        "seed": seed,
    }
    return _finish("numeric/fiber_5", started, residuals, details)


def check_seed_stability(seed: int = 42,
                         sample_r: tuple = (_F(10), _F(1, 2), _F(1, 3)),
                         cfg: TrackConfig | None = None) -> CheckResult:
    """The census partition and the fiber slice degree match across seeds."""
    cfg = cfg or TrackConfig()
    started = time.perf_counter()
    residuals: list[str] = []
    partitions = []
    slice_counts = []
    seeds = (seed, seed + 1, seed + 2)
    for s in seeds:
        census = count_stratum_points(sample_r, s, cfg)
        partitions.append(census.partition)
        probe = fiber_probe((_F(0), _F(0), _F(0)), s, cfg, slice_count=1)
        slice_counts.append(probe["slice_counts"][0])
    for seed, part in zip(seeds[1:], partitions[1:]):
        if part != partitions[0]:
            residuals.append(
                f"seed {seed}: partition {part} differs from seed "
                f"{seeds[0]}: {partitions[0]}")
    if len(set(slice_counts)) != 1:
        residuals.append(f"fiber slice counts {slice_counts} differ by seed")
    details = {
        "seeds": list(seeds),
        "partition": partitions[0],
        "slice_counts": slice_counts,
        "tolerances": {"track": cfg.tol_track, "dedup": cfg.tol_dedup},
    }
    return _finish("numeric/seed_stability", started, residuals, details)


NUMERIC_CHECKS = (check_stratum_counts, check_fiber_geometry,
                  check_seed_stability)
