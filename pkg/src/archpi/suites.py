"""Verification suites: every inequality family gets a machine-checked run.

Each suite produces deterministic, ordered report rows plus violation and
inconclusive counts.  A violation means an inequality certifiably failed;
inconclusive means intervals still overlapped at the precision cap.
Randomized suites parallelize over samples; each sample owns its seed.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .chords import ArcSpec, chord_compare, partition_profile, tangent_compare
from .circuits import circuit_measures, random_circuit
from .dyadic import Dyadic
from .interval import Interval, Verdict, compare_certain
from .polygons import (
    RegularScheme,
    iter_scheme_measures,
    pi_bounds,
    pi_enclosure,
    two_pi_enclosure,
)
from .rational import (
    coprime_pairs,
    normalized_compare,
    normalized_length,
    realize_rational,
    winding_count,
)
from .trig import sandwich_report

DEFAULT_PRECISION = 64

#: chord range for sampled arcs, as 2^-16 fixed-point bounds on (0.1, 1.99)
_ARC_LO = 6554
_ARC_HI = 130416


@dataclass
class SuiteResult:
    suite: str
    samples: int
    violations: int
    inconclusive: int
    rows: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.inconclusive == 0

    def merge_row(self, row: dict, expected: Verdict, verdict: Verdict) -> None:
        row["verdict"] = verdict.value
        if verdict is Verdict.OVERLAP:
            self.inconclusive += 1
            row["status"] = "inconclusive"
        elif verdict is not expected:
            self.violations += 1
            row["status"] = "violated"
        else:
            row["status"] = "ok"
        self.rows.append(row)


def _sample_seed(seed: int, index: int) -> int:
    return (seed * 1_000_003 + index) & 0xFFFFFFFFFFFFFFFF


def _random_arc(rng: random.Random, prec: int) -> ArcSpec:
    chord = Dyadic(rng.randint(_ARC_LO, _ARC_HI), -16)
    return ArcSpec.from_chord(Interval.exact(chord, prec))


def _dec(x: Interval) -> List[str]:
    return list(x.decimal_pair(17))


# -- polygon grid suites -----------------------------------------------------


def run_monotone(
    n_values=(3, 4, 6), m_max: int = 25, precision: int = 256, **_
) -> SuiteResult:
    """Prop-style monotonicity: p, a increase in m; P, A decrease."""
    result = SuiteResult("monotone", 0, 0, 0)
    for n in n_values:
        chain = list(iter_scheme_measures(n, m_max + 1, precision))
        for m in range(m_max + 1):
            cur, nxt = chain[m], chain[m + 1]
            checks = [
                ("p", cur.p, nxt.p, Verdict.CERTAINLY_LESS),
                ("a", cur.a, nxt.a, Verdict.CERTAINLY_LESS),
                ("P", cur.P, nxt.P, Verdict.CERTAINLY_GREATER),
                ("A", cur.A, nxt.A, Verdict.CERTAINLY_GREATER),
            ]
            for name, lhs, rhs, expected in checks:
                result.samples += 1
                row = {"suite": "monotone", "n": n, "m": m, "measure": name}
                result.merge_row(row, expected, compare_certain(lhs, rhs))
    return result


def run_bounds(
    n_values=(3, 4, 6), m_max: int = 25, precision: int = 256, **_
) -> SuiteResult:
    """p < P and a < A at every refinement step."""
    result = SuiteResult("bounds", 0, 0, 0)
    for n in n_values:
        for meas in iter_scheme_measures(n, m_max, precision):
            for name, lhs, rhs in (("p<P", meas.p, meas.P), ("a<A", meas.a, meas.A)):
                result.samples += 1
                row = {
                    "suite": "bounds",
                    "n": n,
                    "m": meas.scheme.m,
                    "check": name,
                }
                result.merge_row(
                    row, Verdict.CERTAINLY_LESS, compare_certain(lhs, rhs)
                )
    return result


def run_h_ratio(
    n_values=(3, 4, 6), m_max: int = 25, precision: int = 256, **_
) -> SuiteResult:
    """Vertex gap contraction h(m) > 3 h(m+1), with the observed ratio."""
    result = SuiteResult("h-ratio", 0, 0, 0)
    for n in n_values:
        chain = list(iter_scheme_measures(n, m_max + 1, precision))
        for m in range(m_max + 1):
            result.samples += 1
            h_cur, h_next = chain[m].h, chain[m + 1].h
            ratio = h_cur / h_next
            row = {
                "suite": "h-ratio",
                "n": n,
                "m": m,
                "ratio": _dec(ratio),
            }
            result.merge_row(
                row,
                Verdict.CERTAINLY_GREATER,
                compare_certain(h_cur, h_next * 3),
            )
    return result


def run_identities(
    n_values=(3, 4, 6),
    m_max: int = 25,
    precision: int = 256,
    limit_m: int = 40,
    **_,
) -> SuiteResult:
    """Heron and half-perimeter identities, plus cross-scheme pi agreement."""
    result = SuiteResult("identities", 0, 0, 0)
    width_cap = Dyadic(1, 8 - precision)
    for n in n_values:
        for meas in iter_scheme_measures(n, m_max, precision):
            heron = (meas.p * (4 - meas.ell * meas.ell).sqrt()) / 4
            half_p = meas.P / 2
            for name, lhs, rhs in (("a", meas.a, heron), ("A", meas.A, half_p)):
                result.samples += 1
                ok = lhs.overlaps(rhs)
                width_ok = max(lhs.width(), rhs.width()) <= width_cap * max(
                    lhs.mag(), Dyadic(1)
                )
                row = {
                    "suite": "identities",
                    "n": n,
                    "m": meas.scheme.m,
                    "identity": name,
                    "width_ok": width_ok,
                }
                # overlap IS the expected outcome for an identity
                row["verdict"] = "overlap" if ok else "separated"
                row["status"] = "ok" if ok and width_ok else "violated"
                if row["status"] == "violated":
                    result.violations += 1
                result.rows.append(row)
    # cross-scheme agreement of the [p/2, P/2] brackets at high depth
    brackets = {n: pi_bounds(RegularScheme(n, limit_m), precision) for n in n_values}
    names = sorted(brackets)
    for i, na in enumerate(names):
        for nb in names[i + 1 :]:
            result.samples += 1
            a, b = brackets[na], brackets[nb]
            ok = a.overlaps(b)
            row = {
                "suite": "identities",
                "check": f"pi-limit {na} vs {nb} at m={limit_m}",
                "width_a": a.width().decimal(30, up=True),
                "width_b": b.width().decimal(30, up=True),
            }
            row["verdict"] = "overlap" if ok else "separated"
            row["status"] = "ok" if ok else "violated"
            if not ok:
                result.violations += 1
            result.rows.append(row)
    return result


# -- randomized arc suites ---------------------------------------------------


def _chord_compare_sample(args) -> dict:
    seed, precision = args
    rng = random.Random(seed)
    arc = _random_arc(rng, precision)
    n = rng.randint(2, 32)
    m = rng.randint(1, n - 1)
    res = chord_compare(arc, m, n, precision)
    return {
        "suite": "chord-compare",
        "sample_seed": seed,
        "arc_chord": _dec(arc.chord_total),
        "m": m,
        "n": n,
        "lhs": _dec(res.lhs),
        "rhs": _dec(res.rhs),
        "precision_used": res.precision_used,
        "_verdict": res.verdict,
    }


def _tangent_compare_sample(args) -> dict:
    seed, precision = args
    rng = random.Random(seed)
    arc = _random_arc(rng, precision)
    n = rng.randint(2, 32)
    m = rng.randint(1, n - 1)
    res = tangent_compare(arc, m, n, precision)
    return {
        "suite": "tangent-compare",
        "sample_seed": seed,
        "arc_chord": _dec(arc.chord_total),
        "m": m,
        "n": n,
        "lhs": _dec(res.lhs),
        "rhs": _dec(res.rhs),
        "precision_used": res.precision_used,
        "_verdict": res.verdict,
    }


def _map_samples(fn: Callable, args: List, jobs: int) -> List[dict]:
    if jobs <= 1:
        return [fn(a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, args, chunksize=8))


def _run_randomized(
    name: str,
    sample_fn: Callable,
    samples: int,
    seed: int,
    precision: int,
    jobs: int,
) -> SuiteResult:
    result = SuiteResult(name, samples, 0, 0)
    args = [(_sample_seed(seed, i), precision) for i in range(samples)]
    for row in _map_samples(sample_fn, args, jobs):
        verdict = row.pop("_verdict")
        result.merge_row(row, Verdict.CERTAINLY_LESS, verdict)
    return result


def run_chord_compare(
    samples: int = 1000,
    seed: int = 1,
    precision: int = DEFAULT_PRECISION,
    jobs: int = 1,
    **_,
) -> SuiteResult:
    return _run_randomized(
        "chord-compare", _chord_compare_sample, samples, seed, precision, jobs
    )


def run_tangent_compare(
    samples: int = 1000,
    seed: int = 1,
    precision: int = DEFAULT_PRECISION,
    jobs: int = 1,
    **_,
) -> SuiteResult:
    return _run_randomized(
        "tangent-compare", _tangent_compare_sample, samples, seed, precision, jobs
    )


def _profile_sample(args) -> List[dict]:
    seed, precision, which = args
    rng = random.Random(seed)
    arc = _random_arc(rng, precision)
    n = rng.randint(2, 16)
    profile = partition_profile(arc, n, precision)
    rows = []
    if which == "projections":
        gaps = profile.projections
        half = (n + 1) // 2
        for i in range(half - 1):
            verdict = compare_certain(gaps[i], gaps[i + 1])
            rows.append(
                {
                    "suite": "projections",
                    "sample_seed": seed,
                    "n": n,
                    "index": i + 1,
                    "check": "increasing",
                    "_verdict": verdict,
                }
            )
        mirrored = all(
            gaps[i].lo == gaps[n - 1 - i].lo and gaps[i].hi == gaps[n - 1 - i].hi
            for i in range(n)
        )
        rows.append(
            {
                "suite": "projections",
                "sample_seed": seed,
                "n": n,
                "check": "symmetric",
                "_verdict": Verdict.CERTAINLY_LESS
                if mirrored
                else Verdict.CERTAINLY_GREATER,
            }
        )
        total = gaps[0]
        for g in gaps[1:]:
            total = total + g
        contains = total.overlaps(arc.chord_total)
        rows.append(
            {
                "suite": "projections",
                "sample_seed": seed,
                "n": n,
                "check": "sum-encloses-chord",
                "_verdict": Verdict.CERTAINLY_LESS
                if contains
                else Verdict.CERTAINLY_GREATER,
            }
        )
        # corollary: leading partial sums stay under the uniform average
        # (strict only below the midpoint; even n gives equality at n/2)
        full = profile.cumulative_chords[-1]
        for s in range(2, (n + 1) // 2):
            partial = gaps[0]
            for g in gaps[1:s]:
                partial = partial + g
            bound = (full * s) / n
            rows.append(
                {
                    "suite": "projections",
                    "sample_seed": seed,
                    "n": n,
                    "index": s,
                    "check": "partial-below-average",
                    "_verdict": compare_certain(partial, bound),
                }
            )
    else:
        segs = profile.tangent_segments
        for i in range(n - 1):
            rows.append(
                {
                    "suite": "tangent-profile",
                    "sample_seed": seed,
                    "n": n,
                    "index": i + 1,
                    "check": "increasing",
                    "_verdict": compare_certain(segs[i], segs[i + 1]),
                }
            )
    return rows


def _run_profile_suite(
    name: str, samples: int, seed: int, precision: int, jobs: int
) -> SuiteResult:
    result = SuiteResult(name, 0, 0, 0)
    args = [(_sample_seed(seed, i), precision, name) for i in range(samples)]
    for rows in _map_samples(_profile_sample, args, jobs):
        for row in rows:
            result.samples += 1
            verdict = row.pop("_verdict")
            result.merge_row(row, Verdict.CERTAINLY_LESS, verdict)
    return result


def run_projections(
    samples: int = 100,
    seed: int = 1,
    precision: int = DEFAULT_PRECISION,
    jobs: int = 1,
    **_,
) -> SuiteResult:
    return _run_profile_suite("projections", samples, seed, precision, jobs)


def run_tangent_profile(
    samples: int = 100,
    seed: int = 1,
    precision: int = DEFAULT_PRECISION,
    jobs: int = 1,
    **_,
) -> SuiteResult:
    return _run_profile_suite("tangent-profile", samples, seed, precision, jobs)


# -- rational sweep ----------------------------------------------------------


def run_rational(
    max_n: int = 24, precision: int = DEFAULT_PRECISION, **_
) -> SuiteResult:
    """Prop 4.1 ordering over all coprime pairs, both modes, plus winding."""
    result = SuiteResult("rational", 0, 0, 0)
    realized = [realize_rational(k, N, precision) for k, N in coprime_pairs(max_n)]
    two_pi = two_pi_enclosure(precision)
    for r in realized:
        result.samples += 1
        row = {
            "suite": "rational",
            "k": r.k,
            "N": r.N,
            "chord": _dec(r.chord),
            "normalized": _dec(normalized_length(r)),
            "winding_checked": winding_count(r) == r.k,
        }
        inscribed_below = compare_certain(normalized_length(r), two_pi)
        circ_above = compare_certain(
            normalized_length(r, "circumscribed"), two_pi
        )
        ok = (
            row["winding_checked"]
            and inscribed_below is Verdict.CERTAINLY_LESS
            and circ_above is Verdict.CERTAINLY_GREATER
        )
        row["verdict"] = "ok" if ok else "violated"
        row["status"] = row["verdict"]
        if not ok:
            result.violations += 1
        result.rows.append(row)
    # adjacent ordering after sorting by chord, descending
    ordered = sorted(realized, key=lambda r: r.chord.lo.as_fraction(), reverse=True)
    for mode, expected in (
        ("inscribed", Verdict.CERTAINLY_LESS),
        ("circumscribed", Verdict.CERTAINLY_GREATER),
    ):
        for a, b in zip(ordered, ordered[1:]):
            result.samples += 1
            cmp = normalized_compare(a, b, mode)
            row = {
                "suite": "rational",
                "mode": mode,
                "pair": [[a.k, a.N], [b.k, b.N]],
                "lhs": _dec(cmp.lhs),
                "rhs": _dec(cmp.rhs),
            }
            result.merge_row(row, expected, cmp.verdict)
    return result


# -- circuit suites ----------------------------------------------------------


def _circuit_sample(args) -> dict:
    seed, cap_exp, precision, want_area = args
    cap = Interval.exact(Dyadic(1, -cap_exp), precision)
    circuit = random_circuit(3, cap, seed, precision)
    measures = circuit_measures(circuit)
    pi = pi_enclosure(precision)
    two_pi = pi * 2
    if want_area:
        low = compare_certain(measures.area_in, pi)
        high = compare_certain(pi, measures.area_circ)
        gap = pi.hi - measures.area_in.lo
        inner, outer = measures.area_in, measures.area_circ
    else:
        low = compare_certain(measures.perimeter_in, two_pi)
        high = compare_certain(two_pi, measures.perimeter_circ)
        gap = two_pi.hi - measures.perimeter_in.lo
        inner, outer = measures.perimeter_in, measures.perimeter_circ
    if low is Verdict.OVERLAP or high is Verdict.OVERLAP:
        verdict = Verdict.OVERLAP
    elif low is Verdict.CERTAINLY_LESS and high is Verdict.CERTAINLY_LESS:
        verdict = Verdict.CERTAINLY_LESS
    else:
        verdict = Verdict.CERTAINLY_GREATER
    return {
        "suite": "area-sandwich" if want_area else "circuit-sandwich",
        "sample_seed": seed,
        "mesh_cap_exp": cap_exp,
        "points": len(circuit),
        "inner": _dec(inner),
        "outer": _dec(outer),
        "mesh": _dec(measures.mesh),
        "_gap": gap,
        "_verdict": verdict,
    }


def _run_circuit_suite(
    name: str,
    want_area: bool,
    circuits_per_cap: int,
    cap_exps,
    seed: int,
    precision: int,
    jobs: int,
) -> SuiteResult:
    result = SuiteResult(name, 0, 0, 0)
    worst_gaps = []
    for cap_exp in cap_exps:
        args = [
            (_sample_seed(seed, cap_exp * 100_000 + i), cap_exp, precision, want_area)
            for i in range(circuits_per_cap)
        ]
        rows = _map_samples(_circuit_sample, args, jobs)
        worst = None
        for row in rows:
            result.samples += 1
            gap = row.pop("_gap")
            worst = gap if worst is None or gap > worst else worst
            verdict = row.pop("_verdict")
            result.merge_row(row, Verdict.CERTAINLY_LESS, verdict)
        worst_gaps.append(worst)
    for prev, cur, cap_exp in zip(worst_gaps, worst_gaps[1:], cap_exps[1:]):
        result.samples += 1
        row = {
            "suite": name,
            "check": "worst-gap-nonincreasing",
            "mesh_cap_exp": cap_exp,
            "worst_gap": cur.decimal(20, up=True),
        }
        verdict = (
            Verdict.CERTAINLY_LESS if cur <= prev else Verdict.CERTAINLY_GREATER
        )
        result.merge_row(row, Verdict.CERTAINLY_LESS, verdict)
    return result


def run_circuit_sandwich(
    circuits_per_cap: int = 100,
    cap_exps=tuple(range(1, 9)),
    seed: int = 1,
    precision: int = DEFAULT_PRECISION,
    jobs: int = 1,
    **_,
) -> SuiteResult:
    return _run_circuit_suite(
        "circuit-sandwich", False, circuits_per_cap, cap_exps, seed, precision, jobs
    )


def run_area_sandwich(
    circuits_per_cap: int = 100,
    cap_exps=tuple(range(1, 9)),
    seed: int = 1,
    precision: int = DEFAULT_PRECISION,
    jobs: int = 1,
    **_,
) -> SuiteResult:
    return _run_circuit_suite(
        "area-sandwich", True, circuits_per_cap, cap_exps, seed, precision, jobs
    )


# -- trig sandwich -----------------------------------------------------------


def run_trig_sandwich(
    k_max: int = 16, precision: int = 128, **_
) -> SuiteResult:
    """theta = 2^-k ladder: both verdicts plus the theta^2 gap bound."""
    result = SuiteResult("trig-sandwich", 0, 0, 0)
    prev_gap = None
    for k in range(1, k_max + 1):
        result.samples += 1
        theta = Interval.exact(Dyadic(1, -k), precision)
        report = sandwich_report(theta, precision)
        gap = report.mid - 1
        gap_bound = compare_certain(gap, theta * theta)
        decreasing = prev_gap is None or gap.hi < prev_gap.lo or gap.hi <= prev_gap.hi
        row = {
            "suite": "trig-sandwich",
            "k": k,
            "theta": _dec(theta),
            "mid": _dec(report.mid),
            "upper": _dec(report.upper),
            "gap_hi": gap.hi.decimal(30, up=True),
        }
        ok = (
            report.lower_verdict is Verdict.CERTAINLY_LESS
            and report.upper_verdict is Verdict.CERTAINLY_LESS
            and gap_bound is Verdict.CERTAINLY_LESS
            and decreasing
        )
        inconclusive = (
            report.lower_verdict is Verdict.OVERLAP
            or report.upper_verdict is Verdict.OVERLAP
            or gap_bound is Verdict.OVERLAP
        )
        row["verdict"] = (
            "inconclusive" if inconclusive else ("ok" if ok else "violated")
        )
        row["status"] = row["verdict"]
        if inconclusive:
            result.inconclusive += 1
        elif not ok:
            result.violations += 1
        result.rows.append(row)
        prev_gap = gap
    return result


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "monotone": run_monotone,
    "bounds": run_bounds,
    "identities": run_identities,
    "h-ratio": run_h_ratio,
    "chord-compare": run_chord_compare,
    "tangent-compare": run_tangent_compare,
    "projections": run_projections,
    "tangent-profile": run_tangent_profile,
    "rational": run_rational,
    "circuit-sandwich": run_circuit_sandwich,
    "area-sandwich": run_area_sandwich,
    "trig-sandwich": run_trig_sandwich,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    clean = {k: v for k, v in kwargs.items() if v is not None}
    return SUITES[name](**clean)
