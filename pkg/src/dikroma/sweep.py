"""Family-scale verification of the Nordhaus-Gaddum bounds and related identities.

A family is either every labeled digraph on n <= 5 vertices or a seeded
sample of G(n, p) digraphs. For each member D the sweep computes dc, dG and
dac of D and of its complement, evaluates the requested checks and keeps
violations (expected: none) and the largest observed parameter sums.

Work is split into index chunks. Each chunk produces a partial
:class:`SweepReport`; merging is associative and keeps the smallest index on
ties, so the result does not depend on how the range was split.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from dikroma import _backend
from dikroma.coloring import PairMode
from dikroma.digraph import (
    ENUMERATION_CAP,
    Digraph,
    complement,
    complement_index,
    digraph_at,
    family_size,
    random_digraph,
)
from dikroma.errors import ContractError, DikromaError
from dikroma.formats import to_digraph6
from dikroma.solvers import (
    DCO_CAP,
    EXACT_CAP,
    ParameterReport,
    complete_interpolation_witnesses,
    greedy_interpolation_witnesses,
    parameter_report,
)

DEFAULT_PS = (0.1, 0.3, 0.5, 0.7, 0.9)
DEFAULT_HEAVY_SAMPLE = 1000
SAMPLED_CAP = EXACT_CAP


class SweepRefused(DikromaError):
    """The family/check combination is infeasible; raised before any work."""


# -- bounds ---------------------------------------------------------------------

def ng_bound_dc(n: int) -> int:
    return n + 1


def ng_bound_dac(n: int) -> int:
    return -(-4 * n // 3)


def ng_bound_dG(n: int) -> int:
    """Upper bound on dG(D) + dG(D^c); the n <= 4 row wins where rows overlap."""
    if n < 1:
        raise ContractError("n must be positive")
    if n <= 4:
        return n + 1
    if n <= 8:
        return n + 2
    if n == 9:
        return 12
    return (5 * n + 2) // 4


def prior_bound_dc(n: int) -> int:
    """Earlier, weaker bound on dc(D) + dc(D^c)."""
    return -(-4 * n // 3)


def prior_bound_dac(n: int) -> int:
    """Earlier, weaker bound on dac(D) + dac(D^c)."""
    return -(-3 * n // 2)


@dataclass(frozen=True)
class BoundSpec:
    id: str
    bound: Callable[[int], int] | None = None
    heavy: bool = False


BOUNDS: dict[str, BoundSpec] = {
    spec.id: spec for spec in (
        BoundSpec("ng-dc", ng_bound_dc),
        BoundSpec("ng-dac", ng_bound_dac),
        BoundSpec("ng-dg", ng_bound_dG),
        BoundSpec("chain"),
        BoundSpec("degree-bound"),
        BoundSpec("dg-equals-dco", heavy=True),
        BoundSpec("greedy-interpolation"),
        BoundSpec("complete-interpolation", heavy=True),
    )
}
CHECK_IDS = tuple(BOUNDS)
NG_CHECKS = {"ng-dc": "dc", "ng-dac": "dac", "ng-dg": "dg"}


def parse_checks(spec: str | Iterable[str]) -> tuple[str, ...]:
    """``"all"``, a comma list, or an iterable of check ids; returns them in
    canonical order."""
    if isinstance(spec, str):
        names = CHECK_IDS if spec == "all" else [s.strip() for s in spec.split(",") if s.strip()]
    else:
        names = list(spec)
    unknown = [c for c in names if c not in BOUNDS]
    if unknown:
        raise SweepRefused(f"unknown checks {unknown}; known: {', '.join(CHECK_IDS)}")
    if not names:
        raise SweepRefused("no checks selected")
    return tuple(c for c in CHECK_IDS if c in names)


# -- families -------------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    kind: str
    n: int
    count: int = 0
    ps: tuple[float, ...] = DEFAULT_PS
    seed: int = 0

    @classmethod
    def exhaustive(cls, n: int) -> "Family":
        return cls("exhaustive", n)

    @classmethod
    def sampled(cls, n: int, count: int, ps: Iterable[float] = DEFAULT_PS,
                seed: int = 0) -> "Family":
        return cls("sampled", n, count, tuple(float(p) for p in ps), seed)

    @property
    def size(self) -> int:
        return family_size(self.n) if self.kind == "exhaustive" else self.count

    def sample_params(self, i: int) -> tuple[float, int]:
        """Sample i belongs to block p (count split evenly, remainder first)."""
        per, extra = divmod(self.count, len(self.ps))
        for k, p in enumerate(self.ps):
            block = per + (1 if k < extra else 0)
            if i < block:
                return p, i
            i -= block
        raise IndexError("sample index outside the family")

    def digraph(self, i: int) -> Digraph:
        if self.kind == "exhaustive":
            return digraph_at(self.n, i)
        p, j = self.sample_params(i)
        return random_digraph(self.n, p, f"{self.seed}:{self.n}:{p!r}:{j}")

    def describe(self) -> dict[str, Any]:
        if self.kind == "exhaustive":
            return {"kind": "exhaustive", "n": self.n, "size": self.size}
        return {"kind": "sampled", "n": self.n, "count": self.count,
                "ps": list(self.ps), "seed": self.seed}


# -- report ---------------------------------------------------------------------

@dataclass
class CheckStats:
    evaluated: int = 0
    passed: int = 0


@dataclass
class Violation:
    index: int
    check: str
    values: dict[str, Any]
    digraph6: str = ""


@dataclass
class Extremal:
    """Largest observed sum, its smallest-index maximizer and how many
    digraphs attain it."""

    check: str
    bound: int
    max_sum: int
    index: int
    attained: int = 0
    digraph6: str = ""


@dataclass
class SweepReport:
    family: dict[str, Any]
    checks: list[str]
    total: int = 0
    heavy: int = 0
    stats: dict[str, CheckStats] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    extremal: dict[str, Extremal] = field(default_factory=dict)
    rows: list[dict[str, Any]] | None = None
    elapsed_s: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "SweepReport") -> "SweepReport":
        out = SweepReport(self.family, self.checks,
                          elapsed_s=max(self.elapsed_s, other.elapsed_s))
        out.total = self.total + other.total
        out.heavy = self.heavy + other.heavy
        for c in self.checks:
            a = self.stats.get(c, CheckStats())
            b = other.stats.get(c, CheckStats())
            out.stats[c] = CheckStats(a.evaluated + b.evaluated, a.passed + b.passed)
        out.violations = sorted(self.violations + other.violations,
                                key=lambda v: (v.index, CHECK_IDS.index(v.check)))
        for c in set(self.extremal) | set(other.extremal):
            a, b = self.extremal.get(c), other.extremal.get(c)
            if a is None or b is None:
                out.extremal[c] = a or b
                continue
            best = min((a, b), key=lambda e: (-e.max_sum, e.index))
            attained = (a.attained if a.max_sum == best.max_sum else 0) + \
                       (b.attained if b.max_sum == best.max_sum else 0)
            out.extremal[c] = Extremal(c, best.bound, best.max_sum, best.index,
                                       attained, best.digraph6)
        if self.rows is not None or other.rows is not None:
            out.rows = sorted((self.rows or []) + (other.rows or []),
                              key=lambda r: r["index"])
        return out

    def to_json(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "checks": self.checks,
            "total": self.total,
            "heavy_checked": self.heavy,
            "passed": self.passed,
            "stats": {c: {"evaluated": s.evaluated, "passed": s.passed}
                      for c, s in self.stats.items()},
            "violations": [
                {"index": v.index, "digraph6": v.digraph6, "check": v.check,
                 "values": v.values} for v in self.violations],
            "extremal": {
                c: {"bound": e.bound, "max_sum": e.max_sum, "attained": e.attained,
                    "index": e.index, "digraph6": e.digraph6}
                for c, e in sorted(self.extremal.items())},
            "elapsed_s": round(self.elapsed_s, 3),
        }


CSV_COLUMNS = ("digraph6", "n", "m", "dc", "dc_c", "dac", "dac_c", "dg", "dg_c",
               "dco", "checks_passed", "violated_checks")


# -- per-digraph evaluation -------------------------------------------------------

def _interval_mask(lo: int, hi: int) -> int:
    return ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)


@dataclass(frozen=True)
class _Job:
    family: Family
    checks: tuple[str, ...]
    mode: str
    start: int
    stop: int
    paired: bool
    heavy: frozenset[int]
    keep_rows: bool
    backend: str


def _columns(cols) -> list[tuple]:
    return list(zip(*cols))


def _run_job(job: _Job) -> SweepReport:
    if _backend.BACKEND != job.backend:
        _backend.set_backend(job.backend)
    fam, n = job.family, job.family.n
    ordered = PairMode(job.mode) is PairMode.ORDERED
    kern = _backend.kernels
    report = SweepReport(fam.describe(), list(job.checks),
                         stats={c: CheckStats() for c in job.checks},
                         rows=[] if job.keep_rows else None)
    lo, hi = job.start, job.stop

    if fam.kind == "exhaustive" and job.paired:
        # representatives i <= complement(i); each digraph is solved once
        size = fam.size
        mine = _columns(kern.exhaustive_params(n, lo, hi, ordered))
        theirs = _columns(kern.exhaustive_params(n, size - hi, size - lo, ordered))[::-1]
        for i, a, b in zip(range(lo, hi), mine, theirs):
            _record(report, job, i, None, a, b)
            j = complement_index(n, i)
            if j != i:
                _record(report, job, j, None, b, a)
    elif fam.kind == "exhaustive":
        mine = _columns(kern.exhaustive_params(n, lo, hi, ordered))
        theirs = _columns(kern.batch_params(
            n, [complement(digraph_at(n, i)).out for i in range(lo, hi)], ordered))
        for i, a, b in zip(range(lo, hi), mine, theirs):
            _record(report, job, i, None, a, b)
    else:
        ds = [fam.digraph(i) for i in range(lo, hi)]
        mine = _columns(kern.batch_params(n, [d.out for d in ds], ordered))
        theirs = _columns(kern.batch_params(n, [complement(d).out for d in ds], ordered))
        for i, d, a, b in zip(range(lo, hi), ds, mine, theirs):
            _record(report, job, i, d, a, b)
    if report.rows is not None:
        report.rows.sort(key=lambda r: r["index"])
    report.violations.sort(key=lambda v: (v.index, CHECK_IDS.index(v.check)))
    return report


def _record(report: SweepReport, job: _Job, index: int, d: Digraph | None,
            mine: tuple, theirs: tuple) -> None:
    fam = job.family
    n = fam.n
    dc, dg, dac, spec, cap = mine
    dc_c, dg_c, dac_c, spec_c, cap_c = theirs
    values = {"dc": dc, "dc_c": dc_c, "dg": dg, "dg_c": dg_c, "dac": dac, "dac_c": dac_c}
    heavy = index in job.heavy
    if d is None and (heavy or report.rows is not None):
        d = fam.digraph(index)
    report.total += 1
    report.heavy += heavy
    failed = []
    passed = 0

    for check in job.checks:
        if check in NG_CHECKS:
            key = NG_CHECKS[check]
            total = values[key] + values[key + "_c"]
            ok = total <= BOUNDS[check].bound(n)
            ext = report.extremal.get(check)
            if ext is None or total > ext.max_sum:
                report.extremal[check] = Extremal(check, BOUNDS[check].bound(n), total,
                                                  index, 1)
            elif total == ext.max_sum:
                ext.attained += 1
                ext.index = min(ext.index, index)
        elif check == "chain":
            ok = dc <= dg <= dac and dc_c <= dg_c <= dac_c
        elif check == "degree-bound":
            ok = dg <= cap and dg_c <= cap_c
        elif check == "greedy-interpolation":
            ok = spec == _interval_mask(dc, dg) and spec_c == _interval_mask(dc_c, dg_c)
            if ok and heavy:
                ok = greedy_interpolation_witnesses(d, deadline=0.0).complete
        elif check == "complete-interpolation":
            if not heavy:
                continue
            ok = complete_interpolation_witnesses(d, job.mode, deadline=0.0).complete
        elif check == "dg-equals-dco":
            if not heavy:
                continue
            values["dco"] = _backend.kernels.diochromatic(n, d.out, 0.0)
            ok = values["dco"] == dg
        else:  # pragma: no cover - parse_checks rejects unknown ids
            raise SweepRefused(check)
        st = report.stats[check]
        st.evaluated += 1
        if ok:
            st.passed += 1
            passed += 1
        else:
            failed.append(check)
            g6 = to_digraph6(d if d is not None else fam.digraph(index))
            report.violations.append(Violation(index, check, dict(values), g6))

    if report.rows is not None:
        report.rows.append({
            "index": index, "digraph6": to_digraph6(d), "n": n, "m": d.m,
            "dc": dc, "dc_c": dc_c, "dac": dac, "dac_c": dac_c, "dg": dg, "dg_c": dg_c,
            "dco": values.get("dco", ""),
            "checks_passed": passed, "violated_checks": ";".join(failed),
        })


# -- driver -----------------------------------------------------------------------

def _resolve_heavy(family: Family, checks: tuple[str, ...], heavy_sample: int | None,
                   seed: int) -> frozenset[int]:
    wants_heavy = any(c in ("dg-equals-dco", "greedy-interpolation",
                            "complete-interpolation") for c in checks)
    if not wants_heavy:
        return frozenset()
    size = family.size
    if heavy_sample is None:
        if family.kind == "exhaustive" and family.n <= 4:
            return frozenset(range(size))
        heavy_sample = DEFAULT_HEAVY_SAMPLE
    if family.kind == "exhaustive" and family.n > 4 and heavy_sample >= size:
        raise SweepRefused(
            f"heavy checks on all {size} digraphs of n={family.n} are infeasible; "
            "use a subsample")
    if heavy_sample >= size:
        return frozenset(range(size))
    rng = random.Random(f"{seed}:heavy:{family.kind}:{family.n}")
    return frozenset(rng.sample(range(size), heavy_sample))


def check_feasible(family: Family, checks: tuple[str, ...]) -> None:
    if family.kind == "exhaustive":
        if not 1 <= family.n <= ENUMERATION_CAP:
            raise SweepRefused(
                f"exhaustive sweeps are limited to 1 <= n <= {ENUMERATION_CAP}")
    elif family.kind == "sampled":
        if not 1 <= family.n <= SAMPLED_CAP:
            raise SweepRefused(f"sampled sweeps are limited to 1 <= n <= {SAMPLED_CAP}")
        if family.count < 1:
            raise SweepRefused("sample count must be positive")
        if not family.ps or any(not 0 <= p <= 1 for p in family.ps):
            raise SweepRefused("arc probabilities must lie in [0, 1]")
    else:
        raise SweepRefused(f"unknown family kind {family.kind!r}")
    if "dg-equals-dco" in checks and family.n > DCO_CAP:
        raise SweepRefused(f"dg-equals-dco needs n <= {DCO_CAP}")


def run_sweep(family: Family, checks: str | Iterable[str] = "all",
              mode: PairMode | str = PairMode.ORDERED, *,
              heavy_sample: int | None = None, seed: int = 0,
              pair_complements: bool = True, workers: int = 1,
              chunk_size: int | None = None, keep_rows: bool = False) -> SweepReport:
    """Evaluate ``checks`` on every digraph of ``family``.

    Heavy checks (dG = dc-o, interpolation witnesses) run on every digraph
    for exhaustive n <= 4 and on a seeded subsample of ``heavy_sample``
    digraphs otherwise; the greedy-interpolation spectrum test runs on all.
    """
    checks = parse_checks(checks)
    mode = PairMode(mode)
    check_feasible(family, checks)
    heavy = _resolve_heavy(family, checks, heavy_sample, seed)
    if workers < 1:
        raise SweepRefused("workers must be at least 1")

    started = time.perf_counter()
    size = family.size
    paired = pair_complements and family.kind == "exhaustive"
    span = (size + 1) // 2 if paired else size
    if chunk_size is None:
        chunk_size = max(1, min(1 << 14, -(-span // (4 * workers))))
    bounds = [(a, min(a + chunk_size, span)) for a in range(0, span, chunk_size)]
    jobs = [_Job(family, checks, mode.value, a, b, paired, heavy, keep_rows,
                 _backend.BACKEND) for a, b in bounds]

    if workers == 1:
        parts = [_run_job(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_job, jobs))

    report = SweepReport(family.describe(), list(checks),
                         stats={c: CheckStats() for c in checks},
                         rows=[] if keep_rows else None)
    for part in parts:
        report = report.merge(part)
    for ext in report.extremal.values():
        ext.digraph6 = to_digraph6(family.digraph(ext.index))
    report.elapsed_s = time.perf_counter() - started
    return report


# -- extremal search ----------------------------------------------------------------

@dataclass
class ExtremalWitness:
    index: int
    digraph: Digraph
    report: ParameterReport
    complement_report: ParameterReport


@dataclass
class ExtremalResult:
    check: str
    n: int
    bound: int
    max_sum: int
    indices: list[int]
    witnesses: list[ExtremalWitness]
    family: dict[str, Any]

    def to_json(self) -> dict[str, Any]:
        key = NG_CHECKS[self.check]
        return {
            "check": self.check,
            "n": self.n,
            "bound": self.bound,
            "max_sum": self.max_sum,
            "attained_by": len(self.indices),
            "family": self.family,
            "witnesses": [
                {
                    "index": w.index,
                    "digraph6": to_digraph6(w.digraph),
                    "sum": getattr(w.report, key) + getattr(w.complement_report, key),
                    "report": w.report.to_json(),
                    "complement_report": w.complement_report.to_json(),
                }
                for w in self.witnesses
            ],
        }


def find_extremal(n: int, check: str, *, limit: int = 3,
                  mode: PairMode | str = PairMode.ORDERED,
                  samples: int = 2000, seed: int = 0) -> ExtremalResult:
    """Digraphs maximizing param(D) + param(D^c) for an ng-* check.

    Exhaustive for n <= 5, otherwise over a seeded sample. Witnesses are
    listed densest first (most arcs, then smallest index) and come with full
    parameter reports for D and its complement.
    """
    if check not in NG_CHECKS:
        raise SweepRefused(f"extremal search needs one of {sorted(NG_CHECKS)}")
    mode = PairMode(mode)
    ordered = mode is PairMode.ORDERED
    family = (Family.exhaustive(n) if 1 <= n <= ENUMERATION_CAP
              else Family.sampled(n, samples, seed=seed))
    check_feasible(family, (check,))
    col = {"dc": 0, "dg": 1, "dac": 2}[NG_CHECKS[check]]
    size = family.size
    kern = _backend.kernels
    if family.kind == "exhaustive":
        vals = kern.exhaustive_params(n, 0, size, ordered)[col]
        sums = [vals[i] + vals[complement_index(n, i)] for i in range(size)]
    else:
        ds = [family.digraph(i) for i in range(size)]
        a = kern.batch_params(n, [list(d.out) for d in ds], ordered)[col]
        b = kern.batch_params(n, [list(complement(d).out) for d in ds], ordered)[col]
        sums = [x + y for x, y in zip(a, b)]
    best = max(sums)
    indices = [i for i, s in enumerate(sums) if s == best]
    ranked = sorted(indices, key=lambda i: (-family.digraph(i).m, i))[:limit]
    witnesses = []
    for i in ranked:
        d = family.digraph(i)
        witnesses.append(ExtremalWitness(i, d, parameter_report(d, mode, deadline=0.0),
                                         parameter_report(complement(d), mode,
                                                          deadline=0.0)))
    return ExtremalResult(check, n, BOUNDS[check].bound(n), best, indices, witnesses,
                          family.describe())
