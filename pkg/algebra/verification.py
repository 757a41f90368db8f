"""
Closed-form versus oracle verification sweeps.

Each instance yields a RunReport holding one ClaimResult per checked
statement. Failures are recorded and the sweep moves on; nothing here raises
for a single bad instance. A claim whose computation ran over budget leaves
its instance incomplete, which is neither a match nor a mismatch.
"""
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple
import logging
import time

from .closed_forms import (
    betti_top, check_bounds, depth, graded_counts, homology_cycle_complement,
    homology_E_runs, homology_single_run, pd_reg, pd_reg_line,
)
from .errors import BettiLabError, ResourceLimitExceeded
from .hochster_oracle import OracleConfig, betti_table_facet, betti_table_sr, ideal_pd_reg
from .homology import FieldSpec, reduced_homology_dims
from .path_ideals import (
    CycleParams, build_cycle_complex, build_E_complex, build_line_complex,
    facet_ideal, is_canonical_triple, make_params,
)
from .simplicial_core import complement_complex
from .tables import BettiTable

logger = logging.getLogger(__name__)

MATCH = 'match'
MISMATCH = 'mismatch'
SKIPPED = 'skipped'
ERROR = 'error'
OVER_BUDGET = 'over_budget'

INCOMPLETE = 'incomplete'


@dataclass
class ClaimResult:
    name: str
    status: str
    detail: str = ''

    def as_dict(self) -> Dict:
        return {'name': self.name, 'status': self.status, 'detail': self.detail}


@dataclass
class RunReport:
    section: str
    label: str
    params: Dict
    closed: Dict = field(default_factory=dict)
    oracle: Dict = field(default_factory=dict)
    claims: List[ClaimResult] = field(default_factory=list)
    duration: float = 0.0

    @property
    def status(self) -> str:
        if self.failures():
            return MISMATCH
        if self.unchecked():
            return INCOMPLETE
        return MATCH

    @property
    def matched(self) -> bool:
        return self.status == MATCH

    def failures(self) -> List[ClaimResult]:
        return [c for c in self.claims if c.status in (MISMATCH, ERROR)]

    def unchecked(self) -> List[ClaimResult]:
        return [c for c in self.claims if c.status == OVER_BUDGET]

    def claim(self, name: str) -> Optional[ClaimResult]:
        return next((c for c in self.claims if c.name == name), None)

    def as_dict(self) -> Dict:
        return {
            'section': self.section,
            'label': self.label,
            'params': self.params,
            'closed': self.closed,
            'oracle': self.oracle,
            'claims': [c.as_dict() for c in self.claims],
            'status': self.status,
            'matched': self.matched,
            'duration': round(self.duration, 6),
        }


@dataclass
class SweepSummary:
    min_n: int
    max_n: int
    fields: List[int]
    reports: List[RunReport] = field(default_factory=list)
    skipped_invalid: int = 0
    duration: float = 0.0

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def matched(self) -> int:
        return sum(1 for r in self.reports if r.status == MATCH)

    @property
    def mismatched(self) -> int:
        return sum(1 for r in self.reports if r.status == MISMATCH)

    @property
    def incomplete(self) -> int:
        return sum(1 for r in self.reports if r.status == INCOMPLETE)

    @property
    def passed(self) -> bool:
        return self.matched == self.total

    @property
    def status(self) -> str:
        if self.mismatched:
            return 'failed'
        if self.incomplete:
            return INCOMPLETE
        return 'passed'

    def failures(self) -> List[RunReport]:
        return [r for r in self.reports if r.status == MISMATCH]

    def incomplete_reports(self) -> List[RunReport]:
        return [r for r in self.reports if r.status == INCOMPLETE]

    def counts_by_section(self) -> Dict[str, Dict[str, int]]:
        counts: Dict[str, Dict[str, int]] = {}
        for report in self.reports:
            bucket = counts.setdefault(report.section, {'total': 0, 'matched': 0, 'incomplete': 0})
            bucket['total'] += 1
            bucket['matched'] += int(report.matched)
            bucket['incomplete'] += int(report.status == INCOMPLETE)
        return counts

    def as_dict(self, include_reports: bool = False) -> Dict:
        payload = {
            'min_n': self.min_n,
            'max_n': self.max_n,
            'fields': self.fields,
            'total': self.total,
            'matched': self.matched,
            'mismatched': self.mismatched,
            'incomplete': self.incomplete,
            'skipped_invalid': self.skipped_invalid,
            'duration': round(self.duration, 6),
            'passed': self.passed,
            'status': self.status,
            'sections': self.counts_by_section(),
            'failures': [{'label': r.label, 'claims': [c.as_dict() for c in r.failures()]}
                         for r in self.failures()],
            'over_budget': [{'label': r.label, 'claims': [c.as_dict() for c in r.unchecked()]}
                            for r in self.incomplete_reports()],
        }
        if include_reports:
            payload['reports'] = [r.as_dict() for r in self.reports]
        return payload


def _claim(name: str, check: Callable[[], Tuple[bool, str]]) -> ClaimResult:
    try:
        ok, detail = check()
    except ResourceLimitExceeded as exc:
        return ClaimResult(name, OVER_BUDGET, str(exc))
    except BettiLabError as exc:
        return ClaimResult(name, ERROR, str(exc))
    return ClaimResult(name, MATCH if ok else MISMATCH, detail)


def _describe(diffs: List[Dict]) -> str:
    return '; '.join(f"β_{{{d['i']},{d['j']}}}: {d['left']} vs {d['right']}" for d in diffs[:5])


# =========================
# PARAMETER SPACE
# =========================
def valid_triples(min_n: int, max_n: int) -> Tuple[List[Tuple[int, int, int]], int]:
    """Canonical (n, m, l) with min_n <= n <= max_n, plus the count of rejected raw triples."""
    triples, skipped = [], 0
    for n in range(max(min_n, 2), max_n + 1):
        for m in range(2, n + 1):
            for l in range(1, n):
                if is_canonical_triple(n, m, l):
                    triples.append((n, m, l))
                else:
                    skipped += 1
    return triples, skipped


# =========================
# CYCLE INSTANCES
# =========================
def verify_instance(params: CycleParams, fields: Optional[Sequence[FieldSpec]] = None,
                    cfg: Optional[OracleConfig] = None) -> RunReport:
    cfg = cfg or OracleConfig()
    fields = list(fields) if fields else [cfg.field]
    started = time.perf_counter()
    n = params.n
    delta = build_cycle_complex(params)

    pd, reg = pd_reg(params)
    report = RunReport(section='cycle', label=params.label, params=params.as_dict())
    report.closed = {
        'pd': pd,
        'reg': reg,
        'depth': depth(params),
        'top': betti_top(params).records(),
        'complement_homology': homology_cycle_complement(params).as_dict(),
    }

    tables: Dict[int, BettiTable] = {}
    for field_spec in fields:
        try:
            tables[field_spec.code] = betti_table_facet(delta, cfg.with_field(field_spec))
        except ResourceLimitExceeded as exc:
            report.claims.append(ClaimResult('oracle', OVER_BUDGET, f"{field_spec}: {exc}"))
            report.duration = time.perf_counter() - started
            logger.warning("%s: oracle over budget: %s", params.label, exc)
            return report
    oracle = tables[fields[0].code]
    report.oracle = {'pd': oracle.pd, 'reg': oracle.reg, 'table': oracle.records()}

    def top_betti():
        diffs = betti_top(params).differences(oracle.restricted([n]))
        return not diffs, _describe(diffs)

    def pd_reg_claim():
        return (oracle.pd, oracle.reg) == (pd, reg), f"oracle ({oracle.pd}, {oracle.reg}) vs closed ({pd}, {reg})"

    def depth_claim():
        return n - oracle.pd == oracle.reg == depth(params), f"n - pd = {n - oracle.pd}, reg = {oracle.reg}"

    def complement_claim():
        complement = complement_complex(delta, delta.vertices)
        dims = reduced_homology_dims(complement, fields[0], cfg.face_budget, cfg.method)
        expected = homology_cycle_complement(params)
        return expected.matches(dims), f"oracle {dims.nonzero()} vs closed {expected.as_dims()}"

    def counting_claim():
        counted = graded_counts(params, cfg.facet_subset_budget)
        diffs = counted.differences(oracle.restricted(range(n)))
        return not diffs, _describe(diffs)

    def bounds_claim():
        bounds = check_bounds(params, oracle)
        return bounds.ok, str(bounds.violation or bounds.reason or f"{bounds.checked} entries")

    sr_tables: Dict[int, BettiTable] = {}

    def double_oracle():
        ideal = facet_ideal(delta)
        for field_spec in fields:
            other = betti_table_sr(ideal, cfg.with_field(field_spec))
            sr_tables[field_spec.code] = other
            diffs = tables[field_spec.code].differences(other)
            if diffs:
                return False, f"{field_spec}: {_describe(diffs)}"
        return True, ''

    def field_independence():
        differing = []
        for kind, computed in (('facet', tables), ('sr', sr_tables)):
            if not computed:
                continue
            reference = next(iter(computed.values()))
            differing.extend(f"{kind} {FieldSpec(code)}" for code, t in computed.items() if t != reference)
        return not differing, ', '.join(differing)

    report.claims.append(_claim('top_betti', top_betti))
    report.claims.append(_claim('pd_reg', pd_reg_claim))
    report.claims.append(_claim('depth', depth_claim))
    report.claims.append(_claim('complement_homology', complement_claim))
    if params.t == 1:
        report.claims.append(ClaimResult('graded_counting', SKIPPED, 't = 1 is deferred to the oracle'))
        report.claims.append(ClaimResult('bounds', SKIPPED, 't = 1 lies outside the vanishing bounds'))
    else:
        report.claims.append(_claim('graded_counting', counting_claim))
        report.claims.append(_claim('bounds', bounds_claim))
    report.claims.append(_claim('double_oracle', double_oracle))
    if len(fields) > 1:
        report.claims.append(_claim('field_independence', field_independence))

    report.duration = time.perf_counter() - started
    if report.status == MISMATCH:
        logger.warning("%s: failed claims %s", params.label, [c.name for c in report.failures()])
    elif report.status == INCOMPLETE:
        logger.warning("%s: claims over budget %s", params.label, [c.name for c in report.unchecked()])
    else:
        logger.info("%s: all claims hold (%.3fs)", params.label, report.duration)
    return report


# =========================
# E-COMPLEXES
# =========================
def _partitions(total: int, largest: Optional[int] = None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def run_profiles(max_facets: int) -> List[Tuple[int, ...]]:
    """Every multiset of run lengths with total facet count <= max_facets."""
    return [p for total in range(1, max_facets + 1) for p in _partitions(total)]


def step_shapes(max_l: int, max_t: int) -> List[Tuple[int, int, int]]:
    """(m, l, t) with 1 <= l <= max_l, 1 <= t <= max_t and l < m."""
    shapes = []
    for l in range(1, max_l + 1):
        for t in range(1, max_t + 1):
            for s in range(l):
                m = t * l + s
                if m > l:
                    shapes.append((m, l, t))
    return shapes


def verify_e_complex(runs: Sequence[int], m: int, l: int, fields: Sequence[FieldSpec],
                     cfg: Optional[OracleConfig] = None) -> RunReport:
    cfg = cfg or OracleConfig()
    started = time.perf_counter()
    t = (m - m % l) // l
    expected = homology_E_runs(runs, t)
    report = RunReport(
        section='e_complex',
        label=f"E({','.join(map(str, runs))}) m={m} l={l}",
        params={'runs': list(runs), 'm': m, 'l': l, 't': t},
        closed=expected.as_dict(),
    )
    complex_ = build_E_complex(runs, m, l)
    observed = {}

    def homology_claim():
        for field_spec in fields:
            dims = reduced_homology_dims(complex_, field_spec, cfg.face_budget, cfg.method)
            observed[field_spec.code] = dims.nonzero()
            if not expected.matches(dims):
                return False, f"{field_spec}: oracle {dims.nonzero()} vs closed {expected.as_dims()}"
        return True, ''

    report.claims.append(_claim('e_homology', homology_claim))
    if len(runs) == 1 and t >= 2:
        p, d = divmod(runs[0], t + 1)

        def single_run_claim():
            single = homology_single_run(p, d, t)
            return single == expected, f"single run {single.as_dims()} vs profile {expected.as_dims()}"

        report.claims.append(_claim('single_run', single_run_claim))
    report.oracle = {str(code): {str(k): v for k, v in dims.items()} for code, dims in observed.items()}
    report.duration = time.perf_counter() - started
    return report


def verify_e_complexes(max_facets: int = 8, max_l: int = 3, max_t: int = 4,
                       fields: Optional[Sequence[FieldSpec]] = None,
                       cfg: Optional[OracleConfig] = None) -> List[RunReport]:
    cfg = cfg or OracleConfig()
    fields = list(fields) if fields else [cfg.field]
    reports = []
    for m, l, _ in step_shapes(max_l, max_t):
        for runs in run_profiles(max_facets):
            reports.append(verify_e_complex(runs, m, l, fields, cfg))
    logger.info("checked %d E-complexes", len(reports))
    return reports


# =========================
# LINE IDEALS
# =========================
def verify_line(n: int, m: int, fields: Sequence[FieldSpec],
                cfg: Optional[OracleConfig] = None) -> RunReport:
    cfg = cfg or OracleConfig()
    started = time.perf_counter()
    expected = pd_reg_line(n, m)
    report = RunReport(section='line', label=f"J_{m}(L_{n})", params={'n': n, 'm': m},
                       closed={'pd': expected[0], 'reg': expected[1]})
    delta = build_line_complex(n, m)
    tables: Dict[int, BettiTable] = {}

    def line_claim():
        for field_spec in fields:
            tables[field_spec.code] = betti_table_facet(delta, cfg.with_field(field_spec))
        observed = ideal_pd_reg(tables[fields[0].code])
        report.oracle = {'pd': observed[0], 'reg': observed[1]}
        return observed == expected, f"oracle {observed} vs closed {expected}"

    report.claims.append(_claim('line_pd_reg', line_claim))
    if len(fields) > 1 and len(tables) == len(fields):
        reference = tables[fields[0].code]
        same = all(t == reference for t in tables.values())
        report.claims.append(ClaimResult('field_independence', MATCH if same else MISMATCH))
    report.duration = time.perf_counter() - started
    return report


def verify_line_formulas(max_n: int = 10, fields: Optional[Sequence[FieldSpec]] = None,
                         cfg: Optional[OracleConfig] = None) -> List[RunReport]:
    cfg = cfg or OracleConfig()
    fields = list(fields) if fields else [cfg.field]
    return [verify_line(n, m, fields, cfg) for n in range(2, max_n + 1) for m in range(2, n + 1)]


# =========================
# FULL SWEEP
# =========================
def run_sweep(min_n: int = 4, max_n: int = 12, fields: Optional[Sequence[FieldSpec]] = None,
              cfg: Optional[OracleConfig] = None, max_facets: int = 8, line_max_n: int = 10,
              max_l: int = 3, max_t: int = 4) -> SweepSummary:
    """
    Cycle instances for min_n <= n <= max_n, then E-complexes (max_facets > 0)
    and line ideals (line_max_n > 0). With cfg.workers > 1 cycle instances
    run on a thread pool and each oracle call stays sequential.
    """
    cfg = cfg or OracleConfig()
    fields = list(fields) if fields else [cfg.field]
    started = time.perf_counter()
    triples, skipped = valid_triples(min_n, max_n)
    summary = SweepSummary(min_n=min_n, max_n=max_n, fields=[f.code for f in fields],
                           skipped_invalid=skipped)
    logger.info("sweeping %d cycle instances (%d raw triples skipped)", len(triples), skipped)

    if cfg.workers > 1:
        inner = replace(cfg, workers=1)
        ordered: Dict[int, RunReport] = {}
        with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
            futures = {
                executor.submit(verify_instance, make_params(*triple), fields, inner): number
                for number, triple in enumerate(triples)
            }
            for future in as_completed(futures):
                ordered[futures[future]] = future.result()
        summary.reports.extend(ordered[i] for i in sorted(ordered))
    else:
        summary.reports.extend(verify_instance(make_params(*triple), fields, cfg) for triple in triples)

    if max_facets > 0:
        summary.reports.extend(verify_e_complexes(max_facets, max_l, max_t, fields, cfg))
    if line_max_n > 0:
        summary.reports.extend(verify_line_formulas(line_max_n, fields, cfg))

    summary.duration = time.perf_counter() - started
    logger.info("sweep finished: %d/%d matched in %.2fs", summary.matched, summary.total, summary.duration)
    return summary
