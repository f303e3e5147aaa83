"""
Independent verification of the cohomology engine.

Every check compares exact VirtualModules in the irreducible basis. The Euler identity
uses additivity of Euler characteristics along the weight filtration of M_{alpha,r}(lambda):
sum_i (-1)^i [H^i(M)] must equal the sum of chi(lambda - t alpha) over t = 0..r.
"""

import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np

from .batch import ordered_map
from .bott import euler_characteristic, euler_sum, serre_duality_check
from .demazure import (
    C4_DEGREE_SHIFT,
    GeneralizedDemazureModule,
    case_classify,
    cohomology,
    cohomology_rank1,
    cohomology_via_tensor_identity,
)
from .rootsys import RootSystem, Weight, build_root_system, simple_root_weight

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"

# (type, radius, r_max) for the agreement sweeps and (type, radius) for duality sweeps
SELFTEST_AGREEMENT = [("A1", 6, 5), ("A2", 4, 4), ("B2", 3, 3), ("G2", 3, 3)]
SELFTEST_DUALITY = [("A1", 6), ("A2", 4), ("B2", 4)]


@dataclass(frozen=True)
class CheckReport:
    check: str
    query: Dict[str, Any]
    verdict: str
    lhs: str
    rhs: str
    case: str
    elapsed: float = field(default=0.0, compare=False, repr=False)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def sort_key(self):
        q = self.query
        return (self.check, q.get("type", ""), tuple(q.get("lambda", ())), q.get("alpha") or 0, q.get("r") or 0)


@dataclass(frozen=True)
class SweepSummary:
    name: str
    root_system: str
    checks: int
    failures: Tuple[CheckReport, ...]
    elapsed: float = field(default=0.0, compare=False, repr=False)

    @property
    def passed(self) -> int:
        return self.checks - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[CheckReport]:
        return self.failures[0] if self.failures else None


def query_echo(rs: RootSystem, lam: Weight, alpha_index: Optional[int] = None, r: Optional[int] = None) -> Dict[str, Any]:
    echo: Dict[str, Any] = {"type": rs.cartan_type.series, "rank": rs.rank, "lambda": lam.to_list()}
    if alpha_index is not None:
        echo["alpha"] = alpha_index
    if r is not None:
        echo["r"] = r
    return echo


def case_code(rs: RootSystem, alpha_index: int, r: int, lam: Weight) -> str:
    if r == 0:
        return "R0"
    return case_classify(lam[rs.check_index(alpha_index)], r).code


def _report(check, rs, lam, alpha_index, r, lhs, rhs, started) -> CheckReport:
    return CheckReport(
        check=check,
        query=query_echo(rs, lam, alpha_index, r),
        verdict=PASS if lhs == rhs else FAIL,
        lhs=str(lhs),
        rhs=str(rhs),
        case=case_code(rs, alpha_index, r, lam),
        elapsed=time.perf_counter() - started,
    )


def euler_identity_check(
    rs: RootSystem, alpha_index: int, r: int, lam: Weight, *, c4_shift: int = C4_DEGREE_SHIFT
) -> CheckReport:
    """Alternating sum of computed H^i(M) against the sum of chi over the weight string."""
    started = time.perf_counter()
    module = GeneralizedDemazureModule(rs, alpha_index, r, lam)
    lhs = cohomology(rs, alpha_index, r, lam, checked=False, c4_shift=c4_shift).euler_characteristic()
    rhs = euler_sum(rs, module.weights())
    return _report("euler-identity", rs, lam, alpha_index, r, lhs, rhs, started)


def exact_sequence_check(rs: RootSystem, alpha_index: int, r: int, lam: Weight) -> CheckReport:
    """chi(M_{alpha,r}(lambda)) = chi(lambda) + chi(M_{alpha,r-1}(lambda - alpha)), r >= 1."""
    started = time.perf_counter()
    alpha = simple_root_weight(rs, alpha_index)
    lhs = cohomology(rs, alpha_index, r, lam, checked=False).euler_characteristic()
    if r == 0:
        rhs = euler_characteristic(rs, lam)
    else:
        sub = cohomology(rs, alpha_index, r - 1, lam - alpha, checked=False)
        rhs = euler_characteristic(rs, lam) + sub.euler_characteristic()
    return _report("exact-sequence", rs, lam, alpha_index, r, lhs, rhs, started)


def proof_route_check(rs: RootSystem, alpha_index: int, r: int, lam: Weight) -> CheckReport:
    started = time.perf_counter()
    lhs = cohomology(rs, alpha_index, r, lam, checked=False)
    rhs = cohomology_via_tensor_identity(rs, alpha_index, r, lam)
    return _report("tensor-identity", rs, lam, alpha_index, r, lhs, rhs, started)


def rank1_agreement_check(rs: RootSystem, alpha_index: int, lam: Weight) -> CheckReport:
    started = time.perf_counter()
    lhs = cohomology(rs, alpha_index, 1, lam, checked=False)
    rhs = cohomology_rank1(rs, alpha_index, lam)
    return _report("rank1-agreement", rs, lam, alpha_index, 1, lhs, rhs, started)


def duality_check(rs: RootSystem, lam: Weight) -> CheckReport:
    started = time.perf_counter()
    ok = serre_duality_check(rs, lam)
    return CheckReport(
        check="serre-duality",
        query=query_echo(rs, lam),
        verdict=PASS if ok else FAIL,
        lhs=str(lam),
        rhs=str(-lam - Weight((2,) * rs.rank)),
        case="",
        elapsed=time.perf_counter() - started,
    )


def box_points(rs: RootSystem, radius: int, samples: Optional[int] = None, seed: int = 0) -> List[Weight]:
    """
    Weights with every coordinate in [-radius, radius], lexicographic.

    With samples set, draws that many points from a seeded generator instead.
    """
    if samples is None:
        return [Weight(p) for p in itertools.product(range(-radius, radius + 1), repeat=rs.rank)]
    rng = np.random.default_rng(seed)
    draws = rng.integers(-radius, radius + 1, size=(samples, rs.rank))
    return [Weight(tuple(int(x) for x in row)) for row in draws]


def _agreement_at(args) -> Tuple[int, List[CheckReport]]:
    rs, lam, r_max = args
    reports = []
    for alpha_index in range(1, rs.rank + 1):
        reports.append(rank1_agreement_check(rs, alpha_index, lam))
        for r in range(r_max + 1):
            reports.append(euler_identity_check(rs, alpha_index, r, lam))
            reports.append(exact_sequence_check(rs, alpha_index, r, lam))
            reports.append(proof_route_check(rs, alpha_index, r, lam))
    return len(reports), [rep for rep in reports if not rep.passed]


def _summarize(name: str, rs: RootSystem, parts: Iterable[Tuple[int, List[CheckReport]]], started: float) -> SweepSummary:
    checks = 0
    failures: List[CheckReport] = []
    for count, failed in parts:
        checks += count
        failures.extend(failed)
    failures.sort(key=CheckReport.sort_key)
    elapsed = time.perf_counter() - started
    summary = SweepSummary(name, str(rs), checks, tuple(failures), elapsed)
    logger.info(f"{name} on {rs}: {summary.passed}/{checks} passed, completed in {elapsed:.2f} seconds")
    return summary


def theorem_agreement_sweep(
    rs: RootSystem,
    box_radius: int,
    r_max: int,
    *,
    samples: Optional[int] = None,
    seed: int = 0,
    workers: int = 1,
) -> SweepSummary:
    """
    Exhaustive (or sampled) sweep over a coordinate box.

    Per weight and simple root: r = 1 agreement of the two theorems, and for every
    r <= r_max the Euler identity, the exact-sequence step and the tensor-identity route.
    """
    started = time.perf_counter()
    points = box_points(rs, box_radius, samples, seed)
    parts = ordered_map(_agreement_at, [(rs, lam, r_max) for lam in points], workers)
    return _summarize("theorem-agreement", rs, parts, started)


def duality_sweep(rs: RootSystem, box_radius: int, *, workers: int = 1) -> SweepSummary:
    started = time.perf_counter()

    def at(lam):
        report = duality_check(rs, lam)
        return 1, [] if report.passed else [report]

    parts = ordered_map(at, box_points(rs, box_radius), workers)
    return _summarize("serre-duality", rs, parts, started)


def selftest(workers: int = 1) -> List[SweepSummary]:
    summaries = []
    for name, radius, r_max in SELFTEST_AGREEMENT:
        summaries.append(theorem_agreement_sweep(build_root_system(name), radius, r_max, workers=workers))
    for name, radius in SELFTEST_DUALITY:
        summaries.append(duality_sweep(build_root_system(name), radius, workers=workers))
    return summaries
