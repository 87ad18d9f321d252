"""Exhaustive cross-checks over every pair tau <= w up to a given n."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .grassmannian import GrassmannianShape, Instance, all_cosets, bruhat_leq, build_instance
from .hilbert import hilbert_function, hilbert_function_oracle, hilbert_series, multiplicity_from_series
from .paths import enumerate_families, lgv_multiplicity
from .reflections import chain_condition, enumerate_s1s2_sets, s1_check_naive
from .shadow import ChainConditionViolation, family_point_multiset, light_and_shadow

log = logging.getLogger(__name__)


@dataclass
class VerifyConfig:
    max_n: int
    min_n: int = 1
    claim3_support: int = 4
    claim3_max_n: int = 5
    hilbert_max_m: int = 3
    hilbert_max_n: int = 5


@dataclass
class VerifyReport:
    instances: int = 0
    failures: list[tuple[Instance, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def all_instances(max_n: int, min_n: int = 1) -> Iterator[Instance]:
    """Every pair tau <= w with min_n <= n <= max_n and 0 <= d <= n,
    smallest n first."""
    for n in range(max(min_n, 1), max_n + 1):
        for d in range(n + 1):
            shape = GrassmannianShape(n, d)
            cosets = list(all_cosets(shape))
            for w in cosets:
                for tau in cosets:
                    if bruhat_leq(tau, w):
                        yield build_instance(w, tau)


def check_multiplicities(inst: Instance) -> list[str]:
    fams = enumerate_families(inst)
    det = lgv_multiplicity(inst)
    sets = enumerate_s1s2_sets(inst)
    errs = []
    if not (len(fams) == det == len(sets)):
        errs.append(f"engines disagree: paths={len(fams)} det={det} reflections={len(sets)}")
    if multiplicity_from_series(hilbert_series(inst)) != det:
        errs.append("numerator(1) != determinant")
    return errs


def check_round_trip(inst: Instance) -> list[str]:
    errs = []
    fams = enumerate_families(inst)
    point_sets = set()
    for f in fams:
        S = family_point_multiset(f)
        point_sets.add(S)
        try:
            g = light_and_shadow(S, inst)
        except ChainConditionViolation as exc:
            errs.append(f"light-and-shadow rejected a family point set: {exc}")
            continue
        if g != f:
            errs.append(f"round trip changed family {f.step_strings()} -> {g.step_strings()}")
    for S in enumerate_s1s2_sets(inst):
        if S not in point_sets:
            errs.append(f"maximal set {S} is not a family point set")
        elif family_point_multiset(light_and_shadow(S, inst)) != S:
            errs.append(f"maximal set {S} not reproduced by light-and-shadow")
    return errs


def check_chain_equivalence(inst: Instance, max_support: int) -> list[str]:
    rect = inst.rectangle()
    errs = []
    for k in range(min(max_support, len(rect)) + 1):
        for S in combinations(rect, k):
            if chain_condition(S, inst) != s1_check_naive(S, inst):
                errs.append(f"chain condition != naive check on {list(map(str, S))}")
    return errs


def check_hilbert(inst: Instance, max_m: int) -> list[str]:
    hs = hilbert_series(inst)
    errs = []
    for m in range(max_m + 1):
        a, b = hilbert_function(hs, m), hilbert_function_oracle(inst, m)
        if a != b:
            errs.append(f"hilbert function at m={m}: series {a} vs oracle {b}")
    return errs


def check_instance(inst: Instance, cfg: VerifyConfig) -> list[str]:
    errs = check_multiplicities(inst) + check_round_trip(inst)
    if inst.n <= cfg.claim3_max_n:
        errs += check_chain_equivalence(inst, cfg.claim3_support)
    if inst.n <= cfg.hilbert_max_n:
        errs += check_hilbert(inst, cfg.hilbert_max_m)
    return errs


def run_verification(cfg: VerifyConfig, stop_at_first: bool = True) -> VerifyReport:
    report = VerifyReport()
    for inst in all_instances(cfg.max_n, cfg.min_n):
        report.instances += 1
        for msg in check_instance(inst, cfg):
            log.error("%s: %s", inst, msg)
            report.failures.append((inst, msg))
        if report.failures and stop_at_first:
            break
    return report
