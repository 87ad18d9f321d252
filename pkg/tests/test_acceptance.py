"""Exit criteria.  Each test is one criterion; the terminal summary prints a
PASS/FAIL line per criterion (see conftest.py)."""

import time
from itertools import combinations

from grassmult import (
    PathFamily,
    ReflectionMultiset,
    chain_condition,
    enumerate_families,
    enumerate_s1s2_sets,
    family_point_multiset,
    hilbert_function,
    hilbert_function_oracle,
    hilbert_series,
    instance_from_entries,
    lgv_multiplicity,
    light_and_shadow,
    pole_order,
    s1_check_naive,
    turn_polynomial,
)
from grassmult.grassmannian import GrassmannianShape, all_cosets, build_instance
from grassmult.reflections import path_point_union
from grassmult.shadow import light_and_shadow_steps
from grassmult.verify import all_instances

from conftest import FIG1, FIG1_CODES, FIG2A

CRITERION3 = [inst for inst in all_instances(6) if inst.n >= 4]
UP_TO_5 = list(all_instances(5))


def test_criterion_1_fig1_kappa_sigma():
    t0 = time.perf_counter()
    inst = instance_from_entries(**FIG1)
    assert inst.kappa == (6, 6, 5, 2, 2, 0, 0, 0, 0)
    assert "".join(map(str, inst.sigma)) == "674583129"
    assert time.perf_counter() - t0 < 1.0


def test_criterion_2_quadric_cone():
    t0 = time.perf_counter()
    inst = instance_from_entries(4, 2, (2, 4), (1, 2))
    assert lgv_multiplicity(inst) == 2
    assert len(enumerate_families(inst)) == 2
    assert len(enumerate_s1s2_sets(inst)) == 2
    assert turn_polynomial(inst).coefficients == (1, 1)
    assert pole_order(inst) == 3
    hs = hilbert_series(inst)
    assert [hilbert_function(hs, m) for m in range(5)] == [1, 4, 9, 16, 25]
    assert time.perf_counter() - t0 < 1.0


def test_criterion_3_theorem1_three_engines():
    t0 = time.perf_counter()
    assert {inst.n for inst in CRITERION3} == {4, 5, 6}
    for inst in CRITERION3:
        det = lgv_multiplicity(inst)
        fams = enumerate_families(inst)
        full = enumerate_s1s2_sets(inst)
        restricted = enumerate_s1s2_sets(inst, candidates=path_point_union(inst))
        assert len(full) == len(restricted) == len(fams) == det, str(inst)
    assert time.perf_counter() - t0 < 600


def test_criterion_4_round_trip():
    for inst in CRITERION3:
        for f in enumerate_families(inst):
            assert light_and_shadow(family_point_multiset(f), inst) == f, str(inst)
        for S in enumerate_s1s2_sets(inst):
            assert family_point_multiset(light_and_shadow(S, inst)) == S, str(inst)


def test_criterion_5_claim3_equivalence():
    checked = 0
    for inst in UP_TO_5:
        rect = inst.rectangle()
        for k in range(min(4, len(rect)) + 1):
            for S in combinations(rect, k):
                assert chain_condition(S, inst) == s1_check_naive(S, inst), (str(inst), S)
                checked += 1
    assert checked > 0


def test_criterion_6_theorem2_counting():
    for inst in UP_TO_5:
        hs = hilbert_series(inst)
        for m in range(4):
            assert hilbert_function(hs, m) == hilbert_function_oracle(inst, m), (str(inst), m)


def test_criterion_7_remark1():
    for inst in CRITERION3:
        assert turn_polynomial(inst)(1) == lgv_multiplicity(inst), str(inst)


def test_criterion_8_smooth_points():
    count = 0
    for n in range(1, 7):
        for d in range(n + 1):
            for w in all_cosets(GrassmannianShape(n, d)):
                inst = build_instance(w, w)
                assert lgv_multiplicity(inst) == 1
                assert turn_polynomial(inst).coefficients == (1,)
                assert pole_order(inst) == sum(i - l for l, i in enumerate(w.entries, start=1))
                count += 1
    assert count == sum(2**n for n in range(1, 7))


def test_criterion_9_fig2_light_and_shadow():
    inst = instance_from_entries(**FIG1)
    steps = light_and_shadow_steps(ReflectionMultiset.of(FIG2A), inst)
    assert steps[0].removed == ((9, 9), (9, 13), (9, 17))
    family = PathFamily(inst, tuple(s.path for s in steps))
    assert family.step_strings() == [c.replace("2", "N").replace("1", "E") for c in reversed(FIG1_CODES)]
    assert family.is_valid()
