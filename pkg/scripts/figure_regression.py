"""Recompute the worked example with n=21, d=9: kappa, sigma, end points,
multiplicity by determinant and by enumeration, the EN-turn polynomial, and
the light-and-shadow trace of the example multiset."""

import time

from grassmult import (
    ReflectionMultiset,
    hilbert_series,
    instance_from_entries,
    lgv_multiplicity,
)
from grassmult.paths import count_families
from grassmult.shadow import light_and_shadow_steps

W = (4, 6, 7, 13, 14, 17, 19, 20, 21)
TAU = (1, 2, 4, 7, 10, 12, 13, 15, 16)
MULTISET = [
    (2, 13), (3, 10), (3, 10), (3, 10), (3, 11), (3, 11), (4, 10), (4, 16),
    (5, 18), (5, 18), (5, 18), (6, 17), (6, 18), (7, 11), (7, 16), (7, 16),
    (7, 19), (8, 21), (8, 21), (8, 21), (8, 21), (9, 13), (9, 18),
]


def main():
    inst = instance_from_entries(21, 9, W, TAU)
    print("kappa :", inst.kappa)
    print("sigma :", "".join(map(str, inst.sigma)))
    print("ends  :", " ".join(map(str, inst.ends)))

    t0 = time.perf_counter()
    det = lgv_multiplicity(inst)
    t1 = time.perf_counter()
    cnt = count_families(inst)
    t2 = time.perf_counter()
    print(f"multiplicity: determinant {det} ({t1 - t0:.4f}s), enumeration {cnt} ({t2 - t1:.2f}s)")

    hs = hilbert_series(inst)
    print("hilbert series (conjectural):", hs)

    print("light and shadow on the example multiset:")
    for l, step in enumerate(light_and_shadow_steps(ReflectionMultiset.of(MULTISET), inst), start=1):
        removed = " ".join(map(str, step.removed))
        print(f"  iteration {l}: {step.path}   removed {removed}")


if __name__ == "__main__":
    main()
