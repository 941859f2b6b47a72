"""Seeded instance generators shared by the test modules."""

import random
from functools import lru_cache

from friezekit.gale import gale_transform
from friezekit.maps import hill_from_orbit, make_map, random_seed, self_dual_from_orbit, third_order_from_orbit


@lru_cache(maxsize=None)
def hill_instances(per_n=3, ns=(5, 6, 7, 8, 9, 10), seed=11):
    rng = random.Random(seed)
    return tuple(hill_from_orbit(n, random_seed(make_map("F", n), rng)) for n in ns for _ in range(per_n))


@lru_cache(maxsize=None)
def third_order_instances(per_n=3, ns=(6, 7, 8, 9), seed=12):
    rng = random.Random(seed)
    return tuple(third_order_from_orbit(n, random_seed(make_map("Phi", n), rng)) for n in ns for _ in range(per_n))


@lru_cache(maxsize=None)
def self_dual_instances(seed=13):
    rng = random.Random(seed)
    out = []
    for n in (7, 9):
        for _ in range(2):
            out.append(self_dual_from_orbit(n, random_seed(make_map("Go", n), rng)))
    return tuple(out)


@lru_cache(maxsize=None)
def base_instances():
    """k = 1 and k = 2 instances: 18 + 12 of them."""
    return hill_instances() + third_order_instances()


@lru_cache(maxsize=None)
def all_instances():
    """Base instances plus their Gale duals (higher orders)."""
    base = base_instances()
    return base + tuple(gale_transform(e) for e in base)


def label(eq):
    return f"k{eq.k}-n{eq.n}"
