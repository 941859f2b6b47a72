"""Periodic rational maps built from closed frieze patterns, and orbit tools.

Each map shifts its state left by one slot and appends a rational function of
the old state. States are tuples of Fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .determinants import V_interleaved, continuant_U
from .equations import DifferenceEquation
from .linalg import as_rational

State = tuple[Fraction, ...]


class SingularityError(ZeroDivisionError):
    """A denominator of the map vanished."""


@dataclass(frozen=True)
class RationalMap:
    name: str
    n: int
    arity: int
    claimed_period: int
    rule: Callable[[State], Fraction] = field(repr=False)

    def __call__(self, state: Sequence) -> State:
        s = tuple(as_rational(x) for x in state)
        if len(s) != self.arity:
            raise ValueError(f"{self.name} expects {self.arity} coordinates, got {len(s)}")
        return s[1:] + (self.rule(s),)

    def power(self, state: Sequence, times: int) -> State:
        s = tuple(as_rational(x) for x in state)
        for _ in range(times):
            s = self(s)
        return s


def _ratio(num: Fraction, den: Fraction) -> Fraction:
    if den == 0:
        raise SingularityError("vanishing denominator")
    return num / den


def map_F(n: int) -> RationalMap:
    """(a_1..a_{n-3}) -> (a_2..a_{n-3}, (1 + U(a_1..a_{n-4})) / U(a_1..a_{n-3}))."""
    if n < 5:
        raise ValueError("map F needs n >= 5")

    def rule(s: State) -> Fraction:
        return _ratio(1 + continuant_U(s[:-1]), continuant_U(s))

    return RationalMap("F", n, n - 3, n, rule)


def _V_prefix(s: State, m: int) -> Fraction:
    """V(a_1, b_1, ..., a_m) of an interleaved state; m = 0 gives 1, m = -1 gives 0."""
    if m < 0:
        return Fraction(0)
    return V_interleaved(s[: 2 * m - 1] if m else ())


def map_Phi(n: int) -> RationalMap:
    """(a_1, b_1, ..., a_{n-4}, b_{n-4}) -> (b_1, a_2, ..., b_{n-4}, Q)."""
    if n < 5:
        raise ValueError("map Phi needs n >= 5")
    p = n - 4

    def rule(s: State) -> Fraction:
        b_last = s[2 * p - 1]
        num = 1 + b_last * _V_prefix(s, p - 1) - _V_prefix(s, p - 2)
        return _ratio(num, _V_prefix(s, p))

    return RationalMap("Phi", n, 2 * n - 8, 2 * n, rule)


def map_Go(n: int) -> RationalMap:
    """Self-dual map for odd n = 2m-1 on (a_1, b_1, ..., a_{m-2}, b_{m-2})."""
    if n < 7 or n % 2 == 0:
        raise ValueError("map Go needs odd n >= 7")
    p = (n + 1) // 2 - 2  # m - 2 pairs

    def rule(s: State) -> Fraction:
        lead = V_interleaved(s[2 : 2 * p - 1])  # V(a_2, b_2, ..., a_{m-2})
        num = lead + s[2 * p - 1] * _V_prefix(s, p - 1) - _V_prefix(s, p - 2)
        return _ratio(num, _V_prefix(s, p))

    return RationalMap("Go", n, 2 * p, n, rule)


def map_Ge(n: int) -> RationalMap:
    """Self-dual map for even n = 2m on (a_1, b_1, ..., a_{m-2}, b_{m-2})."""
    if n < 6 or n % 2:
        raise ValueError("map Ge needs even n >= 6")
    p = n // 2 - 2

    def rule(s: State) -> Fraction:
        lead = V_interleaved(s[1 : 2 * p])  # V(b_1, a_2, b_2, ..., b_{m-2})
        num = lead + s[2 * p - 1] * _V_prefix(s, p - 1) - _V_prefix(s, p - 2)
        return _ratio(num, _V_prefix(s, p))

    return RationalMap("Ge", n, 2 * p, n, rule)


def big_O(x: Sequence | dict, a: int, b: int) -> Fraction:
    """O_a^b from the three-term recurrence; ``x`` maps index t to x_t.

    A list is read 1-based: ``x[0]`` is x_1.
    """
    if (b - a) % 2:
        raise ValueError(f"O_a^b needs b - a even, got a={a}, b={b}")
    if b < a - 2:
        raise ValueError(f"O_a^b needs b >= a - 2, got a={a}, b={b}")
    get = x.__getitem__ if isinstance(x, dict) else (lambda t: as_rational(x[t - 1]))

    @lru_cache(maxsize=None)
    def rec(bb: int) -> Fraction:
        if bb < a:
            return Fraction(0)
        if bb == a or bb == a + 2:
            return Fraction(1)
        xs2 = get(bb - 2)
        val = rec(bb - 2) - xs2 * rec(bb - 4)
        if bb - 6 >= a:
            val += xs2 * get(bb - 3) * get(bb - 4) * rec(bb - 6)
        return val

    return rec(b)


def corner_map(n: int) -> RationalMap:
    """(x_1..x_{2n-8}) -> (x_2, ..., R) with R = O^{2n-7}_{-1} / (O^{2n-9}_{-1} - x_{2n-8} x_{2n-9} O^{2n-11}_{-1})."""
    if n < 5:
        raise ValueError("corner map needs n >= 5")
    L = 2 * n - 8

    def rule(s: State) -> Fraction:
        x = {t + 1: v for t, v in enumerate(s)}
        num = big_O(x, -1, L + 1)
        den = big_O(x, -1, L - 1) - x[L] * x.get(L - 1, Fraction(0)) * big_O(x, -1, L - 3)
        return _ratio(num, den)

    return RationalMap("corner", n, L, 2 * n, rule)


MAPS = {"F": map_F, "Phi": map_Phi, "Go": map_Go, "Ge": map_Ge, "corner": corner_map}


def make_map(name: str, n: int) -> RationalMap:
    try:
        return MAPS[name](n)
    except KeyError:
        raise ValueError(f"unknown map {name!r}; choose from {', '.join(MAPS)}") from None


@dataclass
class OrbitResult:
    states: list[State]
    minimal_period: int | None
    singular_at: int | None = None
    claimed_period: int | None = None

    @property
    def closed(self) -> bool:
        return self.minimal_period is not None

    @property
    def divides_claim(self) -> bool:
        return self.closed and self.claimed_period % self.minimal_period == 0

    def describe(self) -> str:
        if self.singular_at is not None:
            return f"singular at step {self.singular_at}"
        if self.minimal_period is None:
            return f"no return within {len(self.states) - 1} steps | claimed {self.claimed_period}"
        return f"minimal period {self.minimal_period} | claimed {self.claimed_period}"


def iterate(fmap: RationalMap, seed: Sequence, max_steps: int | None = None) -> OrbitResult:
    """Iterate until the seed recurs, a denominator vanishes, or ``max_steps`` runs out."""
    s0 = tuple(as_rational(x) for x in seed)
    if len(s0) != fmap.arity:
        raise ValueError(f"{fmap.name} expects {fmap.arity} coordinates, got {len(s0)}")
    limit = fmap.claimed_period + 1 if max_steps is None else max_steps
    states = [s0]
    s = s0
    for step in range(1, limit + 1):
        try:
            s = fmap(s)
        except SingularityError:
            return OrbitResult(states, None, singular_at=step, claimed_period=fmap.claimed_period)
        if s == s0:
            states.append(s)
            return OrbitResult(states, step, claimed_period=fmap.claimed_period)
        states.append(s)
    return OrbitResult(states, None, claimed_period=fmap.claimed_period)


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    p = rng.randint(-bound, bound)
    q = rng.randint(1, bound)
    return Fraction(p, q)


def random_seed(fmap: RationalMap, rng: random.Random, bound: int = 9, tries: int = 1000) -> State:
    """Random state whose orbit stays nonsingular for a full claimed period."""
    for _ in range(tries):
        s = tuple(random_rational(rng, bound) for _ in range(fmap.arity))
        if iterate(fmap, s).singular_at is None:
            return s
    raise RuntimeError(f"no nonsingular seed found for {fmap.name} after {tries} draws")


def _unroll(fmap: RationalMap, seed: Sequence, length: int) -> list[Fraction]:
    seq = [as_rational(x) for x in seed]
    s = tuple(seq)
    while len(seq) < length:
        try:
            s = fmap(s)
        except SingularityError as err:
            raise SingularityError(f"orbit singular at position {len(seq)}") from err
        seq.append(s[-1])
    return seq[:length]


def hill_from_orbit(n: int, seed: Sequence) -> DifferenceEquation:
    """Hill equation whose coefficients start with ``seed`` and continue by map F."""
    seq = _unroll(map_F(n), seed, n)
    return DifferenceEquation.hill(seq)


def third_order_from_orbit(n: int, seed: Sequence) -> DifferenceEquation:
    """Third-order equation V_i = a_i V_{i-1} - b_i V_{i-2} + V_{i-3} from a Phi seed.

    The orbit unrolls the 2n-periodic sequence a_0, b_1, a_1, b_2, a_2, ...:
    each b sits just before the a with the same index.
    """
    seq = _unroll(map_Phi(n), seed, 2 * n)
    return DifferenceEquation(2, n, [[seq[2 * i], seq[2 * i - 1]] for i in range(n)])


def self_dual_from_orbit(n: int, seed: Sequence) -> DifferenceEquation:
    """Third-order equation from a G_o / G_e seed, interleaved like the Phi seed."""
    fmap = map_Go(n) if n % 2 else map_Ge(n)
    seq = _unroll(fmap, seed, 2 * n)
    return DifferenceEquation(2, n, [[seq[2 * i], seq[2 * i - 1]] for i in range(n)])


def corner_relation(n: int, state: Sequence) -> Fraction:
    """O_{-1}^{2n-5} on the state followed by its image; zero along genuine orbits."""
    fmap = corner_map(n)
    s = tuple(as_rational(x) for x in state)
    x = {t + 1: v for t, v in enumerate(s + (fmap(s)[-1],))}
    return big_O(x, -1, 2 * n - 5)
