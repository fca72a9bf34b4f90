"""Seeded comparison of the wall test against the curvature determinant.

Samples come from SplitMix64 so a run can be replayed bit-for-bit in any
language: for each coordinate draw a numerator uniformly in [-bound, bound]
and then a denominator uniformly in [1, bound], each as
``next() % range + low``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .fatness import curvature_form, equivalence_check
from .reductive import ReductiveDecomposition

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, low: int, high: int) -> int:
        return self.next() % (high - low + 1) + low


def sample_vectors(dim: int, count: int, seed: int, bound: int = 20) -> list:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        v = []
        for _ in range(dim):
            num = rng.randint(-bound, bound)
            den = rng.randint(1, bound)
            v.append(Fraction(num, den))
        out.append(tuple(v))
    return out


@dataclass(frozen=True)
class OracleReport:
    samples: int
    agree: int
    fat: int
    not_fat: int
    disagreements: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return self.agree == self.samples


def run_oracle(
    D: ReductiveDecomposition,
    samples: int,
    seed: int,
    bound: int = 20,
    curvature: Callable = curvature_form,
) -> OracleReport:
    """Compare verdicts on ``samples`` seeded vectors; ``curvature`` is injectable for mutation tests."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    agree = fat = 0
    bad = []
    for u in sample_vectors(D.rs.ambient_dim, samples, seed, bound):
        wall, curv = equivalence_check(u, D, curvature)
        fat += wall
        if wall == curv:
            agree += 1
        else:
            bad.append(u)
    return OracleReport(samples, agree, fat, samples - fat, tuple(bad))
