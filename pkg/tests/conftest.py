"""Shared deterministic generators for randomized tests."""

from __future__ import annotations

import random
from fractions import Fraction

from evokit.exact import Matrix, determinant
from evokit.evolution import EvolutionMatrix
from evokit.structure import CubicTensor


def rand_fraction(rng: random.Random, lo: int = -5, hi: int = 5, dens: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, dens))


def rand_vector(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(rand_fraction(rng) for _ in range(n))


def rand_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix(tuple(rand_vector(rng, cols) for _ in range(rows)))


def rand_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        m = rand_matrix(rng, n, n)
        if determinant(m) != 0:
            return m


def rand_tensor(rng: random.Random, n: int, density: float = 0.4) -> CubicTensor:
    gamma = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if rng.random() < density:
                    value = rand_fraction(rng)
                    if value != 0:
                        gamma[(i, j, k)] = value
    return CubicTensor(n, gamma)


def rand_anticommutative_tensor(rng: random.Random, n: int, density: float = 0.5) -> CubicTensor:
    gamma = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(1, n + 1):
                if rng.random() < density:
                    value = rand_fraction(rng)
                    if value != 0:
                        gamma[(i, j, k)] = value
                        gamma[(j, i, k)] = -value
    return CubicTensor(n, gamma)


def rand_evolution(rng: random.Random, n: int, density: float = 0.6) -> EvolutionMatrix:
    rows = []
    for _ in range(n):
        rows.append(tuple(
            rand_fraction(rng) if rng.random() < density else Fraction(0)
            for _ in range(n)
        ))
    return EvolutionMatrix(Matrix(tuple(rows)))


def rand_strict_upper_evolution(rng: random.Random, n: int) -> EvolutionMatrix:
    rows = []
    for i in range(n):
        row = [Fraction(0)] * n
        for j in range(i + 1, n):
            if rng.random() < 0.7:
                row[j] = rand_fraction(rng)
        rows.append(tuple(row))
    return EvolutionMatrix(Matrix(tuple(rows)))


def rand_point(rng: random.Random, n: int, allow_zero: bool = True) -> tuple[Fraction, ...]:
    point = []
    for _ in range(n):
        if allow_zero and rng.random() < 0.15:
            point.append(Fraction(0))
        else:
            point.append(Fraction(rng.randint(-7, 7), rng.randint(1, 4)))
    return tuple(point)
