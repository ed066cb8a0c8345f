"""
Seeded generators for the counted property suites.
"""
import random
from fractions import Fraction
from typing import List, Tuple

from models.polynomial import RationalPolynomial
from services.euclid_service import synthesize_from_leading


def random_fraction(rng: random.Random, low: int = -9, high: int = 9, max_den: int = 6, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(low, high), rng.randint(1, max_den))
        if value != 0 or not nonzero:
            return value


def positive_fraction(rng: random.Random, max_num: int = 12, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_leading(rng: random.Random, n: int, positive: bool = True) -> List[Fraction]:
    """h_0..h_n, all nonzero; positive or of random signs"""
    if positive:
        return [positive_fraction(rng) for _ in range(n + 1)]
    return [random_fraction(rng, nonzero=True) for _ in range(n + 1)]


def random_nondegenerate(rng: random.Random, max_degree: int = 12, positive: bool = False) -> Tuple[RationalPolynomial, int, List[Fraction]]:
    """(f, M, h) with a nondegenerate step-M run whose leading coefficients are h"""
    n = rng.randint(2, max_degree)
    m = rng.randint(2, n)
    h = random_leading(rng, n, positive=positive)
    return synthesize_from_leading(h, m), m, h


def random_grid(rng: random.Random, order: int) -> List[List[Fraction]]:
    return [[random_fraction(rng) for _ in range(order)] for _ in range(order)]


def random_stable(rng: random.Random, max_degree: int = 10) -> RationalPolynomial:
    """Product of factors (x + a) and (x^2 + bx + c) with a, b, c > 0: every zero in Re z < 0"""
    n = rng.randint(2, max_degree)
    f = RationalPolynomial.from_coeffs([1])
    degree = 0
    while degree < n:
        if n - degree >= 2 and rng.random() < 0.5:
            factor = RationalPolynomial.from_coeffs([1, positive_fraction(rng), positive_fraction(rng)])
            degree += 2
        else:
            factor = RationalPolynomial.from_coeffs([1, positive_fraction(rng)])
            degree += 1
        f = f * factor
    return f
