"""Elementary symmetric polynomials, the mixed products R_k and the
moment generating polynomial of the growth-direction variable.

Everything is exact: inputs are coerced to :class:`fractions.Fraction`.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .geometry import check_pair

__all__ = [
    "OrientationError",
    "Polynomial",
    "elementary_symmetric",
    "elementary_symmetric_all",
    "r_product",
    "big_r",
    "big_r_all",
    "moment_polynomial",
    "u_ddu",
]


class OrientationError(ValueError):
    """Raised when a formula needing x_i >= y_i gets an unoriented pair."""


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with exact coefficients; ``coeffs[k]`` multiplies u**k."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = [Fraction(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, u):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(tuple(p - q for p, q in zip(a, b)))

    @classmethod
    def product_of_linear(cls, pairs):
        """Expand prod(a + b*u) over the (a, b) pairs."""
        coeffs = [Fraction(1)]
        for a, b in pairs:
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                nxt[k] += c * a
                nxt[k + 1] += c * b
            coeffs = nxt
        return cls(tuple(coeffs))


def elementary_symmetric_all(values):
    """Return [E_0, ..., E_n] of ``values`` via the Pascal recurrence."""
    e = [Fraction(1)]
    for v in values:
        v = Fraction(v)
        e.append(Fraction(0))
        for k in range(len(e) - 1, 0, -1):
            e[k] += v * e[k - 1]
    return e


def elementary_symmetric(values, k: int) -> Fraction:
    values = list(values)
    if not 0 <= k <= len(values):
        raise ValueError(f"E_{k} undefined for {len(values)} variables")
    return elementary_symmetric_all(values)[k]


def r_product(a, b, dirs) -> Fraction:
    """prod_{j not in dirs} a_j * prod_{j in dirs} b_j (0-based indices)."""
    if len(a) != len(b):
        raise ValueError("a and b must have the same length")
    dirs = set(dirs)
    if any(not 0 <= j < len(a) for j in dirs):
        raise IndexError(f"direction indices {sorted(dirs)} out of range for length {len(a)}")
    return Fraction(prod(b[j] if j in dirs else a[j] for j in range(len(a))))


def big_r_all(a, b):
    """[R_0(a,b), ..., R_l(a,b)], read off as the coefficients of prod(a_i + u b_i)."""
    if len(a) != len(b):
        raise ValueError("a and b must have the same length")
    coeffs = Polynomial.product_of_linear(zip(a, b)).coeffs
    return list(coeffs) + [Fraction(0)] * (len(a) + 1 - len(coeffs))


def big_r(a, b, k: int) -> Fraction:
    if not 0 <= k <= len(a):
        raise ValueError(f"R_{k} undefined for length {len(a)}")
    return big_r_all(a, b)[k]


def require_oriented(x, y):
    x, y = check_pair(x, y)
    bad = [i for i, (a, b) in enumerate(zip(x, y)) if a < b]
    if bad:
        raise OrientationError(
            f"need x_i >= y_i in every coordinate, violated at {bad} for x={x}, y={y}; "
            "apply latagg.distributions.orient(x, y) first (side swaps preserve the distribution)")
    return x, y


def moment_polynomial(x, y) -> Polynomial:
    """M(u) = prod(1 + y_i u/(x_i-y_i+1)) - prod(1 + (y_i-1) u/(x_i-y_i+1))."""
    x, y = require_oriented(x, y)
    w = [Fraction(1, a - b + 1) for a, b in zip(x, y)]
    full = Polynomial.product_of_linear((1, b * wi) for b, wi in zip(y, w))
    inner = Polynomial.product_of_linear((1, (b - 1) * wi) for b, wi in zip(y, w))
    return full - inner


def u_ddu(p: Polynomial) -> Polynomial:
    return Polynomial(tuple(k * c for k, c in enumerate(p.coeffs)))
