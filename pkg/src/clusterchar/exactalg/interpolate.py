"""Integer polynomials and Euler characteristics from point counts."""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NonPolynomialCount

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in one variable, coefficients lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, q):
        return sum(c * q**k for k, c in enumerate(self.coeffs))


def primes_for(degree_bound, extra=2):
    """The smallest primes giving ``degree_bound + extra`` samples."""
    need = degree_bound + extra
    if need > len(SMALL_PRIMES):
        raise ValueError("degree bound too large for the built-in prime table")
    return SMALL_PRIMES[:need]


def interpolate(points, degree_bound):
    """The unique polynomial of degree <= ``degree_bound`` through ``points``.

    Extra points beyond ``degree_bound + 1`` are used as consistency checks.
    Raises NonPolynomialCount if the points disagree or the fit is not integral.
    """
    points = sorted(dict(points).items())
    if len(points) <= degree_bound:
        raise ValueError(f"need more than {degree_bound} points, got {len(points)}")
    base = points[: degree_bound + 1]
    # Newton divided differences over Q.
    xs = [Fraction(q) for q, _ in base]
    table = [Fraction(c) for _, c in base]
    newton = [table[0]]
    for level in range(1, len(base)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        newton.append(table[0])
    # Expand the Newton form into monomial coefficients.
    coeffs = [Fraction(0)]
    for k in range(len(newton) - 1, -1, -1):
        # coeffs = coeffs * (q - xs[k]) + newton[k]
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= xs[k] * c
        shifted[0] += newton[k]
        coeffs = shifted
    if any(c.denominator != 1 for c in coeffs):
        raise NonPolynomialCount("interpolant has non-integral coefficients", points=points)
    poly = IntPolynomial(tuple(int(c) for c in coeffs))
    for q, c in points:
        if poly(q) != c:
            raise NonPolynomialCount(
                f"count {c} at q={q} disagrees with interpolant", points=points
            )
    return poly


def interpolate_and_eval_at_one(points, degree_bound=None):
    """Fit the counting polynomial and return its value at q = 1."""
    points = list(points)
    if degree_bound is None:
        degree_bound = len(points) - 2
    return interpolate(points, degree_bound)(1)
