"""Brute-force point counting for the curve families, and the birational
transformations between them used as cross-checks.

All counts are exact enumerations: O(p) quadratic-character sums for the
y^2 = f(x) models, O(p^2) for the plane cubic.  Traces always satisfy the
Hasse bound when the parameters are nonsingular.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .padics import PadicContext, PadicNum
from .characters import legendre
from .hyperg import HyperParams, nGn
from fractions import Fraction


class SingularCurveError(ValueError):
    pass


@dataclass(frozen=True)
class CountResult:
    total_points: int
    trace: int
    infinity_points: int
    convention: str

    def check_hasse(self, p: int) -> bool:
        return self.trace * self.trace <= 4 * p


def count_weierstrass(a2: int, a4: int, a6: int, p: int) -> CountResult:
    """y^2 = x^3 + a2 x^2 + a4 x + a6, one point at infinity."""
    a2, a4, a6 = a2 % p, a4 % p, a6 % p
    disc = (18 * a2 * a4 * a6 - 4 * a2 ** 3 * a6 + a2 ** 2 * a4 ** 2
            - 4 * a4 ** 3 - 27 * a6 ** 2) % p
    if disc == 0:
        raise SingularCurveError(f"singular cubic (a2,a4,a6)=({a2},{a4},{a6}) mod {p}")
    s = sum(legendre(x * x * x + a2 * x * x + a4 * x + a6, p) for x in range(p))
    total = p + 1 + s
    return CountResult(total, p + 1 - total, 1, "weierstrass")


def count_dik(lam: int, p: int) -> CountResult:
    """y^2 = x^3 + 3*lam*(x+1)^2."""
    lam %= p
    if lam == 0 or (4 * lam - 9) % p == 0:
        raise SingularCurveError(f"singular parameter {lam} mod {p}")
    s = sum(legendre(x * x * x + 3 * lam * (x + 1) ** 2, p) for x in range(p))
    total = p + 1 + s
    return CountResult(total, p + 1 - total, 1, "dik")


def count_jacobi(lam: int, p: int, infinity_convention: int = 1) -> CountResult:
    """v^2 = u^4 + 2*lam*u^2 + 1 with a configurable number of infinity
    points added to the affine count.

    The quartic model's smooth completion has two rational points at
    infinity, but the identities for this family calibrate the convention
    against the hypergeometric side rather than guessing; the chosen value
    is recorded in the result.
    """
    lam %= p
    if lam == 0 or (lam * lam - 1) % p == 0:
        raise SingularCurveError(f"singular parameter {lam} mod {p}")
    if infinity_convention not in (0, 1, 2):
        raise ValueError("infinity convention must be 0, 1 or 2")
    affine = sum(1 + legendre(u ** 4 + 2 * lam * u * u + 1, p) for u in range(p))
    total = affine + infinity_convention
    return CountResult(total, p + 1 - total, infinity_convention,
                       f"jacobi-quartic-I{infinity_convention}")


def count_hessian(d: int, p: int) -> CountResult:
    """Projective x^3 + y^3 + 1 = 3dxy: affine solutions plus the points at
    infinity (cube roots of -1 in P^1: three when p ≡ 1 mod 3, else one)."""
    d %= p
    if pow(d, 3, p) == 1 % p:
        raise SingularCurveError(f"singular parameter d={d} mod {p}")
    cubes = [pow(x, 3, p) for x in range(p)]
    affine = 0
    for x in range(p):
        for y in range(p):
            if (cubes[x] + cubes[y] + 1 - 3 * d * x * y) % p == 0:
                affine += 1
    infinity = 3 if p % 3 == 1 else 1
    total = affine + infinity
    return CountResult(total, p + 1 - total, infinity, "hessian-projective")


def hessian_gamma(p: int) -> int:
    """Case constant for the plane-cubic counting formula."""
    return 5 - 6 * legendre(-3, p) if p % 3 == 1 else 1


def hessian_n0(p: int) -> int:
    """Number of transformation-exceptional points; 2 when p ≡ ±1 mod 12.

    Stated source branches are '2 if p ≡ ±1 (mod 12)' and
    '0 if p not ≡ ±5 (mod 12)', which overlap; the implemented reading is
    2 for p ≡ ±1 and 0 for p ≡ ±5 (mod 12).
    """
    return 2 if p % 12 in (1, 11) else 0


def hessian_to_dik(d: int, p: int):
    """Map the plane cubic parameter d to the DIK parameter lambda.

    Returns (lam, k, admissible) with k = 4(d^2+d+1)/3,
    lam = (d+2)^3/(3k); the transformation needs
    t = (d^2+d+1)/(3(d+2)) to be a nonzero square mod p.
    """
    d %= p
    if d == 0 or (d + 2) % p == 0:
        raise SingularCurveError(f"excluded parameter d={d} mod {p}")
    if pow(d, 3, p) == 1 % p:
        raise SingularCurveError(f"singular parameter d={d} mod {p}")
    k = (4 * (d * d + d + 1) * pow(3, -1, p)) % p
    if k == 0:
        raise SingularCurveError(f"degenerate transformation at d={d} mod {p}")
    lam = (pow(d + 2, 3, p) * pow(3 * k, -1, p)) % p
    t = ((d * d + d + 1) * pow(3 * (d + 2), -1, p)) % p
    admissible = legendre(t, p) == 1
    return lam, k, admissible


def mccarthy_trace(a: int, b: int, p: int, ctx: PadicContext) -> PadicNum:
    """Trace of y^2 = x^3 + ax + b as p * phi(b) * G(z), z = -27 b^2 / (4 a^3).

    Must agree with the enumerated count_weierstrass trace.
    """
    a %= p
    b %= p
    if a == 0 or b == 0:
        raise ValueError("need a, b nonzero mod p")
    if ctx.p != p:
        raise ValueError("context prime mismatch")
    z = (-27 * b * b * pow(4 * a ** 3, -1, p)) % p
    params = HyperParams((Fraction(1, 4), Fraction(3, 4)),
                         (Fraction(1, 3), Fraction(2, 3)), z)
    gval = nGn(params, ctx)
    return PadicNum.from_int(ctx, legendre(b, p) * p) * gval.value
