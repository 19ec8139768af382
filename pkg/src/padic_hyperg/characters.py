"""Multiplicative characters of F_p as Teichmuller powers.

A character is just an exponent m mod (p-1): chi = omega^m where omega is
the Teichmuller character.  Every character (the trivial one included)
vanishes at 0; that convention is load-bearing in the orthogonality sums.
Values live in Z_p and are computed from the context's memoized lift table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .padics import PadicContext, PadicNum


@dataclass(frozen=True)
class CharExp:
    """The character omega^m of F_p; omega-bar^j is CharExp(-j mod (p-1))."""
    m: int
    order_mod: int  # p - 1

    def __post_init__(self):
        object.__setattr__(self, "m", self.m % self.order_mod)

    @staticmethod
    def trivial(p: int) -> "CharExp":
        return CharExp(0, p - 1)

    @staticmethod
    def quadratic(p: int) -> "CharExp":
        return CharExp((p - 1) // 2, p - 1)

    @staticmethod
    def omega_bar(j: int, p: int) -> "CharExp":
        return CharExp(-j, p - 1)

    @property
    def is_trivial(self) -> bool:
        return self.m == 0

    def conj(self) -> "CharExp":
        return CharExp(-self.m, self.order_mod)

    def __mul__(self, other: "CharExp") -> "CharExp":
        return CharExp(self.m + other.m, self.order_mod)

    def __pow__(self, k: int) -> "CharExp":
        return CharExp(self.m * k, self.order_mod)

    def order(self) -> int:
        import math
        return self.order_mod // math.gcd(self.m, self.order_mod)


def char_value_int(chi: CharExp, a: int, ctx: PadicContext) -> int:
    """chi(a) as an integer mod p^N (0 for a ≡ 0)."""
    return ctx.char_pow(a, chi.m)


def char_value(chi: CharExp, a: int, ctx: PadicContext) -> PadicNum:
    u = char_value_int(chi, a, ctx)
    if u == 0:
        return PadicNum.zero(ctx)
    return PadicNum(ctx, 0, u, ctx.N)


def legendre(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion, in {-1, 0, 1}."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def jacobi_sum_int(A: CharExp, B: CharExp, ctx: PadicContext) -> int:
    """J(A,B) = sum_x A(x) B(1-x) as an integer mod p^N."""
    p, pN = ctx.p, ctx.pN
    s = 0
    for x in range(2, p):
        s += ctx.char_pow(x, A.m) * ctx.char_pow(1 - x, B.m)
    return s % pN


def jacobi_sum(A: CharExp, B: CharExp, ctx: PadicContext) -> PadicNum:
    return PadicNum.from_shifted(ctx, 0, jacobi_sum_int(A, B, ctx), ctx.N)


def greene_binomial(A: CharExp, B: CharExp, ctx: PadicContext) -> PadicNum:
    """The finite-field binomial coefficient B(-1) J(A, B-bar) / p.

    Valuation can be -1; the result is known modulo p^{N-1}.
    """
    b = ctx.char_pow(-1, B.m)
    num = (b * jacobi_sum_int(A, B.conj(), ctx)) % ctx.pN
    return PadicNum.from_shifted(ctx, -1, num, ctx.N - 1)
