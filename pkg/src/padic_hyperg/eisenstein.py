"""Arithmetic in the totally ramified extension Z_p[pi]/(pi^{p-1} + p).

This ring contains a primitive p-th root of unity zeta with
zeta - 1 ≡ pi mod pi^2, so Gauss sums can be evaluated exactly in it and
compared against their gamma-function expressions.  Elements are vectors
of p-1 coefficients mod p^N; the pi-adic absolute precision is (p-1)*N.
"""

from __future__ import annotations

import math

from .padics import PadicContext, PadicNum, PadicError, vp
from .characters import CharExp, char_value_int
from .pgamma import build_table, gamma_at
from .report import Verdict

EIS_MAX_P = 50


class NewtonError(PadicError):
    pass


class EisElem:
    """sum_i coeffs[i] * pi^i with pi^{p-1} = -p, coefficients mod p^N."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: PadicContext, coeffs):
        assert len(coeffs) == ctx.p - 1
        self.ctx = ctx
        self.coeffs = tuple(c % ctx.pN for c in coeffs)

    @staticmethod
    def from_scalar(ctx: PadicContext, c: int) -> "EisElem":
        return EisElem(ctx, (c,) + (0,) * (ctx.p - 2))

    @staticmethod
    def from_padic(ctx: PadicContext, x: PadicNum) -> "EisElem":
        """Embed a p-integral PadicNum as the constant coefficient."""
        if x.exact_zero:
            return EisElem.from_scalar(ctx, 0)
        if x.v < 0:
            raise PadicError("only Z_p values embed as Eisenstein scalars")
        return EisElem.from_scalar(ctx, (ctx.p ** x.v * x.unit) % ctx.pN)

    @staticmethod
    def pi_power(ctx: PadicContext, k: int) -> "EisElem":
        """pi^k for k >= 0, folding pi^{p-1} -> -p."""
        if k < 0:
            raise ValueError("negative pi power; clear denominators first")
        q, r = divmod(k, ctx.p - 1)
        c = pow(-ctx.p, q, ctx.pN)
        coeffs = [0] * (ctx.p - 1)
        coeffs[r] = c
        return EisElem(ctx, coeffs)

    def __add__(self, other):
        return EisElem(self.ctx,
                       [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return EisElem(self.ctx,
                       [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return EisElem(self.ctx, [-a for a in self.coeffs])

    def scalar_mul(self, c: int) -> "EisElem":
        return EisElem(self.ctx, [c * a for a in self.coeffs])

    def __mul__(self, other):
        ctx = self.ctx
        d = ctx.p - 1
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:d])
        for k in range(d, 2 * d - 1):
            out[k - d] -= ctx.p * prod[k]
        return EisElem(ctx, out)

    def __pow__(self, k: int):
        result = EisElem.from_scalar(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def pi_valuation(self):
        """min_i ((p-1) v_p(c_i) + i); (p-1)*N when zero at this precision."""
        ctx = self.ctx
        cap = (ctx.p - 1) * ctx.N
        best = cap
        for i, c in enumerate(self.coeffs):
            if c:
                best = min(best, (ctx.p - 1) * vp(c, ctx.p) + i)
        return best

    def is_unit(self) -> bool:
        return self.coeffs[0] % self.ctx.p != 0

    def inverse(self) -> "EisElem":
        """Inverse of a unit, by the quadratically convergent iteration
        x <- x(2 - Ux)."""
        ctx = self.ctx
        if not self.is_unit():
            raise PadicError("inverse of a non-unit Eisenstein element")
        x = EisElem.from_scalar(ctx, pow(self.coeffs[0], -1, ctx.pN))
        two = EisElem.from_scalar(ctx, 2)
        for _ in range(max(3, (ctx.p - 1).bit_length() + ctx.N.bit_length() + 2)):
            err = two - self * x
            x = x * err
            if (self * x - EisElem.from_scalar(ctx, 1)).pi_valuation() >= (ctx.p - 1) * ctx.N:
                return x
        raise NewtonError("unit inversion failed to converge")

    def equals_at_pi(self, other: "EisElem", piprec: int) -> bool:
        return (self - other).pi_valuation() >= piprec

    def __repr__(self):
        return f"Eis(p={self.ctx.p}, coeffs={list(self.coeffs)})"


def zeta_p(ctx: PadicContext) -> EisElem:
    """The primitive p-th root of unity with zeta - 1 ≡ pi mod pi^2.

    Writing zeta = 1 + pi*w, w satisfies the unit-root equation
    F(w) = 1 - w^{p-1} + sum_{k=1}^{p-2} (C(p,k+1)/p) pi^k w^k = 0
    whose derivative at w=1 is a unit, so plain Newton converges
    quadratically from w = 1.
    """
    if ctx._zeta_powers is not None:
        return ctx._zeta_powers[1]
    p = ctx.p
    pi = EisElem.pi_power(ctx, 1)
    coef = [math.comb(p, k + 1) // p for k in range(p - 1)]  # coef[k] = C(p,k+1)/p

    def F(w):
        acc = EisElem.from_scalar(ctx, 1) - w ** (p - 1)
        wp = EisElem.from_scalar(ctx, 1)
        for k in range(1, p - 1):
            wp = wp * w
            if k <= p - 2:
                acc = acc + EisElem.pi_power(ctx, k).scalar_mul(coef[k]) * wp
        return acc

    def Fprime(w):
        acc = (w ** (p - 2)).scalar_mul(-(p - 1))
        wp = EisElem.from_scalar(ctx, 1)
        for k in range(1, p - 1):
            acc = acc + EisElem.pi_power(ctx, k).scalar_mul(k * coef[k]) * wp
            wp = wp * w
        return acc

    w = EisElem.from_scalar(ctx, 1)
    budget = 2 * math.ceil(math.log2((p - 1) * ctx.N)) + 4
    target = (p - 1) * ctx.N
    for _ in range(budget):
        fw = F(w)
        if fw.pi_valuation() >= target:
            break
        w = w - fw * Fprime(w).inverse()
    else:
        if F(w).pi_valuation() < target:
            raise NewtonError("zeta_p iteration did not converge (precision bug)")
    zeta = EisElem.from_scalar(ctx, 1) + pi * w

    # defining properties, checked at working precision
    one = EisElem.from_scalar(ctx, 1)
    if not (zeta ** p).equals_at_pi(one, target):
        raise NewtonError("zeta_p^p != 1 at working precision")
    if (zeta - one).pi_valuation() != 1:
        raise NewtonError("zeta_p == 1 at working precision")

    powers = [one]
    for _ in range(p - 1):
        powers.append(powers[-1] * zeta)
    ctx._zeta_powers = powers
    return zeta


def zeta_power(ctx: PadicContext, x: int) -> EisElem:
    zeta_p(ctx)
    return ctx._zeta_powers[x % ctx.p]


def gauss_sum(chi: CharExp, ctx: PadicContext) -> EisElem:
    """g(chi) = sum_{x in F_p} chi(x) zeta^x, in the Eisenstein ring."""
    key = chi.m % (ctx.p - 1)
    if key in ctx._gauss_sums:
        return ctx._gauss_sums[key]
    zeta_p(ctx)
    acc = EisElem.from_scalar(ctx, 0)
    for x in range(1, ctx.p):
        acc = acc + ctx._zeta_powers[x].scalar_mul(ctx.char_pow(x, chi.m))
    ctx._gauss_sums[key] = acc
    return acc


def _verdict_precision(ctx: PadicContext) -> int:
    return (ctx.p - 1) * (ctx.N - 1)


def gross_koblitz_check(j: int, ctx: PadicContext) -> Verdict:
    """g(omega-bar^j) against -pi^j * Gamma_p(<j/(p-1)>)."""
    from fractions import Fraction
    p = ctx.p
    j %= p - 1
    tbl = build_table(ctx)
    lhs = gauss_sum(CharExp.omega_bar(j, p), ctx)
    gval = gamma_at(Fraction(j, p - 1), tbl)
    rhs = -EisElem.pi_power(ctx, j).scalar_mul(gval.unit)
    prec = _verdict_precision(ctx)
    return Verdict("gross-koblitz", p, {"j": j},
                   lhs=repr(lhs), rhs=repr(rhs),
                   equal=lhs.equals_at_pi(rhs, prec), precision=prec)


def hasse_davenport_check(chi: CharExp, psi: CharExp, ctx: PadicContext) -> Verdict:
    """Product relation prod_{i<m} g(chi^i psi) = g(psi^m) psi^{-m}(m) prod_{0<i<m} g(chi^i)
    for chi of exact order m.

    (The source statement's right-hand product is printed with the constant
    factor g(chi^m); that reading collapses to g(trivial)^{m-1} and fails
    numerically, so the standard factors g(chi^i) are used here.)
    """
    p = ctx.p
    m = chi.order()
    lhs = EisElem.from_scalar(ctx, 1)
    for i in range(m):
        lhs = lhs * gauss_sum(chi ** i * psi, ctx)
    rhs = gauss_sum(psi ** m, ctx).scalar_mul(
        char_value_int(psi ** (-m), m % p, ctx))
    for i in range(1, m):
        rhs = rhs * gauss_sum(chi ** i, ctx)
    prec = _verdict_precision(ctx)
    return Verdict("hasse-davenport", p, {"m": m, "chi": chi.m, "psi": psi.m},
                   lhs=repr(lhs), rhs=repr(rhs),
                   equal=lhs.equals_at_pi(rhs, prec), precision=prec)


def fuselier_check(alpha: int, ctx: PadicContext) -> Verdict:
    """zeta^alpha = (p-1)^{-1} sum_chi g(chi-bar) chi(alpha)."""
    p = ctx.p
    alpha %= p
    if alpha == 0:
        raise PadicError("additive-character expansion needs alpha != 0")
    acc = EisElem.from_scalar(ctx, 0)
    for m in range(p - 1):
        acc = acc + gauss_sum(CharExp.omega_bar(m, p), ctx).scalar_mul(
            ctx.char_pow(alpha, m))
    lhs = zeta_power(ctx, alpha).scalar_mul(p - 1)
    prec = _verdict_precision(ctx)
    return Verdict("theta-expansion", p, {"alpha": alpha},
                   lhs=repr(lhs), rhs=repr(acc),
                   equal=lhs.equals_at_pi(acc, prec), precision=prec)


def gauss_conjugate_check(chi: CharExp, ctx: PadicContext) -> Verdict:
    """g(chi) g(chi-bar) = p chi(-1) for nontrivial chi."""
    p = ctx.p
    lhs = gauss_sum(chi, ctx) * gauss_sum(chi.conj(), ctx)
    rhs = EisElem.from_scalar(ctx, (p * ctx.char_pow(-1, chi.m)) % ctx.pN)
    prec = _verdict_precision(ctx)
    return Verdict("gauss-conjugate", p, {"chi": chi.m},
                   lhs=repr(lhs), rhs=repr(rhs),
                   equal=lhs.equals_at_pi(rhs, prec), precision=prec)


def gauss_jacobi_check(A: CharExp, B: CharExp, ctx: PadicContext) -> Verdict:
    """g(A) g(B) = J(A,B) g(AB) whenever AB is nontrivial."""
    from .characters import jacobi_sum_int
    p = ctx.p
    lhs = gauss_sum(A, ctx) * gauss_sum(B, ctx)
    rhs = gauss_sum(A * B, ctx).scalar_mul(jacobi_sum_int(A, B, ctx))
    prec = _verdict_precision(ctx)
    return Verdict("gauss-jacobi", p, {"A": A.m, "B": B.m},
                   lhs=repr(lhs), rhs=repr(rhs),
                   equal=lhs.equals_at_pi(rhs, prec), precision=prec)
