"""Evaluator for the p-adic hypergeometric sum nGn and the two specialized
two-parameter families used by the curve identities.

The sum has p-1 terms; for each j the term is a product of gamma-ratio
units times an integer power of (-p) determined by exact floor arithmetic.
The unit-and-exponent rows depend only on the parameter arrays, so they are
computed once per (arrays, context) and reused across arguments t; sweeps
over curve parameters then cost one modular multiply-accumulate per term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .padics import PadicContext, PadicNum, PadicError
from .pgamma import build_table, gamma_unit, frac_floor


@dataclass(frozen=True)
class HyperParams:
    """Parameter arrays (a_i), (b_i) in Q ∩ Z_p and the argument t in F_p."""
    top: tuple
    bot: tuple
    t: int

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(Fraction(a) for a in self.top))
        object.__setattr__(self, "bot", tuple(Fraction(b) for b in self.bot))
        if len(self.top) != len(self.bot) or not self.top:
            raise ValueError("parameter arrays must be nonempty and equal length")

    @property
    def n(self) -> int:
        return len(self.top)


@dataclass
class GValue:
    """A hypergeometric value with explicit precision bookkeeping."""
    value: PadicNum
    min_term_valuation: int
    precision_used: int


def _coeff_rows(ctx: PadicContext, top: tuple, bot: tuple) -> list:
    """Per-j rows ((-p)-exponent, unit mod p^N) of the defining sum,
    including the (-1)^{jn} sign but not the character value of t."""
    key = (top, bot)
    if key in ctx._coeff_rows:
        return ctx._coeff_rows[key]
    p, pN = ctx.p, ctx.pN
    n = len(top)
    tbl = build_table(ctx)
    for q in list(top) + list(bot):
        if q.denominator % p == 0:
            raise PadicError(f"parameter {q} is not in Z_p for p = {p}")
    fa = [frac_floor(a).frac for a in top]
    fnb = [frac_floor(-b).frac for b in bot]
    denom = 1
    for x in fa + fnb:
        denom = (denom * gamma_unit(x, tbl)) % pN
    denom_inv = pow(denom, -1, pN)
    rows = []
    for j in range(p - 1):
        jj = Fraction(j, p - 1)
        e = 0
        num = 1
        for i in range(n):
            fs = frac_floor(fa[i] - jj)
            e -= fs.floor
            num = (num * gamma_unit(fs.frac, tbl)) % pN
            fs = frac_floor(fnb[i] + jj)
            e -= fs.floor
            num = (num * gamma_unit(fs.frac, tbl)) % pN
        assert -2 * n <= e <= 2 * n
        u = (num * denom_inv) % pN
        if (j * n) & 1:
            u = pN - u
        rows.append((e, u))
    ctx._coeff_rows[key] = rows
    return rows


def nGn(params: HyperParams, ctx: PadicContext) -> GValue:
    """The defining (p-1)-term sum, exactly, at the context precision.

    Returns exact zero at t = 0 (every character vanishes there).  The
    result's absolute precision is N plus the most negative (-p)-exponent
    encountered; that bound is recorded, never silently dropped.
    """
    p, pN, N = ctx.p, ctx.pN, ctx.N
    rows = _coeff_rows(ctx, params.top, params.bot)
    t = params.t % p
    if t == 0:
        return GValue(PadicNum.zero(ctx), 0, N)
    w_inv = pow(ctx.teich_table()[t], -1, pN)  # omega-bar(t)
    buckets: dict[int, int] = {}
    wpow = 1
    min_e = 0
    for e, u in rows:
        buckets[e] = (buckets.get(e, 0) + u * wpow) % pN
        wpow = (wpow * w_inv) % pN
        min_e = min(min_e, e)
    total = PadicNum.zero(ctx)
    for e, s in sorted(buckets.items()):
        if e & 1:
            s = -s  # (-p)^e sign
        total = total + PadicNum.from_shifted(ctx, e, s, e + N)
    scale = PadicNum.from_rational(ctx, Fraction(-1, p - 1))
    value = total * scale
    return GValue(value, min_e, min_e + N)


def g22_r(r: int, t: int, ctx: PadicContext) -> GValue:
    """First specialized family, indexed by r in [0, p-2]."""
    p = ctx.p
    if not 0 <= r <= p - 2:
        raise ValueError("index r out of range")
    top = (Fraction(r, p - 1), Fraction(-1, 2) - Fraction(r, p - 1))
    bot = (Fraction(-r, 2 * (p - 1)), Fraction(-r, 2 * (p - 1)) - Fraction(1, 2))
    return nGn(HyperParams(top, bot, t), ctx)


def g22_s(s: int, t: int, ctx: PadicContext) -> GValue:
    """Second (tilde) family, indexed by s; internal argument is 1/(6t)."""
    p = ctx.p
    if not 0 <= s <= p - 2:
        raise ValueError("index s out of range")
    t %= p
    if t == 0 or (6 * t) % p == 0:
        raise PadicError("tilde family needs 6t invertible mod p")
    u = pow(6 * t, -1, p)
    top = (Fraction(0), Fraction(-1, 2) - Fraction(s, p - 1))
    bot = (Fraction(s, p - 1), Fraction(-2 * s, p - 1))
    return nGn(HyperParams(top, bot, u), ctx)
