"""Hypergeometric evaluator against a from-scratch oracle and point counts."""

from fractions import Fraction

import pytest

from padic_hyperg.curves import count_weierstrass, mccarthy_trace
from padic_hyperg.hyperg import GValue, HyperParams, g22_r, g22_s, nGn
from padic_hyperg.padics import PadicContext, PadicNum, embed_rational
from padic_hyperg.pgamma import build_table, frac_floor, gamma_at


def naive_g(top, bot, t, ctx):
    """Straight transcription of the defining sum, term by term, with no
    shared caching: (-1/(p-1)) sum_j (-1)^{jn} wbar^j(t) prod_i
    (-p)^{-floor(<a_i> - j/(p-1)) - floor(<-b_i> + j/(p-1))}
    * Gamma(<a_i - j/(p-1)>)/Gamma(<a_i>)
    * Gamma(<-b_i + j/(p-1)>)/Gamma(<-b_i>)."""
    p = ctx.p
    tbl = build_table(ctx)
    n = len(top)
    total = PadicNum.zero(ctx)
    for j in range(p - 1):
        jf = Fraction(j, p - 1)
        term = embed_rational(Fraction((-1) ** (j * n), 1), ctx)
        wbar = ctx.char_pow(t, -j)
        if wbar == 0:
            continue
        term = term * PadicNum(ctx, 0, wbar, ctx.N)
        e = 0
        for a, b in zip(top, bot):
            e -= frac_floor(frac_floor(a).frac - jf).floor
            e -= frac_floor(frac_floor(-b).frac + jf).floor
            term = term * gamma_at(frac_floor(a - jf).frac, tbl) \
                / gamma_at(frac_floor(a).frac, tbl)
            term = term * gamma_at(frac_floor(-b + jf).frac, tbl) \
                / gamma_at(frac_floor(-b).frac, tbl)
        term = term * (embed_rational(Fraction(-p), ctx) ** e)
        total = total + term
    return total * embed_rational(Fraction(-1, p - 1), ctx)


CASES = [
    (5, (Fraction(1, 4), Fraction(3, 4)), (Fraction(1, 3), Fraction(2, 3))),
    (7, (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 4), Fraction(3, 4))),
    (11, (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 6), Fraction(5, 6))),
    (7, (Fraction(0), Fraction(0)), (Fraction(1, 4), Fraction(3, 4))),
]


@pytest.mark.parametrize("p,top,bot", CASES)
def test_matches_naive_oracle(p, top, bot):
    ctx = PadicContext(p, 3)
    for t in range(1, p):
        got = nGn(HyperParams(top, bot, t), ctx).value
        want = naive_g(top, bot, t, ctx)
        prec = min(got.abs_prec, want.abs_prec)
        assert got.equals_at(want, prec), (p, t)


def test_zero_argument_is_exact_zero():
    ctx = PadicContext(7, 3)
    gv = nGn(HyperParams((Fraction(1, 4), Fraction(3, 4)),
                         (Fraction(1, 3), Fraction(2, 3)), 0), ctx)
    assert gv.value.is_zero_at(100)


def test_g22_r_matches_naive():
    p = 7
    ctx = PadicContext(p, 3)
    for r in range(p - 1):
        for t in (1, 3):
            got = g22_r(r, t, ctx)
            rf = Fraction(r, p - 1)
            top = (rf, -Fraction(1, 2) - rf)
            bot = (-rf / 2, -rf / 2 - Fraction(1, 2))
            want = naive_g(top, bot, t, ctx)
            prec = min(got.value.abs_prec, want.abs_prec)
            assert got.value.equals_at(want, prec), (r, t)


def test_g22_s_matches_naive():
    p = 7
    ctx = PadicContext(p, 3)
    for s in range(p - 1):
        for t in (1, 2, 5):
            got = g22_s(s, t, ctx)
            sf = Fraction(s, p - 1)
            top = (Fraction(0), -Fraction(1, 2) - sf)
            bot = (sf, -2 * sf)
            arg = pow(6 * t % p, -1, p)
            want = naive_g(top, bot, arg, ctx)
            prec = min(got.value.abs_prec, want.abs_prec)
            assert got.value.equals_at(want, prec), (s, t)


def test_trace_formula_against_enumeration():
    for p in (5, 7, 11, 13):
        ctx = PadicContext(p, 3)
        for a in range(1, p):
            for b in range(1, p):
                disc = (-4 * a ** 3 - 27 * b * b) % p
                if disc == 0:
                    continue
                mt = mccarthy_trace(a, b, p, ctx)
                tr = PadicNum.from_int(ctx, count_weierstrass(0, a, b, p).trace)
                prec = min(mt.abs_prec, tr.abs_prec)
                assert mt.equals_at(tr, prec), (p, a, b)


def test_gvalue_precision_bookkeeping():
    ctx = PadicContext(5, 3)
    gv = nGn(HyperParams((Fraction(1, 4), Fraction(3, 4)),
                         (Fraction(1, 3), Fraction(2, 3)), 2), ctx)
    assert isinstance(gv, GValue)
    assert gv.precision_used == gv.min_term_valuation + ctx.N
    assert gv.value.abs_prec >= gv.precision_used
