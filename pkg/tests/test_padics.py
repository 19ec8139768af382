"""Core capped-precision p-adic arithmetic."""

from fractions import Fraction

import pytest

from padic_hyperg.padics import (ContextMismatch, PadicContext, PadicNum,
                                 PrecisionError, embed_rational, teichmuller,
                                 vp)


def test_vp():
    assert vp(12, 2) == 2
    assert vp(12, 3) == 1
    assert vp(-50, 5) == 2
    assert vp(7, 5) == 0


def test_from_int_lift_roundtrip():
    ctx = PadicContext(7, 4)
    for n in (1, 6, 49, -3, 343, 123):
        x = PadicNum.from_int(ctx, n)
        assert (x.lift() - n) % 7 ** (4) == 0 or vp(n, 7) > 0


def test_ring_homomorphism():
    ctx = PadicContext(5, 4)
    vals = [Fraction(2, 3), Fraction(-7, 4), Fraction(5, 2), Fraction(1, 11)]
    for a in vals:
        for b in vals:
            for op in (lambda x, y: x + y, lambda x, y: x - y,
                       lambda x, y: x * y):
                lhs = op(embed_rational(a, ctx), embed_rational(b, ctx))
                rhs = embed_rational(op(a, b), ctx)
                prec = min(lhs.abs_prec, rhs.abs_prec)
                assert lhs.equals_at(rhs, prec)


def test_division():
    ctx = PadicContext(7, 4)
    a = embed_rational(Fraction(3, 5), ctx)
    b = embed_rational(Fraction(2, 11), ctx)
    q = a / b
    want = embed_rational(Fraction(33, 10), ctx)
    assert q.equals_at(want, min(q.abs_prec, want.abs_prec))


def test_valuation_and_precision():
    ctx = PadicContext(5, 3)
    x = PadicNum.from_int(ctx, 25 * 3)
    assert x.v == 2
    assert x.abs_prec == 5
    y = PadicNum.from_rational(ctx, Fraction(1, 5))
    assert y.v == -1
    assert y.abs_prec == 2


def test_addition_cancellation_precision():
    ctx = PadicContext(5, 3)
    a = PadicNum.from_int(ctx, 1)
    b = PadicNum.from_int(ctx, -1 + 25)
    s = a + b
    assert s.v == 2
    assert s.lift() == 25


def test_exact_zero():
    ctx = PadicContext(5, 3)
    z = PadicNum.zero(ctx)
    x = PadicNum.from_int(ctx, 7)
    assert (z + x).equals_at(x, 3)
    assert (z * x).is_zero_at(100)
    assert z.is_zero_at(10 ** 6)


def test_equals_at_raises_beyond_precision():
    ctx = PadicContext(5, 3)
    x = PadicNum.from_int(ctx, 2)
    y = PadicNum.from_int(ctx, 2)
    with pytest.raises(PrecisionError):
        x.equals_at(y, 4)


def test_context_mismatch():
    a = PadicNum.from_int(PadicContext(5, 3), 1)
    b = PadicNum.from_int(PadicContext(7, 3), 1)
    with pytest.raises(ContextMismatch):
        _ = a + b


def test_from_shifted_and_repr():
    ctx = PadicContext(5, 3)
    x = PadicNum.from_shifted(ctx, -1, 2, 2)
    assert x.v == -1
    assert "5^-1" in repr(x)
    assert "(mod 5^2)" in repr(x)


def test_teichmuller():
    for p in (5, 7, 13):
        ctx = PadicContext(p, 3)
        for a in range(1, p):
            w = teichmuller(a, ctx)
            lift = int(w.lift())
            assert lift % p == a % p
            assert pow(lift, p - 1, p ** 3) == 1


def test_char_pow():
    ctx = PadicContext(7, 3)
    tt = ctx.teich_table()
    for a in range(1, 7):
        for e in range(-6, 13):
            assert ctx.char_pow(a, e) == pow(tt[a], e % 6, 7 ** 3)
    assert ctx.char_pow(0, 3) == 0
    assert ctx.char_pow(-1, 1) == ctx.char_pow(6, 1)


def test_pow():
    ctx = PadicContext(7, 3)
    x = embed_rational(Fraction(3, 2), ctx)
    cube = x ** 3
    want = embed_rational(Fraction(27, 8), ctx)
    assert cube.equals_at(want, min(cube.abs_prec, want.abs_prec))
    inv = x ** -1
    want = embed_rational(Fraction(2, 3), ctx)
    assert inv.equals_at(want, min(inv.abs_prec, want.abs_prec))
