"""Morita p-adic gamma: table construction, caching, special values."""

from fractions import Fraction

from padic_hyperg.padics import PadicContext
from padic_hyperg.pgamma import (build_table, frac_floor, gamma_at, gamma_unit,
                                 load_table, reflection_sign, save_table)


def naive_gamma_int(k: int, p: int, pN: int) -> int:
    """Gamma_p(k) = (-1)^k * prod_{0<j<k, p∤j} j for integer k >= 1."""
    acc = 1
    for j in range(1, k):
        if j % p:
            acc = acc * j % pN
    return (-acc) % pN if k % 2 else acc


def test_integer_values_against_naive_product():
    for p in (5, 7, 13):
        ctx = PadicContext(p, 3)
        tbl = build_table(ctx)
        pN = p ** 3
        for k in range(1, 3 * p):
            assert tbl.gamma_int(k) % pN == naive_gamma_int(k, p, pN)


def test_special_values():
    for p in (5, 7, 11, 13, 19):
        ctx = PadicContext(p, 3)
        tbl = build_table(ctx)
        pN = p ** 3
        assert gamma_unit(Fraction(0), tbl) % pN == 1
        assert gamma_unit(Fraction(1), tbl) % pN == pN - 1
        half_sq = pow(gamma_unit(Fraction(1, 2), tbl), 2, pN)
        want = (-1) ** ((p + 1) // 2) % pN
        assert half_sq == want


def test_reflection_formula():
    for p in (5, 7, 11):
        ctx = PadicContext(p, 3)
        tbl = build_table(ctx)
        pN = p ** 3
        for k in range(p - 1):
            x = Fraction(k, p - 1)
            lhs = gamma_unit(x, tbl) * gamma_unit(1 - x, tbl) % pN
            assert lhs == reflection_sign(x, ctx) % pN


def test_frac_floor():
    st = frac_floor(Fraction(-7, 4))
    assert st.floor == -2
    assert st.frac == Fraction(1, 4)
    st = frac_floor(Fraction(3))
    assert st.floor == 3
    assert st.frac == 0


def test_gamma_at_is_unit():
    ctx = PadicContext(7, 3)
    tbl = build_table(ctx)
    g = gamma_at(Fraction(2, 3), tbl)
    assert g.v == 0
    assert g.abs_prec == 3


def test_cache_roundtrip(tmp_path):
    ctx = PadicContext(11, 3)
    tbl = build_table(ctx)
    save_table(tbl, str(tmp_path))
    loaded = load_table(ctx, str(tmp_path))
    assert loaded is not None
    assert loaded.table == tbl.table
    rebuilt = build_table(ctx, str(tmp_path))
    assert rebuilt.table == tbl.table


def test_cache_miss_on_other_context(tmp_path):
    ctx = PadicContext(11, 3)
    save_table(build_table(ctx), str(tmp_path))
    other = PadicContext(11, 4)
    assert load_table(other, str(tmp_path)) is None
