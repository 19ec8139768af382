"""Morita's p-adic gamma function at arguments in Z_p, plus exact
fractional-part/floor utilities.

Gamma values come from a precomputed table of partial products of the
integers prime to p, so each evaluation is O(1) after an O(p^N) build.
The table is cached on disk keyed by (p, N).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .padics import PadicContext, PadicNum, PadicError

CACHE_MAGIC = b"PGAM1\n"
DEFAULT_MAX_ENTRIES = 10 ** 8
CACHE_ENV_VAR = "PADIC_HYPER_CACHE"


class GammaBudgetError(PadicError):
    pass


@dataclass(frozen=True)
class FracState:
    """Exact decomposition x = floor + frac with 0 <= frac < 1."""
    value: Fraction
    floor: int
    frac: Fraction


def frac_floor(x) -> FracState:
    """Split a rational into integer and fractional parts (floor toward -inf).

    No floating point anywhere: ⟨-1/2⟩ = 1/2 exactly.
    """
    x = Fraction(x)
    fl = x.numerator // x.denominator
    return FracState(x, fl, x - fl)


class GammaTable:
    """table[k] = prod_{0<j<k, p∤j} j mod p^N, for k in [0, p^N)."""

    def __init__(self, ctx: PadicContext, table: list[int]):
        self.ctx = ctx
        self.table = table

    def gamma_int(self, k: int) -> int:
        """Gamma value at the integer k in [0, p^N), as a unit mod p^N
        with the sign (-1)^k folded in."""
        u = self.table[k]
        return self.ctx.pN - u if k & 1 else u


def _cache_path(ctx: PadicContext, cache_dir: str) -> str:
    return os.path.join(cache_dir, f"pgam-{ctx.p}-{ctx.N}.bin")


def _entry_width(ctx: PadicContext) -> int:
    return max(1, ((ctx.pN - 1).bit_length() + 7) // 8)


def save_table(tbl: GammaTable, cache_dir: str) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    width = _entry_width(tbl.ctx)
    path = _cache_path(tbl.ctx, cache_dir)
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(f"{tbl.ctx.p} {tbl.ctx.N}\n".encode())
        fh.write(b"".join(v.to_bytes(width, "little") for v in tbl.table))
    os.replace(tmp, path)
    return path


def load_table(ctx: PadicContext, cache_dir: str) -> GammaTable | None:
    path = _cache_path(ctx, cache_dir)
    if not os.path.exists(path):
        return None
    with open(path, "rb") as fh:
        if fh.read(len(CACHE_MAGIC)) != CACHE_MAGIC:
            return None
        header = fh.readline().split()
        if len(header) != 2 or (int(header[0]), int(header[1])) != (ctx.p, ctx.N):
            return None
        width = _entry_width(ctx)
        raw = fh.read()
    if len(raw) != width * ctx.pN:
        return None
    table = [int.from_bytes(raw[i * width:(i + 1) * width], "little")
             for i in range(ctx.pN)]
    return GammaTable(ctx, table)


def build_table(ctx: PadicContext, cache_dir: str | None = None,
                max_entries: int = DEFAULT_MAX_ENTRIES) -> GammaTable:
    """Build (or load from cache) the partial-product table for ctx."""
    if ctx._gamma_table is not None:
        return ctx._gamma_table
    if ctx.pN > max_entries:
        raise GammaBudgetError(
            f"table would need {ctx.pN} entries (cap {max_entries}); lower N or p")
    if cache_dir is None:
        cache_dir = ctx.cache_dir or os.environ.get(CACHE_ENV_VAR)
    if cache_dir:
        cached = load_table(ctx, cache_dir)
        if cached is not None:
            ctx._gamma_table = cached
            return cached
    p, pN = ctx.p, ctx.pN
    table = [1] * pN
    acc = 1
    for k in range(1, pN - 1):
        if k % p:
            acc = (acc * k) % pN
        table[k + 1] = acc
    tbl = GammaTable(ctx, table)
    if cache_dir:
        save_table(tbl, cache_dir)
    ctx._gamma_table = tbl
    return tbl


def gamma_unit(x, tbl: GammaTable) -> int:
    """Gamma of a rational in Z_p, as a raw unit mod p^N (sign included)."""
    x = Fraction(x)
    ctx = tbl.ctx
    if x.denominator % ctx.p == 0:
        raise PadicError(f"{x} is not in Z_p for p = {ctx.p}")
    k = (x.numerator * pow(x.denominator, -1, ctx.pN)) % ctx.pN
    return tbl.gamma_int(k)


def gamma_at(x, tbl: GammaTable) -> PadicNum:
    """Morita gamma at a rational x in Z_p, mod p^N.  Always a unit."""
    return PadicNum(tbl.ctx, 0, gamma_unit(x, tbl), tbl.ctx.N)


def reflection_sign(x, ctx: PadicContext) -> int:
    """(-1)^{x_0} where x_0 ≡ x mod p and x_0 in {1, ..., p}."""
    x = Fraction(x)
    if x.denominator % ctx.p == 0:
        raise PadicError(f"{x} is not in Z_p for p = {ctx.p}")
    r = (x.numerator * pow(x.denominator, -1, ctx.p)) % ctx.p
    x0 = r if r != 0 else ctx.p
    return -1 if x0 & 1 else 1
