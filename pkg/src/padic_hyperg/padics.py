"""Truncated arithmetic in Q_p with exact valuation tracking.

Values are stored as p^v * u where the unit u is known modulo p^prec
(prec <= N, the context's relative precision).  Addition of values with
different valuations, or cancellation, lowers the usable precision; the
bookkeeping here is explicit so every downstream comparison can state the
absolute precision it was performed at.
"""

from __future__ import annotations

from fractions import Fraction


class PadicError(Exception):
    pass


class ContextMismatch(PadicError):
    pass


class PrecisionError(PadicError):
    pass


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicContext:
    """A prime p and working relative precision N (units known mod p^N).

    Also owns the lazily built lookup tables (Teichmuller lifts, character
    power tables, gamma table, hypergeometric coefficient rows) shared by
    the other modules.  Tables are built once and never mutated afterwards,
    so contexts are safe to share between threads.
    """

    def __init__(self, p: int, N: int = 3, cache_dir: str | None = None):
        if p < 3 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"p = {p} is not an odd prime")
        if N < 1:
            raise ValueError("precision N must be >= 1")
        self.p = p
        self.N = N
        self.pN = p ** N
        self.cache_dir = cache_dir
        self._teich: list[int] | None = None
        self._char_pows: list[list[int]] | None = None
        self._gamma_table = None          # built by pgamma.build_table
        self._coeff_rows: dict = {}       # hyperg coefficient cache
        self._zeta_powers = None          # eisenstein root-of-unity powers
        self._gauss_sums: dict = {}
        self.scratch: dict = {}           # misc per-context value caches

    def __repr__(self):
        return f"PadicContext(p={self.p}, N={self.N})"

    def __eq__(self, other):
        return (isinstance(other, PadicContext)
                and self.p == other.p and self.N == other.N)

    def __hash__(self):
        return hash((self.p, self.N))

    # -- Teichmuller lifts ------------------------------------------------

    def teich_table(self) -> list[int]:
        """teich_table()[a] is the Teichmuller lift of a, 0 for a = 0."""
        if self._teich is None:
            tab = [0] * self.p
            for a in range(1, self.p):
                x = a % self.pN
                while True:
                    y = pow(x, self.p, self.pN)
                    if y == x:
                        break
                    x = y
                tab[a] = x
            self._teich = tab
        return self._teich

    def char_pow(self, a: int, e: int) -> int:
        """teich(a)^e mod p^N for a in F_p, exponent e mod (p-1); 0 at a=0."""
        a %= self.p
        if a == 0:
            return 0
        if self._char_pows is None:
            teich = self.teich_table()
            pows = [[0] * (self.p - 1) for _ in range(self.p)]
            for b in range(1, self.p):
                w = 1
                row = pows[b]
                for m in range(self.p - 1):
                    row[m] = w
                    w = (w * teich[b]) % self.pN
            self._char_pows = pows
        return self._char_pows[a][e % (self.p - 1)]


class PadicNum:
    """An element of Q_p known at finite precision.

    Exact zero is a distinguished value (infinite valuation).  A value whose
    unit digits are entirely consumed by cancellation is an "inexact zero":
    known to be divisible by p^v but otherwise indeterminate (prec == 0).
    """

    __slots__ = ("ctx", "v", "unit", "prec", "exact_zero")

    def __init__(self, ctx, v, unit, prec, exact_zero=False):
        self.ctx = ctx
        self.v = v
        self.unit = unit
        self.prec = prec
        self.exact_zero = exact_zero

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(ctx: PadicContext) -> "PadicNum":
        return PadicNum(ctx, 0, 0, 0, exact_zero=True)

    @staticmethod
    def zero_at(ctx: PadicContext, aprec: int) -> "PadicNum":
        """A value known only to be ≡ 0 mod p^aprec."""
        return PadicNum(ctx, aprec, 0, 0)

    @staticmethod
    def from_int(ctx: PadicContext, n: int) -> "PadicNum":
        if n == 0:
            return PadicNum.zero(ctx)
        v = vp(n, ctx.p)
        unit = (n // ctx.p ** v) % ctx.pN
        return PadicNum(ctx, v, unit, ctx.N)

    @staticmethod
    def from_rational(ctx: PadicContext, q) -> "PadicNum":
        """Embed a rational; any denominator is allowed (valuation may be
        negative when p divides it)."""
        q = Fraction(q)
        if q == 0:
            return PadicNum.zero(ctx)
        num, den = q.numerator, q.denominator
        v = vp(num, ctx.p) - vp(den, ctx.p)
        num //= ctx.p ** vp(num, ctx.p)
        den //= ctx.p ** vp(den, ctx.p)
        unit = (num * pow(den, -1, ctx.pN)) % ctx.pN
        return PadicNum(ctx, v, unit, ctx.N)

    @staticmethod
    def from_shifted(ctx: PadicContext, base: int, mant: int, aprec: int) -> "PadicNum":
        """Value p^base * mant, known modulo p^aprec in absolute terms."""
        if aprec <= base:
            return PadicNum.zero_at(ctx, aprec)
        mant %= ctx.p ** (aprec - base)
        if mant == 0:
            return PadicNum.zero_at(ctx, aprec)
        w = vp(mant, ctx.p)
        v = base + w
        prec = min(ctx.N, aprec - v)
        unit = (mant // ctx.p ** w) % ctx.p ** prec
        return PadicNum(ctx, v, unit, prec)

    # -- structure --------------------------------------------------------

    @property
    def abs_prec(self):
        """Absolute precision: the value is known modulo p^abs_prec."""
        if self.exact_zero:
            return float("inf")
        return self.v + self.prec

    def is_zero_at(self, aprec: int) -> bool:
        if self.exact_zero:
            return True
        if aprec > self.abs_prec:
            raise PrecisionError(
                f"zero test at p^{aprec} but value only known mod p^{self.abs_prec}")
        return self.v >= aprec

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        if self.exact_zero:
            return other
        if other.exact_zero:
            return self
        ap = min(self.abs_prec, other.abs_prec)
        base = min(self.v, other.v)
        p = self.ctx.p
        mant = (self.unit * p ** (self.v - base)
                + other.unit * p ** (other.v - base))
        return PadicNum.from_shifted(self.ctx, base, mant, ap)

    def __neg__(self):
        if self.exact_zero or self.prec == 0:
            return self
        return PadicNum(self.ctx, self.v,
                        (-self.unit) % self.ctx.p ** self.prec, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if self.exact_zero or other.exact_zero:
            return PadicNum.zero(self.ctx)
        v = self.v + other.v
        prec = min(self.prec, other.prec)
        if prec == 0:
            return PadicNum.zero_at(self.ctx, v)
        unit = (self.unit * other.unit) % self.ctx.p ** prec
        return PadicNum(self.ctx, v, unit, prec)

    def __truediv__(self, other):
        self._check(other)
        if other.exact_zero:
            raise ZeroDivisionError("division by exact p-adic zero")
        if other.prec == 0:
            raise PrecisionError("division by a value indistinguishable from zero")
        if self.exact_zero:
            return PadicNum.zero(self.ctx)
        v = self.v - other.v
        prec = min(self.prec, other.prec)
        if prec == 0:
            return PadicNum.zero_at(self.ctx, v)
        m = self.ctx.p ** prec
        unit = (self.unit * pow(other.unit, -1, m)) % m
        return PadicNum(self.ctx, v, unit, prec)

    def __pow__(self, k: int):
        ctx = self.ctx
        if k == 0:
            return PadicNum.from_int(ctx, 1)
        if self.exact_zero:
            if k < 0:
                raise ZeroDivisionError("negative power of exact zero")
            return self
        if k < 0:
            return PadicNum.from_int(ctx, 1) / self ** (-k)
        if self.prec == 0:
            return PadicNum.zero_at(ctx, self.v * k)
        m = ctx.p ** self.prec
        return PadicNum(ctx, self.v * k, pow(self.unit, k, m), self.prec)

    # -- comparison and rendering ----------------------------------------

    def equals_at(self, other: "PadicNum", aprec: int) -> bool:
        """True iff v_p(self - other) >= aprec."""
        self._check(other)
        d = self - other
        if d.exact_zero:
            return True
        if aprec > d.abs_prec:
            raise PrecisionError(
                f"comparison at p^{aprec} but difference only known mod p^{d.abs_prec}")
        return d.v >= aprec

    def lift(self) -> Fraction:
        """The canonical representative p^v * unit as an exact rational."""
        if self.exact_zero or self.prec == 0:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.ctx.p) ** self.v

    def __repr__(self):
        p = self.ctx.p
        if self.exact_zero:
            return "0"
        if self.prec == 0:
            return f"O({p}^{self.v})"
        return f"{p}^{self.v} * {self.unit} (mod {p}^{self.abs_prec})"


def embed_rational(q, ctx: PadicContext) -> PadicNum:
    """Embed q in Q_p.  Denominators divisible by p get negative valuation."""
    return PadicNum.from_rational(ctx, q)


def teichmuller(a: int, ctx: PadicContext) -> PadicNum:
    """The unique (p-1)-th root of unity congruent to a mod p; 0 at a = 0."""
    a %= ctx.p
    if a == 0:
        return PadicNum.zero(ctx)
    return PadicNum(ctx, 0, ctx.teich_table()[a], ctx.N)
