"""Exact p-adic hypergeometric arithmetic and identity verification.

Capped-precision p-adic numbers, the Morita p-adic gamma function,
multiplicative characters with Gauss/Jacobi sums in the Eisenstein
extension Z_p[pi]/(pi^(p-1)+p), McCarthy-style hypergeometric evaluation,
exhaustive elliptic-curve point counting, and sweep drivers that check the
trace and transformation identities relating them.
"""

from .padics import (PadicContext, PadicNum, PadicError, ContextMismatch,
                     PrecisionError, embed_rational, teichmuller, vp)
from .pgamma import build_table, gamma_at, reflection_sign, frac_floor, GammaTable
from .characters import (CharExp, legendre, jacobi_sum, jacobi_sum_int,
                         greene_binomial, char_value)
from .eisenstein import EisElem, zeta_p, gauss_sum, EIS_MAX_P
from .hyperg import HyperParams, GValue, nGn, g22_r, g22_s
from .curves import (CountResult, SingularCurveError, count_weierstrass,
                     count_dik, count_jacobi, count_hessian, mccarthy_trace,
                     hessian_gamma, hessian_n0, hessian_to_dik)
from .report import Verdict, SweepReport
from .verify import (sweep, run_prime, verify_lemmas, calibrate_infinity,
                     SWEEP_IDS, THEOREM_IDS, CORRECTED_IDS)

__version__ = "1.0.0"
