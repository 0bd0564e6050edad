"""Gamma-function helpers and Gauss hypergeometric sums."""

from __future__ import annotations

import cmath
import math
from numbers import Number

from .errors import ConvergenceError, DomainError

SERIES_RTOL = 1e-16
SERIES_MAX_TERMS = 10_000

# math.factorial is exact; log of it is correctly rounded up to here
_EXACT_FACTORIAL_MAX = 170


def _as_nonpositive_int(a) -> int | None:
    """Return ``a`` as an int if it is a non-positive integer, else None."""
    if isinstance(a, complex):
        if a.imag != 0:
            return None
        a = a.real
    try:
        if a <= 0 and a == int(a):
            return int(a)
    except (TypeError, ValueError, OverflowError):
        return None
    return None


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0.

    Integer arguments go through the exact factorial so that
    ``ln_gamma(n) == log((n-1)!)`` to representation precision.
    """
    if not x > 0:
        raise DomainError(f"ln_gamma requires x > 0, got {x!r}")
    if x == int(x) and x <= _EXACT_FACTORIAL_MAX + 1:
        return math.log(math.factorial(int(x) - 1))
    return math.lgamma(x)


def gamma_ratio_sqrt(sigma: int, m: int, n: int) -> float:
    """sqrt(Gamma(s+m+1) Gamma(s-n+1) / (Gamma(s-m+1) Gamma(s+n+1))) for integer s, m, n."""
    if sigma < 0 or abs(m) > sigma or abs(n) > sigma:
        raise DomainError(f"indices out of range: sigma={sigma}, m={m}, n={n}")
    f = math.factorial
    num = f(sigma + m) * f(sigma - n)
    den = f(sigma - m) * f(sigma + n)
    # int / int is correctly rounded
    return math.sqrt(num / den)


def hyp2f1_terms(a, b, c, x):
    """Yield the successive terms (a)_j (b)_j x^j / ((c)_j j!) of a terminating 2F1.

    ``a`` must be a non-positive integer; exactly ``|a| + 1`` terms are produced.
    """
    n = _as_nonpositive_int(a)
    if n is None:
        raise DomainError(f"terminating 2F1 needs a non-positive integer a, got {a!r}")
    term = 1
    yield term
    for j in range(-n):
        if c + j == 0:
            raise DomainError(f"pole of (c)_j at j={j} before termination (c={c!r})")
        term = term * (a + j) * (b + j) * x / ((c + j) * (j + 1))
        yield term


def hyp2f1_terminating(a, b, c, x):
    """Finite Pochhammer sum of 2F1(a, b; c; x) with ``a`` in {0, -1, -2, ...}.

    Summed in ascending order with the iterative term update, so it is valid
    for every x. Works with float, complex or Fraction arguments.
    """
    total = 0
    for term in hyp2f1_terms(a, b, c, x):
        total = total + term
    return total


def _series(a, b, c, x: complex) -> complex:
    if abs(x) >= 1:
        raise DomainError(f"2F1 power series needs |x| < 1 after transformation, got {x!r}")
    total = 1 + 0j
    term = 1 + 0j
    for j in range(SERIES_MAX_TERMS):
        if c + j == 0:
            raise DomainError(f"pole of (c)_j at j={j} (c={c!r})")
        term *= (a + j) * (b + j) * x / ((c + j) * (j + 1))
        total += term
        if term == 0 or abs(term) < SERIES_RTOL * abs(total):
            return total
    raise ConvergenceError(
        f"2F1({a!r}, {b!r}; {c!r}; {x!r}) not converged after {SERIES_MAX_TERMS} terms"
    )


def hyp2f1_series(a, b, c, x: Number, pfaff: bool | None = None) -> complex:
    """Power-series 2F1 with an automatic Pfaff transformation for Re(x) < 0.

    ``pfaff`` forces (True) or suppresses (False) the transformation
    2F1(a,b;c;x) = (1-x)^(-a) 2F1(a, c-b; c; x/(x-1)).
    """
    x = complex(x)
    if pfaff is None:
        pfaff = x.real < 0
    if not pfaff:
        return _series(a, b, c, x)
    xe = x / (x - 1)
    return cmath.exp(-a * cmath.log(1 - x)) * _series(a, c - b, c, xe)


def hyp2f1(a, b, c, x):
    """2F1(a, b; c; x), via the finite sum whenever an upper parameter terminates."""
    na, nb = _as_nonpositive_int(a), _as_nonpositive_int(b)
    if na is not None or nb is not None:
        if na is None or (nb is not None and nb > na):
            a, b = b, a
        return hyp2f1_terminating(a, b, c, x)
    return hyp2f1_series(a, b, c, x)
