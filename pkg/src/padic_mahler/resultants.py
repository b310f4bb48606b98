"""Resultants: Sylvester/Bareiss oracle and companion-matrix fast paths.

The signed resultant of f = a*prod(t - alpha_i), g = b*prod(t - beta_j) is

    R(f, g) = a^deg(g) * b^deg(f) * prod_{i,j} (alpha_i - beta_j),

the determinant of the Sylvester matrix.  Two independent routes are kept
deliberately: fraction-free Bareiss elimination on the Sylvester matrix
(the oracle), and exact companion-matrix powering for the cyclic resultants
R(f, t^n - 1) and R(f, 1 + t + ... + t^(n-1)) (the fast path).  Their
agreement is itself part of the test suite.

Conventions: R(0, g) = 0 and R(c, g) = c^deg(g) for constants, so
R(1, g) = 1.  Laurent inputs are normalized (min exponent 0, positive
leading coefficient) before any resultant is taken.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import ConvergenceError, DomainError, ZeroPolynomialError
from .ntheory import check_prime, vp_int
from .polynomials import (
    LaurentPolynomial,
    all_ones_polynomial,
    normalize,
    power_minus_one,
)

# -- Bareiss --------------------------------------------------------------


def bareiss_determinant(matrix) -> int:
    """Exact determinant of a square integer matrix by fraction-free
    (single-step Bareiss) elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _descending_int_coeffs(f: LaurentPolynomial):
    """Clear denominators; return (integer coeffs highest-first, multiplier)
    with multiplier * f integral."""
    coeffs = f.coefficients_ascending()
    mult = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [int(c * mult) for c in coeffs]
    return list(reversed(ints)), mult


def sylvester_matrix(f_desc, g_desc):
    """Sylvester matrix from descending integer coefficient lists."""
    m = len(f_desc) - 1
    n = len(g_desc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + f_desc + [0] * (size - i - m - 1))
    for i in range(m):
        rows.append([0] * i + g_desc + [0] * (size - i - n - 1))
    return rows


def resultant(f: LaurentPolynomial, g: LaurentPolynomial) -> Fraction:
    """Signed exact resultant via Bareiss elimination on the Sylvester
    matrix.  Laurent inputs are replaced by their normalizations."""
    if f.is_zero or g.is_zero:
        return Fraction(0)
    f = normalize(f)
    g = normalize(g)
    df, dg = f.degree, g.degree
    if df == 0:
        return f.leading_coefficient**dg
    if dg == 0:
        return g.leading_coefficient**df
    fd, mf = _descending_int_coeffs(f)
    gd, mg = _descending_int_coeffs(g)
    det = bareiss_determinant(sylvester_matrix(fd, gd))
    return Fraction(det) / (Fraction(mf) ** dg * Fraction(mg) ** df)


# -- companion-matrix machinery -------------------------------------------


def _scaled_companion(f: LaurentPolynomial):
    """(B, a, d): B = a*C with C the companion matrix of f/a, a = leading
    coefficient, d = degree.  B is an integer matrix; f must be integral
    and normalized with d >= 1."""
    coeffs = f.integer_coefficients_ascending()  # c_0 .. c_d
    d = len(coeffs) - 1
    a = coeffs[d]
    B = [[0] * d for _ in range(d)]
    for i in range(d - 1):
        B[i + 1][i] = a
    for i in range(d):
        B[i][d - 1] = -coeffs[i]
    return B, a, d


def _mat_mul(A, B, mod=None):
    n = len(A)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for k in range(n):
            a = Ai[k]
            if a:
                Bk = B[k]
                row = out[i]
                for j in range(n):
                    row[j] += a * Bk[j]
        if mod is not None:
            out[i] = [x % mod for x in out[i]]
    return out


def _identity(n, scale=1):
    return [[scale if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_add_scalar(A, s, mod=None):
    """A + s*I."""
    out = [row[:] for row in A]
    for i in range(len(A)):
        out[i][i] += s
    if mod is not None:
        out = [[x % mod for x in row] for row in out]
    return out


def _power_and_ones_sum(B, a, n, mod=None):
    """(B^n, H_n, a^n) with H_n = sum_{i<n} a^(n-1-i) B^i, all exact
    integers (reduced mod ``mod`` when given), by binary recursion."""
    d = len(B)
    if n == 1:
        return [row[:] for row in B], _identity(d), a
    P, H, an = _power_and_ones_sum(B, a, n // 2, mod)
    # H_{2m} = (a^m I + B^m) H_m ; B^{2m} = (B^m)^2
    H = _mat_mul(_mat_add_scalar(P, an, mod), H, mod)
    P = _mat_mul(P, P, mod)
    an = an * an if mod is None else an * an % mod
    if n % 2:
        # H_{k+1} = a^k I + B H_k ; B^{k+1} = B^k B
        H = _mat_add_scalar(_mat_mul(B, H, mod), an, mod)
        P = _mat_mul(P, B, mod)
        an = an * a if mod is None else an * a % mod
    return P, H, an


def berkowitz_determinant_mod(A, mod: int) -> int:
    """Division-free determinant of a square matrix over Z/mod."""
    n = len(A)
    if n == 0:
        return 1 % mod
    poly = [1, (-A[0][0]) % mod]
    for i in range(1, n):
        R = A[i][:i]
        S = [A[k][i] for k in range(i)]
        M = [row[:i] for row in A[:i]]
        q = [1, (-A[i][i]) % mod]
        vec = S
        for _ in range(i):
            q.append((-sum(r * v for r, v in zip(R, vec))) % mod)
            vec = [sum(M[r][c] * vec[c] for c in range(i)) % mod
                   for r in range(i)]
        new = [0] * (i + 2)
        for k in range(i + 2):
            acc = 0
            for j in range(len(poly)):
                if 0 <= k - j < len(q):
                    acc += q[k - j] * poly[j]
            new[k] = acc % mod
        poly = new
    det = poly[n] if n % 2 == 0 else -poly[n]
    return det % mod


# -- cyclic resultants -----------------------------------------------------


def cyclic_resultant(f: LaurentPolynomial, n: int, variant: str = "ones") -> int:
    """Signed exact R(f, t^n - 1) (variant="full") or R(f, nu) with
    nu = 1 + t + ... + t^(n-1) (variant="ones").

    f must be nonzero with integer coefficients; it is normalized first.
    Computed as a^n det(C^n - I) resp. a^(n-1) det(nu(C)) over the scaled
    integer companion matrix, with binary exponentiation.  "nu" is accepted
    as an alias for "ones".
    """
    if variant == "nu":
        variant = "ones"
    if variant not in ("ones", "full"):
        raise DomainError(f"unknown cyclic resultant variant {variant!r}")
    if n < 1:
        raise DomainError("need n >= 1")
    if f.is_zero:
        raise ZeroPolynomialError("cyclic resultant of the zero polynomial")
    f = normalize(f)
    if not f.is_integral:
        raise DomainError("cyclic resultants require integer coefficients")
    d = f.degree
    a = int(f.leading_coefficient)
    if d == 0:
        return a**n if variant == "full" else a ** (n - 1)
    B, a, d = _scaled_companion(f)
    if variant == "full":
        P, _, an = _power_and_ones_sum(B, a, n)
        M = _mat_add_scalar(P, -an)
        det = bareiss_determinant(M)
        denom = a ** (n * (d - 1))
    else:
        _, H, _ = _power_and_ones_sum(B, a, n)
        det = bareiss_determinant(H)
        denom = a ** ((n - 1) * (d - 1))
    assert det % denom == 0, "companion scaling must divide exactly"
    return det // denom


def cyclic_resultant_sylvester(f: LaurentPolynomial, n: int,
                               variant: str = "ones") -> int:
    """Sylvester-matrix oracle for cyclic_resultant (slow, independent)."""
    g = power_minus_one(n) if variant == "full" else all_ones_polynomial(n)
    value = resultant(f, g)
    assert value.denominator == 1
    return int(value)


def cyclic_resultant_valuation(f: LaurentPolynomial, n: int, p: int,
                               gauss_bound: int | None = None) -> int:
    """Exact v_p of cyclic_resultant(f, n, "ones"), computed modulo a power
    of p large enough to witness the valuation.

    The residue of the scaled determinant modulo p^K is an exact image of
    the true integer; a nonzero residue therefore certifies the valuation.
    If the residue vanishes the working precision doubles, so the answer is
    always the exact valuation (the resultant itself must be nonzero, which
    callers guarantee by excluding n-th roots of unity among the roots).
    """
    check_prime(p)
    if f.is_zero:
        raise ZeroPolynomialError("cyclic resultant of the zero polynomial")
    f = normalize(f)
    if not f.is_integral:
        raise DomainError("cyclic resultants require integer coefficients")
    d = f.degree
    a = int(f.leading_coefficient)
    if d == 0:
        return (n - 1) * vp_int(a, p)
    if gauss_bound is None:
        gauss_bound = min(vp_int(int(c), p) for c in f.terms.values())
    va = vp_int(a, p)
    shift = (n - 1) * (d - 1) * va
    K = shift + n * gauss_bound + (d + 2) * (n.bit_length() + 8) + 32
    B, a, d = _scaled_companion(f)
    for _ in range(8):
        mod = p**K
        _, H, _ = _power_and_ones_sum(B, a, n, mod)
        det = berkowitz_determinant_mod(H, mod)
        if det != 0:
            v = vp_int(det, p)
            if v < K - 1:  # strictly inside the window: certified
                return v - shift
        K *= 2
    raise ConvergenceError(
        "could not certify the resultant valuation; is R(f, nu_n) zero?")
