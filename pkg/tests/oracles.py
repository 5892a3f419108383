"""Independent reference computations used by several test modules."""
from fractions import Fraction

from mvsf.exactnum import factorial, pochhammer
from mvsf.polyalg import Poly


def weighted_integral(p: Poly, n: int) -> Fraction:
    """Exact integral of p(t) t^n (1-t) over [0, 1]."""
    return sum((c * (Fraction(1, m + n + 1) - Fraction(1, m + n + 2)) for m, c in enumerate(p.coeffs)),
               Fraction(0))


def l0_linearization_by_orthogonality(phi, n: int, i: int, j: int) -> dict[int, Fraction]:
    """a_k = <phi_i phi_j, phi_k> / <phi_k, phi_k> for the scalar family."""
    prod = phi[i] * phi[j]
    return {k: weighted_integral(prod * phi[k], n) / weighted_integral(phi[k] * phi[k], n)
            for k in range(0, i + j + 1)}


def l0_recurrence_from_jacobi(n: int, w: int) -> tuple[Fraction, Fraction, Fraction]:
    """(A, B, C) with t p_w = A p_{w-1} + B p_w + C p_{w+1}, p_w = P_w^{(1,n)}(2t-1)/P_w^{(1,n)}(1)."""
    a, b = 1, n
    h = lambda m: pochhammer(a + 1, m) / factorial(m)  # P_m^{(a,b)}(1)
    s = 2 * w + a + b
    c1 = 2 * (w + 1) * (w + a + b + 1) * s
    c2 = (s + 1) * (a * a - b * b)
    c3 = (s + 1) * (s + 2) * s
    c4 = 2 * (w + a) * (w + b) * (s + 2)
    C = Fraction(c1) * h(w + 1) / (2 * c3 * h(w))
    B = (1 - Fraction(c2, c3)) / 2
    A = Fraction(c4) * h(w - 1) / (2 * c3 * h(w)) if w > 0 else Fraction(0)
    return A, B, C
