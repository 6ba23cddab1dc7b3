"""Polynomial symbols ``b(z) = sum_m c_m z**m``."""
import numpy as np
from numpy.polynomial import polynomial as P


class TaylorSymbol:
    """Finite Taylor coefficient list ``(c_0, ..., c_M)``.

    Trailing zeros are stripped, so ``degree`` is the true degree; the zero
    polynomial is stored as ``[0]`` with degree 0.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:1] * 0
        c.setflags(write=False)
        self.coeffs = c

    @classmethod
    def monomial(cls, m, coeff=1.0):
        c = np.zeros(m + 1, dtype=complex)
        c[m] = coeff
        return cls(c)

    @property
    def degree(self):
        return self.coeffs.size - 1

    def is_zero(self):
        return self.coeffs.size == 1 and self.coeffs[0] == 0

    def coeff(self, m):
        return self.coeffs[m] if 0 <= m < self.coeffs.size else 0j

    def padded(self, n):
        """Coefficients as an array of length ``n`` (zero padded or cut)."""
        out = np.zeros(n, dtype=complex)
        k = min(n, self.coeffs.size)
        out[:k] = self.coeffs[:k]
        return out

    def __call__(self, z):
        return P.polyval(np.asarray(z, dtype=complex), self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TaylorSymbol):
            return TaylorSymbol(P.polymul(self.coeffs, other.coeffs))
        return TaylorSymbol(self.coeffs * other)

    __rmul__ = __mul__

    def __add__(self, other):
        return TaylorSymbol(P.polyadd(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return TaylorSymbol(P.polysub(self.coeffs, other.coeffs))

    def conj_coeffs(self):
        return TaylorSymbol(np.conj(self.coeffs))

    def __eq__(self, other):
        return isinstance(other, TaylorSymbol) and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        return f"TaylorSymbol({self.coeffs.tolist()})"


def as_symbol(b):
    """Accept a :class:`TaylorSymbol`, a coefficient sequence or a scalar."""
    return b if isinstance(b, TaylorSymbol) else TaylorSymbol(b)
