"""Truncated formal power series in the deformation parameter z.

A series carries exactly order+1 coefficients c0..ck and all arithmetic is
mod z^(k+1). Coefficients default to Fraction but any exact scalar ring with
+, -, * and equality against 0/1 works (ComplexRational in particular); the
variable z itself is always central. Mixing truncation orders is an error,
never a silent coercion.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

__all__ = ["TruncatedSeries"]


def _coerce(c):
    if isinstance(c, float):
        raise TypeError(f"inexact coefficient {c!r}; use Fraction")
    if isinstance(c, int):
        return Fraction(c)
    return c


def _inv_scalar(c):
    rec = getattr(c, "reciprocal", None)
    if rec is not None:
        return rec()
    return 1 / c


class TruncatedSeries:
    __slots__ = ("order", "coeffs", "_low")

    def __init__(self, coeffs, order=None):
        coeffs = tuple(_coerce(c) for c in coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) != order + 1:
            raise ValueError(f"need exactly {order + 1} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs
        self._low = -2  # lazy low_order cache; -2 means not yet computed

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order):
        return cls((Fraction(0),) * (order + 1), order)

    @classmethod
    def one(cls, order):
        return cls.constant(Fraction(1), order)

    @classmethod
    def constant(cls, c, order):
        return cls((_coerce(c),) + (Fraction(0),) * order, order)

    @classmethod
    def z_power(cls, power, order, coeff=1):
        """coeff * z^power, truncated (zero if power exceeds the order)."""
        coeffs = [Fraction(0)] * (order + 1)
        if 0 <= power <= order:
            coeffs[power] = _coerce(coeff)
        return cls(coeffs, order)

    # -- helpers ------------------------------------------------------------

    def _require_same_order(self, other):
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def is_zero(self):
        return self.low_order() is None

    def low_order(self):
        """Index of the first nonzero coefficient, or None for the zero series."""
        if self._low == -2:
            self._low = next((i for i, c in enumerate(self.coeffs) if c != 0), None)
        return self._low

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def divided_by_z(self):
        """Exact division by z; requires zero constant term, drops one order."""
        if self.coeffs[0] != 0:
            raise ValueError("division by z needs zero constant term")
        if self.order == 0:
            raise ValueError("cannot divide an order-0 series by z")
        return TruncatedSeries(self.coeffs[1:], self.order - 1)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coeffs), self.order)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._require_same_order(other)
            k = self.order
            out = [Fraction(0)] * (k + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j in range(k + 1 - i):
                    b = other.coeffs[j]
                    if b != 0:
                        out[i + j] = out[i + j] + a * b
            return TruncatedSeries(out, k)
        if isinstance(other, float):
            return NotImplemented
        c = _coerce(other)
        return TruncatedSeries(tuple(a * c for a in self.coeffs), self.order)

    def __rmul__(self, other):
        if isinstance(other, (TruncatedSeries, float)):
            return NotImplemented
        c = _coerce(other)
        return TruncatedSeries(tuple(c * a for a in self.coeffs), self.order)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers: use inverse() first")
        out = TruncatedSeries.one(self.order)
        for _ in range(n):
            out = out * self
        return out

    # -- transcendental-by-truncation ---------------------------------------

    def exp(self):
        """Sum a^n/n!; requires zero constant term so the sum is finite."""
        if self.coeffs[0] != 0:
            raise ValueError("series exp needs zero constant term")
        acc = TruncatedSeries.one(self.order)
        power = TruncatedSeries.one(self.order)
        for n in range(1, self.order + 1):
            power = power * self
            acc = acc + power * Fraction(1, factorial(n))
        return acc

    def sqrt(self):
        """Unique square root with unit constant term; requires c0 == 1."""
        if self.coeffs[0] != 1:
            raise ValueError("series sqrt needs constant term 1")
        k = self.order
        s = [Fraction(1)] + [Fraction(0)] * k
        for n in range(1, k + 1):
            acc = self.coeffs[n]
            for i in range(1, n):
                acc = acc - s[i] * s[n - i]
            s[n] = acc / 2
        return TruncatedSeries(s, k)

    def inverse(self):
        """Multiplicative inverse; requires nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ValueError("series inverse needs nonzero constant term")
        k = self.order
        b0 = _inv_scalar(self.coeffs[0])
        b = [b0] + [Fraction(0)] * k
        for n in range(1, k + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc = acc + self.coeffs[i] * b[n - i]
            b[n] = -b0 * acc
        return TruncatedSeries(b, k)

    # -- comparison / rendering ---------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                zpow = "z" if i == 1 else f"z^{i}"
                coeff = "" if c == 1 else f"{c}*"
                parts.append(f"{coeff}{zpow}")
        if not parts:
            return "0"
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r})"
