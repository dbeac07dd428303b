"""
Exact rational polynomials, Chow classes of projective space and truncated
power series.

Coefficients are Python ``int`` or ``fractions.Fraction``; a Fraction whose
denominator is 1 is stored as ``int`` so the common integer case stays on the
fast path. Nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Sequence

from .errors import ConsistencyError, UsageError

__all__ = [
    "norm",
    "DPoly",
    "HClass",
    "USeries",
    "series_mul",
    "series_inverse",
    "reverse_poly",
    "binom",
]


def norm(c) -> int | Fraction:
    """Return ``c`` as an exact rational, demoting integral Fractions to int."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"inexact coefficient {c!r}")


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _trim(cs: list) -> tuple:
    end = len(cs)
    while end and cs[end - 1] == 0:
        end -= 1
    return tuple(cs[:end])


class DPoly:
    """Univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are trimmed,
    so the zero polynomial has empty coefficients and degree ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([norm(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("DPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "DPoly":
        # caller guarantees normalised, trimmed coefficients
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def const(cls, c) -> "DPoly":
        return cls((c,))

    @classmethod
    def var(cls) -> "DPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> "DPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, DPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == DPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs, "d")

    @staticmethod
    def _coerce(other) -> "DPoly":
        if isinstance(other, DPoly):
            return other
        return DPoly.const(other)

    def __add__(self, other):
        o = DPoly._coerce(other).coeffs
        a = self.coeffs
        if len(a) < len(o):
            a, o = o, a
        out = list(a)
        for i, c in enumerate(o):
            out[i] = norm(out[i] + c)
        return DPoly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return DPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-DPoly._coerce(other))

    def __rsub__(self, other):
        return DPoly._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, DPoly):
            c = norm(other)
            if c == 0:
                return DPoly._raw(())
            return DPoly._raw(tuple(norm(x * c) for x in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DPoly._raw(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return DPoly._raw(_trim([norm(c) for c in out]))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise UsageError("negative polynomial power")
        out, base = DPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` may be a number or a DPoly."""
        acc = DPoly.const(0) if isinstance(x, DPoly) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if isinstance(acc, DPoly) else norm(acc)

    def shift(self, k: int) -> "DPoly":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return DPoly._raw((0,) * k + self.coeffs)

    def divmod(self, other: "DPoly") -> tuple["DPoly", "DPoly"]:
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        b = other.coeffs
        lead = b[-1]
        q = [0] * max(len(rem) - len(b) + 1, 0)
        for k in range(len(q) - 1, -1, -1):
            c = norm(Fraction(rem[k + len(b) - 1]) / lead)
            q[k] = c
            if c:
                for j, y in enumerate(b):
                    rem[k + j] = norm(rem[k + j] - c * y)
        return DPoly(q), DPoly(rem[: len(b) - 1])

    def exact_div(self, other: "DPoly") -> "DPoly":
        q, r = self.divmod(other)
        if r:
            raise ConsistencyError(f"{self!r} is not divisible by {other!r}")
        return q


def format_poly(coeffs: Sequence, var: str, descending: bool = True) -> str:
    terms = []
    idx = range(len(coeffs) - 1, -1, -1) if descending else range(len(coeffs))
    for i in idx:
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


class HClass:
    """A class in the Chow ring Z[H]/H^(N+1) of P^N.

    ``coeffs[c]`` is the coefficient of H^c, i.e. the degree of the
    codimension-c piece. Always exactly N+1 entries.
    """

    __slots__ = ("ambient_dim", "coeffs")

    def __init__(self, ambient_dim: int, coeffs: Iterable = ()):
        if ambient_dim < 0:
            raise UsageError("ambient dimension must be non-negative")
        cs = [norm(c) for c in coeffs]
        if len(cs) > ambient_dim + 1:
            if any(cs[ambient_dim + 1:]):
                raise UsageError(f"class has terms above H^{ambient_dim}")
            cs = cs[: ambient_dim + 1]
        cs += [0] * (ambient_dim + 1 - len(cs))
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("HClass is immutable")

    @classmethod
    def from_poly(cls, ambient_dim: int, p: DPoly) -> "HClass":
        return cls(ambient_dim, p.coeffs)

    @classmethod
    def truncated(cls, ambient_dim: int, p: DPoly) -> "HClass":
        """Class of ``p`` reduced modulo H^(N+1)."""
        return cls(ambient_dim, p.coeffs[: ambient_dim + 1])

    @classmethod
    def projective_space(cls, ambient_dim: int) -> "HClass":
        """c(T P^N) = (1+H)^(N+1) mod H^(N+1)."""
        return cls(ambient_dim, [comb(ambient_dim + 1, c) for c in range(ambient_dim + 1)])

    def to_poly(self) -> DPoly:
        return DPoly(self.coeffs)

    def __getitem__(self, c: int):
        return self.coeffs[c] if 0 <= c <= self.ambient_dim else 0

    def _check(self, other: "HClass"):
        if not isinstance(other, HClass) or other.ambient_dim != self.ambient_dim:
            raise UsageError("classes live in different projective spaces")

    def __add__(self, other):
        self._check(other)
        return HClass(self.ambient_dim, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return HClass(self.ambient_dim, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return HClass(self.ambient_dim, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, HClass):
            self._check(other)
            return HClass.truncated(self.ambient_dim, self.to_poly() * other.to_poly())
        if isinstance(other, DPoly):
            return HClass.truncated(self.ambient_dim, self.to_poly() * other)
        return HClass(self.ambient_dim, [a * other for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HClass):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ambient_dim, self.coeffs))

    def __repr__(self):
        return f"HClass({self.ambient_dim}, {list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs, "H")

    @property
    def codim(self) -> int | None:
        """Lowest H-power with nonzero coefficient (codimension of the support)."""
        for c, a in enumerate(self.coeffs):
            if a:
                return c
        return None

    @property
    def euler(self):
        """Degree of the zero-dimensional piece."""
        return self.coeffs[-1]

    def scale_H(self, d) -> "HClass":
        """Substitute H -> d*H."""
        return HClass(self.ambient_dim, [a * d**c for c, a in enumerate(self.coeffs)])


class USeries:
    """Power series in ``u`` truncated above order T, with DPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise UsageError("truncation order must be non-negative")
        cs = [c if isinstance(c, DPoly) else DPoly.const(c) for c in coeffs][: order + 1]
        cs += [DPoly._raw(())] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("USeries is immutable")

    @classmethod
    def one(cls, order: int) -> "USeries":
        return cls(order, [1])

    def __getitem__(self, k: int) -> DPoly:
        return self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"USeries({self.order}, {[list(c.coeffs) for c in self.coeffs]})"

    def __add__(self, other: "USeries") -> "USeries":
        _same_order(self, other)
        return USeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "USeries") -> "USeries":
        _same_order(self, other)
        return USeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, USeries):
            return series_mul(self, other)
        return USeries(self.order, [a * other for a in self.coeffs])

    __rmul__ = __mul__

    def scale_u(self, p) -> "USeries":
        """Substitute u -> p*u, i.e. multiply the u^k coefficient by p^k."""
        p = DPoly._coerce(p)
        out, pk = [], DPoly.const(1)
        for c in self.coeffs:
            out.append(c * pk)
            pk = pk * p
        return USeries(self.order, out)


def _same_order(a: USeries, b: USeries):
    if a.order != b.order:
        raise UsageError(f"truncation orders differ: {a.order} != {b.order}")


def series_mul(a: USeries, b: USeries) -> USeries:
    """Truncated product of two series of the same order."""
    _same_order(a, b)
    T = a.order
    out = []
    for k in range(T + 1):
        acc = DPoly._raw(())
        for i in range(k + 1):
            x, y = a.coeffs[i], b.coeffs[k - i]
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return USeries(T, out)


def series_inverse(a: USeries) -> USeries:
    """Multiplicative inverse modulo u^(T+1); the constant term must be a nonzero scalar."""
    c0 = a.coeffs[0]
    if c0.degree != 0:
        raise UsageError("series constant term must be a nonzero scalar")
    inv0 = norm(Fraction(1) / Fraction(c0[0]))
    out = [DPoly.const(inv0)]
    for k in range(1, a.order + 1):
        acc = DPoly._raw(())
        for i in range(1, k + 1):
            if a.coeffs[i] and out[k - i]:
                acc = acc + a.coeffs[i] * out[k - i]
        out.append(acc * (-inv0))
    return USeries(a.order, out)


def reverse_poly(f: DPoly, n: int) -> DPoly:
    """Coefficient reversal g_i = f_(n-i); requires deg f <= n."""
    if f.degree is not None and f.degree > n:
        raise UsageError(f"degree {f.degree} exceeds reversal bound {n}")
    cs = list(f.coeffs) + [0] * (n + 1 - len(f.coeffs))
    return DPoly(cs[::-1])
