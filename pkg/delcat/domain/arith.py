# This file is part of delcat.
#
# delcat is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# delcat is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with delcat. If not, see <https://www.gnu.org/licenses/>.

"""Exact arithmetic: rationals, QQ[t], QQ(t) and truncated q-series over QQ(t).

Rationals are sympy ``QQ`` elements, polynomials in the rank parameter ``t`` are
elements of the sparse ring ``QQ[t]`` and rational functions are elements of the
fraction field ``QQ(t)``; the field reduces by gcd after every operation.
Truncated q-series keep a tuple of QQ(t) coefficients and multiply, invert and
raise to powers through ``sympy.polys.ring_series`` over QQ(t)[q].
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.polyfuncs import interpolate as lagrange_interpolate
from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_inversion
from sympy.polys.rings import PolyElement, ring

from delcat.core import metrics
from delcat.core.exceptions import (
    ArithmeticDomainError,
    InconsistentSamples,
    InternalDenominator,
    NotIntegerValued,
    ValidationError,
)

log = logging.getLogger("delcat.arith")

DEFAULT_TRUNC = 16

FieldT, T_FRAC = field("t", QQ)
RingT = FieldT.ring
T = RingT.gens[0]

Rat = Any  # QQ element
PolyT = PolyElement
RatFuncT = FracElement


# ---------------------------------------------------------------- rationals

def rat(x: Any) -> Rat:
    if isinstance(x, bool):
        raise ValidationError("Boolean is not a rational", {"value": x})
    if isinstance(x, int):
        return QQ(x)
    if isinstance(x, Fraction):
        return QQ(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rational(x)
    if QQ.of_type(x):
        return x
    try:
        return QQ.convert(x)
    except Exception as e:
        raise ValidationError("Not an exact rational", {"value": x}, cause=e)


def parse_rational(text: str) -> Rat:
    raw = text.strip()
    num, sep, den = raw.partition("/")
    try:
        n = int(num.strip())
        d = int(den.strip()) if sep else 1
    except ValueError as e:
        raise ValidationError("Malformed rational, expected p or p/q", {"text": text}, cause=e)
    if d == 0:
        raise ValidationError("Zero denominator", {"text": text})
    return QQ(n, d)


def is_integral(x: Rat) -> bool:
    return QQ.denom(x) == 1


def rat_to_int(x: Rat) -> int:
    if not is_integral(x):
        raise NotIntegerValued("Rational is not an integer", {"value": rat_str(x)})
    return int(QQ.numer(x))


def rat_str(x: Rat) -> str:
    n, d = int(QQ.numer(x)), int(QQ.denom(x))
    return str(n) if d == 1 else f"{n}/{d}"


# -------------------------------------------------------------- polynomials

def poly_from_coeffs(coeffs: Iterable[Any]) -> PolyT:
    terms = {}
    for k, c in enumerate(coeffs):
        c = rat(c)
        if c:
            terms[(k,)] = c
    return RingT.from_dict(terms)


def poly_coeffs(p: PolyT) -> List[Rat]:
    """Dense coefficient list, index k = coefficient of t^k; [] for zero."""
    if not p:
        return []
    d = degree(p)
    out = [QQ.zero] * (d + 1)
    for (k,), c in p.terms():
        out[k] = c
    return out


def degree(p: PolyT) -> int:
    if not p:
        return -1
    return max(k for (k,), _ in p.terms())


def to_poly(x: Any) -> PolyT:
    if isinstance(x, PolyElement):
        return x
    if isinstance(x, FracElement):
        return as_poly(x)
    return RingT.ground_new(rat(x))


def to_frac(x: Any) -> RatFuncT:
    if isinstance(x, FracElement):
        return x
    if isinstance(x, PolyElement):
        return FieldT.one * x
    return FieldT.one * rat(x)


def as_poly(f: RatFuncT) -> PolyT:
    """Downgrade a rational function whose denominator cancelled."""
    if isinstance(f, PolyElement):
        return f
    if not f.denom.is_ground:
        raise InternalDenominator(
            "Expected a polynomial but a denominator survived",
            {"numer": f.numer.as_expr(), "denom": f.denom.as_expr()},
        )
    return f.numer.mul_ground(QQ.one / f.denom.LC)


def is_poly(f: RatFuncT) -> bool:
    return f.denom.is_ground


def monic_parts(f: RatFuncT) -> Tuple[PolyT, PolyT]:
    lc = f.denom.LC
    return f.numer.mul_ground(QQ.one / lc), f.denom.mul_ground(QQ.one / lc)


def evaluate(p: Any, x: Any) -> Rat:
    """Value of a PolyT or RatFuncT at a rational point."""
    x = rat(x)
    if isinstance(p, FracElement):
        den = evaluate(p.denom, x)
        if not den:
            raise ArithmeticDomainError("Rational function has a pole here", {"at": rat_str(x)})
        return evaluate(p.numer, x) / den
    acc = QQ.zero
    for c in reversed(poly_coeffs(to_poly(p))):
        acc = acc * x + c
    return acc


def binom_poly(p: Any, k: int) -> PolyT:
    """prod_{j<k} (p - j) / k!, the binomial coefficient with polynomial top."""
    if k < 0:
        raise ValidationError("binom_poly needs k >= 0", {"k": k})
    p = to_poly(p)
    acc = RingT.one
    for j in range(k):
        acc = acc * (p - j)
    return acc.mul_ground(QQ(1, math.factorial(k)))


def rational_roots(p: PolyT) -> List[Rat]:
    """Sorted distinct rational roots, read off the linear factors of the square-free part."""
    if not p:
        raise ArithmeticDomainError("The zero polynomial has no finite root set")
    if degree(p) <= 0:
        return []
    _, factors = p.sqf_part().factor_list()
    roots = []
    for f, _mult in factors:
        if degree(f) == 1:
            c = poly_coeffs(f)
            roots.append(-c[0] / c[1])
    return sorted(roots)


# ------------------------------------------------------------ interpolation

def interpolate(samples: Sequence[Tuple[int, Any]], degree_bound: int) -> PolyT:
    """Lagrange interpolation through the first degree_bound+1 distinct nodes.

    Every remaining sample must lie on the result, otherwise InconsistentSamples.
    """
    seen: dict = {}
    for node, value in samples:
        node, value = int(node), rat(value)
        if node in seen and seen[node] != value:
            raise InconsistentSamples("Two values for one node", {"node": node})
        seen[node] = value
    if len(seen) < degree_bound + 1:
        raise InconsistentSamples(
            "Not enough distinct nodes", {"nodes": len(seen), "degree_bound": degree_bound}
        )
    nodes = list(seen)[: degree_bound + 1]
    expr = lagrange_interpolate([(x, QQ.to_sympy(seen[x])) for x in nodes], RingT.symbols[0])
    p = RingT.from_expr(expr)
    for node, value in seen.items():
        if evaluate(p, node) != value:
            raise InconsistentSamples(
                "Sample off the interpolating polynomial",
                {"node": node, "expected": rat_str(value), "degree_bound": degree_bound},
            )
    return p


# --------------------------------------------------------- binomial basis

@dataclass(frozen=True)
class BinomialForm:
    """sum_k coeffs[k] * binom(t, k) with integer coefficients."""

    coeffs: Tuple[int, ...] = ()

    def to_poly(self) -> PolyT:
        return from_binomial(self)


def to_binomial(p: PolyT) -> BinomialForm:
    d = degree(p)
    if d < 0:
        return BinomialForm(())
    row = [evaluate(p, n) for n in range(d + 1)]
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    bad = [rat_str(b) for b in out if not is_integral(b)]
    if bad:
        raise NotIntegerValued("Polynomial is not integer-valued", {"differences": bad})
    return BinomialForm(tuple(int(QQ.numer(b)) for b in out))


def from_binomial(b: BinomialForm) -> PolyT:
    acc = RingT.zero
    for k, c in enumerate(b.coeffs):
        if c:
            acc += binom_poly(T, k).mul_ground(QQ(c))
    return acc


# ----------------------------------------------------------- q-series

@dataclass(frozen=True, eq=False)
class SeriesQ:
    """c_0 + c_1 q + ... + c_N q^N  mod q^{N+1}, coefficients in QQ(t)."""

    trunc: int
    coeffs: Tuple[RatFuncT, ...]

    def __post_init__(self):
        if self.trunc < 0:
            raise ArithmeticDomainError("Negative truncation", {"trunc": self.trunc})
        if len(self.coeffs) != self.trunc + 1:
            raise ArithmeticDomainError(
                "Coefficient count does not match truncation",
                {"trunc": self.trunc, "len": len(self.coeffs)},
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Any], trunc: int) -> "SeriesQ":
        vals = [to_frac(c) for c in list(coeffs)[: trunc + 1]]
        vals += [FieldT.zero] * (trunc + 1 - len(vals))
        return cls(trunc, tuple(vals))

    @classmethod
    def zero(cls, trunc: int) -> "SeriesQ":
        return cls(trunc, (FieldT.zero,) * (trunc + 1))

    @classmethod
    def one(cls, trunc: int) -> "SeriesQ":
        return cls.monomial(0, 1, trunc)

    @classmethod
    def monomial(cls, d: int, c: Any, trunc: int) -> "SeriesQ":
        vals = [FieldT.zero] * (trunc + 1)
        if d <= trunc:
            vals[d] = to_frac(c)
        return cls(trunc, tuple(vals))

    def coefficient(self, d: int) -> RatFuncT:
        return self.coeffs[d] if 0 <= d <= self.trunc else FieldT.zero

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, trunc+1 for the zero series."""
        for d, c in enumerate(self.coeffs):
            if c:
                return d
        return self.trunc + 1

    def truncate(self, trunc: int) -> "SeriesQ":
        if trunc > self.trunc:
            raise ArithmeticDomainError("Cannot extend a truncated series", {"have": self.trunc, "want": trunc})
        return SeriesQ(trunc, self.coeffs[: trunc + 1])

    def shift(self, k: int) -> "SeriesQ":
        """Multiply by q^k."""
        if k < 0:
            raise ArithmeticDomainError("Negative shift", {"k": k})
        vals = [FieldT.zero] * min(k, self.trunc + 1) + list(self.coeffs[: max(0, self.trunc + 1 - k)])
        return SeriesQ(self.trunc, tuple(vals))

    def scale(self, c: Any) -> "SeriesQ":
        c = to_frac(c)
        return SeriesQ(self.trunc, tuple(x * c for x in self.coeffs))

    def is_polynomial_in_t(self) -> bool:
        return all(is_poly(c) for c in self.coeffs)

    def poly_coeffs(self) -> List[PolyT]:
        """Coefficients as PolyT; raises InternalDenominator when one is not."""
        return [as_poly(c) for c in self.coeffs]

    def __add__(self, other: "SeriesQ") -> "SeriesQ":
        _check_trunc(self, other)
        return SeriesQ(self.trunc, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SeriesQ") -> "SeriesQ":
        _check_trunc(self, other)
        return SeriesQ(self.trunc, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "SeriesQ":
        return SeriesQ(self.trunc, tuple(-a for a in self.coeffs))

    def __mul__(self, other: Any) -> "SeriesQ":
        if isinstance(other, SeriesQ):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesQ) or other.trunc != self.trunc:
            return NotImplemented if not isinstance(other, SeriesQ) else False
        return all(not (a - b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((self.trunc, self.coeffs))


def _check_trunc(a: SeriesQ, b: SeriesQ) -> None:
    if a.trunc != b.trunc:
        raise ArithmeticDomainError("Truncation mismatch", {"left": a.trunc, "right": b.trunc})


QRing, Q = ring("q", FieldT.to_domain())


def _to_ring(a: SeriesQ) -> PolyElement:
    return QRing.from_dict({(d,): c for d, c in enumerate(a.coeffs) if c})


def _from_ring(p: PolyElement, trunc: int) -> SeriesQ:
    vals = [FieldT.zero] * (trunc + 1)
    for (d,), c in p.terms():
        if d <= trunc:
            vals[d] = c
    return SeriesQ(trunc, tuple(vals))


def series_mul(a: SeriesQ, b: SeriesQ) -> SeriesQ:
    _check_trunc(a, b)
    metrics.series_multiplications.inc()
    return _from_ring(rs_mul(_to_ring(a), _to_ring(b), Q, a.trunc + 1), a.trunc)


def series_inv(a: SeriesQ) -> SeriesQ:
    if not a.coeffs[0]:
        raise ArithmeticDomainError("Series with zero constant term is not invertible")
    return _from_ring(rs_series_inversion(_to_ring(a), Q, a.trunc + 1), a.trunc)


def geom_product(terms: Iterable[Tuple[int, int, Any]], trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """prod_j (1 - m_j q^{a_j})^{e_j} mod q^{trunc+1}.

    Factors with a_j > trunc contribute 1 and are skipped.
    """
    prec = trunc + 1
    acc = QRing.one
    for a, e, m in terms:
        a, e = int(a), int(e)
        if a <= 0:
            raise ArithmeticDomainError("Exponent a_j must be positive", {"a": a})
        if a > trunc or e == 0:
            continue
        factor = QRing.one - (Q ** a).mul_ground(to_frac(m))
        acc = rs_mul(acc, rs_pow(factor, e, Q, prec), Q, prec)
    metrics.series_multiplications.inc()
    return _from_ring(acc, trunc)


def partition_series(trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """prod_{j>=1} (1 - q^j)^{-1}."""
    return geom_product(((j, -1, 1) for j in range(1, trunc + 1)), trunc)


def euler_product(trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """prod_{j>=1} (1 - q^j)."""
    return geom_product(((j, 1, 1) for j in range(1, trunc + 1)), trunc)
