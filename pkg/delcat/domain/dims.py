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


"""Dimension polynomials of simple objects of Rep(GL_t) and Rep(O_t)."""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import Sequence

from sympy.polys.domains import QQ

from delcat.core.exceptions import WeightError
from delcat.domain.arith import (
    FieldT,
    PolyT,
    RingT,
    T,
    as_poly,
    binom_poly,
    interpolate,
    poly_coeffs,
    rat_to_int,
    to_binomial,
    to_frac,
)
from delcat.domain.partitions import EMPTY, Partition, d_lambda, is_dominant, padded_weight

log = logging.getLogger("delcat.dims")


@lru_cache(maxsize=None)
def dim_gl(lam: Partition, mu: Partition) -> PolyT:
    """dim X_{lam,mu}, the interpolated Weyl dimension of [lam, mu]_n."""
    r, s = lam.length, mu.length
    acc = to_frac(d_lambda(lam) * d_lambda(mu))
    for i in range(1, r + 1):
        li = lam[i - 1]
        acc *= to_frac(binom_poly(T + (li - i - s), li)) * QQ(1, math.comb(li + r - i, li))
    for j in range(1, s + 1):
        mj = mu[j - 1]
        acc *= to_frac(binom_poly(T + (mj - j - r), mj)) * QQ(1, math.comb(mj + s - j, mj))
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            acc *= to_frac(T + (1 + lam[i - 1] + mu[j - 1] - i - j)) / to_frac(T + (1 - i - j))
    p = as_poly(acc)
    to_binomial(p)
    return p


@lru_cache(maxsize=None)
def dim_o(lam: Partition) -> PolyT:
    """dim X_lam in Rep(O_t)."""
    r = lam.length
    half = to_frac(T) * QQ(1, 2)
    acc = FieldT.one
    for i in range(1, r + 1):
        li = lam[i - 1]
        num = (half + (li - i)) * to_frac(binom_poly(T + (li - r - i - 1), li))
        den = (half - i) * math.comb(li + r - i, li)
        acc *= num / den
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            li, lj = lam[i - 1], lam[j - 1]
            acc *= to_frac(T + (li + lj - i - j)) * QQ(li - lj + j - i, j - i) / to_frac(T - (i + j))
    p = as_poly(acc)
    to_binomial(p)
    return p


def weyl_dim_gl(weight: Sequence[int], n: int) -> int:
    """Classical Weyl dimension of the GL_n module of highest weight `weight`."""
    if len(weight) != n:
        raise WeightError("Weight length must equal the rank", {"n": n, "len": len(weight)})
    if not is_dominant(weight):
        raise WeightError("Weight is not dominant", {"weight": tuple(weight)})
    acc = QQ.one
    for i in range(n):
        for j in range(i + 1, n):
            acc *= QQ(weight[i] - weight[j] + j - i, j - i)
    return rat_to_int(acc)


def dim_gl_from_oracle(lam: Partition, mu: Partition) -> PolyT:
    """Interpolate dim X_{lam,mu} from Weyl dimensions at large ranks."""
    bound = lam.size + mu.size
    start = lam.length + mu.length + bound + 10
    log.debug("weyl oracle for (%s, %s) from rank %d", lam, mu, start)
    samples = [(n, weyl_dim_gl(padded_weight(lam, mu, n), n)) for n in range(start, start + bound + 2)]
    return interpolate(samples, bound)


def leading_coefficient(p: PolyT):
    coeffs = poly_coeffs(p)
    return coeffs[-1] if coeffs else QQ.zero


def verify_duality(lam: Partition, mu: Partition) -> bool:
    return dim_gl(lam, mu) == dim_gl(mu, lam)


def _tensor_V_printed_rhs(m: int) -> PolyT:
    row = Partition((m,))
    return dim_gl(Partition((m + 1,)), row) + dim_gl(Partition((m, 1)), row)


def verify_tensor_V(m: int) -> bool:
    """X_{m,m} (x) V = X_{m+1,m} + X_{(m,1),m} + X_{m,m-1}; only X_{1,0} for m = 0."""
    if m == 0:
        return dim_gl(EMPTY, EMPTY) * T == dim_gl(Partition((1,)), EMPTY)
    row = Partition((m,))
    lhs = dim_gl(row, row) * T
    return lhs == _tensor_V_printed_rhs(m) + dim_gl(row, Partition((m - 1,)))


def tensor_V_defect(m: int) -> PolyT:
    """dim(X_{m,m} (x) V) minus the two-summand form; equals dim X_{m,m-1} for m >= 1."""
    if m == 0:
        return RingT.zero
    row = Partition((m,))
    return dim_gl(row, row) * T - _tensor_V_printed_rhs(m)


def verify_Q_sequence(ell: int) -> bool:
    """dim(S^l V (x) S^l V*) = sum_{m <= l} dim X_{m,m}."""
    lhs = binom_poly(T + (ell - 1), ell) ** 2
    rhs = sum((dim_gl(Partition((m,)), Partition((m,))) for m in range(ell + 1)), RingT.zero)
    return lhs == rhs


def verify_o_square() -> bool:
    """V (x) V = X_(2) + X_(1,1) + 1 in Rep(O_t)."""
    return dim_o(Partition((2,))) + dim_o(Partition((1, 1))) + 1 == T ** 2
