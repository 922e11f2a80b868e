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


"""Modified Bernoulli polynomials and central characters of Rep(GL_t) objects."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, List, Sequence, Tuple

from sympy.polys.domains import QQ

from delcat.domain.arith import (
    PolyT,
    Rat,
    RingT,
    SeriesQ,
    T,
    as_poly,
    interpolate,
    rat,
    series_inv,
    series_mul,
)
from delcat.domain.partitions import Partition, padded_weight, partitions_upto

log = logging.getLogger("delcat.center")

EGF_ORDER = 8


def bernoulli_sum(i: int, n: int) -> Rat:
    """sum_{k=1}^n ((n+1)/2 - k)^i."""
    mid = QQ(n + 1, 2)
    return sum(((mid - k) ** i for k in range(1, n + 1)), QQ.zero)


@lru_cache(maxsize=None)
def bernoulli_P(i: int) -> PolyT:
    """P_i(t), interpolated from the defining sum at n = 1..i+3."""
    samples = [(n, bernoulli_sum(i, n)) for n in range(1, i + 4)]
    return interpolate(samples, i + 1)


@dataclass(frozen=True)
class CentralCharacter:
    imax: int
    values: Tuple[PolyT, ...]

    def __getitem__(self, i: int) -> PolyT:
        """chi(C_i), 1-based."""
        return self.values[i - 1]


def _half_shift() -> PolyT:
    return (T + 1).mul_ground(QQ(1, 2))


def chi_gl(lam: Sequence[Any], mu: Sequence[Any], imax: int) -> CentralCharacter:
    """chi_{lam,mu}(C_i) for i = 1..imax; entries of lam, mu may be any rationals."""
    lam = [rat(x) for x in lam]
    mu = [rat(x) for x in mu]
    c = _half_shift()
    values = []
    for i in range(1, imax + 1):
        acc = bernoulli_P(i)
        for j, lj in enumerate(lam, start=1):
            acc += (c + (lj - j)) ** i - (c - j) ** i
        for j, mj in enumerate(mu, start=1):
            acc += (-c + (j - mj)) ** i - (-c + j) ** i
        values.append(acc)
    return CentralCharacter(imax, tuple(values))


def chi_at_rank(lam: Partition, mu: Partition, i: int, n: int) -> Rat:
    """sum_j ([lam,mu]_n + rho_n)_j^i at an integer rank n."""
    w = padded_weight(lam, mu, n)
    mid = QQ(n + 1, 2)
    return sum(((w[j - 1] + mid - j) ** i for j in range(1, n + 1)), QQ.zero)


@lru_cache(maxsize=None)
def _chi_partitions(lam: Partition, mu: Partition, imax: int) -> CentralCharacter:
    return chi_gl(lam.parts, mu.parts, imax)


def sigma_probe(chi: CentralCharacter, bound: int) -> List[Tuple[Partition, Partition]]:
    """Partition pairs of size <= bound whose central character equals chi.

    An empty answer only means there is no witness within the bound.
    """
    found = []
    labels = partitions_upto(bound)
    for lam in labels:
        for mu in labels:
            if _chi_partitions(lam, mu, chi.imax) == chi:
                found.append((lam, mu))
    log.debug("sigma probe at bound %d: %d witnesses", bound, len(found))
    return found


# ------------------------------------------------------ generating functions

def _sinh_over_z(scale: PolyT, order: int) -> SeriesQ:
    """sinh(scale*z)/z as a series in z."""
    coeffs = []
    for k in range(order + 1):
        if k % 2:
            coeffs.append(RingT.zero)
        else:
            coeffs.append((scale ** (k + 1)).mul_ground(QQ(1, math.factorial(k + 1))))
    return SeriesQ.from_coeffs(coeffs, order)


def bernoulli_egf(order: int = EGF_ORDER) -> SeriesQ:
    """sinh(tz/2)/sinh(z/2) to order z^order."""
    num = _sinh_over_z(T.mul_ground(QQ(1, 2)), order)
    den = _sinh_over_z(RingT.ground_new(QQ(1, 2)), order)
    return series_mul(num, series_inv(den))


def bernoulli_egf_check(order: int = EGF_ORDER) -> bool:
    """i! [z^i] sinh(tz/2)/sinh(z/2) == P_i(t) for i <= order."""
    egf = bernoulli_egf(order)
    for i in range(order + 1):
        if as_poly(egf.coefficient(i)).mul_ground(QQ(math.factorial(i))) != bernoulli_P(i):
            log.warning("generating function disagrees with P_%d", i)
            return False
    return True


def printed_egf_value(i: int, n: int) -> Rat:
    """i! [z^i] sinh(z(n+1)/2)/sinh(z) at an integer n, the form that disagrees with P_i."""
    order = i
    num = _sinh_over_z(RingT.ground_new(QQ(n + 1, 2)), order)
    den = _sinh_over_z(RingT.one, order)
    coeff = as_poly(series_mul(num, series_inv(den)).coefficient(i))
    return coeff.mul_ground(QQ(math.factorial(i))).LC if coeff else QQ.zero
