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


"""Characters of the basic representation of affine sl_t / gl_t and Sugawara constants."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from delcat.core.exceptions import NoStabilization, SizeMismatch, ValidationError, WeightError
from delcat.domain.arith import (
    DEFAULT_TRUNC,
    PolyT,
    RatFuncT,
    SeriesQ,
    T,
    evaluate,
    geom_product,
    partition_series,
    rat,
    to_frac,
)
from delcat.domain.partitions import Partition, is_dominant, padded_weight, weight_norm

log = logging.getLogger("delcat.affine")


def _check_label(lam: Partition, mu: Partition) -> None:
    if lam.size != mu.size:
        raise SizeMismatch("Affine label needs |lam| = |mu|", {"lam": str(lam), "mu": str(mu)})


def c_finite(weight: Sequence[int], trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """C_{nu,n}(q) = q^{nu^2/2} prod_{i<j} (1 - q^{nu_i - nu_j + j - i}) / prod_j (1 - q^j)^{n-1}."""
    nu = tuple(int(x) for x in weight)
    n = len(nu)
    if n == 0:
        raise WeightError("Empty weight")
    if not is_dominant(nu):
        raise WeightError("Weight is not dominant", {"weight": nu})
    if sum(nu):
        raise WeightError("Weight is not traceless", {"weight": nu})
    norm = weight_norm(nu)
    if norm % 2:
        raise WeightError("Weight has odd norm", {"weight": nu, "norm": norm})
    lead = norm // 2
    if lead > trunc:
        return SeriesQ.zero(trunc)
    terms: List[Tuple[int, int, int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            terms.append((nu[i] - nu[j] + j - i, 1, 1))
    terms += [(j, -(n - 1), 1) for j in range(1, trunc + 1)]
    return geom_product(terms, trunc).shift(lead)


def c_zero_finite(n: int, trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """prod_{d<n} (1 - q^d)^{n-d} / prod_j (1 - q^j)^{n-1}, the nu = 0 case."""
    terms = [(d, n - d, 1) for d in range(1, n)]
    terms += [(j, -(n - 1), 1) for j in range(1, trunc + 1)]
    return geom_product(terms, trunc)


def c_zero_infinity(trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """prod_{j>=2} (1 - q^j)^{-(j-1)}."""
    return geom_product(((j, -(j - 1), 1) for j in range(2, trunc + 1)), trunc)


def _row_terms(parts: Tuple[int, ...]) -> List[Tuple[int, int, int]]:
    r = len(parts)
    terms = []
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            terms.append((parts[i - 1] - parts[j - 1] + j - i, 1, 1))
            terms.append((j - i, -1, 1))
    for i in range(1, r + 1):
        for j in range(parts[i - 1]):
            terms.append((r + 1 + j - i, -1, 1))
    return terms


def c_infinity(lam: Partition, mu: Partition, trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """Stable limit C_{lam,mu,inf}(q) of C_{[lam,mu]_n, n}(q)."""
    _check_label(lam, mu)
    lead = (weight_norm(lam.parts) + weight_norm(mu.parts)) // 2
    if lead > trunc:
        return SeriesQ.zero(trunc)
    rows = geom_product(_row_terms(lam.parts) + _row_terms(mu.parts), trunc)
    return (c_zero_infinity(trunc) * rows).shift(lead)


def c_infinity_tilde(lam: Partition, mu: Partition, trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """Fock-space twist: C_{lam,mu,inf}(q) prod_i (1 - q^i)^{-1}."""
    return c_infinity(lam, mu, trunc) * partition_series(trunc)


def c_pp_display(p: int, trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """q^{p^2} C_{0,0,inf}(q) prod_{j<=p} (1 - q^j)^{-2}."""
    if p * p > trunc:
        return SeriesQ.zero(trunc)
    factor = geom_product(((j, -2, 1) for j in range(1, p + 1)), trunc)
    return (c_zero_infinity(trunc) * factor).shift(p * p)


def default_rank_cap(lam: Partition, trunc: int) -> int:
    return 2 * trunc + lam.size + 4


def stabilization_check(lam: Partition, mu: Partition, trunc: int, n_cap: Optional[int] = None) -> int:
    """Least rank n at which c_finite([lam,mu]_n) and c_finite([lam,mu]_{n+1}) equal the limit."""
    _check_label(lam, mu)
    cap = n_cap if n_cap is not None else default_rank_cap(lam, trunc)
    target = c_infinity(lam, mu, trunc)
    start = max(1, lam.length + mu.length)
    cache: Dict[int, bool] = {}

    def agrees(n: int) -> bool:
        if n not in cache:
            cache[n] = c_finite(padded_weight(lam, mu, n), trunc) == target
        return cache[n]

    for n in range(start, cap + 1):
        if agrees(n) and agrees(n + 1):
            log.debug("(%s, %s) stabilizes at rank %d, trunc %d", lam, mu, n, trunc)
            return n
    raise NoStabilization(
        "Finite-rank characters never matched the limit",
        {"lam": str(lam), "mu": str(mu), "trunc": trunc, "cap": cap},
    )


# ---------------------------------------------------------------- sugawara

@dataclass(frozen=True)
class LieFamily:
    name: str
    dim_g: PolyT
    dual_coxeter: PolyT
    simple: bool = True


LIE_FAMILIES: Dict[str, LieFamily] = {
    "sl": LieFamily("sl", T ** 2 - 1, T),
    "gl": LieFamily("gl", T ** 2, T, simple=False),
    "o": LieFamily("o", (T ** 2 - T) * rat("1/2"), T - 2),
    "sp": LieFamily("sp", T * (2 * T + 1), 2 * T + 2),
}


def lie_family(name: str) -> LieFamily:
    try:
        return LIE_FAMILIES[name]
    except KeyError:
        raise ValidationError("Unknown Lie family", {"family": name, "known": sorted(LIE_FAMILIES)})


@dataclass(frozen=True)
class SugawaraConstants:
    family: str
    level: object
    critical: PolyT
    central_charge: RatFuncT


def sugawara_constants(family: LieFamily, k) -> SugawaraConstants:
    """Critical level -g and central charge c = k dim(g) / (k + g)."""
    if not family.simple:
        raise ValidationError("Central charge formula needs a simple Lie algebra", {"family": family.name})
    k = rat(k)
    denom = to_frac(family.dual_coxeter + k)
    if not denom:
        raise ValidationError("Level is critical for every t", {"family": family.name, "k": k})
    c = to_frac(family.dim_g) * k / denom
    return SugawaraConstants(family.name, k, -family.dual_coxeter, c)


def sugawara_degree_gap(constants: SugawaraConstants) -> int:
    """deg numerator - deg denominator of c, 1 for nonzero k."""
    f = constants.central_charge
    if not f:
        return 0
    return f.numer.degree() - f.denom.degree()


def central_charge_at(constants: SugawaraConstants, t) -> object:
    return evaluate(constants.central_charge, t)
