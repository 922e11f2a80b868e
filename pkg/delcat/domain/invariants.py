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


"""Hilbert series of invariant rings: necklaces, harmonic parts and the Kostant identity."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from sympy.functions.combinatorial.numbers import totient
from sympy.ntheory import divisors
from sympy.utilities.iterables import necklaces

from delcat.core.exceptions import ValidationError
from delcat.domain.arith import (
    DEFAULT_TRUNC,
    PolyT,
    RatFuncT,
    SeriesQ,
    T,
    binom_poly,
    euler_product,
    geom_product,
    to_poly,
)
from delcat.domain.dims import dim_gl
from delcat.domain.partitions import Partition
from delcat.domain.symfunc import iter_sizes, kronecker, principal_spec

log = logging.getLogger("delcat.invariants")

GL = "gl"
OSP = "osp"
VARIANTS = (GL, OSP)

ENUMERATION_LIMIT = 12


@dataclass(frozen=True)
class NecklaceFamily:
    variant: str
    letters: int

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValidationError("Unknown necklace variant", {"variant": self.variant})
        if self.letters < 1:
            raise ValidationError("Need at least one letter", {"m": self.letters})


def _canonical_rotation(word: Tuple[int, ...]) -> Tuple[int, ...]:
    return min(word[i:] + word[:i] for i in range(len(word)))


def _enumerate(family: NecklaceFamily, j: int) -> int:
    m = family.letters
    if family.variant == GL:
        return sum(1 for _ in necklaces(j, m))
    count = 0
    for word in necklaces(j, m, free=True):
        word = tuple(word)
        mirrored = _canonical_rotation(word[::-1]) == _canonical_rotation(word)
        if j % 2 and mirrored:
            continue
        count += 1
    return count


def gl_necklace_count(j: int, m: int) -> int:
    """(1/j) sum_{d | j} phi(d) m^{j/d}."""
    return sum(int(totient(d)) * m ** (j // d) for d in divisors(j)) // j


def _reflection_fixed(j: int, m: int) -> int:
    if j % 2:
        return m ** ((j + 1) // 2)
    return (m + 1) * m ** (j // 2) // 2


def osp_necklace_count(j: int, m: int) -> int:
    """Bracelets of length j, minus reversal-symmetric ones when j is odd."""
    bracelets = (gl_necklace_count(j, m) + _reflection_fixed(j, m)) // 2
    return bracelets - (_reflection_fixed(j, m) if j % 2 else 0)


@lru_cache(maxsize=None)
def necklace_generators(family: NecklaceFamily, j: int) -> int:
    """Number of degree-j generators C_w.

    Exhaustive enumeration up to ENUMERATION_LIMIT; beyond it the counting formula.
    """
    if j < 1:
        raise ValidationError("Generator degree must be positive", {"j": j})
    if j <= ENUMERATION_LIMIT:
        return _enumerate(family, j)
    if family.variant == GL:
        return gl_necklace_count(j, family.letters)
    return osp_necklace_count(j, family.letters)


def hilb_multi_inv(family: NecklaceFamily, trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """Hilbert series of the free commutative algebra on the necklace generators."""
    return geom_product(
        ((j, -necklace_generators(family, j), 1) for j in range(1, trunc + 1)),
        trunc,
    )


def verify_hilser(m: int, trunc: int) -> bool:
    """hilb_multi_inv(gl, m) == prod_j (1 - m q^j)^{-1}."""
    closed = geom_product(((j, -1, m) for j in range(1, trunc + 1)), trunc)
    return hilb_multi_inv(NecklaceFamily(GL, m), trunc) == closed


# ------------------------------------------------------------- harmonic part

def harmonic_hilbert(lam: Partition, mu: Partition, trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """Hilbert series of Hom(X_{lam,mu}, E) = (s_lam * s_mu)(q, q^2, ...)."""
    return principal_spec(kronecker(lam, mu), trunc)


def sym_alg_hilbert(dim_g, trunc: int = DEFAULT_TRUNC) -> List[PolyT]:
    """Graded dimensions binom(dim_g + d - 1, d) of S(g), d = 0..trunc."""
    dim_g = to_poly(dim_g)
    return [binom_poly(dim_g + (d - 1), d) for d in range(trunc + 1)]


def harmonic_series_E(trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """Hilbert series of E for gl_t: Hilb(S g) * prod_j (1 - q^j)."""
    return SeriesQ.from_coeffs(sym_alg_hilbert(T ** 2, trunc), trunc) * euler_product(trunc)


def printed_kostant_rhs(trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """1/(1 - q t^2) * prod_j (1 - q^j), the right-hand side as usually printed."""
    return geom_product([(1, -1, T ** 2)], trunc) * euler_product(trunc)


@dataclass(frozen=True)
class KostantReport:
    trunc: int
    printed_rhs: bool
    holds: bool
    first_mismatch: Optional[int] = None
    lhs: Optional[RatFuncT] = None
    rhs: Optional[RatFuncT] = None


def kostant_lhs(trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """sum over |lam| = |mu| <= trunc of harmonic_hilbert(lam, mu) * dim X_{lam,mu}."""
    acc = SeriesQ.zero(trunc)
    for lam, mu in iter_sizes(trunc):
        acc = acc + harmonic_hilbert(lam, mu, trunc).scale(dim_gl(lam, mu))
    return acc


def kostant_identity_report(trunc: int = DEFAULT_TRUNC, printed_rhs: bool = False) -> KostantReport:
    lhs = kostant_lhs(trunc)
    rhs = printed_kostant_rhs(trunc) if printed_rhs else harmonic_series_E(trunc)
    for d in range(trunc + 1):
        a, b = lhs.coefficient(d), rhs.coefficient(d)
        if a - b:
            if printed_rhs:
                log.warning("printed right-hand side fails at q^%d", d)
            return KostantReport(trunc, printed_rhs, False, d, a, b)
    return KostantReport(trunc, printed_rhs, True)


def kostant_identity_check(trunc: int = DEFAULT_TRUNC) -> bool:
    return kostant_identity_report(trunc).holds
