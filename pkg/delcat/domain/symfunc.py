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


"""Symmetric group characters, Kronecker products and principal specializations."""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterator, List, Tuple, Union

from sympy.combinatorics import Permutation
from sympy.polys.domains import QQ

from delcat.core import metrics
from delcat.core.exceptions import NotIntegerValued, SizeMismatch
from delcat.domain.arith import DEFAULT_TRUNC, Rat, SeriesQ, geom_product, rat, rat_str
from delcat.domain.partitions import Partition, hooks, n_stat, partitions_of

log = logging.getLogger("delcat.symfunc")


class SchurExpr:
    """sum c_nu s_nu over partitions nu of a fixed degree."""

    def __init__(self, degree: int, terms: Dict[Partition, Rat] | None = None):
        self.degree = degree
        self.terms: Dict[Partition, Rat] = {}
        for nu, c in (terms or {}).items():
            if nu.size != degree:
                raise SizeMismatch("Schur term of wrong degree", {"degree": degree, "nu": str(nu)})
            c = rat(c)
            if c:
                self.terms[nu] = c

    def items(self) -> List[Tuple[Partition, Rat]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].parts, reverse=True)

    def coefficient(self, nu: Partition) -> Rat:
        return self.terms.get(nu, QQ.zero)

    def __add__(self, other: "SchurExpr") -> "SchurExpr":
        if other.degree != self.degree:
            raise SizeMismatch("Adding Schur expressions of different degree", {"left": self.degree, "right": other.degree})
        out = dict(self.terms)
        for nu, c in other.terms.items():
            out[nu] = out.get(nu, QQ.zero) + c
        return SchurExpr(self.degree, out)

    def scale(self, c) -> "SchurExpr":
        c = rat(c)
        return SchurExpr(self.degree, {nu: v * c for nu, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchurExpr):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{rat_str(c)}*s[{nu}]" for nu, c in self.items())


def schur_expr(lam: Partition) -> SchurExpr:
    return SchurExpr(lam.size, {lam: 1})


# --------------------------------------------------------- characters

@lru_cache(maxsize=None)
def _mn(lam: Tuple[int, ...], rho: Tuple[int, ...]) -> int:
    if not rho:
        return 0 if lam else 1
    metrics.character_evaluations.inc()
    k, rest = rho[0], rho[1:]
    r = len(lam)
    beta = [lam[i] + r - 1 - i for i in range(r)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        # rim hook sign: beta numbers jumped over
        sign = -1 if sum(1 for c in beta if nb < c < b) % 2 else 1
        moved = sorted((bset - {b}) | {nb}, reverse=True)
        parts = [x - (r - 1 - i) for i, x in enumerate(moved)]
        while parts and parts[-1] == 0:
            parts.pop()
        total += sign * _mn(tuple(parts), rest)
    return total


def sn_character(lam: Partition, rho: Partition) -> int:
    """chi^lam at the class of cycle type rho, by Murnaghan-Nakayama."""
    if lam.size != rho.size:
        raise SizeMismatch("Character needs |lam| = |rho|", {"lam": str(lam), "rho": str(rho)})
    return _mn(lam.parts, rho.parts)


def class_size(rho: Partition) -> int:
    denom = 1
    for j, m in rho.multiplicities().items():
        denom *= j ** m * math.factorial(m)
    return math.factorial(rho.size) // denom


def kronecker(lam: Partition, mu: Partition) -> SchurExpr:
    if lam.size != mu.size:
        raise SizeMismatch("Kronecker product needs |lam| = |mu|", {"lam": str(lam), "mu": str(mu)})
    n = lam.size
    classes = [(rho, class_size(rho) * sn_character(lam, rho) * sn_character(mu, rho)) for rho in partitions_of(n)]
    order = math.factorial(n)
    terms = {}
    for nu in partitions_of(n):
        g = sum(w * sn_character(nu, rho) for rho, w in classes if w)
        if g % order or g < 0:
            raise NotIntegerValued(
                "Kronecker coefficient is not a nonnegative integer",
                {"lam": str(lam), "mu": str(mu), "nu": str(nu), "sum": g},
            )
        if g:
            terms[nu] = g // order
    log.debug("kronecker %s * %s: %d terms", lam, mu, len(terms))
    return SchurExpr(n, terms)


def hook_length_count(lam: Partition) -> int:
    """Number of standard Young tableaux, |lam|!/prod hooks."""
    return math.factorial(lam.size) // math.prod(hooks(lam))


# --------------------------------------------------- specializations

def _spec_single(lam: Partition, trunc: int) -> SeriesQ:
    lead = lam.size + n_stat(lam)
    if lead > trunc:
        return SeriesQ.zero(trunc)
    return geom_product(((h, -1, 1) for h in hooks(lam)), trunc).shift(lead)


def principal_spec(f: Union[SchurExpr, Partition], trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """Substitute x_i = q^i, i >= 1."""
    if isinstance(f, Partition):
        return _spec_single(f, trunc)
    acc = SeriesQ.zero(trunc)
    for nu, c in f.items():
        acc = acc + _spec_single(nu, trunc).scale(c)
    return acc


def h_spec(k: int, trunc: int) -> SeriesQ:
    """h_k(q, q^2, ...) = q^k / prod_{i<=k} (1 - q^i)."""
    if k < 0 or k > trunc:
        return SeriesQ.zero(trunc)
    return geom_product(((i, -1, 1) for i in range(1, k + 1)), trunc).shift(k)


def jacobi_trudi_spec(lam: Partition, trunc: int = DEFAULT_TRUNC) -> SeriesQ:
    """det(h_{lam_i - i + j}) specialized at x_i = q^i."""
    r = lam.length
    if r == 0:
        return SeriesQ.one(trunc)
    cache: Dict[int, SeriesQ] = {}

    def entry(i: int, j: int) -> SeriesQ:
        k = lam.parts[i] - i + j
        if k not in cache:
            cache[k] = h_spec(k, trunc) if k > 0 else (SeriesQ.one(trunc) if k == 0 else SeriesQ.zero(trunc))
        return cache[k]

    acc = SeriesQ.zero(trunc)
    for perm in permutations(range(r)):
        term = SeriesQ.one(trunc)
        for i, j in enumerate(perm):
            e = entry(i, j)
            if e.valuation() > trunc:
                term = None
                break
            term = term * e
        if term is None:
            continue
        acc = acc + term if Permutation(list(perm)).signature() > 0 else acc - term
    return acc


def iter_sizes(bound: int) -> Iterator[Tuple[Partition, Partition]]:
    """Pairs (lam, mu) with |lam| = |mu| <= bound."""
    for n in range(bound + 1):
        ps = partitions_of(n)
        for lam in ps:
            for mu in ps:
                yield lam, mu
