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


"""Partitions, hook statistics and padded GL_n weights."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.utilities.iterables import partitions as _sympy_partitions

from delcat.core.exceptions import ValidationError, WeightError

IntegerWeight = Tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValidationError("Partition parts must be positive", {"parts": parts})
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError("Partition parts must be weakly decreasing", {"parts": parts})
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        raw = text.strip()
        if raw in ("", "-", "0"):
            return cls(())
        try:
            parts = tuple(int(p) for p in raw.split(","))
        except ValueError as e:
            raise ValidationError("Malformed partition, expected e.g. 3,1,1 or -", {"text": text}, cause=e)
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield i, j


EMPTY = Partition(())


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return EMPTY
    return Partition(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


def hooks(lam: Partition) -> Tuple[int, ...]:
    """Hook lengths of all cells, largest first."""
    cols = conjugate(lam).parts
    return tuple(sorted(
        ((lam.parts[i] - j - 1) + (cols[j] - i - 1) + 1 for i, j in lam.cells()),
        reverse=True,
    ))


def n_stat(lam: Partition) -> int:
    return sum(i * p for i, p in enumerate(lam.parts))


def d_lambda(lam: Partition):
    """prod_{i<j<=r} (lam_i - lam_j + j - i)/(j - i) over the r rows of lam."""
    acc = QQ.one
    r = lam.length
    for i in range(r):
        for j in range(i + 1, r):
            acc *= QQ(lam.parts[i] - lam.parts[j] + j - i, j - i)
    return acc


def padded_weight(lam: Partition, mu: Partition, n: int) -> IntegerWeight:
    if n < lam.length + mu.length:
        raise ValidationError(
            "Rank too small for padded weight",
            {"n": n, "lam": str(lam), "mu": str(mu)},
        )
    zeros = n - lam.length - mu.length
    return tuple(lam.parts) + (0,) * zeros + tuple(-m for m in reversed(mu.parts))


def partitions_of(n: int) -> List[Partition]:
    """All partitions of n, lexicographically descending."""
    if n < 0:
        return []
    out = []
    for mult in _sympy_partitions(n):
        parts: List[int] = []
        for k in sorted(mult, reverse=True):
            parts.extend([k] * mult[k])
        out.append(Partition(tuple(parts)))
    out.sort(key=lambda p: p.parts, reverse=True)
    return out


def partitions_upto(bound: int) -> List[Partition]:
    return [p for n in range(bound + 1) for p in partitions_of(n)]


def parse_weight(text: str) -> IntegerWeight:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as e:
        raise ValidationError("Malformed weight, expected comma separated integers", {"text": text}, cause=e)


def is_dominant(weight: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(weight, weight[1:]))


def weight_norm(weight: Sequence[int]) -> int:
    return sum(w * w for w in weight)


def require_dominant(weight: Sequence[int]) -> None:
    if not is_dominant(weight):
        raise WeightError("Weight is not dominant", {"weight": tuple(weight)})
