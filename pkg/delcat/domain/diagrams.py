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


"""Walled Brauer (Rep GL_t) and Brauer (Rep O_t) diagram calculus.

Endpoints are numbered globally and 0-based: the k bottom (source) endpoints
first, left to right, then the l top (target) endpoints. In a walled object
[r, s] the r copies of V come before the s copies of V*. Rep(Sp_2t) is served
by the Brauer diagrams of Rep(O_t); the sign twist between the two does not
change any quantity computed here.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from delcat.core import metrics
from delcat.core.exceptions import BoundaryMismatch, ValidationError
from delcat.domain.arith import FieldT, RingT, T, PolyT, Rat, RatFuncT, rational_roots, to_frac

log = logging.getLogger("delcat.diagrams")

GL = "gl"
O = "o"
FAMILIES = (GL, O)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class ObjectSig:
    """[r, s] = V^r (x) V*^s for gl, [r] = V^r for o."""

    family: str
    r: int
    s: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError("Unknown diagram family", {"family": self.family})
        if self.r < 0 or self.s < 0:
            raise ValidationError("Object signature must be natural", {"r": self.r, "s": self.s})
        if self.family == O and self.s:
            raise ValidationError("Rep(O_t) objects have a single index", {"s": self.s})

    @classmethod
    def parse(cls, text: str, family: str) -> "ObjectSig":
        try:
            nums = [int(x) for x in text.split(",")]
        except ValueError as e:
            raise ValidationError("Malformed object, expected r,s or r", {"text": text}, cause=e)
        if family == GL and len(nums) == 2:
            return cls(GL, nums[0], nums[1])
        if family == O and len(nums) == 1:
            return cls(O, nums[0])
        raise ValidationError("Wrong number of indices for object", {"text": text, "family": family})

    @property
    def size(self) -> int:
        return self.r + self.s

    def __str__(self) -> str:
        return f"[{self.r},{self.s}]" if self.family == GL else f"[{self.r}]"

    def __add__(self, other: "ObjectSig") -> "ObjectSig":
        _same_family(self.family, other.family)
        return ObjectSig(self.family, self.r + other.r, self.s + other.s)


def _same_family(a: str, b: str) -> None:
    if a != b:
        raise BoundaryMismatch("Mixing diagram families", {"left": a, "right": b})


def _outgoing(source: ObjectSig, target: ObjectSig, p: int) -> bool:
    """Bottom V and top V* endpoints are outgoing."""
    k = source.size
    if p < k:
        return p < source.r
    return (p - k) >= target.r


@dataclass(frozen=True)
class Diagram:
    source: ObjectSig
    target: ObjectSig
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        _same_family(self.source.family, self.target.family)
        canon = tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        object.__setattr__(self, "edges", canon)
        n = self.source.size + self.target.size
        seen = sorted(p for e in canon for p in e)
        if seen != list(range(n)):
            raise ValidationError(
                "Edges must form a perfect matching of all endpoints",
                {"endpoints": n, "edges": canon},
            )
        if self.family == GL:
            for a, b in canon:
                if _outgoing(self.source, self.target, a) == _outgoing(self.source, self.target, b):
                    raise ValidationError("Strand violates the V / V* orientation", {"edge": (a + 1, b + 1)})

    @property
    def family(self) -> str:
        return self.source.family

    @classmethod
    def parse(cls, text: str, source: ObjectSig, target: ObjectSig) -> "Diagram":
        """Edge list "a-b,c-d" with 1-based endpoints."""
        edges = []
        for chunk in text.split(","):
            if not chunk.strip():
                continue
            a, sep, b = chunk.partition("-")
            try:
                edges.append((int(a) - 1, int(b) - 1))
            except ValueError as e:
                raise ValidationError("Malformed edge, expected a-b", {"edge": chunk}, cause=e)
            if not sep:
                raise ValidationError("Malformed edge, expected a-b", {"edge": chunk})
        return cls(source, target, tuple(edges))

    def __str__(self) -> str:
        return ",".join(f"{a + 1}-{b + 1}" for a, b in self.edges)

    def sort_key(self) -> Tuple[Edge, ...]:
        return self.edges


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def compose_diagrams(g: Diagram, f: Diagram) -> Tuple[Diagram, int]:
    """g o f as a diagram and the number of closed loops removed."""
    if g.source != f.target:
        raise BoundaryMismatch(
            "Composition needs g.source == f.target",
            {"g_source": str(g.source), "f_target": str(f.target)},
        )
    a, b, c = f.source.size, f.target.size, g.target.size
    ds = _DisjointSet(a + b + c)
    # nodes: A = 0..a-1, B = a..a+b-1, C = a+b..a+b+c-1; f's global numbering already matches A and B
    for x, y in f.edges:
        ds.union(x, y)
    for x, y in g.edges:
        ds.union(x + a, y + a)
    groups: Dict[int, List[int]] = {}
    for node in range(a + b + c):
        groups.setdefault(ds.find(node), []).append(node)
    edges = []
    loops = 0
    for nodes in groups.values():
        outer = [n if n < a else n - b for n in nodes if n < a or n >= a + b]
        if not outer:
            loops += 1
        else:
            edges.append((outer[0], outer[1]))
    metrics.diagram_compositions.labels(f.family).inc()
    if loops:
        metrics.closed_loops.labels(f.family).inc(loops)
    return Diagram(f.source, g.target, tuple(edges)), loops


def closure_loops(d: Diagram) -> int:
    """Loops after joining bottom endpoint j to top endpoint j."""
    if d.source != d.target:
        raise BoundaryMismatch("Closure needs an endomorphism", {"source": str(d.source), "target": str(d.target)})
    k = d.source.size
    ds = _DisjointSet(2 * k)
    for x, y in d.edges:
        ds.union(x, y)
    for j in range(k):
        ds.union(j, k + j)
    loops = len({ds.find(n) for n in range(2 * k)})
    if loops:
        metrics.closed_loops.labels(d.family).inc(loops)
    return loops


def _relabel(sig1: ObjectSig, sig2: ObjectSig, left: bool, p: int) -> int:
    """Position of endpoint p of one operand inside sig1 (x) sig2."""
    if left:
        return p if p < sig1.r else sig1.r + sig2.r + (p - sig1.r)
    return sig1.r + p if p < sig2.r else sig1.r + sig2.r + sig1.s + (p - sig2.r)


def tensor_diagrams(d1: Diagram, d2: Diagram) -> Diagram:
    """Juxtaposition; V factors of both operands precede all V* factors."""
    source = d1.source + d2.source
    target = d1.target + d2.target
    k = source.size

    def place(d: Diagram, left: bool, p: int) -> int:
        kd = d.source.size
        if p < kd:
            return _relabel(d1.source, d2.source, left, p)
        return k + _relabel(d1.target, d2.target, left, p - kd)

    edges = [(place(d1, True, x), place(d1, True, y)) for x, y in d1.edges]
    edges += [(place(d2, False, x), place(d2, False, y)) for x, y in d2.edges]
    return Diagram(source, target, tuple(edges))


# -------------------------------------------------------------- elements

class DiagElement:
    """Finite QQ(t)-linear combination of diagrams with common source and target."""

    def __init__(self, source: ObjectSig, target: ObjectSig, terms: Optional[Dict[Diagram, RatFuncT]] = None):
        self.source = source
        self.target = target
        self.terms: Dict[Diagram, RatFuncT] = {}
        for d, c in (terms or {}).items():
            if d.source != source or d.target != target:
                raise BoundaryMismatch("Diagram does not match element boundary", {"diagram": str(d)})
            c = to_frac(c)
            if c:
                self.terms[d] = c

    @classmethod
    def of(cls, d: Diagram, coeff=1) -> "DiagElement":
        return cls(d.source, d.target, {d: coeff})

    def items(self) -> List[Tuple[Diagram, RatFuncT]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def _add_term(self, d: Diagram, c: RatFuncT) -> None:
        v = self.terms.get(d, FieldT.zero) + c
        if v:
            self.terms[d] = v
        else:
            self.terms.pop(d, None)

    def __add__(self, other: "DiagElement") -> "DiagElement":
        if (self.source, self.target) != (other.source, other.target):
            raise BoundaryMismatch("Adding elements of different hom spaces")
        out = DiagElement(self.source, self.target, self.terms)
        for d, c in other.terms.items():
            out._add_term(d, c)
        return out

    def __sub__(self, other: "DiagElement") -> "DiagElement":
        return self + other.scale(-1)

    def scale(self, c) -> "DiagElement":
        c = to_frac(c)
        return DiagElement(self.source, self.target, {d: v * c for d, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagElement):
            return NotImplemented
        if (self.source, self.target) != (other.source, other.target):
            return False
        keys = set(self.terms) | set(other.terms)
        return all(not (self.terms.get(d, FieldT.zero) - other.terms.get(d, FieldT.zero)) for d in keys)

    def __repr__(self) -> str:
        body = " + ".join(f"({c.as_expr()})*[{d}]" for d, c in self.items()) or "0"
        return f"DiagElement({self.source}->{self.target}: {body})"


def compose(g: DiagElement, f: DiagElement) -> DiagElement:
    if g.source != f.target:
        raise BoundaryMismatch(
            "Composition needs g.source == f.target",
            {"g_source": str(g.source), "f_target": str(f.target)},
        )
    out = DiagElement(f.source, g.target)
    for dg, cg in g.terms.items():
        for df, cf in f.terms.items():
            d, loops = compose_diagrams(dg, df)
            out._add_term(d, cg * cf * _t_pow(loops))
    return out


def tensor(f: DiagElement, g: DiagElement) -> DiagElement:
    out = DiagElement(f.source + g.source, f.target + g.target)
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            out._add_term(tensor_diagrams(df, dg), cf * cg)
    return out


def closure_trace(f: DiagElement) -> RatFuncT:
    if f.source != f.target:
        raise BoundaryMismatch("Trace needs an endomorphism", {"source": str(f.source), "target": str(f.target)})
    acc = FieldT.zero
    for d, c in f.terms.items():
        acc += c * _t_pow(closure_loops(d))
    return acc


def _t_pow(k: int) -> RatFuncT:
    return FieldT.one * T ** k


# ------------------------------------------------------------ generators

def identity_diagram(obj: ObjectSig) -> Diagram:
    k = obj.size
    return Diagram(obj, obj, tuple((j, k + j) for j in range(k)))


def identity(obj: ObjectSig) -> DiagElement:
    return DiagElement.of(identity_diagram(obj))


def _pair(family: str) -> ObjectSig:
    return ObjectSig(GL, 1, 1) if family == GL else ObjectSig(O, 2)


def _unit(family: str) -> ObjectSig:
    return ObjectSig(family, 0, 0)


def cup(family: str) -> DiagElement:
    """Coevaluation 1 -> V (x) V* (gl) or 1 -> V (x) V (o)."""
    return DiagElement.of(Diagram(_unit(family), _pair(family), ((0, 1),)))


def cap(family: str) -> DiagElement:
    """Evaluation V (x) V* -> 1 (gl) or V (x) V -> 1 (o)."""
    return DiagElement.of(Diagram(_pair(family), _unit(family), ((0, 1),)))


def swap(family: str) -> DiagElement:
    obj = ObjectSig(family, 2, 0)
    return DiagElement.of(Diagram(obj, obj, ((0, 3), (1, 2))))


def contraction(family: str) -> DiagElement:
    """e = cup o cap; e o e = t e."""
    return compose(cup(family), cap(family))


# ----------------------------------------------------------------- bases

def _matchings(points: List[int]) -> Iterable[List[Edge]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + tail


def hom_basis(source: ObjectSig, target: ObjectSig) -> List[Diagram]:
    _same_family(source.family, target.family)
    n = source.size + target.size
    if source.family == GL:
        outs = [p for p in range(n) if _outgoing(source, target, p)]
        ins = [p for p in range(n) if not _outgoing(source, target, p)]
        if len(outs) != len(ins):
            return []
        found = [Diagram(source, target, tuple(zip(outs, perm))) for perm in permutations(ins)]
    else:
        if n % 2:
            return []
        found = [Diagram(source, target, tuple(m)) for m in _matchings(list(range(n)))]
    return sorted(found, key=Diagram.sort_key)


def hom_dim(source: ObjectSig, target: ObjectSig) -> int:
    return len(hom_basis(source, target))


# ------------------------------------------------------------------ gram

@dataclass(frozen=True)
class GramReport:
    obj: ObjectSig
    size: int
    det: PolyT
    roots: Tuple[Rat, ...]


def gram_matrix(obj: ObjectSig) -> List[List[PolyT]]:
    basis = hom_basis(obj, obj)
    rows = []
    for di in basis:
        row = []
        for dj in basis:
            d, loops = compose_diagrams(di, dj)
            row.append(T ** (loops + closure_loops(d)))
        rows.append(row)
    return rows


def gram_det(obj: ObjectSig) -> GramReport:
    rows = gram_matrix(obj)
    n = len(rows)
    if n == 0:
        det = RingT.one
    else:
        det = DomainMatrix(rows, (n, n), RingT.to_domain()).det()
    log.debug("gram det of End(%s), basis size %d", obj, n)
    roots = tuple(rational_roots(det)) if det else ()
    return GramReport(obj, n, det, roots)
