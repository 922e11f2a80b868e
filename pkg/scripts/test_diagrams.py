#!/usr/bin/env python3

import os
import sys

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from delcat.core.exceptions import BoundaryMismatch, ValidationError
from delcat.domain.arith import T, is_integral, to_frac
from delcat.domain.diagrams import (
    GL,
    O,
    DiagElement,
    Diagram,
    ObjectSig,
    cap,
    closure_trace,
    compose,
    compose_diagrams,
    contraction,
    cup,
    gram_det,
    hom_basis,
    hom_dim,
    identity,
    swap,
    tensor,
)


def gl(r, s=0):
    return ObjectSig(GL, r, s)


def o(r):
    return ObjectSig(O, r)


def test_objects():
    print("🧪 Testing object signatures...")

    assert ObjectSig.parse("1,1", GL) == gl(1, 1)
    assert ObjectSig.parse("3", O) == o(3)
    assert str(gl(2, 1)) == "[2,1]" and str(o(2)) == "[2]"
    assert gl(1, 0) + gl(0, 2) == gl(1, 2)
    print("✅ Parse, print, tensor of objects")

    for text, family in (("1", GL), ("1,1", O), ("a,b", GL)):
        try:
            ObjectSig.parse(text, family)
            assert False, text
        except ValidationError:
            pass
    try:
        gl(1) + o(1)
        assert False
    except BoundaryMismatch:
        print("✅ Wrong arity and mixed families rejected")
    print()


def test_diagram_validation():
    print("🧪 Testing diagram validation...")

    d = Diagram.parse("1-3,2-4", gl(1, 1), gl(1, 1))
    assert str(d) == "1-3,2-4"
    assert Diagram.parse("4-2,3-1", gl(1, 1), gl(1, 1)) == d
    print("✅ Edge lists are canonical")

    try:
        Diagram.parse("1-2", gl(1, 0), gl(0, 1))
        assert False
    except ValidationError:
        print("✅ V to V* strand across the wall rejected")

    try:
        Diagram.parse("1-2,1-3", o(2), o(2))
        assert False
    except ValidationError:
        print("✅ Non-matching rejected")
    print()


def test_composition():
    print("🧪 Testing composition...")

    e = contraction(GL)
    assert compose(e, e) == e.scale(T)
    assert compose(contraction(O), contraction(O)) == contraction(O).scale(T)
    print("✅ e o e = t e")

    idt = identity(gl(1, 1))
    assert compose(idt, e) == e and compose(e, idt) == e
    s = swap(O)
    assert compose(s, s) == identity(o(2))
    print("✅ Identities and swap^2 = id")

    zig = compose(tensor(cap(O), identity(o(1))), tensor(identity(o(1)), cup(O)))
    assert zig == identity(o(1))
    zig_gl = compose(tensor(cap(GL), identity(gl(1))), tensor(identity(gl(1)), cup(GL)))
    assert zig_gl == identity(gl(1))
    print("✅ Zig-zag identity")

    d, loops = compose_diagrams(next(iter(cap(O).terms)), next(iter(cup(O).terms)))
    assert loops == 1 and d.edges == ()
    print("✅ cap o cup closes one loop")

    try:
        compose(e, identity(gl(1)))
        assert False
    except BoundaryMismatch:
        print("✅ Boundary mismatch rejected")
    print()


def test_traces():
    print("🧪 Testing closure traces...")

    for r in range(4):
        for s in range(4 - r + 1):
            assert closure_trace(identity(gl(r, s))) == to_frac(T ** (r + s))
    assert closure_trace(swap(O)) == to_frac(T)
    assert closure_trace(contraction(GL)) == to_frac(T)
    print("✅ dim [r,s] = t^(r+s), tr(swap) = t")

    e = contraction(GL)
    assert closure_trace(tensor(e, identity(gl(1)))) == closure_trace(e) * closure_trace(identity(gl(1)))
    print("✅ Trace is multiplicative under tensor")
    print()


def test_elements():
    print("🧪 Testing linear combinations...")

    e = contraction(GL)
    assert e + e == e.scale(2)
    assert (e - e) == DiagElement(gl(1, 1), gl(1, 1))
    assert not (e - e).terms
    f = e + identity(gl(1, 1)).scale(to_frac(1) / to_frac(T - 1))
    assert len(f.items()) == 2
    print("✅ Addition, subtraction and rational coefficients")
    print()


def test_bases():
    print("🧪 Testing hom bases...")

    assert [hom_dim(gl(r, s), gl(r, s)) for r, s in ((1, 0), (1, 1), (2, 1), (1, 2))] == [1, 2, 6, 6]
    assert hom_dim(gl(1, 0), gl(0, 1)) == 0
    assert hom_dim(gl(1, 1), gl(0, 0)) == 1
    print("✅ Walled Brauer: (r+s)! and orientation constraints")

    assert [hom_dim(o(m), o(m)) for m in range(1, 5)] == [1, 3, 15, 105]
    assert hom_dim(o(1), o(0)) == 0
    assert hom_dim(o(4), o(0)) == 3
    print("✅ Brauer: (2m-1)!!")

    basis = hom_basis(o(2), o(2))
    assert basis == sorted(basis, key=Diagram.sort_key)
    print("✅ Bases are sorted")
    print()


def test_gram():
    print("🧪 Testing Gram determinants...")

    report = gram_det(gl(1, 1))
    assert report.size == 2
    assert report.det == T ** 4 - T ** 2
    assert list(report.roots) == [-1, 0, 1]
    print("✅ End([1,1]): t^4 - t^2")

    assert gram_det(gl(1, 0)).det == T
    assert gram_det(o(1)).det == T
    assert gram_det(o(2)).det == T ** 3 * (T + 2) * (T - 1) ** 2
    print("✅ End([2]) for O_t: t^3 (t+2) (t-1)^2")

    for obj in (o(3), gl(2, 0)):
        r = gram_det(obj)
        assert r.det
        assert all(is_integral(root) for root in r.roots)
    print("✅ Larger Gram determinants have integer roots")
    print()


def main():
    print("🚀 Testing diagram categories")
    print("=" * 50)

    test_objects()
    test_diagram_validation()
    test_composition()
    test_traces()
    test_elements()
    test_bases()
    test_gram()

    print("✨ All diagram tests completed!")


if __name__ == "__main__":
    main()
