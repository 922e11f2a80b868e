#!/usr/bin/env python3

import os
import sys

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from sympy.polys.domains import QQ

from delcat.core.exceptions import ValidationError, WeightError
from delcat.domain.arith import partition_series, to_frac
from delcat.domain.dims import weyl_dim_gl
from delcat.domain.partitions import (
    EMPTY,
    Partition,
    conjugate,
    d_lambda,
    hooks,
    is_dominant,
    n_stat,
    padded_weight,
    parse_weight,
    partitions_of,
    partitions_upto,
    require_dominant,
    weight_norm,
)


def test_parsing():
    print("🧪 Testing partition syntax...")

    lam = Partition.parse("3,1,1")
    assert lam.parts == (3, 1, 1)
    assert str(lam) == "3,1,1"
    assert Partition.parse("-") == EMPTY
    assert str(EMPTY) == "-"
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    print("✅ Parse, print and trailing zeros")

    for bad in ("1,2", "2,-1", "a"):
        try:
            Partition.parse(bad)
            assert False, bad
        except ValidationError:
            pass
    print("✅ Increasing, negative and malformed input rejected")

    assert lam.size == 5 and lam.length == 3
    assert lam.multiplicities() == {3: 1, 1: 2}
    assert len(list(lam.cells())) == 5
    print("✅ Size, length, multiplicities, cells")
    print()


def test_statistics():
    print("🧪 Testing hook statistics...")

    assert conjugate(Partition((3, 1))) == Partition((2, 1, 1))
    assert conjugate(EMPTY) == EMPTY
    assert hooks(Partition((2, 1))) == (3, 1, 1)
    assert hooks(Partition((3, 2))) == (4, 3, 2, 1, 1)
    assert n_stat(Partition((2, 1, 1))) == 3
    for lam in partitions_upto(10):
        assert conjugate(conjugate(lam)) == lam
        assert len(hooks(lam)) == lam.size
        assert hooks(conjugate(lam)) == hooks(lam)
    print("✅ Conjugate, hooks, n(lam)")

    assert d_lambda(Partition((2, 1))) == 2
    assert d_lambda(Partition((1, 1))) == 1
    assert d_lambda(Partition((3, 1, 1))) == 6
    for lam in partitions_upto(6):
        d = d_lambda(lam)
        assert QQ.denom(d) == 1 and d >= 1
        assert d == weyl_dim_gl(lam.parts, lam.length), str(lam)
    print("✅ d_lambda matches the GL_r Weyl dimension for |lam| <= 6")
    print()


def test_padded_weight():
    print("🧪 Testing padded weights...")

    assert padded_weight(Partition((1,)), Partition((1,)), 3) == (1, 0, -1)
    assert padded_weight(Partition((2, 1)), Partition((3,)), 5) == (2, 1, 0, 0, -3)
    assert padded_weight(EMPTY, EMPTY, 2) == (0, 0)
    print("✅ [lam, mu]_n")

    try:
        padded_weight(Partition((1, 1)), Partition((1,)), 2)
        assert False
    except ValidationError:
        print("✅ Rank below len(lam) + len(mu) rejected")
    print()


def test_enumeration():
    print("🧪 Testing enumeration...")

    assert [len(partitions_of(n)) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]
    counts = partition_series(12)
    for n in range(13):
        assert to_frac(len(partitions_of(n))) == counts.coefficient(n), n
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in partitions_upto(2)] == [(), (1,), (2,), (1, 1)]
    assert partitions_of(-1) == []
    print("✅ Partition counts and ordering")
    print()


def test_weights():
    print("🧪 Testing weights...")

    w = parse_weight("1,0,-1")
    assert w == (1, 0, -1)
    assert is_dominant(w)
    assert weight_norm(w) == 2
    assert not is_dominant((0, 1))
    try:
        require_dominant((0, 1))
        assert False
    except WeightError:
        print("✅ Non-dominant weight rejected")
    print()


def main():
    print("🚀 Testing partitions")
    print("=" * 50)

    test_parsing()
    test_statistics()
    test_padded_weight()
    test_enumeration()
    test_weights()

    print("✨ All partition tests completed!")


if __name__ == "__main__":
    main()
