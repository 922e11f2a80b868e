#!/usr/bin/env python3

import os
import sys

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from sympy.polys.domains import QQ

from delcat.core.exceptions import WeightError
from delcat.domain.arith import T, degree, evaluate, to_binomial
from delcat.domain.dims import (
    dim_gl,
    dim_gl_from_oracle,
    dim_o,
    leading_coefficient,
    tensor_V_defect,
    verify_duality,
    verify_o_square,
    verify_Q_sequence,
    verify_tensor_V,
    weyl_dim_gl,
)
from delcat.domain.partitions import EMPTY, Partition, hooks, padded_weight, partitions_upto


def _p(*parts):
    return Partition(parts)


def test_small_dimensions():
    print("🧪 Testing small dimension polynomials...")

    assert dim_gl(EMPTY, EMPTY) == 1
    assert dim_gl(_p(1), EMPTY) == T
    assert dim_gl(_p(1), _p(1)) == T ** 2 - 1
    assert dim_gl(_p(2), _p(2)) == (T ** 2 * (T - 1) * (T + 3)).mul_ground(QQ(1, 4))
    assert dim_gl(_p(1, 1), EMPTY) == (T * (T - 1)).mul_ground(QQ(1, 2))
    print("✅ X_{1,1} = t^2 - 1, X_{2,2} = t^2(t-1)(t+3)/4")

    assert evaluate(dim_gl(_p(1), _p(1)), 7) == 48
    assert to_binomial(dim_gl(_p(1), _p(1))).coeffs == (-1, 1, 2)
    print("✅ Evaluation and binomial form")

    assert dim_o(EMPTY) == 1
    assert dim_o(_p(1)) == T
    assert dim_o(_p(2)) == (T ** 2 + T - 2).mul_ground(QQ(1, 2))
    assert dim_o(_p(1, 1)) == (T * (T - 1)).mul_ground(QQ(1, 2))
    assert verify_o_square()
    print("✅ O_t: V (x) V = X_(2) + X_(1,1) + 1")
    print()


def test_weyl_oracle():
    print("🧪 Testing the Weyl dimension oracle...")

    assert weyl_dim_gl((1, 0, -1), 3) == 8
    assert weyl_dim_gl((2, 0), 2) == 3
    try:
        weyl_dim_gl((0, 1), 2)
        assert False
    except WeightError:
        pass
    try:
        weyl_dim_gl((1, 0), 3)
        assert False
    except WeightError:
        print("✅ Malformed weights rejected")

    labels = partitions_upto(3)
    for lam in labels:
        for mu in labels:
            p = dim_gl(lam, mu)
            for n in range(lam.length + mu.length + 2, 11):
                assert evaluate(p, n) == weyl_dim_gl(padded_weight(lam, mu, n), n), (lam, mu, n)
    print("✅ dim_gl(n) = Weyl dimension, sizes <= 3")

    for lam, mu in ((_p(2, 1), _p(1)), (_p(2), _p(1, 1)), (_p(3), EMPTY)):
        assert dim_gl_from_oracle(lam, mu) == dim_gl(lam, mu)
    print("✅ Interpolated oracle reproduces the closed form")
    print()


def test_leading_coefficient():
    print("🧪 Testing degree and leading coefficient...")

    for lam in partitions_upto(4):
        for mu in partitions_upto(4):
            p = dim_gl(lam, mu)
            assert degree(p) == lam.size + mu.size
            want = QQ(1)
            for h in hooks(lam) + hooks(mu):
                want /= h
            assert leading_coefficient(p) == want, (lam, mu)
    assert leading_coefficient(dim_gl(_p(2, 1), EMPTY)) == QQ(1, 3)
    print("✅ Leading coefficient 1/(prod hooks(lam) prod hooks(mu))")
    print()


def test_identities():
    print("🧪 Testing structural identities...")

    for lam in partitions_upto(4):
        for mu in partitions_upto(3):
            assert verify_duality(lam, mu)
    print("✅ Duality")

    for m in range(5):
        assert verify_tensor_V(m), m
    for m in range(1, 5):
        assert tensor_V_defect(m) == dim_gl(_p(m), _p(m - 1))
    assert tensor_V_defect(1) == T
    print("✅ X_{m,m} (x) V, including the X_{m,m-1} summand")

    for ell in range(5):
        assert verify_Q_sequence(ell)
    print("✅ S^l V (x) S^l V* = sum_{m <= l} X_{m,m}")
    print()


def main():
    print("🚀 Testing dimension polynomials")
    print("=" * 50)

    test_small_dimensions()
    test_weyl_oracle()
    test_leading_coefficient()
    test_identities()

    print("✨ All dimension tests completed!")


if __name__ == "__main__":
    main()
