#!/usr/bin/env python3

import os
import sys

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from sympy.polys.domains import QQ

from delcat.domain.arith import T, evaluate
from delcat.domain.center import (
    EGF_ORDER,
    bernoulli_egf_check,
    bernoulli_P,
    bernoulli_sum,
    chi_at_rank,
    chi_gl,
    printed_egf_value,
    sigma_probe,
)
from delcat.domain.partitions import EMPTY, Partition, partitions_upto


def _p(*parts):
    return Partition(parts)


def test_bernoulli():
    print("🧪 Testing modified Bernoulli polynomials...")

    assert bernoulli_P(0) == T
    assert not bernoulli_P(1)
    assert bernoulli_P(2) == (T * (T ** 2 - 1)).mul_ground(QQ(1, 12))
    print("✅ P_0 = t, P_1 = 0, P_2 = t(t^2-1)/12")

    for i in range(9):
        for n in range(1, 11):
            assert evaluate(bernoulli_P(i), n) == bernoulli_sum(i, n), (i, n)
    print("✅ P_i(n) equals the defining sum, i <= 8, n <= 10")

    for i in range(1, 9, 2):
        assert not bernoulli_P(i)
    print("✅ Odd P_i vanish")

    assert bernoulli_egf_check(EGF_ORDER)
    print("✅ sinh(tz/2)/sinh(z/2) generates P_i")

    assert printed_egf_value(0, 2) == QQ(3, 2)
    assert bernoulli_sum(0, 2) == 2
    print("✅ Printed generating function disagrees at i=0, t=2 (3/2 vs 2)")
    print()


def test_central_characters():
    print("🧪 Testing central characters...")

    for ell in range(1, 6):
        assert chi_gl([ell], [], 1)[1] == ell
    assert chi_gl([1], [1], 1)[1] == 0
    chi = chi_gl([], [], 4)
    assert chi.imax == 4
    assert all(chi[i] == bernoulli_P(i) for i in range(1, 5))
    print("✅ chi(C_1) = |lam| - |mu|, empty label gives P_i")

    assert chi_gl([QQ(1, 2)], [], 1)[1] == QQ(1, 2)
    print("✅ Rational labels allowed")

    for lam in partitions_upto(3):
        for mu in partitions_upto(2):
            a = chi_gl(lam.parts, mu.parts, 4)
            b = chi_gl(lam.parts + (0, 0), mu.parts + (0,), 4)
            assert a == b
    print("✅ Invariant under trailing zeros")

    for lam in partitions_upto(3):
        for mu in partitions_upto(3):
            chi = chi_gl(lam.parts, mu.parts, 4)
            for i in range(1, 5):
                for n in range(8, 13):
                    assert evaluate(chi[i], n) == chi_at_rank(lam, mu, i, n)
    print("✅ Interpolates sum_j ([lam,mu]_n + rho_n)_j^i")
    print()


def test_separation():
    print("🧪 Testing separation and probes...")

    labels = partitions_upto(4)
    seen = {}
    for lam in labels:
        for mu in labels:
            key = chi_gl(lam.parts, mu.parts, 8).values
            assert key not in seen, (lam, mu, seen.get(key))
            seen[key] = (lam, mu)
    print("✅ Distinct labels of size <= 4 have distinct characters")

    assert (_p(1), _p(1)) in sigma_probe(chi_gl([1], [1], 4), 3)
    assert sigma_probe(chi_gl([], [], 4), 2) == [(EMPTY, EMPTY)]
    assert sigma_probe(chi_gl([QQ(1, 2)], [], 4), 3) == []
    print("✅ sigma_probe finds witnesses and reports none for lam = (1/2)")
    print()


def main():
    print("🚀 Testing central characters")
    print("=" * 50)

    test_bernoulli()
    test_central_characters()
    test_separation()

    print("✨ All center tests completed!")


if __name__ == "__main__":
    main()
