#!/usr/bin/env python3

import os
import sys
import warnings

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from sympy.functions.combinatorial.numbers import totient
from sympy.polys.domains import QQ
from sympy.utilities.exceptions import SymPyDeprecationWarning

from delcat.core.exceptions import ValidationError
from delcat.domain.arith import SeriesQ, T, geom_product, partition_series, to_binomial, to_frac
from delcat.domain.invariants import (
    ENUMERATION_LIMIT,
    GL,
    OSP,
    NecklaceFamily,
    gl_necklace_count,
    harmonic_hilbert,
    harmonic_series_E,
    hilb_multi_inv,
    kostant_identity_check,
    kostant_identity_report,
    kostant_lhs,
    necklace_generators,
    osp_necklace_count,
    printed_kostant_rhs,
    sym_alg_hilbert,
    verify_hilser,
)
from delcat.domain.partitions import EMPTY, Partition


def _p(*parts):
    return Partition(parts)


def _series(coeffs, trunc):
    return SeriesQ.from_coeffs(coeffs, trunc)


def test_necklaces():
    print("🧪 Testing necklace counts...")

    assert [gl_necklace_count(j, 2) for j in range(1, 7)] == [2, 3, 4, 6, 8, 14]
    assert [osp_necklace_count(j, 1) for j in range(1, 7)] == [0, 1, 0, 1, 0, 1]
    assert [osp_necklace_count(j, 2) for j in range(1, 5)] == [0, 3, 0, 6]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert gl_necklace_count(14, 3) == sum(int(totient(d)) * 3 ** (14 // d) for d in (1, 2, 7, 14)) // 14
    assert not [w for w in caught if issubclass(w.category, SymPyDeprecationWarning)]
    print("✅ Counting formulas, no deprecated sympy calls")

    for m in range(1, 4):
        for j in range(1, 11):
            assert necklace_generators(NecklaceFamily(GL, m), j) == gl_necklace_count(j, m)
            assert necklace_generators(NecklaceFamily(OSP, m), j) == osp_necklace_count(j, m)
    print("✅ Enumeration agrees with the formulas")

    j = ENUMERATION_LIMIT + 1
    assert necklace_generators(NecklaceFamily(GL, 2), j) == (2 ** 13 + 12 * 2) // 13
    print("✅ Formula used beyond the enumeration limit")

    for bad in ((GL, 0), ("sp", 1)):
        try:
            NecklaceFamily(*bad)
            assert False, bad
        except ValidationError:
            pass
    try:
        necklace_generators(NecklaceFamily(GL, 1), 0)
        assert False
    except ValidationError:
        print("✅ Invalid families and degrees rejected")
    print()


def test_hilbert_series():
    print("🧪 Testing invariant ring Hilbert series...")

    assert hilb_multi_inv(NecklaceFamily(GL, 1), 8) == partition_series(8)
    for m in range(1, 4):
        assert verify_hilser(m, 6)
    print("✅ h_m(q) = prod_j (1 - m q^j)^-1")

    osp = hilb_multi_inv(NecklaceFamily(OSP, 1), 10)
    assert osp == geom_product(((j, -1, 1) for j in range(2, 11, 2)), 10)
    print("✅ OSp with one matrix: generators in even degrees")
    print()


def test_harmonic():
    print("🧪 Testing harmonic parts...")

    assert harmonic_hilbert(_p(1), _p(1), 8) == _series([0] + [1] * 8, 8)
    assert harmonic_hilbert(EMPTY, EMPTY, 8) == SeriesQ.one(8)
    print("✅ Hom(X_{1,1}, E) = q/(1-q)")

    half = QQ(1, 2)
    assert sym_alg_hilbert(T ** 2, 2) == [1, T ** 2, (T ** 4 + T ** 2).mul_ground(half)]
    e = harmonic_series_E(2)
    assert e == _series([1, T ** 2 - 1, (T ** 4 - T ** 2 - 2).mul_ground(half)], 2)
    for coeff in harmonic_series_E(6).poly_coeffs():
        to_binomial(coeff)
    print("✅ Hilbert series of E, integer-valued coefficients")
    print()


def test_kostant():
    print("🧪 Testing the harmonic decomposition identity...")

    assert kostant_lhs(2) == harmonic_series_E(2)
    assert kostant_identity_check(4)
    print("✅ Holds to q^4 with the corrected right-hand side")

    assert printed_kostant_rhs(2) == _series([1, T ** 2 - 1, T ** 4 - T ** 2 - 1], 2)
    rep = kostant_identity_report(4, printed_rhs=True)
    assert not rep.holds
    assert rep.first_mismatch == 2
    assert rep.lhs == to_frac((T ** 4 - T ** 2 - 2).mul_ground(QQ(1, 2)))
    assert rep.rhs == to_frac(T ** 4 - T ** 2 - 1)
    print("✅ Printed right-hand side fails at q^2")
    print()


def main():
    print("🚀 Testing invariant series")
    print("=" * 50)

    test_necklaces()
    test_hilbert_series()
    test_harmonic()
    test_kostant()

    print("✨ All series tests completed!")


if __name__ == "__main__":
    main()
