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


"""Acceptance suites run by `delcat verify`."""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple, Union

from sympy.polys.domains import QQ

from delcat.core import metrics
from delcat.core.exceptions import DelcatError, ValidationError
from delcat.core.memory import ResourceMonitor
from delcat.domain import affine, arith, center, diagrams, dims, invariants, symfunc
from delcat.domain.arith import T, SeriesQ, evaluate, geom_product, to_binomial, to_frac
from delcat.domain.diagrams import GL, O, DiagElement, ObjectSig
from delcat.domain.partitions import EMPTY, Partition, n_stat, padded_weight, partitions_of, partitions_upto

log = logging.getLogger("delcat.verify")

Outcome = Union[bool, Tuple[bool, str]]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    seconds: float = 0.0
    rss_mb: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class _Checker:
    def __init__(self, result: SuiteResult, rng: random.Random):
        self.result = result
        self.rng = rng

    def check(self, name: str, fn: Callable[[], Outcome]) -> bool:
        try:
            out = fn()
            passed, detail = out if isinstance(out, tuple) else (bool(out), "")
        except DelcatError as e:
            passed, detail = False, str(e)
        self.result.checks.append(CheckResult(name, bool(passed), detail))
        if not passed:
            log.warning("check failed: %s/%s %s", self.result.suite, name, detail)
        return bool(passed)


def _p(*parts: int) -> Partition:
    return Partition(parts)


def _same(a, b) -> bool:
    """Equality in QQ(t) by subtraction."""
    return not (to_frac(a) - to_frac(b))


# ------------------------------------------------------------------ suites

def _suite_diagrams(c: _Checker) -> None:
    e = diagrams.contraction(GL)
    c.check("gl e.e = t e", lambda: diagrams.compose(e, e) == e.scale(T))
    eo = diagrams.contraction(O)
    s = diagrams.swap(O)
    c.check("brauer e.s = e", lambda: diagrams.compose(eo, s) == eo)
    c.check("brauer zig-zag", lambda: diagrams.compose(
        diagrams.tensor(diagrams.cap(O), diagrams.identity(ObjectSig(O, 1))),
        diagrams.tensor(diagrams.identity(ObjectSig(O, 1)), diagrams.cup(O)),
    ) == diagrams.identity(ObjectSig(O, 1)))
    c.check("gl zig-zag", lambda: diagrams.compose(
        diagrams.tensor(diagrams.cap(GL), diagrams.identity(ObjectSig(GL, 1, 0))),
        diagrams.tensor(diagrams.identity(ObjectSig(GL, 1, 0)), diagrams.cup(GL)),
    ) == diagrams.identity(ObjectSig(GL, 1, 0)))
    for r in range(5):
        for s_ in range(5 - r):
            obj = ObjectSig(GL, r, s_)
            c.check(f"trace id[{r},{s_}] = t^{r + s_}",
                    lambda obj=obj: _same(diagrams.closure_trace(diagrams.identity(obj)), T ** obj.size))
    for m in range(5):
        obj = ObjectSig(O, m)
        c.check(f"trace id[{m}] = t^{m}",
                lambda obj=obj: _same(diagrams.closure_trace(diagrams.identity(obj)), T ** obj.size))
    c.check("trace e in End([1,1]) = t", lambda: _same(diagrams.closure_trace(e), T))

    def walled_counts() -> Outcome:
        for r1 in range(4):
            for s1 in range(4):
                for r2 in range(4):
                    for s2 in range(4):
                        got = diagrams.hom_dim(ObjectSig(GL, r1, s1), ObjectSig(GL, r2, s2))
                        want = math.factorial(r1 + s2) if r1 + s2 == r2 + s1 else 0
                        if got != want:
                            return False, f"[{r1},{s1}]->[{r2},{s2}]: {got} != {want}"
        return True

    def brauer_counts() -> Outcome:
        for m in range(5):
            for r1 in range(2 * m + 1):
                got = diagrams.hom_dim(ObjectSig(O, r1), ObjectSig(O, 2 * m - r1))
                want = math.prod(range(1, 2 * m, 2))
                if got != want:
                    return False, f"[{r1}]->[{2 * m - r1}]: {got} != {want}"
        return True

    c.check("walled hom_dim = m!", walled_counts)
    c.check("brauer hom_dim = (2m-1)!!", brauer_counts)


def _integer_roots(report: diagrams.GramReport) -> Outcome:
    if not report.det:
        return False, "zero determinant"
    bad = [r for r in report.roots if not arith.is_integral(r)]
    return (not bad), f"roots {[arith.rat_str(r) for r in report.roots]}"


def _suite_gram(c: _Checker) -> None:
    c.check("gl End([1,0]) = t", lambda: diagrams.gram_det(ObjectSig(GL, 1, 0)).det == T)
    c.check("gl End([1,1]) = t^4 - t^2, roots -1,0,1", lambda: (
        diagrams.gram_det(ObjectSig(GL, 1, 1)).det == T ** 4 - T ** 2
        and diagrams.gram_det(ObjectSig(GL, 1, 1)).roots == (QQ(-1), QQ(0), QQ(1))
    ))
    c.check("o End([1]) = t", lambda: diagrams.gram_det(ObjectSig(O, 1)).det == T)
    for r in range(4):
        for s in range(4 - r):
            obj = ObjectSig(GL, r, s)
            c.check(f"gl End({obj}) integer roots", lambda obj=obj: _integer_roots(diagrams.gram_det(obj)))
    for m in range(1, 4):
        obj = ObjectSig(O, m)
        c.check(f"o End({obj}) integer roots", lambda obj=obj: _integer_roots(diagrams.gram_det(obj)))


def _suite_dims(c: _Checker) -> None:
    labels = partitions_upto(4)

    def oracle() -> Outcome:
        for lam in labels:
            for mu in labels:
                p = dims.dim_gl(lam, mu)
                for n in range(lam.length + mu.length + 2, 13):
                    want = dims.weyl_dim_gl(padded_weight(lam, mu, n), n)
                    if evaluate(p, n) != want:
                        return False, f"({lam}),({mu}) at n={n}"
        return True

    c.check("dim_gl = Weyl dimension, sizes <= 4, n <= 12", oracle)
    c.check("dim_gl((1),(1)) = t^2 - 1", lambda: dims.dim_gl(_p(1), _p(1)) == T ** 2 - 1)
    c.check("dim_gl((2),(2)) = t^2(t-1)(t+3)/4",
            lambda: dims.dim_gl(_p(2), _p(2)) == (T ** 2 * (T - 1) * (T + 3)).mul_ground(QQ(1, 4)))
    c.check("dim_o(()) = 1", lambda: dims.dim_o(EMPTY) == 1)
    c.check("dim_o((1)) = t", lambda: dims.dim_o(_p(1)) == T)
    c.check("dim_o((2)) = t(t+1)/2 - 1", lambda: dims.dim_o(_p(2)) == (T * (T + 1)).mul_ground(QQ(1, 2)) - 1)
    c.check("dim_o((1,1)) = t(t-1)/2", lambda: dims.dim_o(_p(1, 1)) == (T * (T - 1)).mul_ground(QQ(1, 2)))

    def integer_valued() -> Outcome:
        for total in range(7):
            for a in range(total + 1):
                for lam in partitions_of(a):
                    for mu in partitions_of(total - a):
                        to_binomial(dims.dim_gl(lam, mu))
        for lam in partitions_upto(6):
            to_binomial(dims.dim_o(lam))
        return True

    c.check("dimensions are integer-valued, size <= 6", integer_valued)


def _suite_identities(c: _Checker) -> None:
    def duality() -> Outcome:
        for total in range(7):
            for a in range(total + 1):
                for lam in partitions_of(a):
                    for mu in partitions_of(total - a):
                        if not dims.verify_duality(lam, mu):
                            return False, f"({lam}),({mu})"
        return True

    c.check("duality X*_{lam,mu} = X_{mu,lam}, sizes <= 6", duality)
    for m in range(5):
        c.check(f"X_(m,m) (x) V, m={m}", lambda m=m: dims.verify_tensor_V(m))
    for m in range(1, 5):
        c.check(
            f"two-summand form of X_(m,m) (x) V misses X_(m,m-1), m={m}",
            lambda m=m: dims.tensor_V_defect(m) == dims.dim_gl(_p(m), _p(m - 1)),
        )
    for ell in range(5):
        c.check(f"Q sequence, l={ell}", lambda ell=ell: dims.verify_Q_sequence(ell))
    c.check("o: V (x) V = X_(2) + X_(1,1) + 1", dims.verify_o_square)


def _suite_center(c: _Checker) -> None:
    c.check("P_0 = t", lambda: center.bernoulli_P(0) == T)
    c.check("P_1 = 0", lambda: not center.bernoulli_P(1))
    c.check("P_2 = t(t^2-1)/12", lambda: center.bernoulli_P(2) == (T * (T ** 2 - 1)).mul_ground(QQ(1, 12)))

    def sums() -> Outcome:
        for i in range(9):
            for n in range(1, 11):
                if evaluate(center.bernoulli_P(i), n) != center.bernoulli_sum(i, n):
                    return False, f"i={i}, n={n}"
        return True

    c.check("P_i(n) = defining sum, i <= 8, n <= 10", sums)
    for ell in range(1, 6):
        c.check(f"chi_(l),0(C_1) = {ell}",
                lambda ell=ell: center.chi_gl([ell], [], 1)[1] == ell)

    def interpolation() -> Outcome:
        for lam in partitions_upto(3):
            for mu in partitions_upto(3):
                chi = center.chi_gl(lam.parts, mu.parts, 4)
                for i in range(1, 5):
                    for n in range(8, 13):
                        full = center.chi_at_rank(lam, mu, i, n)
                        if evaluate(chi[i], n) != full:
                            return False, f"({lam}),({mu}) i={i} n={n}"
                        if evaluate(chi[i] - center.bernoulli_P(i), n) != full - center.bernoulli_sum(i, n):
                            return False, f"({lam}),({mu}) i={i} n={n} without P_i"
        return True

    c.check("chi interpolates padded weights", interpolation)
    c.check("sinh(tz/2)/sinh(z/2) generates P_i", lambda: center.bernoulli_egf_check(center.EGF_ORDER))
    c.check("printed generating function gives 3/2 at i=0, t=2",
            lambda: center.printed_egf_value(0, 2) == QQ(3, 2) and center.bernoulli_sum(0, 2) == 2)


def _suite_kostant(c: _Checker) -> None:
    n = 8
    geometric = SeriesQ.from_coeffs([0] + [1] * n, n)
    c.check("harmonic((1),(1)) = q/(1-q)", lambda: invariants.harmonic_hilbert(_p(1), _p(1), n) == geometric)
    c.check("harmonic((),()) = 1", lambda: invariants.harmonic_hilbert(EMPTY, EMPTY, n) == SeriesQ.one(n))
    c.check("identity with corrected rhs, N=4", lambda: invariants.kostant_identity_check(4))

    def printed() -> Outcome:
        rep = invariants.kostant_identity_report(4, printed_rhs=True)
        lhs_want = (T ** 4 - T ** 2 - 2).mul_ground(QQ(1, 2))
        ok = (
            not rep.holds
            and rep.first_mismatch == 2
            and _same(rep.lhs, lhs_want)
            and _same(rep.rhs, T ** 4 - T ** 2 - 1)
        )
        return ok, f"first mismatch at q^{rep.first_mismatch}"

    c.check("printed rhs fails at q^2", printed)

    def e_integer_valued() -> Outcome:
        for coeff in invariants.harmonic_series_E(8).poly_coeffs():
            to_binomial(coeff)
        return True

    c.check("Hilbert series of E is integer-valued, d <= 8", e_integer_valued)


def _suite_necklaces(c: _Checker) -> None:
    for m in range(1, 4):
        c.check(f"h_{m}(q) = prod (1 - m q^j)^-1, N=6", lambda m=m: invariants.verify_hilser(m, 6))

    def counts() -> Outcome:
        for m in range(1, 4):
            for j in range(1, 11):
                fam = invariants.NecklaceFamily(invariants.GL, m)
                if invariants.necklace_generators(fam, j) != invariants.gl_necklace_count(j, m):
                    return False, f"m={m}, j={j}"
        return True

    c.check("necklace enumeration = counting formula", counts)
    osp = invariants.hilb_multi_inv(invariants.NecklaceFamily(invariants.OSP, 1), 10)
    even = geom_product(((j, -1, 1) for j in range(2, 11, 2)), 10)
    c.check("osp, m=1: generators in degrees 2,4,6,...", lambda: osp == even)


def _suite_affine(c: _Checker) -> None:
    c.check("C_{0,0,inf} = prod_{j>=2} (1-q^j)^{-(j-1)}, N=10",
            lambda: affine.c_infinity(EMPTY, EMPTY, 10) == affine.c_zero_infinity(10))
    for p in range(1, 4):
        c.check(f"C_(p),(p) display, p={p}",
                lambda p=p: affine.c_infinity(_p(p), _p(p), 10) == affine.c_pp_display(p, 10))
    for lam, mu in ((EMPTY, EMPTY), (_p(1), _p(1)), (_p(2), _p(1, 1))):
        c.check(f"stabilization ({lam}),({mu}), N=6",
                lambda lam=lam, mu=mu: (True, f"n={affine.stabilization_check(lam, mu, 6)}"))

    def nonnegative() -> Outcome:
        for lam, mu in symfunc.iter_sizes(3):
            for s in (affine.c_infinity(lam, mu, 10), affine.c_infinity_tilde(lam, mu, 10)):
                for coeff in s.poly_coeffs():
                    cs = arith.poly_coeffs(coeff)
                    if len(cs) > 1 or (cs and (not arith.is_integral(cs[0]) or cs[0] < 0)):
                        return False, f"({lam}),({mu})"
        return True

    c.check("limit coefficients are nonnegative integers", nonnegative)


def _suite_sugawara(c: _Checker) -> None:
    c.check("c(sl_t, 1) = t - 1",
            lambda: _same(affine.sugawara_constants(affine.lie_family("sl"), 1).central_charge, T - 1))
    c.check("c(o_t, 1) = t/2",
            lambda: _same(affine.sugawara_constants(affine.lie_family("o"), 1).central_charge, T.mul_ground(QQ(1, 2))))
    c.check("critical level of sp_2t = -2t - 2",
            lambda: affine.sugawara_constants(affine.lie_family("sp"), 1).critical == -2 * T - 2)


# --------------------------------------------------------------- properties

def random_objects(rng: random.Random, family: str, count: int) -> List[ObjectSig]:
    """Objects with pairwise nonempty hom spaces."""
    if family == O:
        parity = rng.randrange(2)
        return [ObjectSig(O, parity + 2 * rng.randrange(2)) for _ in range(count)]
    d = rng.choice((-1, 0, 1))
    objs = []
    for _ in range(count):
        s = rng.randrange(2) if d >= 0 else 1 + rng.randrange(2)
        objs.append(ObjectSig(GL, s + d, s))
    return objs


def random_diagram(rng: random.Random, source: ObjectSig, target: ObjectSig) -> DiagElement:
    return DiagElement.of(rng.choice(diagrams.hom_basis(source, target)))


def _suite_properties(c: _Checker) -> None:
    rng = c.rng

    def associativity() -> Outcome:
        for _ in range(200):
            a, b, cc, d = random_objects(rng, rng.choice((GL, O)), 4)
            f, g, h = random_diagram(rng, a, b), random_diagram(rng, b, cc), random_diagram(rng, cc, d)
            if diagrams.compose(diagrams.compose(h, g), f) != diagrams.compose(h, diagrams.compose(g, f)):
                return False, f"{f} {g} {h}"
        return True

    def units() -> Outcome:
        for _ in range(50):
            a, b = random_objects(rng, rng.choice((GL, O)), 2)
            f = random_diagram(rng, a, b)
            if diagrams.compose(diagrams.identity(b), f) != f or diagrams.compose(f, diagrams.identity(a)) != f:
                return False, f"{f}"
        return True

    def interchange() -> Outcome:
        for _ in range(50):
            fam = rng.choice((GL, O))
            a, b, cc = random_objects(rng, fam, 3)
            a2, b2, c2 = random_objects(rng, fam, 3)
            f, f2 = random_diagram(rng, a, b), random_diagram(rng, b, cc)
            g, g2 = random_diagram(rng, a2, b2), random_diagram(rng, b2, c2)
            lhs = diagrams.tensor(diagrams.compose(f2, f), diagrams.compose(g2, g))
            rhs = diagrams.compose(diagrams.tensor(f2, g2), diagrams.tensor(f, g))
            if lhs != rhs:
                return False, f"{f} {f2} {g} {g2}"
        return True

    def tensor_assoc() -> Outcome:
        for _ in range(50):
            fam = rng.choice((GL, O))
            objs = random_objects(rng, fam, 6)
            x, y, z = (random_diagram(rng, objs[2 * i], objs[2 * i + 1]) for i in range(3))
            if diagrams.tensor(diagrams.tensor(x, y), z) != diagrams.tensor(x, diagrams.tensor(y, z)):
                return False, f"{x} {y} {z}"
        return True

    def trace_symmetry() -> Outcome:
        for _ in range(100):
            a, b = random_objects(rng, rng.choice((GL, O)), 2)
            f, g = random_diagram(rng, a, b), random_diagram(rng, b, a)
            if not _same(diagrams.closure_trace(diagrams.compose(f, g)), diagrams.closure_trace(diagrams.compose(g, f))):
                return False, f"{f} {g}"
        return True

    def orthogonality() -> Outcome:
        for n in range(1, 7):
            classes = partitions_of(n)
            for lam in classes:
                for mu in classes:
                    total = sum(symfunc.class_size(rho) * symfunc.sn_character(lam, rho) * symfunc.sn_character(mu, rho)
                                for rho in classes)
                    if total != (math.factorial(n) if lam == mu else 0):
                        return False, f"({lam}),({mu})"
        return True

    def kronecker() -> Outcome:
        for n in range(1, 7):
            ps = partitions_of(n)
            for lam in ps:
                if symfunc.kronecker(lam, _p(n)) != symfunc.schur_expr(lam):
                    return False, f"({lam}) * ({n})"
                for mu in ps:
                    k = symfunc.kronecker(lam, mu)
                    if k != symfunc.kronecker(mu, lam):
                        return False, f"({lam}) * ({mu}) not commutative"
        return True

    def specialization() -> Outcome:
        for lam in partitions_upto(5):
            closed = symfunc.principal_spec(lam, 12)
            if closed != symfunc.jacobi_trudi_spec(lam, 12):
                return False, f"({lam})"
            lead = lam.size + n_stat(lam)
            if closed.valuation() < min(lead, 13):
                return False, f"({lam}) low terms"
        return True

    c.check("composition is associative", associativity)
    c.check("identities are units", units)
    c.check("interchange law", interchange)
    c.check("tensor is associative", tensor_assoc)
    c.check("trace symmetry", trace_symmetry)
    c.check("character orthogonality, n <= 6", orthogonality)
    c.check("kronecker commutative, unit (n), integral", kronecker)
    c.check("principal specialization = Jacobi-Trudi, |lam| <= 5", specialization)


SUITES: Dict[str, Callable[[_Checker], None]] = {
    "diagrams": _suite_diagrams,
    "gram": _suite_gram,
    "dims": _suite_dims,
    "identities": _suite_identities,
    "center": _suite_center,
    "kostant": _suite_kostant,
    "necklaces": _suite_necklaces,
    "affine": _suite_affine,
    "sugawara": _suite_sugawara,
    "properties": _suite_properties,
}


class VerifyService:
    def __init__(self, monitor: ResourceMonitor, seed: int = 0):
        self.monitor = monitor
        self.seed = seed

    @staticmethod
    def resolve(names: Sequence[str]) -> List[str]:
        if not names or "all" in names:
            return list(SUITES)
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise ValidationError("Unknown verify suite", {"suites": unknown, "known": list(SUITES)})
        return list(names)

    def run_suite(self, name: str) -> SuiteResult:
        result = SuiteResult(name)
        checker = _Checker(result, random.Random(self.seed))
        log.info("verify suite %s", name)
        with self.monitor.track() as usage:
            SUITES[name](checker)
        result.seconds = usage.seconds
        result.rss_mb = usage.rss_mb
        metrics.suite_seconds.labels(name).set(usage.seconds)
        metrics.suite_rss_bytes.labels(name).set(usage.rss_mb * 1024 * 1024)
        metrics.suite_passed.labels(name).set(1 if result.passed else 0)
        return result

    def run(self, names: Sequence[str]) -> List[SuiteResult]:
        return [self.run_suite(n) for n in self.resolve(names)]
