import json
import math
from fractions import Fraction

import pytest

from ordersum import theorems
from ordersum.arith import f_ratio, psi_cyclic
from ordersum.groups import (
    Abelian,
    Cyclic,
    DirectProduct,
    GeneralizedQuaternion,
    build_group,
    parse_spec,
)
from ordersum.theorems import (
    Case,
    VerificationReport,
    classify_equality,
    lemma5_check,
    lemma6_check,
    lemma7_check,
    mqr_formula_check,
    proof_inequality_audit,
    report_to_dict,
    reports_to_csv,
    reports_to_text,
    thm4_family_check,
    verify_equality_classification,
    verify_max_cyclic,
    verify_upper_bound,
)


class TestMaxCyclic:
    def test_order_8(self, cache_dir):
        report = verify_max_cyclic(8, cache_dir=cache_dir)
        assert report.verdict == "holds"
        assert sorted(c.lhs for c in report.cases) == [15, 19, 23, 27]
        assert all(c.rhs == 43 for c in report.cases)

    def test_order_2_vacuous(self, cache_dir):
        report = verify_max_cyclic(2, cache_dir=cache_dir)
        assert report.verdict == "holds" and not report.cases
        assert "vacuous" in report.note

    def test_order_12(self, cache_dir):
        report = verify_max_cyclic(12, cache_dir=cache_dir)
        assert report.verdict == "holds"
        assert sorted(c.lhs for c in report.cases) == [31, 33, 45, 49]


class TestUpperBound:
    def test_equality_case(self):
        g = build_group(DirectProduct([Abelian([2, 2]), Cyclic(3)]))
        report = verify_upper_bound(g, 2)
        assert report.verdict == "equality"
        assert report.lhs == 49 and report.rhs == Fraction(7, 11) * 77

    def test_strict_case_q8(self):
        report = verify_upper_bound(build_group(GeneralizedQuaternion(8)), 2)
        assert report.verdict == "holds"
        assert report.lhs == 27 and report.rhs == Fraction(301, 11)

    def test_equality_case_q3(self):
        g = build_group(parse_spec("C3xC3xC5"))
        report = verify_upper_bound(g, 3)
        assert report.verdict == "equality"
        assert report.rhs == Fraction(25, 61) * psi_cyclic(45)

    def test_rejects_cyclic(self):
        with pytest.raises(ValueError):
            verify_upper_bound(build_group(Cyclic(8)), 2)

    def test_rejects_wrong_prime(self):
        with pytest.raises(ValueError):
            verify_upper_bound(build_group(GeneralizedQuaternion(8)), 3)


class TestEqualityClassification:
    def test_n4(self, cache_dir):
        witnesses = classify_equality(4, 2, cache_dir=cache_dir)
        assert len(witnesses) == 1
        assert witnesses[0].spec_text == "C2xC2" and witnesses[0].k == 1

    def test_n12(self, cache_dir):
        witnesses = classify_equality(12, 2, cache_dir=cache_dir)
        assert [w.spec_text for w in witnesses] == ["C2xC2xC3"]
        report = verify_equality_classification(12, 2, cache_dir=cache_dir)
        strict = [c for c in report.cases if c.expected == "holds"]
        assert len(strict) == 3 and all(c.verdict == "holds" for c in strict)

    def test_n8_no_witness(self, cache_dir):
        assert classify_equality(8, 2, cache_dir=cache_dir) == []

    def test_exhaustive_all_orders(self, cache_dir):
        for n in range(2, 13):
            report = verify_equality_classification(n, cache_dir=cache_dir)
            assert report.verdict == "holds", n

    def test_family_mode_flagged(self):
        report = verify_equality_classification(4 * 25, 2, family_only=True)
        assert report.params["mode"] == "family-restricted"
        assert report.verdict == "holds"
        assert report.cases[0].verdict == "equality"

    def test_bound_exceeded_without_family_flag(self):
        from ordersum.enumeration import EnumerationBoundError

        with pytest.raises(EnumerationBoundError):
            verify_equality_classification(100)

    def test_rejects_wrong_prime(self):
        with pytest.raises(ValueError):
            verify_equality_classification(12, 3)


class TestThm4Family:
    def test_q2_small(self):
        report = thm4_family_check(2, 20)
        assert report.verdict == "holds"
        eq = {c.params["k"] for c in report.cases if c.expected == "equality"}
        assert eq == {k for k in range(1, 21) if k % 2 == 1}
        sharp = [c for c in report.cases if c.expected == "not_equality"]
        assert all(c.verdict != "equality" for c in sharp)
        assert "family-restricted" in report.note

    def test_q3_small(self):
        from ordersum.arith import least_prime_factor

        report = thm4_family_check(3, 14)
        assert report.verdict == "holds"
        eq = {c.params["k"] for c in report.cases if c.expected == "equality"}
        assert eq == {k for k in range(1, 15) if math.gcd(k, 6) == 1}
        # For k sharing a factor with 6 the f(q*) identity must not hold.
        for c in report.cases:
            if c.expected == "not_equality":
                k = c.params["k"]
                assert c.params["q_star"] == min(3, least_prime_factor(k))
                assert c.verdict != "equality"

    def test_q5_full_invariant_range(self):
        # Groups up to order 25 * 60 = 1500, both sides by brute force.
        report = thm4_family_check(5, 60)
        assert report.verdict == "holds"
        eq = {c.params["k"] for c in report.cases if c.expected == "equality"}
        assert eq == {k for k in range(1, 61) if math.gcd(k, 30) == 1}

    def test_rejects_composite_q(self):
        with pytest.raises(ValueError):
            thm4_family_check(4, 5)


class TestMqr:
    @pytest.mark.parametrize(
        "q,r,closed",
        [(2, 4, 87), (2, 5, 343), (3, 3, 187), (3, 4, 1645), (5, 3, 2621)],
    )
    def test_stock_pairs(self, q, r, closed):
        report = mqr_formula_check(q, r)
        assert report.verdict == "holds"
        assert report.params["closed_form"] == closed
        both = [c for c in report.cases if c.expected == "equality"]
        assert len(both) == 2 and all(c.lhs == closed for c in both)

    def test_below_second_max_ratio(self):
        report = mqr_formula_check(2, 4)
        below = [c for c in report.cases if c.expected == "holds"][0]
        assert below.lhs == 87 and below.rhs == Fraction(7, 11) * psi_cyclic(16)

    def test_domain_violation(self):
        from ordersum.groups import GroupSpecError

        with pytest.raises(GroupSpecError):
            mqr_formula_check(2, 3)


class TestLemmas:
    def test_lemma5_small(self):
        report = lemma5_check(80)
        assert report.verdict == "holds"
        central = sum(
            1 for m, k, a in theorems._sylow_semidirect_parameters(80) if a == 1
        )
        assert report.params["equalities"] == central

    def test_lemma6_small(self):
        report = lemma6_check(80)
        assert report.verdict == "holds"
        assert report.params["groups_checked"] > 0

    def test_lemma7_examples(self, cache_dir):
        r6 = lemma7_check(6, cache_dir=cache_dir)
        assert r6.verdict == "holds"
        assert any(c.params.get("m") == 3 and c.lhs == 2 for c in r6.cases)

        r10 = lemma7_check(10, cache_dir=cache_dir)
        assert r10.verdict == "holds"
        assert any(c.params.get("m") == 5 and c.lhs == 2 for c in r10.cases)

        r12 = lemma7_check(12, cache_dir=cache_dir)
        assert r12.verdict == "holds"
        assert all(c.verdict == "not_applicable" for c in r12.cases)

    def test_lemma7_prime_order(self, cache_dir):
        report = lemma7_check(5, cache_dir=cache_dir)
        assert report.verdict == "not_applicable"


class TestAudit:
    def test_expected_pattern(self):
        report = proof_inequality_audit(29, 61, 4)
        assert report.verdict == "holds"

    def test_q2_failure_integers(self):
        report = proof_inequality_audit(7, 13, 2)
        c2 = next(c for c in report.cases if c.params.get("item") == "c" and c.params["q"] == 2)
        assert (c2.params["cross_lhs"], c2.params["cross_rhs"]) == (341, 336)
        assert c2.verdict == "fails" and c2.ok

    def test_q3_near_miss_integers(self):
        report = proof_inequality_audit(7, 13, 2)
        c3 = next(c for c in report.cases if c.params.get("item") == "c" and c.params["q"] == 3)
        assert (c3.params["cross_lhs"], c3.params["cross_rhs"]) == (4087, 4375)
        assert c3.verdict == "holds" and c3.ok

    def test_b_boundary(self):
        report = proof_inequality_audit(7, 13, 3)
        b = next(c for c in report.cases if c.params.get("item") == "b"
                 and c.params["r"] == 3 and c.params["s"] == 1)
        assert b.verdict == "equality"
        assert b.lhs == Fraction(4, 28) == Fraction(1, 7) == b.rhs

    def test_d_exact(self):
        report = proof_inequality_audit(5, 7, 1)
        d = next(c for c in report.cases if c.params.get("item") == "d")
        assert d.lhs == Fraction(43, 75) and d.rhs == Fraction(7, 11)
        assert d.verdict == "holds"

    def test_e_boundary(self):
        report = proof_inequality_audit(5, 7, 3)
        for c in report.cases:
            if c.params.get("item") == "e":
                assert c.verdict == "holds"


class TestSerialization:
    def test_rationals_as_strings(self):
        report = verify_upper_bound(build_group(GeneralizedQuaternion(8)), 2)
        doc = report_to_dict(report)
        assert doc["rhs"] == "301/11" and doc["lhs"] == 27
        json.dumps(doc)  # must be JSON-serializable

    def test_csv_shape(self):
        report = verify_max_cyclic(8)
        csv = reports_to_csv([report])
        lines = csv.strip().split("\n")
        assert lines[0] == "claim_id,params,lhs,rhs,verdict,witness"
        assert len(lines) == 1 + len(report.cases)

    def test_text_marks_failures(self):
        bad = VerificationReport(
            claim_id="max_cyclic",
            params={"n": 0},
            verdict="fails",
            cases=[Case(params={}, lhs=2, rhs=1, verdict="fails", expected="holds")],
        )
        text = reports_to_text([bad])
        assert "BAD" in text and "[FAILS]" in text

    def test_verdict_recomputable(self):
        report = verify_max_cyclic(12)
        for case in report.cases:
            assert case.verdict == ("holds" if case.lhs < case.rhs else
                                    "equality" if case.lhs == case.rhs else "fails")
