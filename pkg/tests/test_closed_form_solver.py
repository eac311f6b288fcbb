from fractions import Fraction

import pytest

from mstep import expressions as ex
from mstep.closed_form_solver import (
    CaseNotApplicable,
    NonCoprime,
    RepeatedFactor,
    cell_label,
    derive_case,
    equivalent,
    solve_conv2,
    solve_conv_multi,
    table,
)
from mstep.convolution_oracle import conv_multi
from mstep.sequences import make_mstep, resolve
from mstep.series_algebra import gf_of, poly_gcd


def reference_fq():
    return ex.add(ex.term("Q", 1), ex.term("Q", -1), ex.scale(-1, ex.term("F", 1)))


def test_solve_fq_matches_closed_form():
    cf = solve_conv2(resolve("F"), resolve("Q"))
    assert cf.gf_equal
    assert equivalent(cf, reference_fq(), 0)
    assert cf.evaluate(4) == 5
    assert cf.check_oracle(100)


def test_solve_f_hexanacci():
    cf = solve_conv2(resolve("F"), resolve("hexanacci"))
    ref = ex.scale(Fraction(1, 5), ex.add(
        ex.term("hexanacci", 3), ex.term("hexanacci", 1),
        ex.scale(-1, ex.term("hexanacci")), ex.scale(3, ex.term("hexanacci", -1)),
        ex.term("hexanacci", -3),
        ex.scale(-1, ex.term("F", 3)), ex.scale(-1, ex.term("F", 1))))
    assert equivalent(cf, ref, 0)
    assert cf.evaluate(3) == 2


def test_solve_f_octanacci():
    cf = solve_conv2(resolve("F"), resolve("octanacci"))
    ref = ex.scale(Fraction(1, 4), ex.add(
        ex.term("octanacci", 3), ex.scale(-1, ex.term("octanacci")),
        ex.scale(2, ex.term("octanacci", -1)), ex.term("octanacci", -3),
        ex.scale(-1, ex.term("F", 3))))
    assert equivalent(cf, ref, 0)
    assert cf.evaluate(4) == 5


def test_solve_pow2_with_fibonacci():
    cf = solve_conv2(resolve("pow2"), resolve("F"))
    ref = ex.sub(ex.term("pow2", 1), ex.term("F", 3))
    assert equivalent(cf, ref, 0)
    assert cf.evaluate(4) == 19
    assert cf.check_oracle(80)


def test_noncoprime_rejected_with_factor():
    from mstep.series_algebra import Poly

    with pytest.raises(NonCoprime) as info:
        solve_conv2(resolve("pow2"), resolve("jacobsthal"))
    assert info.value.common == Poly((1, -2))


def test_repeated_factor_rejected():
    with pytest.raises(RepeatedFactor):
        solve_conv2(resolve("F"), resolve("F"))


def test_solve_multi_triple_and_quadruple():
    ftq = solve_conv_multi(["F", "T", "Q"])
    assert equivalent(ftq, ex.add(
        ex.term("Q", 4), ex.term("Q", 2), ex.scale(-1, ex.term("T", 5)),
        ex.term("F", 3)), 0)
    assert ftq.evaluate(3) == 1
    ftqp = solve_conv_multi(["F", "T", "Q", "P"])
    assert ftqp.evaluate(4) == 1
    assert ftqp.check_oracle(60)


def test_solve_single_factor_is_identity():
    cf = solve_conv_multi(["F"])
    assert cf.parts == (("F", {0: Fraction(1)}),)
    assert all(cf.evaluate(n) == conv_multi(["F"], n) for n in range(30))


def test_equivalent_accepts_recurrence_rewrites():
    cf = solve_conv2(resolve("F"), resolve("Q"))
    # rewrite Q_{n+1} via the Tetranacci recurrence: still the same function
    rewritten = ex.add(
        ex.term("Q"), ex.term("Q", -1), ex.term("Q", -2), ex.term("Q", -3),
        ex.term("Q", -1), ex.scale(-1, ex.term("F", 1)))
    assert equivalent(cf, rewritten, 1)


def test_equivalent_rejects_perturbation():
    cf = solve_conv2(resolve("F"), resolve("Q"))
    wrong = ex.add(ex.term("Q", 1), ex.scale(2, ex.term("Q", -1)),
                   ex.scale(-1, ex.term("F", 1)))
    assert not equivalent(cf, wrong, 0)


def test_derive_case_hexanacci_tetranacci():
    d = derive_case(4, 2)
    assert d.case == "p|m" and d.ell == 2 and d.cross_checked
    # aligned form carries the explicit leftover terms 2 s_{n-6} + s_{n-5}
    parts, c = ex.linear_parts(ex.add(*[
        t for t in d.identity.rhs.terms if not isinstance(t, ex.ConvAtom)]))
    assert parts == {"hexanacci": {-6: Fraction(2), -5: Fraction(1)}} and c == 0
    assert ex.evaluate(d.identity.lhs, 8) == 8
    conv_part = [t for t in d.identity.rhs.terms if isinstance(t, ex.ConvAtom)][0]
    assert ex.evaluate(conv_part, 8) == 4


def test_derive_case_reproduces_shifted_fq_kernel():
    d = derive_case(2, 2)
    assert d.identity.rhs == ex.conv(ex.term("Q"), ex.term("F", 2), offset=-3)
    cf = solve_conv2(resolve("F"), resolve("Q"))
    assert equivalent(cf, d.closed_expr, 0)
    assert equivalent(cf, reference_fq(), 0)


def test_derive_case_octanacci():
    d = derive_case(2, 6)
    assert d.case == "p=2m+2" and d.cross_checked


def test_derive_case_rejects_uncovered_cell():
    with pytest.raises(CaseNotApplicable):
        derive_case(2, 4)
    with pytest.raises(CaseNotApplicable):
        derive_case(1, 2)


def test_denominators_pairwise_coprime():
    msteps = {m: gf_of(make_mstep(m)).den for m in range(2, 13)}
    for a in range(2, 13):
        for b in range(a + 1, 13):
            assert poly_gcd(msteps[a], msteps[b]).degree == 0
    for extra in ("pell", "jacobsthal", "pow2"):
        d = gf_of(resolve(extra)).den
        for m in range(2, 13):
            assert poly_gcd(d, msteps[m]).degree == 0


def test_cell_labels():
    assert cell_label(2, 1) == "p=1"
    assert cell_label(4, 2) == "p|m"
    assert cell_label(3, 2) == "p|m+1"
    assert cell_label(2, 6) == "p=2m+2"
    assert cell_label(2, 4) == "general-solver"


def test_small_table():
    cells = table(7, oracle_n=40)
    assert len(cells) == 15
    for c in cells:
        assert c["gf_equal"] and c["oracle_ok"]
        assert c["case_equivalent"] in (None, True)


def test_closed_form_json_schema():
    cf = solve_conv2(resolve("F"), resolve("P"))
    cf.check_oracle(50)
    doc = cf.to_json()
    assert set(doc) == {"factors", "parts", "corrections", "verified"}
    assert doc["factors"] == ["F", "P"]
    for part in doc["parts"]:
        assert set(part) == {"seq", "terms"}
        for t in part["terms"]:
            assert set(t) == {"shift", "coeff"} and isinstance(t["coeff"], str)
    assert doc["verified"] == {"gf_equal": True, "oracle_max_n": 50}


def test_reconstruction_equals_product_gf():
    for names in (("F", "T"), ("T", "P"), ("pell", "Q"), ("F", "T", "Q")):
        cf = solve_conv_multi(list(names))
        product = gf_of(resolve(names[0]))
        for nm in names[1:]:
            product = product * gf_of(resolve(nm))
        assert cf.gf() == product


def test_random_coprime_multisets_match_oracle():
    import random

    rng = random.Random(31)
    pool = ["F", "T", "Q", "P", "hexanacci", "heptanacci", "octanacci",
            "pell", "jacobsthal", "pow2", "F1", "F9"]
    solved = 0
    while solved < 12:
        names = rng.sample(pool, rng.randint(2, 3))
        try:
            cf = solve_conv_multi(names)
        except NonCoprime:
            continue
        assert cf.gf_equal
        assert all(cf.evaluate(n) == conv_multi(names, n) for n in range(61))
        solved += 1
