import pytest

from pocfrob.classifier import (
    Justification,
    THEOREM_D_FAMILIES,
    classify,
    classify_complement,
    pierpont_family_params,
    theorem_a_check,
)
from pocfrob.groups import (
    order_census_bruteforce,
    realize_complement,
    realize_frobenius,
    semidirect_product,
)
from pocfrob.numtheory import is_pierpont_prime
from pocfrob.orderclasses import is_poc
from pocfrob.specs import (
    Cyclic,
    FrobeniusSpec,
    HomocyclicKernel,
    Metacyclic,
    QuatCyclic,
    SL2_3,
    SL2_5,
    parse_complement,
    parse_spec,
)


def check(text):
    return classify(parse_spec(text))


def test_examples():
    v = check("H(11,1,2):SL(2,5)")
    assert v.poc and v.justification is Justification.THM_B
    assert v.summary() == "POC: yes (Theorem B)"
    assert not check("H(19,1,2):SL(2,5)").poc
    assert check("H(5,1,2):C24").poc
    assert check("H(5,1,2):M(3,8,2)").poc
    assert check("H(5,1,2):SL(2,3)").poc
    assert check("H(3,1,4):M(5,16,4)").poc
    assert check("H(17,1,2):M(9,32,8)").poc
    assert check("H(3,2,2):C8").poc


def test_cyclic_rank_one():
    assert check("H(7,1,1):C6").poc
    assert check("H(7,3,1):C6").poc
    assert not check("H(11,1,1):C10").poc
    assert not check("H(7,1,1):C3").poc
    assert not check("H(13,1,1):C4").poc


def test_cyclic_rank_two_and_higher():
    assert not check("H(11,1,2):C120").poc
    assert not check("H(3,1,4):C80").poc
    assert check("H(7,2,2):C48").poc


def test_nilpotent_non_cyclic_complements_are_false():
    for text in ["H(5,1,2):Q8xC3", "H(3,1,4):Q16xC5", "H(3,1,2):Q8xC1", "H(7,1,2):Q16xC3"]:
        v = check(text)
        assert not v.poc
        assert v.justification is Justification.NILPOTENT_IN_FROBENIUS


def test_complement_verdicts():
    assert classify_complement(parse_complement("Q8xC3")).poc
    assert classify_complement(parse_complement("Q16xC5")).poc
    assert classify_complement(parse_complement("Q8xC9")).poc
    assert not classify_complement(parse_complement("Q8xC5")).poc
    assert not classify_complement(parse_complement("Q8")).poc
    assert classify_complement(Cyclic(24)).poc
    assert not classify_complement(Cyclic(10)).poc
    assert classify_complement(SL2_5()).poc
    assert classify_complement(SL2_3()).poc


def test_theorem_d_and_e():
    v = check("H(5,1,2):M(3,8,2)")
    assert v.justification is Justification.THM_D
    # same group, other presentation of the inverting action
    assert check("H(5,1,2):M(3,8,-1)").poc
    assert not check("H(7,1,2):M(5,8,4)").poc
    assert check("H(13,1,2):M(7,8,6)").justification is Justification.BIPRIMARY_Q
    v = check("H(31,1,2):M(15,64,2)")
    assert not v.poc and v.justification is Justification.THM_E
    assert not check("H(11,1,2):M(15,8,2)").poc
    assert not check("H(11,1,2):M(5,24,2)").poc


def test_theorem_a_conditions():
    v = theorem_a_check(parse_spec("H(19,1,2):SL(2,5)"))
    assert not v.poc and "(c)" in v.details
    v = theorem_a_check(parse_spec("H(3,1,2):Q8xC1"))
    assert not v.poc and "(a)" in v.details
    # the reduction holds here; only the nilpotent-complement theorem rules it out
    assert theorem_a_check(parse_spec("H(5,1,2):Q8xC3")).poc
    assert not check("H(5,1,2):Q8xC3").poc
    assert theorem_a_check(parse_spec("H(11,1,2):SL(2,5)")).poc


def test_pierpont_params():
    assert pierpont_family_params(20) == [(3, 1), (3, 2), (5, 1)]
    params = pierpont_family_params(15000)
    assert len(params) == 27
    orders = [p**k * (p - 1) for p, k in params]
    assert orders == sorted(orders)
    assert all(is_pierpont_prime(p) and p > 2 for p, _ in params)
    # independent loop over odd primes
    expected = {
        (p, k)
        for p in range(3, 15002)
        if is_pierpont_prime(p)
        for k in range(1, 20)
        if p**k * (p - 1) <= 15000
    }
    assert set(params) == expected


REALIZABLE = [
    "H(3,1,1):C2", "H(5,1,1):C4", "H(7,1,1):C6", "H(7,1,1):C3", "H(11,1,1):C5",
    "H(3,1,2):C8", "H(3,1,2):C4", "H(5,1,2):C24", "H(5,1,2):C12", "H(5,1,2):C8",
    "H(5,1,2):M(3,8,2)", "H(5,1,2):SL(2,3)", "H(7,1,2):Q8xC3", "H(7,1,2):Q16xC3",
    "H(3,1,4):M(5,16,4)", "H(13,1,1):C12", "H(13,1,1):C6", "H(5,2,2):SL(2,3)",
]


@pytest.mark.parametrize("text", REALIZABLE)
def test_classify_agrees_with_reduction_and_brute_force(text):
    spec = parse_spec(text)
    action = realize_frobenius(spec.kernel, spec.complement)
    assert action is not None
    verdict = classify(spec)
    assert verdict.poc == theorem_a_check(spec).poc
    if spec.order <= 20000:
        g = semidirect_product(spec.kernel, action)
        assert verdict.poc == is_poc(order_census_bruteforce(g))


def test_theorem_d_families_are_consistent():
    for p, r, h in THEOREM_D_FAMILIES:
        spec = FrobeniusSpec(HomocyclicKernel(p, 1, r), h)
        assert classify(spec).poc
        assert theorem_a_check(spec).poc


def test_theorem_d_metacyclic_member_without_realization():
    # C3 x| C16 has no fixed-point-free action on C7^2, so the listed case is vacuous
    assert realize_complement(Metacyclic(3, 16, 2), 2, 7, fpf=True) is None


def test_unclassified_fallback():
    # a metacyclic {2,3,7} complement is outside every classification theorem
    spec = FrobeniusSpec(HomocyclicKernel(43, 1, 1), Metacyclic(7, 6, 2))
    v = classify(spec)
    assert v.justification in (Justification.THM_A, Justification.UNCLASSIFIED)
    assert v.poc == theorem_a_check(spec).poc


def test_quaternion_complements_never_poc_in_frobenius():
    for n in range(3, 7):
        for m in (1, 3, 5, 9, 25):
            for p, r in [(3, 2), (5, 2), (7, 2), (3, 4), (13, 2)]:
                if (p**r - 1) % (2**n * m) or m % p == 0:
                    continue
                assert not classify(FrobeniusSpec(HomocyclicKernel(p, 1, r), QuatCyclic(n, m))).poc
