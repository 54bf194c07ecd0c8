import random

import pytest

from censym.algebra import (
    LinearMapWitness,
    algebra_of_censym,
    centre,
    check_witness,
    direct_product,
    format_vector,
    full_matrix_algebra,
    ideal_generated,
    ideal_is_two_sided,
    quotient_by_ideal,
    subalgebra_from_vectors,
    zero_algebra,
)
from censym.basis import coords, exchange_coords, from_coords, rank_of
from censym.linalg import spans_equal, vec_is_zero
from censym.rings import GroupRingC2

from conftest import C2Z, GF2, GF3, GF5, Q, Z


def label_map(a):
    return {lab: u for u, lab in enumerate(a.labels)}


@pytest.mark.parametrize("n", range(1, 6))
def test_censym_algebra_validates(n, any_ring):
    a = algebra_of_censym(any_ring, n)
    assert a.rank == rank_of(n)
    assert a.validate() == []
    assert a.invol_is_signed_permutation()


def test_censym_n2_relations():
    a = algebra_of_censym(Z, 2)
    lab = label_map(a)
    f12 = a.basis_vector(lab["f1_2"])
    assert a.mul(f12, f12) == a.basis_vector(lab["f1_1"])
    assert a.unit == a.basis_vector(lab["f1_1"])


def test_censym_n3_transpose():
    a = algebra_of_censym(Z, 3)
    lab = label_map(a)
    assert a.invol[lab["f1_2"]] == a.basis_vector(lab["f2_1"])
    assert a.invol[lab["f2_1"]] == a.basis_vector(lab["f1_2"])
    for fixed in ("f1_1", "f2_2", "f1_3"):
        assert a.invol[lab[fixed]] == a.basis_vector(lab[fixed])


def test_full_matrix_algebra():
    m2 = full_matrix_algebra(Z, 2)
    assert m2.rank == 4 and m2.validate() == []
    lab = label_map(m2)
    assert m2.mul(m2.basis_vector(lab["E1_2"]), m2.basis_vector(lab["E2_1"])) \
        == m2.basis_vector(lab["E1_1"])

    rc2 = full_matrix_algebra(C2Z, 1)
    assert rc2.rank == 2 and rc2.ring == Z
    assert rc2.labels == ("E1_1", "x*E1_1")
    assert rc2.validate() == []
    lab = label_map(rc2)
    x = rc2.basis_vector(lab["x*E1_1"])
    assert rc2.mul(x, x) == rc2.basis_vector(lab["E1_1"])

    m2c2 = full_matrix_algebra(C2Z, 2)
    assert m2c2.rank == 8 and m2c2.validate() == []

    with pytest.raises(ValueError):
        full_matrix_algebra(Z, 0)


def test_oracle_equivalence_matrix_vs_tensor():
    # multiplying matrices and contracting coordinates agree
    rng = random.Random(23)
    for ring in (Z, GF5):
        for n in (2, 3, 4, 5):
            a = algebra_of_censym(ring, n)
            for _ in range(10):
                u = [ring.sample(rng) for _ in range(a.rank)]
                v = [ring.sample(rng) for _ in range(a.rank)]
                mu = from_coords(ring, n, u)
                mv = from_coords(ring, n, v)
                assert coords(mu * mv) == a.mul(u, v)


def test_ideal_of_middle_idempotent_s3():
    a = algebra_of_censym(Z, 3)
    lab = label_map(a)
    j = ideal_generated(a, [a.basis_vector(lab["f2_2"])])
    assert j.rank == 4
    f1_plus_f13 = [0] * 5
    f1_plus_f13[lab["f1_1"]] = 1
    f1_plus_f13[lab["f1_3"]] = 1
    expected = [
        a.basis_vector(lab["f2_2"]),
        a.basis_vector(lab["f1_2"]),
        a.basis_vector(lab["f2_1"]),
        f1_plus_f13,
    ]
    assert spans_equal(Z, j.vectors, expected, a.rank)
    assert ideal_is_two_sided(j)


def test_ideal_of_unit_is_everything():
    a = algebra_of_censym(Q, 3)
    assert ideal_generated(a, [a.unit]).rank == 5


def test_nilpotent_ideal_char2():
    rc2 = full_matrix_algebra(GroupRingC2(GF2), 1)
    one_plus_x = [1, 1]
    j = ideal_generated(rc2, [one_plus_x])
    assert j.rank == 1
    sq = rc2.mul(j.vectors[0], j.vectors[0])
    assert vec_is_zero(GF2, sq)


def test_quotient_s3_by_middle():
    a = algebra_of_censym(Q, 3)
    lab = label_map(a)
    j = ideal_generated(a, [a.basis_vector(lab["f2_2"])])
    q, proj = quotient_by_ideal(a, j)
    assert q.rank == 1
    assert q.validate() == []
    # the anti-diagonal generator is minus the class of the corner idempotent
    p13 = proj.apply(a.basis_vector(lab["f1_3"]))
    p1 = proj.apply(a.basis_vector(lab["f1_1"]))
    assert p13 == [Q.neg(c) for c in p1]
    rep = check_witness(proj)
    assert rep.verdict == "pass"
    # the projection kills exactly the ideal
    for v in j.vectors:
        assert vec_is_zero(Q, proj.apply(v))


def test_quotient_s5_matches_matrix_relations():
    a = algebra_of_censym(Q, 5)
    lab = label_map(a)
    j = ideal_generated(a, [a.basis_vector(lab["f3_3"])])
    assert j.rank == 9
    q, proj = quotient_by_ideal(a, j)
    assert q.rank == 4
    # fbar_12 * fbar_21 == fbar_11
    p12 = proj.apply(a.basis_vector(lab["f1_2"]))
    p21 = proj.apply(a.basis_vector(lab["f2_1"]))
    p11 = proj.apply(a.basis_vector(lab["f1_1"]))
    assert q.mul(p12, p21) == p11


def test_quotient_by_whole_algebra_is_zero():
    a = algebra_of_censym(Q, 3)
    q, proj = quotient_by_ideal(a, ideal_generated(a, [a.unit]))
    assert q.rank == 0
    assert q.validate() == []
    assert proj.apply(a.unit) == []


def test_zero_algebra_is_legal():
    z = zero_algebra(Z)
    assert z.rank == 0 and z.validate() == []


def test_direct_product():
    p = direct_product(full_matrix_algebra(Z, 1), full_matrix_algebra(Z, 2),
                       prefixes=("m", "p"))
    assert p.rank == 5
    assert p.validate() == []
    assert p.labels[0] == "m:E1_1" and p.labels[1] == "p:E1_1"


def test_subalgebra_rejects_non_closed():
    a = algebra_of_censym(Z, 3)
    lab = label_map(a)
    # f1_2 * f2_1 = f1_1 + f1_3 falls outside the span of the two generators
    with pytest.raises(ValueError):
        subalgebra_from_vectors(
            a,
            [a.basis_vector(lab["f1_2"]), a.basis_vector(lab["f2_1"])],
            ["g", "h"],
            a.basis_vector(lab["f1_2"]),
        )


def test_check_witness_negative_control():
    a = algebra_of_censym(Z, 3)
    w = LinearMapWitness(a, a, [list(r) for r in a.invol],
                         claimed=("algebra-homomorphism",), name="transpose")
    rep = check_witness(w)
    assert rep.verdict == "fail"
    assert rep.counterexample is not None
    assert rep.counterexample["property"] == "algebra-homomorphism"


def test_check_witness_identity_passes():
    a = algebra_of_censym(GF3, 4)
    eye = [a.basis_vector(u) for u in range(a.rank)]
    w = LinearMapWitness(a, a, eye, eye,
                         claimed=("algebra-homomorphism", "bijective",
                                  "involution-equivariant"),
                         name="identity")
    assert check_witness(w).verdict == "pass"


def test_bijective_needs_inverse():
    a = algebra_of_censym(Z, 2)
    eye = [a.basis_vector(u) for u in range(a.rank)]
    w = LinearMapWitness(a, a, eye, None, claimed=("bijective",))
    assert check_witness(w).verdict == "fail"


def test_centre_field_cases(field):
    for n in range(2, 6):
        a = algebra_of_censym(field, n)
        rep = centre(a, candidates=[a.unit, exchange_coords(field, n)])
        assert rep.verdict == "pass", (field.literal(), n)
        assert rep.witness["dimension"] == 2
        assert rep.witness["reduces_to_candidates"]


def test_centre_n1():
    a = algebra_of_censym(GF5, 1)
    rep = centre(a, candidates=[a.unit, exchange_coords(GF5, 1)])
    assert rep.witness["dimension"] == 1


def test_centre_matrix_algebra_is_scalars():
    rep = centre(full_matrix_algebra(GF5, 2))
    assert rep.witness["dimension"] == 1
    assert rep.witness["basis"] == ["E1_1 + E2_2"]


def test_centre_nullspace_is_closed_under_multiplication():
    a = algebra_of_censym(GF3, 5)
    rep = centre(a)
    # parse the basis back through coordinates: use candidates instead
    rep2 = centre(a, candidates=[a.unit, exchange_coords(GF3, 5)])
    assert rep2.witness["reduces_to_candidates"]
    # unit, c, and c*c stay inside the centre span
    c = exchange_coords(GF3, 5)
    cc = a.mul(c, c)
    assert cc == a.unit


def test_centre_containment_certificate_over_int():
    a = algebra_of_censym(Z, 4)
    rep = centre(a, candidates=[a.unit, exchange_coords(Z, 4)])
    assert rep.verdict == "pass"
    assert rep.witness["certificate"] == "containment"
    rep_bad = centre(a, candidates=[a.basis_vector(1)])
    assert rep_bad.verdict == "fail"


def test_format_vector():
    a = algebra_of_censym(Z, 3)
    v = a.zero_vector()
    lab = label_map(a)
    v[lab["f1_1"]] = 1
    v[lab["f1_3"]] = -1
    v[lab["f2_2"]] = 2
    assert format_vector(Z, a.labels, v) == "f1_1 - f1_3 + 2*f2_2"
    assert format_vector(Z, a.labels, a.zero_vector()) == "0"
    w = algebra_of_censym(C2Z, 2)
    u = w.zero_vector()
    u[0] = (1, 1)
    assert format_vector(C2Z, w.labels, u) == "(1+1*x)*f1_1"


def test_centre_basis_spans_closed_algebra(field):
    from censym.algebra import centre_basis
    from censym.linalg import span_basis

    a = algebra_of_censym(field, 4)
    basis = centre_basis(a)
    rb = span_basis(field, basis, a.rank)
    assert rb.contains(a.unit)
    for x in basis:
        for y in basis:
            assert rb.contains(a.mul(x, y))


def test_quotient_complement_inclusion_round_trip():
    a = algebra_of_censym(Q, 5)
    lab = label_map(a)
    j = ideal_generated(a, [a.basis_vector(lab["f3_3"])])
    q, proj = quotient_by_ideal(a, j)
    # the quotient basis consists of classes of original basis elements;
    # projecting those representatives gives back the unit coordinates
    for qi, qlab in enumerate(q.labels):
        rep = a.basis_vector(lab[qlab])
        assert proj.apply(rep) == q.basis_vector(qi)


def test_centre_containment_at_size_one_dedupes_candidates():
    # the exchange matrix IS the unit at size 1; the certificate must not
    # report the duplicated candidate list as dependent
    a = algebra_of_censym(Z, 1)
    rep = centre(a, candidates=[a.unit, exchange_coords(Z, 1)])
    assert rep.verdict == "pass"


def test_full_matrix_algebra_unflattened_over_group_ring():
    m = full_matrix_algebra(C2Z, 2, flatten_group_ring=False)
    assert m.rank == 4 and m.ring == C2Z
    assert m.validate() == []
