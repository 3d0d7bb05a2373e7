from fractions import Fraction
from itertools import combinations
import random

import pytest

from selfdual import exactnum as ex
from selfdual.config import sample_selfdual
from selfdual.errors import BadIndices, NotAMatroid, NotATreePoint
from selfdual.exactnum import INF, Puiseux
from selfdual.matroid import Matroid, dual
from selfdual.octad import octad_x
from selfdual.tropical import (TropicalPlucker, dressian_member, e_vector, in_Lsd, initial_matroid,
                               lineality_witness, lsd_dimension, matroid_height, naive_trop_gamma, pachter_speyer,
                               ray_vector, selfdual_witness, tropical_octad_x, tropicalize_config, trop_hodge_star)

from known_values import (NAIVE_OCTAD_R, TROP_Q, TROP_Q_PRIME, curve_section_matrix, naive_octad_matrix,
                          rescaled_curve_section_matrix)
from oracles import labels
from sampling import random_tree_point, selfdual_samples

TRIPLES = list(combinations(range(6), 3))


def q_of(values, n=3, m=6):
    return TropicalPlucker(n, m, values)


def test_dressian_zero_and_curve_section():
    assert dressian_member(q_of([0] * 20)) == (True, None)
    assert dressian_member(q_of(TROP_Q))[0]
    assert dressian_member(q_of(TROP_Q_PRIME))[0]


def test_dressian_infinity_conventions():
    q = q_of([INF] * 20)
    assert dressian_member(q)[0]
    M = Matroid.from_nonbases(6, 3, [(0, 1, 2), (3, 4, 5)])
    q = q_of([0 if M.is_basis(I) else INF for I in TRIPLES])
    assert dressian_member(q)[0]


def test_dressian_reports_violation():
    # raising one coordinate gives an E-ray; lowering one breaks every relation through it
    assert dressian_member(e_vector(3, 6, [(0, 1, 2)]))[0]
    ok, why = dressian_member(q_of([-1 if I == (0, 1, 2) else 0 for I in TRIPLES]))
    assert not ok
    lo = min(why["values"])
    assert lo == -1
    assert sum(1 for v in why["values"] if v == lo) == 1
    assert any((0, 1, 2) in pair for pair in why["relation"])


def test_curve_section_tropicalizes_to_known_vectors():
    q = tropicalize_config(curve_section_matrix())
    qp = tropicalize_config(rescaled_curve_section_matrix())
    assert q.as_list() == TROP_Q
    assert qp.as_list() == TROP_Q_PRIME
    d = {I: qp[I] - q[I] for I in TRIPLES}
    mu = lineality_witness(d, 3, 6)
    assert mu == [Fraction(-2, 3)] * 2 + [Fraction(1, 3)] * 4


def test_selfdual_witness_examples():
    assert selfdual_witness(q_of(TROP_Q)) == [0] * 6
    assert selfdual_witness(q_of(TROP_Q_PRIME)) == [Fraction(4, 3)] * 2 + [Fraction(-2, 3)] * 4
    for I in [(0, 1, 2), (0, 2, 4), (1, 3, 5)]:
        assert selfdual_witness(ray_vector("Esd", I)) == [0] * 6
    assert selfdual_witness(e_vector(3, 6, [(0, 1, 2)])) is None


def test_selfdual_witness_needs_complement_closed_support():
    q = q_of([INF if I == (0, 1, 2) else 0 for I in TRIPLES])
    assert selfdual_witness(q) is None


def test_witness_satisfies_defining_equation():
    q = q_of(TROP_Q_PRIME)
    mu = selfdual_witness(q)
    for I in TRIPLES:
        assert q[I] + sum(mu[i] for i in I) == q[ex.complement(I, 6)]


def test_classical_selfdual_samples_have_tropical_witness():
    for seed in range(3):
        X, _ = sample_selfdual(3, seed)
        P = [[Puiseux.const(x) for x in row] for row in X]
        q = tropicalize_config(P)
        assert q.as_list() == [0] * 20
        assert selfdual_witness(q) == [0] * 6


def test_lsd_dimension_rank3():
    assert lsd_dimension(3) == 15
    assert 20 - lsd_dimension(3) == 5


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lsd_dimension_general(n):
    # symmetric vectors plus the antisymmetric part of L, which is {mu : sum(mu) = 0}
    half = len(list(combinations(range(2 * n), n))) // 2
    assert lsd_dimension(n) == half + 2 * n - 1


def test_lsd_rays():
    assert in_Lsd(q_of(TROP_Q))
    for idx in combinations(range(6), 4):
        assert in_Lsd(ray_vector("F", idx))
    for I in TRIPLES:
        assert in_Lsd(ray_vector("Esd", I))
        assert not in_Lsd(ray_vector("E", I))
    assert not in_Lsd(ray_vector("G", range(6)))


def test_witness_iff_lsd_on_random_vectors():
    rng = random.Random(12)
    sd = selfdual_samples(rng, 10)
    rand = [q_of([rng.randint(-3, 3) for _ in range(20)]) for _ in range(10)]
    for q in sd:
        assert selfdual_witness(q) is not None and in_Lsd(q)
    for q in rand:
        assert (selfdual_witness(q) is not None) == in_Lsd(q)


def test_in_lsd_rejects_infinite():
    with pytest.raises(ValueError):
        in_Lsd(q_of([INF] + [0] * 19))


def test_hodge_star():
    q = q_of(list(range(20)))
    assert trop_hodge_star(trop_hodge_star(q)) == q
    assert trop_hodge_star(q)[(0, 1, 2)] == q[(3, 4, 5)]
    M = Matroid.from_nonbases(6, 3, [(0, 1, 2)])
    h = q_of([0 if M.is_basis(I) else INF for I in TRIPLES])
    assert sorted(trop_hodge_star(h).support()) == sorted(dual(M).bases())


def test_initial_matroid_examples():
    zero = q_of([0] * 20)
    w = [5, 1, 4, 0, 3, 2]
    M = initial_matroid(zero, w)
    assert M.bases() == [(1, 3, 5)]
    q = TropicalPlucker(2, 4, {(0, 1): 1, (0, 2): 0, (0, 3): 0, (1, 2): 0, (1, 3): 0, (2, 3): 1})
    assert initial_matroid(q, [0, 0, 0, 0]).bases() == labels(["13", "14", "23", "24"])
    assert initial_matroid(q, [1, 1, 0, 0]).bases() == labels(["13", "14", "23", "24", "34"])


def test_initial_matroid_signals_non_dressian():
    q = q_of([0 if I in [(0, 1, 2), (3, 4, 5)] else 1 for I in TRIPLES])
    with pytest.raises(NotAMatroid):
        initial_matroid(q, [0] * 6)


def test_initial_matroid_duality_identity():
    rng = random.Random(50)
    qs = selfdual_samples(rng, 50)
    interesting = 0
    for q in qs:
        mu = selfdual_witness(q)
        w = [Fraction(rng.randint(-2, 2)) for _ in range(6)]
        Mw = initial_matroid(q, w)
        assert dual(Mw) == initial_matroid(q, [a - b for a, b in zip(mu, w)])
        interesting += Mw.num_bases() > 1
    assert interesting >= 10


def test_matroid_height():
    assert matroid_height(Matroid.uniform(3, 6)).as_list() == [0] * 20
    M = Matroid.from_nonbases(6, 3, [(0, 1, 2), (3, 4, 5)])
    q = matroid_height(M)
    assert initial_matroid(q, [0] * 6) == M
    assert selfdual_witness(q) == [0] * 6


def test_pachter_speyer_snowflake():
    q2 = e_vector(2, 6, [(0, 1), (2, 3), (4, 5)])
    r = pachter_speyer(q2)
    assert r.as_list() == TROP_Q
    assert pachter_speyer(TropicalPlucker(2, 6, [0] * 15)).as_list() == [0] * 20


def test_pachter_speyer_on_random_trees():
    rng = random.Random(1)
    for _ in range(10):
        r = pachter_speyer(random_tree_point(rng))
        assert dressian_member(r)[0]
        assert selfdual_witness(r) is not None


def test_pachter_speyer_errors():
    with pytest.raises(NotATreePoint):
        pachter_speyer(TropicalPlucker(2, 6, {(i, j): -int((i, j) in [(0, 1), (2, 3)])
                                              for i, j in combinations(range(6), 2)}))
    with pytest.raises(NotATreePoint):
        pachter_speyer(TropicalPlucker(2, 6, [INF] + [0] * 14))
    with pytest.raises(ValueError):
        pachter_speyer(q_of([0] * 20))


def test_ray_vectors():
    f = ray_vector("F", (0, 1, 2, 3))
    assert sorted(I for I in TRIPLES if f[I] == 1) == labels(["123", "124", "134", "234"])
    assert sum(f.as_list()) == 4
    g = ray_vector("G", range(6))
    expected = [a + b for a, b in zip(f.as_list(), e_vector(3, 6, labels(["345", "346"])).as_list())]
    assert g.as_list() == expected
    for bad in [("E", (0, 1)), ("F", (0, 1, 2, 2)), ("G", (0, 1, 2, 3, 4, 9)), ("H", (0, 1, 2))]:
        with pytest.raises(BadIndices):
            ray_vector(*bad)


def test_naive_octad_image():
    A = naive_octad_matrix()
    q7 = tropicalize_config(A)
    r, mu = naive_trop_gamma(q7)
    key = lambda s: ex.label_to_subset(s)
    for s in ("1234", "1235", "1345"):
        assert r[key(s)] == NAIVE_OCTAD_R[s]
    offsets = {NAIVE_OCTAD_R[s] - r[key(s)] for s in ("1358", "1348", "1238")}
    assert offsets == {100}
    ok, why = dressian_member(r)
    assert not ok
    printed = [r[key(a)] + r[key(b)] for a, b in [("1234", "1358"), ("1235", "1348"), ("1238", "1345")]]
    assert [v + 100 for v in printed] == [22, 21, 20]


def test_naive_octad_mu2_cancellation():
    A = naive_octad_matrix()
    q7 = tropicalize_config(A)
    assert tropical_octad_x(q7)[1] == 20
    assert octad_x(ex.puiseux_minors(A))[1].valuation() == 21


def test_json_round_trip():
    q = q_of([INF] + TROP_Q_PRIME[1:])
    obj = q.to_json_obj()
    assert obj["values"]["123"] == "inf"
    assert TropicalPlucker.from_json(q.to_json()) == q
    assert TropicalPlucker.from_json_obj({"n": 3, "values": obj["values"]}) == q


def test_constructor_checks_length():
    with pytest.raises(ValueError):
        q_of([0] * 19)
