import random

import pytest

from helpers import GR_FAMILY, example2, random_corpus
from nagata_cw import NagataInput
from nagata_cw.lefschetz import (
    LinearForm,
    check_slp,
    check_wlp,
    degree_basis,
    hessian_rank,
    multiplication_rank,
    random_form,
)
from nagata_cw.oracle import oracle_bigraded_table


def dims(inp):
    t = oracle_bigraded_table(inp)
    h = [0] * (inp.socle_degree + 1)
    for i in range(inp.d1 + 1):
        for j in range(inp.d2 + 1):
            h[i + j] += t.a[i][j]
    return h


def test_linear_form_rejects_zero():
    with pytest.raises(ValueError):
        LinearForm((0, 0, 0))


def test_power_zero_is_identity():
    inp = example2(3)
    L = LinearForm.sum_of_x(inp)
    h = dims(inp)
    for deg in range(inp.socle_degree + 1):
        assert multiplication_rank(inp, L, 0, deg) == (h[deg], h[deg])


def test_top_degree_maps_to_zero():
    inp = example2(3)
    assert multiplication_rank(inp, LinearForm.sum_of_x(inp), 1, inp.socle_degree) == (0, 0)


def test_form_dimension_checked():
    with pytest.raises(ValueError):
        multiplication_rank(example2(2), LinearForm((1, 1)), 1, 0)


def test_example2_wlp():
    rep = check_wlp(example2(3))
    assert rep.verdict
    assert [c.rank for c in rep.checks] == [1, 6, 11, 6, 1]


def test_x0_alone_is_not_weak_lefschetz():
    inp = example2(3)
    rep = check_wlp(inp, LinearForm((1, 0, 0, 0, 0, 0)))
    assert not rep.verdict
    assert not all(c.maximal for c in rep.checks)


def test_single_term_has_slp():
    inp = NagataInput(2, 2, [(1, 1)])
    rep = check_slp(inp, trials=5, seed=0)
    assert rep.verdict and rep.form is not None
    assert all(c.maximal for c in rep.checks)


def test_gr_family_no_slp():
    inp = NagataInput(1, 2, GR_FAMILY)
    rep = check_slp(inp, trials=10, seed=0)
    assert not rep.verdict
    assert rep.hessian_evidence[1]["identically_vanishing_evidence"]
    assert "no witness found in 10 trials" in rep.note


def test_slp_is_deterministic():
    inp = example2(2)
    a = check_slp(inp, trials=1, seed=42).to_json()
    b = check_slp(inp, trials=1, seed=42).to_json()
    assert a == b


def test_hessian_order_zero():
    inp = example2(2)
    assert hessian_rank(inp, 0, [1, 1, 1, 1, 1, 1]) == (1, 1)
    # f vanishes when u2 = u1 = 0
    assert hessian_rank(inp, 0, [1, 1, 1, 0, 0, 1]) == (0, 1)


def test_hessian_rank_example2():
    inp = example2(2)
    rank, size = hessian_rank(inp, 1, [2, -3, 5, 7, 1, -4])
    assert size == 6 and rank == 6
    with pytest.raises(ValueError):
        hessian_rank(inp, 1, [1, 2])


@pytest.mark.parametrize("inp", random_corpus(8, seed=31, m_max=3, d1_max=2), ids=str)
def test_rank_bounds_and_monotonicity(inp):
    rng = random.Random(1)
    L = random_form(inp, rng)
    d = inp.socle_degree
    for deg in range(d):
        for k in range(1, d - deg + 1):
            r, mx = multiplication_rank(inp, L, k, deg)
            assert 0 <= r <= mx
            for a in range(1, k):
                r1, _ = multiplication_rank(inp, L, a, deg)
                r2, _ = multiplication_rank(inp, L, k - a, deg + a)
                assert r <= min(r1, r2)
    for k in range(d // 2 + 1):
        rank, size = hessian_rank(inp, k, L.coefficients)
        assert rank <= size == len(degree_basis(inp, k))
