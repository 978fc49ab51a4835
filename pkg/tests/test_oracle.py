import pytest

from helpers import example2, octahedron, random_corpus
from nagata_cw import NagataInput, build_generators
from nagata_cw.annihilator import GeneratorSet
from nagata_cw.oracle import (
    catalecticant,
    dim_T,
    ideal_span_dimension,
    kernel_annihilates,
    oracle_bigraded_table,
    oracle_report,
    rank_and_kernel,
)
from nagata_cw.linalg import bareiss_rank

CORPUS = random_corpus(25, seed=3)


def test_example2_first_catalecticant():
    inp = example2(1)
    mat = catalecticant(inp, 0, 1)
    assert mat.shape == (3, 9)
    assert bareiss_rank(mat.entries) == 3
    # U1 applied to f: x0*u2 + x1*u1 under contraction
    row = mat.entries[0]
    hits = {mat.col_labels[k].flat: v for k, v in enumerate(row) if v}
    assert hits == {(1, 0, 0, 0, 1, 0): 1, (0, 1, 0, 1, 0, 0): 1}


def test_differentiation_entries():
    inp = example2(1, "differentiation")
    row = catalecticant(inp, 0, 1).sparse_rows[0]
    assert sorted(row.values()) == [1, 2]


@pytest.mark.parametrize("inp", [example2(2), octahedron(1)], ids=str)
def test_corner_catalecticants(inp):
    top = catalecticant(inp, 0, 0)
    assert top.shape[0] == 1 and rank_and_kernel(top)[0] == 1
    assert sum(top.entries[0]) == inp.nx
    socle = catalecticant(inp, inp.d1, inp.d2)
    assert socle.shape[1] == 1 and rank_and_kernel(socle)[0] == 1


def test_out_of_range():
    with pytest.raises(ValueError):
        catalecticant(example2(1), 2, 0)


def test_octahedron_rank_at_11():
    inp = octahedron(2)
    rank, ker = rank_and_kernel(catalecticant(inp, 1, 1))
    assert rank == 24
    assert len(ker) == dim_T(inp, 1, 1) - 24


def test_example2_oracle_vector():
    t = oracle_bigraded_table(example2(2))
    h = [sum(t.a[i][k - i] for i in range(3) if 0 <= k - i <= 2) for k in range(5)]
    assert h == [1, 6, 11, 6, 1]


def test_octahedron_d1_one_oracle_h2():
    t = oracle_bigraded_table(octahedron(1))
    assert t.a[1][1] + t.a[0][2] == 24


@pytest.mark.parametrize("inp", CORPUS, ids=str)
def test_rank_duality_and_action_invariance(inp):
    t = oracle_bigraded_table(inp)
    assert t.duality_ok()
    assert t == oracle_bigraded_table(inp.with_action("differentiation"))


@pytest.mark.parametrize("inp", CORPUS[:10] + [example2(2, "differentiation")], ids=str)
def test_kernel_vectors_annihilate(inp):
    for i in range(inp.d1 + 1):
        for j in range(inp.d2 + 1):
            mat = catalecticant(inp, i, j)
            rank, ker = rank_and_kernel(mat)
            assert rank + len(ker) == mat.shape[0]
            assert kernel_annihilates(inp, mat, ker)


def test_ideal_span_examples():
    inp = example2(2)
    only_xx = [({(1, 1, 0, 0, 0, 0): 1}, (2, 0)), ({(1, 0, 1, 0, 0, 0): 1}, (2, 0)),
               ({(0, 1, 1, 0, 0, 0): 1}, (2, 0))]
    assert ideal_span_dimension(only_xx, inp, 2, 0) == 3
    empty = GeneratorSet([], inp.action, inp.nx, inp.m)
    assert all(ideal_span_dimension(empty, inp, i, j) == 0 for i in range(3) for j in range(3))
    gens = build_generators(inp)
    t = oracle_bigraded_table(inp)
    for i in range(3):
        for j in range(3):
            assert ideal_span_dimension(gens, inp, i, j) == dim_T(inp, i, j) - t.a[i][j]


def test_oracle_report_fields():
    inp = example2(1)
    rep = oracle_report(inp, closed_form=oracle_bigraded_table(inp), gens=build_generators(inp),
                        with_kernels=True)
    assert rep.closed_form_equal and rep.generators_complete
    assert len(rep.kernels[(0, 2)]) == dim_T(inp, 0, 2) - 3
