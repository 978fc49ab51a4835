"""Shared inputs: the two worked examples and a seeded random corpus."""

import random
from math import comb

from nagata_cw import NagataInput
from nagata_cw import monomials as mono


def sq(m, *idx):
    """u-monomial from 1-based variable indices, repeats allowed."""
    e = [0] * m
    for k in idx:
        e[k - 1] += 1
    return tuple(e)


OCTAHEDRON = [sq(6, *s) for s in [(1, 2, 3), (1, 2, 4), (1, 4, 5), (1, 3, 5),
                                   (2, 3, 6), (2, 4, 6), (4, 5, 6), (3, 5, 6)]]
EXAMPLE2 = [sq(3, 1, 2), sq(3, 1, 1), sq(3, 2, 3)]
GR_FAMILY = [(3, 0), (2, 1), (1, 2), (0, 3)]


def octahedron(d1, action="contraction"):
    return NagataInput(d1, 6, OCTAHEDRON, action)


def example2(d1, action="contraction"):
    return NagataInput(d1, 3, EXAMPLE2, action)


def random_input(rng, m_max=5, d2_choices=(2, 3, 4), nf_max=6, d1_max=3, d1_min=1,
                 m_min=1, action="contraction"):
    m = rng.randint(m_min, m_max)
    d2 = rng.choice(d2_choices)
    d1 = rng.randint(d1_min, d1_max)
    nf = rng.randint(1, min(nf_max, comb(m + d2 - 1, d2)))
    facets = rng.sample(mono.enumerate_monomials(m, d2), nf)
    return NagataInput(d1, m, facets, action)


def random_corpus(n=50, seed=2024, **kw):
    rng = random.Random(seed)
    return [random_input(rng, **kw) for _ in range(n)]


def wlp_corpus(n=20, seed=7):
    """d1 >= d2 and n+1 >= m >= 2."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        m = rng.randint(2, 4)
        d2 = rng.choice((2, 3))
        d1 = rng.randint(d2, 4)
        lo, hi = m, min(6, comb(m + d2 - 1, d2))
        if lo > hi:
            continue
        nf = rng.randint(lo, hi)
        out.append(NagataInput(d1, m, rng.sample(mono.enumerate_monomials(m, d2), nf)))
    return out


ACCEPTANCE_RESULTS: dict[int, str] = {}
