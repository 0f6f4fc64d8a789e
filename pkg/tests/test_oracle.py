import itertools
import math
import random

import numpy as np
import pytest

import brute
from hypergraphic import (
    TripartiteDegreeSequence,
    complement_tripartite,
    conjectured_constant,
    cubic_positive_roots,
    degree_sequence_of_tripartite,
    oracle_general,
    oracle_tripartite,
    verify_realization,
)
from hypergraphic.oracle import _Counter, _Timeout, double_root_at

T = TripartiteDegreeSequence


def test_n2_complete_half():
    r = oracle_tripartite(T.symmetric((2, 2)))
    assert r.graphic and not r.timed_out
    assert verify_realization(r.witness, T.symmetric((2, 2)))


def test_six_by_six_instances():
    bad = oracle_tripartite(T.symmetric((9, 9, 27, 27, 27, 27)))
    assert not bad.graphic and not bad.timed_out
    good = oracle_tripartite(T.symmetric((9, 27, 27, 27, 27, 27)))
    assert good.graphic and not good.timed_out
    assert verify_realization(good.witness, T.symmetric((9, 27, 27, 27, 27, 27)))


@pytest.mark.parametrize("sizes", [(1, 1, 1), (1, 2, 2), (2, 2, 2), (1, 2, 3), (2, 2, 3), (2, 3, 3)])
def test_tripartite_agrees_with_enumeration(sizes):
    graphic = brute.tripartite_sequences(*sizes)
    ranges = [itertools.product(range(sizes[(k + 1) % 3] * sizes[(k + 2) % 3] + 1), repeat=sizes[k]) for k in range(3)]
    a_all, b_all, c_all = map(list, ranges)
    rng = random.Random(sum(sizes))
    checked = 0
    for a in a_all:
        for b in b_all:
            if sum(a) != sum(b):
                continue
            cs = [c for c in c_all if sum(c) == sum(a)]
            if len(cs) > 6:
                cs = rng.sample(cs, 6)
            for c in cs:
                seq = T(a, b, c)
                r = oracle_tripartite(seq)
                assert not r.timed_out
                assert r.graphic == (seq in graphic), seq
                if r.graphic:
                    assert verify_realization(r.witness, seq)
                checked += 1
    assert checked > 0


def test_tripartite_unequal_sums_rejected():
    assert not oracle_tripartite(T((1, 1), (1, 0), (1, 0))).graphic


@pytest.mark.parametrize("n", [3, 4, 5])
def test_general_agrees_with_enumeration(n):
    graphic = brute.hypergraph_sequences(n)
    top = math.comb(n - 1, 2)
    for d in itertools.product(range(top + 1), repeat=n):
        if sum(d) % 3:
            continue
        r = oracle_general(d)
        assert r.graphic == (d in graphic), d
        if r.graphic:
            assert verify_realization(r.witness, d)


def test_general_agrees_with_enumeration_n6_sample():
    graphic = brute.hypergraph_sequences(6)
    rng = random.Random(6)
    pool = sorted(graphic)
    for _ in range(150):
        d = list(rng.choice(pool))
        # perturb to hit both graphic and non-graphic sequences
        i, j = rng.sample(range(6), 2)
        if d[i] > 0 and rng.random() < 0.5:
            d[i] -= 1
            d[j] += 1
        d = tuple(d)
        r = oracle_general(d)
        assert r.graphic == (d in graphic), d


def test_general_examples():
    r = oracle_general((0, 0, 0))
    assert r.graphic and len(r.witness) == 0
    r = oracle_general((3, 3, 3, 3))
    assert r.graphic and len(r.witness) == 4
    r = oracle_general((1, 1, 1))
    assert r.graphic and r.witness.edges == {(0, 1, 2)}
    assert not oracle_general((2, 1, 1)).graphic


def test_budget_exhaustion_is_reported():
    r = oracle_tripartite(T.symmetric((9, 27, 27, 27, 27, 27)), budget=1)
    assert r.timed_out and not r.graphic and r.witness is None
    r = oracle_general((3, 3, 3, 3), budget=0)
    assert r.timed_out


def test_time_limit_is_reported():
    # the clock is read every 512 nodes, so an expired deadline stops the search there
    counter = _Counter(10**9, 0.0)
    with pytest.raises(_Timeout):
        for _ in range(512):
            counter.tick()
    assert counter.nodes == 512


def test_deterministic_node_counts():
    seq = T.symmetric((9, 27, 27, 27, 27, 27))
    assert oracle_tripartite(seq).nodes_explored == oracle_tripartite(seq).nodes_explored
    assert oracle_general((4, 4, 3, 3, 2)).nodes_explored == oracle_general((4, 4, 3, 3, 2)).nodes_explored


def test_complement_consistency_n3():
    rng = random.Random(3)
    for _ in range(80):
        a = tuple(rng.randint(0, 9) for _ in range(3))
        b = list(a)
        rng.shuffle(b)
        seq = T(a, tuple(b), a[::-1])
        r = oracle_tripartite(seq)
        comp = T(*(tuple(9 - v for v in cls) for cls in seq))
        rc = oracle_tripartite(comp)
        assert r.graphic == rc.graphic
        if r.graphic:
            assert degree_sequence_of_tripartite(complement_tripartite(r.witness)) == comp


# --- the constant -----------------------------------------------------------


def test_constant_value():
    c = conjectured_constant()
    assert abs(c - 0.278066) <= 1e-5


def test_constant_is_double_root():
    c = conjectured_constant()
    z = double_root_at(c)
    f = z ** 3 - (1 - c) * z + 2 * c * (1 - z)
    fp = 3 * z * z - (1 - c) - 2 * c
    assert abs(f) < 1e-9 and abs(fp) < 1e-9
    assert z > 0


def test_constant_against_discriminant():
    # independent route: the cubic z^3 + p z + q has a repeated root iff 4p^3 + 27q^2 = 0;
    # with p = -(1 + c), q = 2c this is the polynomial in c below
    # -4(1 + c)^3 + 108 c^2 = 0  <=>  c^3 - 24 c^2 + 3c + 1 = 0
    roots = np.roots([1, -24, 3, 1])
    inside = [r.real for r in roots if abs(r.imag) < 1e-12 and 0 < r.real < 1]
    assert len(inside) == 1
    assert abs(inside[0] - conjectured_constant()) < 1e-9


def test_roots_at_quarter():
    roots = cubic_positive_roots(0.25)
    assert len(roots) == 2
    assert abs(roots[0] - 0.5) < 1e-9
    assert abs(roots[1] - (math.sqrt(17) - 1) / 4) < 1e-9


def test_roots_satisfy_cubic():
    for c in (0.05, 0.1, 0.2, 0.27):
        for z in cubic_positive_roots(c):
            assert abs(z ** 3 - (1 - c) * z + 2 * c * (1 - z)) < 1e-12


def test_no_positive_roots_above_constant():
    assert cubic_positive_roots(0.3) == []
