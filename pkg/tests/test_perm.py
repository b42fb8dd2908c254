from itertools import permutations
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revenge.perm import (
    DegreeMismatch,
    Permutation,
    compose,
    contains,
    cycle_type,
    cycles,
    inverse,
    order,
    power,
    restrict,
    schreier_sims,
    sign,
)


def perms(n):
    return st.permutations(list(range(n))).map(lambda p: Permutation(tuple(p)))


def _closure(gens):
    # breadth-first closure, the brute-force oracle for small groups
    ident = Permutation.identity(gens[0].degree)
    seen = {ident.images}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q.images not in seen:
                    seen.add(q.images)
                    nxt.append(q)
        frontier = nxt
    return seen


def test_s3_composition_table():
    # images[i] is where i goes; p first, then q
    for a in permutations(range(3)):
        for b in permutations(range(3)):
            expected = tuple(b[a[i]] for i in range(3))
            assert compose(Permutation(a), Permutation(b)).images == expected


def test_compose_order_convention():
    p = Permutation.from_cycles(3, [(0, 1)])
    q = Permutation.from_cycles(3, [(1, 2)])
    # 0 -> 1 under p, then 1 -> 2 under q
    assert compose(p, q)(0) == 2
    assert (p * q)(0) == 2


def test_validation():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(ValueError):
        Permutation.from_cycles(4, [(0, 1), (1, 2)])
    with pytest.raises(DegreeMismatch):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_cycles_canonical():
    p = Permutation((2, 0, 1, 3, 5, 4))
    assert cycles(p) == [[0, 2, 1], [4, 5]]
    assert cycle_type(p) == [3, 2]
    assert str(p) == "(0 2 1)(4 5)"
    assert str(Permutation.identity(4)) == "()"


@settings(max_examples=200, deadline=None)
@given(perms(7), perms(7))
def test_sign_is_homomorphism(p, q):
    assert sign(compose(p, q)) == sign(p) * sign(q)


def test_sign_homomorphism_1000_pairs():
    rng = np.random.default_rng(1)
    for _ in range(1000):
        p = Permutation(tuple(rng.permutation(10).tolist()))
        q = Permutation(tuple(rng.permutation(10).tolist()))
        assert sign(p * q) == sign(p) * sign(q)


@settings(max_examples=100, deadline=None)
@given(perms(8))
def test_order_matches_iterated_power(p):
    k = order(p)
    assert power(p, k).is_identity()
    q = Permutation.identity(8)
    for j in range(1, k):
        q = q * p
        assert not q.is_identity()


@settings(max_examples=100, deadline=None)
@given(perms(9), st.integers(-20, 20))
def test_inverse_and_power(p, k):
    assert compose(p, inverse(p)).is_identity()
    assert power(p, -k) == inverse(power(p, k))
    assert power(p, k + 1) == compose(power(p, k), p)


@pytest.mark.parametrize("seed", range(8))
def test_bsgs_order_matches_closure_s5(seed):
    rng = np.random.default_rng(seed)
    gens = [Permutation(tuple(rng.permutation(5).tolist())) for _ in range(int(rng.integers(1, 4)))]
    elements = _closure(gens)
    b = schreier_sims(gens)
    assert b.order == len(elements)
    for images in elements:
        assert contains(b, Permutation(images))
    for p in permutations(range(5)):
        assert contains(b, Permutation(p)) == (p in elements)


def test_known_groups():
    n = 10
    cyc = Permutation(tuple(list(range(1, n)) + [0]))
    swap = Permutation.from_cycles(n, [(0, 1)])
    assert schreier_sims([cyc, swap]).order == factorial(n)
    three = Permutation.from_cycles(n, [(0, 1, 2)])
    # n-cycle with n even is odd, so <(0 1 2), shift> is all of S_n; use odd length for A_n
    odd_shift = Permutation(tuple([*range(1, 9), 0, 9]))
    assert schreier_sims([odd_shift, three]).order == factorial(9) // 2


def test_schreier_sims_deterministic():
    rng = np.random.default_rng(3)
    gens = [Permutation(tuple(rng.permutation(12).tolist())) for _ in range(3)]
    a, b = schreier_sims(gens), schreier_sims(gens)
    assert a.base == b.base
    assert a.strong_generators == b.strong_generators
    assert a.transversals == b.transversals


def test_base_prefix():
    gens = [Permutation(tuple([*range(1, 6), 0])), Permutation.from_cycles(6, [(0, 1)])]
    b = schreier_sims(gens, base=(5, 4))
    assert b.base[:2] == (5, 4)
    assert b.order == 720
    with pytest.raises(ValueError):
        schreier_sims(gens, base=(1, 1))


def test_sift_reports_level():
    gens = [Permutation.from_cycles(6, [(0, 1, 2)])]
    b = schreier_sims(gens)
    outsider = Permutation.from_cycles(6, [(3, 4)])
    assert not contains(b, outsider)
    assert outsider not in b
    _, level = b.sift(gens[0])
    assert level == len(b.base)


def test_restrict():
    g = Permutation.from_cycles(6, [(0, 1), (3, 4, 5)])
    (r,) = restrict([g], [3, 4, 5])
    assert r.images == (1, 2, 0)
    with pytest.raises(ValueError, match="generator 0 sends point 0 to 1"):
        restrict([g], [0, 2])
