from math import factorial

import numpy as np
import pytest

from revenge import groups, law
from revenge.config import Configuration, Configuration3, act, random_configuration
from revenge.cube import generator_permutation, random_sequence, sequence_permutation
from revenge.perm import Permutation


def test_initial_valid():
    v = law.check_revenge(Configuration.initial())
    assert v.valid and v.failed() == []
    assert v.machine_line() == "valid=true c1=true c2=true c3=true"
    assert law.check_cube3(Configuration3.initial()).valid


def test_single_edge_flip_breaks_condition3():
    v = law.check_revenge(groups.single_edge_flip())
    assert v.failed() == [3]
    assert v.edge_violations == ("1_{a,a}",)


def test_single_center_transposition_breaks_condition1():
    v = law.check_revenge(groups.single_center_transposition())
    assert v.failed() == [1]
    assert (v.sign_sigma, v.sign_other) == (1, -1)


def test_corner_twist_breaks_condition2():
    c = Configuration.initial().replace(x=(1, 0, 0, 0, 0, 0, 0, 0))
    v = law.check_revenge(c)
    assert v.failed() == [2] and v.twist_sum == 1


def test_pair_swap_needs_both_flips():
    c = groups.pair_swap_double_flip()
    assert law.check_revenge(c).valid
    assert not law.check_revenge(c.replace(y=(0,) * 24)).valid


@pytest.mark.parametrize("name", ["U", "D", "L", "R", "F", "B", "CU", "CD", "CL", "CR", "CF", "CB"])
def test_single_moves_are_valid(name):
    assert law.check_revenge(act(generator_permutation(name), Configuration.initial())).valid


def test_signature_invariant_under_moves():
    rng = np.random.default_rng(31)
    for _ in range(1000):
        c = random_configuration(rng)
        g = sequence_permutation(random_sequence(rng, int(rng.integers(1, 30))))
        assert law.signature(act(g, c)).key()[:2] == law.signature(c).key()[:2]
        assert law.check_revenge(act(g, c)).condition3 == law.check_revenge(c).condition3


def test_signature_values():
    # crafted configurations with known invariants
    init = Configuration.initial()
    t01 = Permutation.from_cycles(24, [(0, 1)])
    cases = []
    for parity in (1, -1):
        for twist in range(3):
            for flips in ((), (0,), (5, 17)):
                rho = init.rho if parity == 1 else t01
                x = (twist,) + (0,) * 7
                y = tuple(int(j in flips) for j in range(24))
                cases.append((init.replace(rho=rho, x=x, y=y), parity, twist, flips))
    assert len(cases) >= 18
    cases.append((init.replace(sigma=Permutation.from_cycles(8, [(0, 1)]), rho=t01), 1, 0, ()))
    cases.append((init.replace(x=(2, 2, 2, 0, 0, 0, 0, 0)), 1, 0, ()))
    assert len(cases) == 20
    for c, parity, twist, flips in cases:
        s = law.signature(c)
        assert s.parity_product == parity
        assert s.twist_sum == twist
        assert [j for j, d in enumerate(s.edge_defect) if d] == list(flips)
        assert s.trivial == law.check_revenge(c).valid


def test_cube3_conditions():
    c = Configuration3(Permutation.from_cycles(8, [(0, 1)]), Permutation.identity(12), (0,) * 8, (0,) * 12)
    assert law.check_cube3(c).failed() == [1]
    c = Configuration3.initial().__class__(Permutation.identity(8), Permutation.identity(12), (0,) * 8, (1,) + (0,) * 11)
    assert law.check_cube3(c).failed() == [3]


def test_counting_identities():
    assert law.config_space_size() == factorial(24) ** 2 * 2**24 * 3**8 * factorial(8)
    assert law.orbit_count() == 2 * 3 * 2**24
    assert law.group_order_closed_form() == factorial(24) ** 2 * factorial(8) * 3**7 // 2
    assert law.group_order_closed_form() * law.orbit_count() == law.config_space_size()
