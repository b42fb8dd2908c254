"""Computational checks of the structure of the Revenge group.

Every suite returns a list of :class:`Check` records; a check never raises on
failure, it reports.  BSGS structures are built once per process and cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable

import numpy as np

from . import cube, law
from .config import (
    Configuration,
    slot_maps,
    act,
    edge_occupancy,
    random_configuration,
    to_facelet_permutation,
)
from .cube import MoveSequence, commutator, parse_sequence, sequence_permutation
from .perm import (
    BSGS,
    Permutation,
    compose,
    compose_all,
    contains,
    cycle_type,
    inverse,
    restrict,
    schreier_sims,
    sign,
)

NINE = ("R", "L", "F", "B", "U", "D", "CR", "CF", "CU")
M1 = ("R", "U", "D", "L")
M2 = ("F", "B", "CR", "CF", "CU")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "true" if self.passed else "false"
        return f"check={self.name} pass={status}" + (f" {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class SubgroupReport:
    name: str
    computed_order: int
    expected_order: int
    method: str  # "kernel-quotient" or "direct-BSGS"

    @property
    def passed(self) -> bool:
        return self.computed_order == self.expected_order

    def check(self) -> Check:
        return Check(
            f"order.{self.name}",
            self.passed,
            f"method={self.method} computed={self.computed_order} expected={self.expected_order}",
        )


@dataclass(frozen=True)
class WitnessReport:
    word: MoveSequence
    corners: tuple[int, ...]  # cubie-level cycle type on corner slots
    edges: tuple[int, ...]
    centers: tuple[int, ...]
    claimed: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def matches_claim(self) -> bool:
        return (self.corners, self.edges, self.centers) == self.claimed


# -- cached groups -------------------------------------------------------------

@lru_cache(maxsize=None)
def move_group() -> BSGS:
    return schreier_sims(cube.generators())


@lru_cache(maxsize=None)
def nine_generator_group() -> BSGS:
    return schreier_sims(cube.generators(NINE))


def _complement(points) -> list[int]:
    keep = set(points)
    return [i for i in range(96) if i not in keep]


@lru_cache(maxsize=None)
def image_order(kind: str, complement: bool = False) -> int:
    """Order of the move group restricted to the facelets of one cubie kind (or the rest)."""
    points = cube.kind_partition()[kind]
    if complement:
        points = _complement(points)
    return schreier_sims(restrict(cube.generators(), points)).order


# -- witnesses -------------------------------------------------------------------

def witness_z() -> MoveSequence:
    return commutator(
        commutator(parse_sequence("CF"), parse_sequence("CD")), parse_sequence("U'")
    )


def witness_e() -> MoveSequence:
    return commutator(
        parse_sequence("CL'"), commutator(parse_sequence("L"), parse_sequence("U'"))
    )


def cubie_cycle_types(perm: Permutation) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Cycle types of the slot permutations induced on corners, edges and centres."""
    corners, edges, centers = slot_maps(perm)
    return (
        tuple(cycle_type(Permutation(tuple(j for j, _ in corners)))),
        tuple(cycle_type(Permutation(tuple(j for j, _ in edges)))),
        tuple(cycle_type(Permutation(tuple(centers)))),
    )


def witness_report(word: MoveSequence, claimed) -> WitnessReport:
    corners, edges, centers = cubie_cycle_types(sequence_permutation(word))
    return WitnessReport(word, corners, edges, centers, claimed)


def verify_witnesses(conjugates: int = 50, seed: int = 0) -> list[Check]:
    checks = []
    kinds = cube.kind_partition()
    z = sequence_permutation(witness_z())
    e = sequence_permutation(witness_e())

    rz = witness_report(witness_z(), ((), (), (3,)))
    checks.append(Check("witness.z.cubie_cycles", rz.matches_claim,
                        f"corners={list(rz.corners)} edges={list(rz.edges)} centers={list(rz.centers)}"))
    checks.append(Check("witness.z.facelet_cycles", cycle_type(z) == [3], f"cycle_type={cycle_type(z)}"))
    fixed = [i for i in kinds["corner"] + kinds["edge"] if z(i) != i]
    checks.append(Check("witness.z.fixes_non_centers", not fixed, f"moved={len(fixed)} of 72"))

    re_ = witness_report(witness_e(), ((), (3,), ()))
    checks.append(Check("witness.e.cubie_cycles", re_.matches_claim,
                        f"corners={list(re_.corners)} edges={list(re_.edges)} centers={list(re_.centers)}"))
    fixed = [i for i in kinds["corner"] + kinds["center"] if e(i) != i]
    checks.append(Check("witness.e.fixes_corners_centers", not fixed, f"moved={len(fixed)}"))

    rng = np.random.default_rng(seed)
    bad_z = bad_e = 0
    for _ in range(conjugates):
        g = sequence_permutation(cube.random_sequence(rng, 25))
        gi = inverse(g)
        if cubie_cycle_types(compose_all([gi, z, g], 96)) != ((), (), (3,)):
            bad_z += 1
        if cubie_cycle_types(compose_all([gi, e, g], 96)) != ((), (3,), ()):
            bad_e += 1
    checks.append(Check("witness.z.conjugates", bad_z == 0, f"trials={conjugates} failures={bad_z}"))
    checks.append(Check("witness.e.conjugates", bad_e == 0, f"trials={conjugates} failures={bad_e}"))
    return checks


# -- lemmas ---------------------------------------------------------------------

def _moved_subslots(perm: Permutation) -> set[int]:
    _, edges, _ = slot_maps(perm)
    return {j for j, (j2, _) in enumerate(edges) if j2 != j}


def _condition3(c: Configuration) -> bool:
    return law.check_revenge(c).condition3


def verify_lemmas(trials: int = 1000, seed: int = 0, max_length: int = 30) -> list[Check]:
    """Invariants under moves, on random configurations and random words."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    first_bad: dict[str, str] = {}
    for t in range(trials):
        c = random_configuration(rng)
        w = cube.random_sequence(rng, int(rng.integers(1, max_length + 1)))
        c2 = act(sequence_permutation(w), c)
        s1, s2 = law.signature(c), law.signature(c2)
        for name, ok in (
            ("lemma.parity_product", s1.parity_product == s2.parity_product),
            ("lemma.twist_sum", s1.twist_sum == s2.twist_sum),
            ("lemma.condition3", _condition3(c) == _condition3(c2)),
            ("lemma.edge_defect_count", sum(s1.edge_defect) == sum(s2.edge_defect)),
        ):
            if not ok and name not in first_bad:
                first_bad[name] = f"trial={t} word={w}"
    checks = [
        Check(name, name not in first_bad, first_bad.get(name, f"trials={trials} counterexamples=0"))
        for name in ("lemma.parity_product", "lemma.twist_sum", "lemma.condition3", "lemma.edge_defect_count")
    ]

    initial = Configuration.initial()
    r = act(cube.generator_permutation("R"), initial)
    checks.append(Check(
        "lemma.R_flips_both_signs",
        sign(r.sigma) == -1 and sign(r.rho) == -1 and law.signature(r).parity_product == 1,
        f"sgn_sigma={sign(r.sigma)} sgn_rho={sign(r.rho)}",
    ))
    cr = act(cube.generator_permutation("CR"), initial)
    checks.append(Check(
        "lemma.CR_keeps_signs",
        sign(cr.sigma) == 1 and sign(cr.rho) == 1,
        f"sgn_sigma={sign(cr.sigma)} sgn_rho={sign(cr.rho)}",
    ))

    bad_m1 = bad_m2 = 0
    for _ in range(max(1, trials // 10)):
        c = random_configuration(rng)
        for g in M1 + M2:
            perm = cube.generator_permutation(g)
            _, edges, _ = slot_maps(perm)
            c2 = act(perm, c)
            moved = _moved_subslots(perm)
            for j, (j2, _) in enumerate(edges):
                flipped = c2.y[j2] != c.y[j]
                if g in M1 and flipped:
                    bad_m1 += 1
                if g in M2 and flipped != (j in moved):
                    bad_m2 += 1
    checks.append(Check("lemma.M1_keeps_y", bad_m1 == 0, f"violations={bad_m1}"))
    checks.append(Check("lemma.M2_flips_moved", bad_m2 == 0, f"violations={bad_m2}"))
    return checks


# -- group order and subgroups -----------------------------------------------------

def verify_group_order() -> list[Check]:
    g = move_group()
    expected = law.group_order_closed_form()
    report = SubgroupReport("G", g.order, expected, "direct-BSGS")
    nine = nine_generator_group()
    return [
        report.check(),
        Check("order.G_times_orbits", g.order * law.orbit_count() == law.config_space_size(),
              f"orbits={law.orbit_count()}"),
        Check("order.nine_generators", nine.order == g.order, f"computed={nine.order}"),
    ]


def subgroup_reports() -> list[SubgroupReport]:
    order = move_group().order
    f24, f8 = factorial(24), factorial(8)
    reports = []
    for name, kind, expected in (
        ("Z", "center", f24 // 2),
        ("E", "edge", f24),
        ("C·T", "corner", f8 * 3**7 // 2),
    ):
        # kernel acting trivially off `kind` = |G| / |image on the other facelets|
        image = image_order(kind, complement=True)
        reports.append(SubgroupReport(name, order // image, expected, "kernel-quotient"))
    reports.append(SubgroupReport("center_image", image_order("center"), f24, "direct-BSGS"))
    reports.append(SubgroupReport("edge_image", image_order("edge"), f24, "direct-BSGS"))
    return reports


def verify_subgroups() -> list[Check]:
    checks = [r.check() for r in subgroup_reports()]
    # an element of G acting as C_R's edge 4-cycle alone is odd and lies in E
    cr = cube.generator_permutation("CR")
    edges = set(cube.EDGE_FACELETS)
    images = tuple(cr(i) if i in edges else i for i in range(96))
    q = Permutation(images)
    checks.append(Check(
        "subgroup.E_has_odd_element",
        contains(move_group(), q) and sign(Permutation(tuple(j for j, _ in slot_maps(q)[1]))) == -1,
        "element=CR restricted to edges",
    ))
    return checks


# -- first law against membership --------------------------------------------------

def make_valid(c: Configuration, rng: np.random.Generator) -> Configuration:
    """Repair a configuration into a valid one (uniform if ``c`` is uniform)."""
    rho = c.rho
    if sign(c.sigma) != sign(rho):
        rho = compose(rho, Permutation.from_cycles(24, [(0, 1)]))
    x = list(c.x)
    k = int(rng.integers(8))
    x[k] = (x[k] - sum(x)) % 3
    c = c.replace(rho=rho, x=x)
    y = [int(o.slot_type != o.edge_type) for o in edge_occupancy(c)]
    return c.replace(y=y)


def break_condition(c: Configuration, which: int, rng: np.random.Generator) -> Configuration:
    """Violate exactly condition ``which`` (1, 2 or 3) of a valid configuration."""
    if which == 1:
        a, b = rng.choice(24, 2, replace=False)
        return c.replace(rho=compose(c.rho, Permutation.from_cycles(24, [(int(a), int(b))])))
    if which == 2:
        x = list(c.x)
        k = int(rng.integers(8))
        x[k] = (x[k] + int(rng.integers(1, 3))) % 3
        return c.replace(x=x)
    y = list(c.y)
    flips = rng.random(24) < 0.5
    flips[int(rng.integers(24))] = True
    return c.replace(y=[v ^ int(f) for v, f in zip(y, flips)])


def single_edge_flip() -> Configuration:
    y = [0] * 24
    y[0] = 1
    return Configuration.initial().replace(y=y)


def single_center_transposition() -> Configuration:
    return Configuration.initial().replace(rho=Permutation.from_cycles(24, [(0, 1)]))


def pair_swap_double_flip() -> Configuration:
    y = [0] * 24
    y[0] = y[1] = 1
    return Configuration.initial().replace(tau=Permutation.from_cycles(24, [(0, 1)]), y=y)


def verify_first_law_membership(n: int = 100, seed: int = 0) -> list[Check]:
    if n < 1:
        raise ValueError("n must be >= 1")
    g = move_group()
    rng = np.random.default_rng(seed)
    members = 0
    law_valid = 0
    for _ in range(n):
        c = make_valid(random_configuration(rng), rng)
        law_valid += law.check_revenge(c).valid
        members += contains(g, to_facelet_permutation(c))
    invalid_members = 0
    exact_one = 0
    for t in range(n):
        which = t % 3 + 1
        c = break_condition(make_valid(random_configuration(rng), rng), which, rng)
        v = law.check_revenge(c)
        exact_one += v.failed() == [which]
        invalid_members += contains(g, to_facelet_permutation(c))
    specials = [
        ("membership.single_edge_flip", single_edge_flip(), False),
        ("membership.single_center_transposition", single_center_transposition(), False),
        ("membership.pair_swap_double_flip", pair_swap_double_flip(), True),
    ]
    checks = [
        Check("membership.valid_are_members", members == n and law_valid == n,
              f"samples={n} members={members} law_valid={law_valid}"),
        Check("membership.invalid_are_not", invalid_members == 0 and exact_one == n,
              f"samples={n} members={invalid_members} single_violation={exact_one}"),
    ]
    for name, c, expected in specials:
        member = contains(g, to_facelet_permutation(c))
        verdict = law.check_revenge(c).valid
        checks.append(Check(name, member == expected and verdict == expected,
                            f"member={str(member).lower()} law_valid={str(verdict).lower()}"))
    return checks


# -- C_L relation --------------------------------------------------------------------

def verify_cl_relation() -> list[Check]:
    lhs = sequence_permutation("L' CR R")
    cl = cube.generator_permutation("CL")
    rotation_word = sequence_permutation("R CR CL' L'")
    checks = [
        Check("cl.literal_equality", lhs != cl,
              f"equal={str(lhs == cl).lower()} (expected false: the word moves corners)"),
        Check("cl.rotation_word_is_rigid", rotation_word == cube.whole_cube_rotation("R"),
              "R CR CL' L' equals the whole-cube turn about the R axis"),
        Check("cl.modulo_rotation", lhs == compose(cl, rotation_word),
              "L' CR R = CL followed by the whole-cube turn"),
        Check("cl.rotation_in_G", contains(move_group(), rotation_word)),
    ]
    nine = nine_generator_group()
    missing = [g for g in ("CL", "CB", "CD") if not contains(nine, cube.generator_permutation(g))]
    checks.append(Check("cl.nine_generate_twelve", not missing and nine.order == move_group().order,
                        f"missing={missing}"))
    return checks


SUITES: dict[str, Callable[[], list[Check]]] = {
    "order": verify_group_order,
    "subgroups": verify_subgroups,
    "lemmas": verify_lemmas,
    "witnesses": verify_witnesses,
    "membership": verify_first_law_membership,
    "cl-relation": verify_cl_relation,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for key in SUITES for c in SUITES[key]()]
    return SUITES[name]()
