import numpy as np
import pytest

from revenge import cube
from revenge.cube import (
    CENTER_FACELETS,
    CORNER_FACELETS,
    EDGE_FACELETS,
    GENERATORS,
    MoveSequence,
    MoveSyntaxError,
    StateFormatError,
    apply,
    commutator,
    facelet_index,
    generator_permutation,
    parse_sequence,
    parse_state,
    parse_token,
    random_sequence,
    sequence_permutation,
    solved_state,
    state_permutation,
)
from revenge.perm import Permutation, cycles, inverse, order, sign


def test_facelet_kinds():
    assert (len(CORNER_FACELETS), len(EDGE_FACELETS), len(CENTER_FACELETS)) == (24, 48, 24)
    assert sorted(CORNER_FACELETS + EDGE_FACELETS + CENTER_FACELETS) == list(range(96))


@pytest.mark.parametrize("name", GENERATORS)
def test_generator_order_and_kinds(name):
    g = generator_permutation(name)
    assert order(g) == 4
    for kind, points in cube.kind_partition().items():
        assert {g(i) for i in points} == set(points), kind


@pytest.mark.parametrize("name", GENERATORS)
def test_moved_facelet_counts(name):
    # frozen from the geometric construction: 4*4 face + 4*4 side strip, or 4*4 side strip
    expected = 16 if name.startswith("C") else 32
    assert len(generator_permutation(name).support()) == expected


@pytest.mark.parametrize("name", GENERATORS)
def test_center_restriction_sign(name):
    g = generator_permutation(name)
    idx = {p: k for k, p in enumerate(CENTER_FACELETS)}
    restricted = Permutation(tuple(idx[g(p)] for p in CENTER_FACELETS))
    assert sign(restricted) == (1 if name.startswith("C") else -1)


def test_turn_direction():
    # clockwise seen from outside the turned face
    assert generator_permutation("U")(facelet_index("F", 0, 0)) == facelet_index("L", 0, 0)
    assert generator_permutation("D")(facelet_index("F", 3, 0)) == facelet_index("R", 3, 0)
    assert generator_permutation("CU")(facelet_index("F", 1, 0)) == facelet_index("L", 1, 0)
    assert generator_permutation("U")(facelet_index("U", 0, 0)) == facelet_index("U", 0, 3)


def test_unknown_generator():
    with pytest.raises(ValueError):
        generator_permutation("M")


def test_parse_examples():
    seq = parse_sequence("R U' CF2")
    assert seq.tokens == (("R", 1), ("U", 3), ("CF", 2))
    assert str(seq) == "R U' CF2"
    assert parse_sequence("").tokens == ()
    assert sequence_permutation("").is_identity()
    with pytest.raises(MoveSyntaxError) as err:
        parse_sequence("X3")
    assert err.value.offset == 0
    with pytest.raises(MoveSyntaxError) as err:
        parse_sequence("R U CF3")
    assert err.value.offset == 6


def test_sequence_semantics():
    r, u = generator_permutation("R"), generator_permutation("U")
    assert sequence_permutation("R U") == r * u
    assert sequence_permutation("R'") == inverse(r)
    assert sequence_permutation("R2") == r * r


def test_commutator_expansion():
    m, n = parse_sequence("R"), parse_sequence("U")
    assert str(commutator(m, n)) == "R U R' U'"


def test_apply_inverse_round_trip():
    rng = np.random.default_rng(7)
    start = solved_state()
    for _ in range(100):
        w = random_sequence(rng, 20)
        s = apply(start, w)
        assert apply(s, w.inverse()) == start
        assert state_permutation(s) == sequence_permutation(w)


def test_free_action():
    # a non-identity group element moves the solved labeled state
    rng = np.random.default_rng(8)
    start = solved_state()
    for _ in range(50):
        p = sequence_permutation(random_sequence(rng, 15))
        assert (apply(start, p) == start) == p.is_identity()


def test_colored_state_consistent():
    s = apply(solved_state(), "R U CF")
    assert s.colored() == apply(solved_state("colored"), "R U CF")


def test_state_text_round_trip():
    rng = np.random.default_rng(9)
    for mode in ("labeled", "colored"):
        s = apply(solved_state(mode), random_sequence(rng, 30))
        assert parse_state(s.to_text()) == s
        assert parse_state(s.to_text()).to_text() == s.to_text()


def test_state_format_errors():
    text = solved_state().to_text()
    with pytest.raises(StateFormatError, match="expected 6 face blocks"):
        parse_state(text.split("\n\n", 1)[1])
    bad = text.replace("C2.0", "C9.0", 1)
    with pytest.raises(StateFormatError):
        parse_state(bad)
    dup = text.replace("Z1 ", "Z2 ", 1)
    with pytest.raises(StateFormatError):
        parse_state(dup)


def test_tokens():
    assert str(parse_token("C3.2")) == "C3.2"
    assert str(parse_token("E7a.0")) == "E7a.0"
    assert str(parse_token("Z14")) == "Z14"
    for bad in ("C9.0", "E13a.0", "Z25", "E1c.0"):
        with pytest.raises(ValueError):
            parse_token(bad)


def test_random_sequence_no_repeat():
    w = random_sequence(np.random.default_rng(0), 200)
    assert len(w) == 200
    assert all(a[0] != b[0] for a, b in zip(w.tokens, w.tokens[1:]))


def test_move_sequence_inverse():
    w = MoveSequence.of([("R", 1), ("CU", 2), ("F", 3)])
    assert str(w.inverse()) == "F CU2 R'"
    assert (sequence_permutation(w) * sequence_permutation(w.inverse())).is_identity()


def test_whole_cube_rotations():
    rots = cube.cube_rotations()
    assert len(rots) == 24 and rots[0].is_identity()
    assert len({r.images for r in rots}) == 24
    for r in rots:
        assert len(cycles(r)) > 0 or r.is_identity()
