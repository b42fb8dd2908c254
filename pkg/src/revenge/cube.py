"""The 96-facelet Rubik's Revenge.

Facelets are numbered face by face in the order U, L, F, R, B, D, sixteen per
face in reading order of the usual unfolded net (U above F; L, F, R, B in a
strip; D below F).  Geometry lives in doubled integer coordinates: cubie
centres have coordinates in {-3, -1, 1, 3} and a facelet is a (position,
outward normal) pair.  Every generator permutation is derived by rotating
that model, never typed in by hand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Sequence

from .perm import Permutation, compose, compose_all, inverse

FACES = "ULFRBD"
COLORS = {"U": "W", "D": "Y", "F": "R", "B": "O", "L": "G", "R": "B"}
COLOR_NAMES = {"W": "white", "Y": "yellow", "R": "red", "O": "orange", "G": "green", "B": "blue"}

NORMALS = {
    "U": (0, 1, 0),
    "D": (0, -1, 0),
    "F": (0, 0, 1),
    "B": (0, 0, -1),
    "R": (1, 0, 0),
    "L": (-1, 0, 0),
}
FACE_OF_NORMAL = {v: k for k, v in NORMALS.items()}

GENERATORS = ("U", "D", "L", "R", "F", "B", "CU", "CD", "CL", "CR", "CF", "CB")

Vec = tuple[int, int, int]


def _facelet_position(face: str, row: int, col: int) -> Vec:
    a = -3 + 2 * col
    b = 3 - 2 * row
    if face == "U":
        return (a, 3, -3 + 2 * row)
    if face == "D":
        return (a, -3, b)
    if face == "F":
        return (a, b, 3)
    if face == "B":
        return (-a, b, -3)
    if face == "R":
        return (3, b, -a)
    if face == "L":
        return (-3, b, a)
    raise ValueError(face)


@dataclass(frozen=True)
class Facelet:
    index: int
    face: str
    row: int
    col: int
    position: Vec
    normal: Vec

    @property
    def kind(self) -> str:
        n_outer = sum(abs(c) == 3 for c in self.position)
        return {3: "corner", 2: "edge", 1: "center"}[n_outer]


FACELETS: tuple[Facelet, ...] = tuple(
    Facelet(16 * f + 4 * r + c, face, r, c, _facelet_position(face, r, c), NORMALS[face])
    for f, face in enumerate(FACES)
    for r in range(4)
    for c in range(4)
)
_LOOKUP = {(fl.position, fl.normal): fl.index for fl in FACELETS}

CORNER_FACELETS = tuple(fl.index for fl in FACELETS if fl.kind == "corner")
EDGE_FACELETS = tuple(fl.index for fl in FACELETS if fl.kind == "edge")
CENTER_FACELETS = tuple(fl.index for fl in FACELETS if fl.kind == "center")


def facelet_at(position: Vec, normal: Vec) -> int:
    return _LOOKUP[(position, normal)]


def facelet_index(face: str, row: int, col: int) -> int:
    return 16 * FACES.index(face) + 4 * row + col


# -- rotations -------------------------------------------------------------

def _rotation(axis: Vec, quarter_turns: int):
    """Rotation by ``quarter_turns * 90`` degrees about ``axis``, right-handed."""
    ax = axis

    def rot_once(v: Vec) -> Vec:
        # v' = (ax . v) ax + ax x v  for a unit axis-aligned ax and 90 degrees
        d = ax[0] * v[0] + ax[1] * v[1] + ax[2] * v[2]
        cross = (
            ax[1] * v[2] - ax[2] * v[1],
            ax[2] * v[0] - ax[0] * v[2],
            ax[0] * v[1] - ax[1] * v[0],
        )
        return (d * ax[0] + cross[0], d * ax[1] + cross[1], d * ax[2] + cross[2])

    def rot(v: Vec) -> Vec:
        for _ in range(quarter_turns % 4):
            v = rot_once(v)
        return v

    return rot


def _dot(a: Vec, b: Vec) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _permutation_from_motion(selected, motion) -> Permutation:
    images = list(range(96))
    for fl in FACELETS:
        if selected(fl):
            images[fl.index] = facelet_at(motion(fl.position), motion(fl.normal))
    return Permutation(tuple(images))


@lru_cache(maxsize=None)
def generator_permutation(name: str) -> Permutation:
    """Clockwise quarter turn of a slice, seen from outside the named face.

    ``CX`` is the inner slice adjacent to face ``X``.
    """
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}")
    face = name[-1]
    depth = 1 if name.startswith("C") else 3
    n = NORMALS[face]
    # clockwise seen from outside = negative rotation about the outward normal
    rot = _rotation(n, 3)
    return _permutation_from_motion(lambda fl: _dot(fl.position, n) == depth, rot)


@lru_cache(maxsize=None)
def whole_cube_rotation(face: str) -> Permutation:
    """Rigid rotation of the whole cube, clockwise as seen from ``face``."""
    rot = _rotation(NORMALS[face], 3)
    return _permutation_from_motion(lambda fl: True, rot)


@lru_cache(maxsize=None)
def cube_rotations() -> tuple[Permutation, ...]:
    """The 24 rigid rotations as facelet permutations (identity first)."""
    gens = [whole_cube_rotation("R"), whole_cube_rotation("U")]
    seen = {Permutation.identity(96).images: Permutation.identity(96)}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q.images not in seen:
                    seen[q.images] = q
                    nxt.append(q)
        frontier = nxt
    return tuple(seen.values())


# -- cubies, slots and sticker identities -----------------------------------

# Corner slots: 1 = UFL, 2..4 clockwise seen from above; 5 = DFL, 6..8 clockwise
# seen from below.  Entries are the (x, y, z) signs of the corner.
CORNER_SLOTS: tuple[Vec, ...] = (
    (-1, 1, 1), (-1, 1, -1), (1, 1, -1), (1, 1, 1),
    (-1, -1, 1), (1, -1, 1), (1, -1, -1), (-1, -1, -1),
)
# Edge positions 1..12 named by their two faces, reference face first.
EDGE_POSITIONS: tuple[tuple[str, str], ...] = (
    ("U", "F"), ("U", "L"), ("U", "B"), ("U", "R"),
    ("F", "L"), ("B", "L"), ("B", "R"), ("F", "R"),
    ("D", "F"), ("D", "R"), ("D", "B"), ("D", "L"),
)


def _cross(a: Vec, b: Vec) -> Vec:
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _corner_facelets(signs: Vec) -> tuple[int, int, int]:
    """Facelets of a corner slot: U/D facelet first, then clockwise seen from outside."""
    pos = tuple(3 * s for s in signs)
    normals = [(signs[0], 0, 0), (0, signs[1], 0), (0, 0, signs[2])]
    first = normals[1]
    rest = [normals[0], normals[2]]
    # clockwise seen from outside along the diagonal d: for consecutive
    # normals a -> b we need (a x b) . d < 0
    diag = signs
    second = next(b for b in rest if _dot(_cross(first, b), diag) < 0)
    third = next(b for b in rest if b != second)
    return tuple(facelet_at(pos, nrm) for nrm in (first, second, third))


CORNER_SLOT_FACELETS: tuple[tuple[int, int, int], ...] = tuple(
    _corner_facelets(s) for s in CORNER_SLOTS
)


def _edge_subslots() -> tuple[tuple[int, int], ...]:
    """(reference facelet, other facelet) for the 24 sub-slots 1a, 1b, ..., 12b.

    A sub-slot is of type ``a`` when (reference normal, other normal, offset
    along the edge) is a right-handed frame, ``b`` otherwise.  Wing pieces keep
    their handedness, so a wing sits with its 0-sticker on the reference
    facelet exactly when its own type matches the slot type.
    """
    out = []
    for ref, other in EDGE_POSITIONS:
        nr, no = NORMALS[ref], NORMALS[other]
        axis = _cross(nr, no)
        slots = {}
        for offset_sign in (1, -1):
            offset = tuple(offset_sign * c for c in axis)
            pos = tuple(3 * a + 3 * b + o for a, b, o in zip(nr, no, offset))
            handed = _dot(_cross(nr, no), offset) > 0
            slots["a" if handed else "b"] = (facelet_at(pos, nr), facelet_at(pos, no))
        out.append(slots["a"])
        out.append(slots["b"])
    return tuple(out)


EDGE_SUBSLOT_FACELETS: tuple[tuple[int, int], ...] = _edge_subslots()
EDGE_SUBSLOT_NAMES: tuple[str, ...] = tuple(f"{i}{t}" for i in range(1, 13) for t in "ab")

# Centres are numbered 1..24 in facelet order (U, L, F, R, B, D; reading order).
CENTER_SLOT_FACELETS: tuple[int, ...] = CENTER_FACELETS


@dataclass(frozen=True, order=True)
class StickerToken:
    kind: Literal["corner", "edge", "center"]
    cubie: int  # 1-based corner slot / edge position / centre number
    edge_type: str = ""  # "a" or "b" for edges
    sticker: int = 0

    def __str__(self) -> str:
        if self.kind == "corner":
            return f"C{self.cubie}.{self.sticker}"
        if self.kind == "edge":
            return f"E{self.cubie}{self.edge_type}.{self.sticker}"
        return f"Z{self.cubie}"

    @property
    def color(self) -> str:
        return COLORS[FACELETS[HOME_FACELET[self]].face]


_TOKEN_RE = re.compile(r"^(?:C([1-8])\.([0-2])|E(1[0-2]|[1-9])([ab])\.([01])|Z(2[0-4]|1[0-9]|[1-9]))$")


def parse_token(text: str) -> StickerToken:
    m = _TOKEN_RE.match(text)
    if not m:
        raise ValueError(f"bad sticker token {text!r}")
    if m.group(1):
        return StickerToken("corner", int(m.group(1)), "", int(m.group(2)))
    if m.group(3):
        return StickerToken("edge", int(m.group(3)), m.group(4), int(m.group(5)))
    return StickerToken("center", int(m.group(6)))


def _home_assignments() -> dict[StickerToken, int]:
    home = {}
    for slot, facelets in enumerate(CORNER_SLOT_FACELETS, 1):
        for s, f in enumerate(facelets):
            home[StickerToken("corner", slot, "", s)] = f
    for k, facelets in enumerate(EDGE_SUBSLOT_FACELETS):
        pos, t = divmod(k, 2)
        for s, f in enumerate(facelets):
            home[StickerToken("edge", pos + 1, "ab"[t], s)] = f
    for k, f in enumerate(CENTER_SLOT_FACELETS, 1):
        home[StickerToken("center", k)] = f
    return home


HOME_FACELET: dict[StickerToken, int] = _home_assignments()
SOLVED_TOKENS: tuple[StickerToken, ...] = tuple(
    sorted(HOME_FACELET, key=HOME_FACELET.__getitem__)
)
TOKEN_INDEX: dict[StickerToken, int] = {t: HOME_FACELET[t] for t in SOLVED_TOKENS}


# -- states ----------------------------------------------------------------

@dataclass(frozen=True)
class CubeState:
    """Sticker contents of the 96 facelets.

    In ``labeled`` mode each entry is a :class:`StickerToken`; in ``colored``
    mode it is one of the colour letters W, Y, R, O, G, B.
    """

    stickers: tuple
    mode: Literal["labeled", "colored"] = "labeled"

    def __post_init__(self):
        if len(self.stickers) != 96:
            raise ValueError(f"expected 96 stickers, got {len(self.stickers)}")
        if self.mode == "labeled":
            if set(self.stickers) != set(SOLVED_TOKENS):
                missing = set(SOLVED_TOKENS) - set(self.stickers)
                raise ValueError(
                    "labeled state must use every sticker identity exactly once"
                    + (f"; missing {sorted(map(str, missing))[:5]}" if missing else "")
                )
        elif self.mode == "colored":
            counts = {c: 0 for c in "WYROGB"}
            for s in self.stickers:
                if s not in counts:
                    raise ValueError(f"bad colour {s!r}")
                counts[s] += 1
            if any(v != 16 for v in counts.values()):
                raise ValueError(f"each colour must appear 16 times, got {counts}")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")

    def colored(self) -> "CubeState":
        if self.mode == "colored":
            return self
        return CubeState(tuple(t.color for t in self.stickers), "colored")

    def permuted(self, perm: Permutation) -> "CubeState":
        """Move the sticker at facelet ``i`` to facelet ``perm(i)``."""
        out = [None] * 96
        for i, s in enumerate(self.stickers):
            out[perm.images[i]] = s
        return CubeState(tuple(out), self.mode)

    def to_text(self) -> str:
        return format_state(self)


def solved_state(mode: Literal["labeled", "colored"] = "labeled") -> CubeState:
    state = CubeState(SOLVED_TOKENS, "labeled")
    return state if mode == "labeled" else state.colored()


def state_permutation(state: CubeState) -> Permutation:
    """The permutation carrying the solved labeled state to ``state``."""
    if state.mode != "labeled":
        raise ValueError("state_permutation needs a labeled state")
    images = [0] * 96
    for i, tok in enumerate(state.stickers):
        images[HOME_FACELET[tok]] = i
    return Permutation(tuple(images))


# -- move sequences ----------------------------------------------------------

class MoveSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class MoveSequence:
    tokens: tuple[tuple[str, int], ...]
    source: str = ""

    def __str__(self) -> str:
        suffix = {1: "", 2: "2", 3: "'"}
        return " ".join(f"{g}{suffix[e]}" for g, e in self.tokens)

    def __add__(self, other: "MoveSequence") -> "MoveSequence":
        return MoveSequence(self.tokens + other.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def inverse(self) -> "MoveSequence":
        return MoveSequence(tuple((g, (4 - e) % 4) for g, e in reversed(self.tokens)))

    @classmethod
    def of(cls, moves: Iterable[tuple[str, int]]) -> "MoveSequence":
        return cls(tuple((g, e % 4) for g, e in moves if e % 4))


_MOVE_RE = re.compile(r"(CU|CD|CL|CR|CF|CB|U|D|L|R|F|B)(['2]?)")


def parse_sequence(text: str) -> MoveSequence:
    tokens = []
    for m in re.finditer(r"\S+", text):
        word = m.group(0)
        tm = _MOVE_RE.fullmatch(word)
        if tm is None:
            head = _MOVE_RE.match(word)
            if head is None:
                raise MoveSyntaxError(f"unknown move {word!r}", m.start())
            raise MoveSyntaxError(
                f"trailing characters {word[head.end():]!r}", m.start() + head.end()
            )
        exponent = {"": 1, "2": 2, "'": 3}[tm.group(2)]
        tokens.append((tm.group(1), exponent))
    return MoveSequence(tuple(tokens), text)


def sequence_permutation(seq: MoveSequence | str) -> Permutation:
    if isinstance(seq, str):
        seq = parse_sequence(seq)
    perms = []
    for g, e in seq.tokens:
        perms.extend([generator_permutation(g)] * e)
    return compose_all(perms, 96)


def apply(state: CubeState, seq: MoveSequence | str | Permutation) -> CubeState:
    perm = seq if isinstance(seq, Permutation) else sequence_permutation(seq)
    return state.permuted(perm)


def commutator(m: MoveSequence, n: MoveSequence) -> MoveSequence:
    """``[m, n] = m n m^-1 n^-1``, read left to right."""
    return m + n + m.inverse() + n.inverse()


def random_sequence(rng, length: int) -> MoveSequence:
    """A random word of quarter/half turns with no two consecutive tokens on one slice."""
    tokens = []
    prev = None
    while len(tokens) < length:
        g = GENERATORS[int(rng.integers(len(GENERATORS)))]
        if g == prev:
            continue
        tokens.append((g, int(rng.integers(1, 4))))
        prev = g
    return MoveSequence(tuple(tokens))


# -- text format -------------------------------------------------------------

class StateFormatError(ValueError):
    pass


def format_state(state: CubeState) -> str:
    blocks = []
    for f in range(6):
        lines = []
        for r in range(4):
            row = state.stickers[16 * f + 4 * r: 16 * f + 4 * r + 4]
            lines.append(" ".join(str(s) for s in row))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def parse_state(text: str) -> CubeState:
    blocks = [b for b in re.split(r"\n\s*\n", text.strip()) if b.strip()]
    if len(blocks) != 6:
        raise StateFormatError(f"expected 6 face blocks, found {len(blocks)}")
    tokens: list[str] = []
    for f, block in enumerate(blocks):
        lines = block.strip().splitlines()
        if len(lines) != 4:
            raise StateFormatError(f"face {FACES[f]}: expected 4 lines, found {len(lines)}")
        for r, line in enumerate(lines):
            row = line.split()
            if len(row) != 4:
                raise StateFormatError(
                    f"face {FACES[f]} line {r + 1}: expected 4 tokens, found {len(row)}"
                )
            tokens.extend(row)
    try:
        if all(t in COLOR_NAMES for t in tokens):
            return CubeState(tuple(tokens), "colored")
        return CubeState(tuple(parse_token(t) for t in tokens), "labeled")
    except ValueError as exc:
        raise StateFormatError(str(exc)) from exc


def kind_partition() -> dict[str, tuple[int, ...]]:
    return {"corner": CORNER_FACELETS, "edge": EDGE_FACELETS, "center": CENTER_FACELETS}


def generators(names: Sequence[str] = GENERATORS) -> list[Permutation]:
    return [generator_permutation(g) for g in names]


def inverse_generator(name: str) -> Permutation:
    return inverse(generator_permutation(name))
