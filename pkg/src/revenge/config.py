"""Codec between labeled cube states and (sigma, tau, rho, x, y) configurations.

``sigma[k]`` is the slot (0-based) holding corner ``k``; ``x[j]`` is the
sticker number of the corner in slot ``j`` that lies on the U or D face.
Edges use the 24 sub-slots ``1a, 1b, ..., 12a, 12b``; ``y[j]`` is the sticker
number found on the reference facelet of sub-slot ``j`` (its U/D facelet if
it has one, else its F/B facelet).  Centres are plain permutations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import cube
from .cube import (
    CENTER_SLOT_FACELETS,
    CORNER_SLOT_FACELETS,
    EDGE_SUBSLOT_FACELETS,
    EDGE_SUBSLOT_NAMES,
    CubeState,
    StickerToken,
)
from .perm import Permutation, compose, inverse


@dataclass(frozen=True)
class Configuration:
    sigma: Permutation
    tau: Permutation
    rho: Permutation
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        for name, p, n in (("sigma", self.sigma, 8), ("tau", self.tau, 24), ("rho", self.rho, 24)):
            if p.degree != n:
                raise ValueError(f"{name} must have degree {n}, got {p.degree}")
        x = tuple(int(v) for v in self.x)
        y = tuple(int(v) for v in self.y)
        if len(x) != 8 or any(v not in (0, 1, 2) for v in x):
            raise ValueError(f"x must be 8 values in Z3, got {x}")
        if len(y) != 24 or any(v not in (0, 1) for v in y):
            raise ValueError(f"y must be 24 values in Z2, got {y}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def initial(cls) -> "Configuration":
        return cls(
            Permutation.identity(8),
            Permutation.identity(24),
            Permutation.identity(24),
            (0,) * 8,
            (0,) * 24,
        )

    def replace(self, **changes) -> "Configuration":
        fields = dict(sigma=self.sigma, tau=self.tau, rho=self.rho, x=self.x, y=self.y)
        fields.update(changes)
        return Configuration(**fields)

    def to_text(self) -> str:
        return format_config(self)


@dataclass(frozen=True)
class Configuration3:
    """Configuration of the classic 3x3x3 cube (no centre data)."""

    sigma: Permutation
    tau: Permutation
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        if self.sigma.degree != 8 or self.tau.degree != 12:
            raise ValueError("sigma must have degree 8 and tau degree 12")
        x = tuple(int(v) for v in self.x)
        y = tuple(int(v) for v in self.y)
        if len(x) != 8 or any(v not in (0, 1, 2) for v in x):
            raise ValueError(f"x must be 8 values in Z3, got {x}")
        if len(y) != 12 or any(v not in (0, 1) for v in y):
            raise ValueError(f"y must be 12 values in Z2, got {y}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def initial(cls) -> "Configuration3":
        return cls(Permutation.identity(8), Permutation.identity(12), (0,) * 8, (0,) * 12)


# -- edge types -----------------------------------------------------------------

def slot_type_table() -> dict[str, str]:
    """Sub-slot name -> slot type; in the solved cube each edge sits in a slot of its own type."""
    return {name: name[-1] for name in EDGE_SUBSLOT_NAMES}


def edge_type(edge: int) -> str:
    """Type of the 0-based edge cubie ``edge`` (cubies follow the sub-slot linearization)."""
    return "ab"[edge % 2]


def slot_type(subslot: int) -> str:
    return "ab"[subslot % 2]


class EdgeOccupant(NamedTuple):
    subslot: str  # e.g. "2a"
    slot_type: str
    edge_type: str
    y: int

    @property
    def label(self) -> str:
        """The ``i_{t,s}`` number of the occupant, e.g. ``2_{a,b}``."""
        return f"{self.subslot[:-1]}_{{{self.slot_type},{self.edge_type}}}"


def edge_occupancy(c: Configuration) -> list[EdgeOccupant]:
    occupant = inverse(c.tau).images
    return [
        EdgeOccupant(EDGE_SUBSLOT_NAMES[j], slot_type(j), edge_type(occupant[j]), c.y[j])
        for j in range(24)
    ]


# -- codec ----------------------------------------------------------------------

def extract(state: CubeState) -> Configuration:
    if state.mode != "labeled":
        raise ValueError("extract needs a labeled state")
    st = state.stickers
    sigma = [0] * 8
    x = [0] * 8
    for j, facelets in enumerate(CORNER_SLOT_FACELETS):
        tok = st[facelets[0]]
        others = [st[f] for f in facelets[1:]]
        if tok.kind != "corner" or any(o.kind != "corner" or o.cubie != tok.cubie for o in others):
            raise ValueError(f"corner slot {j + 1} does not hold a single corner cubie")
        sigma[tok.cubie - 1] = j
        x[j] = tok.sticker
    tau = [0] * 24
    y = [0] * 24
    for j, (ref, other) in enumerate(EDGE_SUBSLOT_FACELETS):
        tok, tok2 = st[ref], st[other]
        if tok.kind != "edge" or tok2.kind != "edge" or (tok.cubie, tok.edge_type) != (
            tok2.cubie,
            tok2.edge_type,
        ):
            raise ValueError(f"edge sub-slot {EDGE_SUBSLOT_NAMES[j]} does not hold a single edge cubie")
        tau[2 * (tok.cubie - 1) + "ab".index(tok.edge_type)] = j
        y[j] = tok.sticker
    rho = [0] * 24
    for j, f in enumerate(CENTER_SLOT_FACELETS):
        tok = st[f]
        if tok.kind != "center":
            raise ValueError(f"centre slot {j + 1} holds {tok}")
        rho[tok.cubie - 1] = j
    return Configuration(Permutation(tuple(sigma)), Permutation(tuple(tau)), Permutation(tuple(rho)), x, y)


def realize(c: Configuration) -> CubeState:
    stickers: list[StickerToken | None] = [None] * 96
    for k, j in enumerate(c.sigma.images):
        for q, f in enumerate(CORNER_SLOT_FACELETS[j]):
            stickers[f] = StickerToken("corner", k + 1, "", (c.x[j] + q) % 3)
    for k, j in enumerate(c.tau.images):
        pos, t = divmod(k, 2)
        for q, f in enumerate(EDGE_SUBSLOT_FACELETS[j]):
            stickers[f] = StickerToken("edge", pos + 1, "ab"[t], (c.y[j] + q) % 2)
    for k, j in enumerate(c.rho.images):
        stickers[CENTER_SLOT_FACELETS[j]] = StickerToken("center", k + 1)
    return CubeState(tuple(stickers), "labeled")


def to_facelet_permutation(c: Configuration) -> Permutation:
    """The facelet permutation carrying the solved labeled state onto ``realize(c)``."""
    return cube.state_permutation(realize(c))


# -- action of facelet permutations on configurations ---------------------------

def slot_maps(perm: Permutation):
    """Cubie-level effect of a structure-preserving facelet permutation.

    Returns, for each slot, (target slot, rotation offset) for corners, edges
    and centres.  Raises if ``perm`` breaks cubies apart.
    """
    corner_of = {f: (j, q) for j, fs in enumerate(CORNER_SLOT_FACELETS) for q, f in enumerate(fs)}
    edge_of = {f: (j, q) for j, fs in enumerate(EDGE_SUBSLOT_FACELETS) for q, f in enumerate(fs)}
    center_of = {f: j for j, f in enumerate(CENTER_SLOT_FACELETS)}
    for kind, table in (("corner", corner_of), ("edge", edge_of), ("centre", center_of)):
        if any(perm(f) not in table for f in table):
            raise ValueError(f"permutation sends a {kind} facelet to another cubie kind")
    corners = []
    for fs in CORNER_SLOT_FACELETS:
        targets = [corner_of[perm(f)] for f in fs]
        j, p = targets[0]
        if any(t != (j, (p + q) % 3) for q, t in enumerate(targets)):
            raise ValueError("permutation does not move corners rigidly")
        corners.append((j, p))
    edges = []
    for fs in EDGE_SUBSLOT_FACELETS:
        targets = [edge_of[perm(f)] for f in fs]
        j, p = targets[0]
        if targets[1] != (j, 1 - p):
            raise ValueError("permutation does not move edges rigidly")
        edges.append((j, p))
    centers = [center_of[perm(f)] for f in CENTER_SLOT_FACELETS]
    return corners, edges, centers


def act(perm: Permutation, c: Configuration) -> Configuration:
    """Configuration reached by moving every sticker of ``c`` along ``perm``.

    Works slot by slot (slot maps and orientation offsets), without building
    a cube state.
    """
    corners, edges, centers = slot_maps(perm)
    corner_slot = Permutation(tuple(j for j, _ in corners))
    edge_slot = Permutation(tuple(j for j, _ in edges))
    center_slot = Permutation(tuple(centers))
    x = [0] * 8
    for j, (j2, p) in enumerate(corners):
        # the sticker at position q of slot j lands on position p + q of slot j2
        x[j2] = (c.x[j] - p) % 3
    y = [0] * 24
    for j, (j2, p) in enumerate(edges):
        y[j2] = c.y[j] ^ p
    return Configuration(
        compose(c.sigma, corner_slot),
        compose(c.tau, edge_slot),
        compose(c.rho, center_slot),
        x,
        y,
    )


# -- whole-cube normalisation ---------------------------------------------------

def normalize_orientation(state: CubeState) -> CubeState:
    """Rotate the whole cube so the white-red-green corner sits up-front-left, white up."""
    target = CORNER_SLOT_FACELETS[0][0]
    white_facelet = None
    if state.mode == "labeled":
        white_facelet = state.stickers.index(StickerToken("corner", 1, "", 0))
    else:
        found = []
        for fs in CORNER_SLOT_FACELETS:
            colors = [state.stickers[f] for f in fs]
            if sorted(colors) == sorted("WRG"):
                found.append(fs[colors.index("W")])
        if len(found) != 1:
            raise ValueError(
                f"expected exactly one white-red-green corner, found {len(found)}"
            )
        white_facelet = found[0]
    for r in cube.cube_rotations():
        if r(white_facelet) == target:
            return state.permuted(r)
    raise AssertionError("no rotation reaches the up-front-left corner")  # pragma: no cover


# -- random configurations ----------------------------------------------------

def random_configuration(rng: np.random.Generator) -> Configuration:
    """Uniform over all (24!)^2 * 2^24 * 3^8 * 8! configurations."""
    return Configuration(
        Permutation(tuple(rng.permutation(8).tolist())),
        Permutation(tuple(rng.permutation(24).tolist())),
        Permutation(tuple(rng.permutation(24).tolist())),
        tuple(rng.integers(0, 3, 8).tolist()),
        tuple(rng.integers(0, 2, 24).tolist()),
    )


# -- text format ------------------------------------------------------------------

class ConfigFormatError(ValueError):
    pass


def format_config(c: Configuration) -> str:
    def images(p: Permutation) -> str:
        return " ".join(str(i + 1) for i in p.images)

    return (
        f"sigma: {images(c.sigma)}\n"
        f"tau: {images(c.tau)}\n"
        f"rho: {images(c.rho)}\n"
        f"x: {' '.join(map(str, c.x))}\n"
        f"y: {' '.join(map(str, c.y))}\n"
    )


def format_config3(c: Configuration3) -> str:
    return (
        f"sigma: {' '.join(str(i + 1) for i in c.sigma.images)}\n"
        f"tau: {' '.join(str(i + 1) for i in c.tau.images)}\n"
        f"x: {' '.join(map(str, c.x))}\n"
        f"y: {' '.join(map(str, c.y))}\n"
    )


_LINE_RE = re.compile(r"^\s*(sigma|tau|rho|x|y)\s*:(.*)$")


def _parse_fields(text: str, expected: tuple[str, ...], sizes: dict[str, int]) -> dict[str, list[int]]:
    fields: dict[str, list[int]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        m = _LINE_RE.match(line)
        if not m or m.group(1) not in expected:
            raise ConfigFormatError(f"line {lineno}: unrecognised line {line.strip()!r}")
        key, body = m.group(1), m.group(2).split()
        if key in fields:
            raise ConfigFormatError(f"line {lineno}: duplicate field {key!r}")
        if key in ("x", "y") and len(body) == 1 and len(body[0]) == sizes[key]:
            body = list(body[0])
        try:
            values = [int(v) for v in body]
        except ValueError:
            raise ConfigFormatError(f"line {lineno}: non-integer entry in {key!r}") from None
        if len(values) != sizes[key]:
            raise ConfigFormatError(
                f"line {lineno}: {key!r} needs {sizes[key]} entries, got {len(values)}"
            )
        fields[key] = values
    missing = [k for k in expected if k not in fields]
    if missing:
        raise ConfigFormatError(f"missing field(s): {', '.join(missing)}")
    return fields


def _perm1(values: list[int], name: str) -> Permutation:
    try:
        return Permutation(tuple(v - 1 for v in values))
    except ValueError:
        raise ConfigFormatError(f"{name!r} is not a permutation of 1..{len(values)}") from None


def parse_config(text: str) -> Configuration:
    f = _parse_fields(text, ("sigma", "tau", "rho", "x", "y"), {"sigma": 8, "tau": 24, "rho": 24, "x": 8, "y": 24})
    try:
        return Configuration(
            _perm1(f["sigma"], "sigma"), _perm1(f["tau"], "tau"), _perm1(f["rho"], "rho"), f["x"], f["y"]
        )
    except ConfigFormatError:
        raise
    except ValueError as exc:
        raise ConfigFormatError(str(exc)) from exc


def parse_config3(text: str) -> Configuration3:
    f = _parse_fields(text, ("sigma", "tau", "x", "y"), {"sigma": 8, "tau": 12, "x": 8, "y": 12})
    try:
        return Configuration3(_perm1(f["sigma"], "sigma"), _perm1(f["tau"], "tau"), f["x"], f["y"])
    except ConfigFormatError:
        raise
    except ValueError as exc:
        raise ConfigFormatError(str(exc)) from exc
