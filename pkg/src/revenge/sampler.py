"""Random reassembly of the cube and solvability probabilities.

Three assembly models are supported:

``theoretical``
    Revenge taken apart and put back uniformly at random; edges may be
    flipped freely and neither centres nor the two members of an edge pair
    carry labels.
``market``
    Commercial Revenge: the two members of a pair are mirror images, so each
    edge's orientation is forced by the sub-slot it is pushed into.
``cube3``
    Classic 3x3x3 reassembly, uniform over (sigma, x, tau, y).

Monte Carlo runs are split into fixed-size blocks.  Block ``b`` of a run with
seed ``S`` draws from ``Generator(Philox(SeedSequence([S, b])))``.  Shards
take contiguous ranges of blocks and their hit counts are summed, so the
estimate does not depend on the number of shards.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial, sqrt

import numpy as np

from . import cube
from .config import Configuration, Configuration3, to_facelet_permutation
from .law import check_cube3, check_revenge
from .perm import BSGS, Permutation, compose, schreier_sims, sign

BLOCK_SIZE = 1 << 16


class AssemblyMode(str, Enum):
    THEORETICAL = "theoretical"
    MARKET = "market"
    CUBE3 = "cube3"

    @classmethod
    def parse(cls, value: "str | AssemblyMode") -> "AssemblyMode":
        if isinstance(value, cls):
            return value
        aliases = {"revenge_theoretical": "theoretical", "revenge_market": "market"}
        return cls(aliases.get(value, value))


@dataclass(frozen=True)
class Assembly:
    """A physically reassembled cube.

    ``sigma``/``x`` place corners exactly as in a configuration.  ``edges``
    sends physical edge ``e`` to a sub-slot; edges ``2p`` and ``2p + 1`` share
    colours (pair ``p``).  ``y`` is the sticker number on each sub-slot's
    reference facelet.  ``rho`` sends physical centre ``k`` (colour of face
    ``k // 4`` in the solved cube) to a centre slot.  For ``cube3`` the edge
    permutation has degree 12 and ``rho`` is ``None``.
    """

    mode: AssemblyMode
    sigma: Permutation
    x: tuple[int, ...]
    edges: Permutation
    y: tuple[int, ...]
    rho: Permutation | None


@dataclass(frozen=True)
class Estimate:
    p_hat: float
    samples: int
    std_error: float
    seed: int
    hits: int = 0

    def line(self, exact: Fraction | None = None) -> str:
        out = f"p_hat={self.p_hat:.8f} se={self.std_error:.8f}"
        if exact is not None:
            out += f" exact={exact.numerator}/{exact.denominator}"
        return out


# -- sampling -------------------------------------------------------------------

def _perm_rows(rng: np.random.Generator, n: int, k: int) -> np.ndarray:
    return np.argsort(rng.random((n, k)), axis=1).astype(np.int8)


def draw_batch(mode: AssemblyMode | str, rng: np.random.Generator, n: int) -> dict[str, np.ndarray]:
    """Draw ``n`` assemblies as arrays (one row per assembly)."""
    mode = AssemblyMode.parse(mode)
    sigma = _perm_rows(rng, n, 8)
    x = rng.integers(0, 3, (n, 8), dtype=np.int8)
    if mode is AssemblyMode.CUBE3:
        edges = _perm_rows(rng, n, 12)
        y = rng.integers(0, 2, (n, 12), dtype=np.int8)
        return {"sigma": sigma, "x": x, "edges": edges, "y": y}
    edges = _perm_rows(rng, n, 24)
    if mode is AssemblyMode.THEORETICAL:
        y = rng.integers(0, 2, (n, 24), dtype=np.int8)
    else:
        # the mechanism only admits the orientation matching the edge's handedness
        y = np.empty((n, 24), dtype=np.int8)
        rows = np.arange(n)[:, None]
        y[rows, edges] = (edges % 2) != (np.arange(24) % 2)
    rho = _perm_rows(rng, n, 24)
    return {"sigma": sigma, "x": x, "edges": edges, "y": y, "rho": rho}


def assembly_from_row(mode: AssemblyMode | str, batch: dict[str, np.ndarray], i: int) -> Assembly:
    mode = AssemblyMode.parse(mode)

    def perm(key: str) -> Permutation:
        return Permutation(tuple(batch[key][i].tolist()))

    return Assembly(
        mode,
        perm("sigma"),
        tuple(batch["x"][i].tolist()),
        perm("edges"),
        tuple(batch["y"][i].tolist()),
        perm("rho") if "rho" in batch else None,
    )


def sample_assembly(mode: AssemblyMode | str, rng: np.random.Generator) -> Assembly:
    return assembly_from_row(mode, draw_batch(mode, rng, 1), 0)


# -- labelings and solvability --------------------------------------------------

def label(a: Assembly, pair_swaps=(False,) * 12, center_swap: bool = False) -> Configuration:
    """Configuration obtained by naming the physical pieces of a Revenge assembly.

    By default physical edge ``e`` becomes cubie ``e`` and centre ``k`` becomes
    centre ``k``.  ``pair_swaps[p]`` exchanges the a/b names inside pair
    ``p``; ``center_swap`` exchanges the names of the two first (white) centres.
    """
    if a.rho is None:
        raise ValueError("cube3 assemblies have no Revenge labeling")
    slots = list(a.edges.images)
    for p, swap in enumerate(pair_swaps):
        if swap:
            slots[2 * p], slots[2 * p + 1] = slots[2 * p + 1], slots[2 * p]
    rho = a.rho
    if center_swap:
        rho = compose(Permutation.from_cycles(24, [(0, 1)]), rho)
    return Configuration(a.sigma, Permutation(tuple(slots)), rho, a.x, a.y)


def solving_labeling(a: Assembly) -> tuple[tuple[bool, ...], bool]:
    """The labeling choice that gives an assembly its best chance under the law.

    Each pair is named so its edges satisfy y = 1 - delta when possible
    (choices for different pairs are independent), and the white centres are
    renamed when that fixes sgn(sigma) = sgn(rho).
    """
    swaps = []
    for p in range(12):
        if a.mode is AssemblyMode.MARKET:
            swaps.append(False)
            continue
        j = a.edges.images[2 * p]
        # naming the edge in slot j as type a requires y_j = [slot j is type b]
        swaps.append(a.y[j] != (j % 2))
    center_swap = sign(a.sigma) != sign(a.rho)
    return tuple(swaps), center_swap


def is_solvable(a: Assembly, mode: AssemblyMode | str | None = None) -> bool:
    mode = AssemblyMode.parse(mode or a.mode)
    if mode is AssemblyMode.CUBE3:
        return check_cube3(Configuration3(a.sigma, a.edges, a.x, a.y)).valid
    swaps, center_swap = solving_labeling(a)
    return check_revenge(label(a, swaps, center_swap)).valid


def _parity(rows: np.ndarray) -> np.ndarray:
    """Parity (0 even, 1 odd) of each row permutation, by inversion count."""
    inv = (rows[:, :, None] > rows[:, None, :]) & np.triu(np.ones(rows.shape[1:] * 2, dtype=bool), 1)
    return inv.sum(axis=(1, 2)) % 2


def solvable_batch(mode: AssemblyMode | str, batch: dict[str, np.ndarray]) -> np.ndarray:
    """Vectorised :func:`is_solvable` over a batch from :func:`draw_batch`."""
    mode = AssemblyMode.parse(mode)
    twist_ok = batch["x"].sum(axis=1) % 3 == 0
    if mode is AssemblyMode.CUBE3:
        parity_ok = _parity(batch["sigma"]) == _parity(batch["edges"])
        return twist_ok & parity_ok & (batch["y"].sum(axis=1) % 2 == 0)
    if mode is AssemblyMode.MARKET:
        return twist_ok
    rows = np.arange(len(twist_ok))[:, None]
    slots = batch["edges"].astype(np.int64)
    needed = (slots % 2) ^ batch["y"][rows, slots]  # type each edge must be named
    pairs_ok = (needed[:, 0::2] != needed[:, 1::2]).all(axis=1)
    return twist_ok & pairs_ok


# -- exact values ---------------------------------------------------------------

def closed_form_probability(mode: AssemblyMode | str) -> Fraction:
    mode = AssemblyMode.parse(mode)
    twist = Fraction(1, 3)  # sum of x is uniform in Z3
    if mode is AssemblyMode.CUBE3:
        return twist * Fraction(1, 2) * Fraction(1, 2)  # parities agree, flips even
    if mode is AssemblyMode.MARKET:
        return twist  # centres fix parity, the mechanism fixes condition 3
    return twist * Fraction(1, 2) ** 12  # each pair nameable with probability 1/2


def count_cube3_patterns() -> int:
    return factorial(8) * 3**8 * factorial(12) * 2**12 // 12


# -- Monte Carlo ----------------------------------------------------------------

def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, block])))


def block_schedule(n: int, block_size: int = BLOCK_SIZE) -> list[int]:
    sizes = [block_size] * (n // block_size)
    if n % block_size:
        sizes.append(n % block_size)
    return sizes


def _count_hits(mode: AssemblyMode, seed: int, blocks: list[tuple[int, int]]) -> int:
    hits = 0
    for b, size in blocks:
        batch = draw_batch(mode, _block_rng(seed, b), size)
        hits += int(solvable_batch(mode, batch).sum())
    return hits


def monte_carlo(
    mode: AssemblyMode | str,
    n: int,
    seed: int,
    shards: int = 1,
    block_size: int = BLOCK_SIZE,
) -> Estimate:
    mode = AssemblyMode.parse(mode)
    if n < 1:
        raise ValueError("need at least one sample")
    if shards < 1:
        raise ValueError("need at least one shard")
    if seed < 0:
        raise ValueError("seed must be non-negative")
    blocks = list(enumerate(block_schedule(n, block_size)))
    shards = min(shards, len(blocks))
    bounds = [len(blocks) * k // shards for k in range(shards + 1)]
    parts = [blocks[bounds[k]: bounds[k + 1]] for k in range(shards)]
    if shards == 1:
        hits = _count_hits(mode, seed, parts[0])
    else:
        with ThreadPoolExecutor(max_workers=shards) as pool:
            hits = sum(pool.map(lambda part: _count_hits(mode, seed, part), parts))
    p = hits / n
    return Estimate(p, n, sqrt(p * (1 - p) / n), seed, hits)


# -- exhaustive labeling oracle -------------------------------------------------

def _pair_home_facelets(pos: int) -> tuple[int, int, int, int]:
    home = cube.HOME_FACELET
    return tuple(
        home[cube.StickerToken("edge", pos, t, s)] for t in "ab" for s in (0, 1)
    )


@lru_cache(maxsize=None)
def pair_first_group() -> BSGS:
    """Move-group BSGS whose base starts with the home facelets of the 12 edge pairs."""
    prefix = [f for pos in range(1, 13) for f in _pair_home_facelets(pos)]
    return schreier_sims(cube.generators(), base=prefix)


def oracle_solvable(a: Assembly) -> bool:
    """Search every relabeling of ``a`` for one whose facelet permutation lies in G.

    The candidate for a labeling is ``swap ; pi`` where ``swap`` exchanges
    home facelets of renamed pieces, so renaming pair ``p`` only permutes the
    sifting residue at pair ``p``'s home facelets.  Those facelets are the
    first base points, so the search branches pair by pair and prunes as soon
    as a partial sift fails.  Both white-centre namings are tried.
    """
    g = pair_first_group()
    pi = to_facelet_permutation(label(a)).images
    z1 = cube.HOME_FACELET[cube.StickerToken("center", 1)]
    z2 = cube.HOME_FACELET[cube.StickerToken("center", 2)]
    for center_swap in (False, True):
        start = list(pi)
        if center_swap:
            start[z1], start[z2] = start[z2], start[z1]
        if _search_pairs(g, tuple(start), 0):
            return True
    return False


def _search_pairs(g: BSGS, residue: tuple[int, ...], pair: int) -> bool:
    if pair == 12:
        h, level = g.sift_images(residue, 48)
        return level == len(g.base) and h == tuple(range(96))
    a0, a1, b0, b1 = _pair_home_facelets(pair + 1)
    for swap in (False, True):
        r = residue
        if swap:
            r = list(residue)
            r[a0], r[b0], r[a1], r[b1] = r[b0], r[a0], r[b1], r[a1]
            r = tuple(r)
        h, level = g.sift_images(r, 4 * pair, 4 * pair + 4)
        if level == 4 * pair + 4 and _search_pairs(g, h, pair + 1):
            return True
    return False
