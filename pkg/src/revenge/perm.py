"""Finite permutations and a deterministic Schreier-Sims engine.

Permutations act on the points ``0 .. degree-1`` and are stored in image
(one-line) form.  Products are read left to right: ``compose(p, q)`` applies
``p`` first and then ``q``, so the move word ``"R U"`` corresponds to
``compose(phi(R), phi(U))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import lcm
from typing import Iterable, Sequence


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build a permutation from disjoint cycles; ``(0, 1, 2)`` sends 0 -> 1 -> 2 -> 0."""
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for k, a in enumerate(cyc):
                if a in seen:
                    raise ValueError(f"cycles are not disjoint at point {a}")
                seen.add(a)
                images[a] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(images))

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Permutation":
        # trusted constructor for internally produced image tuples
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(i == a for i, a in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, a in enumerate(self.images) if i != a]

    def __str__(self) -> str:
        cyc = cycles(self)
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def _check_degrees(*perms: Permutation) -> int:
    degrees = {p.degree for p in perms}
    if len(degrees) != 1:
        raise DegreeMismatch(f"degree mismatch: {sorted(degrees)}")
    return degrees.pop()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return the permutation applying ``p`` first, then ``q``."""
    _check_degrees(p, q)
    return Permutation._raw(_mul(p.images, q.images))


def compose_all(perms: Iterable[Permutation], degree: int) -> Permutation:
    return reduce(compose, perms, Permutation.identity(degree))


def inverse(p: Permutation) -> Permutation:
    return Permutation._raw(_inv(p.images))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = tuple(range(p.degree))
    base = p.images
    while k:
        if k & 1:
            result = _mul(result, base)
        base = _mul(base, base)
        k >>= 1
    return Permutation._raw(result)


def cycles(p: Permutation) -> list[list[int]]:
    """Disjoint cycles of the moved points, each starting at its minimum, sorted."""
    seen = [False] * p.degree
    out = []
    for start in range(p.degree):
        if seen[start] or p.images[start] == start:
            continue
        cyc = [start]
        seen[start] = True
        j = p.images[start]
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = p.images[j]
        out.append(cyc)
    return out


def cycle_type(p: Permutation) -> list[int]:
    return sorted((len(c) for c in cycles(p)), reverse=True)


def sign(p: Permutation) -> int:
    n_cycles = 0
    seen = [False] * p.degree
    for start in range(p.degree):
        if seen[start]:
            continue
        n_cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = p.images[j]
    return -1 if (p.degree - n_cycles) % 2 else 1


def order(p: Permutation) -> int:
    return lcm(1, *(len(c) for c in cycles(p)))


def restrict(generators: Sequence[Permutation], subset: Sequence[int]) -> list[Permutation]:
    """Restrict each generator to an invariant point subset.

    Points are renumbered by their position in ``subset``.  Raises
    ``ValueError`` naming the first generator and point that leave the subset.
    """
    index = {a: k for k, a in enumerate(subset)}
    if len(index) != len(subset):
        raise ValueError("subset contains repeated points")
    out = []
    for gi, g in enumerate(generators):
        images = []
        for a in subset:
            b = g.images[a]
            if b not in index:
                raise ValueError(
                    f"subset is not invariant: generator {gi} sends point {a} to {b}"
                )
            images.append(index[b])
        out.append(Permutation._raw(tuple(images)))
    return out


# -- raw tuple kernels used in the hot loops ---------------------------------

def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(q.__getitem__, p))


def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, a in enumerate(p):
        out[a] = i
    return tuple(out)


# -- Schreier-Sims -------------------------------------------------------------

@dataclass
class _Level:
    point: int
    # orbit point -> (representative u with u[point] == beta, its inverse)
    transversal: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=dict)
    generators: list[int] = field(default_factory=list)  # indices into the strong set
    checked: set[tuple[int, int]] = field(default_factory=set)


@dataclass(frozen=True)
class BSGS:
    """Base and strong generating set of a permutation group.

    ``transversals[i]`` maps each point of the orbit of ``base[i]`` under the
    i-th stabilizer to a coset representative carrying ``base[i]`` onto it.
    """

    degree: int
    base: tuple[int, ...]
    strong_generators: tuple[Permutation, ...]
    transversals: tuple[dict[int, Permutation], ...]
    _inverse_reps: tuple[dict[int, tuple[int, ...]], ...] = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return group_order(self)

    def orbit_sizes(self) -> list[int]:
        return [len(t) for t in self.transversals]

    def sift(self, p: Permutation) -> tuple[Permutation, int]:
        """Sift ``p`` through the chain; returns the residue and the drop-out level."""
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree mismatch: {p.degree} != {self.degree}")
        h, level = self.sift_images(p.images)
        return Permutation._raw(h), level

    def sift_images(
        self, h: tuple[int, ...], start: int = 0, stop: int | None = None
    ) -> tuple[tuple[int, ...], int]:
        """Sift raw images through levels ``start .. stop-1``.

        Returns the residue and the level where sifting stopped (``stop`` on success).
        """
        stop = len(self.base) if stop is None else stop
        for level in range(start, stop):
            u_inv = self._inverse_reps[level].get(h[self.base[level]])
            if u_inv is None:
                return h, level
            h = _mul(h, u_inv)
        return h, stop

    def __contains__(self, p: Permutation) -> bool:
        return contains(self, p)


def group_order(b: BSGS) -> int:
    total = 1
    for t in b.transversals:
        total *= len(t)
    return total


def contains(b: BSGS, p: Permutation) -> bool:
    residue, level = b.sift(p)
    return level == len(b.base) and residue.is_identity()


def schreier_sims(generators: Sequence[Permutation], base: Sequence[int] = ()) -> BSGS:
    """Deterministic Schreier-Sims.

    The chain starts with the points of ``base`` (if any); every further base
    point is the smallest point moved by the generator that forced the
    extension.  The construction depends only on the order of ``generators``
    and on ``base``, so repeated calls give identical structures.
    """
    if not generators:
        raise ValueError("need at least one generator")
    degree = _check_degrees(*generators)
    ident = tuple(range(degree))
    if len(set(base)) != len(base) or any(not 0 <= b < degree for b in base):
        raise ValueError("base prefix must list distinct points of the domain")

    strong: list[tuple[int, ...]] = []
    levels: list[_Level] = [_Level(point=b, transversal={b: (ident, ident)}) for b in base]

    def moved_point(g: tuple[int, ...]) -> int:
        return next(i for i, a in enumerate(g) if a != i)

    def add_generator(g: tuple[int, ...], depth: int) -> None:
        # g fixes base[0:depth]; it joins the generating sets of levels 0..depth
        if depth == len(levels):
            levels.append(_Level(point=moved_point(g)))
        idx = len(strong)
        strong.append(g)
        for lv in levels[: depth + 1]:
            lv.generators.append(idx)
        for lv in levels[: depth + 1]:
            _extend_orbit(lv)

    def _extend_orbit(lv: _Level) -> None:
        if not lv.transversal:
            lv.transversal[lv.point] = (ident, ident)
        queue = list(lv.transversal)
        while queue:
            beta = queue.pop()
            u = lv.transversal[beta][0]
            for gi in lv.generators:
                g = strong[gi]
                gamma = g[beta]
                if gamma not in lv.transversal:
                    v = _mul(u, g)
                    lv.transversal[gamma] = (v, _inv(v))
                    queue.append(gamma)

    def sift_from(h: tuple[int, ...], start: int) -> tuple[tuple[int, ...], int]:
        for j in range(start, len(levels)):
            lv = levels[j]
            rep = lv.transversal.get(h[lv.point])
            if rep is None:
                return h, j
            h = _mul(h, rep[1])
        return h, len(levels)

    for g in generators:
        h, depth = sift_from(g.images, 0)
        if h != ident:
            add_generator(h, depth)

    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        extended = False
        for beta in sorted(lv.transversal):
            u = lv.transversal[beta][0]
            for gi in list(lv.generators):
                if (beta, gi) in lv.checked:
                    continue
                lv.checked.add((beta, gi))
                g = strong[gi]
                s = _mul(u, g)
                schreier = _mul(s, lv.transversal[g[beta]][1])
                if schreier == ident:
                    continue
                h, depth = sift_from(schreier, i + 1)
                if h != ident:
                    add_generator(h, depth)
                    i = depth
                    extended = True
                    break
            if extended:
                break
        if not extended:
            i -= 1

    return BSGS(
        degree=degree,
        base=tuple(lv.point for lv in levels),
        strong_generators=tuple(Permutation._raw(g) for g in strong),
        transversals=tuple(
            {beta: Permutation._raw(rep[0]) for beta, rep in sorted(lv.transversal.items())}
            for lv in levels
        ),
        _inverse_reps=tuple(
            {beta: rep[1] for beta, rep in lv.transversal.items()} for lv in levels
        ),
    )
