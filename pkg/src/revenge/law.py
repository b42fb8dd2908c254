"""Validity conditions for Revenge and 3x3 configurations, plus counting identities."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .config import Configuration, Configuration3, edge_occupancy
from .perm import sign


@dataclass(frozen=True)
class Verdict:
    valid: bool
    condition1: bool
    condition2: bool
    condition3: bool
    sign_sigma: int
    sign_other: int  # sgn(rho) for the Revenge, sgn(tau) for the 3x3
    twist_sum: int
    # Revenge: labels i_{t,s} of the edges breaking y = 1 - delta; 3x3: flip sum
    edge_violations: tuple[str, ...] = ()
    flip_sum: int = 0

    def machine_line(self) -> str:
        b = lambda v: "true" if v else "false"  # noqa: E731
        return f"valid={b(self.valid)} c1={b(self.condition1)} c2={b(self.condition2)} c3={b(self.condition3)}"

    def failed(self) -> list[int]:
        return [i for i, ok in enumerate((self.condition1, self.condition2, self.condition3), 1) if not ok]


@dataclass(frozen=True)
class InvariantSignature:
    parity_product: int
    twist_sum: int
    edge_defect: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return self.parity_product == 1 and self.twist_sum == 0 and not any(self.edge_defect)

    def key(self) -> tuple[int, int, int]:
        """Compact form: (parity bit, twist, defect bits as an integer)."""
        bits = 0
        for k, b in enumerate(self.edge_defect):
            bits |= b << k
        return (0 if self.parity_product == 1 else 1, self.twist_sum, bits)


def _delta(t: str, s: str) -> int:
    return 1 if t == s else 0


def check_revenge(c: Configuration) -> Verdict:
    s_sigma, s_rho = sign(c.sigma), sign(c.rho)
    twist = sum(c.x) % 3
    violations = tuple(
        occ.label for occ in edge_occupancy(c) if occ.y != 1 - _delta(occ.slot_type, occ.edge_type)
    )
    c1, c2, c3 = s_sigma == s_rho, twist == 0, not violations
    return Verdict(c1 and c2 and c3, c1, c2, c3, s_sigma, s_rho, twist, violations)


def check_cube3(c: Configuration3) -> Verdict:
    s_sigma, s_tau = sign(c.sigma), sign(c.tau)
    twist = sum(c.x) % 3
    flips = sum(c.y) % 2
    c1, c2, c3 = s_sigma == s_tau, twist == 0, flips == 0
    return Verdict(c1 and c2 and c3, c1, c2, c3, s_sigma, s_tau, twist, flip_sum=flips)


def signature(c: Configuration) -> InvariantSignature:
    defect = tuple(
        int(occ.y != 1 - _delta(occ.slot_type, occ.edge_type)) for occ in edge_occupancy(c)
    )
    return InvariantSignature(sign(c.sigma) * sign(c.rho), sum(c.x) % 3, defect)


def config_space_size() -> int:
    return factorial(24) ** 2 * 2**24 * 3**8 * factorial(8)


def orbit_count() -> int:
    return 2 * 3 * 2**24


def group_order_closed_form() -> int:
    size, n = config_space_size(), orbit_count()
    assert size % n == 0
    return size // n
