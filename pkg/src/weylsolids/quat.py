"""Quaternion arithmetic and the pair-of-unit-quaternion actions on it.

A quaternion is s + x*e1 + y*e2 + z*e3 with the Hamilton units
e_i e_j = -delta_ij + eps_ijk e_k.  Pure quaternions (s == 0) double as
3D vectors; there is no separate vector type.  Everything here is an
immutable value and every operation is a pure function, so the module is
safe for unrestricted concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TAU = (1.0 + math.sqrt(5.0)) / 2.0    # golden ratio, TAU**2 == TAU + 1
SIGMA = (1.0 - math.sqrt(5.0)) / 2.0  # == 1 - TAU, TAU * SIGMA == -1
SQRT2_INV = 1.0 / math.sqrt(2.0)

EPS_PURE = 1e-12   # |s| bound below which a quaternion counts as pure
EPS_UNIT = 1e-12   # |norm - 1| bound for the unit check
EPS_DEDUP = 1e-9   # componentwise threshold for "same quaternion"


class InvalidElementError(ValueError):
    """A group element whose p or q component fails the unit check."""


@dataclass(frozen=True)
class Quaternion:
    s: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.s + other.s, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.s - other.s, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.s, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        return self.scale(float(other))

    def __rmul__(self, other):
        return self.scale(float(other))

    def scale(self, k: float) -> "Quaternion":
        return Quaternion(k * self.s, k * self.x, k * self.y, k * self.z)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.s, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.s * self.s + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def normalized(self) -> "Quaternion":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero quaternion")
        return self.scale(1.0 / n)

    def is_pure(self, tol: float = EPS_PURE) -> bool:
        return abs(self.s) <= tol

    def is_unit(self, tol: float = EPS_UNIT) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def vec(self) -> tuple[float, float, float]:
        """Imaginary part as a 3D coordinate triple."""
        return (self.x, self.y, self.z)

    def key(self, ndigits: int = 9) -> tuple[float, float, float, float]:
        """Rounded component tuple used as a dedup/hash key (-0.0 folded to 0.0)."""
        return (round(self.s, ndigits) + 0.0, round(self.x, ndigits) + 0.0,
                round(self.y, ndigits) + 0.0, round(self.z, ndigits) + 0.0)

    def approx_eq(self, other: "Quaternion", tol: float = EPS_DEDUP) -> bool:
        return (abs(self.s - other.s) <= tol and abs(self.x - other.x) <= tol
                and abs(self.y - other.y) <= tol and abs(self.z - other.z) <= tol)

    def __repr__(self) -> str:
        return f"Quaternion({self.s:.12g}, {self.x:.12g}, {self.y:.12g}, {self.z:.12g})"


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
E1 = Quaternion(0.0, 1.0, 0.0, 0.0)
E2 = Quaternion(0.0, 0.0, 1.0, 0.0)
E3 = Quaternion(0.0, 0.0, 0.0, 1.0)


def pure(x: float, y: float, z: float) -> Quaternion:
    """Pure quaternion x*e1 + y*e2 + z*e3, i.e. the vector (x, y, z)."""
    return Quaternion(0.0, x, y, z)


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p*q."""
    return Quaternion(
        p.s * q.s - p.x * q.x - p.y * q.y - p.z * q.z,
        p.s * q.x + p.x * q.s + p.y * q.z - p.z * q.y,
        p.s * q.y + p.y * q.s + p.z * q.x - p.x * q.z,
        p.s * q.z + p.z * q.s + p.x * q.y - p.y * q.x,
    )


def conjugate(q: Quaternion) -> Quaternion:
    return q.conjugate()


def dot(p: Quaternion, q: Quaternion) -> float:
    """Euclidean 4D scalar product; equals the real part of (conj(p)*q + conj(q)*p)/2."""
    return p.s * q.s + p.x * q.x + p.y * q.y + p.z * q.z


def apply(g, r: Quaternion) -> Quaternion:
    """Act with the pair element g on r: p*r*q, or p*conj(r)*q when g is starred.

    g needs unit attributes p and q plus a boolean `starred`; the norm of r
    is preserved either way.
    """
    if not (g.p.is_unit() and g.q.is_unit()):
        raise InvalidElementError(f"element components must be unit quaternions: {g}")
    middle = r.conjugate() if g.starred else r
    return mul(mul(g.p, middle), g.q)
