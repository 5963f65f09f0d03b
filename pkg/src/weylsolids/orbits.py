"""Highest weights, their quaternion vectors, and Weyl-group orbits.

The three diagrams use fixed closed-form maps from a weight (a1, a2, a3) to a
pure quaternion; acting with the matching Weyl group generates the vertex set
of the named solid.  The registry below covers the 5 Platonic solids (plus the
mirror tetrahedron) and the 11 non-snub Archimedean solids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .quat import SIGMA, SQRT2_INV, TAU, Quaternion, apply, pure
from .groups import WeylGroup, weyl_group, stabilizer_order

# H3 fundamental weight vectors (orbit representatives of (100), (010), (001)).
H3_W1 = pure(-SIGMA / 2.0, 0.0, TAU / 2.0)
H3_W2 = pure(0.0, 0.0, 1.0)
H3_W3 = pure(0.0, -SIGMA / 2.0, 0.5)


class UnknownSolidError(LookupError):
    """Lookup of a solid name that is not in the registry."""

    def __init__(self, name: str, valid: tuple[str, ...]):
        self.name = name
        self.valid = valid
        super().__init__(f"unknown solid {name!r}; valid names: {', '.join(valid)}")


@dataclass(frozen=True)
class Weight:
    diagram: str
    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        if self.diagram not in ("A3", "B3", "H3"):
            raise ValueError(f"unknown diagram {self.diagram!r}")
        if self.a1 < 0 or self.a2 < 0 or self.a3 < 0:
            raise ValueError("weight coefficients must be non-negative")

    def label(self) -> str:
        def fmt(a: float) -> str:
            return str(int(a)) if float(a).is_integer() else f"{a:g}"
        return fmt(self.a1) + fmt(self.a2) + fmt(self.a3)


@dataclass(frozen=True)
class Orbit:
    source: Weight | None
    vectors: tuple[Quaternion, ...]
    stabilizer_order: int

    def __len__(self) -> int:
        return len(self.vectors)


def weight_vector(w: Weight) -> Quaternion:
    """Pure quaternion carrying the highest weight for the diagram."""
    if w.diagram == "A3":
        alpha = 0.5 * (w.a1 - w.a3)
        beta = 0.5 * (w.a1 + w.a3)
        gamma = 0.5 * (w.a1 + 2.0 * w.a2 + w.a3)
        return pure(alpha, beta, gamma)
    if w.diagram == "B3":
        gamma = w.a3 * SQRT2_INV
        beta = w.a2 + gamma
        alpha = w.a1 + beta
        return pure(alpha, beta, gamma)
    return w.a1 * H3_W1 + w.a2 * H3_W2 + w.a3 * H3_W3


def orbit(group: WeylGroup, v: Quaternion, source: Weight | None = None) -> Orbit:
    """Deduplicated image set {g(v)} with its stabilizer order recorded."""
    images: dict[tuple, Quaternion] = {}
    for g in group.elements:
        w = apply(g, v)
        images.setdefault(w.key(), w)
    vectors = tuple(sorted(images.values(), key=Quaternion.key))
    if v.norm() == 0.0:
        stab = len(group.elements)
    else:
        stab = stabilizer_order(group, v)
    return Orbit(source=source, vectors=vectors, stabilizer_order=stab)


# name -> (diagram, weight coefficients, orbit size)
SOLIDS: dict[str, tuple[str, tuple[int, int, int], int]] = {
    "tetrahedron": ("A3", (1, 0, 0), 4),
    "dual-tetrahedron": ("A3", (0, 0, 1), 4),
    "truncated-tetrahedron": ("A3", (1, 1, 0), 12),
    "octahedron": ("B3", (1, 0, 0), 6),
    "cube": ("B3", (0, 0, 1), 8),
    "cuboctahedron": ("B3", (0, 1, 0), 12),
    "truncated-octahedron": ("B3", (1, 1, 0), 24),
    "truncated-cube": ("B3", (0, 1, 1), 24),
    "small-rhombicuboctahedron": ("B3", (1, 0, 1), 24),
    "great-rhombicuboctahedron": ("B3", (1, 1, 1), 48),
    "dodecahedron": ("H3", (1, 0, 0), 20),
    "icosahedron": ("H3", (0, 0, 1), 12),
    "icosidodecahedron": ("H3", (0, 1, 0), 30),
    "truncated-dodecahedron": ("H3", (1, 1, 0), 60),
    "truncated-icosahedron": ("H3", (0, 1, 1), 60),
    "small-rhombicosidodecahedron": ("H3", (1, 0, 1), 60),
    "great-rhombicosidodecahedron": ("H3", (1, 1, 1), 120),
}

PLATONIC = ("tetrahedron", "octahedron", "cube", "dodecahedron", "icosahedron")

ARCHIMEDEAN = (
    "truncated-tetrahedron",
    "cuboctahedron",
    "truncated-octahedron",
    "truncated-cube",
    "small-rhombicuboctahedron",
    "great-rhombicuboctahedron",
    "icosidodecahedron",
    "truncated-dodecahedron",
    "truncated-icosahedron",
    "small-rhombicosidodecahedron",
    "great-rhombicosidodecahedron",
)


@lru_cache(maxsize=None)
def named_solid(name: str) -> tuple[Weight, Orbit]:
    """Weight and vertex orbit for a registry solid."""
    if name not in SOLIDS:
        raise UnknownSolidError(name, tuple(SOLIDS))
    diagram, coeffs, size = SOLIDS[name]
    w = Weight(diagram, *coeffs)
    orb = orbit(weyl_group(diagram), weight_vector(w), source=w)
    if len(orb) != size:
        raise RuntimeError(f"orbit for {name} has {len(orb)} vectors, expected {size}")
    return w, orb


FUNDAMENTAL_LABELS = ("100", "010", "001")


@lru_cache(maxsize=None)
def fundamental_orbits(diagram: str) -> dict[str, Orbit]:
    """Orbits of the three fundamental weights, keyed '100' / '010' / '001'."""
    group = weyl_group(diagram)
    out = {}
    for label in FUNDAMENTAL_LABELS:
        coeffs = tuple(int(c) for c in label)
        w = Weight(diagram, *coeffs)
        out[label] = orbit(group, weight_vector(w), source=w)
    return out
