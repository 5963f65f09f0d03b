"""Finite quaternion groups and the rank-3 Coxeter-Weyl groups built from them.

The binary tetrahedral set T (24 unit quaternions), its octahedral coset T'
(24 more) and the binary icosahedral group I (120, grown by closure from T
plus one extra icosian) supply the pair elements [p, q] / [p, q]* that realize
W(A3) ~ S4, W(B3) ~ Oh and W(H3) ~ A5 x C2 as explicit element lists.

Two pairs that induce the same 3D map (e.g. [p, pbar] and [-p, -pbar]) count
as one element: elements are canonicalized by their action on (e1, e2, e3).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .quat import (E1, E2, E3, EPS_DEDUP, ONE, SIGMA, SQRT2_INV, TAU,
                   InvalidElementError, Quaternion, apply, mul)

DIAGRAMS = ("A3", "B3", "H3")

WEYL_ORDER = {"A3": 24, "B3": 48, "H3": 120}


class GroupConstructionError(RuntimeError):
    """Closure or dedup produced the wrong number of elements."""


@dataclass(frozen=True)
class GroupElement:
    """Orthogonal transformation r -> p*r*q (or p*conj(r)*q when starred)."""

    p: Quaternion
    q: Quaternion
    starred: bool = False

    def __post_init__(self):
        if not (self.p.is_unit() and self.q.is_unit()):
            raise InvalidElementError("GroupElement requires unit p and q")

    def apply(self, r: Quaternion) -> Quaternion:
        return apply(self, r)


@dataclass(frozen=True)
class WeylGroup:
    diagram: str
    elements: tuple[GroupElement, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def action_key(g: GroupElement, ndigits: int = 9):
    """Images of the basis (e1, e2, e3), rounded: the identity of the 3D map."""
    return (apply(g, E1).key(ndigits), apply(g, E2).key(ndigits),
            apply(g, E3).key(ndigits))


def action_matrix(g: GroupElement) -> tuple[tuple[float, float, float], ...]:
    """Column-major 3x3 matrix of the action: columns are images of e1, e2, e3."""
    cols = [apply(g, b).vec() for b in (E1, E2, E3)]
    return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))


@lru_cache(maxsize=None)
def binary_tetrahedral() -> tuple[Quaternion, ...]:
    """The 24 unit quaternions {+-1, +-e_i, (+-1 +-e1 +-e2 +-e3)/2}."""
    out = [ONE, -ONE, E1, -E1, E2, -E2, E3, -E3]
    for signs in product((0.5, -0.5), repeat=4):
        out.append(Quaternion(*signs))
    return tuple(out)


@lru_cache(maxsize=None)
def t_prime() -> tuple[Quaternion, ...]:
    """The coset of 24 quaternions completing T to the binary octahedral group."""
    h = SQRT2_INV
    patterns = (
        lambda a, b: Quaternion(a, b, 0.0, 0.0),   # (+-1 +-e1)/sqrt2
        lambda a, b: Quaternion(0.0, 0.0, a, b),   # (+-e2 +-e3)/sqrt2
        lambda a, b: Quaternion(a, 0.0, b, 0.0),   # (+-1 +-e2)/sqrt2
        lambda a, b: Quaternion(0.0, b, 0.0, a),   # (+-e3 +-e1)/sqrt2
        lambda a, b: Quaternion(a, 0.0, 0.0, b),   # (+-1 +-e3)/sqrt2
        lambda a, b: Quaternion(0.0, a, b, 0.0),   # (+-e1 +-e2)/sqrt2
    )
    out = []
    for make in patterns:
        for sa, sb in product((h, -h), repeat=2):
            out.append(make(sa, sb))
    return tuple(out)


@lru_cache(maxsize=None)
def binary_icosahedral() -> tuple[Quaternion, ...]:
    """The 120-element group grown by multiplicative closure from T and one icosian.

    The seed (tau + sigma*e1 + e2)/2 is a unit quaternion outside T, and T is
    maximal in the binary icosahedral group, so the closure must fill it out.
    A closure drifting past 120 elements means the seed or the product is
    broken, and is reported instead of looping.
    """
    seed = Quaternion(TAU / 2.0, SIGMA / 2.0, 0.5, 0.0)
    elems: dict[tuple, Quaternion] = {}
    for q in binary_tetrahedral() + (seed,):
        elems[q.key()] = q
    frontier = list(elems.values())
    while frontier:
        new: list[Quaternion] = []
        for a in frontier:
            for b in list(elems.values()):
                for prod in (mul(a, b), mul(b, a)):
                    k = prod.key()
                    if k not in elems:
                        elems[k] = prod
                        new.append(prod)
        if len(elems) > 200:
            raise GroupConstructionError(
                f"icosahedral closure exceeded 200 elements ({len(elems)})")
        frontier = new
    if len(elems) != 120:
        raise GroupConstructionError(
            f"icosahedral closure ended with {len(elems)} elements, expected 120")
    return tuple(sorted(elems.values(), key=Quaternion.key))


def _dedup_by_action(raw: list[GroupElement]) -> tuple[GroupElement, ...]:
    seen: dict[tuple, GroupElement] = {}
    for g in raw:
        k = action_key(g)
        if k not in seen:
            seen[k] = g
    return tuple(seen.values())


@lru_cache(maxsize=None)
def weyl_group(diagram: str) -> WeylGroup:
    """Element list for W(A3), W(B3) or W(H3), deduplicated by 3D action."""
    if diagram not in DIAGRAMS:
        raise ValueError(f"unknown diagram {diagram!r}; expected one of {DIAGRAMS}")
    raw: list[GroupElement] = []
    if diagram == "A3":
        raw += [GroupElement(p, p.conjugate(), False) for p in binary_tetrahedral()]
        raw += [GroupElement(t, t.conjugate(), True) for t in t_prime()]
    elif diagram == "B3":
        for starred in (False, True):
            raw += [GroupElement(p, p.conjugate(), starred) for p in binary_tetrahedral()]
            raw += [GroupElement(t, t.conjugate(), starred) for t in t_prime()]
    else:
        for starred in (False, True):
            raw += [GroupElement(p, p.conjugate(), starred) for p in binary_icosahedral()]
    elements = _dedup_by_action(raw)
    if len(elements) != WEYL_ORDER[diagram]:
        raise GroupConstructionError(
            f"W({diagram}) deduplicated to {len(elements)} actions, "
            f"expected {WEYL_ORDER[diagram]}")
    return WeylGroup(diagram, elements)


def stabilizer_order(group: WeylGroup, v: Quaternion) -> int:
    """Number of group elements fixing v (componentwise, within EPS_DEDUP)."""
    if v.norm() == 0.0:
        raise ValueError("stabilizer of the zero vector is the whole group; pass a nonzero vector")
    return sum(1 for g in group.elements if apply(g, v).approx_eq(v, EPS_DEDUP))
