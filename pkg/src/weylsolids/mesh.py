"""Indexed convex meshes (vertices, edges, faces) and their symmetry partitions.

Faces are found one of two ways:

* supporting-plane grouping: for every candidate normal direction, the
  vertices maximizing the dot product form a face.  This is the primary
  strategy; the callers supply candidate directions (fundamental-orbit
  vectors for the uniform solids, dual-vertex directions for the Catalans).
* convex hull (scipy) with coplanar triangle patches merged into polygons.
  Used as the fallback and as the independent oracle.

Either way the result is validated: faces planar, every edge shared by
exactly two faces, all vertices extreme, V - E + F == 2, outward-oriented
counter-clockwise cycles.  Edge lists are derived from the face cycles, never
from nearest-neighbor distances (Catalan solids have unequal edge lengths).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .quat import EPS_PURE, Quaternion, apply, pure
from .groups import WeylGroup

PLANE_TOL = 1e-8   # relative to circumradius: planarity, convexity, face merging


class MeshError(RuntimeError):
    """Degenerate input or a face structure that fails the polyhedron checks."""


class SymmetryError(RuntimeError):
    """The mesh is not invariant under the group it was paired with."""


@dataclass(frozen=True)
class Polyhedron:
    vertices: tuple[Quaternion, ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]
    face_normals: tuple[Quaternion, ...]

    @property
    def counts(self) -> tuple[int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.faces))

    def coords(self) -> np.ndarray:
        return np.array([v.vec() for v in self.vertices], dtype=float)

    def edge_length(self, edge: tuple[int, int]) -> float:
        return (self.vertices[edge[0]] - self.vertices[edge[1]]).norm()

    def face_centroid(self, face_index: int) -> Quaternion:
        face = self.faces[face_index]
        c = pure(0.0, 0.0, 0.0)
        for i in face:
            c = c + self.vertices[i]
        return c.scale(1.0 / len(face))


def euler_characteristic(p: Polyhedron) -> int:
    return len(p.vertices) - len(p.edges) + len(p.faces)


def build_mesh(points: Iterable[Quaternion],
               face_directions: Sequence[Quaternion] | None = None) -> Polyhedron:
    """Convex polyhedron over a set of pure quaternions in convex position.

    With `face_directions` the supporting-plane strategy runs first and the
    hull is only the fallback; without them the hull is used directly.
    """
    verts = list(points)
    if len(verts) < 4:
        raise MeshError(f"need at least 4 points, got {len(verts)}")
    for v in verts:
        if not v.is_pure():
            raise MeshError(f"points must be pure quaternions, got {v!r}")
    keys = [v.key() for v in verts]
    if len(set(keys)) != len(keys):
        raise MeshError("duplicate points in input")
    order = sorted(range(len(verts)), key=lambda i: keys[i][1:])
    verts = [verts[i] for i in order]
    arr = np.array([v.vec() for v in verts], dtype=float)

    if face_directions is not None:
        try:
            facesets = _support_facesets(arr, face_directions)
            return _finalize(verts, arr, facesets)
        except MeshError:
            pass
    facesets = _hull_facesets(arr)
    return _finalize(verts, arr, facesets)


def _support_facesets(arr: np.ndarray, directions: Sequence[Quaternion]) -> list[frozenset]:
    scale = max(1.0, float(np.linalg.norm(arr, axis=1).max()))
    found: dict[frozenset, None] = {}
    for d in directions:
        n = np.array(d.vec(), dtype=float)
        ln = np.linalg.norm(n)
        if ln == 0.0:
            continue
        dots = arr @ (n / ln)
        top = dots.max()
        idx = np.nonzero(dots >= top - PLANE_TOL * scale)[0]
        if len(idx) >= 3:
            found.setdefault(frozenset(int(i) for i in idx))
    if not found:
        raise MeshError("no supporting plane held three or more points")
    return list(found)


def _hull_facesets(arr: np.ndarray) -> list[frozenset]:
    try:
        hull = ConvexHull(arr)
    except QhullError as exc:
        raise MeshError(f"degenerate input (coplanar or collinear): {exc}") from exc
    if len(hull.vertices) != len(arr):
        raise MeshError("interior points detected: input is not in convex position")
    scale = max(1.0, float(np.linalg.norm(arr, axis=1).max()))
    groups: list[tuple[np.ndarray, float, set[int]]] = []
    for simplex, eq in zip(hull.simplices, hull.equations):
        n, off = eq[:3], eq[3]
        for gn, goff, members in groups:
            if np.abs(gn - n).max() <= PLANE_TOL and abs(goff - off) <= PLANE_TOL * scale:
                members.update(int(i) for i in simplex)
                break
        else:
            groups.append((n, off, set(int(i) for i in simplex)))
    return [frozenset(members) for _, _, members in groups]


def _face_plane(arr: np.ndarray, idx: list[int], center: np.ndarray):
    pts = arr[idx]
    c = pts.mean(axis=0)
    # least-squares plane normal, oriented away from the body center
    _, _, vt = np.linalg.svd(pts - c)
    n = vt[2]
    if np.dot(n, c - center) < 0.0:
        n = -n
    return n, float((pts @ n).mean())


def _order_cycle(arr: np.ndarray, idx: list[int], n: np.ndarray) -> tuple[int, ...]:
    pts = arr[idx]
    c = pts.mean(axis=0)
    k = int(np.argmin(np.abs(n)))
    axis = np.zeros(3)
    axis[k] = 1.0
    u = axis - n * n[k]
    u /= np.linalg.norm(u)
    v = np.cross(n, u)
    rel = pts - c
    ang = np.arctan2(rel @ v, rel @ u)
    ordered = [idx[i] for i in np.argsort(ang)]
    start = ordered.index(min(ordered))
    return tuple(ordered[start:] + ordered[:start])


def _finalize(verts: list[Quaternion], arr: np.ndarray,
              facesets: list[frozenset]) -> Polyhedron:
    nverts = len(verts)
    center = arr.mean(axis=0)
    radius = max(1.0, float(np.linalg.norm(arr - center, axis=1).max()))
    tol = PLANE_TOL * radius

    records = []
    for fs in facesets:
        idx = sorted(fs)
        n, h = _face_plane(arr, idx, center)
        if float(np.abs(arr[idx] @ n - h).max()) > tol:
            raise MeshError("face is not planar within tolerance")
        if float((arr @ n - h).max()) > tol:
            raise MeshError("face plane does not support the whole point set")
        cycle = _order_cycle(arr, idx, n)
        records.append((cycle, n))
    records.sort(key=lambda rec: rec[0])

    faces = tuple(rec[0] for rec in records)
    normals = tuple(pure(*rec[1]) for rec in records)

    edge_count: dict[tuple[int, int], int] = {}
    for cycle in faces:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            if a == b:
                raise MeshError("degenerate face cycle")
            e = (a, b) if a < b else (b, a)
            edge_count[e] = edge_count.get(e, 0) + 1
    bad = [e for e, cnt in edge_count.items() if cnt != 2]
    if bad:
        raise MeshError(f"{len(bad)} edges are not shared by exactly 2 faces")

    covered = set(i for cycle in faces for i in cycle)
    if covered != set(range(nverts)):
        raise MeshError("some vertices belong to no face")

    edges = tuple(sorted(edge_count))
    if nverts - len(edges) + len(faces) != 2:
        raise MeshError(
            f"Euler check failed: V={nverts} E={len(edges)} F={len(faces)}")
    return Polyhedron(vertices=tuple(verts), edges=edges, faces=faces,
                      face_normals=normals)


def _vertex_permutations(group: WeylGroup, p: Polyhedron) -> list[tuple[int, ...]]:
    index = {v.key(): i for i, v in enumerate(p.vertices)}
    perms = []
    for g in group.elements:
        row = []
        for v in p.vertices:
            j = index.get(apply(g, v).key())
            if j is None:
                raise SymmetryError(
                    f"vertex set is not invariant under W({group.diagram})")
            row.append(j)
        perms.append(tuple(row))
    return perms


def _partition(items: list[frozenset], perms: list[tuple[int, ...]],
               kind: str) -> list[list[int]]:
    lookup = {fs: i for i, fs in enumerate(items)}
    unseen = set(range(len(items)))
    classes = []
    while unseen:
        start = min(unseen)
        component = {start}
        queue = [start]
        while queue:
            i = queue.pop()
            for perm in perms:
                image = frozenset(perm[v] for v in items[i])
                j = lookup.get(image)
                if j is None:
                    raise SymmetryError(f"group element does not permute the {kind}s")
                if j not in component:
                    component.add(j)
                    queue.append(j)
        unseen -= component
        classes.append(sorted(component))
    return classes


def face_classes(group: WeylGroup, p: Polyhedron) -> list[tuple[int, int]]:
    """Group-orbit partition of the faces as (class size, polygon side count)."""
    perms = _vertex_permutations(group, p)
    items = [frozenset(f) for f in p.faces]
    classes = _partition(items, perms, "face")
    out = [(len(cls), len(p.faces[cls[0]])) for cls in classes]
    return sorted(out, key=lambda t: (-t[0], t[1]))


def edge_classes(group: WeylGroup, p: Polyhedron) -> list[tuple[int, float]]:
    """Group-orbit partition of the edges as (class size, edge length)."""
    perms = _vertex_permutations(group, p)
    items = [frozenset(e) for e in p.edges]
    classes = _partition(items, perms, "edge")
    out = [(len(cls), p.edge_length(p.edges[cls[0]])) for cls in classes]
    return sorted(out, key=lambda t: (-t[0], t[1]))


def vertex_classes(group: WeylGroup, p: Polyhedron) -> list[int]:
    """Sizes of the group orbits on the vertices, ascending."""
    perms = _vertex_permutations(group, p)
    items = [frozenset((i,)) for i in range(len(p.vertices))]
    classes = _partition(items, perms, "vertex")
    return sorted(len(cls) for cls in classes)
