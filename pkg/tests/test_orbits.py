import numpy as np
import pytest

from weylsolids.quat import SIGMA, SQRT2_INV, TAU, Quaternion, pure
from weylsolids.groups import weyl_group
from weylsolids.orbits import (ARCHIMEDEAN, PLATONIC, SOLIDS,
                               UnknownSolidError, Weight, fundamental_orbits,
                               named_solid, orbit, weight_vector)


def vecset(quats):
    return {q.key() for q in quats}


def sign_patterns(base, even_only=False):
    """All sign choices of the nonzero components of `base` (optionally an
    even number of minus signs only)."""
    out = []
    nz = [i for i, c in enumerate(base) if c != 0]
    for bits in range(2 ** len(nz)):
        signs = [(-1) ** (bits >> k & 1) for k in range(len(nz))]
        if even_only and signs.count(-1) % 2 == 1:
            continue
        coords = list(base)
        for k, i in enumerate(nz):
            coords[i] = signs[k] * base[i]
        out.append(pure(*coords))
    return out


def test_weight_vector_a3():
    assert weight_vector(Weight("A3", 1, 1, 0)).approx_eq(pure(0.5, 0.5, 1.5), 1e-15)
    assert weight_vector(Weight("A3", 1, 0, 0)).approx_eq(pure(0.5, 0.5, 0.5), 1e-15)
    assert weight_vector(Weight("A3", 0, 0, 1)).approx_eq(pure(-0.5, 0.5, 0.5), 1e-15)


def test_weight_vector_b3():
    assert weight_vector(Weight("B3", 0, 1, 0)).approx_eq(pure(1, 1, 0), 1e-15)
    assert weight_vector(Weight("B3", 1, 0, 0)).approx_eq(pure(1, 0, 0), 1e-15)
    h = SQRT2_INV
    assert weight_vector(Weight("B3", 1, 1, 1)).approx_eq(pure(2 + h, 1 + h, h), 1e-15)


def test_weight_vector_h3():
    v = weight_vector(Weight("H3", 1, 0, 1))
    assert v.approx_eq(pure(-SIGMA / 2, -SIGMA / 2, TAU ** 2 / 2), 1e-12)
    assert weight_vector(Weight("H3", 0, 1, 0)).approx_eq(pure(0, 0, 1), 1e-15)


def test_weight_validation():
    with pytest.raises(ValueError):
        Weight("A3", -1, 0, 0)
    with pytest.raises(ValueError):
        Weight("Z9", 1, 0, 0)


def test_tetrahedron_orbit_values():
    _, orb = named_solid("tetrahedron")
    expected = {pure(0.5, 0.5, 0.5), pure(0.5, -0.5, -0.5),
                pure(-0.5, -0.5, 0.5), pure(-0.5, 0.5, -0.5)}
    assert vecset(orb.vectors) == vecset(expected)


def test_cube_orbit_values():
    _, orb = named_solid("cube")
    h = SQRT2_INV
    assert vecset(orb.vectors) == vecset(sign_patterns((h, h, h)))


def test_icosidodecahedron_contains_axes():
    _, orb = named_solid("icosidodecahedron")
    assert len(orb) == 30
    keys = vecset(orb.vectors)
    for v in (pure(1, 0, 0), pure(-1, 0, 0), pure(0, 1, 0), pure(0, -1, 0),
              pure(0, 0, 1), pure(0, 0, -1)):
        assert v.key() in keys


def test_zero_orbit():
    W = weyl_group("B3")
    orb = orbit(W, pure(0, 0, 0))
    assert len(orb) == 1
    assert orb.stabilizer_order == len(W)


@pytest.mark.parametrize("name", list(SOLIDS))
def test_named_solid_sizes(name):
    _, orb = named_solid(name)
    assert len(orb) == SOLIDS[name][2]
    group = weyl_group(SOLIDS[name][0])
    assert len(orb) * orb.stabilizer_order == len(group)


@pytest.mark.parametrize("name", list(SOLIDS))
def test_orbit_norm_constancy(name):
    _, orb = named_solid(name)
    norms = [v.norm() for v in orb.vectors]
    assert max(norms) - min(norms) <= 1e-9


def test_unknown_name():
    with pytest.raises(UnknownSolidError) as err:
        named_solid("hexahedron")
    assert "cube" in str(err.value)


def test_a3_dynkin_mirror():
    W = weyl_group("A3")
    plus = orbit(W, weight_vector(Weight("A3", 1, 1, 0)))
    minus = orbit(W, weight_vector(Weight("A3", 0, 1, 1)))
    assert vecset(minus.vectors) == vecset(-v for v in plus.vectors)


def test_truncated_tetrahedron_printed_set():
    _, orb = named_solid("truncated-tetrahedron")
    expected = []
    for base in ((0.5, 0.5, 1.5), (0.5, 1.5, 0.5), (1.5, 0.5, 0.5)):
        expected.extend(sign_patterns(base, even_only=True))
    assert len(expected) == 12
    assert vecset(orb.vectors) == vecset(expected)


def test_dodecahedron_printed_set():
    _, orb = named_solid("dodecahedron")
    s, t = SIGMA / 2, TAU / 2
    expected = (sign_patterns((s, 0, t)) + sign_patterns((t, s, 0))
                + sign_patterns((0, t, s)) + sign_patterns((0.5, 0.5, 0.5)))
    assert len(expected) == 20
    assert vecset(orb.vectors) == vecset(expected)


def test_icosahedron_printed_set():
    _, orb = named_solid("icosahedron")
    s = SIGMA / 2
    expected = (sign_patterns((0.5, 0, s)) + sign_patterns((s, 0.5, 0))
                + sign_patterns((0, s, 0.5)))
    assert len(expected) == 12
    assert vecset(orb.vectors) == vecset(expected)


def test_generic_weight_orbit_sizes():
    # generic positive weights have trivial stabilizer
    rng = np.random.default_rng(17)
    for diagram, order in (("A3", 24), ("B3", 48), ("H3", 120)):
        a = rng.uniform(0.2, 1.5, size=3)
        orb = orbit(weyl_group(diagram),
                    weight_vector(Weight(diagram, *a)))
        assert len(orb) == order
        assert orb.stabilizer_order == 1


def test_fundamental_orbit_sizes():
    assert {k: len(v) for k, v in fundamental_orbits("A3").items()} == \
        {"100": 4, "010": 6, "001": 4}
    assert {k: len(v) for k, v in fundamental_orbits("B3").items()} == \
        {"100": 6, "010": 12, "001": 8}
    assert {k: len(v) for k, v in fundamental_orbits("H3").items()} == \
        {"100": 20, "010": 30, "001": 12}


def test_registry_lists():
    assert len(SOLIDS) == 17
    assert len(PLATONIC) == 5
    assert len(ARCHIMEDEAN) == 11
