"""Tests for group actions, equivariant maps and degrees."""

import pytest

from forge import complexes as cx
from forge import equivariant as eq


def test_klein_actions_are_homomorphisms():
    actK, actL = eq.klein_actions()
    assert actK.check_homomorphism()
    assert actL.check_homomorphism()
    assert sorted(actK.perms) == ["a", "b", "c", "e"]


def test_klein_action_is_simplicial():
    actK, actL = eq.klein_actions()
    for name in actK.elements():
        for f in actK.complex.facets:
            assert actK.complex.has_face(actK.apply(name, f))


def test_klein_composition_table():
    actK, _ = eq.klein_actions()
    # the three involutions compose pairwise into the third
    assert actK.element_name(actK.compose("a", "b")) == "c"
    assert actK.element_name(actK.compose("b", "c")) == "a"
    assert actK.element_name(actK.compose("a", "a")) == "e"


def test_board_action_is_free_on_vertices():
    actK, actL = eq.klein_actions()
    for v in actK.complex.ground_set:
        assert actK.vertex_stabilizer(v) == ["e"]
    # the tetra action is free on vertices as well
    for v in actL.complex.ground_set:
        assert actL.vertex_stabilizer(v) == ["e"]
    assert len(actK.vertex_orbits()) == 2
    assert len(actL.vertex_orbits()) == 1


def test_fixed_subcomplex_of_involution_is_trivial():
    actK, _ = eq.klein_actions()
    for g in ("a", "b", "c"):
        assert eq.fixed_subcomplex(actK, [g]).f_vector() == [1]


def test_octahedral_cube_model_is_a_sphere():
    from forge import homology as hm

    cube, act = eq.octahedral_cube_model()
    assert cube.f_vector() == [1, 8, 18, 12]
    assert act.check_homomorphism()
    assert hm.homology(cube).betti == [0, 0, 1]
    assert hm.pseudomanifold_check(cube).is_closed_oriented


def test_octahedral_sphere_six_vertices():
    from forge import homology as hm

    octa, act = eq.octahedral_sphere()
    assert octa.f_vector() == [1, 6, 12, 8]
    assert act.check_homomorphism()
    assert hm.homology(octa).betti == [0, 0, 1]


def test_equivariant_iso_board_to_cube():
    actK, _ = eq.klein_actions()
    cube, cube_act = eq.octahedral_cube_model()
    iso = eq.equivariant_iso_search(actK.complex, cube, actK, cube_act)
    assert iso is not None
    assert iso.is_simplicial()
    assert iso.is_equivariant(actK, cube_act)
    # a bijection carrying facets onto facets
    vm = iso.vertex_map
    assert sorted(vm.values()) == sorted(cube.ground_set)
    assert {iso.image(f) for f in actK.complex.facets} == set(cube.facets)
    assert abs(eq.degree(iso)) == 1


def test_iso_search_fails_on_mismatched_size():
    actK, actL = eq.klein_actions()
    assert (
        eq.equivariant_iso_search(
            actK.complex, actL.complex, actK, actL
        )
        is None
    )


def test_degree_of_identity_and_antipode():
    octa, act = eq.octahedral_sphere()
    ident = eq.SimplicialMap(octa, octa, {v: v for v in octa.ground_set})
    assert eq.degree(ident) == 1
    # the antipodal map on S^2 has degree -1
    anti = eq.SimplicialMap(
        octa, octa, {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4}
    )
    assert eq.degree(anti) == -1


def test_degree_rejects_dimension_mismatch():
    octa, _ = eq.octahedral_sphere()
    tri = cx.simplex_boundary(range(3))
    with pytest.raises(ValueError):
        eq.degree(eq.SimplicialMap(octa, tri, {v: v % 3 for v in range(6)}))


def test_enumerate_level0_maps():
    actK, actL = eq.klein_actions()
    recs = eq.enumerate_equivariant_maps(
        actK.complex, actL.complex, actK, actL
    )
    # two free vertex orbits, four choices each
    assert len(recs) == 16
    degs = sorted(r.degree for r in recs)
    assert degs == [-1] * 12 + [3] * 4
    for r in recs:
        assert r.map.is_simplicial()
        assert r.map.is_equivariant(actK, actL)
        assert r.degree % 2 == 1


def test_enumerate_level1_is_empty():
    # after one barycentric subdivision of the source, the edge barycenters
    # acquire involution stabilizers with no fixed target vertex
    actK, actL = eq.klein_actions()
    recs = eq.enumerate_equivariant_maps(
        actK.complex, actL.complex, actK, actL, subdivision_level=1
    )
    assert recs == []


def test_lifted_action_is_consistent():
    actK, _ = eq.klein_actions()
    sd, lifted, table = eq.lifted_action(actK)
    assert lifted.check_homomorphism()
    # the lift of e is the identity and each lifted perm is simplicial
    for name in lifted.elements():
        for f in sd.facets:
            assert sd.has_face(lifted.apply(name, f))


def test_orbit_type_report_parity_modulus():
    actK, _ = eq.klein_actions()
    rep = eq.orbit_type_report(actK)
    assert rep.parity_modulus == 2


def test_reference_sphere_map():
    actK, actL = eq.klein_actions()
    ref = eq.reference_sphere_map()
    assert ref.is_simplicial()
    assert ref.is_equivariant(actK, actL)
    assert abs(eq.degree(ref)) == 1


def test_join_of_maps_multiplies_degrees():
    octa, _ = eq.octahedral_sphere()
    anti = eq.SimplicialMap(
        octa, octa, {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4}
    )
    j = eq.join_of_maps(anti, anti)
    # deg(f * g) = deg(f) * deg(g) for joins of sphere maps
    assert eq.degree(j) == 1
