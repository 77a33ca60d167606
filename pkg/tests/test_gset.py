import numpy as np
import pytest

from uhfk.errors import HomomorphismError, NotInGroup
from uhfk.gset import GSet, build_gset, class_orbit_counts, cyclic_orbit_count


def test_sizes(groups):
    S3 = groups["S3"]
    assert build_gset(S3, "regular").size == 6
    assert build_gset(S3, "trivial 2").size == 2
    assert build_gset(S3, "coset {(01)}").size == 3
    assert build_gset(S3, "union regular (trivial 1)").size == 7
    assert build_gset(groups["A4"], "coset {(012)}").size == 4
    assert build_gset(groups["D4"], "coset {(13)}").size == 4


def test_orbit_counts_s3(groups):
    S3 = groups["S3"]
    sizes = [c.size for c in S3.classes]
    assert sorted(zip(sizes, class_orbit_counts(build_gset(S3, "regular")))) == [(1, 6), (2, 2), (3, 3)]
    assert sorted(zip(sizes, class_orbit_counts(build_gset(S3, "coset {(01)}")))) == [(1, 3), (2, 1), (3, 2)]


def test_images_are_homomorphism(groups):
    G = groups["A4"]
    Z = build_gset(G, "coset {(012)}")
    for a in G.elements[:5]:
        for b in G.elements:
            assert np.array_equal(Z.image(G.compose(a, b)), Z.image(a)[Z.image(b)])


def test_regular_is_transitive_and_free(groups):
    G = groups["D4"]
    Z = build_gset(G, "regular")
    assert len(set(Z.orbits().tolist())) == 1
    assert all(Z.fixed_points(g) == 0 for g in G.elements[1:])


def test_cyclic_orbit_count_checks_membership(groups):
    Z = build_gset(groups["A4"], "trivial 3")
    assert cyclic_orbit_count(Z, (1, 2, 0, 3)) == 3
    with pytest.raises(NotInGroup):
        cyclic_orbit_count(Z, (1, 0, 2, 3))


def test_bad_action_rejected(groups):
    S3 = groups["S3"]
    # send the transposition to a 3-cycle: not a homomorphism
    with pytest.raises(HomomorphismError):
        GSet(S3, 3, [[1, 2, 0], [1, 2, 0]])
    with pytest.raises(HomomorphismError):
        GSet(S3, 2, [[0, 0], [0, 1]])


def test_coset_needs_subgroup_elements(groups):
    with pytest.raises(NotInGroup):
        build_gset(groups["A4"], "coset {(01)}")


def test_empty_gset(groups):
    Z = build_gset(groups["S3"], "trivial 0")
    assert Z.size == 0
    assert class_orbit_counts(Z) == [0, 0, 0]
