import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regionflip.codec import parse_pd
from regionflip.diagram import (
    BLACK,
    WHITE,
    build_diagram,
    checkerboard,
    crossing_sign,
    flip_crossings,
    is_proper,
    linking_matrix,
    mirror_diagram,
    smooth_crossing,
)
from regionflip.errors import NonPlanarError, SelfCrossingError, SplitError
from regionflip.generate import random_diagram

from conftest import CURL_PD

# a valid 4-crossing code with two slots of one crossing swapped; the
# rotation system closes up with the wrong face count
NONPLANAR_PD = "X(2,1,3,4) X(5,6,7,3) X(4,7,8,1) X(6,5,2,8)"
SPLIT_PD = "X(1,4,2,3) X(3,2,4,1) X(5,8,6,7) X(7,6,8,5)"


class TestBuild:
    def test_hopf_counts(self, hopf):
        assert hopf.crossing_count == 2
        assert hopf.component_count == 2
        assert len(hopf.faces) == 4

    def test_trefoil_faces(self, trefoil):
        assert len(trefoil.faces) == 5

    def test_empty_code_is_unknot(self):
        d = build_diagram(parse_pd(""))
        assert d.crossing_count == 0
        assert d.component_count == 1
        assert len(d.faces) == 2

    def test_nonplanar_rejected(self):
        with pytest.raises(NonPlanarError):
            build_diagram(parse_pd(NONPLANAR_PD))

    def test_split_rejected(self):
        with pytest.raises(SplitError):
            build_diagram(parse_pd(SPLIT_PD))

    def test_quadrant_partition(self, catalog):
        for d in catalog.values():
            corners = [corner for f in d.faces for corner in f.corners]
            assert len(corners) == 4 * d.crossing_count
            assert len(set(corners)) == len(corners)

    def test_boundaries_nonempty(self, catalog):
        for d in catalog.values():
            if d.crossing_count:
                assert all(f.boundary_crossings for f in d.faces)


class TestSigns:
    def test_positive_trefoil_all_positive(self, trefoil):
        # writhe oracle: the braid word behind the catalog entry has three
        # positive letters
        assert [crossing_sign(trefoil, k) for k in range(3)] == [1, 1, 1]
        assert trefoil.writhe() == 3

    def test_mirror_negates_every_sign(self, catalog):
        for d in catalog.values():
            m = mirror_diagram(d)
            for k in range(d.crossing_count):
                assert crossing_sign(m, k) == -crossing_sign(d, k)

    def test_curl_sign_in_pm_one(self):
        d = build_diagram(parse_pd(CURL_PD))
        assert crossing_sign(d, 0) in (1, -1)
        assert crossing_sign(mirror_diagram(d), 0) == -crossing_sign(d, 0)

    def test_reflected_curl_code_builds_negative(self):
        d = build_diagram(parse_pd(CURL_PD))
        m = build_diagram(parse_pd("X(1,1,2,2)"))
        assert crossing_sign(m, 0) == -crossing_sign(d, 0)
        assert m == mirror_diagram(d)

    def test_mirror_is_an_involution(self, catalog):
        for d in catalog.values():
            assert mirror_diagram(mirror_diagram(d)) == d

    def test_mirror_entry_matches_mirror_operation(self, catalog, trefoil):
        m = catalog["trefoil_mirror"]
        assert m.crossings == mirror_diagram(trefoil).crossings


class TestLinking:
    def test_knot_has_trivial_matrix(self, trefoil):
        assert linking_matrix(trefoil).values == ((0,),)

    def test_hopf_linking_is_odd_unit(self, hopf):
        lk = linking_matrix(hopf)
        assert abs(lk.value(0, 1)) == 1
        assert lk.value(0, 1) == lk.value(1, 0)

    def test_borromean_all_zero(self, catalog):
        lk = linking_matrix(catalog["borromean"])
        assert all(v == 0 for row in lk.values for v in row)

    def test_linking_against_underpass_recount(self, catalog):
        # independent recount: walking component i, the signed crossings
        # where it passes under component j already sum to lk(i, j)
        for d in catalog.values():
            n = d.component_count
            for i in range(n):
                under_tally = [0] * n
                for arc in d.components[i]:
                    k, slot = d.head_end[arc]
                    if slot == 0:  # this pass goes under
                        j = d.component_of_arc[d.crossings[k].over_in]
                        if j != i:
                            under_tally[j] += d.sign(k)
                for j in range(n):
                    if j != i:
                        assert under_tally[j] == d.linking.value(i, j)

    def test_properness(self, catalog):
        assert is_proper(catalog["trefoil"])
        assert is_proper(catalog["borromean"])
        assert is_proper(catalog["torus_3_3"])
        assert not is_proper(catalog["hopf"])
        assert not is_proper(catalog["torus_2_6"])


class TestFlip:
    def test_empty_selection_is_identity(self, hopf):
        assert flip_crossings(hopf, frozenset()) == hopf

    def test_involution(self, catalog):
        for d in catalog.values():
            if not d.crossing_count:
                continue
            sel = {0}
            assert flip_crossings(flip_crossings(d, sel), sel) == d

    def test_composition_is_symmetric_difference(self, figure_eight):
        d = figure_eight
        p, q = {0, 1}, {1, 2}
        lhs = flip_crossings(flip_crossings(d, p), q)
        assert lhs == flip_crossings(d, p ^ q)

    def test_single_hopf_flip_changes_linking_parity(self, hopf):
        flipped = flip_crossings(hopf, {0})
        assert flipped.linking.value(0, 1) % 2 == 0
        assert hopf.linking.value(0, 1) % 2 == 1

    def test_map_unchanged(self, catalog):
        for d in catalog.values():
            if not d.crossing_count:
                continue
            flipped = flip_crossings(d, set(range(d.crossing_count)))
            assert [f.boundary_crossings for f in flipped.faces] == \
                [f.boundary_crossings for f in d.faces]

    def test_out_of_range_rejected(self, hopf):
        with pytest.raises(ValueError):
            flip_crossings(hopf, {7})


class TestSmoothing:
    def test_hopf_smoothing_gives_curl(self, hopf):
        for k in (0, 1):
            d = smooth_crossing(hopf, k)
            assert d.crossing_count == 1
            assert d.component_count == 1
            assert len(d.faces) == 3

    def test_component_count_drops_by_one(self, catalog):
        for d in catalog.values():
            for k, cr in enumerate(d.crossings):
                if d.component_of_arc[cr.under_in] != d.component_of_arc[cr.over_in]:
                    assert smooth_crossing(d, k).component_count == d.component_count - 1

    def test_self_crossing_refused(self, trefoil):
        with pytest.raises(SelfCrossingError):
            smooth_crossing(trefoil, 0)

    def test_planarity_preserved(self, catalog):
        for d in catalog.values():
            for k, cr in enumerate(d.crossings):
                if d.component_of_arc[cr.under_in] != d.component_of_arc[cr.over_in]:
                    out = smooth_crossing(d, k)
                    assert len(out.faces) == out.crossing_count + 2


class TestCheckerboard:
    def test_adjacent_white_gives_global_swap(self, trefoil):
        base = checkerboard(trefoil, white_face=0)
        neighbor = next(
            f.id for f in trefoil.faces
            if f.id != 0 and base[f.id] == BLACK
        )
        swapped = checkerboard(trefoil, white_face=neighbor)
        assert all(a != b for a, b in zip(base, swapped))

    def test_trefoil_colors_split_two_three(self, trefoil):
        cols = checkerboard(trefoil, white_face=0)
        assert sorted((cols.count(BLACK), cols.count(WHITE))) == [2, 3]

    def test_each_crossing_has_opposite_quadrant_pairs(self, catalog):
        for d in catalog.values():
            cols = checkerboard(d, white_face=0) if d.faces else ()
            for k in range(d.crossing_count):
                quad_colors = [cols[d.corner_face[(k, q)]] for q in range(4)]
                assert quad_colors[0] == quad_colors[2] != quad_colors[1] == quad_colors[3]


class TestRandomDiagrams:
    @given(st.integers(min_value=0, max_value=2**32 - 1))
    @settings(max_examples=80, deadline=None)
    def test_face_count_law(self, seed):
        d = random_diagram(random.Random(seed))
        assert len(d.faces) == d.crossing_count + 2

    @given(st.integers(min_value=0, max_value=2**32 - 1))
    @settings(max_examples=40, deadline=None)
    def test_rebuild_from_code_preserves_counts(self, seed):
        d = random_diagram(random.Random(seed))
        rebuilt = build_diagram(d.to_code())
        assert rebuilt.crossing_count == d.crossing_count
        assert rebuilt.component_count == d.component_count
        assert len(rebuilt.faces) == len(d.faces)
