import itertools
import random

import pytest

from regionflip.arf import (
    COLORING_SIGN_CONVENTION,
    arf_delta,
    arf_knot,
    arf_link,
    arf_via_regions,
    goeritz_matrix,
    knot_determinant,
    region_signs,
)
from regionflip.codec import parse_pd
from regionflip.construct import pass_tangle_center, pass_tangle_closure
from regionflip.diagram import WHITE, build_diagram, checkerboard, flip_crossings, is_proper, smooth_crossing
from regionflip.errors import MultiComponentError, NotProperError, NotUnknottingError
from regionflip.unknot import unknot_regions

from conftest import CURL_PD


class TestRegionSigns:
    def test_weights_even_on_all_catalog_faces(self, catalog):
        for name, d in catalog.items():
            for f in d.faces:
                assert region_signs(d, f.id).arf_weight % 2 == 0, (name, f.id)

    def test_pass_move_region_weight_is_two(self):
        d = pass_tangle_closure()
        assert region_signs(d, pass_tangle_center(d)).arf_weight == 2

    def test_zero_weight_when_signs_agree(self, catalog):
        for d in catalog.values():
            for f in d.faces:
                data = region_signs(d, f.id)
                if all(
                    data.orientation_signs[k] == data.coloring_signs[k]
                    for k in data.orientation_signs
                ):
                    assert data.arf_weight == 0

    def test_counts_partition_single_visits(self, catalog):
        for d in catalog.values():
            for f in d.faces:
                data = region_signs(d, f.id)
                total = (data.count_neg_pos + data.count_pos_neg
                         + data.count_pos_pos + data.count_neg_neg)
                assert total == len(f.boundary_crossings) - len(data.doubly_visited)
                assert data.arf_weight == data.count_pos_neg - data.count_neg_pos

    def test_convention_is_frozen(self):
        # recalibrating is a code change, not a runtime knob
        assert COLORING_SIGN_CONVENTION == 1

    def test_doubly_visited_crossing_detected_on_curl(self):
        d = build_diagram(parse_pd(CURL_PD))
        doubled = [f.id for f in d.faces if region_signs(d, f.id).doubly_visited]
        assert len(doubled) == 1


class TestDeterminantOracle:
    def test_known_determinants(self, catalog):
        assert knot_determinant(catalog["unknot"]) == 1
        assert knot_determinant(build_diagram(parse_pd(CURL_PD))) == 1
        assert knot_determinant(catalog["trefoil"]) == 3
        assert knot_determinant(catalog["trefoil_mirror"]) == 3
        assert knot_determinant(catalog["figure_eight"]) == 5

    def test_color_swap_and_face_choice_immaterial(self, trefoil):
        base = knot_determinant(trefoil)
        swapped = checkerboard(trefoil, white_face=0)
        whites = [f.id for f in trefoil.faces if swapped[f.id] == WHITE]
        for drop in whites:
            assert knot_determinant(trefoil, swapped, drop) == base

    def test_goeritz_matrix_is_symmetric(self, figure_eight):
        g = goeritz_matrix(figure_eight)
        assert all(g[i][j] == g[j][i] for i in range(len(g)) for j in range(len(g)))

    def test_arf_values(self, catalog):
        assert arf_knot(catalog["unknot"]) == 0
        assert arf_knot(catalog["trefoil"]) == 1
        assert arf_knot(catalog["figure_eight"]) == 1

    def test_knot_only(self, hopf):
        with pytest.raises(MultiComponentError):
            arf_knot(hopf)


class TestArfLink:
    def test_knot_input_delegates(self, trefoil):
        assert arf_link(trefoil) == arf_knot(trefoil)

    def test_hopf_refused(self, hopf):
        with pytest.raises(NotProperError):
            arf_link(hopf)

    def test_torus_2_4_matches_trefoil(self, catalog):
        # smoothing one clasp crossing of the 4-twist closure leaves the
        # 3-twist closure
        assert arf_link(catalog["torus_2_4"]) == arf_knot(catalog["trefoil"])

    def test_smoothing_order_independence(self, proper_catalog):
        def values(d):
            if d.component_count == 1:
                return {arf_knot(d)}
            out = set()
            for k, cr in enumerate(d.crossings):
                if d.component_of_arc[cr.under_in] != d.component_of_arc[cr.over_in]:
                    out |= values(smooth_crossing(d, k))
            return out

        for name, d in proper_catalog.items():
            if d.component_count > 1:
                assert len(values(d)) == 1, name


class TestChangeLaw:
    def test_prediction_matches_oracle_on_catalog(self, proper_catalog):
        for name, d in proper_catalog.items():
            if d.crossing_count > 8:
                continue
            base = arf_link(d)
            for f in d.faces:
                predicted = arf_delta(d, f.id)
                flipped = flip_crossings(d, set(f.boundary_crossings))
                assert predicted == base ^ arf_link(flipped), (name, f.id)

    def test_refuses_non_proper(self, hopf):
        with pytest.raises(NotProperError):
            arf_delta(hopf, 0)

    def test_delta_is_weight_mod_four(self, proper_catalog):
        for d in proper_catalog.values():
            for f in d.faces:
                w = region_signs(d, f.id).arf_weight
                assert arf_delta(d, f.id) == (w % 4) // 2


class TestArfViaRegions:
    def test_matches_oracle_on_catalog(self, proper_catalog):
        for name, d in proper_catalog.items():
            regions = unknot_regions(d)
            assert arf_via_regions(d, regions) == arf_link(d), name

    def test_trefoil_and_figure_eight_both_routes(self, catalog):
        for name in ("trefoil", "figure_eight"):
            d = catalog[name]
            assert arf_via_regions(d, unknot_regions(d)) == 1
            assert arf_link(d) == 1

    def test_unknot_with_empty_selection(self, catalog):
        assert arf_via_regions(catalog["unknot"], frozenset()) == 0

    def test_non_trivializing_selection_refused(self, trefoil):
        with pytest.raises(NotUnknottingError):
            arf_via_regions(trefoil, frozenset())

    def test_order_independence_of_the_chained_sum(self, catalog):
        d = catalog["borromean"]
        regions = sorted(unknot_regions(d))
        want = arf_link(d)
        for perm in itertools.permutations(regions):
            total = 0
            cur = d
            for r in perm:
                total += region_signs(cur, r).arf_weight
                cur = flip_crossings(cur, set(cur.faces[r].boundary_crossings))
            assert (total % 4) // 2 == want

    def test_minimal_regions_agree_too(self, proper_catalog):
        for name, d in proper_catalog.items():
            regions = unknot_regions(d, minimal=True)
            assert arf_via_regions(d, regions) == arf_link(d), name


class TestWeightsUnderFlips:
    def test_weight_flips_with_kinked_diagrams(self):
        # random proper diagrams with curls: the change law keeps holding
        from regionflip.generate import random_diagram

        rng = random.Random(31)
        checked = 0
        while checked < 6:
            d = random_diagram(rng, max_crossings=7)
            if not is_proper(d):
                continue
            checked += 1
            base = arf_link(d)
            for f in d.faces:
                predicted = arf_delta(d, f.id)
                actual = base ^ arf_link(flip_crossings(d, set(f.boundary_crossings)))
                assert predicted == actual
