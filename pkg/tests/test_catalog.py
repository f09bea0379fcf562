import json
import pathlib
import sys

from regionflip.catalog import CATALOG_NAMES, bundled_catalog, bundled_diagrams
from regionflip.diagram import is_proper


class TestBundledCatalog:
    def test_names_and_order(self):
        assert tuple(n for n, _ in bundled_catalog().entries) == CATALOG_NAMES

    def test_expected_shapes(self):
        want = {
            # name: (crossings, components, proper)
            "unknot": (0, 1, True),
            "curl": (1, 1, True),
            "trefoil": (3, 1, True),
            "trefoil_mirror": (3, 1, True),
            "figure_eight": (4, 1, True),
            "hopf": (2, 2, False),
            "torus_2_4": (4, 2, True),
            "torus_2_6": (6, 2, False),
            "whitehead": (5, 2, True),
            "borromean": (6, 3, True),
            "torus_3_3": (6, 3, True),
        }
        for name, d in bundled_diagrams().items():
            assert (d.crossing_count, d.component_count, is_proper(d)) == want[name], name

    def test_pairwise_odd_three_component_entry(self):
        d = bundled_diagrams()["torus_3_3"]
        lk = d.linking
        assert all(
            lk.value(i, j) % 2 == 1
            for i in range(3) for j in range(3) if i != j
        )

    def test_mirror_entry_negates_writhe(self):
        ds = bundled_diagrams()
        assert ds["trefoil_mirror"].writhe() == -ds["trefoil"].writhe()

    def test_file_matches_generator(self):
        # the committed JSONL is exactly what tools/make_catalog.py emits
        root = pathlib.Path(__file__).resolve().parents[1]
        sys.path.insert(0, str(root / "tools"))
        try:
            import make_catalog
        finally:
            sys.path.pop(0)
        generated = [
            json.dumps({"name": n, "pd": p}) for n, p in make_catalog.build_entries()
        ]
        committed = (root / "src" / "regionflip" / "data" / "links.jsonl") \
            .read_text().strip().splitlines()
        assert committed == generated
