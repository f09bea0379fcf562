"""The bundled diagram catalog: small named links shipped as a JSONL file."""

from __future__ import annotations

from importlib import resources

from .codec import CatalogLoad, OrientedPDCode, load_catalog
from .diagram import Diagram, build_diagram

CATALOG_RESOURCE = "data/links.jsonl"

# Names in file order; knots and links small enough for every exhaustive suite.
CATALOG_NAMES = (
    "unknot",
    "curl",
    "trefoil",
    "trefoil_mirror",
    "figure_eight",
    "hopf",
    "torus_2_4",
    "torus_2_6",
    "whitehead",
    "borromean",
    "torus_3_3",
)


def bundled_catalog() -> CatalogLoad:
    ref = resources.files("regionflip").joinpath(CATALOG_RESOURCE)
    with ref.open("rb") as fh:
        loaded = load_catalog(fh)
    if loaded.diagnostics:
        raise RuntimeError(f"bundled catalog is corrupt: {loaded.diagnostics}")
    return loaded


def bundled_codes() -> dict[str, OrientedPDCode]:
    return dict(bundled_catalog().entries)


def bundled_diagrams() -> dict[str, Diagram]:
    return {name: build_diagram(code) for name, code in bundled_catalog().entries}
