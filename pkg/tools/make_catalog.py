#!/usr/bin/env python3
"""Regenerate src/regionflip/data/links.jsonl from the braid-word builders.

The file is committed; this script documents where it came from and keeps it
reproducible.  The hopf entry is pinned to the documented example code (the
same diagram the 2-letter braid closure produces, up to arc labels).
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from regionflip.codec import parse_pd, serialize_pd  # noqa: E402
from regionflip.construct import NAMED_BRAIDS, braid_closure  # noqa: E402
from regionflip.diagram import build_diagram, mirror_diagram  # noqa: E402

HOPF_LITERAL = "X(1,4,2,3) X(3,2,4,1)"


def build_entries() -> list[tuple[str, str]]:
    trefoil = braid_closure(*NAMED_BRAIDS["trefoil"])
    entries = [
        ("unknot", ""),
        ("curl", "X(1,2,2,1)"),
        ("trefoil", serialize_pd(trefoil.to_code())),
        ("trefoil_mirror", serialize_pd(mirror_diagram(trefoil).to_code())),
        ("figure_eight", serialize_pd(braid_closure(*NAMED_BRAIDS["figure_eight"]).to_code())),
        ("hopf", HOPF_LITERAL),
        ("torus_2_4", serialize_pd(braid_closure(*NAMED_BRAIDS["torus_2_4"]).to_code())),
        ("torus_2_6", serialize_pd(braid_closure(*NAMED_BRAIDS["torus_2_6"]).to_code())),
        ("whitehead", serialize_pd(braid_closure(*NAMED_BRAIDS["whitehead"]).to_code())),
        ("borromean", serialize_pd(braid_closure(*NAMED_BRAIDS["borromean"]).to_code())),
        ("torus_3_3", serialize_pd(braid_closure(*NAMED_BRAIDS["torus_3_3"]).to_code())),
    ]
    for name, pd in entries:
        build_diagram(parse_pd(pd))  # every entry must assemble
    return entries


def main() -> None:
    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "regionflip" / "data" / "links.jsonl"
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = [json.dumps({"name": n, "pd": p}) for n, p in build_entries()]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(lines)} entries)")


if __name__ == "__main__":
    main()
