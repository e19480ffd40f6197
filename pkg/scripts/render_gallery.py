"""Write SVG pictures of every construction and a maximum chord family."""
import argparse
from pathlib import Path

from arcsys.chords import max_pairwise_family
from arcsys.constructions import (concentric_system, ideal_polygon_system, same_puncture_system,
                                  tetrahedron_system, triangulation_system, two_puncture_system)
from arcsys.render import render_chords, render_system
from arcsys.surface import parse_gluing


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="gallery")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    systems = {
        "polygon_aAbB": ideal_polygon_system(parse_gluing("aAbB")),
        "polygon_abAB": ideal_polygon_system(parse_gluing("abAB")),
        "triangulation_aAbBcC": triangulation_system(parse_gluing("aAbBcC")),
        "concentric_4_1": concentric_system(4, 1),
        "same_puncture_3": same_puncture_system(3),
        "two_punctures_3": two_puncture_system(3),
        "tetrahedron": tetrahedron_system(),
    }
    for name, s in systems.items():
        (out / f"{name}.svg").write_text(render_system(s))
    (out / "chords_6.svg").write_text(render_chords(max_pairwise_family(6)))
    print(f"wrote {len(systems) + 1} pictures to {out}/")


if __name__ == "__main__":
    main()
