"""Sizes and verified k of every construction against the closed forms."""
from arcsys import formulas
from arcsys.constructions import (concentric_system, ideal_polygon_system, same_puncture_system,
                                  tetrahedron_system, triangulation_system, two_puncture_system)
from arcsys.surface import standard_planar_gluing
from arcsys.systems import verify_k_system


def rows():
    for x in range(1, 5):
        g = standard_planar_gluing(x)
        yield "polygon", x, "-", ideal_polygon_system(g), formulas.f_arcs(x), 1
        yield "triangulation", x, "-", triangulation_system(g), formulas.disjoint_arcs(x), 0
        yield "same-puncture", x, "-", same_puncture_system(x), formulas.punctured_sphere_arcs(x), 1
        yield "two-punctures", x, "-", two_puncture_system(x), formulas.punctured_sphere_arcs(x), 1
    for x, k in [(2, 1), (4, 1), (6, 1), (3, 2), (6, 2), (4, 3), (8, 3)]:
        yield "concentric", x, k, concentric_system(x, k), formulas.k_system_lower(x, k), k
    yield "tetrahedron", 2, "-", tetrahedron_system(), formulas.f_arcs(2), 1


def main():
    print(f"{'construction':14} {'|chi|':>5} {'k':>2} {'size':>5} {'formula':>7} {'max i':>5} {'ok':>3}")
    for name, x, k, s, want, kk in rows():
        rep = verify_k_system(s, kk)
        print(f"{name:14} {x:>5} {str(k):>2} {len(s):>5} {want:>7} {rep.max_pair:>5} {'yes' if rep.ok else 'NO':>3}")


if __name__ == "__main__":
    main()
