"""Arc systems on punctured surfaces presented as glued ideal polygons."""
from .arcs import CanonicalArc, Itinerary, canonicalize, endpoints, equals, format_arc, is_essential, parse_arc, side_arc
from .chords import ChordFamily, chords_intersect, helly_certificate, max_pairwise_family
from .constructions import (concentric_system, ideal_polygon_system, same_puncture_system,
                            tetrahedron_system, triangulation_system, two_puncture_system)
from .intersection import intersection_matrix, intersection_number, is_simple, self_intersection
from .lifts import intersection_number_lifts
from .surface import SurfaceGluing, parse_gluing, standard_planar_gluing
from .systems import (ArcSystem, EndpointFilter, SearchConfig, enumerate_arcs, extremal_search,
                      make_system, verify_k_system)

__version__ = "0.1.0"
