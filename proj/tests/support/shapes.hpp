#pragma once

// Small diagrams shared across test suites.

#include <string>

#include "qskein/planar.hpp"

namespace qskein::testshapes {

inline Diagram circle() {
    DiagramBuilder b;
    b.add_free_circles(1);
    return b.build();
}

// Two junctions joined by three parallel edges.
inline Diagram theta() {
    return parse_diagram("V a b c\nV a c b");
}

// Tetrahedron graph: outer triangle 1,2,3 with vertex 4 inside.
inline Diagram k4() {
    return parse_diagram(
        "V a b c\n"  // 1: neighbors 2,4,3
        "V d e a\n"  // 2: neighbors 3,4,1
        "V c f d\n"  // 3: neighbors 1,4,2
        "V b e f");  // 4: neighbors 1,2,3
}

// Right-handed kink closed into an unknot: the small loop joins crossing
// positions 2,3 and the closure arc joins positions 4,1.
inline Diagram kink_right() { return parse_diagram("X a b b a"); }

// The mirror closure: loop on positions 1,2 and closure on 3,4.
inline Diagram kink_left() { return parse_diagram("X a a b b"); }

// One crossing with 4 endpoints: darts ccw to boundary 1..4, (1,3) over.
inline Diagram crossing_tangle() {
    return parse_diagram(
        "X a b c d\nE 1 a\nE 2 b\nE 3 c\nE 4 d\nB 1 2 3 4");
}

// Single strand between two boundary points.
inline Diagram strand2() {
    return parse_diagram("E 1 a\nE 2 a\nB 1 2");
}

// One junction joined to three boundary points.
inline Diagram star3() {
    return parse_diagram("V a b c\nE 1 a\nE 2 b\nE 3 c\nB 1 2 3");
}

// Tadpole: loop plus a stem to one boundary point.
inline Diagram tadpole1() {
    return parse_diagram("V a a b\nE 1 b\nB 1");
}

// Six junctions in a ring, each with an outward leg.
inline Diagram hexagon_ring6() {
    std::string text;
    for (int i = 0; i < 6; ++i) {
        int j = (i + 1) % 6;
        // junction i: ring edge to previous, leg, ring edge to next (ccw)
        text += "V r" + std::to_string(i) + " l" + std::to_string(i) + " r" +
                std::to_string(j) + "\n";
    }
    for (int i = 0; i < 6; ++i) {
        text += "E " + std::to_string(i + 1) + " l" + std::to_string(i) + "\n";
    }
    text += "B 1 2 3 4 5 6\n";
    return parse_diagram(text);
}

// The hexagon ring closed by joining adjacent legs (1,2), (3,4), (5,6).
inline Diagram hexagon_ring_closed() {
    std::string text;
    for (int i = 0; i < 6; ++i) {
        int j = (i + 1) % 6;
        text += "V r" + std::to_string(i) + " l" + std::to_string(i / 2) +
                " r" + std::to_string(j) + "\n";
    }
    return parse_diagram(text);
}

}  // namespace qskein::testshapes
