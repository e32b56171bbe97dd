#pragma once

#include <string>
#include <vector>

#include "qskein/errors.hpp"

namespace qskein {

enum class VertexKind { junction, crossing, endpoint };

/// A decorated combinatorial map: darts paired into edges, cyclically
/// ordered (counterclockwise) around vertices. Crossings mark the darts at
/// cycle positions 0 and 2 as the over strand. Closed diagrams live on the
/// sphere; diagrams with boundary list their endpoint vertices in
/// counterclockwise disk order.
class Diagram {
public:
    struct Vertex {
        VertexKind kind;
        std::vector<int> darts;  // ccw rotation
    };

    std::vector<Vertex> vertices;
    std::vector<int> edge_pair;              // dart -> partner dart
    std::vector<int> dart_vertex;            // dart -> vertex id
    std::vector<int> dart_slot;              // dart -> position in its cycle
    std::vector<std::string> dart_decoration;  // equal on both darts; "" = plain
    long free_circles = 0;
    std::vector<int> boundary;  // endpoint vertex ids, ccw; empty = closed
    std::string ruleset_name;   // optional "ruleset" header from files

    int dart_count() const { return static_cast<int>(edge_pair.size()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return dart_count() / 2; }
    int endpoint_count() const { return static_cast<int>(boundary.size()); }
    bool closed() const { return boundary.empty(); }
    bool empty() const { return vertices.empty() && free_circles == 0; }

    int rot_next(int dart) const {
        const Vertex& v = vertices[dart_vertex[dart]];
        return v.darts[(dart_slot[dart] + 1) % v.darts.size()];
    }
    int rot_prev(int dart) const {
        const Vertex& v = vertices[dart_vertex[dart]];
        return v.darts[(dart_slot[dart] + v.darts.size() - 1) %
                       v.darts.size()];
    }
    bool dart_is_over(int dart) const {
        return vertices[dart_vertex[dart]].kind == VertexKind::crossing &&
               dart_slot[dart] % 2 == 0;
    }

    int junction_count() const;
    int crossing_count() const;

    /// Structural and planarity checks; throws on violation.
    void validate() const;

    bool operator==(const Diagram&) const = default;
};

/// Incremental construction with explicit slots.
class DiagramBuilder {
public:
    int add_junction();
    int add_crossing();
    int add_endpoint();
    /// Connect slot s1 of v1 to slot s2 of v2 (slots 0-based, ccw).
    void connect(int v1, int s1, int v2, int s2,
                 const std::string& decoration = "");
    void add_free_circles(long k) { free_circles_ += k; }
    void set_boundary(const std::vector<int>& endpoint_vertices);
    void set_ruleset_name(const std::string& name) { ruleset_ = name; }

    /// Assemble and validate.
    Diagram build(bool check_planarity = true) const;

private:
    struct PVertex {
        VertexKind kind;
        int arity;
    };
    std::vector<PVertex> verts_;
    struct PEdge {
        int v1, s1, v2, s2;
        std::string decoration;
    };
    std::vector<PEdge> edges_;
    long free_circles_ = 0;
    std::vector<int> boundary_;
    std::string ruleset_;
};

// -- faces -------------------------------------------------------------

struct Face {
    std::vector<int> darts;  // walk order; empty for rim-only faces
    int sides = 0;           // edge traversals (excluding rim arcs)
    bool self_adjacent = false;  // some edge traversed twice
    bool touches_boundary = false;
    bool all_junctions = true;  // every corner vertex is a junction
    int component = 0;
};

/// All faces of the diagram, computed per connected component on its own
/// sphere; bounded diagrams are closed up with rim arcs along the boundary
/// circle, and faces using a rim arc are marked touches_boundary.
std::vector<Face> faces(const Diagram& d);

/// A face with <= 5 sides, not self-adjacent, not touching the boundary,
/// surrounded by junctions only. Throws internal_error if none exists for a
/// closed, crossingless, non-empty diagram without free circles (the
/// face-existence lemma guarantees one).
Face find_reducible_face(const Diagram& d);

/// All faces eligible for reduction (same filter as find_reducible_face),
/// smallest first; empty when the diagram is already irreducible.
std::vector<Face> reducible_faces(const Diagram& d);

// -- surgery -----------------------------------------------------------

/// Replace the interior of `face` (its vertices and edges) by the bounded
/// diagram `replacement`, whose endpoints are glued to the face's external
/// stubs in walk order. Throws on arity or decoration mismatch.
Diagram excise_and_glue(const Diagram& d, const Face& face,
                        const Diagram& replacement);

/// Replace crossing vertex `v` by a bounded arity-4 diagram whose endpoints
/// 1..4 are glued to the crossing's darts at cycle positions 0..3.
Diagram replace_crossing(const Diagram& d, int v, const Diagram& replacement);

/// Close a bounded diagram with a cap of equal arity: endpoint i of d is
/// joined to endpoint (n - i) mod n of the cap (opposite boundary).
Diagram glue_boundary(const Diagram& d, const Diagram& cap);

/// Swap over and under at every crossing.
Diagram mirror(const Diagram& d);

/// Split into connected pieces: bounded components keep their endpoints
/// (in the induced boundary order), closed components are returned
/// separately, free circles reported via the count on an empty diagram.
struct Components {
    std::vector<Diagram> closed_parts;  // no endpoints, no free circles
    Diagram bounded_part;               // everything touching the boundary
    long free_circles = 0;
};
Components split_components(const Diagram& d);

// -- codes -------------------------------------------------------------

/// Canonical byte string: equal codes iff isomorphic as decorated maps --
/// on the sphere for closed diagrams (minimized over starting darts and
/// over turning the sphere over, which also exchanges over and under), on
/// the disk with labeled boundary for bounded ones.
std::string canonical_code(const Diagram& d);

// -- text format -------------------------------------------------------

/// Line-oriented text; '#' comments; records V/X/E/O/B; ';' also accepted
/// as a record separator. See the project README for the grammar.
Diagram parse_diagram(const std::string& text, bool check_planarity = true);
std::string serialize_diagram(const Diagram& d);
/// Single-line form with ';' separators, used inside rule files.
std::string serialize_diagram_compact(const Diagram& d);

}  // namespace qskein
