#include "qskein/planar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

namespace qskein {

namespace {

int vertex_arity(VertexKind k) {
    switch (k) {
        case VertexKind::junction: return 3;
        case VertexKind::crossing: return 4;
        case VertexKind::endpoint: return 1;
    }
    throw internal_error("bad vertex kind");
}

// Union-find over vertex ids.
struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Rim-closed view of a diagram: boundary endpoints are joined by arcs along
// the disk circle, making every vertex's rotation complete on the sphere.
// Real darts keep their ids; arc darts get ids >= real_darts.
struct ClosedView {
    const Diagram* d;
    int real_darts;
    std::vector<int> pair;     // involution over all darts
    std::vector<int> next;     // rotation-next
    std::vector<int> vert;     // owning vertex

    bool is_arc(int dart) const { return dart >= real_darts; }
};

ClosedView make_closed_view(const Diagram& d) {
    ClosedView cv;
    cv.d = &d;
    cv.real_darts = d.dart_count();
    int n = d.endpoint_count();
    int total = cv.real_darts + 2 * n;
    cv.pair.resize(total);
    cv.next.resize(total);
    cv.vert.resize(total);
    for (int x = 0; x < cv.real_darts; ++x) {
        cv.pair[x] = d.edge_pair[x];
        cv.next[x] = d.rot_next(x);
        cv.vert[x] = d.dart_vertex[x];
    }
    // arc i runs from boundary[i] to boundary[i+1]; dart a_i sits at p_i,
    // dart b_i at p_{i+1}. Rotation at an endpoint: (real dart, a_i, b_{i-1}).
    for (int i = 0; i < n; ++i) {
        int ai = cv.real_darts + 2 * i;
        int bi = ai + 1;
        int pi = d.boundary[i];
        int pnext = d.boundary[(i + 1) % n];
        cv.pair[ai] = bi;
        cv.pair[bi] = ai;
        cv.vert[ai] = pi;
        cv.vert[bi] = pnext;
    }
    for (int i = 0; i < n; ++i) {
        int pi = d.boundary[i];
        int e = d.vertices[pi].darts[0];
        int a_here = cv.real_darts + 2 * i;
        int b_prev = cv.real_darts + 2 * ((i + n - 1) % n) + 1;
        cv.next[e] = b_prev;
        cv.next[b_prev] = a_here;
        cv.next[a_here] = e;
    }
    return cv;
}

std::vector<int> closed_view_components(const ClosedView& cv, int* count) {
    const Diagram& d = *cv.d;
    UF uf(d.vertex_count());
    for (int x = 0; x < static_cast<int>(cv.pair.size()); ++x)
        uf.unite(cv.vert[x], cv.vert[cv.pair[x]]);
    std::map<int, int> remap;
    std::vector<int> comp(d.vertex_count(), -1);
    for (int v = 0; v < d.vertex_count(); ++v) {
        int r = uf.find(v);
        auto [it, fresh] = remap.try_emplace(r, static_cast<int>(remap.size()));
        comp[v] = it->second;
    }
    *count = static_cast<int>(remap.size());
    return comp;
}

}  // namespace

int Diagram::junction_count() const {
    int n = 0;
    for (const auto& v : vertices) n += v.kind == VertexKind::junction;
    return n;
}

int Diagram::crossing_count() const {
    int n = 0;
    for (const auto& v : vertices) n += v.kind == VertexKind::crossing;
    return n;
}

void Diagram::validate() const {
    int D = dart_count();
    if (static_cast<int>(dart_vertex.size()) != D ||
        static_cast<int>(dart_slot.size()) != D ||
        static_cast<int>(dart_decoration.size()) != D)
        throw internal_error("dart table size mismatch");
    if (free_circles < 0) throw internal_error("negative free circle count");
    std::vector<char> seen(D, 0);
    for (int v = 0; v < vertex_count(); ++v) {
        const Vertex& vx = vertices[v];
        if (static_cast<int>(vx.darts.size()) != vertex_arity(vx.kind))
            throw internal_error("vertex arity mismatch");
        for (int s = 0; s < static_cast<int>(vx.darts.size()); ++s) {
            int x = vx.darts[s];
            if (x < 0 || x >= D || seen[x])
                throw internal_error("bad dart assignment");
            seen[x] = 1;
            if (dart_vertex[x] != v || dart_slot[x] != s)
                throw internal_error("dart back-reference mismatch");
        }
    }
    for (int x = 0; x < D; ++x) {
        if (edge_pair[x] == x || edge_pair[edge_pair[x]] != x)
            throw internal_error("edge pairing is not a fixed-point-free involution");
        if (dart_decoration[x] != dart_decoration[edge_pair[x]])
            throw internal_error("edge decoration differs between its two darts");
    }
    // endpoints and boundary agree
    std::set<int> bset(boundary.begin(), boundary.end());
    if (bset.size() != boundary.size())
        throw internal_error("boundary repeats an endpoint");
    for (int v = 0; v < vertex_count(); ++v) {
        bool is_ep = vertices[v].kind == VertexKind::endpoint;
        if (is_ep != (bset.count(v) > 0))
            throw internal_error("endpoint vertices must appear in the boundary exactly once");
    }
    // Euler characteristic per connected component of the rim-closed map
    ClosedView cv = make_closed_view(*this);
    int ncomp = 0;
    std::vector<int> comp = closed_view_components(cv, &ncomp);
    if (ncomp == 0) return;
    std::vector<int> V(ncomp, 0), E2(ncomp, 0), F(ncomp, 0);
    for (int v = 0; v < vertex_count(); ++v) ++V[comp[v]];
    for (int x = 0; x < static_cast<int>(cv.pair.size()); ++x)
        ++E2[comp[cv.vert[x]]];
    std::vector<char> visited(cv.pair.size(), 0);
    for (int x = 0; x < static_cast<int>(cv.pair.size()); ++x) {
        if (visited[x]) continue;
        int y = x;
        do {
            visited[y] = 1;
            y = cv.next[cv.pair[y]];
        } while (y != x);
        ++F[comp[cv.vert[x]]];
    }
    for (int c = 0; c < ncomp; ++c) {
        if (V[c] - E2[c] / 2 + F[c] != 2)
            throw parse_error("nonplanar rotation system (Euler check fails)");
    }
}

// -- builder -----------------------------------------------------------

int DiagramBuilder::add_junction() {
    verts_.push_back({VertexKind::junction, 3});
    return static_cast<int>(verts_.size()) - 1;
}

int DiagramBuilder::add_crossing() {
    verts_.push_back({VertexKind::crossing, 4});
    return static_cast<int>(verts_.size()) - 1;
}

int DiagramBuilder::add_endpoint() {
    verts_.push_back({VertexKind::endpoint, 1});
    return static_cast<int>(verts_.size()) - 1;
}

void DiagramBuilder::connect(int v1, int s1, int v2, int s2,
                             const std::string& decoration) {
    edges_.push_back({v1, s1, v2, s2, decoration});
}

void DiagramBuilder::set_boundary(const std::vector<int>& endpoint_vertices) {
    boundary_ = endpoint_vertices;
}

Diagram DiagramBuilder::build(bool check_planarity) const {
    Diagram d;
    d.free_circles = free_circles_;
    d.boundary = boundary_;
    d.ruleset_name = ruleset_;
    int dart_id = 0;
    std::vector<std::vector<int>> slot_dart(verts_.size());
    for (std::size_t v = 0; v < verts_.size(); ++v) {
        Diagram::Vertex vx;
        vx.kind = verts_[v].kind;
        vx.darts.resize(verts_[v].arity);
        slot_dart[v].resize(verts_[v].arity, -1);
        for (int s = 0; s < verts_[v].arity; ++s) {
            vx.darts[s] = dart_id;
            slot_dart[v][s] = dart_id;
            ++dart_id;
        }
        d.vertices.push_back(std::move(vx));
    }
    d.edge_pair.assign(dart_id, -1);
    d.dart_vertex.resize(dart_id);
    d.dart_slot.resize(dart_id);
    d.dart_decoration.assign(dart_id, "");
    for (std::size_t v = 0; v < verts_.size(); ++v)
        for (int s = 0; s < verts_[v].arity; ++s) {
            d.dart_vertex[slot_dart[v][s]] = static_cast<int>(v);
            d.dart_slot[slot_dart[v][s]] = s;
        }
    for (const auto& e : edges_) {
        if (e.v1 < 0 || e.v1 >= static_cast<int>(verts_.size()) || e.v2 < 0 ||
            e.v2 >= static_cast<int>(verts_.size()))
            throw internal_error("builder edge references unknown vertex");
        int x = slot_dart[e.v1].at(e.s1);
        int y = slot_dart[e.v2].at(e.s2);
        if (d.edge_pair[x] != -1 || d.edge_pair[y] != -1 || x == y)
            throw internal_error("builder slot used twice");
        d.edge_pair[x] = y;
        d.edge_pair[y] = x;
        d.dart_decoration[x] = e.decoration;
        d.dart_decoration[y] = e.decoration;
    }
    for (int x = 0; x < dart_id; ++x)
        if (d.edge_pair[x] == -1) throw internal_error("unconnected slot");
    if (check_planarity) {
        d.validate();
    }
    return d;
}

// -- faces ---------------------------------------------------------------

std::vector<Face> faces(const Diagram& d) {
    ClosedView cv = make_closed_view(d);
    int ncomp = 0;
    std::vector<int> comp = closed_view_components(cv, &ncomp);
    std::vector<Face> out;
    int total = static_cast<int>(cv.pair.size());
    std::vector<char> visited(total, 0);
    for (int x = 0; x < total; ++x) {
        if (visited[x]) continue;
        Face f;
        std::map<int, int> edge_visits;
        int y = x;
        do {
            visited[y] = 1;
            if (cv.is_arc(y)) {
                f.touches_boundary = true;
            } else {
                f.darts.push_back(y);
                ++f.sides;
                ++edge_visits[std::min(y, cv.pair[y])];
                if (d.vertices[cv.vert[y]].kind != VertexKind::junction)
                    f.all_junctions = false;
            }
            y = cv.next[cv.pair[y]];
        } while (y != x);
        for (const auto& [e, k] : edge_visits)
            if (k > 1) f.self_adjacent = true;
        f.component = d.vertex_count() ? comp[cv.vert[x]] : 0;
        out.push_back(std::move(f));
    }
    // vertexless circles each bound two featureless faces on their own sphere
    for (long i = 0; i < d.free_circles; ++i) {
        Face f;
        f.component = ncomp + static_cast<int>(i);
        out.push_back(f);
        out.push_back(f);
    }
    return out;
}

std::vector<Face> reducible_faces(const Diagram& d) {
    std::vector<Face> out;
    for (Face& f : faces(d)) {
        if (f.touches_boundary || f.self_adjacent || !f.all_junctions)
            continue;
        if (f.sides < 1 || f.sides > 5) continue;
        out.push_back(std::move(f));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Face& a, const Face& b) {
                         return a.sides < b.sides;
                     });
    return out;
}

Face find_reducible_face(const Diagram& d) {
    std::vector<Face> all = reducible_faces(d);
    if (all.empty())
        throw internal_error(
            "no reducible face: the face-existence lemma is violated, "
            "which indicates a data-model bug");
    return all.front();
}

// -- surgery -------------------------------------------------------------

namespace {

struct PortSide {
    const Diagram* d = nullptr;
    std::vector<char> keep;   // per vertex
    std::vector<int> ports;   // darts at deleted vertices whose edges cross out
};

// Replace deleted regions of two diagrams by joining their ports pairwise:
// port i of A fuses with port i of B. Edge chains running through deleted
// material are contracted into single edges; chains that close up become
// free circles.
Diagram fuse_ports(const PortSide& A, const PortSide& B) {
    int k = static_cast<int>(A.ports.size());
    if (B.d && static_cast<int>(B.ports.size()) != k)
        throw internal_error("fuse_ports: port count mismatch");

    DiagramBuilder bld;
    // relabel kept vertices
    auto relabel = [&bld](const Diagram& d, const std::vector<char>& keep) {
        std::vector<int> map(d.vertex_count(), -1);
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (!keep[v]) continue;
            switch (d.vertices[v].kind) {
                case VertexKind::junction: map[v] = bld.add_junction(); break;
                case VertexKind::crossing: map[v] = bld.add_crossing(); break;
                case VertexKind::endpoint: map[v] = bld.add_endpoint(); break;
            }
        }
        return map;
    };
    std::vector<int> amap = relabel(*A.d, A.keep);
    std::vector<int> bmap;
    if (B.d) bmap = relabel(*B.d, B.keep);

    // internal edges (both darts at kept vertices)
    auto copy_internal = [&bld](const Diagram& d, const std::vector<char>& keep,
                                const std::vector<int>& map) {
        for (int x = 0; x < d.dart_count(); ++x) {
            int y = d.edge_pair[x];
            if (x > y) continue;
            if (!keep[d.dart_vertex[x]] || !keep[d.dart_vertex[y]]) continue;
            bld.connect(map[d.dart_vertex[x]], d.dart_slot[x],
                        map[d.dart_vertex[y]], d.dart_slot[y],
                        d.dart_decoration[x]);
        }
    };
    copy_internal(*A.d, A.keep, amap);
    if (B.d) copy_internal(*B.d, B.keep, bmap);

    // Port resolution. Each port's partner dart is either a surviving
    // terminal or another port of the same side.
    struct End {
        bool terminal;
        int dart_or_port;
        std::string decoration;
    };
    auto resolve = [](const PortSide& S, int i) -> End {
        int p = S.ports[i];
        int t = S.d->edge_pair[p];
        std::string deco = S.d->dart_decoration[p];
        if (S.keep[S.d->dart_vertex[t]]) return {true, t, deco};
        for (int j = 0; j < static_cast<int>(S.ports.size()); ++j)
            if (S.ports[j] == t) return {false, j, deco};
        throw internal_error("fuse_ports: dangling edge into deleted region");
    };
    std::vector<End> aend(k), bend(k);
    for (int i = 0; i < k; ++i) {
        aend[i] = resolve(A, i);
        bend[i] = B.d ? resolve(B, i)
                      : End{false, i, aend[i].decoration};  // unused
    }
    if (!B.d && k != 0)
        throw internal_error("fuse_ports: ports without replacement side");

    // Each port i is one fusion point joining A material to B material. A
    // strand through the glued region alternates: resolving side s of port i
    // either exits at a terminal dart or reaches another fusion point j
    // through side-s material, where the other side is resolved next. The
    // chain structure is a disjoint union of paths (terminal to terminal)
    // and cycles (free circles).
    std::vector<char> used(k, 0);
    long circles = A.d->free_circles + (B.d ? B.d->free_circles : 0);

    struct WalkResult {
        bool cycle;
        int side;  // side of the terminal
        int dart;  // terminal dart in its own diagram
    };
    auto walk = [&](int i0, int s0, std::string* deco) -> WalkResult {
        int i = i0, s = s0;
        while (true) {
            used[i] = 1;
            const End& e = (s == 0) ? aend[i] : bend[i];
            if (!e.decoration.empty()) {
                if (deco->empty())
                    *deco = e.decoration;
                else if (*deco != e.decoration)
                    throw internal_error("decoration mismatch along fused edge");
            }
            if (e.terminal) return {false, s, e.dart_or_port};
            i = e.dart_or_port;  // reached fusion point i through side-s material
            s = 1 - s;           // resolve its other side next
            if (i == i0 && s == s0) return {true, 0, 0};
        }
    };
    for (int start = 0; start < k; ++start) {
        if (used[start]) continue;
        std::string deco;
        WalkResult one = walk(start, 0, &deco);
        if (one.cycle) {
            ++circles;
            continue;
        }
        WalkResult two = walk(start, 1, &deco);
        if (two.cycle) throw internal_error("half-open fusion chain");
        auto side_diagram = [&](int s) -> const Diagram& {
            return s == 0 ? *A.d : *B.d;
        };
        auto side_map = [&](int s) -> const std::vector<int>& {
            return s == 0 ? amap : bmap;
        };
        const Diagram& d1 = side_diagram(one.side);
        const Diagram& d2 = side_diagram(two.side);
        bld.connect(side_map(one.side)[d1.dart_vertex[one.dart]],
                    d1.dart_slot[one.dart],
                    side_map(two.side)[d2.dart_vertex[two.dart]],
                    d2.dart_slot[two.dart], deco);
    }
    bld.add_free_circles(circles);
    // boundary: surviving endpoints of A in original order
    std::vector<int> bnd;
    for (int p : A.d->boundary)
        if (A.keep[p]) bnd.push_back(amap[p]);
    bld.set_boundary(bnd);
    bld.set_ruleset_name(A.d->ruleset_name);
    return bld.build(true);
}

}  // namespace

Diagram excise_and_glue(const Diagram& d, const Face& face,
                        const Diagram& replacement) {
    if (face.self_adjacent)
        throw internal_error("cannot excise a self-adjacent face");
    if (face.touches_boundary)
        throw internal_error("cannot excise a boundary face");
    if (!face.all_junctions)
        throw internal_error("face corners must all be junctions");
    int k = face.sides;
    if (replacement.endpoint_count() != k)
        throw arity_error("replacement arity " +
                          std::to_string(replacement.endpoint_count()) +
                          " does not match face size " + std::to_string(k));
    PortSide A{&d, std::vector<char>(d.vertex_count(), 1), {}};
    for (int x : face.darts) A.keep[d.dart_vertex[x]] = 0;
    // At the corner of walk dart x the external stub is rot_next(x). The
    // face walk runs clockwise around the excised hole, so the stubs are
    // reversed to match the replacement's counterclockwise boundary.
    for (auto it = face.darts.rbegin(); it != face.darts.rend(); ++it)
        A.ports.push_back(d.rot_next(*it));
    PortSide B{&replacement,
               std::vector<char>(replacement.vertex_count(), 1),
               {}};
    for (int i = 0; i < k; ++i) {
        int ep = replacement.boundary[i];
        B.keep[ep] = 0;
        B.ports.push_back(replacement.vertices[ep].darts[0]);
    }
    // decoration compatibility between stubs and替换 boundary edges
    for (int i = 0; i < k; ++i) {
        const std::string& da = d.dart_decoration[A.ports[i]];
        const std::string& db = replacement.dart_decoration[B.ports[i]];
        if (da != db)
            throw arity_error("decoration mismatch at glued stub " +
                              std::to_string(i));
    }
    return fuse_ports(A, B);
}

Diagram replace_crossing(const Diagram& d, int v, const Diagram& replacement) {
    if (v < 0 || v >= d.vertex_count() ||
        d.vertices[v].kind != VertexKind::crossing)
        throw internal_error("replace_crossing: not a crossing");
    if (replacement.endpoint_count() != 4)
        throw arity_error("crossing replacement must have arity 4");
    PortSide A{&d, std::vector<char>(d.vertex_count(), 1), {}};
    A.keep[v] = 0;
    for (int s = 0; s < 4; ++s) A.ports.push_back(d.vertices[v].darts[s]);
    PortSide B{&replacement,
               std::vector<char>(replacement.vertex_count(), 1),
               {}};
    for (int i = 0; i < 4; ++i) {
        int ep = replacement.boundary[i];
        B.keep[ep] = 0;
        B.ports.push_back(replacement.vertices[ep].darts[0]);
    }
    return fuse_ports(A, B);
}

Diagram glue_boundary(const Diagram& d, const Diagram& cap) {
    int n = d.endpoint_count();
    if (cap.endpoint_count() != n)
        throw arity_error("cap arity does not match diagram boundary");
    PortSide A{&d, std::vector<char>(d.vertex_count(), 1), {}};
    PortSide B{&cap, std::vector<char>(cap.vertex_count(), 1), {}};
    for (int i = 0; i < n; ++i) {
        int pa = d.boundary[i];
        A.keep[pa] = 0;
        A.ports.push_back(d.vertices[pa].darts[0]);
        int pb = cap.boundary[(n - i) % n];
        B.keep[pb] = 0;
        B.ports.push_back(cap.vertices[pb].darts[0]);
    }
    Diagram out = fuse_ports(A, B);
    out.validate();
    return out;
}

Diagram mirror(const Diagram& d) {
    Diagram m = d;
    for (auto& v : m.vertices) {
        if (v.kind != VertexKind::crossing) continue;
        std::rotate(v.darts.begin(), v.darts.begin() + 1, v.darts.end());
        for (int s = 0; s < 4; ++s) m.dart_slot[v.darts[s]] = s;
    }
    return m;
}

Components split_components(const Diagram& d) {
    UF uf(d.vertex_count());
    for (int x = 0; x < d.dart_count(); ++x)
        uf.unite(d.dart_vertex[x], d.dart_vertex[d.edge_pair[x]]);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < d.vertex_count(); ++v) groups[uf.find(v)].push_back(v);

    std::set<int> boundary_roots;
    for (int p : d.boundary) boundary_roots.insert(uf.find(p));

    auto extract = [&d](const std::vector<char>& keep,
                        bool keep_boundary) -> Diagram {
        DiagramBuilder bld;
        std::vector<int> map(d.vertex_count(), -1);
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (!keep[v]) continue;
            switch (d.vertices[v].kind) {
                case VertexKind::junction: map[v] = bld.add_junction(); break;
                case VertexKind::crossing: map[v] = bld.add_crossing(); break;
                case VertexKind::endpoint: map[v] = bld.add_endpoint(); break;
            }
        }
        for (int x = 0; x < d.dart_count(); ++x) {
            int y = d.edge_pair[x];
            if (x > y || !keep[d.dart_vertex[x]]) continue;
            bld.connect(map[d.dart_vertex[x]], d.dart_slot[x],
                        map[d.dart_vertex[y]], d.dart_slot[y],
                        d.dart_decoration[x]);
        }
        if (keep_boundary) {
            std::vector<int> bnd;
            for (int p : d.boundary)
                if (keep[p]) bnd.push_back(map[p]);
            bld.set_boundary(bnd);
        }
        bld.set_ruleset_name(d.ruleset_name);
        return bld.build(false);
    };

    Components out;
    out.free_circles = d.free_circles;
    std::vector<char> bounded_keep(d.vertex_count(), 0);
    for (const auto& [root, verts] : groups) {
        if (boundary_roots.count(root)) {
            for (int v : verts) bounded_keep[v] = 1;
        } else {
            std::vector<char> keep(d.vertex_count(), 0);
            for (int v : verts) keep[v] = 1;
            out.closed_parts.push_back(extract(keep, false));
        }
    }
    out.bounded_part = extract(bounded_keep, true);
    return out;
}

// -- canonical codes -------------------------------------------------------

namespace {

char kind_char(VertexKind k) {
    switch (k) {
        case VertexKind::junction: return 'J';
        case VertexKind::crossing: return 'X';
        case VertexKind::endpoint: return 'E';
    }
    return '?';
}

// BFS encoding of the component containing `roots` (darts, explored in
// order). Covers only reachable vertices; returns the code and marks them.
std::string encode_from(const Diagram& d, const std::vector<int>& roots,
                        std::vector<char>* global_mark = nullptr) {
    std::ostringstream os;
    std::map<int, int> vid;   // vertex -> bfs id
    std::vector<int> entry;   // bfs id -> entry dart
    std::vector<int> order;   // bfs id -> vertex

    auto discover = [&](int dart) {
        int v = d.dart_vertex[dart];
        if (vid.count(v)) return;
        vid[v] = static_cast<int>(order.size());
        order.push_back(v);
        entry.push_back(dart);
        if (global_mark) (*global_mark)[v] = 1;
    };
    for (int r : roots) discover(r);

    std::size_t processed = 0;
    while (processed < order.size()) {
        int id = static_cast<int>(processed++);
        int v = order[id];
        const Diagram::Vertex& vx = d.vertices[v];
        int arity = static_cast<int>(vx.darts.size());
        os << kind_char(vx.kind);
        if (vx.kind == VertexKind::crossing)
            os << (d.dart_slot[entry[id]] % 2);  // entry on over strand?
        os << '(';
        int e0 = d.dart_slot[entry[id]];
        for (int s = 0; s < arity; ++s) {
            int x = vx.darts[(e0 + s) % arity];
            int y = d.edge_pair[x];
            const std::string& deco = d.dart_decoration[x];
            if (!deco.empty()) os << '[' << deco << ']';
            int w = d.dart_vertex[y];
            if (!vid.count(w)) {
                os << 'n';
                discover(y);
            } else {
                int wid = vid[w];
                int warity = static_cast<int>(d.vertices[w].darts.size());
                int off = (d.dart_slot[y] - d.dart_slot[entry[wid]] + warity) %
                          warity;
                os << wid << '.' << off;
            }
            os << ',';
        }
        os << ')';
    }
    return os.str();
}

// Reverse all rotations and swap over/under: the diagram as seen after
// turning the sphere over.
Diagram turn_over(const Diagram& d) {
    Diagram m = d;
    for (auto& v : m.vertices) {
        // reversing a 4-cycle moves the even positions to the other strand,
        // which is exactly the over/under swap a turned-over sphere shows
        std::reverse(v.darts.begin(), v.darts.end());
        for (int s = 0; s < static_cast<int>(v.darts.size()); ++s)
            m.dart_slot[v.darts[s]] = s;
    }
    std::reverse(m.boundary.begin(), m.boundary.end());
    return m;
}

std::string min_closed_component_code(const Diagram& d,
                                      const std::vector<int>& comp_darts) {
    std::string best;
    for (int r : comp_darts) {
        std::string s = encode_from(d, {r});
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

}  // namespace

std::string canonical_code(const Diagram& d) {
    std::ostringstream os;
    os << 'b' << d.endpoint_count() << 'o' << d.free_circles << ':';

    std::vector<char> mark(d.vertex_count(), 0);
    if (!d.boundary.empty()) {
        std::vector<int> roots;
        for (int p : d.boundary) roots.push_back(d.vertices[p].darts[0]);
        os << encode_from(d, roots, &mark);
    }
    // remaining (closed) components: canonical per component, sorted
    UF uf(d.vertex_count());
    for (int x = 0; x < d.dart_count(); ++x)
        uf.unite(d.dart_vertex[x], d.dart_vertex[d.edge_pair[x]]);
    std::map<int, std::vector<int>> comp_darts;
    for (int x = 0; x < d.dart_count(); ++x) {
        int v = d.dart_vertex[x];
        if (!mark[v]) comp_darts[uf.find(v)].push_back(x);
    }
    Diagram flipped = turn_over(d);
    std::vector<std::string> codes;
    for (const auto& [root, darts] : comp_darts) {
        std::string a = min_closed_component_code(d, darts);
        std::string b = min_closed_component_code(flipped, darts);
        codes.push_back(std::min(a, b));
    }
    std::sort(codes.begin(), codes.end());
    for (const auto& c : codes) os << '|' << c;
    return os.str();
}

// -- text format ------------------------------------------------------------

Diagram parse_diagram(const std::string& text, bool check_planarity) {
    struct Occurrence {
        int vertex, slot;
        std::string decoration;
    };
    std::map<std::string, std::vector<Occurrence>> labels;
    std::map<std::string, int> endpoint_by_name;
    std::vector<std::string> endpoint_names;
    std::vector<std::string> boundary_names;
    bool saw_boundary_record = false;

    DiagramBuilder bld;

    auto add_label = [&labels](const std::string& token, int v, int s) {
        std::string name = token, deco;
        auto colon = token.find(':');
        if (colon != std::string::npos) {
            name = token.substr(0, colon);
            deco = token.substr(colon + 1);
        }
        if (name.empty()) throw parse_error("empty edge label");
        labels[name].push_back({v, s, deco});
    };

    std::string normalized = text;
    for (auto& c : normalized)
        if (c == ';') c = '\n';
    std::istringstream in(normalized);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string cmd;
        if (!(ls >> cmd)) continue;
        auto want = [&](int n, std::vector<std::string>& out) {
            std::string tok;
            while (ls >> tok) out.push_back(tok);
            if (n >= 0 && static_cast<int>(out.size()) != n)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": record " + cmd + " expects " +
                                  std::to_string(n) + " fields");
        };
        std::vector<std::string> toks;
        if (cmd == "ruleset") {
            want(1, toks);
            bld.set_ruleset_name(toks[0]);
        } else if (cmd == "V") {
            want(3, toks);
            int v = bld.add_junction();
            for (int s = 0; s < 3; ++s) add_label(toks[s], v, s);
        } else if (cmd == "X") {
            want(4, toks);
            int v = bld.add_crossing();
            for (int s = 0; s < 4; ++s) add_label(toks[s], v, s);
        } else if (cmd == "E") {
            want(2, toks);
            if (endpoint_by_name.count(toks[0]))
                throw parse_error("line " + std::to_string(lineno) +
                                  ": duplicate endpoint name " + toks[0]);
            int v = bld.add_endpoint();
            endpoint_by_name[toks[0]] = v;
            endpoint_names.push_back(toks[0]);
            add_label(toks[1], v, 0);
        } else if (cmd == "O") {
            want(1, toks);
            long k = std::stol(toks[0]);
            if (k < 0) throw parse_error("negative free circle count");
            bld.add_free_circles(k);
        } else if (cmd == "B") {
            want(-1, toks);
            if (saw_boundary_record)
                throw parse_error("duplicate B record");
            saw_boundary_record = true;
            boundary_names = toks;
        } else {
            throw parse_error("line " + std::to_string(lineno) +
                              ": unknown record " + cmd);
        }
    }

    for (const auto& [name, occ] : labels) {
        if (occ.size() != 2)
            throw parse_error("edge label " + name + " appears " +
                              std::to_string(occ.size()) +
                              " times (need exactly 2)");
        std::string deco;
        if (!occ[0].decoration.empty()) deco = occ[0].decoration;
        if (!occ[1].decoration.empty()) {
            if (!deco.empty() && deco != occ[1].decoration)
                throw parse_error("edge label " + name +
                                  " has conflicting decorations");
            deco = occ[1].decoration;
        }
        bld.connect(occ[0].vertex, occ[0].slot, occ[1].vertex, occ[1].slot,
                    deco);
    }

    if (!endpoint_names.empty() || saw_boundary_record) {
        if (boundary_names.size() != endpoint_names.size())
            throw parse_error("B record must list every endpoint exactly once");
        std::vector<int> bnd;
        std::set<std::string> seen;
        for (const auto& nm : boundary_names) {
            auto it = endpoint_by_name.find(nm);
            if (it == endpoint_by_name.end())
                throw parse_error("B lists unknown endpoint " + nm);
            if (!seen.insert(nm).second)
                throw parse_error("B repeats endpoint " + nm);
            bnd.push_back(it->second);
        }
        bld.set_boundary(bnd);
    }
    return bld.build(check_planarity);
}

namespace {

std::string serialize_impl(const Diagram& d, const char* sep) {
    std::ostringstream os;
    bool first = true;
    auto rec = [&](const std::string& r) {
        if (!first) os << sep;
        os << r;
        first = false;
    };
    if (!d.ruleset_name.empty()) rec("ruleset " + d.ruleset_name);
    if (d.free_circles > 0) rec("O " + std::to_string(d.free_circles));
    // edge labels in dart order
    std::vector<std::string> label(d.dart_count());
    int next_label = 0;
    for (int x = 0; x < d.dart_count(); ++x) {
        if (!label[x].empty()) continue;
        std::string l = "e" + std::to_string(next_label++);
        if (!d.dart_decoration[x].empty()) l += ":" + d.dart_decoration[x];
        label[x] = l;
        label[d.edge_pair[x]] = l;
    }
    std::map<int, int> endpoint_pos;
    for (std::size_t i = 0; i < d.boundary.size(); ++i)
        endpoint_pos[d.boundary[i]] = static_cast<int>(i) + 1;
    for (int v = 0; v < d.vertex_count(); ++v) {
        const auto& vx = d.vertices[v];
        std::ostringstream rs;
        switch (vx.kind) {
            case VertexKind::junction: rs << "V"; break;
            case VertexKind::crossing: rs << "X"; break;
            case VertexKind::endpoint:
                rs << "E " << endpoint_pos.at(v);
                break;
        }
        for (int x : vx.darts) rs << ' ' << label[x];
        rec(rs.str());
    }
    if (!d.boundary.empty()) {
        std::ostringstream rs;
        rs << "B";
        for (std::size_t i = 0; i < d.boundary.size(); ++i)
            rs << ' ' << (i + 1);
        rec(rs.str());
    }
    return os.str();
}

}  // namespace

std::string serialize_diagram(const Diagram& d) {
    std::string s = serialize_impl(d, "\n");
    if (!s.empty()) s += "\n";
    return s;
}

std::string serialize_diagram_compact(const Diagram& d) {
    return serialize_impl(d, "; ");
}

}  // namespace qskein
