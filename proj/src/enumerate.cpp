#include "qskein/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qskein/laurent.hpp"

namespace qskein {

// ---------------------------------------------------------------------------
// Frontier search over rotation systems. The state tracks, for each open
// region of the disk, the circular sequence of items its boundary walk
// meets: open slots, boundary arcs, and committed edge sides. Connecting
// two slots of one region splits it; a region closing with no slot and no
// arc is a finished interior face.
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum Kind { slot, arc, side } kind;
    int vertex = -1;  // slot only
    int pos = -1;     // slot index at the vertex
};

struct SearchState {
    int n_endpoints;
    int junctions = 0;
    std::vector<std::vector<Token>> regions;
    std::vector<std::array<int, 4>> edges;  // v1, s1, v2, s2
    std::vector<int> uf;

    int find(int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    }
};

struct Generator {
    GenerateOptions opt;
    std::vector<Diagram> out;
    std::set<std::string> seen;

    void emit(SearchState& st) {
        DiagramBuilder b;
        std::vector<int> vmap(st.n_endpoints + st.junctions);
        std::vector<int> bnd;
        for (int i = 0; i < st.n_endpoints; ++i) {
            vmap[i] = b.add_endpoint();
            bnd.push_back(vmap[i]);
        }
        for (int j = 0; j < st.junctions; ++j)
            vmap[st.n_endpoints + j] = b.add_junction();
        for (const auto& e : st.edges)
            b.connect(vmap[e[0]], e[1], vmap[e[2]], e[3]);
        b.set_boundary(bnd);
        Diagram d = b.build(true);
        std::string code = canonical_code(d);
        if (seen.insert(code).second) out.push_back(std::move(d));
    }

    // first open slot in creation order over all regions
    bool first_slot(SearchState& st, int* region, int* index) const {
        int best_v = -1, best_p = -1;
        for (std::size_t r = 0; r < st.regions.size(); ++r)
            for (std::size_t i = 0; i < st.regions[r].size(); ++i) {
                const Token& t = st.regions[r][i];
                if (t.kind != Token::slot) continue;
                if (best_v < 0 || t.vertex < best_v ||
                    (t.vertex == best_v && t.pos < best_p)) {
                    best_v = t.vertex;
                    best_p = t.pos;
                    *region = static_cast<int>(r);
                    *index = static_cast<int>(i);
                }
            }
        return best_v >= 0;
    }

    // Split the region at slot positions i < j into two parts, each closed
    // by one side of the new edge. Returns false if a completed interior
    // face violates the constraints.
    bool split_region(SearchState& st, int r, int i, int j) {
        std::vector<Token> between, around;
        const std::vector<Token>& reg = st.regions[r];
        int len = static_cast<int>(reg.size());
        for (int k = (i + 1) % len; k != j; k = (k + 1) % len)
            between.push_back(reg[k]);
        for (int k = (j + 1) % len; k != i; k = (k + 1) % len)
            around.push_back(reg[k]);
        between.push_back({Token::side});
        around.push_back({Token::side});
        st.regions.erase(st.regions.begin() + r);
        for (auto& part : {std::move(between), std::move(around)}) {
            bool has_slot = false, has_arc = false;
            int sides = 0;
            for (const Token& t : part) {
                has_slot |= t.kind == Token::slot;
                has_arc |= t.kind == Token::arc;
                sides += t.kind == Token::side;
            }
            if (has_slot) {
                st.regions.push_back(part);
            } else if (!has_arc) {
                // finished interior face
                if (!opt.allow_cycles) return false;
                if (sides < opt.min_interior_face_sides) return false;
            }
            // finished pockets are simply dropped
        }
        return true;
    }

    void search(SearchState st) {
        int r = -1, i = -1;
        if (!first_slot(st, &r, &i)) {
            emit(st);
            return;
        }
        Token me = st.regions[r][i];

        // connect to every other slot of the same region
        const auto& reg = st.regions[r];
        for (int j = 0; j < static_cast<int>(reg.size()); ++j) {
            if (j == static_cast<int>(i)) continue;
            if (reg[j].kind != Token::slot) continue;
            Token other = reg[j];
            SearchState next = st;
            int ra = next.find(me.vertex), rb = next.find(other.vertex);
            if (ra == rb) {
                if (!opt.allow_cycles) continue;
            } else {
                next.uf[ra] = rb;
            }
            next.edges.push_back({me.vertex, me.pos, other.vertex, other.pos});
            if (split_region(next, r, i, j)) search(std::move(next));
        }

        // or spawn a junction at this slot
        if (opt.allow_junctions && st.junctions < opt.max_junctions) {
            SearchState next = st;
            int u = next.n_endpoints + next.junctions;
            ++next.junctions;
            next.uf.push_back(u);
            next.uf[next.find(me.vertex)] = u;
            next.edges.push_back({me.vertex, me.pos, u, 0});
            // the region walk meets the junction's remaining slots in
            // reverse rotation order
            std::vector<Token> repl = {{Token::side},
                                       {Token::slot, u, 2},
                                       {Token::slot, u, 1},
                                       {Token::side}};
            auto& reg2 = next.regions[r];
            reg2.erase(reg2.begin() + i);
            reg2.insert(reg2.begin() + i, repl.begin(), repl.end());
            search(std::move(next));
        }
    }
};

}  // namespace

std::vector<Diagram> generate_crossingless(const GenerateOptions& opt) {
    Generator g;
    g.opt = opt;
    SearchState st;
    st.n_endpoints = opt.n;
    st.uf.resize(opt.n);
    for (int i = 0; i < opt.n; ++i) st.uf[i] = i;
    if (opt.n > 0) {
        std::vector<Token> init;
        for (int i = 0; i < opt.n; ++i) {
            init.push_back({Token::slot, i, 0});
            init.push_back({Token::arc});
        }
        st.regions.push_back(std::move(init));
    }
    g.search(std::move(st));
    // canonical order for stable output
    std::sort(g.out.begin(), g.out.end(),
              [](const Diagram& a, const Diagram& b) {
                  return canonical_code(a) < canonical_code(b);
              });
    return std::move(g.out);
}

std::vector<Diagram> enumerate_acyclic(int n) {
    if (n < 0) throw domain_error("negative boundary arity");
    GenerateOptions opt;
    opt.n = n;
    opt.allow_junctions = true;
    opt.allow_cycles = false;
    opt.max_junctions = std::max(0, n - 2);
    return generate_crossingless(opt);
}

NonposResult enumerate_nonpositive_curvature(int n) {
    if (n < 0) throw domain_error("negative boundary arity");
    NonposResult res;
    GenerateOptions opt;
    opt.n = n;
    opt.allow_junctions = true;
    opt.allow_cycles = true;
    opt.min_interior_face_sides = 6;
    // Interior-vertex cap from combinatorial Gauss-Bonnet. Closing the disk
    // with rim arcs, every face contributes 1 - sides/6 and the total is 2.
    // Interior faces contribute <= 0, the outer face 1 - n/6, and each of
    // the P <= n pockets at most 5/6, which yields for the pocket side
    // count S_P <= 6(P - 1) - 2n <= 4n - 6. Every perimeter vertex of the
    // union of interior faces spends one outward edge whose sides lie in
    // pockets, so 2p <= S_P and the interior region has perimeter
    // p <= 2n - 3. A nonpositively curved trivalent patch with perimeter p
    // has at most p^2/12 + 1 faces (the hexagonal isoperimetric inequality;
    // flat honeycombs are the extremal case), each face has at most p + 6
    // vertices beyond its neighbors' shares, and hanging trees carry at
    // most n - 1 further junctions. The cap below is a safe integer bound.
    int p = std::max(0, 2 * n - 3);
    opt.max_junctions =
        std::max(std::max(0, n - 2), (p * p / 12 + 1) * 4 + (n - 1));
    {
        std::ostringstream log;
        log << "interior-vertex cap " << opt.max_junctions << " for n=" << n
            << ": pockets P<=n give pocket sides S_P<=4n-6=" << (4 * n - 6)
            << ", interior-region perimeter p<=S_P/2=" << p
            << ", isoperimetric face bound p^2/12+1=" << (p * p / 12 + 1)
            << ", plus hanging trees <= n-1";
        res.bound_log = log.str();
    }
    res.diagrams = generate_crossingless(opt);
    return res;
}

std::vector<Diagram> enumerate_noncrossing_matchings(int n) {
    GenerateOptions opt;
    opt.n = n;
    opt.allow_junctions = false;
    opt.allow_cycles = false;
    opt.max_junctions = 0;
    return generate_crossingless(opt);
}

std::pair<long, long> catalan_check(int n) {
    long generated =
        static_cast<long>(enumerate_noncrossing_matchings(2 * n).size());
    Int cat = 1;
    for (int k = 0; k < n; ++k) {
        cat = cat * 2 * (2 * k + 1);
        cat /= (k + 2);
    }
    return {generated, cat.get_si()};
}

// -- matchings -------------------------------------------------------------

std::vector<Matching> enumerate_matchings(int size2n) {
    if (size2n % 2 != 0) throw domain_error("matchings need an even size");
    std::vector<Matching> out;
    Matching cur(size2n, -1);
    auto rec = [&](auto&& self) -> void {
        int first = -1;
        for (int i = 0; i < size2n; ++i)
            if (cur[i] < 0) {
                first = i;
                break;
            }
        if (first < 0) {
            out.push_back(cur);
            return;
        }
        for (int j = first + 1; j < size2n; ++j) {
            if (cur[j] >= 0) continue;
            cur[first] = j;
            cur[j] = first;
            self(self);
            cur[first] = -1;
            cur[j] = -1;
        }
    };
    rec(rec);
    return out;
}

bool satisfies_sixpoint(const Matching& m) {
    int n = static_cast<int>(m.size());
    // violating triple: c < b < a < m[c] < m[b] < m[a]
    for (int a = 0; a < n; ++a) {
        if (m[a] <= a) continue;
        for (int b = 0; b < a; ++b) {
            if (m[b] <= a || m[b] >= m[a]) continue;
            for (int c = 0; c < b; ++c)
                if (m[c] > a && m[c] < m[b]) return false;
        }
    }
    return true;
}

std::vector<Matching> sixpoint_filter(const std::vector<Matching>& ms) {
    std::vector<Matching> out;
    for (const auto& m : ms)
        if (satisfies_sixpoint(m)) out.push_back(m);
    return out;
}

// -- chord diagrams ----------------------------------------------------------

namespace {

struct Pt {
    Rat x, y;
};

// rational points on the unit circle in counterclockwise order
Pt circle_point(int k) {
    Rat t(k);
    Rat den = 1 + t * t;
    return {(1 - t * t) / den, 2 * t / den};
}

Rat cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Diagram matching_to_freeway(const Matching& m) {
    int n2 = static_cast<int>(m.size());
    std::vector<Pt> pts;
    for (int i = 0; i < n2; ++i) pts.push_back(circle_point(i));

    struct Chord {
        int a, b;  // a < b
    };
    std::vector<Chord> chords;
    for (int i = 0; i < n2; ++i)
        if (m[i] > i) chords.push_back({i, m[i]});

    auto interleaved = [](const Chord& c, const Chord& d) {
        return (c.a < d.a && d.a < c.b && c.b < d.b) ||
               (d.a < c.a && c.a < d.b && d.b < c.b);
    };

    // crossing points, exact
    struct Crossing {
        int c1, c2;
        Pt p;
        int vertex = -1;
    };
    std::vector<Crossing> crossings;
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            if (!interleaved(chords[i], chords[j])) continue;
            const Pt& p1 = pts[chords[i].a];
            const Pt& p2 = pts[chords[i].b];
            const Pt& p3 = pts[chords[j].a];
            const Pt& p4 = pts[chords[j].b];
            Rat d = (p2.x - p1.x) * (p4.y - p3.y) -
                    (p2.y - p1.y) * (p4.x - p3.x);
            Rat t = ((p3.x - p1.x) * (p4.y - p3.y) -
                     (p3.y - p1.y) * (p4.x - p3.x)) /
                    d;
            crossings.push_back({static_cast<int>(i), static_cast<int>(j),
                                 {p1.x + t * (p2.x - p1.x),
                                  p1.y + t * (p2.y - p1.y)}});
        }

    DiagramBuilder b;
    std::vector<int> ep(n2);
    for (int i = 0; i < n2; ++i) ep[i] = b.add_endpoint();
    for (auto& c : crossings) c.vertex = b.add_crossing();

    // for each chord, the stations along it: endpoint, crossings sorted by
    // position, endpoint
    struct Station {
        int vertex;
        Pt at;
        bool is_crossing;
        int crossing_index;
    };
    int edge_label = 0;
    std::vector<std::vector<std::pair<int, int>>> pending(
        crossings.size());  // per crossing: (station slot assignments)

    // slot assignment at a crossing: four darts in ccw order around the
    // point, determined by exact angular sort of the four segment directions
    std::vector<std::array<int, 4>> cross_dirs(crossings.size());
    // direction targets: for crossing k on chords c1 (a1<b1), c2: the four
    // neighbors along the chords; filled after sorting stations.

    std::vector<std::vector<Station>> lines(chords.size());
    for (std::size_t ci = 0; ci < chords.size(); ++ci) {
        std::vector<Station> st;
        st.push_back({ep[chords[ci].a], pts[chords[ci].a], false, -1});
        std::vector<int> here;
        for (std::size_t k = 0; k < crossings.size(); ++k)
            if (crossings[k].c1 == static_cast<int>(ci) ||
                crossings[k].c2 == static_cast<int>(ci))
                here.push_back(static_cast<int>(k));
        const Pt& origin = pts[chords[ci].a];
        std::sort(here.begin(), here.end(), [&](int u, int v) {
            // order along the chord by squared distance from the start
            Rat du = (crossings[u].p.x - origin.x) * (crossings[u].p.x - origin.x) +
                     (crossings[u].p.y - origin.y) * (crossings[u].p.y - origin.y);
            Rat dv = (crossings[v].p.x - origin.x) * (crossings[v].p.x - origin.x) +
                     (crossings[v].p.y - origin.y) * (crossings[v].p.y - origin.y);
            if (du != dv) return du < dv;
            return u < v;  // deterministic tie-break for concurrencies
        });
        for (int k : here)
            st.push_back({crossings[k].vertex, crossings[k].p, true, k});
        st.push_back({ep[chords[ci].b], pts[chords[ci].b], false, -1});
        lines[ci] = std::move(st);
    }

    // assign crossing slots: we need, at each crossing, the ccw order of its
    // four neighbor stations
    struct Leg {
        int crossing;
        Pt toward;
        int station_vertex;
        int station_slot;  // filled later via pending edges
        int chord;
        int index_on_chord;
    };
    // collect neighbor directions per crossing
    std::vector<std::vector<int>> legs_at(crossings.size());
    std::vector<Leg> legs;
    for (std::size_t ci = 0; ci < chords.size(); ++ci) {
        auto& st = lines[ci];
        for (std::size_t s = 0; s + 1 < st.size(); ++s) {
            // segment between station s and s+1 contributes a leg to each
            // crossing endpoint
            if (st[s].is_crossing) {
                legs.push_back({st[s].crossing_index, st[s + 1].at, -1, -1,
                                static_cast<int>(ci), static_cast<int>(s)});
                legs_at[st[s].crossing_index].push_back(
                    static_cast<int>(legs.size()) - 1);
            }
            if (st[s + 1].is_crossing) {
                legs.push_back({st[s + 1].crossing_index, st[s].at, -1, -1,
                                static_cast<int>(ci), static_cast<int>(s)});
                legs_at[st[s + 1].crossing_index].push_back(
                    static_cast<int>(legs.size()) - 1);
            }
        }
    }
    // ccw sort of the four legs at each crossing
    auto half = [](const Pt& c, const Pt& q) {
        // 0 for angle in [0, pi), 1 for [pi, 2pi)
        if (q.y > c.y) return 0;
        if (q.y < c.y) return 1;
        return q.x > c.x ? 0 : 1;
    };
    std::vector<std::array<int, 4>> slot_of(crossings.size());
    for (std::size_t k = 0; k < crossings.size(); ++k) {
        auto& ls = legs_at[k];
        if (ls.size() != 4) throw internal_error("crossing without 4 legs");
        const Pt c = crossings[k].p;
        std::sort(ls.begin(), ls.end(), [&](int u, int v) {
            int hu = half(c, legs[u].toward), hv = half(c, legs[v].toward);
            if (hu != hv) return hu < hv;
            return cross(c, legs[u].toward, legs[v].toward) > 0;
        });
        for (int s = 0; s < 4; ++s) slot_of[k][s] = ls[s];
    }
    // lay edges chord by chord
    auto slot_for_leg = [&](int crossing, int chord, int idx) {
        for (int s = 0; s < 4; ++s) {
            const Leg& l = legs[slot_of[crossing][s]];
            if (l.chord == chord && l.index_on_chord == idx) return s;
        }
        throw internal_error("crossing slot lookup failed");
    };
    for (std::size_t ci = 0; ci < chords.size(); ++ci) {
        auto& st = lines[ci];
        for (std::size_t s = 0; s + 1 < st.size(); ++s) {
            int v1 = st[s].vertex;
            int v2 = st[s + 1].vertex;
            int slot1 = 0, slot2 = 0;
            if (st[s].is_crossing)
                slot1 = slot_for_leg(st[s].crossing_index,
                                     static_cast<int>(ci),
                                     static_cast<int>(s));
            if (st[s + 1].is_crossing)
                slot2 = slot_for_leg(st[s + 1].crossing_index,
                                     static_cast<int>(ci),
                                     static_cast<int>(s));
            b.connect(v1, slot1, v2, slot2);
            ++edge_label;
        }
    }
    std::vector<int> bnd(ep.begin(), ep.end());
    b.set_boundary(bnd);
    return b.build(true);
}

Matching freeway_to_matching(const Diagram& d) {
    for (const Face& f : faces(d))
        if (!f.touches_boundary && f.sides < 4)
            throw domain_error(
                "freeway has an interior face with fewer than four sides");
    int n = d.endpoint_count();
    Matching m(n, -1);
    for (int i = 0; i < n; ++i) {
        if (m[i] >= 0) continue;
        int dart = d.vertices[d.boundary[i]].darts[0];
        while (true) {
            int far = d.edge_pair[dart];
            const auto& v = d.vertices[d.dart_vertex[far]];
            if (v.kind == VertexKind::endpoint) {
                // locate boundary index
                for (int j = 0; j < n; ++j)
                    if (d.boundary[j] == d.dart_vertex[far]) {
                        m[i] = j;
                        m[j] = i;
                        break;
                    }
                break;
            }
            if (v.kind != VertexKind::crossing)
                throw domain_error("freeway_to_matching: junction found");
            dart = v.darts[(d.dart_slot[far] + 2) % 4];  // straight through
        }
    }
    return m;
}

// -- Berele insertion --------------------------------------------------------

namespace {

constexpr int INF = 1 << 30;

struct Tableau {
    // rows of finite entries, weakly增 across rows and down columns
    std::vector<std::vector<int>> rows;

    int at(int r, int c) const {
        if (r >= static_cast<int>(rows.size())) return INF;
        if (c >= static_cast<int>(rows[r].size())) return INF;
        return rows[r][c];
    }
    void put(int r, int c, int v) {
        while (r >= static_cast<int>(rows.size())) rows.emplace_back();
        while (c >= static_cast<int>(rows[r].size()))
            rows[r].push_back(INF);
        rows[r][c] = v;
    }
    void tidy() {
        for (auto& row : rows)
            while (!row.empty() && row.back() == INF) row.pop_back();
        while (!rows.empty() && rows.back().empty()) rows.pop_back();
    }
    Shape shape() const {
        Shape s;
        for (const auto& row : rows)
            if (!row.empty()) s.push_back(static_cast<int>(row.size()));
        return s;
    }
};

// Column Schensted insertion: replace the highest entry of the current
// column greater than x; if it was finite, insert it into the next column.
void column_insert(Tableau& t, int x) {
    int col = 0;
    while (true) {
        int r = 0;
        while (t.at(r, col) <= x) ++r;
        int bumped = t.at(r, col);
        t.put(r, col, x);
        if (bumped == INF) return;
        x = bumped;
        ++col;
    }
}

// Berele deletion: replace the entry x by infinity, then repeatedly swap
// the misplaced infinity with the smaller of the entries below and to the
// right until the array is a tableau again.
void berele_delete(Tableau& t, int x) {
    int r0 = -1, c0 = -1;
    for (int r = 0; r < static_cast<int>(t.rows.size()) && r0 < 0; ++r)
        for (int c = 0; c < static_cast<int>(t.rows[r].size()); ++c)
            if (t.rows[r][c] == x) {
                r0 = r;
                c0 = c;
                break;
            }
    if (r0 < 0) throw internal_error("berele_delete: entry not present");
    int r = r0, c = c0;
    t.put(r, c, INF);
    while (true) {
        int below = t.at(r + 1, c);
        int right = t.at(r, c + 1);
        if (below == INF && right == INF) break;
        if (below < right) {
            t.put(r, c, below);
            ++r;
        } else {
            t.put(r, c, right);
            ++c;
        }
        t.put(r, c, INF);
    }
    t.tidy();
}

}  // namespace

UpDownTableau berele(const Matching& m) {
    int n2 = static_cast<int>(m.size());
    Tableau t;
    UpDownTableau out;
    out.shapes.push_back({});
    for (int i = 0; i < n2; ++i) {
        if (m[i] > i)
            column_insert(t, m[i] + 1);  // entries are 1-based partners
        else
            berele_delete(t, i + 1);
        out.shapes.push_back(t.shape());
    }
    return out;
}

int max_rows(const UpDownTableau& t) {
    int mx = 0;
    for (const Shape& s : t.shapes)
        mx = std::max(mx, static_cast<int>(s.size()));
    return mx;
}

long count_c2_lattice_paths(int size2n) {
    if (size2n % 2 != 0) return 0;
    std::map<std::pair<int, int>, long> cur;
    cur[{0, 0}] = 1;
    for (int step = 0; step < size2n; ++step) {
        std::map<std::pair<int, int>, long> next;
        for (const auto& [ab, k] : cur) {
            auto [a, b] = ab;
            const int da[4] = {1, -1, 0, 0};
            const int db[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                int na = a + da[d], nb = b + db[d];
                if (na >= nb && nb >= 0) next[{na, nb}] += k;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find({0, 0});
    return it == cur.end() ? 0 : it->second;
}

long count_up_down_tableaux(int size2n) {
    if (size2n % 2 != 0) return 0;
    std::map<Shape, long> cur;
    cur[{}] = 1;
    for (int step = 0; step < size2n; ++step) {
        std::map<Shape, long> next;
        for (const auto& [shape, k] : cur) {
            // add a box
            for (int r = 0; r <= static_cast<int>(shape.size()); ++r) {
                Shape s = shape;
                if (r == static_cast<int>(shape.size()))
                    s.push_back(1);
                else
                    ++s[r];
                bool ok = true;
                for (std::size_t i = 1; i < s.size(); ++i)
                    if (s[i] > s[i - 1]) ok = false;
                if (ok) next[s] += k;
            }
            // remove a box
            for (int r = 0; r < static_cast<int>(shape.size()); ++r) {
                Shape s = shape;
                --s[r];
                if (s[r] == 0 && r + 1 != static_cast<int>(s.size())) {
                    // removing can only empty the last row
                }
                bool ok = true;
                for (std::size_t i = 1; i < s.size(); ++i)
                    if (s[i] > s[i - 1]) ok = false;
                if (!s.empty() && s.back() == 0) s.pop_back();
                for (int v : s)
                    if (v <= 0) ok = false;
                if (ok) next[s] += k;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find({});
    return it == cur.end() ? 0 : it->second;
}

}  // namespace qskein
