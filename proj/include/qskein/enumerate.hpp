#pragma once

#include <string>
#include <vector>

#include "qskein/planar.hpp"

namespace qskein {

/// Exhaustive, duplicate-free generation of crossingless diagrams on n
/// cyclically ordered boundary points.
struct GenerateOptions {
    int n = 0;
    bool allow_junctions = true;
    bool allow_cycles = false;
    int min_interior_face_sides = 0;  // enforced only when cycles allowed
    int max_junctions = 0;
};
std::vector<Diagram> generate_crossingless(const GenerateOptions& opt);

/// Planar trivalent forests on n boundary points (the Ansatz basis).
std::vector<Diagram> enumerate_acyclic(int n);

/// Crossingless freeways (cycles allowed) whose interior faces all have at
/// least six sides. bound_log records the interior-vertex cap derivation.
struct NonposResult {
    std::vector<Diagram> diagrams;
    std::string bound_log;
};
NonposResult enumerate_nonpositive_curvature(int n);

/// Non-crossing perfect matchings on n points (n even), as diagrams.
std::vector<Diagram> enumerate_noncrossing_matchings(int n);

/// (number of non-crossing perfect matchings on 2n points, Catalan number)
std::pair<long, long> catalan_check(int n);

// -- matchings and the Berele correspondence ------------------------------

/// Fixed-point-free involution of {0..2n-1}; m[i] is the partner of i.
using Matching = std::vector<int>;

std::vector<Matching> enumerate_matchings(int size2n);

/// The forbidden pattern: indices a > b > c with
/// m[a] > m[b] > m[c] > a > b > c.
bool satisfies_sixpoint(const Matching& m);
std::vector<Matching> sixpoint_filter(const std::vector<Matching>& ms);

/// Chord diagram of a matching, with a tetravalent vertex at every chord
/// crossing (represented with crossing-kind vertices; the over marking
/// carries no meaning here).
Diagram matching_to_freeway(const Matching& m);

/// Strand-following inverse. Throws domain_error if the diagram has an
/// interior face with fewer than four sides.
Matching freeway_to_matching(const Diagram& d);

/// Two-row (or more) shape sequence of the insertion tableaux T_0..T_2n.
/// Shapes are row lengths, longest first.
using Shape = std::vector<int>;
struct UpDownTableau {
    std::vector<Shape> shapes;
};

UpDownTableau berele(const Matching& m);
int max_rows(const UpDownTableau& t);

/// Loops of length 2n at the origin of {a >= b >= 0} with unit steps.
long count_c2_lattice_paths(int size2n);

/// Number of up-down shape sequences of length 2n (any number of rows),
/// for cross-checking the bijection: equals (2n-1)!!.
long count_up_down_tableaux(int size2n);

}  // namespace qskein
