#ifndef QUARTIC_RECOGNIZE_HPP
#define QUARTIC_RECOGNIZE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quartic/multigraph.hpp"
#include "quartic/operations.hpp"

namespace quartic {

// Every present pair lies in a triangle.
bool has_triangle_property(const Multigraph& g);

// Equivalent criterion: no open neighbourhood graph has an isolated vertex.
bool neighborhood_criterion(const Multigraph& g);

// n such that g is isomorphic to the squared n-cycle, if any.
std::optional<int> recognize_squared_cycle(const Multigraph& g);

// Thrown when an input satisfying the preconditions of classify nevertheless
// escapes the characterized classes; for valid inputs this indicates a bug.
struct NotInClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Repeatedly applies the reverse of Operations 1-4 (kind priority 2,1,3,4,
// smallest site first) until no reverse site remains.  Returns the terminal
// graph G' and forward steps with the property replay(G', steps) ~= g.
// Requires g connected, 4-regular, with the triangle property.
std::pair<Multigraph, std::vector<OpStep>> reduce(const Multigraph& g);

struct SimplifyResult {
    Multigraph simple;
    // simple-graph vertex -> input vertex
    std::vector<int> to_input;
    // (kept, deleted) endpoints of each double edge, input labels
    std::vector<std::pair<int, int>> twin_log;
    // endpoints of each triple edge, input labels
    std::vector<std::pair<int, int>> triple_log;
};

// Reduces every triple edge to a single edge and deletes one endpoint of
// every double edge (the endpoints must be twins; double edges must form a
// matching).  Throws std::invalid_argument when the input is outside the
// shape this inversion handles.
SimplifyResult simplify_for_inverse(const Multigraph& g);

struct InverseLineGraph {
    Multigraph root;  // triangle-free
    // input vertex -> the root edge (u < v) it corresponds to
    std::vector<std::pair<int, int>> edge_of;
};

// The unique triangle-free graph F with line_multigraph(F) isomorphic to the
// given simple connected K_{1,3}-free, K4-minus-free graph, via the maximal
// clique partition (each vertex lies in at most two maximal cliques).
InverseLineGraph inverse_line_graph_triangle_free(const Multigraph& s);

// A partition of the edge instances into vertex triples, each triple using
// one copy of each of its three pairs, if one exists.  A 4-regular graph
// with such a partition is the line multigraph of a cubic multigraph.
std::optional<std::vector<std::array<int, 3>>> triangle_partition(
    const Multigraph& g);

struct CubicRoot {
    Multigraph root;  // connected cubic multigraph M
    // iso[v] = the vertex of line_multigraph(root) that v maps to
    std::vector<int> iso;
};

// The cubic multigraph whose line multigraph realizes the given partition:
// one root vertex per triangle, one root edge per input vertex.
CubicRoot cubic_root_from_partition(const Multigraph& g,
                                    const std::vector<std::array<int, 3>>& part);

enum class BaseTag { squared_cycle, five_vertex, line_of_cubic };

struct Classification {
    BaseTag tag = BaseTag::squared_cycle;
    int cycle_length = 0;  // squared_cycle only
    Multigraph root;       // line_of_cubic only: the cubic multigraph M
    // forward steps; replay(base_graph(*this), steps) ~= the classified graph
    std::vector<OpStep> steps;
};

// squared_cycle(n), five_vertex_exception(), or line_multigraph(root).
Multigraph base_graph(const Classification& c);

struct Certificate {
    std::vector<std::uint8_t> input_code;  // canonical code of the input
    Classification classification;
};

// Theorem-style classification.  Requires g connected, 4-regular, with the
// triangle property, on at least 3 vertices (std::invalid_argument
// otherwise); throws NotInClassError when no classification is found.
Certificate classify(const Multigraph& g);

// Corollary-style classification for simple inputs on >= 5 vertices: a
// squared cycle, or line_multigraph(cubic root) plus Op2 steps only.
Certificate classify_simple(const Multigraph& g);

}  // namespace quartic

#endif
