#ifndef QUARTIC_OPERATIONS_HPP
#define QUARTIC_OPERATIONS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/multigraph.hpp"

namespace quartic {

enum class OpDir { forward, reverse };

// One application of Operation kind (1..5).  The site lists the anchoring
// vertices in catalog order:
//
//   op1 fwd: x y z                 the eligible triangle, ascending
//   op1 rev: x y z a b c           a adj x,y; b adj y,z; c adj z,x; abc triangle
//   op2 fwd: x y z                 the eligible triangle, ascending
//   op2 rev: x y z a1 a2           a1,a2 the adjacent apexes of the K_{1,1,3}
//   op3 fwd: w p q                 w attachment, {p,q} the tripled pair
//   op3 rev: w s1 s2 t             w adj s1,s2; s1-s2 single; s1-t, s2-t double
//   op4 fwd: x y u v               cycle x-u-y-v, {u,v} doubled
//   op4 rev: x y c w1 w2           c adj all four others; w1 adj x; w2 adj y;
//                                  {w1,w2} doubled
//   op5 fwd: w b c d e             the op5-left block, catalog numbering
//   op5 rev: w p q                 w attachment, {p,q} the tripled pair
//
// Forward Ops 1-4 grow the graph by 3, 2, 1, 1 vertices; forward Op 5
// shrinks it by 2.  Reverses negate the deltas.
struct OpStep {
    int kind = 0;
    OpDir dir = OpDir::forward;
    std::vector<int> site;

    bool operator==(const OpStep&) const = default;
};

std::string to_string(const OpStep& step);

struct Triangle {
    std::array<int, 3> verts;  // ascending
    std::array<int, 3> mult;   // multiplicities of {v0,v1}, {v1,v2}, {v0,v2}
};

// All 3-vertex sets with all three pairs present.
std::vector<Triangle> triangles(const Multigraph& g);

// Eligible: removing one copy of each of the three edges keeps the triangle
// property, or one of the edges belongs to a triple edge.
bool is_eligible_triangle(const Multigraph& g, const std::array<int, 3>& t);

// All applicable sites of the given operation, deduplicated up to pattern
// automorphism and sorted by site vector.  Reverse sites require the interior
// pattern vertices to have all of their edges inside the pattern; reverse
// Ops 1-2 additionally require the restored triangle to be eligible in the
// result (so that the forward operation maps the result back).
std::vector<OpStep> find_sites(const Multigraph& g, int kind, OpDir dir);

struct ApplyResult {
    Multigraph graph;
    // old label -> new label for surviving vertices, -1 for deleted ones
    std::vector<int> relabel;
    // labels of the vertices the step introduced, in catalog order
    std::vector<int> created;
};

// Applies one step.  Throws std::invalid_argument if the site is not
// applicable (the same predicate find_sites uses).
ApplyResult apply(const Multigraph& g, const OpStep& step);

struct ReplayError : std::runtime_error {
    ReplayError(std::size_t index, const std::string& what)
        : std::runtime_error(what), step_index(index) {}
    std::size_t step_index;
};

// Folds apply over the steps; each step's site refers to the labels of the
// graph it is applied to.  Throws ReplayError naming the first bad step.
Multigraph replay(const Multigraph& base, const std::vector<OpStep>& steps);

// K_{1,1,3} as a (not necessarily induced) subgraph.
bool contains_k113(const Multigraph& g);

// An induced K_4 minus an edge with all five edges simple.
bool contains_induced_simple_k4_minus(const Multigraph& g);

}  // namespace quartic

#endif
