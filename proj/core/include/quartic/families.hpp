#ifndef QUARTIC_FAMILIES_HPP
#define QUARTIC_FAMILIES_HPP

#include <string>
#include <vector>

#include "quartic/multigraph.hpp"

namespace quartic {

// Squared n-cycle: Cayley multigraph on Z_n with connection multiset
// {+-1, +-2}.  One code path for all n: each i contributes one copy of
// {i,i+1} and one of {i,i+2} (mod n), so n=3 yields all pairs doubled and
// n=4 a 4-cycle with both diagonals doubled.
Multigraph squared_cycle(int n);

struct EdgeInstance {
    int u, v;   // u < v
    int copy;   // 0-based among parallel copies
};

struct LineMultigraph {
    Multigraph graph;
    // instances[i] is the edge of the root graph that became vertex i,
    // ordered lexicographically by (u, v, copy).  This ordering is part of
    // the contract: certificates rely on it being stable.
    std::vector<EdgeInstance> instances;
};

// Line multigraph: one vertex per edge instance; two vertices are joined by
// k edges when the underlying edges share k endpoints (so parallel edges of
// the root become a double edge).
LineMultigraph line_multigraph_with_instances(const Multigraph& g);
Multigraph line_multigraph(const Multigraph& g);

// The exceptional 5-vertex 4-regular multigraph with the triangle property:
// two double pairs {0,1} and {3,4}, centre vertex 2 adjacent to all others,
// plus edges 0-3 and 1-4.  The only applicable operation is reverse Op 4,
// which recovers the squared 4-cycle.
Multigraph five_vertex_exception();

// Catalog of named fixture graphs.  Names:
//   "k113"      complete tripartite K_{1,1,3}: apexes 0,1 adjacent, both
//               adjacent to the independent vertices 2,3,4
//   "op5-left"  5-vertex block replaced by Operation 5: attachment 0,
//               triangle 0-1-2, vertex 3 adjacent to 1,2, vertex 4 adjacent
//               to 1,2 and doubly to 3
//   "op5-right" triangle with a tripled edge: attachment 0 adjacent to 1 and
//               2, pair {1,2} of multiplicity 3
//   "fig8-a"    op5-left with the triangle {1,3,4} pulled apart (8 vertices,
//               4-regular except the degree-2 attachment 0)
//   "fig8-b"    op5-left with the triangle {0,1,2} pulled apart (same shape
//               data, the other inequivalent choice)
Multigraph named_block(const std::string& name);

std::vector<std::string> named_block_names();

}  // namespace quartic

#endif
