#ifndef QUARTIC_MULTIGRAPH_HPP
#define QUARTIC_MULTIGRAPH_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace quartic {

// Loopless undirected multigraph on vertices 0..n-1.  Edge multiplicities are
// capped at 4 (a 4-regular graph never needs more); construction of a loop or
// of a higher multiplicity throws std::invalid_argument.
//
// Values are immutable after construction: everything that "modifies" a graph
// returns a new value.  Use Builder to assemble one.
class Multigraph {
public:
    Multigraph() : n_(0) {}
    explicit Multigraph(int n);

    class Builder {
    public:
        explicit Builder(int n);
        explicit Builder(const Multigraph& g);
        // Adds k parallel copies of edge {u,v}.
        Builder& add_edge(int u, int v, int k = 1);
        // Sets the multiplicity of {u,v} to m (0 removes the pair).
        Builder& set_multiplicity(int u, int v, int m);
        int multiplicity(int u, int v) const;
        Multigraph build() const;

    private:
        int n_;
        std::vector<std::uint8_t> mult_;
    };

    // Edges given as (u, v, multiplicity) triples.
    static Multigraph from_edges(int n,
                                 const std::vector<std::tuple<int, int, int>>& edges);

    int vertex_count() const { return n_; }
    int multiplicity(int u, int v) const;
    int degree(int v) const;
    bool is_k_regular(int k) const;
    bool is_simple() const;

    // Number of vertex pairs with multiplicity >= 1.
    int pair_count() const;
    // Total number of edge instances (sum of multiplicities).
    int edge_count() const;
    // Present pairs (u < v) in lexicographic order.
    std::vector<std::pair<int, int>> present_pairs() const;
    // Distinct neighbours of v, ascending.
    std::vector<int> neighbors(int v) const;

    // Induced submultigraph on the given vertex set; vertices are renumbered
    // 0..k-1 in the order given.
    Multigraph induced(const std::vector<int>& verts) const;
    // Induced submultigraph on the distinct neighbours of v (v excluded).
    Multigraph open_neighborhood_graph(int v) const;

    // Connectivity of the underlying simple graph; a single vertex counts as
    // connected, the empty graph does too.
    bool is_connected() const;
    // Blocks (maximal 2-connected subgraphs) of the underlying simple graph,
    // as vertex sets.  Bridges are 2-vertex blocks; isolated vertices are
    // singleton blocks.  Each set is sorted; the list is sorted as well.
    std::vector<std::vector<int>> blocks() const;

    bool operator==(const Multigraph& other) const = default;

private:
    int n_;
    std::vector<std::uint8_t> mult_;  // n*n symmetric, zero diagonal

    friend class Builder;
};

// ---- canonical labeling -------------------------------------------------

struct CanonicalForm {
    std::vector<std::uint8_t> code;  // total-order-comparable byte string
    std::vector<int> labeling;       // labeling[v] = position of v in canonical order
};

// Exact canonical form via iterative signature refinement plus backtracking
// over the refined cells.  No size cap; intended for small graphs (the cost
// grows quickly past a few dozen vertices).
CanonicalForm canonical_form(const Multigraph& g);

// Spec'd entry points, guarded at 16 vertices.
std::vector<std::uint8_t> canonical_code(const Multigraph& g);
bool is_isomorphic(const Multigraph& a, const Multigraph& b);

// Explicit isomorphism a -> b derived from the canonical labelings, or empty
// if the graphs are not isomorphic.  Not size-capped.
std::vector<int> find_isomorphism(const Multigraph& a, const Multigraph& b);

std::string code_hex(const std::vector<std::uint8_t>& code);

}  // namespace quartic

#endif
