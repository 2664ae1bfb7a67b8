#include "quartic/families.hpp"

#include <stdexcept>

namespace quartic {

Multigraph squared_cycle(int n) {
    if (n < 3) throw std::invalid_argument("squared_cycle: n must be >= 3");
    Multigraph::Builder b(n);
    for (int i = 0; i < n; ++i) {
        b.add_edge(i, (i + 1) % n);
        b.add_edge(i, (i + 2) % n);
    }
    return b.build();
}

LineMultigraph line_multigraph_with_instances(const Multigraph& g) {
    std::vector<EdgeInstance> inst;
    for (auto [u, v] : g.present_pairs())
        for (int c = 0; c < g.multiplicity(u, v); ++c)
            inst.push_back({u, v, c});
    const int m = static_cast<int>(inst.size());
    Multigraph::Builder b(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            int shared = 0;
            shared += inst[i].u == inst[j].u || inst[i].u == inst[j].v;
            shared += inst[i].v == inst[j].u || inst[i].v == inst[j].v;
            if (shared > 0) b.set_multiplicity(i, j, shared);
        }
    }
    return {b.build(), std::move(inst)};
}

Multigraph line_multigraph(const Multigraph& g) {
    return line_multigraph_with_instances(g).graph;
}

Multigraph five_vertex_exception() {
    return Multigraph::from_edges(5, {
        {0, 1, 2}, {3, 4, 2},
        {2, 0, 1}, {2, 1, 1}, {2, 3, 1}, {2, 4, 1},
        {0, 3, 1}, {1, 4, 1},
    });
}

Multigraph named_block(const std::string& name) {
    if (name == "k113")
        return Multigraph::from_edges(5, {
            {0, 1, 1},
            {0, 2, 1}, {0, 3, 1}, {0, 4, 1},
            {1, 2, 1}, {1, 3, 1}, {1, 4, 1},
        });
    if (name == "op5-left")
        // attachment 0; 1,2 the triangle partners; 3,4 the far pair with the
        // double edge between them
        return Multigraph::from_edges(5, {
            {0, 1, 1}, {0, 2, 1}, {1, 2, 1},
            {1, 3, 1}, {2, 3, 1},
            {1, 4, 1}, {2, 4, 1},
            {3, 4, 2},
        });
    if (name == "op5-right")
        return Multigraph::from_edges(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 3}});
    if (name == "fig8-a")
        // op5-left with the triangle {1,3,4} (one copy of 3-4) replaced by
        // paths through 5 (on 1-3), 6 (on 3-4), 7 (on 4-1) and the new
        // triangle 5-6-7
        return Multigraph::from_edges(8, {
            {0, 1, 1}, {0, 2, 1}, {1, 2, 1},
            {2, 3, 1}, {2, 4, 1}, {3, 4, 1},
            {1, 5, 1}, {5, 3, 1},
            {3, 6, 1}, {6, 4, 1},
            {4, 7, 1}, {7, 1, 1},
            {5, 6, 1}, {6, 7, 1}, {7, 5, 1},
        });
    if (name == "fig8-b")
        // op5-left with the triangle {0,1,2} replaced by paths through
        // 5 (on 0-1), 6 (on 1-2), 7 (on 2-0) and the new triangle 5-6-7
        return Multigraph::from_edges(8, {
            {1, 3, 1}, {2, 3, 1}, {1, 4, 1}, {2, 4, 1}, {3, 4, 2},
            {0, 5, 1}, {5, 1, 1},
            {1, 6, 1}, {6, 2, 1},
            {2, 7, 1}, {7, 0, 1},
            {5, 6, 1}, {6, 7, 1}, {7, 5, 1},
        });
    throw std::invalid_argument("named_block: unknown name '" + name + "'");
}

std::vector<std::string> named_block_names() {
    return {"k113", "op5-left", "op5-right", "fig8-a", "fig8-b"};
}

}  // namespace quartic
