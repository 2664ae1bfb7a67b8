#include "quartic/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace quartic {

namespace {

constexpr int kMaxMultiplicity = 4;

void check_vertex(int v, int n) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
}

}  // namespace

Multigraph::Multigraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    mult_.assign(static_cast<std::size_t>(n) * n, 0);
}

Multigraph::Builder::Builder(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    mult_.assign(static_cast<std::size_t>(n) * n, 0);
}

Multigraph::Builder::Builder(const Multigraph& g) : n_(g.n_), mult_(g.mult_) {}

Multigraph::Builder& Multigraph::Builder::add_edge(int u, int v, int k) {
    return set_multiplicity(u, v, multiplicity(u, v) + k);
}

Multigraph::Builder& Multigraph::Builder::set_multiplicity(int u, int v, int m) {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (m < 0 || m > kMaxMultiplicity)
        throw std::invalid_argument("multiplicity outside 0..4");
    mult_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint8_t>(m);
    mult_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::uint8_t>(m);
    return *this;
}

int Multigraph::Builder::multiplicity(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) return 0;
    return mult_[static_cast<std::size_t>(u) * n_ + v];
}

Multigraph Multigraph::Builder::build() const {
    Multigraph g(n_);
    g.mult_ = mult_;
    return g;
}

Multigraph Multigraph::from_edges(int n,
                                  const std::vector<std::tuple<int, int, int>>& edges) {
    Builder b(n);
    for (auto [u, v, k] : edges) b.add_edge(u, v, k);
    return b.build();
}

int Multigraph::multiplicity(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) return 0;
    return mult_[static_cast<std::size_t>(u) * n_ + v];
}

int Multigraph::degree(int v) const {
    check_vertex(v, n_);
    int d = 0;
    for (int u = 0; u < n_; ++u) d += mult_[static_cast<std::size_t>(v) * n_ + u];
    return d;
}

bool Multigraph::is_k_regular(int k) const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != k) return false;
    return true;
}

bool Multigraph::is_simple() const {
    for (auto m : mult_)
        if (m > 1) return false;
    return true;
}

int Multigraph::pair_count() const {
    int c = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (multiplicity(u, v) > 0) ++c;
    return c;
}

int Multigraph::edge_count() const {
    int c = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) c += multiplicity(u, v);
    return c;
}

std::vector<std::pair<int, int>> Multigraph::present_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (multiplicity(u, v) > 0) out.emplace_back(u, v);
    return out;
}

std::vector<int> Multigraph::neighbors(int v) const {
    check_vertex(v, n_);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (multiplicity(v, u) > 0) out.push_back(u);
    return out;
}

Multigraph Multigraph::induced(const std::vector<int>& verts) const {
    Builder b(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            b.set_multiplicity(static_cast<int>(i), static_cast<int>(j),
                               multiplicity(verts[i], verts[j]));
    return b.build();
}

Multigraph Multigraph::open_neighborhood_graph(int v) const {
    return induced(neighbors(v));
}

bool Multigraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u) {
            if (!seen[u] && multiplicity(v, u) > 0) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n_;
}

namespace {

// Hopcroft-Tarjan lowpoint DFS collecting biconnected components.
struct BlockFinder {
    const Multigraph& g;
    int n;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    int counter = 0;

    explicit BlockFinder(const Multigraph& graph)
        : g(graph), n(graph.vertex_count()), num(n, -1), low(n, 0) {}

    void pop_block(std::pair<int, int> until) {
        std::vector<int> verts;
        auto add = [&verts](int v) {
            if (std::find(verts.begin(), verts.end(), v) == verts.end())
                verts.push_back(v);
        };
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            add(e.first);
            add(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        blocks.push_back(std::move(verts));
    }

    void dfs(int v, int parent) {
        num[v] = low[v] = counter++;
        for (int u = 0; u < n; ++u) {
            if (g.multiplicity(v, u) == 0) continue;
            if (num[u] == -1) {
                edge_stack.emplace_back(v, u);
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= num[v]) pop_block({v, u});
            } else if (u != parent && num[u] < num[v]) {
                edge_stack.emplace_back(v, u);
                low[v] = std::min(low[v], num[u]);
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> Multigraph::blocks() const {
    BlockFinder bf(*this);
    for (int v = 0; v < n_; ++v) {
        if (bf.num[v] == -1) {
            bf.dfs(v, -1);
            if (degree(v) == 0) bf.blocks.push_back({v});
        }
    }
    std::sort(bf.blocks.begin(), bf.blocks.end());
    return bf.blocks;
}

}  // namespace quartic
