#include "quartic/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace quartic {

namespace {

// Colour refinement on (colour, multiset of (neighbour colour, multiplicity))
// signatures.  Colours are small ints; refinement is stable, so cells only
// ever split.
void refine(const Multigraph& g, std::vector<int>& color) {
    const int n = g.vertex_count();
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Sig> sig(n);
    std::vector<int> order(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            sig[v].first = color[v];
            sig[v].second.clear();
            for (int u = 0; u < n; ++u) {
                int m = g.multiplicity(v, u);
                if (m > 0) sig[v].second.emplace_back(color[u], m);
            }
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&sig](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
            next[order[i]] = c;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

struct CanonSearch {
    const Multigraph& g;
    int n;
    std::vector<std::uint8_t> best_code;
    std::vector<int> best_labeling;
    bool have_best = false;

    explicit CanonSearch(const Multigraph& graph)
        : g(graph), n(graph.vertex_count()) {}

    // labeling[v] = canonical position of v
    std::vector<std::uint8_t> code_for(const std::vector<int>& labeling) const {
        std::vector<int> inv(n);
        for (int v = 0; v < n; ++v) inv[labeling[v]] = v;
        std::vector<std::uint8_t> code;
        code.reserve(1 + static_cast<std::size_t>(n) * (n - 1) / 2);
        code.push_back(static_cast<std::uint8_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                code.push_back(static_cast<std::uint8_t>(g.multiplicity(inv[i], inv[j])));
        return code;
    }

    // True when multiplicity depends only on the colour pair; every discrete
    // refinement then yields the same code, so no branching is needed.
    bool uniform_between_cells(const std::vector<int>& color) const {
        std::vector<std::vector<int>> m;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                int cu = color[u], cv = color[v];
                std::size_t need = static_cast<std::size_t>(std::max(cu, cv)) + 1;
                if (m.size() < need) m.resize(need);
                if (m[cu].size() < need) m[cu].resize(need, -1);
                int& slot = m[cu][cv];
                if (slot == -1)
                    slot = g.multiplicity(u, v);
                else if (slot != g.multiplicity(u, v))
                    return false;
            }
        return true;
    }

    void descend(std::vector<int> color) {
        refine(g, color);
        int cell = -1;
        for (int c = 0; c < n && cell < 0; ++c) {
            int count = 0;
            for (int v = 0; v < n; ++v) count += color[v] == c;
            if (count > 1) cell = c;
        }
        if (cell >= 0 && uniform_between_cells(color)) {
            // break ties by vertex index; any choice gives the same code
            std::vector<int> order(n);
            for (int v = 0; v < n; ++v) order[v] = v;
            std::stable_sort(order.begin(), order.end(), [&color](int a, int b) {
                return color[a] < color[b];
            });
            std::vector<int> labeling(n);
            for (int i = 0; i < n; ++i) labeling[order[i]] = i;
            auto code = code_for(labeling);
            if (!have_best || code < best_code) {
                best_code = std::move(code);
                best_labeling = std::move(labeling);
                have_best = true;
            }
            return;
        }
        if (cell < 0) {
            // discrete: colours are a permutation already
            auto code = code_for(color);
            if (!have_best || code < best_code) {
                best_code = std::move(code);
                best_labeling = color;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != cell) continue;
            std::vector<int> split(n);
            for (int u = 0; u < n; ++u) split[u] = 2 * color[u] + (u == v ? 0 : 1);
            descend(std::move(split));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {{0}, {}};
    CanonSearch s(g);
    s.descend(std::vector<int>(n, 0));
    return {std::move(s.best_code), std::move(s.best_labeling)};
}

std::vector<std::uint8_t> canonical_code(const Multigraph& g) {
    if (g.vertex_count() > 16)
        throw std::invalid_argument("canonical_code: more than 16 vertices");
    return canonical_form(g).code;
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() > 16 || b.vertex_count() > 16)
        throw std::invalid_argument("is_isomorphic: more than 16 vertices");
    if (a.vertex_count() != b.vertex_count()) return false;
    return canonical_form(a).code == canonical_form(b).code;
}

std::vector<int> find_isomorphism(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count()) return {};
    auto fa = canonical_form(a);
    auto fb = canonical_form(b);
    if (fa.code != fb.code) return {};
    const int n = a.vertex_count();
    std::vector<int> inv_b(n);
    for (int v = 0; v < n; ++v) inv_b[fb.labeling[v]] = v;
    std::vector<int> iso(n);
    for (int v = 0; v < n; ++v) iso[v] = inv_b[fa.labeling[v]];
    return iso;
}

std::string code_hex(const std::vector<std::uint8_t>& code) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 2);
    for (auto b : code) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

}  // namespace quartic
