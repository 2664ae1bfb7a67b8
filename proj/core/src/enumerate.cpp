#include "quartic/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "quartic/families.hpp"
#include "quartic/recognize.hpp"

namespace quartic {

namespace {

using CodeMap = std::map<std::vector<std::uint8_t>, Multigraph>;

// Canonically relabeled copy, so stored class representatives do not depend
// on which labeled graph the scan found first.
Multigraph canonical_copy(const Multigraph& g, const CanonicalForm& cf) {
    Multigraph::Builder b(g.vertex_count());
    for (const auto& [u, v] : g.present_pairs())
        b.set_multiplicity(cf.labeling[u], cf.labeling[v], g.multiplicity(u, v));
    return b.build();
}

struct PairOrder {
    std::vector<std::pair<int, int>> pairs;  // (0,1),(0,2),...,(1,2),...

    explicit PairOrder(int n) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
};

// DFS over multiplicity assignments to vertex pairs in vertex-major order
// with degree-residual pruning; vertex 0's row doubles as the parallel
// work-partitioning level.
void scan_regular(int n, int k, int max_mult,
                  const std::function<void(const Multigraph&)>& sink,
                  int threads) {
    if (n == 1) {
        if (k == 0) sink(Multigraph(1));
        return;
    }
    PairOrder order(n);
    const int row0 = n - 1;  // number of pairs (0, *)

    // materialize all degree-feasible assignments of vertex 0's row
    std::vector<std::vector<int>> heads;
    std::vector<int> head(row0, 0);
    auto rec0 = [&](auto&& self, int i, int deg0) -> void {
        if (i == row0) {
            if (deg0 == k) heads.push_back(head);
            return;
        }
        int remaining = row0 - i - 1;
        for (int m = 0; m <= std::min(max_mult, k - deg0); ++m) {
            if (deg0 + m + max_mult * remaining < k) continue;
            head[i] = m;
            self(self, i + 1, deg0 + m);
        }
        head[i] = 0;
    };
    rec0(rec0, 0, 0);

    auto run_head = [&](const std::vector<int>& h,
                        const std::function<void(const Multigraph&)>& emit) {
        std::vector<int> deg(n, 0), mult(order.pairs.size(), 0);
        for (int i = 0; i < row0; ++i) {
            mult[i] = h[i];
            deg[0] += h[i];
            deg[i + 1] += h[i];
        }
        auto rec = [&](auto&& self, std::size_t idx) -> void {
            if (idx == order.pairs.size()) {
                if (deg[n - 1] != k) return;
                Multigraph::Builder b(n);
                for (std::size_t p = 0; p < order.pairs.size(); ++p)
                    if (mult[p] > 0)
                        b.set_multiplicity(order.pairs[p].first,
                                           order.pairs[p].second, mult[p]);
                emit(b.build());
                return;
            }
            auto [u, v] = order.pairs[idx];
            int cap = std::min({max_mult, k - deg[u], k - deg[v]});
            for (int m = 0; m <= cap; ++m) {
                mult[idx] = m;
                deg[u] += m;
                deg[v] += m;
                bool ok = !(v == n - 1 && deg[u] != k);
                if (ok && v < n - 1 && deg[u] + max_mult * (n - 1 - v) < k)
                    ok = false;
                if (ok) self(self, idx + 1);
                deg[u] -= m;
                deg[v] -= m;
            }
        };
        rec(rec, row0);
    };

    if (threads <= 1 || heads.size() < 2) {
        for (const auto& h : heads) run_head(h, sink);
        return;
    }
    const int nt = std::min<int>(threads, static_cast<int>(heads.size()));
    std::vector<std::vector<Multigraph>> found(nt);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < heads.size(); i += nt)
                run_head(heads[i],
                         [&](const Multigraph& g) { found[t].push_back(g); });
        });
    for (auto& th : pool) th.join();
    for (const auto& batch : found)
        for (const auto& g : batch) sink(g);
}

}  // namespace

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below: zero bound");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

EnumerationReport enumerate_quartic_tp(int max_n, int threads) {
    if (max_n < 3 || max_n > 9)
        throw std::invalid_argument("enumerate_quartic_tp: max_n outside 3..9");
    EnumerationReport report;
    report.bound = max_n;
    report.classes.resize(max_n + 1);
    for (int n = 2; n <= max_n; ++n) {
        CodeMap seen;
        // multiplicity 4 would isolate a pair from every triangle; only the
        // 2-vertex case can even reach it, and the filter rejects it there
        int max_mult = n == 2 ? 4 : 3;
        scan_regular(
            n, 4, max_mult,
            [&](const Multigraph& g) {
                if (!g.is_connected() || !has_triangle_property(g)) return;
                CanonicalForm cf = canonical_form(g);
                Multigraph rep = canonical_copy(g, cf);
                seen.emplace(std::move(cf.code), std::move(rep));
            },
            threads);
        for (auto& [code, g] : seen) report.classes[n].push_back(g);
    }
    return report;
}

std::vector<Multigraph> enumerate_cubic_multigraphs(int max_n) {
    if (max_n < 2 || max_n > 8)
        throw std::invalid_argument(
            "enumerate_cubic_multigraphs: max_n outside 2..8");
    std::vector<Multigraph> out;
    for (int n = 2; n <= max_n; n += 2) {  // odd orders fail the handshake
        CodeMap seen;
        scan_regular(
            n, 3, 3,
            [&](const Multigraph& g) {
                if (!g.is_connected()) return;
                CanonicalForm cf = canonical_form(g);
                Multigraph rep = canonical_copy(g, cf);
                seen.emplace(std::move(cf.code), std::move(rep));
            },
            1);
        for (auto& [code, g] : seen) out.push_back(g);
    }
    return out;
}

WalkResult random_op_walk(std::uint64_t seed, int depth) {
    if (depth < 0) throw std::invalid_argument("random_op_walk: negative depth");
    struct Base {
        std::string name;
        Multigraph graph;
    };
    static const std::vector<Base> bases = [] {
        std::vector<Base> b;
        for (int n = 3; n <= 8; ++n)
            b.push_back({"squared-cycle " + std::to_string(n), squared_cycle(n)});
        auto cubics = enumerate_cubic_multigraphs(6);
        for (std::size_t i = 0; i < cubics.size(); ++i)
            b.push_back({"line-of-cubic #" + std::to_string(i),
                         line_multigraph(cubics[i])});
        return b;
    }();

    SplitMix64 rng(seed);
    const Base& base = bases[rng.below(bases.size())];
    WalkResult r;
    r.base_name = base.name;
    r.base = base.graph;
    r.graph = base.graph;
    for (int d = 0; d < depth; ++d) {
        std::vector<OpStep> sites;
        for (int kind = 1; kind <= 5; ++kind) {
            auto s = find_sites(r.graph, kind, OpDir::forward);
            sites.insert(sites.end(), s.begin(), s.end());
        }
        if (sites.empty()) {
            r.exhausted = true;
            break;
        }
        OpStep step = sites[rng.below(sites.size())];
        r.graph = apply(r.graph, step).graph;
        r.steps.push_back(std::move(step));
    }
    return r;
}

}  // namespace quartic
