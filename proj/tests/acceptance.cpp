// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit when
// anything fails.  The enumerated corpus (all connected 4-regular multigraphs
// with the triangle property on up to 8 vertices) is computed once up front
// and shared across criteria.

#include <chrono>
#include <deque>
#include <iostream>
#include <set>
#include <vector>

#include "quartic/certificate.hpp"
#include "quartic/enumerate.hpp"
#include "quartic/families.hpp"
#include "quartic/recognize.hpp"
#include "test_helpers.hpp"

using namespace quartic;
using namespace quartic_test;

namespace {

using Code = std::vector<std::uint8_t>;

struct Context {
    EnumerationReport corpus;  // bound 8
    std::vector<Multigraph> all;
};

int failures = 0;

void report(int number, const std::string& label, bool pass,
            const std::string& detail) {
    std::cout << "criterion " << number << " (" << label << "): "
              << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " - " << detail;
    std::cout << '\n';
    if (!pass) ++failures;
}

// 1. triangle property == neighbourhood criterion on the corpus and on 1,000
//    seeded random loopless multigraphs
void criterion1(const Context& ctx) {
    int checked = 0, agree = 0;
    for (const auto& g : ctx.all) {
        ++checked;
        agree += has_triangle_property(g) == neighborhood_criterion(g);
    }
    SplitMix64 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + static_cast<int>(rng.below(8));
        Multigraph g = random_multigraph(n, rng);
        ++checked;
        agree += has_triangle_property(g) == neighborhood_criterion(g);
    }
    report(1, "lemma equivalence", agree == checked,
           std::to_string(agree) + "/" + std::to_string(checked) + " agree");
}

// 2. closure: every applicable step on every corpus graph preserves the
//    class, with the exact vertex-count deltas
void criterion2(const Context& ctx) {
    const int delta[6] = {0, 3, 2, 1, 1, -2};
    long applications = 0;
    bool ok = true;
    for (const auto& g : ctx.all)
        for (int kind = 1; kind <= 5 && ok; ++kind)
            for (OpDir dir : {OpDir::forward, OpDir::reverse})
                for (const auto& step : find_sites(g, kind, dir)) {
                    Multigraph h = apply(g, step).graph;
                    ++applications;
                    int expect =
                        dir == OpDir::forward ? delta[kind] : -delta[kind];
                    if (h.vertex_count() - g.vertex_count() != expect ||
                        !h.is_connected() || !h.is_k_regular(4) ||
                        !has_triangle_property(h)) {
                        ok = false;
                        break;
                    }
                }
    report(2, "closure suite", ok,
           std::to_string(applications) + " applications checked");
}

// 3. set equality between the brute-force corpus and the graphs reachable
//    from the theorem's description: squared cycles, the five-vertex
//    exception, line multigraphs of cubic multigraphs, closed under the
//    operations while within the bound.  Cubic roots run to 8 vertices (12
//    edges); their line multigraphs exceed 8 vertices and are brought into
//    range by forward Op5 before the in-range closure.
void criterion3(const Context& ctx) {
    std::set<Code> target;
    for (int n = 3; n <= 8; ++n)
        for (const auto& g : ctx.corpus.classes[n])
            target.insert(canonical_form(g).code);

    std::set<Code> seen;
    std::set<Code> reached;
    std::deque<Multigraph> queue;
    auto push = [&](const Multigraph& g) {
        if (g.vertex_count() > 12) return;
        if (!seen.insert(canonical_form(g).code).second) return;
        queue.push_back(g);
    };
    for (int n = 3; n <= 8; ++n) push(squared_cycle(n));
    push(five_vertex_exception());
    for (const auto& m : enumerate_cubic_multigraphs(8))
        push(line_multigraph(m));

    while (!queue.empty()) {
        Multigraph g = std::move(queue.front());
        queue.pop_front();
        if (g.vertex_count() <= 8) {
            reached.insert(canonical_form(g).code);
            for (int kind = 1; kind <= 5; ++kind)
                for (OpDir dir : {OpDir::forward, OpDir::reverse})
                    for (const auto& step : find_sites(g, kind, dir)) {
                        Multigraph h = apply(g, step).graph;
                        if (h.vertex_count() <= 8) push(h);
                    }
        } else {
            // out of range: only the shrinking operation can help
            for (const auto& step : find_sites(g, 5, OpDir::forward))
                push(apply(g, step).graph);
        }
    }
    bool ok = reached == target;
    report(3, "theorem at desk scale", ok,
           std::to_string(reached.size()) + " reachable vs " +
               std::to_string(target.size()) + " enumerated classes");
}

// 4. classify + verify on the whole corpus and on 500 random walk outputs
void criterion4(const Context& ctx) {
    int done = 0;
    bool ok = true;
    for (const auto& g : ctx.all) {
        try {
            if (!verify_certificate(g, classify(g))) ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
        ++done;
        if (!ok) break;
    }
    int walks = 0;
    for (std::uint64_t seed = 0; walks < 500 && seed < 5000 && ok; ++seed) {
        WalkResult w = random_op_walk(seed, 4);
        if (w.graph.vertex_count() > 14) continue;
        ++walks;
        try {
            if (!verify_certificate(w.graph, classify(w.graph))) ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
    }
    report(4, "classifier round-trip", ok && walks == 500,
           std::to_string(done) + " corpus graphs + " + std::to_string(walks) +
               " walks");
}

// 5. remark identities
void criterion5(const Context&) {
    Multigraph c3 = squared_cycle(3);
    bool a = is_isomorphic(c3, line_multigraph(Multigraph::from_edges(
                                   2, {{0, 1, 3}})));
    auto s2 = find_sites(c3, 2, OpDir::forward);
    bool b = s2.size() == 1 &&
             is_isomorphic(apply(c3, s2[0]).graph, squared_cycle(5));
    auto s1 = find_sites(c3, 1, OpDir::forward);
    bool c = s1.size() == 1 &&
             is_isomorphic(apply(c3, s1[0]).graph, squared_cycle(6));
    auto s4 = find_sites(squared_cycle(4), 4, OpDir::forward);
    bool d = !s4.empty() && is_isomorphic(apply(squared_cycle(4), s4[0]).graph,
                                          five_vertex_exception());
    report(5, "remark identities", a && b && c && d,
           std::to_string(a + b + c + d) + "/4 identities");
}

// 6. per-root-vertex triangles partition the line multigraph's edge multiset
void criterion6(const Context&) {
    bool ok = true;
    int roots = 0;
    for (const auto& m : enumerate_cubic_multigraphs(8)) {
        ++roots;
        LineMultigraph lm = line_multigraph_with_instances(m);
        const int ln = lm.graph.vertex_count();
        std::vector<std::vector<int>> used(ln, std::vector<int>(ln, 0));
        for (int v = 0; v < m.vertex_count(); ++v) {
            std::vector<int> incident;
            for (std::size_t i = 0; i < lm.instances.size(); ++i)
                if (lm.instances[i].u == v || lm.instances[i].v == v)
                    incident.push_back(static_cast<int>(i));
            if (incident.size() != 3) ok = false;
            for (std::size_t i = 0; i < incident.size(); ++i)
                for (std::size_t j = i + 1; j < incident.size(); ++j) {
                    ++used[incident[i]][incident[j]];
                    ++used[incident[j]][incident[i]];
                }
        }
        for (int u = 0; u < ln && ok; ++u)
            for (int v = u + 1; v < ln; ++v)
                if (used[u][v] != lm.graph.multiplicity(u, v)) {
                    ok = false;
                    break;
                }
        if (!ok) break;
    }
    report(6, "line-multigraph triangle partition", ok,
           std::to_string(roots) + " cubic roots");
}

// 7. eligible-triangle spot checks
void criterion7(const Context&) {
    bool ok = is_eligible_triangle(squared_cycle(3), {0, 1, 2});
    for (int n : {4, 7, 8, 9, 10, 11, 12})
        for (const auto& t : triangles(squared_cycle(n)))
            if (is_eligible_triangle(squared_cycle(n), t.verts)) ok = false;
    report(7, "eligible-triangle spot checks", ok, "");
}

// 8. every simple corpus graph: squared cycle (n >= 5) or line-of-cubic with
//    Op2-only steps and a simple replay result
void criterion8(const Context& ctx) {
    bool ok = true;
    int simple_graphs = 0;
    for (const auto& g : ctx.all) {
        if (!g.is_simple()) continue;
        ++simple_graphs;
        try {
            Certificate c = classify_simple(g);
            const Classification& cls = c.classification;
            if (cls.tag == BaseTag::squared_cycle) {
                if (cls.cycle_length < 5) ok = false;
            } else if (cls.tag == BaseTag::line_of_cubic) {
                for (const auto& s : cls.steps)
                    if (s.kind != 2 || s.dir != OpDir::forward) ok = false;
                Multigraph result = replay(base_graph(cls), cls.steps);
                if (!result.is_simple()) ok = false;
                if (!verify_certificate(g, c)) ok = false;
            } else {
                ok = false;
            }
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) break;
    }
    report(8, "corollary suite", ok,
           std::to_string(simple_graphs) + " simple corpus graphs");
}

// 9. reverse Op1 inside a K_{1,1,3}-free block creates a K_{1,1,3} iff the
//    block is one of the two catalog blocks.  The corpus side is the
//    negative half (those blocks need 10-vertex hosts); two constructed
//    hosts exercise the positive half.
void criterion9(const Context& ctx) {
    bool ok = true;
    auto block_creates = [&ok](const Multigraph& g, const std::vector<int>& bverts,
                               bool expect_fig8) {
        Multigraph block = g.induced(bverts);
        if (contains_k113(block)) return;  // lemma assumes a K113-free block
        bool is_fig8 = block.vertex_count() == 8 &&
                       (is_isomorphic(block, named_block("fig8-a")) ||
                        is_isomorphic(block, named_block("fig8-b")));
        if (expect_fig8 && !is_fig8) ok = false;
        std::vector<char> inside(g.vertex_count(), 0);
        for (int v : bverts) inside[v] = 1;
        for (const auto& step : find_sites(g, 1, OpDir::reverse)) {
            bool in_block = true;
            for (int v : step.site) in_block = in_block && inside[v];
            if (!in_block) continue;
            ApplyResult res = apply(g, step);
            std::vector<int> image;
            for (int v : bverts)
                if (res.relabel[v] >= 0) image.push_back(res.relabel[v]);
            bool created = contains_k113(res.graph.induced(image));
            if (created != is_fig8) ok = false;
        }
    };

    for (const auto& g : ctx.all)
        for (const auto& bverts : g.blocks()) block_creates(g, bverts, false);

    // constructed hosts: catalog block plus a triple block at the attachment
    for (const char* name : {"fig8-a", "fig8-b"}) {
        Multigraph block = named_block(name);
        Multigraph::Builder b(10);
        for (auto [u, v] : block.present_pairs())
            b.set_multiplicity(u, v, block.multiplicity(u, v));
        b.add_edge(0, 8).add_edge(0, 9).add_edge(8, 9, 3);
        Multigraph host = b.build();
        if (!host.is_k_regular(4) || !has_triangle_property(host)) ok = false;
        std::vector<int> bverts{0, 1, 2, 3, 4, 5, 6, 7};
        // the positive half needs at least one in-block reverse-Op1 site
        bool has_site = false;
        std::vector<char> inside(10, 0);
        for (int v : bverts) inside[v] = 1;
        for (const auto& step : find_sites(host, 1, OpDir::reverse)) {
            bool in_block = true;
            for (int v : step.site) in_block = in_block && inside[v];
            has_site = has_site || in_block;
        }
        if (!has_site) ok = false;
        block_creates(host, bverts, true);
    }
    report(9, "fig-8 lemma", ok, "");
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    Context ctx;
    ctx.corpus = enumerate_quartic_tp(8, 4);
    for (int n = 3; n <= 8; ++n)
        for (const auto& g : ctx.corpus.classes[n]) ctx.all.push_back(g);
    std::cout << "corpus: " << ctx.all.size()
              << " classes on 3..8 vertices\n";

    criterion1(ctx);
    criterion2(ctx);
    criterion3(ctx);
    criterion4(ctx);
    criterion5(ctx);
    criterion6(ctx);
    criterion7(ctx);
    criterion8(ctx);
    criterion9(ctx);

    auto dt = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (failures == 0 ? "all criteria passed" : "FAILURES present")
              << " (" << dt << "s)\n";
    return failures == 0 ? 0 : 1;
}
