#include "quartic/operations.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "quartic/families.hpp"
#include "quartic/recognize.hpp"

namespace quartic {

namespace {

struct Pattern {
    Multigraph g;
    std::vector<int> attachments;
    std::vector<int> interiors;
};

const Pattern& op_pattern(int kind, OpDir dir) {
    static const Pattern op1_rhs{
        Multigraph::from_edges(6, {{0, 3, 1}, {1, 3, 1}, {1, 4, 1}, {2, 4, 1},
                                   {2, 5, 1}, {0, 5, 1}, {3, 4, 1}, {4, 5, 1},
                                   {5, 3, 1}}),
        {0, 1, 2},
        {3, 4, 5}};
    static const Pattern op2_rhs{
        Multigraph::from_edges(5, {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}, {0, 4, 1},
                                   {1, 4, 1}, {2, 4, 1}, {3, 4, 1}}),
        {0, 1, 2},
        {3, 4}};
    static const Pattern triple_block{  // op3 LHS and op5 RHS
        Multigraph::from_edges(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 3}}),
        {0},
        {1, 2}};
    static const Pattern op3_rhs{
        Multigraph::from_edges(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 2},
                                   {2, 3, 2}}),
        {0},
        {1, 2, 3}};
    static const Pattern op4_lhs{
        Multigraph::from_edges(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1},
                                   {2, 3, 2}}),
        {0, 1},
        {2, 3}};
    static const Pattern op4_rhs{
        Multigraph::from_edges(5, {{2, 0, 1}, {2, 1, 1}, {2, 3, 1}, {2, 4, 1},
                                   {3, 0, 1}, {4, 1, 1}, {3, 4, 2}}),
        {0, 1},
        {2, 3, 4}};
    static const Pattern op5_lhs{named_block("op5-left"), {0}, {1, 2, 3, 4}};

    if (dir == OpDir::forward) {
        switch (kind) {
            case 3: return triple_block;
            case 4: return op4_lhs;
            case 5: return op5_lhs;
        }
    } else {
        switch (kind) {
            case 1: return op1_rhs;
            case 2: return op2_rhs;
            case 3: return op3_rhs;
            case 4: return op4_rhs;
            case 5: return triple_block;
        }
    }
    throw std::invalid_argument("no pattern for this kind/direction");
}

// All injective maps pattern -> host with host multiplicity >= pattern
// multiplicity on pattern edges, and host degree equal to pattern degree on
// interior vertices (which pins every interior edge inside the pattern).
std::vector<std::vector<int>> find_embeddings(const Multigraph& host,
                                              const Pattern& pat,
                                              bool exact_interiors) {
    const int pn = pat.g.vertex_count();
    const int hn = host.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<int> map(pn, -1);
    std::vector<char> used(hn, 0);

    std::vector<char> interior(pn, 0);
    for (int v : pat.interiors) interior[v] = 1;

    auto rec = [&](auto&& self, int next) -> void {
        if (next == pn) {
            out.push_back(map);
            return;
        }
        for (int h = 0; h < hn; ++h) {
            if (used[h]) continue;
            if (exact_interiors && interior[next] &&
                host.degree(h) != pat.g.degree(next))
                continue;
            bool ok = true;
            for (int p = 0; p < next && ok; ++p) {
                int need = pat.g.multiplicity(next, p);
                if (need > 0 && host.multiplicity(h, map[p]) < need) ok = false;
            }
            if (!ok) continue;
            map[next] = h;
            used[h] = 1;
            self(self, next + 1);
            used[h] = 0;
            map[next] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

Multigraph delete_vertices(const Multigraph& g, std::vector<int> dead,
                           std::vector<int>& relabel) {
    const int n = g.vertex_count();
    std::sort(dead.begin(), dead.end());
    relabel.assign(n, -1);
    int next = 0;
    std::size_t di = 0;
    for (int v = 0; v < n; ++v) {
        if (di < dead.size() && dead[di] == v) {
            ++di;
            continue;
        }
        relabel[v] = next++;
    }
    Multigraph::Builder b(next);
    for (int u = 0; u < n; ++u) {
        if (relabel[u] < 0) continue;
        for (int v = u + 1; v < n; ++v) {
            if (relabel[v] < 0) continue;
            int m = g.multiplicity(u, v);
            if (m > 0) b.set_multiplicity(relabel[u], relabel[v], m);
        }
    }
    return b.build();
}

bool site_ok(const Multigraph& g, const OpStep& step);

ApplyResult apply_unchecked(const Multigraph& g, const OpStep& step) {
    const auto& s = step.site;
    const int n = g.vertex_count();
    ApplyResult r;

    auto identity_relabel = [&](int count) {
        std::vector<int> rel(count);
        for (int i = 0; i < count; ++i) rel[i] = i;
        return rel;
    };

    if (step.dir == OpDir::forward && (step.kind == 1 || step.kind == 2)) {
        int x = s[0], y = s[1], z = s[2];
        int extra = step.kind == 1 ? 3 : 2;
        Multigraph::Builder b(n + extra);
        for (auto [u, v] : g.present_pairs())
            b.set_multiplicity(u, v, g.multiplicity(u, v));
        b.add_edge(x, y, -1);
        b.add_edge(y, z, -1);
        b.add_edge(z, x, -1);
        if (step.kind == 1) {
            b.add_edge(x, n).add_edge(y, n);
            b.add_edge(y, n + 1).add_edge(z, n + 1);
            b.add_edge(z, n + 2).add_edge(x, n + 2);
            b.add_edge(n, n + 1).add_edge(n + 1, n + 2).add_edge(n + 2, n);
            r.created = {n, n + 1, n + 2};
        } else {
            b.add_edge(x, n).add_edge(y, n).add_edge(z, n);
            b.add_edge(x, n + 1).add_edge(y, n + 1).add_edge(z, n + 1);
            b.add_edge(n, n + 1);
            r.created = {n, n + 1};
        }
        r.graph = b.build();
        r.relabel = identity_relabel(n);
        return r;
    }

    if (step.dir == OpDir::reverse && (step.kind == 1 || step.kind == 2)) {
        int x = s[0], y = s[1], z = s[2];
        std::vector<int> dead(s.begin() + 3, s.end());
        Multigraph trimmed = delete_vertices(g, dead, r.relabel);
        Multigraph::Builder b(trimmed);
        b.add_edge(r.relabel[x], r.relabel[y]);
        b.add_edge(r.relabel[y], r.relabel[z]);
        b.add_edge(r.relabel[z], r.relabel[x]);
        r.graph = b.build();
        return r;
    }

    if (step.kind == 3 && step.dir == OpDir::forward) {
        int w = s[0];
        Multigraph trimmed = delete_vertices(g, {s[1], s[2]}, r.relabel);
        int base = trimmed.vertex_count();
        Multigraph::Builder b(base + 3);
        for (auto [u, v] : trimmed.present_pairs())
            b.set_multiplicity(u, v, trimmed.multiplicity(u, v));
        int s1 = base, s2 = base + 1, t = base + 2;
        b.add_edge(r.relabel[w], s1).add_edge(r.relabel[w], s2);
        b.add_edge(s1, s2);
        b.add_edge(s1, t, 2).add_edge(s2, t, 2);
        r.graph = b.build();
        r.created = {s1, s2, t};
        return r;
    }

    if (step.kind == 3 && step.dir == OpDir::reverse) {
        int w = s[0];
        Multigraph trimmed = delete_vertices(g, {s[1], s[2], s[3]}, r.relabel);
        int base = trimmed.vertex_count();
        Multigraph::Builder b(base + 2);
        for (auto [u, v] : trimmed.present_pairs())
            b.set_multiplicity(u, v, trimmed.multiplicity(u, v));
        b.add_edge(r.relabel[w], base).add_edge(r.relabel[w], base + 1);
        b.add_edge(base, base + 1, 3);
        r.graph = b.build();
        r.created = {base, base + 1};
        return r;
    }

    if (step.kind == 4 && step.dir == OpDir::forward) {
        int x = s[0], y = s[1];
        Multigraph trimmed = delete_vertices(g, {s[2], s[3]}, r.relabel);
        int base = trimmed.vertex_count();
        Multigraph::Builder b(base + 3);
        for (auto [u, v] : trimmed.present_pairs())
            b.set_multiplicity(u, v, trimmed.multiplicity(u, v));
        int c = base, w1 = base + 1, w2 = base + 2;
        b.add_edge(c, r.relabel[x]).add_edge(c, r.relabel[y]);
        b.add_edge(c, w1).add_edge(c, w2);
        b.add_edge(w1, r.relabel[x]).add_edge(w2, r.relabel[y]);
        b.add_edge(w1, w2, 2);
        r.graph = b.build();
        r.created = {c, w1, w2};
        return r;
    }

    if (step.kind == 4 && step.dir == OpDir::reverse) {
        int x = s[0], y = s[1];
        Multigraph trimmed = delete_vertices(g, {s[2], s[3], s[4]}, r.relabel);
        int base = trimmed.vertex_count();
        Multigraph::Builder b(base + 2);
        for (auto [u, v] : trimmed.present_pairs())
            b.set_multiplicity(u, v, trimmed.multiplicity(u, v));
        int u = base, v = base + 1;
        b.add_edge(u, r.relabel[x]).add_edge(u, r.relabel[y]);
        b.add_edge(v, r.relabel[x]).add_edge(v, r.relabel[y]);
        b.add_edge(u, v, 2);
        r.graph = b.build();
        r.created = {u, v};
        return r;
    }

    if (step.kind == 5 && step.dir == OpDir::forward) {
        int w = s[0];
        Multigraph trimmed = delete_vertices(g, {s[1], s[2], s[3], s[4]}, r.relabel);
        int base = trimmed.vertex_count();
        Multigraph::Builder b(base + 2);
        for (auto [u, v] : trimmed.present_pairs())
            b.set_multiplicity(u, v, trimmed.multiplicity(u, v));
        b.add_edge(r.relabel[w], base).add_edge(r.relabel[w], base + 1);
        b.add_edge(base, base + 1, 3);
        r.graph = b.build();
        r.created = {base, base + 1};
        return r;
    }

    if (step.kind == 5 && step.dir == OpDir::reverse) {
        int w = s[0];
        Multigraph trimmed = delete_vertices(g, {s[1], s[2]}, r.relabel);
        int base = trimmed.vertex_count();
        Multigraph::Builder b(base + 4);
        for (auto [u, v] : trimmed.present_pairs())
            b.set_multiplicity(u, v, trimmed.multiplicity(u, v));
        int bb = base, cc = base + 1, dd = base + 2, ee = base + 3;
        int a = r.relabel[w];
        b.add_edge(a, bb).add_edge(a, cc).add_edge(bb, cc);
        b.add_edge(bb, dd).add_edge(cc, dd);
        b.add_edge(bb, ee).add_edge(cc, ee);
        b.add_edge(dd, ee, 2);
        r.graph = b.build();
        r.created = {bb, cc, dd, ee};
        return r;
    }

    throw std::invalid_argument("apply: bad operation kind " +
                                std::to_string(step.kind));
}

bool pattern_site_ok(const Multigraph& g, const Pattern& pat,
                     const std::vector<int>& site) {
    const int pn = pat.g.vertex_count();
    if (static_cast<int>(site.size()) != pn) return false;
    std::vector<char> used(g.vertex_count(), 0);
    for (int v : site) {
        if (v < 0 || v >= g.vertex_count() || used[v]) return false;
        used[v] = 1;
    }
    for (int i = 0; i < pn; ++i)
        for (int j = i + 1; j < pn; ++j)
            if (g.multiplicity(site[i], site[j]) < pat.g.multiplicity(i, j))
                return false;
    for (int v : pat.interiors)
        if (g.degree(site[v]) != pat.g.degree(v)) return false;
    return true;
}

// Reverse Ops 1-2 are only the inverse of a forward application: the result
// must keep the triangle property (when the input had it) and the restored
// triangle must be eligible there.
bool reverse_triangle_guard(const Multigraph& g, const OpStep& step) {
    for (int i = 0; i < 3; ++i)
        if (g.multiplicity(step.site[i], step.site[(i + 1) % 3]) >= 4)
            return false;  // restoring the edge would exceed the cap
    ApplyResult r = apply_unchecked(g, step);
    std::array<int, 3> t{r.relabel[step.site[0]], r.relabel[step.site[1]],
                         r.relabel[step.site[2]]};
    if (!is_eligible_triangle(r.graph, t)) return false;
    if (has_triangle_property(g) && !has_triangle_property(r.graph)) return false;
    return true;
}

bool site_ok(const Multigraph& g, const OpStep& step) {
    if (step.kind < 1 || step.kind > 5) return false;
    if (step.dir == OpDir::forward && (step.kind == 1 || step.kind == 2)) {
        if (step.site.size() != 3) return false;
        std::array<int, 3> t{step.site[0], step.site[1], step.site[2]};
        for (int v : t)
            if (v < 0 || v >= g.vertex_count()) return false;
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return false;
        if (g.multiplicity(t[0], t[1]) == 0 || g.multiplicity(t[1], t[2]) == 0 ||
            g.multiplicity(t[0], t[2]) == 0)
            return false;
        return is_eligible_triangle(g, t);
    }
    const Pattern& pat = op_pattern(step.kind, step.dir);
    if (!pattern_site_ok(g, pat, step.site)) return false;
    // The Op4 left side admits no x-y edge or a doubled one (the squared
    // 4-cycle); a single x-y edge is not part of the pattern.
    if (step.kind == 4 && step.dir == OpDir::forward &&
        g.multiplicity(step.site[0], step.site[1]) == 1)
        return false;
    if (step.dir == OpDir::reverse && (step.kind == 1 || step.kind == 2))
        return reverse_triangle_guard(g, step);
    return true;
}

}  // namespace

std::string to_string(const OpStep& step) {
    std::ostringstream out;
    out << "op " << step.kind << ' '
        << (step.dir == OpDir::forward ? "fwd" : "rev");
    for (int v : step.site) out << ' ' << v;
    return out.str();
}

std::vector<Triangle> triangles(const Multigraph& g) {
    std::vector<Triangle> out;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.multiplicity(a, b) == 0) continue;
            for (int c = b + 1; c < n; ++c)
                if (g.multiplicity(b, c) > 0 && g.multiplicity(a, c) > 0)
                    out.push_back({{a, b, c},
                                   {g.multiplicity(a, b), g.multiplicity(b, c),
                                    g.multiplicity(a, c)}});
        }
    return out;
}

bool is_eligible_triangle(const Multigraph& g, const std::array<int, 3>& t) {
    int m01 = g.multiplicity(t[0], t[1]);
    int m12 = g.multiplicity(t[1], t[2]);
    int m02 = g.multiplicity(t[0], t[2]);
    if (m01 == 0 || m12 == 0 || m02 == 0)
        throw std::invalid_argument("is_eligible_triangle: not a triangle");
    if (m01 >= 3 || m12 >= 3 || m02 >= 3) return true;
    Multigraph::Builder b(g);
    b.set_multiplicity(t[0], t[1], m01 - 1);
    b.set_multiplicity(t[1], t[2], m12 - 1);
    b.set_multiplicity(t[0], t[2], m02 - 1);
    return has_triangle_property(b.build());
}

std::vector<OpStep> find_sites(const Multigraph& g, int kind, OpDir dir) {
    if (kind < 1 || kind > 5) throw std::invalid_argument("find_sites: bad kind");
    std::vector<OpStep> out;
    if (dir == OpDir::forward && (kind == 1 || kind == 2)) {
        for (const auto& t : triangles(g))
            if (is_eligible_triangle(g, t.verts))
                out.push_back({kind, dir, {t.verts[0], t.verts[1], t.verts[2]}});
        return out;  // already ascending and duplicate-free
    }
    const Pattern& pat = op_pattern(kind, dir);
    auto embeddings = find_embeddings(g, pat, true);
    // dedup up to pattern automorphism: the replacement effect depends only
    // on the attachment set and interior set
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> best;
    for (const auto& emb : embeddings) {
        std::vector<int> atts, ints;
        for (int v : pat.attachments) atts.push_back(emb[v]);
        for (int v : pat.interiors) ints.push_back(emb[v]);
        std::sort(atts.begin(), atts.end());
        std::sort(ints.begin(), ints.end());
        auto key = std::make_pair(std::move(atts), std::move(ints));
        auto it = best.find(key);
        if (it == best.end() || emb < it->second) best[key] = emb;
    }
    for (auto& [key, emb] : best) {
        OpStep step{kind, dir, emb};
        bool ok;
        try {
            ok = site_ok(g, step);
        } catch (const std::logic_error&) {
            throw;  // op4 single-edge assertion propagates
        }
        if (ok) out.push_back(std::move(step));
    }
    std::sort(out.begin(), out.end(),
              [](const OpStep& a, const OpStep& b) { return a.site < b.site; });
    return out;
}

ApplyResult apply(const Multigraph& g, const OpStep& step) {
    if (!site_ok(g, step)) {
        // Flag the one configuration that looks like an Op4 left side but is
        // not one: everything matches except that x and y are joined by a
        // single edge.
        if (step.kind == 4 && step.dir == OpDir::forward &&
            pattern_site_ok(g, op_pattern(4, OpDir::forward), step.site) &&
            g.multiplicity(step.site[0], step.site[1]) == 1)
            throw std::logic_error(
                "op4: attachment vertices joined by a single edge; not a "
                "left side of Operation 4");
        throw std::invalid_argument("apply: site not applicable: " +
                                    to_string(step));
    }
    return apply_unchecked(g, step);
}

Multigraph replay(const Multigraph& base, const std::vector<OpStep>& steps) {
    Multigraph g = base;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            g = apply(g, steps[i]).graph;
        } catch (const std::exception& e) {
            throw ReplayError(i, "replay: step " + std::to_string(i) +
                                     " failed: " + e.what());
        }
    }
    return g;
}

bool contains_k113(const Multigraph& g) {
    static const Pattern k113{named_block("k113"), {2, 3, 4}, {0, 1}};
    // subgraph containment only: no interior-degree constraint
    return !find_embeddings(g, k113, false).empty();
}

bool contains_induced_simple_k4_minus(const Multigraph& g) {
    const int n = g.vertex_count();
    std::array<int, 4> v{};
    for (v[0] = 0; v[0] < n; ++v[0])
        for (v[1] = v[0] + 1; v[1] < n; ++v[1])
            for (v[2] = v[1] + 1; v[2] < n; ++v[2])
                for (v[3] = v[2] + 1; v[3] < n; ++v[3]) {
                    int zeros = 0, ones = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j) {
                            int m = g.multiplicity(v[i], v[j]);
                            zeros += m == 0;
                            ones += m == 1;
                        }
                    if (zeros == 1 && ones == 5) return true;
                }
    return false;
}

}  // namespace quartic
