#include "quartic/recognize.hpp"

#include <algorithm>
#include <stdexcept>

#include "quartic/families.hpp"

namespace quartic {

bool has_triangle_property(const Multigraph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.multiplicity(u, v) == 0) continue;
            bool covered = false;
            for (int w = 0; w < n && !covered; ++w)
                covered = w != u && w != v && g.multiplicity(u, w) > 0 &&
                          g.multiplicity(v, w) > 0;
            if (!covered) return false;
        }
    return true;
}

bool neighborhood_criterion(const Multigraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        Multigraph nb = g.open_neighborhood_graph(v);
        for (int u = 0; u < nb.vertex_count(); ++u)
            if (nb.degree(u) == 0) return false;
    }
    return true;
}

std::optional<int> recognize_squared_cycle(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    if (!find_isomorphism(g, squared_cycle(n)).empty()) return n;
    return std::nullopt;
}

namespace {

struct TrailEntry {
    OpStep reverse;   // applied to `before`
    OpStep forward;   // its inverse, site in `after` labels
    Multigraph before, after;
};

std::vector<int> mapped_site(const OpStep& f, const std::vector<int>& psi) {
    std::vector<int> s;
    s.reserve(f.site.size());
    for (int v : f.site) s.push_back(psi[v]);
    // normalize within the symmetric roles of each catalog shape
    switch (f.kind) {
        case 1:
        case 2:
            std::sort(s.begin(), s.end());
            break;
        case 3:
            if (s[1] > s[2]) std::swap(s[1], s[2]);
            break;
        case 4:
            if (s[0] > s[1]) std::swap(s[0], s[1]);
            if (s[2] > s[3]) std::swap(s[2], s[3]);
            break;
        case 5:
            if (s[1] > s[2]) std::swap(s[1], s[2]);
            if (s[3] > s[4]) std::swap(s[3], s[4]);
            break;
    }
    return s;
}

OpStep forward_counterpart(const OpStep& rev, const ApplyResult& res) {
    const auto& s = rev.site;
    const auto& rel = res.relabel;
    switch (rev.kind) {
        case 1:
        case 2: {
            std::vector<int> t{rel[s[0]], rel[s[1]], rel[s[2]]};
            std::sort(t.begin(), t.end());
            return {rev.kind, OpDir::forward, t};
        }
        case 3:
            return {3, OpDir::forward, {rel[s[0]], res.created[0], res.created[1]}};
        case 4: {
            int x = rel[s[0]], y = rel[s[1]];
            if (x > y) std::swap(x, y);
            return {4, OpDir::forward, {x, y, res.created[0], res.created[1]}};
        }
        default:
            throw std::logic_error("forward_counterpart: unexpected kind");
    }
}

// Repeated reverse application with the fixed priority order; kinds listed
// first win, smallest site within a kind.
std::pair<Multigraph, std::vector<TrailEntry>> reduce_with_trail(
    const Multigraph& g, const std::vector<int>& kinds) {
    Multigraph cur = g;
    std::vector<TrailEntry> trail;
    for (;;) {
        OpStep chosen;
        bool found = false;
        for (int kind : kinds) {
            auto sites = find_sites(cur, kind, OpDir::reverse);
            if (!sites.empty()) {
                chosen = sites.front();
                found = true;
                break;
            }
        }
        if (!found) break;
        ApplyResult res = apply(cur, chosen);
        TrailEntry e{chosen, forward_counterpart(chosen, res), cur, res.graph};
        cur = res.graph;
        trail.push_back(std::move(e));
    }
    return {cur, trail};
}

// Replays the forward counterparts of the trail (last reduction first) on h,
// translating each site through an isomorphism; psi maps the labels of the
// final trail graph onto h.  Appends the translated steps to out.
void playback(const std::vector<TrailEntry>& trail, Multigraph& h,
              std::vector<int> psi, std::vector<OpStep>& out) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        OpStep step{it->forward.kind, OpDir::forward,
                    mapped_site(it->forward, psi)};
        try {
            h = apply(h, step).graph;
        } catch (const std::exception& e) {
            throw NotInClassError(std::string("certificate playback failed: ") +
                                  e.what());
        }
        out.push_back(std::move(step));
        psi = find_isomorphism(it->before, h);
        if (psi.empty())
            throw NotInClassError(
                "certificate playback diverged from the reduction trail");
    }
}

std::vector<int> identity_map(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

void check_classify_input(const Multigraph& g) {
    if (g.vertex_count() < 3)
        throw std::invalid_argument("classify: need at least 3 vertices");
    if (!g.is_connected()) throw std::invalid_argument("classify: not connected");
    if (!g.is_k_regular(4))
        throw std::invalid_argument("classify: not 4-regular");
    if (!has_triangle_property(g))
        throw std::invalid_argument("classify: triangle property fails");
}

}  // namespace

std::pair<Multigraph, std::vector<OpStep>> reduce(const Multigraph& g) {
    check_classify_input(g);
    auto [gp, trail] = reduce_with_trail(g, {2, 1, 3, 4});
    Multigraph h = gp;
    std::vector<OpStep> steps;
    playback(trail, h, identity_map(gp.vertex_count()), steps);
    return {gp, steps};
}

SimplifyResult simplify_for_inverse(const Multigraph& g) {
    const int n = g.vertex_count();
    SimplifyResult r;
    Multigraph::Builder b(g);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int m = g.multiplicity(u, v);
            if (m >= 4)
                throw std::invalid_argument(
                    "simplify_for_inverse: quadruple edge");
            if (m == 3) {
                r.triple_log.emplace_back(u, v);
                b.set_multiplicity(u, v, 1);
            }
        }
    Multigraph reduced = b.build();

    std::vector<char> in_double(n, 0), deleted(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (reduced.multiplicity(u, v) != 2) continue;
            if (in_double[u] || in_double[v])
                throw std::invalid_argument(
                    "simplify_for_inverse: double edges do not form a matching");
            in_double[u] = in_double[v] = 1;
            for (int w = 0; w < n; ++w)
                if (w != u && w != v &&
                    reduced.multiplicity(u, w) != reduced.multiplicity(v, w))
                    throw std::invalid_argument(
                        "simplify_for_inverse: double edge endpoints are not "
                        "twins");
            r.twin_log.emplace_back(u, v);
            deleted[v] = 1;
        }

    for (int v = 0; v < n; ++v)
        if (!deleted[v]) r.to_input.push_back(v);
    r.simple = reduced.induced(r.to_input);
    if (!r.simple.is_simple())
        throw std::invalid_argument("simplify_for_inverse: residue not simple");
    return r;
}

InverseLineGraph inverse_line_graph_triangle_free(const Multigraph& s) {
    const int n = s.vertex_count();
    if (!s.is_simple())
        throw std::invalid_argument("inverse_line_graph: input not simple");
    if (!s.is_connected())
        throw std::invalid_argument("inverse_line_graph: input not connected");
    if (contains_induced_simple_k4_minus(s))
        throw std::invalid_argument("inverse_line_graph: K4-minus present");
    for (int v = 0; v < n; ++v) {
        auto nb = s.neighbors(v);
        const int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int k = j + 1; k < d; ++k)
                    if (s.multiplicity(nb[i], nb[j]) == 0 &&
                        s.multiplicity(nb[j], nb[k]) == 0 &&
                        s.multiplicity(nb[i], nb[k]) == 0)
                        throw std::invalid_argument(
                            "inverse_line_graph: induced K_{1,3} present");
    }

    // the unique maximal clique through each edge: endpoints + their common
    // neighbourhood (K_{1,3}- and K4-minus-freeness make this a clique)
    std::vector<std::vector<int>> cliques;
    for (auto [u, v] : s.present_pairs()) {
        std::vector<int> c{u, v};
        for (int w = 0; w < n; ++w)
            if (w != u && w != v && s.multiplicity(u, w) > 0 &&
                s.multiplicity(v, w) > 0)
                c.push_back(w);
        std::sort(c.begin(), c.end());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (s.multiplicity(c[i], c[j]) == 0)
                    throw std::invalid_argument(
                        "inverse_line_graph: clique structure broken");
        if (std::find(cliques.begin(), cliques.end(), c) == cliques.end())
            cliques.push_back(std::move(c));
    }

    std::vector<std::vector<int>> cliques_of(n);
    for (std::size_t c = 0; c < cliques.size(); ++c)
        for (int v : cliques[c]) cliques_of[v].push_back(static_cast<int>(c));
    int extra = 0;
    for (int v = 0; v < n; ++v) {
        if (cliques_of[v].size() > 2)
            throw std::invalid_argument(
                "inverse_line_graph: vertex in more than two maximal cliques");
        if (cliques_of[v].size() == 1) ++extra;
        if (cliques_of[v].empty()) extra += 2;  // isolated vertex: fresh edge
    }

    const int base = static_cast<int>(cliques.size());
    Multigraph::Builder b(base + extra);
    InverseLineGraph out;
    out.edge_of.resize(n);
    int next = base;
    for (int v = 0; v < n; ++v) {
        int ru, rv;
        if (cliques_of[v].size() == 2) {
            ru = cliques_of[v][0];
            rv = cliques_of[v][1];
        } else if (cliques_of[v].size() == 1) {
            ru = cliques_of[v][0];
            rv = next++;
        } else {
            ru = next++;
            rv = next++;
        }
        if (ru > rv) std::swap(ru, rv);
        if (b.multiplicity(ru, rv) > 0)
            throw std::invalid_argument(
                "inverse_line_graph: two vertices share the same clique pair");
        b.add_edge(ru, rv);
        out.edge_of[v] = {ru, rv};
    }
    out.root = b.build();

    const int rn = out.root.vertex_count();
    for (int a = 0; a < rn; ++a)
        for (int c = a + 1; c < rn; ++c)
            for (int d = c + 1; d < rn; ++d)
                if (out.root.multiplicity(a, c) > 0 &&
                    out.root.multiplicity(c, d) > 0 &&
                    out.root.multiplicity(a, d) > 0)
                    throw std::invalid_argument(
                        "inverse_line_graph: root is not triangle-free");
    return out;
}

std::optional<std::vector<std::array<int, 3>>> triangle_partition(
    const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> rem(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) rem[u][v] = g.multiplicity(u, v);
    std::vector<std::array<int, 3>> part;

    auto rec = [&](auto&& self) -> bool {
        int u = -1, v = -1;
        for (int a = 0; a < n && u < 0; ++a)
            for (int bb = a + 1; bb < n; ++bb)
                if (rem[a][bb] > 0) {
                    u = a;
                    v = bb;
                    break;
                }
        if (u < 0) return true;  // all edge instances consumed
        for (int w = v + 1; w < n; ++w) {
            if (rem[u][w] == 0 || rem[v][w] == 0) continue;
            --rem[u][v]; --rem[v][u];
            --rem[u][w]; --rem[w][u];
            --rem[v][w]; --rem[w][v];
            part.push_back({u, v, w});
            if (self(self)) return true;
            part.pop_back();
            ++rem[u][v]; ++rem[v][u];
            ++rem[u][w]; ++rem[w][u];
            ++rem[v][w]; ++rem[w][v];
        }
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    return part;
}

CubicRoot cubic_root_from_partition(
    const Multigraph& g, const std::vector<std::array<int, 3>>& part) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> tri_of(n);
    for (std::size_t t = 0; t < part.size(); ++t)
        for (int v : part[t]) tri_of[v].push_back(static_cast<int>(t));
    for (int v = 0; v < n; ++v)
        if (tri_of[v].size() != 2)
            throw std::invalid_argument(
                "cubic_root_from_partition: vertex not in exactly two "
                "triangles");

    CubicRoot out;
    Multigraph::Builder b(static_cast<int>(part.size()));
    for (int v = 0; v < n; ++v) b.add_edge(tri_of[v][0], tri_of[v][1]);
    out.root = b.build();
    if (!out.root.is_connected() || !out.root.is_k_regular(3))
        throw std::invalid_argument("cubic_root_from_partition: root not a "
                                    "connected cubic multigraph");

    // vertex v became the edge instance {tri_of[v]} with copy index equal to
    // v's rank among the vertices sharing that triangle pair
    LineMultigraph lm = line_multigraph_with_instances(out.root);
    out.iso.assign(n, -1);
    std::vector<int> copy_seen;
    for (int v = 0; v < n; ++v) {
        int tu = std::min(tri_of[v][0], tri_of[v][1]);
        int tv = std::max(tri_of[v][0], tri_of[v][1]);
        int copy = 0;
        for (int w = 0; w < v; ++w)
            if (std::min(tri_of[w][0], tri_of[w][1]) == tu &&
                std::max(tri_of[w][0], tri_of[w][1]) == tv)
                ++copy;
        for (std::size_t i = 0; i < lm.instances.size(); ++i)
            if (lm.instances[i].u == tu && lm.instances[i].v == tv &&
                lm.instances[i].copy == copy)
                out.iso[v] = static_cast<int>(i);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (lm.graph.multiplicity(out.iso[u], out.iso[v]) !=
                g.multiplicity(u, v))
                throw std::invalid_argument(
                    "cubic_root_from_partition: partition does not realize a "
                    "line multigraph");
    return out;
}

Multigraph base_graph(const Classification& c) {
    switch (c.tag) {
        case BaseTag::squared_cycle: return squared_cycle(c.cycle_length);
        case BaseTag::five_vertex: return five_vertex_exception();
        case BaseTag::line_of_cubic: return line_multigraph(c.root);
    }
    throw std::logic_error("base_graph: bad tag");
}

namespace {

int instance_index(const LineMultigraph& lm, std::pair<int, int> e, int copy) {
    for (std::size_t i = 0; i < lm.instances.size(); ++i)
        if (lm.instances[i].u == e.first && lm.instances[i].v == e.second &&
            lm.instances[i].copy == copy)
            return static_cast<int>(i);
    throw NotInClassError("classify: missing edge instance in rebuilt root");
}

// Claim-4 reconstruction of a reduced, non-squared-cycle graph: invert the
// line-multigraph construction and requeue one forward Op5 per triple edge.
void classify_reduced(const Multigraph& gp, Classification& out,
                      Multigraph& h, std::vector<int>& psi) {
    if (contains_induced_simple_k4_minus(gp))
        throw NotInClassError(
            "classify: reduced graph has an induced diamond but is not a "
            "squared cycle");
    SimplifyResult simp;
    InverseLineGraph ilg;
    try {
        simp = simplify_for_inverse(gp);
        ilg = inverse_line_graph_triangle_free(simp.simple);
    } catch (const std::invalid_argument& e) {
        throw NotInClassError(std::string("classify: ") + e.what());
    }

    std::vector<int> s_of(gp.vertex_count(), -1);
    for (std::size_t i = 0; i < simp.to_input.size(); ++i)
        s_of[simp.to_input[i]] = static_cast<int>(i);

    Multigraph::Builder b(ilg.root);
    for (auto [kept, gone] : simp.twin_log) {
        auto e = ilg.edge_of[s_of[kept]];
        b.set_multiplicity(e.first, e.second, 2);
    }
    // "add a double edge between the degree-1 endpoints of the two root edges
    // of each triple pair", queuing the matching forward Op5
    struct TripleInfo {
        std::pair<int, int> ep, eq, pendant_pair, attachment_edge;
    };
    std::vector<TripleInfo> infos;
    for (auto [p, q] : simp.triple_log) {
        TripleInfo info;
        info.ep = ilg.edge_of[s_of[p]];
        info.eq = ilg.edge_of[s_of[q]];
        auto pendant = [&](std::pair<int, int> e) {
            if (ilg.root.degree(e.first) == 1) return e.first;
            if (ilg.root.degree(e.second) == 1) return e.second;
            throw NotInClassError(
                "classify: triple-edge root edge has no pendant endpoint");
        };
        int pp = pendant(info.ep), pq = pendant(info.eq);
        info.pendant_pair = {std::min(pp, pq), std::max(pp, pq)};
        b.set_multiplicity(info.pendant_pair.first, info.pendant_pair.second, 2);

        int w = -1;
        for (int x = 0; x < gp.vertex_count(); ++x)
            if (x != p && x != q && gp.multiplicity(p, x) > 0 &&
                gp.multiplicity(q, x) > 0) {
                if (w >= 0)
                    throw NotInClassError(
                        "classify: triple edge with two attachments");
                w = x;
            }
        if (w < 0 || s_of[w] < 0)
            throw NotInClassError("classify: triple edge without attachment");
        info.attachment_edge = ilg.edge_of[s_of[w]];
        infos.push_back(info);
    }

    Multigraph root = b.build();
    if (!root.is_connected() || !root.is_k_regular(3))
        throw NotInClassError("classify: rebuilt root is not a connected cubic "
                              "multigraph");

    LineMultigraph lm = line_multigraph_with_instances(root);
    std::vector<std::vector<int>> sites;
    for (const auto& info : infos)
        sites.push_back({instance_index(lm, info.attachment_edge, 0),
                         instance_index(lm, info.ep, 0),
                         instance_index(lm, info.eq, 0),
                         instance_index(lm, info.pendant_pair, 0),
                         instance_index(lm, info.pendant_pair, 1)});

    h = lm.graph;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        OpStep step{5, OpDir::forward, sites[i]};
        ApplyResult res;
        try {
            res = apply(h, step);
        } catch (const std::exception& e) {
            throw NotInClassError(std::string("classify: Op5 replay failed: ") +
                                  e.what());
        }
        h = res.graph;
        out.steps.push_back(std::move(step));
        for (std::size_t j = i + 1; j < sites.size(); ++j)
            for (int& v : sites[j]) {
                v = res.relabel[v];
                if (v < 0)
                    throw NotInClassError(
                        "classify: overlapping Op5 reconstruction sites");
            }
    }

    psi = find_isomorphism(gp, h);
    if (psi.empty())
        throw NotInClassError(
            "classify: rebuilt line multigraph does not match the reduced "
            "graph");
    out.tag = BaseTag::line_of_cubic;
    out.root = root;
}

}  // namespace

Certificate classify(const Multigraph& g) {
    check_classify_input(g);
    Certificate cert;
    cert.input_code = canonical_form(g).code;
    Classification& cls = cert.classification;

    if (g.vertex_count() == 5 &&
        !find_isomorphism(g, five_vertex_exception()).empty()) {
        cls.tag = BaseTag::five_vertex;
        return cert;
    }
    // The classes overlap (e.g. the squared 6-cycle is the octahedron, the
    // line multigraph of K4); when both apply, the line-of-cubic description
    // with an empty step list wins.
    if (auto part = triangle_partition(g)) {
        cls.tag = BaseTag::line_of_cubic;
        cls.root = cubic_root_from_partition(g, *part).root;
        return cert;
    }
    if (auto n = recognize_squared_cycle(g)) {
        cls.tag = BaseTag::squared_cycle;
        cls.cycle_length = *n;
        return cert;
    }

    auto [gp, trail] = reduce_with_trail(g, {2, 1, 3, 4});
    Multigraph h;
    std::vector<int> psi;
    if (auto n = recognize_squared_cycle(gp)) {
        if (*n != 3)
            throw NotInClassError(
                "classify: reduction terminated on an unexpected squared "
                "cycle");
        cls.tag = BaseTag::line_of_cubic;
        cls.root = Multigraph::from_edges(2, {{0, 1, 3}});
        h = line_multigraph(cls.root);
        psi = find_isomorphism(gp, h);
        if (psi.empty())
            throw NotInClassError("classify: triple-edge base mismatch");
    } else {
        classify_reduced(gp, cls, h, psi);
    }
    playback(trail, h, std::move(psi), cls.steps);
    return cert;
}

Certificate classify_simple(const Multigraph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("classify_simple: input not simple");
    if (g.vertex_count() < 5)
        throw std::invalid_argument("classify_simple: need at least 5 vertices");
    check_classify_input(g);

    Certificate cert;
    cert.input_code = canonical_form(g).code;
    Classification& cls = cert.classification;

    // As in classify, a graph that is already a line multigraph keeps that
    // description even when it is also a squared cycle (the octahedron).
    if (auto part = triangle_partition(g)) {
        cls.tag = BaseTag::line_of_cubic;
        cls.root = cubic_root_from_partition(g, *part).root;
        return cert;
    }
    if (auto n = recognize_squared_cycle(g)) {
        cls.tag = BaseTag::squared_cycle;
        cls.cycle_length = *n;
        return cert;
    }

    // Corollary path: undo Op2 to exhaustion, then read the residue's
    // triangle partition off directly as a line multigraph.
    auto [g1, trail] = reduce_with_trail(g, {2});
    auto part = triangle_partition(g1);
    if (!part)
        throw NotInClassError(
            "classify_simple: Op2-exhausted graph admits no triangle "
            "partition");
    CubicRoot cr = cubic_root_from_partition(g1, *part);
    cls.tag = BaseTag::line_of_cubic;
    cls.root = cr.root;
    Multigraph h = line_multigraph(cr.root);
    playback(trail, h, cr.iso, cls.steps);
    return cert;
}

}  // namespace quartic
