#include "quartic/mg1.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace quartic {

namespace {

// Strict nonnegative integer: no sign, no leading zeros (except "0").
bool parse_uint(const std::string& tok, int& out) {
    if (tok.empty() || tok.size() > 9) return false;
    if (tok.size() > 1 && tok[0] == '0') return false;
    for (char c : tok)
        if (c < '0' || c > '9') return false;
    out = std::stoi(tok);
    return true;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ' ') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

Multigraph read_mg1(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Mg1Error("mg1: empty input");
    auto header = split_fields(line);
    int n = 0, p = 0;
    if (header.size() != 3 || header[0] != "mg" || !parse_uint(header[1], n) ||
        !parse_uint(header[2], p))
        throw Mg1Error("mg1: bad header line");
    Multigraph::Builder b(n);
    int prev_u = -1, prev_v = -1;
    for (int i = 0; i < p; ++i) {
        if (!std::getline(in, line)) throw Mg1Error("mg1: truncated edge list");
        auto f = split_fields(line);
        int u = 0, v = 0, k = 0;
        if (f.size() != 3 || !parse_uint(f[0], u) || !parse_uint(f[1], v) ||
            !parse_uint(f[2], k))
            throw Mg1Error("mg1: bad edge line");
        if (u >= v) throw Mg1Error("mg1: edge must satisfy u < v");
        if (v >= n) throw Mg1Error("mg1: vertex out of range");
        if (k < 1 || k > 4) throw Mg1Error("mg1: multiplicity outside 1..4");
        if (std::pair(u, v) <= std::pair(prev_u, prev_v))
            throw Mg1Error("mg1: pairs out of order or duplicated");
        prev_u = u;
        prev_v = v;
        b.set_multiplicity(u, v, k);
    }
    if (std::getline(in, line)) throw Mg1Error("mg1: trailing content");
    return b.build();
}

Multigraph read_mg1(const std::string& text) {
    std::istringstream in(text);
    return read_mg1(in);
}

void write_mg1(const Multigraph& g, std::ostream& out) {
    auto pairs = g.present_pairs();
    out << "mg " << g.vertex_count() << ' ' << pairs.size() << '\n';
    for (auto [u, v] : pairs)
        out << u << ' ' << v << ' ' << g.multiplicity(u, v) << '\n';
}

std::string write_mg1(const Multigraph& g) {
    std::ostringstream out;
    write_mg1(g, out);
    return out.str();
}

}  // namespace quartic
