#include "quartic/certificate.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "quartic/mg1.hpp"
#include "quartic/operations.hpp"

namespace quartic {

namespace {

std::string hex_of(const std::vector<std::uint8_t>& code) {
    return code_hex(code);
}

std::vector<std::uint8_t> bytes_of_hex(const std::string& hex) {
    if (hex.size() % 2 != 0)
        throw CertificateError("certificate: odd-length hex code");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw CertificateError("certificate: bad hex digit");
    };
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 +
                                                nibble(hex[i + 1])));
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string next_line(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw CertificateError("certificate: truncated");
    return line;
}

}  // namespace

void write_certificate(const Certificate& c, std::ostream& out) {
    out << "cert v1\n";
    out << "input " << hex_of(c.input_code) << '\n';
    const Classification& cls = c.classification;
    switch (cls.tag) {
        case BaseTag::squared_cycle:
            out << "base squared-cycle " << cls.cycle_length << '\n';
            break;
        case BaseTag::five_vertex:
            out << "base five-vertex\n";
            break;
        case BaseTag::line_of_cubic:
            out << "base line-of-cubic\n";
            write_mg1(cls.root, out);
            break;
    }
    for (const OpStep& s : cls.steps) out << to_string(s) << '\n';
    out << "end\n";
}

std::string write_certificate(const Certificate& c) {
    std::ostringstream out;
    write_certificate(c, out);
    return out.str();
}

Certificate read_certificate(std::istream& in) {
    if (next_line(in) != "cert v1")
        throw CertificateError("certificate: bad header");
    auto f = fields(next_line(in));
    if (f.size() != 2 || f[0] != "input")
        throw CertificateError("certificate: bad input line");
    Certificate c;
    c.input_code = bytes_of_hex(f[1]);

    f = fields(next_line(in));
    if (f.empty() || f[0] != "base")
        throw CertificateError("certificate: bad base line");
    Classification& cls = c.classification;
    if (f.size() == 3 && f[1] == "squared-cycle") {
        cls.tag = BaseTag::squared_cycle;
        cls.cycle_length = std::stoi(f[2]);
        if (cls.cycle_length < 3)
            throw CertificateError("certificate: bad cycle length");
    } else if (f.size() == 2 && f[1] == "five-vertex") {
        cls.tag = BaseTag::five_vertex;
    } else if (f.size() == 2 && f[1] == "line-of-cubic") {
        cls.tag = BaseTag::line_of_cubic;
        auto header = fields(next_line(in));
        if (header.size() != 3 || header[0] != "mg")
            throw CertificateError("certificate: bad embedded root header");
        std::ostringstream block;
        block << header[0] << ' ' << header[1] << ' ' << header[2] << '\n';
        int pairs = std::stoi(header[2]);
        for (int i = 0; i < pairs; ++i) block << next_line(in) << '\n';
        try {
            cls.root = read_mg1(block.str());
        } catch (const Mg1Error& e) {
            throw CertificateError(std::string("certificate: ") + e.what());
        }
    } else {
        throw CertificateError("certificate: unknown base tag");
    }

    for (;;) {
        std::string line = next_line(in);
        if (line == "end") break;
        f = fields(line);
        if (f.size() < 3 || f[0] != "op")
            throw CertificateError("certificate: bad op line");
        OpStep step;
        step.kind = std::stoi(f[1]);
        if (step.kind < 1 || step.kind > 5)
            throw CertificateError("certificate: bad op kind");
        if (f[2] == "fwd")
            step.dir = OpDir::forward;
        else if (f[2] == "rev")
            step.dir = OpDir::reverse;
        else
            throw CertificateError("certificate: bad op direction");
        for (std::size_t i = 3; i < f.size(); ++i)
            step.site.push_back(std::stoi(f[i]));
        cls.steps.push_back(std::move(step));
    }
    std::string line;
    if (std::getline(in, line))
        throw CertificateError("certificate: trailing content");
    return c;
}

Certificate read_certificate(const std::string& text) {
    std::istringstream in(text);
    return read_certificate(in);
}

bool verify_certificate(const Multigraph& g, const Certificate& c) {
    if (canonical_form(g).code != c.input_code) return false;
    Multigraph base;
    try {
        base = base_graph(c.classification);
    } catch (const std::exception&) {
        return false;
    }
    Multigraph result;
    try {
        result = replay(base, c.classification.steps);
    } catch (const std::exception&) {
        return false;
    }
    return canonical_form(result).code == c.input_code;
}

}  // namespace quartic
