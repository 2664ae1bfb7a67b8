#ifndef QUARTIC_CERTIFICATE_HPP
#define QUARTIC_CERTIFICATE_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "quartic/recognize.hpp"

namespace quartic {

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented text form:
//   cert v1
//   input <canonical code hex>
//   base squared-cycle <n> | base five-vertex | base line-of-cubic
//   <embedded MG1 block for the root, line-of-cubic only>
//   op <kind> <fwd|rev> <v0> <v1> ...      (zero or more)
//   end
void write_certificate(const Certificate& c, std::ostream& out);
std::string write_certificate(const Certificate& c);

Certificate read_certificate(std::istream& in);
Certificate read_certificate(const std::string& text);

// Independent check: replay(base_graph(c), steps) is isomorphic to g and the
// stored input code matches g.  Uses only replay and canonical labeling,
// never the classifier.
bool verify_certificate(const Multigraph& g, const Certificate& c);

}  // namespace quartic

#endif
