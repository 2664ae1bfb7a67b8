#ifndef QUARTIC_MG1_HPP
#define QUARTIC_MG1_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "quartic/multigraph.hpp"

namespace quartic {

// Text format "MG1":
//   mg <n> <p>
//   <u> <v> <k>        (p lines, 0 <= u < v < n, 1 <= k <= 4,
//                       pairs in lexicographic order)
// Fields separated by single spaces, every line newline-terminated,
// no trailing blank lines.

struct Mg1Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Multigraph read_mg1(std::istream& in);
Multigraph read_mg1(const std::string& text);
void write_mg1(const Multigraph& g, std::ostream& out);
std::string write_mg1(const Multigraph& g);

}  // namespace quartic

#endif
