#include "uclock/constants.hpp"

#include <stdexcept>

namespace uclock {
namespace {

const ConstantSet kCodata{
    "codata",
    2.99792458e8,     // c
    6.67430e-11,      // G
    1.054571817e-34,  // hbar
    1.380649e-23,     // k_B
    1.616255e-35,     // l_p
    5.391247e-44,     // t_p
};

// G is backed out of hbar*G/c^3 = l_p^2 so the set is self-consistent to
// the last bit rather than merely to order of magnitude.
const ConstantSet kPaperOm{
    "paper-om",
    1e9,    // c
    1e-9,   // G
    1e-34,  // hbar
    1e-23,  // k_B
    1e-35,  // l_p
    1e-44,  // t_p
};

}  // namespace

const ConstantSet& constant_set(std::string_view name) {
  if (name == kCodata.name) return kCodata;
  if (name == kPaperOm.name) return kPaperOm;
  throw std::invalid_argument("unknown constant set '" + std::string(name) +
                              "'; valid names: codata, paper-om");
}

const std::vector<std::string>& constant_set_names() {
  static const std::vector<std::string> names{"codata", "paper-om"};
  return names;
}

}  // namespace uclock
