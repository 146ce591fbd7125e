#pragma once

#include <gmpxx.h>

#include <string>

namespace ddca {

// mpq_class keeps numerator/denominator reduced with positive denominator.
using Rat = mpq_class;

inline std::string to_string(const Rat& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

// Accepts "p", "-p", "p/q".
Rat parse_rat(const std::string& s);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ddca
