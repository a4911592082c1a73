#ifndef EQLOC_RATIONAL_HPP
#define EQLOC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace eqloc {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar; always stored reduced with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int integer_value(const Rat& r) { return numerator(r); }

inline std::string to_string(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace eqloc

#endif
