#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace regcycle {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms; integers keep the "/1".
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace regcycle
