#pragma once

// Closed intervals with outward widening after every operation. The
// widening is a relative slack well above the working precision, so an
// interval always brackets the exact real.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace regcycle {

using HighFloat = boost::multiprecision::cpp_bin_float_50;
using BigInt = boost::multiprecision::cpp_int;

template <class T>
struct IntervalTraits;

template <>
struct IntervalTraits<double> {
  static double slack() { return 8 * std::numeric_limits<double>::epsilon(); }
  static double tiny() { return std::numeric_limits<double>::min(); }
};

template <>
struct IntervalTraits<HighFloat> {
  static HighFloat slack() { return HighFloat("1e-45"); }
  static HighFloat tiny() { return HighFloat("1e-4000"); }
};

template <class T>
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(const T& x) : lo_(x), hi_(x) {}  // NOLINT: exact constants
  Interval(const T& lo, const T& hi) : lo_(lo), hi_(hi) {}

  /// Decimal or rational constant, bracketed at working precision.
  static Interval constant(const T& x) { return widen(x, x); }
  static Interval ratio(long long num, long long den) { return widen(T(num) / T(den), T(num) / T(den)); }

  const T& lo() const { return lo_; }
  const T& hi() const { return hi_; }
  T mid() const { return (lo_ + hi_) / 2; }
  T width() const { return hi_ - lo_; }
  bool contains(const T& x) const { return lo_ <= x && x <= hi_; }

  friend Interval operator+(const Interval& a, const Interval& b) { return widen(a.lo_ + b.lo_, a.hi_ + b.hi_); }
  friend Interval operator-(const Interval& a, const Interval& b) { return widen(a.lo_ - b.hi_, a.hi_ - b.lo_); }
  friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const T p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return widen(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_ <= 0 && b.hi_ >= 0) throw std::domain_error("interval division by an interval containing 0");
    const T p[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    return widen(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
  }
  Interval& operator+=(const Interval& b) { return *this = *this + b; }
  Interval& operator-=(const Interval& b) { return *this = *this - b; }
  Interval& operator*=(const Interval& b) { return *this = *this * b; }

  static Interval widen(const T& lo, const T& hi) {
    using std::abs;
    using boost::multiprecision::abs;
    const T s = IntervalTraits<T>::slack(), t = IntervalTraits<T>::tiny();
    // infinite endpoints stay put; inf - inf would poison them with NaN
    const T wlo = isinf_(lo) ? lo : lo - abs(lo) * s - t;
    const T whi = isinf_(hi) ? hi : hi + abs(hi) * s + t;
    return Interval(wlo, whi);
  }

 private:
  static bool isinf_(const T& x) {
    using std::isinf;
    using boost::multiprecision::isinf;
    return isinf(x);
  }

  T lo_, hi_;
};

template <class T>
Interval<T> log(const Interval<T>& x) {
  using std::log;
  using boost::multiprecision::log;
  if (x.lo() <= 0) throw std::domain_error("interval log of a non-positive interval");
  return Interval<T>::widen(log(x.lo()), log(x.hi()));
}

template <class T>
Interval<T> exp(const Interval<T>& x) {
  using std::exp;
  using boost::multiprecision::exp;
  return Interval<T>::widen(exp(x.lo()), exp(x.hi()));
}

template <class T>
Interval<T> sqrt(const Interval<T>& x) {
  using std::sqrt;
  using boost::multiprecision::sqrt;
  if (x.lo() < 0) throw std::domain_error("interval sqrt of a negative interval");
  return Interval<T>::widen(sqrt(x.lo()), sqrt(x.hi()));
}

template <class T>
Interval<T> pi_interval() {
  if constexpr (std::is_same_v<T, double>) {
    return Interval<double>::widen(3.141592653589793, 3.141592653589793);
  } else {
    const T p = boost::math::constants::pi<T>();
    return Interval<T>::widen(p, p);
  }
}

/// log of an exact integer.
template <class T>
Interval<T> log_integer(const BigInt& n) {
  return log(Interval<T>::widen(T(n), T(n)));
}

template <class T>
double to_double(const T& x) {
  return static_cast<double>(x);
}

}  // namespace regcycle
