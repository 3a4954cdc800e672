#pragma once

// Permutation arithmetic, cycle structure and the small amount of
// elementary number theory shared by every other header.
//
// Conventions: points are 0-indexed internally and 1-indexed in all text
// I/O. Group elements act on the right, so (p * q) applies p first.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regcycle {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

/// Raised for malformed user input (cycle strings, specs, out-of-range
/// parameters).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's precondition does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a configured size cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

/// lcm with an overflow guard; every order at desk scale fits in 63 bits.
inline u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  const u64 g = std::gcd(a, b);
  const u64 q = a / g;
  if (q > (u64{1} << 63) / b) throw CapExceeded("lcm overflows 63 bits");
  return q * b;
}

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), u32{0});
  }

  /// 0-indexed image sequence; must be a bijection of {0..n-1}.
  explicit Permutation(std::vector<u32> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (u32 v : images_) {
      if (v >= images_.size() || seen[v])
        throw PreconditionError("image sequence is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds from an image sequence the caller guarantees is a bijection.
  static Permutation from_images_unchecked(std::vector<u32> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  u32 operator()(u32 point) const { return images_[point]; }
  u32 operator[](std::size_t point) const { return images_[point]; }
  std::span<const u32> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Right-action product: apply *this, then rhs.
  Permutation operator*(const Permutation& rhs) const {
    if (rhs.degree() != degree()) throw PreconditionError("degree mismatch in product");
    std::vector<u32> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
    return from_images_unchecked(std::move(out));
  }

  Permutation inverse() const {
    std::vector<u32> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<u32>(i);
    return from_images_unchecked(std::move(out));
  }

  Permutation pow(u64 e) const {
    // Cycle-wise: point i moves e steps along its cycle.
    std::vector<u32> out(images_.size());
    std::vector<bool> done(images_.size(), false);
    std::vector<u32> cyc;
    for (u32 s = 0; s < images_.size(); ++s) {
      if (done[s]) continue;
      cyc.clear();
      for (u32 x = s; !done[x]; x = images_[x]) {
        done[x] = true;
        cyc.push_back(x);
      }
      const std::size_t len = cyc.size();
      const std::size_t shift = static_cast<std::size_t>(e % len);
      for (std::size_t j = 0; j < len; ++j) out[cyc[j]] = cyc[(j + shift) % len];
    }
    return from_images_unchecked(std::move(out));
  }

  /// x^{-1} * this * x
  Permutation conjugate_by(const Permutation& x) const { return x.inverse() * *this * x; }

  /// Disjoint cycles in cycle order, each starting at its least point,
  /// cycles ordered by least point. Fixed points are included as 1-cycles.
  std::vector<std::vector<u32>> cycles() const {
    std::vector<std::vector<u32>> out;
    std::vector<bool> done(images_.size(), false);
    for (u32 s = 0; s < images_.size(); ++s) {
      if (done[s]) continue;
      std::vector<u32> c;
      for (u32 x = s; !done[x]; x = images_[x]) {
        done[x] = true;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  u64 order() const {
    u64 o = 1;
    std::vector<bool> done(images_.size(), false);
    for (u32 s = 0; s < images_.size(); ++s) {
      if (done[s]) continue;
      u64 len = 0;
      for (u32 x = s; !done[x]; x = images_[x]) {
        done[x] = true;
        ++len;
      }
      o = lcm_u64(o, len);
    }
    return o;
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<u32> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    u64 h = 0xcbf29ce484222325ull;
    for (u32 v : p.images()) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Multiset of cycle lengths, fixed points included, non-increasing.
class CycleType {
 public:
  CycleType() = default;

  explicit CycleType(std::vector<u32> parts) : parts_(std::move(parts)) {
    for (u32 p : parts_)
      if (p == 0) throw PreconditionError("cycle lengths must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  static CycleType of(const Permutation& p) {
    std::vector<u32> parts;
    for (const auto& c : p.cycles()) parts.push_back(static_cast<u32>(c.size()));
    return CycleType(std::move(parts));
  }

  std::span<const u32> parts() const { return parts_; }
  std::size_t degree() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
  }
  u64 order() const {
    u64 o = 1;
    for (u32 p : parts_) o = lcm_u64(o, p);
    return o;
  }

  /// Canonical representative: cycles laid out on consecutive points,
  /// longest first.
  Permutation representative() const {
    std::vector<u32> img(degree());
    u32 base = 0;
    for (u32 len : parts_) {
      for (u32 j = 0; j < len; ++j) img[base + j] = base + (j + 1) % len;
      base += len;
    }
    return Permutation::from_images_unchecked(std::move(img));
  }

  /// "[5,3,2]" with fixed points omitted unless the element is the
  /// identity; `with_fixed` keeps the 1s.
  std::string to_string(bool with_fixed = true) const {
    std::string s = "[";
    bool first = true;
    for (u32 p : parts_) {
      if (!with_fixed && p == 1) continue;
      if (!first) s += ',';
      s += std::to_string(p);
      first = false;
    }
    return s + "]";
  }

  auto operator<=>(const CycleType&) const = default;
  bool operator==(const CycleType&) const = default;

 private:
  std::vector<u32> parts_;
};

inline std::pair<u64, CycleType> order_and_type(const Permutation& p) {
  CycleType ct = CycleType::of(p);
  const u64 o = ct.order();
  return {o, std::move(ct)};
}

// ---------------------------------------------------------------------------
// Cycle notation.

/// Parses "(1 2 3)(4,5)" into a permutation of the given degree. Points are
/// 1-indexed; omitted points are fixed; "" and "()" denote the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw ParseError("degree must be positive");
  std::vector<u32> img(degree);
  std::iota(img.begin(), img.end(), u32{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("malformed cycle notation: expected '('");
    ++i;
    std::vector<u32> cyc;
    for (;;) {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size()) throw ParseError("malformed cycle notation: unclosed '('");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("malformed cycle notation: unexpected character '" +
                         std::string(1, text[i]) + "'");
      u64 v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<u64>(text[i] - '0');
        if (v > degree) break;
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point out of range 1.." + std::to_string(degree));
      const u32 pt = static_cast<u32>(v - 1);
      if (used[pt]) throw ParseError("point " + std::to_string(v) + " repeated");
      used[pt] = true;
      cyc.push_back(pt);
    }
    for (std::size_t j = 0; j < cyc.size(); ++j) img[cyc[j]] = cyc[(j + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation::from_images_unchecked(std::move(img));
}

/// Inverse of parse_cycles: nontrivial cycles only, "()" for the identity.
inline std::string render_cycles(const Permutation& p) {
  std::string s;
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(c[j] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------------------
// Number theory.

namespace detail {

inline constexpr u32 kSieveLimit = 1'000'000;

struct Sieve {
  std::vector<u32> smallest_factor;  // 0 for 0 and 1
  std::vector<u32> primes;

  Sieve() : smallest_factor(kSieveLimit + 1, 0) {
    for (u32 i = 2; i <= kSieveLimit; ++i) {
      if (smallest_factor[i] == 0) {
        smallest_factor[i] = i;
        primes.push_back(i);
      }
      for (u32 p : primes) {
        if (p > smallest_factor[i] || u64{p} * i > kSieveLimit) break;
        smallest_factor[p * i] = p;
      }
    }
  }
};

}  // namespace detail

/// Built on first use, read-only afterwards.
inline const detail::Sieve& sieve() {
  static const detail::Sieve s;
  return s;
}

inline bool is_prime(u64 n) {
  if (n <= detail::kSieveLimit) return n >= 2 && sieve().smallest_factor[n] == n;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// First n primes (2, 3, 5, ...).
inline std::vector<u64> first_primes(std::size_t n) {
  const auto& ps = sieve().primes;
  if (n > ps.size()) throw PreconditionError("too many primes requested");
  return {ps.begin(), ps.begin() + static_cast<std::ptrdiff_t>(n)};
}

struct PrimePower {
  u64 prime;
  u32 exponent;
  auto operator<=>(const PrimePower&) const = default;
};

class Factorization {
 public:
  Factorization() = default;
  Factorization(std::vector<PrimePower> pp, u64 value)
      : prime_powers_(std::move(pp)), value_(value) {}

  std::span<const PrimePower> prime_powers() const { return prime_powers_; }
  u64 value() const { return value_; }
  std::size_t omega() const { return prime_powers_.size(); }

  u64 radical() const {
    u64 r = 1;
    for (const auto& pp : prime_powers_) r *= pp.prime;
    return r;
  }

  std::vector<u64> primes() const {
    std::vector<u64> out;
    for (const auto& pp : prime_powers_) out.push_back(pp.prime);
    return out;
  }

  /// Maximal prime powers p^a exactly dividing the value.
  std::vector<u64> maximal_prime_powers() const {
    std::vector<u64> out;
    for (const auto& pp : prime_powers_) {
      u64 q = 1;
      for (u32 j = 0; j < pp.exponent; ++j) q *= pp.prime;
      out.push_back(q);
    }
    return out;
  }

  u64 reconstruct() const {
    u64 v = 1;
    for (const auto& pp : prime_powers_)
      for (u32 j = 0; j < pp.exponent; ++j) v *= pp.prime;
    return v;
  }

 private:
  std::vector<PrimePower> prime_powers_;
  u64 value_ = 1;
};

/// Deterministic trial division, using the sieve below 10^6.
inline Factorization factorize(u64 n) {
  if (n == 0) throw PreconditionError("factorize: n must be positive");
  std::vector<PrimePower> out;
  u64 m = n;
  const auto& sv = sieve();
  while (m > 1 && m <= detail::kSieveLimit) {
    const u64 p = sv.smallest_factor[m];
    u32 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (m > 1) {
    for (u64 p : sv.primes) {
      if (p * p > m) break;
      if (m % p) continue;
      u32 e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    for (u64 d = detail::kSieveLimit + 1; m > 1 && d * d <= m; d += 2) {
      if (m % d) continue;
      u32 e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      out.push_back({d, e});
    }
    if (m > 1) out.push_back({m, 1});
    std::sort(out.begin(), out.end());
  }
  return Factorization(std::move(out), n);
}

/// Regular k-set cycles exist for every element of Sym(m), 2k <= m, exactly
/// when m is below this value: the sum of the first k+1 primes.
inline u64 nk_threshold(u32 k) {
  if (k == 0) throw PreconditionError("nk_threshold: k must be positive");
  u64 s = 0;
  for (u64 p : first_primes(k + 1)) s += p;
  return s;
}

inline u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u64 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    const u64 g = std::gcd(r, i);
    const u64 num = n - k + i;
    const u64 r2 = r / g;
    const u64 d = i / g;
    if (r2 > (~u64{0}) / num) throw CapExceeded("binomial overflow");
    r = r2 * (num / d);  // num divisible by d after the gcd split
  }
  return r;
}

inline u64 factorial(u64 n) {
  u64 r = 1;
  for (u64 i = 2; i <= n; ++i) {
    if (r > (~u64{0}) / i) throw CapExceeded("factorial overflow");
    r *= i;
  }
  return r;
}

/// Integer partitions of m in reverse-lexicographic order ([m] first).
inline void for_each_partition(u32 m, const std::function<void(const CycleType&)>& fn) {
  std::vector<u32> a;
  std::function<void(u32, u32)> rec = [&](u32 rest, u32 max_part) {
    if (rest == 0) {
      fn(CycleType(a));
      return;
    }
    for (u32 p = std::min(rest, max_part); p >= 1; --p) {
      a.push_back(p);
      rec(rest - p, p);
      a.pop_back();
    }
  };
  rec(m, m);
}

inline std::vector<CycleType> partitions_of(u32 m) {
  std::vector<CycleType> out;
  for_each_partition(m, [&](const CycleType& c) { out.push_back(c); });
  return out;
}

}  // namespace regcycle
