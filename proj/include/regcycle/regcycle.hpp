#pragma once

// Regular-cycle decisions and constructive witnesses.
//
// A regular cycle of g on a domain is an orbit of <g> of length |g|, with
// |g| taken in the abstract group (not the induced permutation).

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "regcycle/actions.hpp"
#include "regcycle/gfalgebra.hpp"
#include "regcycle/groups.hpp"
#include "regcycle/permcore.hpp"
#include "regcycle/rational.hpp"

namespace regcycle {

enum class Method { bruteforce, fix_union, kset_combinatorial, constructive_proof, fpr_sum_sufficient };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::bruteforce: return "bruteforce";
    case Method::fix_union: return "fix_union";
    case Method::kset_combinatorial: return "kset_combinatorial";
    case Method::constructive_proof: return "constructive_proof";
    case Method::fpr_sum_sufficient: return "fpr_sum_sufficient";
  }
  return "?";
}

template <class Point>
struct Verdict {
  u64 order = 1;          // |g| in the abstract group
  u64 induced_order = 1;  // order of the induced permutation
  bool has_regular_cycle = false;
  std::optional<Point> witness;
  Method method = Method::bruteforce;
  bool certified = false;
  std::vector<std::string> flags;
};

/// Throws unless x lies on a g-orbit of length exactly |g|.
template <InducedAction A>
void certify(const A& a, const typename A::element_type& g, const typename A::point_type& x) {
  const u64 want = a.group_order(g);
  const u64 got = element_orbit(a, g, x, want + 1).length;
  if (got != want)
    throw std::logic_error("witness certification failed: orbit " + std::to_string(got) +
                           " but |g| = " + std::to_string(want) + " on " + a.render(x));
}

template <InducedAction A>
bool is_regular_point(const A& a, const typename A::element_type& g, const typename A::point_type& x) {
  return orbit_length(a, g, x) == a.group_order(g);
}

namespace detail {

template <InducedAction A>
void mark_unfaithful(const A& a, Verdict<typename A::point_type>& v) {
  if (v.induced_order < v.order) v.flags.push_back("unfaithful");
  if constexpr (requires { a.unfaithful(); }) {
    if (a.unfaithful()) v.flags.push_back("unfaithful kernel");
  }
}

}  // namespace detail

/// Full scan of the induced permutation; first regular point in index order.
template <InducedAction A>
Verdict<typename A::point_type> decide_bruteforce(const A& a, const typename A::element_type& g,
                                                  u64 domain_cap = kDefaultDomainCap) {
  a.check_element(g);
  Verdict<typename A::point_type> v;
  v.method = Method::bruteforce;
  v.order = a.group_order(g);
  const Permutation p = induced_permutation(a, g, domain_cap);
  v.induced_order = p.order();
  detail::mark_unfaithful(a, v);
  if (v.induced_order == v.order) {
    std::vector<bool> seen(p.degree(), false);
    for (u32 i = 0; i < p.degree() && !v.witness; ++i) {
      if (seen[i]) continue;
      u64 len = 0;
      for (u32 j = i; !seen[j]; j = p(j)) {
        seen[j] = true;
        ++len;
      }
      if (len == v.order) v.witness = a.unrank(i);
    }
  }
  v.has_regular_cycle = v.witness.has_value();
  if (v.witness) certify(a, g, *v.witness);
  v.certified = true;
  return v;
}

/// Union of Fix(g^{|g|/p}) over primes p dividing |g|; a point outside the
/// union lies on a regular cycle.
template <InducedAction A>
Verdict<typename A::point_type> decide_fix_union(const A& a, const typename A::element_type& g,
                                                 u64 domain_cap = kDefaultDomainCap) {
  a.check_element(g);
  Verdict<typename A::point_type> v;
  v.method = Method::fix_union;
  v.order = a.group_order(g);
  const Permutation p = induced_permutation(a, g, domain_cap);
  v.induced_order = p.order();
  detail::mark_unfaithful(a, v);
  if (v.order == 1) {
    v.has_regular_cycle = a.size() > 0;
    if (v.has_regular_cycle) v.witness = a.unrank(0);
    v.certified = true;
    return v;
  }
  std::vector<bool> covered(p.degree(), false);
  for (u64 prime : factorize(v.order).primes()) {
    const Permutation q = p.pow(v.order / prime);
    for (u32 i = 0; i < q.degree(); ++i)
      if (q(i) == i) covered[i] = true;
  }
  for (u32 i = 0; i < covered.size(); ++i)
    if (!covered[i]) {
      v.witness = a.unrank(i);
      break;
    }
  v.has_regular_cycle = v.witness.has_value();
  if (v.witness) certify(a, g, *v.witness);
  v.certified = true;
  return v;
}

struct FprSum {
  Rational sum;
  std::vector<std::pair<u64, Rational>> terms;  // (prime, fpr of g^{|g|/p})
  bool certificate = false;                     // sum < 1 guarantees a regular cycle
};

/// Sum of exact fixed-point ratios of g^{|g|/p}. Only a sum below 1 is
/// conclusive.
template <InducedAction A>
FprSum fpr_sum_sufficient(const A& a, const typename A::element_type& g,
                          u64 domain_cap = kDefaultDomainCap) {
  a.check_element(g);
  const u64 order = a.group_order(g);
  if (order < 2) throw PreconditionError("fpr sum needs |g| >= 2");
  const Permutation p = induced_permutation(a, g, domain_cap);
  FprSum out;
  out.sum = 0;
  for (u64 prime : factorize(order).primes()) {
    const FixSet fs = fixed_points(p.pow(order / prime));
    const Rational r(static_cast<std::int64_t>(fs.count), static_cast<std::int64_t>(a.size()));
    out.terms.emplace_back(prime, r);
    out.sum += r;
  }
  out.certificate = out.sum < Rational(1);
  return out;
}

/// If w has a <g^p>-orbit of length |g|/p and p^2 divides |g|, then w lies
/// on a regular cycle of g. Returns w after certifying that.
template <InducedAction A>
typename A::point_type lift_witness(const A& a, const typename A::element_type& g, u64 p,
                                    const typename A::point_type& w) {
  a.check_element(g);
  a.check_point(w);
  const u64 order = a.group_order(g);
  if (!is_prime(p) || order % (p * p) != 0)
    throw PreconditionError("lift_witness: p^2 must divide |g|");
  // orbit of w under g^p, stepping p applications at a time
  auto step = [&](typename A::point_type x) {
    for (u64 i = 0; i < p; ++i) x = a.apply(g, x);
    return x;
  };
  u64 len = 1;
  for (auto y = step(w); !(y == w); y = step(y)) ++len;
  if (len != order / p) throw PreconditionError("lift_witness: <g^p>-orbit of w is not |g|/p");
  certify(a, g, w);
  return w;
}

// ---------------------------------------------------------------------------
// k-sets

enum class KSetCase { kLEQ_ell_minus_s, k_GT_with_room, impossible };

inline std::string to_string(KSetCase c) {
  switch (c) {
    case KSetCase::kLEQ_ell_minus_s: return "k_leq_ell_minus_s";
    case KSetCase::k_GT_with_room: return "k_gt_with_room";
    case KSetCase::impossible: return "impossible";
  }
  return "?";
}

struct KSetDecision {
  CycleType cycle_type;
  std::size_t k = 0;
  std::size_t min_cover_s = 0;
  std::vector<std::size_t> chosen_cycles;  // indices into cycle_type.parts()
  KSetCase case_tag = KSetCase::impossible;
};

struct CycleCover {
  std::vector<u64> lengths;  // ascending, distinct
};

/// Fewest cycle lengths whose lcm is lcm(parts). Ties go to the
/// lexicographically smallest ascending list.
inline CycleCover minimal_cover(std::span<const u32> parts) {
  u64 order = 1;
  for (u32 x : parts) order = lcm_u64(order, x);
  const auto pps = factorize(order).maximal_prime_powers();
  const std::size_t np = pps.size();
  if (np > 20) throw CapExceeded("too many prime powers for the cover search");
  std::vector<u64> lens;
  for (u32 x : parts) lens.push_back(x);
  std::sort(lens.begin(), lens.end());
  lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
  std::vector<u32> mask_of(lens.size(), 0);
  for (std::size_t i = 0; i < lens.size(); ++i)
    for (std::size_t j = 0; j < np; ++j)
      if (lens[i] % pps[j] == 0) mask_of[i] |= 1u << j;
  const u32 full = np == 32 ? ~0u : (1u << np) - 1;
  if (full == 0) return {};

  // Fewest sets covering each mask.
  constexpr u32 kInf = ~0u;
  std::vector<u32> best(std::size_t{1} << np, kInf);
  best[0] = 0;
  for (u32 m = 0; m <= full; ++m) {
    if (best[m] == kInf) continue;
    for (u32 c : mask_of) {
      const u32 nm = m | c;
      if (best[nm] > best[m] + 1) best[nm] = best[m] + 1;
    }
  }
  const std::size_t s = best[full];

  // Lexicographic combinations of size s over the ascending lengths.
  std::vector<std::size_t> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    u32 m = 0;
    for (auto i : idx) m |= mask_of[i];
    if (m == full) {
      CycleCover c;
      for (auto i : idx) c.lengths.push_back(lens[i]);
      return c;
    }
    std::size_t pos = s;
    while (pos > 0 && idx[pos - 1] == lens.size() - s + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  throw std::logic_error("minimal_cover: no cover of the computed size");
}

/// Combinatorial decision for Sym(m) on k-sets, k <= m/2.
inline std::pair<KSetDecision, Verdict<std::vector<u32>>> kset_decide(const CycleType& ct, std::size_t k) {
  const std::size_t m = ct.degree();
  if (k < 1 || 2 * k > m) throw PreconditionError("kset_decide needs 1 <= k <= m/2");
  KSetDecision d{ct, k, 0, {}, KSetCase::impossible};
  const CycleCover cover = minimal_cover(ct.parts());
  d.min_cover_s = cover.lengths.size();
  std::size_t ell = 0;
  for (u64 len : cover.lengths) {
    const auto parts = ct.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] == len) {
        d.chosen_cycles.push_back(i);
        break;
      }
    ell += len;
  }
  std::sort(d.chosen_cycles.begin(), d.chosen_cycles.end());
  Verdict<std::vector<u32>> v;
  v.method = Method::kset_combinatorial;
  v.order = ct.order();
  if (d.min_cover_s <= k) {
    d.case_tag = (k + d.min_cover_s <= ell) ? KSetCase::kLEQ_ell_minus_s : KSetCase::k_GT_with_room;
    v.has_regular_cycle = true;
    v.induced_order = v.order;
  } else {
    v.has_regular_cycle = false;
    // Every k-set misses a cycle of each cover; the induced order is only
    // known from a scan, so leave it at |g| unless computed elsewhere.
    v.induced_order = v.order;
  }
  v.certified = false;
  return {d, v};
}

namespace detail {

/// Chosen cycles of g for the minimal cover, sorted by ascending length,
/// each listed from its least point in cycle order.
inline std::vector<std::vector<u32>> chosen_cycles(const Permutation& g) {
  const auto cycles = g.cycles();
  std::vector<u32> parts;
  for (const auto& c : cycles) parts.push_back(static_cast<u32>(c.size()));
  const CycleCover cover = minimal_cover(parts);
  std::vector<std::vector<u32>> out;
  for (u64 len : cover.lengths)
    for (const auto& c : cycles)
      if (c.size() == len) {
        out.push_back(c);
        break;
      }
  return out;
}

}  // namespace detail

/// The k-set from the constructive proof, certified.
inline std::vector<u32> kset_witness(const Permutation& g, std::size_t k) {
  const std::size_t m = g.degree();
  if (k < 1 || k >= m) throw PreconditionError("kset_witness needs 1 <= k < m");
  KSetAction act(m, k);
  if (2 * k > m) {
    // complementation commutes with g
    const auto dual = kset_witness(g, m - k);
    std::vector<bool> in(m, false);
    for (u32 x : dual) in[x] = true;
    std::vector<u32> out;
    for (u32 x = 0; x < m; ++x)
      if (!in[x]) out.push_back(x);
    certify(act, g, out);
    return out;
  }
  const auto [dec, verdict] = kset_decide(CycleType::of(g), k);
  if (!verdict.has_regular_cycle) throw PreconditionError("kset_witness: g has no regular k-set cycle");
  const auto chosen = detail::chosen_cycles(g);
  const std::size_t s = chosen.size();
  std::size_t ell = 0;
  for (const auto& c : chosen) ell += c.size();

  std::vector<u32> X;
  if (s == 0) {
    for (u32 x = 0; x < k; ++x) X.push_back(x);
  } else if (k + s <= ell) {
    // x_i consecutive points of cycle i, 1 <= x_i <= l_i - 1, sum k
    std::vector<std::size_t> take(s, 1);
    std::size_t rest = k - s;
    for (std::size_t i = 0; i < s && rest; ++i) {
      const std::size_t add = std::min(rest, chosen[i].size() - 1 - take[i]);
      take[i] += add;
      rest -= add;
    }
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < take[i]; ++j) X.push_back(chosen[i][j]);
  } else {
    std::vector<bool> in_support(m, false);
    for (const auto& c : chosen) {
      for (u32 x : c) in_support[x] = true;
      for (std::size_t j = 0; j + 1 < c.size(); ++j) X.push_back(c[j]);
    }
    for (u32 x = 0; x < m && X.size() < k; ++x)
      if (!in_support[x]) X.push_back(x);
    if (X.size() != k) throw std::logic_error("kset_witness: not enough room off the chosen supports");
  }
  std::sort(X.begin(), X.end());
  certify(act, g, X);
  return X;
}

struct KSetScanRow {
  CycleType cycle_type;
  std::size_t min_cover_s;
};

struct KSetScanReport {
  std::size_t m = 0, k = 0;
  u64 threshold = 0;
  std::vector<KSetScanRow> failures;  // reverse-lex cycle-type order
  bool consistent = false;            // failures empty <=> m < threshold
};

inline KSetScanReport ksets_theorem_scan(std::size_t m, std::size_t k) {
  if (2 * k > m) throw PreconditionError("ksets scan needs m >= 2k");
  if (m > 90) throw CapExceeded("partition enumeration beyond m = 90");
  KSetScanReport rep{m, k, nk_threshold(static_cast<u32>(k)), {}, false};
  for_each_partition(static_cast<u32>(m), [&](const CycleType& ct) {
    auto [dec, v] = kset_decide(ct, k);
    if (!v.has_regular_cycle) rep.failures.push_back({ct, dec.min_cover_s});
  });
  rep.consistent = rep.failures.empty() == (m < rep.threshold);
  return rep;
}

// ---------------------------------------------------------------------------
// Uniform partitions

class ExceptionalCase : public PreconditionError {
 public:
  ExceptionalCase()
      : PreconditionError("(a,b) = (2,2): Sym(4) acts unfaithfully on (2,2)-uniform partitions; "
                          "the construction requires (a,b) != (2,2)") {}
};

struct PartitionConstruction {
  std::string rule;  // which case of the construction fired
  std::vector<std::vector<u32>> partition;
};

namespace detail {

/// Positions 0..n-1 are the relabelled points: chosen cycles first (by
/// ascending length, in cycle order), then the other cycles as listed.
struct Layout {
  std::vector<u32> point_at;                 // position -> point
  std::vector<std::size_t> chosen_len;       // l_1 <= ... <= l_s
  std::vector<std::size_t> chosen_start;     // first position of L_i
  std::size_t ell = 0;
};

inline Layout make_layout(const Permutation& g) {
  Layout lay;
  const auto chosen = chosen_cycles(g);  // already ascending by length
  std::vector<bool> used(g.degree(), false);
  for (const auto& c : chosen) {
    lay.chosen_start.push_back(lay.point_at.size());
    lay.chosen_len.push_back(c.size());
    lay.ell += c.size();
    for (u32 x : c) {
      lay.point_at.push_back(x);
      used[x] = true;
    }
  }
  for (const auto& c : g.cycles()) {
    if (used[c[0]]) continue;
    for (u32 x : c) lay.point_at.push_back(x);
  }
  return lay;
}

/// Chunks the given positions (in order) into blocks of size a.
inline void chunk_into(std::vector<std::vector<u32>>& blocks, const std::vector<u32>& positions, std::size_t a) {
  for (std::size_t i = 0; i < positions.size(); i += a)
    blocks.emplace_back(positions.begin() + i, positions.begin() + i + a);
}

inline std::vector<u32> unused_positions(const std::vector<std::vector<u32>>& blocks, std::size_t n) {
  std::vector<bool> used(n, false);
  for (const auto& b : blocks)
    for (u32 x : b) used[x] = true;
  std::vector<u32> out;
  for (u32 x = 0; x < n; ++x)
    if (!used[x]) out.push_back(x);
  return out;
}

/// Fill the remaining blocks from the largest positions downward: the last
/// block gets the a largest, the one before it the next a, and so on.
inline void fill_descending(std::vector<std::vector<u32>>& blocks, std::size_t n, std::size_t a) {
  auto rest = unused_positions(blocks, n);
  std::vector<std::vector<u32>> tail;
  while (!rest.empty()) {
    tail.emplace_back(rest.end() - static_cast<std::ptrdiff_t>(a), rest.end());
    rest.resize(rest.size() - a);
  }
  std::reverse(tail.begin(), tail.end());
  for (auto& b : tail) blocks.push_back(std::move(b));
}

inline void fill_ascending(std::vector<std::vector<u32>>& blocks, std::size_t n, std::size_t a) {
  chunk_into(blocks, unused_positions(blocks, n), a);
}

inline std::vector<u32> range_positions(std::size_t from, std::size_t to) {
  std::vector<u32> out;
  for (std::size_t x = from; x < to; ++x) out.push_back(static_cast<u32>(x));
  return out;
}

/// Single cycle carrying the whole order.
inline std::string lem1(const Layout& lay, std::size_t a, std::size_t b,
                        std::vector<std::vector<u32>>& blocks) {
  const std::size_t n = a * b;
  const std::size_t l1 = lay.chosen_len[0];
  if (a >= l1) {
    std::vector<u32> A1 = range_positions(0, l1 - 1);
    for (std::size_t x = l1; A1.size() < a; ++x) A1.push_back(static_cast<u32>(x));
    blocks.push_back(A1);
    fill_ascending(blocks, n, a);
    return "single-cycle:a>=l1";
  }
  const std::size_t q = l1 / a, r = l1 % a;
  if (r >= 1) {
    fill_ascending(blocks, n, a);
    return "single-cycle:remainder";
  }
  if (q < b) {
    for (std::size_t i = 0; i + 1 < q; ++i) blocks.push_back(range_positions(i * a, (i + 1) * a));
    std::vector<u32> Aq = range_positions((q - 1) * a, q * a - 1);
    Aq.push_back(static_cast<u32>(q * a));
    std::vector<u32> Aq1{static_cast<u32>(q * a - 1)};
    for (std::size_t x = q * a + 1; x < (q + 1) * a; ++x) Aq1.push_back(static_cast<u32>(x));
    blocks.push_back(Aq);
    blocks.push_back(Aq1);
    fill_ascending(blocks, n, a);
    return "single-cycle:divisible";
  }
  // g is a full ab-cycle
  if (a > 2) {
    // 1-indexed: A1 = {2..a-1, 2a-1, 2a}, A2 = {1, a..2a-2}
    std::vector<u32> A1 = range_positions(1, a - 1);
    A1.push_back(static_cast<u32>(2 * a - 2));
    A1.push_back(static_cast<u32>(2 * a - 1));
    std::vector<u32> A2{0};
    for (std::size_t x = a - 1; x <= 2 * a - 3; ++x) A2.push_back(static_cast<u32>(x));
    blocks.push_back(A1);
    blocks.push_back(A2);
    fill_ascending(blocks, n, a);
    return "single-cycle:full-cycle";
  }
  blocks.push_back({0, 2});
  blocks.push_back({1, 3});
  fill_ascending(blocks, n, a);
  return "single-cycle:full-cycle-pairs";
}

/// s >= 2 and s <= a <= l - s.
inline std::string lem2(const Layout& lay, std::size_t a, std::size_t b,
                        std::vector<std::vector<u32>>& blocks) {
  const std::size_t s = lay.chosen_len.size();
  const auto& L = lay.chosen_len;
  std::vector<std::size_t> x(s, 1);
  std::size_t rest = a - s;
  for (std::size_t i = s; i-- > 0 && rest;) {
    const std::size_t add = std::min(rest, L[i] - 1 - x[i]);
    x[i] += add;
    rest -= add;
  }
  if (rest) throw std::logic_error("partition construction: cannot distribute a over the cycles");
  const bool all_one = std::all_of(x.begin(), x.end(), [](std::size_t v) { return v == 1; });
  if (!all_one && L[0] != 2 && L[0] == 2 * x[0]) {
    bool others_one = true;
    for (std::size_t i = 1; i < s; ++i) others_one &= x[i] == 1;
    if (others_one) {
      --x[0];
      ++x[1];
    } else {
      for (std::size_t i = 1; i < s; ++i)
        if (x[i] > 1) {
          --x[i];
          ++x[0];
          break;
        }
    }
  }
  std::vector<u32> A1;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < x[i]; ++j) A1.push_back(static_cast<u32>(lay.chosen_start[i] + j));
  blocks.push_back(A1);
  fill_descending(blocks, a * b, a);
  return "several-cycles:middle";
}

/// s >= 2 and a > l - s.
inline std::string lem3(const Layout& lay, std::size_t a, std::size_t b,
                        std::vector<std::vector<u32>>& blocks) {
  std::vector<u32> A1;
  for (std::size_t i = 0; i < lay.chosen_len.size(); ++i)
    for (std::size_t j = 0; j + 1 < lay.chosen_len[i]; ++j)
      A1.push_back(static_cast<u32>(lay.chosen_start[i] + j));
  for (std::size_t x = lay.ell; A1.size() < a; ++x) A1.push_back(static_cast<u32>(x));
  blocks.push_back(A1);
  fill_ascending(blocks, a * b, a);
  return "several-cycles:large-block";
}

/// s >= 2 and a < s.
inline std::string lem4(const Layout& lay, std::size_t a, std::size_t b,
                        std::vector<std::vector<u32>>& blocks) {
  const std::size_t s = lay.chosen_len.size();
  const std::size_t q = s / a, r = s % a;
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<u32> Ai;
    for (std::size_t j = 0; j < a; ++j) Ai.push_back(static_cast<u32>(lay.chosen_start[i * a + j]));
    blocks.push_back(Ai);
  }
  if (r > 0) {
    std::vector<u32> A;
    for (std::size_t j = 0; j < r; ++j) A.push_back(static_cast<u32>(lay.chosen_start[q * a + j]));
    for (std::size_t j = 0; j < a - r; ++j) A.push_back(static_cast<u32>(lay.chosen_start[j] + 1));
    blocks.push_back(A);
  }
  fill_descending(blocks, a * b, a);
  return "several-cycles:small-block";
}

inline std::vector<std::vector<u32>> to_points(const Layout& lay, const std::vector<std::vector<u32>>& blocks) {
  std::vector<std::vector<u32>> out;
  for (const auto& b : blocks) {
    std::vector<u32> pts;
    for (u32 pos : b) pts.push_back(lay.point_at[pos]);
    out.push_back(std::move(pts));
  }
  return PartitionAction::canonicalize(std::move(out));
}

/// Breadth-first search over single swaps between blocks, for an
/// element of prime order where any partition it moves is regular.
inline std::vector<std::vector<u32>> nearest_moved(const PartitionAction& act, const Permutation& g,
                                                   std::vector<std::vector<u32>> start) {
  std::vector<std::vector<std::vector<u32>>> frontier{start};
  std::set<std::vector<std::vector<u32>>> seen{start};
  while (!frontier.empty()) {
    std::vector<std::vector<std::vector<u32>>> next;
    for (const auto& p : frontier) {
      if (!(act.apply(g, p) == p)) return p;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
          for (std::size_t u = 0; u < p[i].size(); ++u)
            for (std::size_t w = 0; w < p[j].size(); ++w) {
              auto q = p;
              std::swap(q[i][u], q[j][w]);
              q = PartitionAction::canonicalize(std::move(q));
              if (seen.insert(q).second) next.push_back(std::move(q));
            }
    }
    frontier = std::move(next);
  }
  throw std::logic_error("no partition moved by a nonidentity element");
}

}  // namespace detail

/// Witness partition following the case analysis for uniform partitions.
inline PartitionConstruction partition_witness_traced(const Permutation& g, std::size_t a, std::size_t b) {
  if (a < 1 || b < 1 || a * b != g.degree()) throw PreconditionError("partition_witness: ab must equal the degree");
  if (a == 2 && b == 2) throw ExceptionalCase();
  if (a < 2 || b < 2) throw PreconditionError("partition_witness needs a, b >= 2");
  PartitionAction act(a, b);
  PartitionConstruction out;
  const auto lay = detail::make_layout(g);
  const std::size_t s = lay.chosen_len.size();
  std::vector<std::vector<u32>> blocks;
  if (s == 0) {
    detail::fill_ascending(blocks, a * b, a);
    out.rule = "identity";
  } else if (s == 1) {
    out.rule = detail::lem1(lay, a, b, blocks);
  } else if (a < s) {
    out.rule = detail::lem4(lay, a, b, blocks);
  } else if (a + s <= lay.ell) {
    out.rule = detail::lem2(lay, a, b, blocks);
  } else {
    out.rule = detail::lem3(lay, a, b, blocks);
  }
  out.partition = detail::to_points(lay, blocks);
  if (s == 1 && is_prime(lay.chosen_len[0]) && !is_regular_point(act, g, out.partition)) {
    out.partition = detail::nearest_moved(act, g, out.partition);
    out.rule += "+prime-search";
  }
  certify(act, g, out.partition);
  return out;
}

inline std::vector<std::vector<u32>> partition_witness(const Permutation& g, std::size_t a, std::size_t b) {
  return partition_witness_traced(g, a, b).partition;
}

// ---------------------------------------------------------------------------
// Product action

/// Regular point for an inner element h, or nullopt.
template <class Inner>
using InnerWitnessFn =
    std::function<std::optional<typename Inner::point_type>(const typename Inner::element_type&)>;

template <InducedAction Inner>
std::optional<typename Inner::point_type> inner_bruteforce_witness(const Inner& inner,
                                                                   const typename Inner::element_type& h) {
  return decide_bruteforce(inner, h).witness;
}

/// Regular point of g = (h_1..h_r; sigma) on Delta^r. Each sigma-cycle
/// (c_1 .. c_L) is conjugated by a base element to a form carrying the
/// block product h = h_{c_1} ... h_{c_L} in a single coordinate; the
/// block point is delta at c_1 and delta^{h_{c_1}...h_{c_{j-1}}} at c_j,
/// with delta regular for h (or delta' != delta at c_1 when h = 1).
template <InducedAction Inner>
typename ProductAction<Inner>::point_type product_witness(const ProductAction<Inner>& act,
                                                          const typename ProductAction<Inner>::element_type& g,
                                                          InnerWitnessFn<Inner> inner_witness = {}) {
  act.check_element(g);
  const Inner& inner = act.inner();
  if (inner.size() < 2) throw PreconditionError("product_witness: inner domain has a single point");
  if (!inner_witness)
    inner_witness = [&inner](const typename Inner::element_type& h) { return inner_bruteforce_witness(inner, h); };
  typename ProductAction<Inner>::point_type x(act.arity());
  for (const auto& cyc : g.sigma.cycles()) {
    auto h = g.coords[cyc[0]];
    for (std::size_t j = 1; j < cyc.size(); ++j) h = h * g.coords[cyc[j]];
    const auto delta = inner_witness(h);
    if (!delta) throw PreconditionError("product_witness: block product has no regular inner point");
    inner.check_point(*delta);
    if (orbit_length(inner, h, *delta) != inner.group_order(h))
      throw PreconditionError("product_witness: supplied inner witness is not regular");
    auto cur = *delta;
    x[cyc[0]] = cur;
    for (std::size_t j = 1; j < cyc.size(); ++j) {
      cur = inner.apply(g.coords[cyc[j - 1]], cur);
      x[cyc[j]] = cur;
    }
    if (inner.group_order(h) == 1 && cyc.size() > 1) {
      // any point other than delta
      const u64 d = inner.rank(*delta);
      x[cyc[0]] = inner.unrank(d == 0 ? 1 : 0);
    }
  }
  certify(act, g, x);
  return x;
}

// ---------------------------------------------------------------------------
// Linear and affine

struct SpanningSet {
  Matrix g;
  std::vector<Vec> regular_vectors;
  bool spans = false;
};

inline SpanningSet gl_regular_vector_set(const Matrix& g, u64 domain_cap = kDefaultDomainCap) {
  VectorAction act(g.field(), g.rows());
  act.check_element(g);
  if (act.size() > domain_cap) throw CapExceeded("vector space exceeds the domain cap");
  SpanningSet out{g, {}, false};
  const Permutation p = induced_permutation(act, g, domain_cap);
  const u64 order = g.order();
  std::vector<u64> len(p.degree(), 0);
  for (const auto& c : p.cycles())
    for (u32 x : c) len[x] = c.size();
  for (u32 i = 0; i < p.degree(); ++i)
    if (len[i] == order) out.regular_vectors.push_back(act.unrank(i));
  for (const auto& v : out.regular_vectors) certify(act, g, v);
  if (!out.regular_vectors.empty()) {
    std::vector<FieldElem> rows;
    for (const auto& v : out.regular_vectors) rows.insert(rows.end(), v.begin(), v.end());
    Matrix span(g.field(), out.regular_vectors.size(), g.rows(), std::move(rows));
    out.spans = span.rank() == g.rows();
  }
  return out;
}

/// Affine witness through the linear embedding w -> (w, 1).
inline Vec affine_witness(const AffineMap& f, u64 domain_cap = kDefaultDomainCap) {
  AffineAction aff(f.linear.field(), f.dimension());
  aff.check_element(f);
  const Field& F = f.linear.field();
  const Matrix B = f.block_matrix();
  VectorAction lin(F, f.dimension() + 1);
  if (lin.size() > domain_cap) throw CapExceeded("affine embedding exceeds the domain cap");
  const u64 order = B.order();
  for (u64 i = 0; i < lin.size(); ++i) {
    Vec u = lin.unrank(i);
    const FieldElem lambda = u.back();
    if (lambda == 0) continue;
    if (orbit_length(lin, B, u) != order) continue;
    const FieldElem li = F.inv(lambda);
    Vec w(f.dimension());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = F.mul(li, u[j]);
    certify(aff, f, w);
    return w;
  }
  throw std::logic_error("affine_witness: no regular vector with nonzero last coordinate");
}

// ---------------------------------------------------------------------------
// Fixed-point ratios in wreath products

struct WreathFprReport {
  Rational wreath_max;
  Rational inner_max;
  u64 elements_scanned = 0;
  bool equal = false;
};

inline Rational max_nonidentity_fpr(const GeneratedGroup& A) {
  Rational best(0);
  for (const auto& a : A.elements()) {
    if (a.is_identity()) continue;
    const FixSet fs = fixed_points(a);
    best = std::max(best, Rational(static_cast<std::int64_t>(fs.count), static_cast<std::int64_t>(A.degree())));
  }
  return best;
}

/// Maximum fpr of a nonidentity element of A wr B on Delta^l, over all
/// elements, compared against the maximum in A on Delta.
inline WreathFprReport wreath_fpr_max(const GeneratedGroup& A, const GeneratedGroup& B,
                                      u64 domain_cap = kDefaultDomainCap) {
  bool has_fixed = false;
  for (const auto& a : A.elements())
    if (!a.is_identity() && fixed_points(a).count > 0) has_fixed = true;
  if (!has_fixed) throw PreconditionError("wreath_fpr_max: A is regular (no nonidentity element fixes a point)");
  const std::size_t ell = B.degree();
  ProductAction<NaturalAction> act(NaturalAction(A.degree()), ell);
  if (act.size() > domain_cap) throw CapExceeded("wreath domain exceeds the cap");
  WreathFprReport rep;
  rep.inner_max = max_nonidentity_fpr(A);
  rep.wreath_max = 0;
  const auto& el = A.elements();
  std::vector<std::size_t> digit(ell, 0);
  const std::int64_t dom = static_cast<std::int64_t>(act.size());
  for (const auto& sigma : B.elements()) {
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      WreathElement<Permutation> w;
      w.sigma = sigma;
      bool identity = sigma.is_identity();
      for (std::size_t i = 0; i < ell; ++i) {
        w.coords.push_back(el[digit[i]]);
        identity = identity && el[digit[i]].is_identity();
      }
      ++rep.elements_scanned;
      if (!identity) {
        const FixSet fs = fixed_points(act.induced(w));
        rep.wreath_max = std::max(rep.wreath_max, Rational(static_cast<std::int64_t>(fs.count), dom));
      }
      std::size_t i = 0;
      while (i < ell && ++digit[i] == el.size()) digit[i++] = 0;
      if (i == ell) break;
    }
  }
  rep.equal = rep.wreath_max == rep.inner_max;
  return rep;
}

// ---------------------------------------------------------------------------
// Diagonal fpr audit

/// Minimal faithful permutation degree m(T) and omega(|Aut T|).
struct MinDegreeEntry {
  std::string family;
  u64 parameter = 0;
  u64 min_degree = 0;
  u64 omega_aut = 0;
};

namespace detail {

inline u64 omega_of_product(std::initializer_list<u64> factors) {
  std::set<u64> primes;
  for (u64 f : factors)
    for (u64 p : factorize(f).primes()) primes.insert(p);
  return primes.size();
}

inline std::optional<MinDegreeEntry> user_table_entry(const std::string& family, u64 parameter) {
  const char* path = std::getenv("REGCYCLE_MT_TABLE");
  if (!path || !*path) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw PreconditionError(std::string("cannot read REGCYCLE_MT_TABLE file ") + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    MinDegreeEntry e;
    if (!(row >> e.family >> e.parameter >> e.min_degree >> e.omega_aut))
      throw ParseError("malformed m(T) table row: " + line);
    if (e.family == family && e.parameter == parameter) return e;
  }
  return std::nullopt;
}

}  // namespace detail

/// Built-in entries: alt (parameter n >= 5) and psl2 (parameter q).
/// A user table named by REGCYCLE_MT_TABLE takes precedence.
inline MinDegreeEntry min_degree_entry(const std::string& family, u64 parameter) {
  if (auto e = detail::user_table_entry(family, parameter)) return *e;
  if (family == "alt" && parameter >= 5) {
    u64 primes = 0;
    for (u64 p = 2; p <= parameter; ++p) primes += is_prime(p) ? 1 : 0;
    return {family, parameter, parameter, primes};
  }
  if (family == "psl2" && parameter >= 4) {
    const auto f = factorize(parameter);
    if (f.omega() != 1) throw PreconditionError("psl2 parameter must be a prime power");
    const u64 q = parameter, e = f.prime_powers()[0].exponent;
    u64 md = q + 1;
    if (q == 5) md = 5;
    if (q == 7) md = 7;
    if (q == 9) md = 6;
    if (q == 11) md = 11;
    return {family, q, md, detail::omega_of_product({e, q, q - 1, q + 1})};
  }
  throw PreconditionError("no m(T) entry for " + family + ":" + std::to_string(parameter));
}

enum class DiagonalShape { automorphism_translation, sigma_fixes_zero, sigma_moves_zero };

inline std::string to_string(DiagonalShape s) {
  switch (s) {
    case DiagonalShape::automorphism_translation: return "phi*m";
    case DiagonalShape::sigma_fixes_zero: return "sigma fixes 0";
    case DiagonalShape::sigma_moves_zero: return "sigma moves 0";
  }
  return "?";
}

struct DiagonalShapeStats {
  u64 elements = 0;          // prime-order elements examined
  Rational max_fpr{0};
  Rational bound{0};         // the loosest bound applied in this shape
  u64 violations = 0;
};

struct DiagonalAudit {
  std::size_t ell = 0;
  u64 min_degree = 0;
  std::map<DiagonalShape, DiagonalShapeStats> shapes;
  Rational involution_swap_fpr{0};  // sigma = (0 1), phi = 1, m = 1 when l = 1
  u64 elements_examined = 0;
  bool ok = true;
};

namespace detail {

inline Rational diagonal_bound(DiagonalShape shape, u64 p, u64 mT, u64 T, std::size_t ell) {
  auto inv_pow = [](u64 base, u64 e) {
    std::int64_t d = 1;
    for (u64 i = 0; i < e; ++i) {
      if (d > (std::int64_t{1} << 62) / static_cast<std::int64_t>(base)) return Rational(0);  // below any fpr we can see
      d *= static_cast<std::int64_t>(base);
    }
    return Rational(1, d);
  };
  switch (shape) {
    case DiagonalShape::automorphism_translation: return inv_pow(mT, ell);
    case DiagonalShape::sigma_fixes_zero: return inv_pow(T, p - 1);
    case DiagonalShape::sigma_moves_zero: return p == 2 ? Rational(4, 15) : inv_pow(T, p - 2);
  }
  return Rational(0);
}

}  // namespace detail

/// Checks every prime-order element produced by `elements` (given in
/// sigma*phi*m form with t_0 = 1) against the bound for its shape.
template <class ElementSource>
DiagonalAudit diagonal_fpr_audit_over(const DiagonalSetting& S, u64 mT, ElementSource&& elements) {
  DiagonalAudit audit;
  audit.ell = S.ell();
  audit.min_degree = mT;
  const u64 T = S.target_order();
  const std::int64_t dom = static_cast<std::int64_t>(S.size());
  elements([&](const DiagonalElement& x) {
    const Permutation px = S.to_permutation(x);
    const u64 n = px.order();
    if (n < 2) return;
    for (u64 p : factorize(n).primes()) {
      const DiagonalElement y = S.normalize(S.power(x, n / p));
      const u64 fix = fixed_points(px.pow(n / p)).count;
      if (fixed_points(S.to_permutation(y)).count != fix)
        throw std::logic_error("diagonal power disagrees with the induced permutation");
      DiagonalShape shape = DiagonalShape::automorphism_translation;
      if (!y.sigma.is_identity()) shape = y.sigma(0) == 0 ? DiagonalShape::sigma_fixes_zero : DiagonalShape::sigma_moves_zero;
      const Rational fpr(static_cast<std::int64_t>(fix), dom);
      const Rational bound = detail::diagonal_bound(shape, p, mT, T, S.ell());
      auto& st = audit.shapes[shape];
      ++st.elements;
      st.max_fpr = std::max(st.max_fpr, fpr);
      st.bound = std::max(st.bound, bound);
      if (fpr > bound) {
        ++st.violations;
        audit.ok = false;
      }
    }
    ++audit.elements_examined;
  });
  if (S.ell() == 1) {
    DiagonalElement swap = S.identity();
    swap.sigma = Permutation(std::vector<u32>{1, 0});
    audit.involution_swap_fpr =
        Rational(static_cast<std::int64_t>(fixed_points(S.to_permutation(swap)).count), dom);
  }
  return audit;
}

/// Exhaustive over W when |W| is small enough, otherwise `samples` seeded
/// random elements (powers of each sampled element are audited too).
inline DiagonalAudit diagonal_fpr_audit(const DiagonalSetting& S, u64 mT, u64 samples = 0, u64 seed = 1,
                                        u64 exhaustive_cap = 200'000) {
  const auto& amb = S.automorphisms();
  u64 sym = 1;
  for (u64 i = 2; i <= S.ell() + 1; ++i) sym *= i;
  const u64 W = sym * amb.count() * S.size();
  if (samples == 0 && W <= exhaustive_cap) {
    return diagonal_fpr_audit_over(S, mT, [&](auto&& visit) { for_each_diagonal_element(S, visit); });
  }
  std::mt19937_64 rng(seed);
  return diagonal_fpr_audit_over(S, mT, [&](auto&& visit) {
    for (u64 i = 0; i < samples; ++i) visit(S.random_element(rng));
  });
}

// ---------------------------------------------------------------------------
// Conjecture statistics

struct CycleRatio {
  u64 regular_cycles = 0;  // orbits of length |g|
  u64 total_cycles = 0;    // all orbits, fixed points included
  Rational ratio{0};
};

template <InducedAction A>
CycleRatio cycle_ratio_stats(const A& a, const typename A::element_type& g, u64 domain_cap = kDefaultDomainCap) {
  a.check_element(g);
  const u64 order = a.group_order(g);
  const Permutation p = induced_permutation(a, g, domain_cap);
  CycleRatio r;
  for (const auto& c : p.cycles()) {
    ++r.total_cycles;
    if (c.size() == order) ++r.regular_cycles;
  }
  r.ratio = Rational(static_cast<std::int64_t>(r.regular_cycles), static_cast<std::int64_t>(r.total_cycles));
  return r;
}

}  // namespace regcycle
