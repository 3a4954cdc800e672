#pragma once

// Analytic inequalities evaluated with interval arithmetic in log space.
// A check passes only when it holds with the required margin at the
// unfavourable endpoint; a certain violation fails; anything in between is
// inconclusive.

#include <cstdint>
#include <string>
#include <vector>

#include "regcycle/interval.hpp"
#include "regcycle/permcore.hpp"
#include "regcycle/rational.hpp"

namespace regcycle {

inline constexpr double kDefaultMargin = 1e-9;

enum class CheckStatus { pass, fail, inconclusive };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct Check {
  CheckStatus status = CheckStatus::inconclusive;
  double slack = 0;  // lower end of (rhs - lhs); negative when violated
  bool passed() const { return status == CheckStatus::pass; }
};

/// lhs <= rhs (or <) with margin: rhs - lhs must be at least `margin`.
template <class T>
Check check_leq(const Interval<T>& lhs, const Interval<T>& rhs, double margin = kDefaultMargin) {
  const Interval<T> d = rhs - lhs;
  Check c;
  c.slack = to_double(d.lo());
  if (d.lo() >= T(margin)) c.status = CheckStatus::pass;
  else if (d.hi() < 0) c.status = CheckStatus::fail;
  else c.status = CheckStatus::inconclusive;
  return c;
}

using HI = Interval<HighFloat>;
using DI = Interval<double>;

// ---------------------------------------------------------------------------
// omega(n) against log n / (log log n - 1.1714)

template <class T = double>
Interval<T> robin_bound(std::uint64_t n) {
  if (n < 26) throw PreconditionError("robin_bound needs n >= 26");
  const auto L = log(Interval<T>::constant(T(static_cast<double>(n))));
  return L / (log(L) - Interval<T>::ratio(11714, 10000));
}

struct RobinSweep {
  std::uint64_t from = 0, to = 0;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::vector<std::uint64_t> not_passed;  // first few offenders
  double min_log_slack = 1e300;
  bool ok() const { return passed == checked; }
};

/// omega(n) <= bound for every n in [from, to], omega from a sieve.
inline RobinSweep robin_sweep(std::uint64_t from, std::uint64_t to, double margin = kDefaultMargin) {
  if (from < 26) throw PreconditionError("robin sweep starts at n >= 26");
  std::vector<std::uint8_t> omega(to + 1, 0);
  for (std::uint64_t p = 2; p <= to; ++p)
    if (omega[p] == 0)
      for (std::uint64_t q = p; q <= to; q += p) ++omega[q];
  RobinSweep s{from, to, 0, 0, {}, 1e300};
  for (std::uint64_t n = from; n <= to; ++n) {
    ++s.checked;
    const auto b = robin_bound<double>(n);
    // compare in log space: log(omega) <= log(bound)
    const Check c = check_leq(log(DI::constant(static_cast<double>(omega[n]))), log(b), margin);
    s.min_log_slack = std::min(s.min_log_slack, c.slack);
    if (c.passed()) ++s.passed;
    else if (s.not_passed.size() < 16) s.not_passed.push_back(n);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Landau's function and the Massias bound

/// Largest element order in Sym(m): maximise the product of prime powers
/// with sum at most m.
inline std::uint64_t landau_exact(std::uint32_t m) {
  if (m < 1 || m > 200) throw PreconditionError("landau_exact supports 1 <= m <= 200");
  std::vector<BigInt> best(m + 1, 1);
  for (std::uint32_t p = 2; p <= m; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint32_t j = m; j >= 2; --j) {
      BigInt bj = best[j];
      for (std::uint64_t pk = p; pk <= j; pk *= p) {
        BigInt cand = best[j - pk] * pk;
        if (cand > bj) bj = cand;
      }
      best[j] = bj;
    }
  }
  return static_cast<std::uint64_t>(best[m]);
}

template <class T = HighFloat>
Interval<T> massias_bound(std::uint64_t m) {
  if (m < 3) throw PreconditionError("massias_bound needs m >= 3");
  const auto M = Interval<T>::constant(T(static_cast<double>(m)));
  const auto L = log(M);
  return sqrt(M * L) * (Interval<T>(T(1)) + (log(L) - Interval<T>::ratio(975, 1000)) / (Interval<T>(T(2)) * L));
}

/// log(landau(m)) <= massias_bound(m).
inline Check landau_vs_massias(std::uint32_t m, double margin = kDefaultMargin) {
  return check_leq(log_integer<HighFloat>(landau_exact(m)), massias_bound(m), margin);
}

// ---------------------------------------------------------------------------
// Stirling brackets

struct StirlingResult {
  std::uint32_t n = 0;
  Check lower;  // log lower-bracket <= log n!
  Check upper;  // log n! <= log upper-bracket
};

/// Both brackets for n = 1..n_max, with log n! accumulated exactly.
inline std::vector<StirlingResult> stirling_sweep(std::uint32_t n_max, double margin = kDefaultMargin) {
  if (n_max < 1 || n_max > 1000) throw PreconditionError("stirling check supports 1 <= n <= 1000");
  std::vector<StirlingResult> out;
  HI log_fact = HI(HighFloat(0));
  const HI two_pi = HI(HighFloat(2)) * pi_interval<HighFloat>();
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const HI N = HI(HighFloat(n));
    log_fact = log_fact + log(N);
    // log sqrt(2 pi n) + n log n - n
    const HI base = HI(HighFloat("0.5")) * log(two_pi * N) + N * log(N) - N;
    const HI lower = base + HI(HighFloat(1)) / HI(HighFloat(12 * n + 1));
    const HI upper = base + HI(HighFloat(1)) / HI(HighFloat(12 * n));
    out.push_back({n, check_leq(lower, log_fact, margin), check_leq(log_fact, upper, margin)});
  }
  return out;
}

inline StirlingResult stirling_check(std::uint32_t n, double margin = kDefaultMargin) {
  if (n < 1 || n > 1000) throw PreconditionError("stirling check supports 1 <= n <= 1000");
  return stirling_sweep(n, margin).back();
}

// ---------------------------------------------------------------------------
// Technical inequality: p^k (r/e)^r (k/e)^k (m/e)^-m <= (m/e)^{((a-1)/2) m}

namespace detail {

/// x log x - x, with 0 log 0 = 0.
template <class T>
Interval<T> xlogx_minus_x(std::uint64_t x) {
  if (x == 0) return Interval<T>(T(0));
  const auto X = Interval<T>(T(static_cast<double>(x)));
  return X * log(X) - X;
}

}  // namespace detail

/// Evaluated in T; double suffices for m in the low thousands since both
/// sides are O(m log m) and the margin is absolute.
template <class T = HighFloat>
Check technical_inequality(std::uint64_t m, std::uint64_t k, std::uint64_t p, const Rational& alpha,
                           double margin = kDefaultMargin) {
  using I = Interval<T>;
  if (m < 1 || k < 1 || !is_prime(p)) throw PreconditionError("technical inequality: m, k >= 1 and p prime");
  if (alpha <= 0 || alpha >= 1) throw PreconditionError("technical inequality: alpha must lie in (0,1)");
  if (k * p > m) throw PreconditionError("technical inequality: r = m - kp is negative");
  const std::uint64_t r = m - k * p;
  if (Rational(static_cast<std::int64_t>(r)) > alpha * Rational(static_cast<std::int64_t>(m)))
    throw PreconditionError("technical inequality: r exceeds alpha * m");
  const I K(T(static_cast<double>(k)));
  const I lhs = K * log(I(T(static_cast<double>(p)))) + detail::xlogx_minus_x<T>(r) + detail::xlogx_minus_x<T>(k) -
                detail::xlogx_minus_x<T>(m);
  const I a = I::ratio(alpha.numerator(), alpha.denominator());
  const I M(T(static_cast<double>(m)));
  const I rhs = (a - I(T(1))) / I(T(2)) * (M * log(M) - M);
  return check_leq(lhs, rhs, margin);
}

struct TechnicalSweep {
  std::uint64_t checked = 0, passed = 0;
  std::vector<std::string> not_passed;
  bool ok() const { return checked == passed; }
};

/// m in [m_from, m_to], primes p <= p_max, every k with 0 <= m - kp <= alpha m,
/// alpha in {4/7} and {1 - 2/c : 3 <= c <= c_max}.
inline TechnicalSweep technical_sweep(std::uint64_t m_from, std::uint64_t m_to, std::uint64_t p_max = 13,
                                      std::uint64_t c_max = 30, double margin = kDefaultMargin) {
  std::vector<Rational> alphas{Rational(4, 7)};
  for (std::int64_t c = 3; c <= static_cast<std::int64_t>(c_max); ++c) alphas.push_back(Rational(c - 2, c));
  TechnicalSweep s;
  for (std::uint64_t m = m_from; m <= m_to; ++m)
    for (std::uint64_t p = 2; p <= p_max; ++p) {
      if (!is_prime(p)) continue;
      for (std::uint64_t k = 1; k * p <= m; ++k)
        for (const auto& a : alphas) {
          const std::uint64_t r = m - k * p;
          if (Rational(static_cast<std::int64_t>(r)) > a * Rational(static_cast<std::int64_t>(m))) continue;
          ++s.checked;
          if (technical_inequality<double>(m, k, p, a, margin).passed()) ++s.passed;
          else if (s.not_passed.size() < 16)
            s.not_passed.push_back("m=" + std::to_string(m) + " k=" + std::to_string(k) + " p=" +
                                   std::to_string(p) + " alpha=" + to_string(a));
        }
    }
  return s;
}

// ---------------------------------------------------------------------------
// The order-bound pipeline for primitive stabilizers

/// N_m = m * prod_{i < floor(log2 m)} (m - 2^i), exactly.
inline BigInt maroti_bound(std::uint64_t m) {
  if (m < 1) throw PreconditionError("N_m needs m >= 1");
  BigInt n = m;
  std::uint64_t lg = 0;
  while ((std::uint64_t{2} << lg) <= m) ++lg;  // floor(log2 m)
  for (std::uint64_t i = 0; i < lg; ++i) n *= (m - (std::uint64_t{1} << i));
  return n;
}

struct BoundsContext {
  std::uint64_t m = 0;
  BigInt N_m;
  HI log_N_m;
  HI alpha_m;       // bound on omega(|g|) for g in Sym(m)
  HI beta_m;        // paper constant 1.2
  HI beta_exact_m;  // C_1^2 / c_m in place of 1.2
  HI log_product;        // log(alpha * beta)
  HI log_product_exact;  // log(alpha * beta_exact)
  Check product;         // alpha * beta < 1
  Check product_exact;   // alpha * beta_exact < 1
};

/// alpha at the Massias bound: L / (log L - 1.1714) with L bounding log|g|.
inline HI omega_bound_from_log(const HI& L) { return L / (log(L) - HI::ratio(11714, 10000)); }

inline BoundsContext bounds_context(std::uint64_t m, double margin = kDefaultMargin) {
  if (m < 3) throw PreconditionError("bounds context needs m >= 3");
  BoundsContext ctx;
  ctx.m = m;
  ctx.N_m = maroti_bound(m);
  ctx.log_N_m = log_integer<HighFloat>(ctx.N_m);
  ctx.alpha_m = omega_bound_from_log(massias_bound(m));
  const HI M = HI(HighFloat(static_cast<double>(m)));
  const HI pi = pi_interval<HighFloat>();
  // log[ sqrt(16 pi m / 7) N_m (m/e)^{-3m/14} ]
  const HI core = HI(HighFloat("0.5")) * log(HI(HighFloat(16)) * pi * M / HI(HighFloat(7))) + ctx.log_N_m -
                  HI::ratio(3, 14) * M * (log(M) - HI(HighFloat(1)));
  const HI log_beta = log(HI::ratio(12, 10)) + core;
  // C_1^2 / c_m = exp(2/12 - 1/(12m+1))
  const HI log_beta_exact =
      HI::ratio(1, 6) - HI(HighFloat(1)) / HI(HighFloat(static_cast<double>(12 * m + 1))) + core;
  ctx.beta_m = exp(log_beta);
  ctx.beta_exact_m = exp(log_beta_exact);
  ctx.log_product = log(ctx.alpha_m) + log_beta;
  ctx.log_product_exact = log(ctx.alpha_m) + log_beta_exact;
  ctx.product = check_leq(ctx.log_product, HI(HighFloat(0)), margin);
  ctx.product_exact = check_leq(ctx.log_product_exact, HI(HighFloat(0)), margin);
  return ctx;
}

struct AlphaBetaScan {
  std::uint64_t from = 0, to = 0;
  std::vector<BoundsContext> rows;
  std::uint64_t passed = 0, passed_exact = 0;
  // m >= 100 where the product exceeds its predecessor; N_m gains a factor
  // at each power of two, so these are expected exactly there
  std::vector<std::uint64_t> tail_increases;
  bool tail_decreasing_off_powers_of_two() const {
    for (auto m : tail_increases)
      if ((m & (m - 1)) != 0) return false;
    return true;
  }
  bool ok() const { return passed == rows.size() && passed_exact == rows.size(); }
};

inline AlphaBetaScan alpha_beta_scan(std::uint64_t from, std::uint64_t to, double margin = kDefaultMargin) {
  if (from < 47 || to > 100'000 || from > to) throw PreconditionError("alpha/beta scan range must lie in [47, 1e5]");
  AlphaBetaScan s{from, to, {}, 0, 0, {}};
  s.rows.reserve(to - from + 1);
  for (std::uint64_t m = from; m <= to; ++m) {
    s.rows.push_back(bounds_context(m, margin));
    const auto& r = s.rows.back();
    if (r.product.passed()) ++s.passed;
    if (r.product_exact.passed()) ++s.passed_exact;
    if (m > std::max<std::uint64_t>(from, 100)) {
      const auto& prev = s.rows[s.rows.size() - 2];
      if (!(r.log_product.hi() < prev.log_product.lo())) s.tail_increases.push_back(m);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Product-action stabilizers: 2.4 sqrt(2 pi m) c!^l l! (m/e)^{-m/c} alpha_m

struct WreathCaseBound {
  std::uint64_t c = 0, ell = 0, d = 0;
  BigInt m;
  HI log_bound;        // log of the fpr bound
  HI log_product;      // log(bound * alpha_m)
  Check product;       // bound * alpha_m < 1
  bool paper_exception = false;  // l = 2, d = 1, c <= 12
};

namespace detail {

inline HI log_factorial(std::uint64_t n) {
  HI s = HI(HighFloat(0));
  for (std::uint64_t i = 2; i <= n; ++i) s = s + log(HI(HighFloat(static_cast<double>(i))));
  return s;
}

/// Massias bound written in terms of log m, valid for m far beyond 2^64.
inline HI massias_from_log(const HI& log_m) {
  const HI M = exp(log_m);
  return sqrt(M * log_m) * (HI(HighFloat(1)) + (log(log_m) - HI::ratio(975, 1000)) / (HI(HighFloat(2)) * log_m));
}

}  // namespace detail

inline WreathCaseBound wreath_case_bound(std::uint64_t c, std::uint64_t ell, std::uint64_t d,
                                         double margin = kDefaultMargin) {
  if (c < 3 || ell < 1 || d < 1) throw PreconditionError("wreath case bound needs c >= 3, l >= 1, d >= 1");
  WreathCaseBound w;
  w.c = c;
  w.ell = ell;
  w.d = d;
  w.m = boost::multiprecision::pow(BigInt(binomial(c, d)), static_cast<unsigned>(ell));
  if (w.m <= 144) throw PreconditionError("wreath case bound needs m = C(c,d)^l > 144");
  w.paper_exception = ell == 2 && d == 1 && c <= 12;
  const HI log_m = log_integer<HighFloat>(w.m);
  const HI M = exp(log_m);
  const HI pi = pi_interval<HighFloat>();
  const HI C = HI(HighFloat(static_cast<double>(c)));
  w.log_bound = log(HI::ratio(24, 10)) + HI(HighFloat("0.5")) * (log(HI(HighFloat(2)) * pi) + log_m) +
                HI(HighFloat(static_cast<double>(ell))) * detail::log_factorial(c) + detail::log_factorial(ell) -
                M / C * (log_m - HI(HighFloat(1)));
  const HI alpha = omega_bound_from_log(detail::massias_from_log(log_m));
  w.log_product = w.log_bound + log(alpha);
  w.product = check_leq(w.log_product, HI(HighFloat(0)), margin);
  return w;
}

// ---------------------------------------------------------------------------
// Diagonal groups and the exceptional-group demo

/// omega(|Aut T|) / m(T)^l + 4/15 + 1/59, exactly.
inline Rational diagonal_crude_bound(std::uint64_t mT, std::uint64_t omega_aut, std::uint64_t ell) {
  if (mT < 5 || ell < 1) throw PreconditionError("diagonal crude bound needs m(T) >= 5 and l >= 1");
  std::int64_t den = 1;
  for (std::uint64_t i = 0; i < ell; ++i) {
    if (den > (std::int64_t{1} << 40)) throw CapExceeded("m(T)^l too large for exact evaluation");
    den *= static_cast<std::int64_t>(mT);
  }
  return Rational(static_cast<std::int64_t>(omega_aut), den) + Rational(4, 15) + Rational(1, 59);
}

/// 58 log2(q) / (q^8 (q^4 - 1)) < 1.
inline Check e8_demo(std::uint64_t q, double margin = kDefaultMargin) {
  if (q < 2) throw PreconditionError("e8 demo needs q >= 2");
  const HI Q = HI(HighFloat(static_cast<double>(q)));
  const HI log2q = log(Q) / log(HI(HighFloat(2)));
  const BigInt den = boost::multiprecision::pow(BigInt(q), 8) * (boost::multiprecision::pow(BigInt(q), 4) - 1);
  const HI lhs = log(HI(HighFloat(58)) * log2q) - log_integer<HighFloat>(den);
  return check_leq(lhs, HI(HighFloat(0)), margin);
}

inline bool is_prime_power(std::uint64_t q) { return q >= 2 && factorize(q).omega() == 1; }

}  // namespace regcycle
