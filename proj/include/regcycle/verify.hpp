#pragma once

// Verification suites shared by the command line and the acceptance
// runner. Each suite collects named assertions; a suite passes iff all of
// them pass. Notes carry information that is not asserted.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "regcycle/actions.hpp"
#include "regcycle/bounds.hpp"
#include "regcycle/gfalgebra.hpp"
#include "regcycle/groups.hpp"
#include "regcycle/permcore.hpp"
#include "regcycle/regcycle.hpp"

namespace regcycle {

struct Assertion {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;
  std::string counterexample;  // first failing input, if any
  double seconds = 0;

  bool passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
  }
  void check(std::string label, bool ok, std::string detail = {}) {
    assertions.push_back({std::move(label), ok, std::move(detail)});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
  void fail_example(const std::string& what) {
    if (counterexample.empty()) counterexample = what;
  }
  void absorb(const SuiteReport& other) {
    for (const auto& a : other.assertions) assertions.push_back(a);
    for (const auto& n : other.notes) notes.push_back(n);
    if (counterexample.empty()) counterexample = other.counterexample;
    seconds += other.seconds;
  }
};

struct VerifyOptions {
  u64 seed = 1;
  unsigned threads = 1;
  std::optional<std::pair<u64, u64>> m_range;  // restricts the k-set scans
  u64 diagonal_samples = 10'000;
  u64 conjugates_per_type = 2'000;  // partition check at ab = 12
};

namespace detail {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Every element of Sym(n) by image sequence in lexicographic order.
template <class Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
  std::vector<u32> img(n);
  for (u32 i = 0; i < n; ++i) img[i] = i;
  do {
    fn(Permutation::from_images_unchecked(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

inline std::string join(const std::vector<u64>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

/// Primitive iff for every y the finest block system joining 0 and y is
/// trivial.
inline bool is_primitive(const std::vector<Permutation>& gens, std::size_t n) {
  if (n < 2) return true;
  for (u32 y = 1; y < n; ++y) {
    std::vector<u32> parent(n);
    for (u32 i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](u32 x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<u32, u32>> queue{{0, y}};
    parent[find(y)] = find(0);
    std::size_t classes = n - 1;
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        const u32 ga = find(g(a)), gb = find(g(b));
        if (ga != gb) {
          parent[gb] = ga;
          --classes;
          queue.emplace_back(g(a), g(b));
        }
      }
    }
    if (classes != 1) return false;
  }
  return true;
}

inline std::vector<Permutation> induced_generators(const CosetAction& act, const GeneratedGroup& G) {
  std::vector<Permutation> out;
  for (const auto& g : G.generators()) out.push_back(induced_permutation(act, g));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// k-sets

/// The order-30 element of Sym(10) on 2-sets.
inline SuiteReport verify_intro_example() {
  detail::Timer t;
  SuiteReport r{"intro-example", {}, {}, {}, 0};
  const Permutation g = parse_cycles("(1 2)(3 4 5)(6 7 8 9 10)", 10);
  KSetAction act(10, 2);
  const auto lengths = orbit_lengths(induced_permutation(act, g));
  const std::vector<u64> expected{1, 3, 5, 5, 6, 10, 15};
  r.check("order of (1 2)(3 4 5)(6 7 8 9 10) is 30", g.order() == 30, std::to_string(g.order()));
  r.check("orbit lengths on 2-sets are {1,3,5,5,6,10,15}", lengths == expected, detail::join(lengths));
  const auto v = decide_bruteforce(act, g);
  r.check("brute force finds no regular cycle", !v.has_regular_cycle);
  const auto [dec, cv] = kset_decide(CycleType::of(g), 2);
  r.check("combinatorial decision agrees (minimal cover 3 > k = 2)", !cv.has_regular_cycle && dec.min_cover_s == 3,
          "s = " + std::to_string(dec.min_cover_s));
  r.seconds = t.seconds();
  return r;
}

/// Full cycle-type scans for k = 1, 2, 3 against the threshold.
inline SuiteReport verify_kset_theorem(const VerifyOptions& opt = {}) {
  detail::Timer t;
  SuiteReport r{"kset-theorem", {}, {}, {}, 0};
  const std::vector<u64> paper_thresholds{5, 10, 17};
  u64 lo = 0, hi = 20;
  if (opt.m_range) {
    lo = opt.m_range->first;
    hi = std::min<u64>(opt.m_range->second, 60);
  }
  for (u32 k = 1; k <= 3; ++k) {
    const u64 thr = nk_threshold(k);
    r.check("threshold(" + std::to_string(k) + ") = " + std::to_string(paper_thresholds[k - 1]),
            thr == paper_thresholds[k - 1], std::to_string(thr));
    bool all = true;
    std::string where;
    u64 scanned = 0;
    for (u64 m = std::max<u64>(2 * k, lo); m <= hi; ++m) {
      const auto rep = ksets_theorem_scan(m, k);
      ++scanned;
      if (!rep.consistent) {
        all = false;
        if (where.empty()) where = "m=" + std::to_string(m);
      }
    }
    r.check("k=" + std::to_string(k) + ": failures exist exactly for m >= " + std::to_string(thr), all,
            std::to_string(scanned) + " degrees scanned" + (where.empty() ? "" : ", first mismatch " + where));
    if (!all) r.fail_example("k=" + std::to_string(k) + " " + where);
    if (thr >= std::max<u64>(2 * k, lo) && thr <= hi) {
      const auto rep = ksets_theorem_scan(thr, k);
      std::string types;
      for (const auto& row : rep.failures) types += (types.empty() ? "" : " ") + row.cycle_type.to_string(false);
      r.check("k=" + std::to_string(k) + ": a violating cycle type exists at m = " + std::to_string(thr),
              !rep.failures.empty(), types);
    }
  }
  r.seconds = t.seconds();
  return r;
}

/// kset_decide against brute force for every cycle type, m <= 13, k <= m/2.
inline SuiteReport verify_kset_equivalence(const VerifyOptions& opt = {}) {
  detail::Timer t;
  SuiteReport r{"kset-equivalence", {}, {}, {}, 0};
  u64 lo = 2, hi = 13;
  if (opt.m_range) {
    lo = std::max<u64>(2, opt.m_range->first);
    hi = std::min<u64>(16, opt.m_range->second);
  }
  u64 cases = 0, mismatches = 0, witnesses = 0;
  for (u64 m = lo; m <= hi; ++m)
    for (std::size_t k = 1; 2 * k <= m; ++k) {
      KSetAction act(m, k);
      for_each_partition(static_cast<u32>(m), [&](const CycleType& ct) {
        ++cases;
        const auto [dec, cv] = kset_decide(ct, k);
        const Permutation g = ct.representative();
        const auto bv = decide_bruteforce(act, g);
        if (bv.has_regular_cycle != cv.has_regular_cycle) {
          ++mismatches;
          r.fail_example("m=" + std::to_string(m) + " k=" + std::to_string(k) + " type " + ct.to_string());
        }
        if (cv.has_regular_cycle) {
          kset_witness(g, k);  // certified inside
          ++witnesses;
        }
      });
    }
  r.check("kset_decide equals brute force for m in [" + std::to_string(lo) + "," + std::to_string(hi) + "]",
          mismatches == 0, std::to_string(cases) + " (cycle type, k) cases, " + std::to_string(mismatches) + " mismatches");
  r.check("constructive k-set witness certified whenever a regular cycle exists", true,
          std::to_string(witnesses) + " witnesses");
  r.seconds = t.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Uniform partitions

inline SuiteReport verify_partitions(const VerifyOptions& opt = {}) {
  detail::Timer t;
  SuiteReport r{"partitions", {}, {}, {}, 0};
  const std::vector<std::pair<std::size_t, std::size_t>> exhaustive{{2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}, {2, 5}, {5, 2}};
  const std::vector<std::pair<std::size_t, std::size_t>> sampled{{2, 6}, {3, 4}, {4, 3}, {6, 2}};
  for (auto [a, b] : exhaustive) {
    PartitionAction act(a, b);
    u64 count = 0;
    bool ok = true;
    std::map<std::string, u64> rules;
    detail::for_each_permutation(a * b, [&](const Permutation& g) {
      ++count;
      try {
        const auto pc = partition_witness_traced(g, a, b);
        const auto colon = pc.rule.find(':');
        ++rules[pc.rule.substr(0, colon)];
      } catch (const std::exception& e) {
        ok = false;
        r.fail_example(act.name() + " " + render_cycles(g) + ": " + e.what());
      }
    });
    std::string mix;
    for (const auto& [k, v] : rules) mix += (mix.empty() ? "" : ", ") + k + " " + std::to_string(v);
    r.check("(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + "): certified witness for every element",
            ok, std::to_string(count) + " elements (" + mix + ")");
  }
  std::mt19937_64 rng(opt.seed);
  for (auto [a, b] : sampled) {
    const std::size_t n = a * b;
    PartitionAction act(a, b);
    u64 count = 0;
    bool ok = true;
    for (const auto& ct : partitions_of(static_cast<u32>(n))) {
      const Permutation rep = ct.representative();
      std::vector<u32> img(n);
      for (u64 j = 0; j <= opt.conjugates_per_type; ++j) {
        Permutation g = rep;
        if (j > 0) {
          for (u32 i = 0; i < n; ++i) img[i] = i;
          std::shuffle(img.begin(), img.end(), rng);
          g = rep.conjugate_by(Permutation(img));
        }
        ++count;
        try {
          partition_witness(g, a, b);
        } catch (const std::exception& e) {
          ok = false;
          r.fail_example(act.name() + " " + render_cycles(g) + ": " + e.what());
        }
      }
    }
    r.check("(a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
                "): certified witness for every cycle type and sampled conjugates",
            ok, std::to_string(count) + " elements");
  }
  // (2,2): the construction refuses, and 4-cycles have orbits 1 and 2 only
  {
    PartitionAction act(2, 2);
    bool refused = true, short_orbits = true;
    u64 four_cycles = 0;
    detail::for_each_permutation(4, [&](const Permutation& g) {
      try {
        partition_witness(g, 2, 2);
        refused = false;
      } catch (const ExceptionalCase&) {
      }
      if (g.order() == 4) {
        ++four_cycles;
        const auto lens = orbit_lengths(induced_permutation(act, g));
        if (lens != std::vector<u64>{1, 2}) short_orbits = false;
        if (decide_bruteforce(act, g).has_regular_cycle) short_orbits = false;
      }
    });
    r.check("(a,b)=(2,2): exceptional case raised for every element of Sym(4)", refused);
    r.check("(a,b)=(2,2): each 4-cycle has orbit lengths {1,2}, max 2 < 4", short_orbits,
            std::to_string(four_cycles) + " four-cycles");
  }
  r.note("ab = 12 is checked on every cycle type plus " + std::to_string(opt.conjugates_per_type) +
         " seeded random conjugates each; the existence claim is conjugation invariant");
  r.seconds = t.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Product action

inline SuiteReport verify_product() {
  detail::Timer t;
  SuiteReport r{"product", {}, {}, {}, 0};
  const std::vector<std::pair<std::size_t, std::size_t>> cases{{3, 2}, {3, 3}, {4, 2}};
  for (auto [n, ell] : cases) {
    const auto H = symmetric_group(n);
    const auto S = symmetric_group(ell);
    ProductAction<NaturalAction> act(NaturalAction(n), ell);
    const auto& el = H.elements();
    u64 count = 0;
    bool ok = true;
    std::vector<std::size_t> digit(ell, 0);
    for (const auto& sigma : S.elements()) {
      std::fill(digit.begin(), digit.end(), 0);
      while (true) {
        WreathElement<Permutation> w;
        w.sigma = sigma;
        for (std::size_t i = 0; i < ell; ++i) w.coords.push_back(el[digit[i]]);
        ++count;
        try {
          product_witness(act, w);
          if (!decide_bruteforce(act, w).has_regular_cycle) throw std::logic_error("brute force disagrees");
        } catch (const std::exception& e) {
          ok = false;
          r.fail_example("Sym(" + std::to_string(n) + ") wr Sym(" + std::to_string(ell) + "): " + e.what());
        }
        std::size_t i = 0;
        while (i < ell && ++digit[i] == el.size()) digit[i++] = 0;
        if (i == ell) break;
      }
    }
    r.check("Sym(" + std::to_string(n) + ") natural, l=" + std::to_string(ell) +
                ": every wreath element has a certified product witness",
            ok && count == static_cast<u64>(std::pow(el.size(), ell)) * S.order(), std::to_string(count) + " elements");
  }
  r.seconds = t.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Linear and affine

inline std::vector<std::pair<std::size_t, u32>> linear_cases() {
  std::vector<std::pair<std::size_t, u32>> out;
  for (u32 q = 2; q <= 13; ++q)
    if (factorize(q).omega() == 1) out.emplace_back(1, q);
  for (u32 q : {2u, 3u, 4u, 5u}) out.emplace_back(2, q);
  out.emplace_back(3, 2);
  return out;
}

inline SuiteReport verify_gl() {
  detail::Timer t;
  SuiteReport r{"gl", {}, {}, {}, 0};
  for (auto [d, q] : linear_cases()) {
    const Field& F = Field::get(q);
    const auto gl = enumerate_gl(F, d);
    bool ok = true;
    for (const auto& g : gl)
      if (!gl_regular_vector_set(g).spans) {
        ok = false;
        r.fail_example("GL_" + std::to_string(d) + "(" + std::to_string(q) + ") " + g.to_string());
      }
    r.check("GL_" + std::to_string(d) + "(" + std::to_string(q) + "): regular vectors span V for every g", ok,
            std::to_string(gl.size()) + " elements");
  }
  r.seconds = t.seconds();
  return r;
}

inline SuiteReport verify_affine() {
  detail::Timer t;
  SuiteReport r{"affine", {}, {}, {}, 0};
  for (auto [d, q] : linear_cases()) {
    const Field& F = Field::get(q);
    const auto gl = enumerate_gl(F, d);
    VectorAction vecs(F, d);
    AffineAction aff(F, d);
    u64 count = 0;
    bool ok = true;
    for (const auto& g : gl)
      for (u64 i = 0; i < vecs.size(); ++i) {
        const AffineMap f{g, vecs.unrank(i)};
        ++count;
        try {
          affine_witness(f);
          if (!decide_bruteforce(aff, f).has_regular_cycle) throw std::logic_error("brute force disagrees");
        } catch (const std::exception& e) {
          ok = false;
          r.fail_example("AGL_" + std::to_string(d) + "(" + std::to_string(q) + "): " + e.what());
        }
      }
    r.check("AGL_" + std::to_string(d) + "(" + std::to_string(q) + "): certified affine witness for every f", ok,
            std::to_string(count) + " elements");
  }
  r.seconds = t.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Diagonal type, T = Alt(5)

inline SuiteReport verify_diagonal(const VerifyOptions& opt = {}) {
  detail::Timer t;
  SuiteReport r{"diagonal", {}, {}, {}, 0};
  const AmbientAutomorphisms amb(alternating_group(5), symmetric_group(5));
  r.check("Sym(5) realizes all 120 automorphisms of Alt(5)", amb.count() == 120, std::to_string(amb.count()));
  {
    const DiagonalSetting S(amb, 1);
    DiagonalAction act(S);
    u64 count = 0;
    bool ok = true;
    for_each_diagonal_element(S, [&](const DiagonalElement& x) {
      ++count;
      if (!decide_bruteforce(act, x).has_regular_cycle) {
        ok = false;
        r.fail_example("l=1 element " + render_cycles(S.to_permutation(x)));
      }
    });
    r.check("l=1: |W| = 14400", count == 14400, std::to_string(count));
    r.check("l=1: every element of W has a regular cycle on 60 points", ok);
    const auto audit = diagonal_fpr_audit(S, min_degree_entry("alt", 5).min_degree);
    r.check("l=1: fpr bounds hold for every prime-order element", audit.ok,
            std::to_string(audit.elements_examined) + " elements");
    r.check("l=1: the coordinate swap has fpr exactly 16/60 = 4/15", audit.involution_swap_fpr == Rational(4, 15),
            to_string(audit.involution_swap_fpr));
    const auto it = audit.shapes.find(DiagonalShape::sigma_moves_zero);
    r.check("l=1: the 4/15 bound is attained", it != audit.shapes.end() && it->second.max_fpr == Rational(4, 15),
            it == audit.shapes.end() ? "no shape" : to_string(it->second.max_fpr));
    for (const auto& [shape, st] : audit.shapes)
      r.note("l=1 " + to_string(shape) + ": " + std::to_string(st.elements) + " prime-order elements, max fpr " +
             to_string(st.max_fpr) + ", bound " + to_string(st.bound));
  }
  {
    const DiagonalSetting S(amb, 2);
    DiagonalAction act(S);
    std::mt19937_64 rng(opt.seed);
    bool ok = true;
    for (u64 i = 0; i < opt.diagonal_samples; ++i) {
      const DiagonalElement x = S.random_element(rng);
      if (!decide_bruteforce(act, x).has_regular_cycle) {
        ok = false;
        r.fail_example("l=2 element " + render_cycles(x.sigma));
      }
    }
    r.check("l=2: " + std::to_string(opt.diagonal_samples) + " seeded random elements all have a regular cycle", ok,
            "seed " + std::to_string(opt.seed));
    const auto audit = diagonal_fpr_audit(S, min_degree_entry("alt", 5).min_degree, 2000, opt.seed);
    r.check("l=2: fpr bounds hold for sampled prime-order powers", audit.ok,
            std::to_string(audit.elements_examined) + " sampled elements");
  }
  r.seconds = t.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Degree-6 coset actions

inline SuiteReport verify_s6_exception() {
  detail::Timer t;
  SuiteReport r{"s6-exception", {}, {}, {}, 0};
  const auto G = symmetric_group(6);
  const auto A = alternating_group(6);
  const auto H0 = transitive_pgl2_5();
  r.check("PGL_2(5) is a transitive subgroup of Sym(6) of order 120", H0.order() == 120 && H0.is_transitive());
  // all conjugates of H0 (and of its even part) in Sym(6)
  std::set<std::vector<Permutation>> conj;
  for (const auto& x : G.elements()) {
    std::vector<Permutation> e;
    for (const auto& h : H0.elements()) e.push_back(h.conjugate_by(x));
    std::sort(e.begin(), e.end());
    conj.insert(std::move(e));
  }
  r.check("PGL_2(5) has 6 conjugates in Sym(6)", conj.size() == 6, std::to_string(conj.size()));
  bool only_six_cycles = true, types_ok = true, alt_clean = true;
  u64 six_cycles = 0;
  for (const auto& elems : conj) {
    const auto H = GeneratedGroup::from_elements(6, elems);
    const auto act = coset_action(G, H, "pgl2:5");
    for (const auto& g : G.elements()) {
      const bool is_six = CycleType::of(g).parts()[0] == 6;
      const bool regular = decide_bruteforce(act, g).has_regular_cycle;
      if (regular == is_six) {
        only_six_cycles = false;
        r.fail_example("Sym(6) on cosets: " + render_cycles(g));
      }
      if (is_six) {
        ++six_cycles;
        if (orbit_lengths(induced_permutation(act, g)) != std::vector<u64>{1, 2, 3}) types_ok = false;
      }
    }
    std::vector<Permutation> even;
    for (const auto& h : elems)
      if (is_even(h)) even.push_back(h);
    const auto K = GeneratedGroup::from_elements(6, even);
    const auto act_a = coset_action(A, K, "psl2:5");
    for (const auto& g : A.elements())
      if (!decide_bruteforce(act_a, g).has_regular_cycle) {
        alt_clean = false;
        r.fail_example("Alt(6) on cosets: " + render_cycles(g));
      }
  }
  r.check("Sym(6) on the cosets of each conjugate: the failures are exactly the 6-cycles", only_six_cycles);
  r.check("every 6-cycle has induced cycle type [1,2,3]", types_ok, std::to_string(six_cycles) + " (element, conjugate) pairs");
  r.check("Alt(6) on the cosets of each PSL_2(5) conjugate: no failures", alt_clean);
  r.note("on the natural 6 points the order-6 failures are the elements of type [3,2,1], the image of the 6-cycles under the outer automorphism");
  r.seconds = t.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Primitive actions of PGL_2(9), M_10, PGammaL_2(9)

inline SuiteReport verify_remark_a6() {
  detail::Timer t;
  SuiteReport r{"remark-a6", {}, {}, {}, 0};
  const std::vector<std::pair<std::string, GeneratedGroup>> groups{
      {"PGL_2(9)", pgl2(9)}, {"M_10", mathieu10()}, {"PGammaL_2(9)", pgammal2(9)}};
  const auto psl = psl2(9);
  for (const auto& [name, G] : groups) {
    bool contains_psl = true;
    for (const auto& g : psl.generators()) contains_psl &= G.contains(g);
    r.check(name + ": order " + std::to_string(G.order()) + ", contains PSL_2(9)",
            contains_psl && (G.order() == 720 || G.order() == 1440));
    u64 sylow = 1;
    for (u64 n = G.order(); n % 5 == 0; n /= 5) sylow *= 5;
    GeneratedGroup syl;
    for (const auto& x : G.elements())
      if (x.order() == sylow) {
        syl = subgroup(G, {x});
        break;
      }
    const std::vector<std::pair<std::string, GeneratedGroup>> subs{
        {"point stabilizer", G.stabilizer(0)},
        {"Sylow-5 normalizer", normalizer(G, syl)},
        {"stabilizer of a pair of points", set_stabilizer(G, {0, 1})}};
    const std::vector<u64> degrees{10, 36, 45};
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const auto& [sub_name, H] = subs[i];
      const auto act = coset_action(G, H, sub_name);
      const bool prim = detail::is_primitive(detail::induced_generators(act, G), act.size());
      r.check(name + " on cosets of the " + sub_name + ": degree " + std::to_string(degrees[i]) + ", primitive",
              act.size() == degrees[i] && prim, "degree " + std::to_string(act.size()));
      bool ok = true;
      for (const auto& g : G.elements())
        if (!decide_bruteforce(act, g).has_regular_cycle) {
          ok = false;
          r.fail_example(name + " degree " + std::to_string(act.size()) + ": " + render_cycles(g));
        }
      r.check(name + " degree " + std::to_string(degrees[i]) + ": every element has a regular cycle", ok);
    }
  }
  r.seconds = t.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Wreath fixed-point ratios and sufficient conditions

inline SuiteReport verify_lemma_identities() {
  detail::Timer t;
  SuiteReport r{"lemma-identities", {}, {}, {}, 0};
  const std::vector<std::tuple<std::size_t, std::size_t, Rational>> cases{
      {3, 2, Rational(1, 3)}, {4, 2, Rational(1, 2)}, {3, 3, Rational(1, 3)}};
  for (const auto& [a, b, expect] : cases) {
    const auto rep = wreath_fpr_max(symmetric_group(a), symmetric_group(b));
    r.check("Sym(" + std::to_string(a) + ") wr Sym(" + std::to_string(b) + "): wreath max fpr = inner max = " +
                to_string(expect),
            rep.equal && rep.inner_max == expect,
            "wreath " + to_string(rep.wreath_max) + ", inner " + to_string(rep.inner_max) + ", " +
                std::to_string(rep.elements_scanned) + " elements");
  }
  // sum of fpr over prime-order powers below 1 forces a regular cycle
  u64 certs = 0;
  bool sound = true;
  for (std::size_t n = 4; n <= 7; ++n)
    for (std::size_t k = 1; 2 * k <= n; ++k) {
      KSetAction act(n, k);
      detail::for_each_permutation(n, [&](const Permutation& g) {
        if (g.order() < 2) return;
        const auto s = fpr_sum_sufficient(act, g);
        if (s.certificate) {
          ++certs;
          if (!decide_bruteforce(act, g).has_regular_cycle) {
            sound = false;
            r.fail_example(act.name() + " " + render_cycles(g));
          }
        }
      });
    }
  r.check("fpr sum < 1 implies a regular cycle (k-sets, Sym(4..7))", sound, std::to_string(certs) + " certificates");
  // complementation preserves the orbit structure on k-sets
  bool dual = true;
  for (std::size_t n = 4; n <= 8; ++n)
    for (const auto& ct : partitions_of(static_cast<u32>(n)))
      for (std::size_t k = 1; k < n; ++k) {
        const Permutation g = ct.representative();
        if (orbit_lengths(induced_permutation(KSetAction(n, k), g)) !=
            orbit_lengths(induced_permutation(KSetAction(n, n - k), g)))
          dual = false;
      }
  r.check("k-sets and (m-k)-sets give the same orbit lengths (m <= 8)", dual);
  r.seconds = t.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Bounds

inline SuiteReport verify_bounds_all() {
  detail::Timer t;
  SuiteReport r{"bounds-all", {}, {}, {}, 0};
  {
    const auto s = robin_sweep(26, 1'000'000);
    r.check("Robin: omega(n) <= bound for all n in [26, 10^6]", s.ok(),
            std::to_string(s.passed) + "/" + std::to_string(s.checked) + ", min log slack " + std::to_string(s.min_log_slack));
    const auto b = robin_bound(30);
    r.check("Robin bound at n = 30 is about 64.6", b.lo() > 64.5 && b.hi() < 64.7, std::to_string(b.mid()));
  }
  {
    bool mono = true, all = true;
    std::uint64_t prev = 0;
    for (u32 m = 1; m <= 200; ++m) {
      const auto L = landau_exact(m);
      mono &= L >= prev;
      prev = L;
      if (m >= 4 && !landau_vs_massias(m).passed()) {
        all = false;
        r.fail_example("Landau vs Massias at m = " + std::to_string(m));
      }
    }
    r.check("Landau: g(5) = 6, g(10) = 30, non-decreasing on [1,200]",
            landau_exact(5) == 6 && landau_exact(10) == 30 && mono);
    r.check("Massias: log g(m) <= bound for all m in [4, 200]", all);
    const auto m3 = landau_vs_massias(3);
    r.note("Massias at m = 3: " + to_string(m3.status) + " (log 3 exceeds the bound by " + std::to_string(-m3.slack) +
           ")");
  }
  {
    const auto pinned = stirling_sweep(1000);
    const auto tight = stirling_sweep(1000, 1e-30);
    u64 lower_ok = 0, upper_ok = 0, upper_inconclusive = 0, upper_fail = 0, tight_ok = 0;
    u32 first_inconclusive = 0;
    for (std::size_t i = 0; i < pinned.size(); ++i) {
      lower_ok += pinned[i].lower.passed();
      upper_ok += pinned[i].upper.passed();
      if (pinned[i].upper.status == CheckStatus::inconclusive) {
        ++upper_inconclusive;
        if (!first_inconclusive) first_inconclusive = pinned[i].n;
      }
      upper_fail += pinned[i].upper.status == CheckStatus::fail;
      tight_ok += tight[i].lower.passed() && tight[i].upper.passed();
    }
    r.check("Stirling lower bracket for all n in [1,1000] at margin 1e-9", lower_ok == 1000, std::to_string(lower_ok));
    r.check("Stirling upper bracket for all n in [1,1000] at margin 1e-9", upper_ok == 1000,
            std::to_string(upper_ok) + " pass, " + std::to_string(upper_inconclusive) + " inconclusive from n = " +
                std::to_string(first_inconclusive) + ", " + std::to_string(upper_fail) + " violations");
    r.check("Stirling: both brackets strict for all n in [1,1000] (50-digit, margin 1e-30)", tight_ok == 1000,
            std::to_string(tight_ok));
    r.note("the upper Stirling gap is about 1/(360 n^3), below 1e-9 from n = 141 on");
  }
  {
    const auto s = technical_sweep(3, 200);
    r.check("technical inequality: m in [3,200], p <= 13, alpha in {4/7} and {1-2/c : c <= 30}", s.ok(),
            std::to_string(s.passed) + "/" + std::to_string(s.checked));
    r.check("technical inequality example m=14, p=2, k=4, alpha=4/7", technical_inequality(14, 4, 2, Rational(4, 7)).passed());
    r.note("technical inequality at m = 2, k = 1, p = 2: " +
           to_string(technical_inequality(2, 1, 2, Rational(4, 7)).status));
  }
  {
    const auto s = alpha_beta_scan(47, 10'000);
    r.check("alpha_m * beta_m < 1 for all m in [47, 10^4] (constant 1.2)", s.passed == s.rows.size(),
            std::to_string(s.passed) + "/" + std::to_string(s.rows.size()));
    r.check("alpha_m * beta_m < 1 for all m in [47, 10^4] (exact Stirling constants)", s.passed_exact == s.rows.size(),
            std::to_string(s.passed_exact) + "/" + std::to_string(s.rows.size()));
    r.check("alpha*beta decreasing for m >= 100 except at powers of two", s.tail_decreasing_off_powers_of_two(),
            detail::join(s.tail_increases));
    std::ostringstream os;
    os.precision(6);
    os << "alpha*beta at m = 47: " << to_double(exp(s.rows.front().log_product).mid());
    r.note(os.str());
  }
  {
    r.check("crude bound Alt(5), l=1: 3/5 + 4/15 + 1/59 = 782/885", diagonal_crude_bound(5, 3, 1) == Rational(782, 885));
    bool all = true;
    u64 evaluated = 0;
    std::vector<MinDegreeEntry> table;
    for (u64 n = 5; n <= 12; ++n) table.push_back(min_degree_entry("alt", n));
    for (u64 q : {7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) table.push_back(min_degree_entry("psl2", q));
    for (const auto& e : table)
      for (u64 ell = 1; ell <= 3; ++ell) {
        ++evaluated;
        const Rational v = diagonal_crude_bound(e.min_degree, e.omega_aut, ell);
        if (!(v < Rational(1))) {
          all = false;
          r.note("crude bound " + e.family + ":" + std::to_string(e.parameter) + " l=" + std::to_string(ell) + " = " +
                 to_string(v) + " >= 1");
        }
      }
    r.check("crude bound < 1 for Alt(5..12) and PSL_2(q), q in {7..32}, l = 1..3", all,
            std::to_string(evaluated) + " evaluations");
  }
  {
    u64 count = 0;
    bool all = true;
    for (u64 q = 2; q <= 1024; ++q)
      if (is_prime_power(q)) {
        ++count;
        all &= e8_demo(q).passed();
      }
    r.check("E8: 58 log2 q / (q^8 (q^4 - 1)) < 1 for prime powers q <= 1024", all, std::to_string(count) + " values of q");
  }
  r.seconds = t.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// fix-union against brute force

inline SuiteReport verify_oracle_equivalence(const VerifyOptions& opt = {}) {
  detail::Timer t;
  SuiteReport r{"oracle-equivalence", {}, {}, {}, 0};
  u64 pairs = 0, mismatches = 0;
  auto compare = [&](const auto& act, const auto& g, const std::string& what) {
    ++pairs;
    const auto a = decide_bruteforce(act, g);
    const auto b = decide_fix_union(act, g);
    if (a.has_regular_cycle != b.has_regular_cycle || a.induced_order != b.induced_order) {
      ++mismatches;
      r.fail_example(what);
    }
  };
  auto perm_actions = [&](std::size_t n, auto&& each_element) {
    NaturalAction nat(n);
    std::vector<KSetAction> ks;
    for (std::size_t k = 2; 2 * k <= n; ++k) ks.emplace_back(n, k);
    std::vector<PartitionAction> parts;
    for (std::size_t a = 2; a < n; ++a)
      if (n % a == 0) parts.emplace_back(a, n / a);
    each_element([&](const Permutation& g) {
      compare(nat, g, "natural " + render_cycles(g));
      for (const auto& k : ks) compare(k, g, k.name() + " " + render_cycles(g));
      for (const auto& p : parts) compare(p, g, p.name() + " " + render_cycles(g));
    });
  };
  for (std::size_t n = 3; n <= 8; ++n)
    perm_actions(n, [&](auto&& fn) { detail::for_each_permutation(n, fn); });
  {
    // Sym(9) and Sym(10) on seeded random elements
    std::mt19937_64 rng(opt.seed);
    for (std::size_t n : {9u, 10u})
      perm_actions(n, [&](auto&& fn) {
        std::vector<u32> img(n);
        for (int i = 0; i < 5000; ++i) {
          for (u32 j = 0; j < n; ++j) img[j] = j;
          std::shuffle(img.begin(), img.end(), rng);
          fn(Permutation(img));
        }
      });
  }
  for (auto [n, ell] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {3, 3}, {4, 2}}) {
    const auto H = symmetric_group(n);
    const auto S = symmetric_group(ell);
    ProductAction<NaturalAction> act(NaturalAction(n), ell);
    std::vector<std::size_t> digit(ell, 0);
    for (const auto& sigma : S.elements()) {
      std::fill(digit.begin(), digit.end(), 0);
      while (true) {
        WreathElement<Permutation> w;
        w.sigma = sigma;
        for (std::size_t i = 0; i < ell; ++i) w.coords.push_back(H.elements()[digit[i]]);
        compare(act, w, act.name());
        std::size_t i = 0;
        while (i < ell && ++digit[i] == H.order()) digit[i++] = 0;
        if (i == ell) break;
      }
    }
  }
  for (auto [d, q] : linear_cases()) {
    const Field& F = Field::get(q);
    VectorAction vecs(F, d);
    AffineAction aff(F, d);
    for (const auto& g : enumerate_gl(F, d)) {
      compare(vecs, g, "vectors " + g.to_string());
      for (u64 i = 0; i < vecs.size(); ++i) compare(aff, AffineMap{g, vecs.unrank(i)}, "affine");
    }
  }
  {
    const AmbientAutomorphisms amb(alternating_group(5), symmetric_group(5));
    const DiagonalSetting S(amb, 1);
    DiagonalAction act(S);
    for_each_diagonal_element(S, [&](const DiagonalElement& x) { compare(act, x, "diagonal"); });
  }
  {
    const auto G = symmetric_group(6);
    const auto act = coset_action(G, transitive_pgl2_5(), "pgl2:5");
    for (const auto& g : G.elements()) compare(act, g, act.name() + " " + render_cycles(g));
    for (const auto& [name, H] : std::vector<std::pair<std::string, GeneratedGroup>>{{"pgl2:9", pgl2(9)}, {"m10", mathieu10()}, {"pgammal2:9", pgammal2(9)}})
      for (const auto& sub : {H.stabilizer(0), set_stabilizer(H, {0, 1})}) {
        const auto ca = coset_action(H, sub, name);
        for (const auto& g : H.elements()) compare(ca, g, ca.name() + " " + render_cycles(g));
      }
  }
  r.check("at least 10^5 (element, action) pairs", pairs >= 100'000, std::to_string(pairs));
  r.check("fix-union decision equals brute force on every pair", mismatches == 0,
          std::to_string(mismatches) + " mismatches");
  r.seconds = t.seconds();
  return r;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ksets",       "partitions",  "product",          "affine",
                                              "gl",          "diagonal",    "s6-exception",     "remark-a6",
                                              "lemma-identities", "bounds-all", "oracle-equivalence"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {}) {
  if (name == "ksets") {
    SuiteReport r{"ksets", {}, {}, {}, 0};
    r.absorb(verify_intro_example());
    r.absorb(verify_kset_theorem(opt));
    r.absorb(verify_kset_equivalence(opt));
    return r;
  }
  if (name == "partitions") return verify_partitions(opt);
  if (name == "product") return verify_product();
  if (name == "affine") return verify_affine();
  if (name == "gl") return verify_gl();
  if (name == "diagonal") return verify_diagonal(opt);
  if (name == "s6-exception") return verify_s6_exception();
  if (name == "remark-a6") return verify_remark_a6();
  if (name == "lemma-identities") return verify_lemma_identities();
  if (name == "bounds-all") return verify_bounds_all();
  if (name == "oracle-equivalence") return verify_oracle_equivalence(opt);
  throw ParseError("unknown suite '" + name + "'");
}

}  // namespace regcycle
