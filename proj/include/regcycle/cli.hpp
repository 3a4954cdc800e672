#pragma once

// Command implementations behind tools/regcycle. Each command returns its
// exit code and output text; `run_guarded` maps exceptions to exit codes.

#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "regcycle/actions.hpp"
#include "regcycle/bounds.hpp"
#include "regcycle/parallel.hpp"
#include "regcycle/regcycle.hpp"
#include "regcycle/spec_parse.hpp"
#include "regcycle/verify.hpp"

namespace regcycle::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

struct RunConfig {
  u64 domain_cap = kDefaultDomainCap;
  u64 group_cap = kDefaultGroupCap;
  u64 seed = 1;
  std::string output;  // json or tsv; empty picks the command default
  unsigned threads = 1;
};

struct CommandResult {
  int exit_code = kExitPass;
  std::string out;
  std::string err;
};

inline std::string output_format(const RunConfig& cfg, const std::string& fallback) {
  const std::string f = cfg.output.empty() ? fallback : cfg.output;
  if (f != "json" && f != "tsv") throw ParseError("--output must be json or tsv");
  return f;
}

inline CommandResult run_guarded(const std::function<CommandResult()>& fn) {
  try {
    return fn();
  } catch (const CapExceeded& e) {
    return {kExitCap, {}, std::string("cap exceeded: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kExitUsage, {}, std::string("parse error: ") + e.what() + "\n"};
  } catch (const PreconditionError& e) {
    return {kExitUsage, {}, std::string("invalid input: ") + e.what() + "\n"};
  }
}

// ---------------------------------------------------------------------------
// decide

namespace detail {

template <class Point>
struct Decision {
  Verdict<Point> verdict;
  bool induced_known = false;
  std::vector<u64> induced_cycle_type;
};

/// Regular point from a constructive proof, nullopt when the proof says no
/// regular cycle exists. Empty function: no construction available.
template <class Point>
using Construction = std::function<std::optional<Point>()>;

/// Method order: combinatorial (k-sets given by type), brute force under the
/// domain cap, then the constructive proof for the action.
template <InducedAction A>
Decision<typename A::point_type> decide_auto(const A& act, const typename A::element_type& g, const RunConfig& cfg,
                                             Construction<typename A::point_type> construction,
                                             bool prefer_construction) {
  act.check_element(g);
  Decision<typename A::point_type> d;
  const bool fits = act.size() <= cfg.domain_cap;
  if (fits) {
    d.induced_cycle_type = orbit_lengths(induced_permutation(act, g, cfg.domain_cap));
    d.induced_known = true;
  }
  if (construction && (prefer_construction || !fits)) {
    auto& v = d.verdict;
    v.order = act.group_order(g);
    v.witness = construction();
    v.has_regular_cycle = v.witness.has_value();
    v.method = prefer_construction ? Method::kset_combinatorial : Method::constructive_proof;
    if (v.witness) certify(act, g, *v.witness);
    if (fits) {
      const auto bv = decide_bruteforce(act, g, cfg.domain_cap);
      if (bv.has_regular_cycle != v.has_regular_cycle)
        throw std::logic_error("combinatorial decision disagrees with the full scan");
      v.induced_order = bv.induced_order;
      v.flags = bv.flags;
    } else {
      v.induced_order = 0;
    }
    // negative answers are certified only by the full scan
    v.certified = v.has_regular_cycle || fits;
    return d;
  }
  if (!fits) throw CapExceeded("domain of " + act.name() + " has " + std::to_string(act.size()) +
                               " points, above the cap, and no constructive method applies");
  d.verdict = decide_bruteforce(act, g, cfg.domain_cap);
  return d;
}

template <InducedAction A>
Json verdict_json(const std::string& group, const A& act, const std::string& element,
                  const Decision<typename A::point_type>& d) {
  const auto& v = d.verdict;
  Json j;
  j["schema"] = 1;
  j["group"] = group;
  j["element"] = element;
  j["order"] = v.order;
  j["induced_order"] = v.induced_order ? Json(v.induced_order) : Json(nullptr);
  j["action"] = act.name();
  j["verdict"] = v.has_regular_cycle;
  j["witness"] = v.witness ? Json(act.render(*v.witness)) : Json(nullptr);
  j["method"] = to_string(v.method);
  j["certified"] = v.certified;
  j["flags"] = v.flags;
  j["induced_cycle_type"] = d.induced_known ? Json(d.induced_cycle_type) : Json(nullptr);
  return j;
}

inline std::string tsv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + tsv_cell(x);
    return "[" + s + "]";
  }
  return v.dump();
}

inline std::string json_to_tsv(const Json& j) {
  std::string head, row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    head += (head.empty() ? "" : "\t") + it.key();
    row += (row.empty() ? "" : "\t") + tsv_cell(it.value());
  }
  return head + "\n" + row + "\n";
}

}  // namespace detail

inline std::string default_action(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::permutation: return "natural";
    case GroupKind::linear: return "vectors";
    case GroupKind::affine: return "affine";
    case GroupKind::wreath: return "product";
    case GroupKind::diagonal: return "diagonal";
  }
  return "natural";
}

inline CommandResult cmd_decide(const std::string& group_text, const std::string& element_text,
                                std::string action_text, const RunConfig& cfg = {}) {
  const GroupSpec gs = parse_group(group_text, cfg.group_cap);
  if (action_text.empty()) action_text = default_action(gs);
  action_text = text::trim(action_text);
  Json j;
  auto finish = [&](const auto& act, const auto& g, const std::string& rendered, auto construction, bool prefer) {
    const auto d = detail::decide_auto(act, g, cfg, std::move(construction), prefer);
    j = detail::verdict_json(gs.text, act, rendered, d);
  };
  auto bad_action = [&] { return ParseError("action '" + action_text + "' does not apply to group " + gs.text); };

  switch (gs.kind) {
    case GroupKind::permutation: {
      const PermGroupSpec& P = *gs.perm;
      const std::size_t n = P.degree();
      const Permutation g = parse_permutation(element_text, n);
      if (!P.contains(g)) throw PreconditionError("element " + render_cycles(g) + " is not in " + P.text());
      const std::string shown = render_cycles(g);
      if (action_text == "natural") {
        finish(NaturalAction(n), g, shown, detail::Construction<u32>{}, false);
      } else if (text::starts_with(action_text, "ksets:")) {
        const std::size_t k = text::parse_uint(action_text.substr(6), "k");
        if (k < 1 || k >= n) throw ParseError("ksets:k needs 1 <= k < degree");
        KSetAction act(n, k);
        detail::Construction<std::vector<u32>> c = [&]() -> std::optional<std::vector<u32>> {
          const auto [dec, v] = kset_decide(CycleType::of(g), std::min(k, n - k));
          if (!v.has_regular_cycle) return std::nullopt;
          return kset_witness(g, k);
        };
        finish(act, g, shown, c, is_type_notation(element_text));
      } else if (text::starts_with(action_text, "partitions:")) {
        const auto ab = text::split(std::string_view(action_text).substr(11), 'x');
        if (ab.size() != 2) throw ParseError("partitions: expects AxB");
        const std::size_t a = text::parse_uint(ab[0], "a"), b = text::parse_uint(ab[1], "b");
        if (a * b != n) throw ParseError("partitions:AxB needs A*B equal to the degree");
        PartitionAction act(a, b);
        detail::Construction<PartitionAction::point_type> c;
        if (a >= 2 && b >= 2 && !(a == 2 && b == 2))
          c = [&]() -> std::optional<PartitionAction::point_type> { return partition_witness(g, a, b); };
        finish(act, g, shown, c, false);
      } else if (text::starts_with(action_text, "cosets:")) {
        const GeneratedGroup H = parse_subgroup(P, action_text.substr(7));
        const auto act = coset_action(P.group(), H, action_text.substr(7), cfg.domain_cap);
        finish(act, g, shown, detail::Construction<u32>{}, false);
      } else {
        throw bad_action();
      }
      break;
    }
    case GroupKind::linear: {
      if (action_text != "vectors") throw bad_action();
      const Field& F = Field::get(gs.q);
      const Matrix g = parse_matrix(F, gs.d, element_text);
      if (!g.invertible()) throw PreconditionError("matrix is not invertible");
      finish(VectorAction(F, gs.d), g, render_matrix_rows(g), detail::Construction<Vec>{}, false);
      break;
    }
    case GroupKind::affine: {
      if (action_text != "affine") throw bad_action();
      const Field& F = Field::get(gs.q);
      const AffineMap f = parse_affine(F, gs.d, element_text);
      if (!f.linear.invertible()) throw PreconditionError("linear part is not invertible");
      const std::string shown = render_matrix_rows(f.linear) + " | " + VectorAction(F, gs.d).render(f.translation);
      detail::Construction<Vec> c = [&]() -> std::optional<Vec> { return affine_witness(f, cfg.domain_cap); };
      finish(AffineAction(F, gs.d), f, shown, c, false);
      break;
    }
    case GroupKind::wreath: {
      if (action_text != "product") throw bad_action();
      const PermGroupSpec& P = *gs.perm;
      const auto w = parse_wreath(P.degree(), gs.r, element_text);
      std::string shown;
      for (std::size_t i = 0; i < w.coords.size(); ++i) {
        if (!P.contains(w.coords[i])) throw PreconditionError("coordinate " + render_cycles(w.coords[i]) + " is not in " + P.text());
        shown += (i ? " | " : "") + render_cycles(w.coords[i]);
      }
      shown += " @ " + render_cycles(w.sigma);
      ProductAction<NaturalAction> act(NaturalAction(P.degree()), gs.r);
      detail::Construction<ProductAction<NaturalAction>::point_type> c =
          [&]() -> std::optional<ProductAction<NaturalAction>::point_type> { return product_witness(act, w); };
      finish(act, w, shown, c, false);
      break;
    }
    case GroupKind::diagonal: {
      if (action_text != "diagonal") throw bad_action();
      const AmbientAutomorphisms amb(alternating_group(gs.n), symmetric_group(gs.n));
      const DiagonalSetting S(amb, gs.ell);
      const DiagonalElement x = parse_diagonal(S, element_text);
      finish(DiagonalAction(S), x, render_diagonal(S, x), detail::Construction<std::vector<u32>>{}, false);
      break;
    }
  }
  const std::string fmt = output_format(cfg, "json");
  return {kExitPass, fmt == "json" ? j.dump(2) + "\n" : detail::json_to_tsv(j), {}};
}

// ---------------------------------------------------------------------------
// scan

inline CommandResult cmd_scan(const std::string& action_text, const std::string& m_text, const RunConfig& cfg = {}) {
  const std::string act = text::trim(action_text);
  const std::string fmt = output_format(cfg, "tsv");
  Json rows = Json::array();
  std::string tsv;
  if (text::starts_with(act, "ksets:")) {
    const std::size_t k = text::parse_uint(act.substr(6), "k");
    if (m_text.empty()) throw ParseError("scan ksets needs --m");
    const auto [lo, hi] = text::parse_range(m_text);
    if (k < 1 || 2 * k > lo) throw PreconditionError("scan ksets needs 1 <= k <= m/2 for every m in the range");
    if (hi > 60) throw CapExceeded("scan ksets supports m <= 60");
    tsv = "m\tk\tcycle_type\tmin_cover\n";
    for (u64 m = lo; m <= hi; ++m) {
      const auto types = partitions_of(static_cast<u32>(m));
      std::vector<std::optional<std::size_t>> slot(types.size());
      parallel_for(types.size(), cfg.threads, [&](std::size_t i) {
        const auto [dec, v] = kset_decide(types[i], k);
        if (!v.has_regular_cycle) slot[i] = dec.min_cover_s;
      });
      std::vector<std::pair<CycleType, std::size_t>> found;
      for (std::size_t i = 0; i < types.size(); ++i)
        if (slot[i]) found.emplace_back(types[i], *slot[i]);
      std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
      for (const auto& [ct, s] : found) {
        tsv += std::to_string(m) + "\t" + std::to_string(k) + "\t" + ct.to_string() + "\t" + std::to_string(s) + "\n";
        rows.push_back(Json{{"m", m}, {"k", k}, {"cycle_type", std::vector<u32>(ct.parts().begin(), ct.parts().end())}, {"min_cover", s}});
      }
    }
  } else if (text::starts_with(act, "partitions:")) {
    const auto ab = text::split(std::string_view(act).substr(11), 'x');
    if (ab.size() != 2) throw ParseError("partitions: expects AxB");
    const std::size_t a = text::parse_uint(ab[0], "a"), b = text::parse_uint(ab[1], "b");
    const u64 m = a * b;
    if (!m_text.empty()) {
      const auto [lo, hi] = text::parse_range(m_text);
      if (lo != m || hi != m) throw PreconditionError("scan partitions:AxB needs --m equal to A*B");
    }
    if (m > 12) throw CapExceeded("scan partitions supports ab <= 12");
    PartitionAction pa(a, b);
    const auto types = partitions_of(static_cast<u32>(m));
    std::vector<std::optional<u64>> slot(types.size());
    parallel_for(types.size(), cfg.threads, [&](std::size_t i) {
      const Permutation g = types[i].representative();
      const auto v = decide_bruteforce(pa, g, cfg.domain_cap);
      if (!v.has_regular_cycle) slot[i] = orbit_lengths(induced_permutation(pa, g, cfg.domain_cap)).back();
    });
    tsv = "m\ta\tb\tcycle_type\tmax_orbit\n";
    std::vector<std::pair<CycleType, u64>> found;
    for (std::size_t i = 0; i < types.size(); ++i)
      if (slot[i]) found.emplace_back(types[i], *slot[i]);
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& [ct, mo] : found) {
      tsv += std::to_string(m) + "\t" + std::to_string(a) + "\t" + std::to_string(b) + "\t" + ct.to_string() + "\t" +
             std::to_string(mo) + "\n";
      rows.push_back(Json{{"m", m}, {"a", a}, {"b", b}, {"cycle_type", std::vector<u32>(ct.parts().begin(), ct.parts().end())}, {"max_orbit", mo}});
    }
  } else {
    throw ParseError("scan supports ksets:K and partitions:AxB");
  }
  if (fmt == "json") return {kExitPass, Json{{"schema", 1}, {"action", act}, {"rows", rows}}.dump(2) + "\n", {}};
  return {kExitPass, tsv, {}};
}

// ---------------------------------------------------------------------------
// bounds

inline std::string fmt_real(const HighFloat& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", static_cast<double>(x));
  return buf;
}

inline CommandResult cmd_bounds(const std::string& m_text, const RunConfig& cfg = {}) {
  const auto [lo, hi] = m_text.empty() ? std::pair<u64, u64>{47, 100} : text::parse_range(m_text);
  if (lo < 47 || hi > 100'000) throw PreconditionError("bounds --m must lie in [47, 100000]");
  const std::string fmt = output_format(cfg, "tsv");
  const auto scan = alpha_beta_scan(lo, hi);
  std::string tsv = "m\tN_m\talpha_m\tbeta_m\tproduct\tverdict\tproduct_exact\tverdict_exact\n";
  Json rows = Json::array();
  for (const auto& r : scan.rows) {
    const HighFloat prod = exp(r.log_product).hi(), prod_exact = exp(r.log_product_exact).hi();
    tsv += std::to_string(r.m) + "\t" + r.N_m.str() + "\t" + fmt_real(r.alpha_m.hi()) + "\t" + fmt_real(r.beta_m.hi()) +
           "\t" + fmt_real(prod) + "\t" + to_string(r.product.status) + "\t" + fmt_real(prod_exact) + "\t" +
           to_string(r.product_exact.status) + "\n";
    rows.push_back(Json{{"m", r.m},
                        {"N_m", r.N_m.str()},
                        {"alpha_m", fmt_real(r.alpha_m.hi())},
                        {"beta_m", fmt_real(r.beta_m.hi())},
                        {"product", fmt_real(prod)},
                        {"verdict", to_string(r.product.status)},
                        {"product_exact", fmt_real(prod_exact)},
                        {"verdict_exact", to_string(r.product_exact.status)}});
  }
  const int code = scan.ok() ? kExitPass : kExitAssertion;
  if (fmt == "json") return {code, Json{{"schema", 1}, {"rows", rows}}.dump(2) + "\n", {}};
  return {code, tsv, {}};
}

// ---------------------------------------------------------------------------
// verify

inline CommandResult cmd_verify(const std::string& suite, const std::string& m_text, const RunConfig& cfg = {}) {
  VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  if (!m_text.empty()) opt.m_range = text::parse_range(m_text);
  const std::string fmt = output_format(cfg, "tsv");
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names = {suite};
  bool all_ok = true;
  std::string tsv;
  Json out = Json::array();
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, opt);
    all_ok &= r.passed();
    Json j{{"schema", 1}, {"suite", name}, {"passed", r.passed()}};
    Json as = Json::array();
    for (const auto& a : r.assertions) {
      tsv += name + "\t" + (a.passed ? "pass" : "FAIL") + "\t" + a.label + "\t" + a.detail + "\n";
      as.push_back(Json{{"label", a.label}, {"passed", a.passed}, {"detail", a.detail}});
    }
    for (const auto& n : r.notes) tsv += name + "\tnote\t" + n + "\t\n";
    if (!r.counterexample.empty()) tsv += name + "\tcounterexample\t" + r.counterexample + "\t\n";
    j["assertions"] = as;
    j["notes"] = r.notes;
    j["counterexample"] = r.counterexample.empty() ? Json(nullptr) : Json(r.counterexample);
    out.push_back(j);
  }
  const int code = all_ok ? kExitPass : kExitAssertion;
  if (fmt == "json") return {code, (names.size() == 1 ? out[0] : out).dump(2) + "\n", {}};
  return {code, "suite\tstatus\tlabel\tdetail\n" + tsv, {}};
}

}  // namespace regcycle::cli
