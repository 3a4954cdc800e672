#pragma once

// Text forms for groups, actions and elements used by the command line.
//
// Groups:   sym:N  alt:N  pgl2:q  psl2:q  pgammal2:q  m10
//           gens:(1 2 3);(1 2)@N   gl:d,q   agl:d,q
//           wreath:<permutation group>^r   diag:altN,l
// Actions:  natural  ksets:K  partitions:AxB  cosets:<subgroup>
//           vectors  affine  product  diagonal
//           subgroup = point | pair | sylnorm:p | <permutation group>
// Elements: cycle notation, or type:5,3,2 for the canonical element of a
//           cycle type; matrices "1 1; 0 1"; affine maps "1 1; 0 1 | 1 0";
//           wreath elements "h_1 | ... | h_r @ sigma"; diagonal elements
//           "sigma | phi | t_1 | ... | t_l" (sigma on coordinates 1..l+1,
//           phi an ambient permutation, t_i target elements).

#include <charconv>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regcycle/actions.hpp"
#include "regcycle/gfalgebra.hpp"
#include "regcycle/groups.hpp"
#include "regcycle/permcore.hpp"

namespace regcycle {

namespace text {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline u64 parse_uint(std::string_view s, std::string_view what) {
  const std::string t = trim(s);
  u64 v = 0;
  const auto* end = t.data() + t.size();
  auto [p, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || p != end)
    throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" + t + "'");
  return v;
}

inline bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

/// "a..b" or "a".
inline std::pair<u64, u64> parse_range(std::string_view s) {
  const std::string t = trim(s);
  const auto dots = t.find("..");
  if (dots == std::string::npos) {
    const u64 v = parse_uint(t, "range");
    return {v, v};
  }
  const u64 lo = parse_uint(t.substr(0, dots), "range start"), hi = parse_uint(t.substr(dots + 2), "range end");
  if (lo > hi) throw ParseError("empty range " + t);
  return {lo, hi};
}

}  // namespace text

// ---------------------------------------------------------------------------
// Permutation groups

/// A permutation group named on the command line. Symmetric and alternating
/// groups test membership directly; the others are closed on demand.
class PermGroupSpec {
 public:
  static PermGroupSpec parse(std::string_view spec_text, std::size_t group_cap = kDefaultGroupCap) {
    PermGroupSpec g;
    g.text_ = text::trim(spec_text);
    g.cap_ = group_cap;
    const std::string& s = g.text_;
    if (text::starts_with(s, "sym:") || text::starts_with(s, "alt:")) {
      g.kind_ = s.substr(0, 3);
      g.degree_ = text::parse_uint(s.substr(4), "degree");
      if (g.degree_ < 1 || g.degree_ > 4096) throw ParseError("degree out of range in " + s);
    } else if (text::starts_with(s, "pgl2:") || text::starts_with(s, "psl2:")) {
      g.kind_ = s.substr(0, 4);
      g.q_ = static_cast<u32>(text::parse_uint(s.substr(5), "q"));
      g.degree_ = g.q_ + 1;
    } else if (text::starts_with(s, "pgammal2:")) {
      g.kind_ = "pgammal2";
      g.q_ = static_cast<u32>(text::parse_uint(s.substr(9), "q"));
      g.degree_ = g.q_ + 1;
    } else if (s == "m10") {
      g.kind_ = "m10";
      g.degree_ = 10;
    } else if (text::starts_with(s, "gens:")) {
      g.kind_ = "gens";
      const auto at = s.rfind('@');
      if (at == std::string::npos) throw ParseError("gens: needs '@degree', e.g. gens:(1 2 3);(1 2)@4");
      g.degree_ = text::parse_uint(s.substr(at + 1), "degree");
      for (const auto& part : text::split(std::string_view(s).substr(5, at - 5), ';'))
        if (!part.empty()) g.gens_.push_back(parse_cycles(part, g.degree_));
      if (g.gens_.empty()) throw ParseError("gens: needs at least one generator");
    } else {
      throw ParseError("unknown permutation group '" + s + "'");
    }
    if ((g.kind_ == "pgl2" || g.kind_ == "psl2" || g.kind_ == "pgammal2") && factorize(std::max<u64>(g.q_, 1)).omega() != 1)
      throw ParseError("q must be a prime power in " + s);
    return g;
  }

  const std::string& text() const { return text_; }
  const std::string& kind() const { return kind_; }
  std::size_t degree() const { return degree_; }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    if (kind_ == "sym") return true;
    if (kind_ == "alt") return is_even(g);
    return group().contains(g);
  }

  /// The closed group; symmetric and alternating groups are closed only
  /// when asked (and within the cap).
  const GeneratedGroup& group() const {
    if (!closed_) {
      GeneratedGroup G;
      if (kind_ == "sym") G = symmetric_group(degree_, cap_);
      else if (kind_ == "alt") G = alternating_group(degree_, cap_);
      else if (kind_ == "pgl2") G = pgl2(q_);
      else if (kind_ == "psl2") G = psl2(q_);
      else if (kind_ == "pgammal2") G = pgammal2(q_);
      else if (kind_ == "m10") G = mathieu10();
      else G = closure(gens_, degree_, cap_);
      closed_ = std::make_shared<GeneratedGroup>(std::move(G));
    }
    return *closed_;
  }

 private:
  std::string text_, kind_;
  std::size_t degree_ = 0;
  u32 q_ = 0;
  std::vector<Permutation> gens_;
  std::size_t cap_ = kDefaultGroupCap;
  mutable std::shared_ptr<const GeneratedGroup> closed_;
};

/// Cycle notation, or type:5,3,2 (fixed points implied up to the degree).
inline Permutation parse_permutation(std::string_view s, std::size_t degree) {
  const std::string t = text::trim(s);
  if (text::starts_with(t, "type:")) {
    std::vector<u32> parts;
    std::size_t sum = 0;
    for (const auto& p : text::split(std::string_view(t).substr(5), ',')) {
      const u64 v = text::parse_uint(p, "cycle length");
      if (v == 0) throw ParseError("cycle lengths must be positive");
      parts.push_back(static_cast<u32>(v));
      sum += v;
    }
    if (sum > degree) throw ParseError("cycle type " + t + " exceeds degree " + std::to_string(degree));
    for (; sum < degree; ++sum) parts.push_back(1);
    return CycleType(parts).representative();
  }
  return parse_cycles(t, degree);
}

inline bool is_type_notation(std::string_view s) { return text::starts_with(text::trim(s), "type:"); }

/// Subgroup named inside cosets:<...>, relative to the ambient group.
inline GeneratedGroup parse_subgroup(const PermGroupSpec& ambient, std::string_view s) {
  const std::string t = text::trim(s);
  const GeneratedGroup& G = ambient.group();
  if (t == "point") return G.stabilizer(0);
  if (t == "pair") return set_stabilizer(G, {0, 1});
  if (text::starts_with(t, "sylnorm:")) {
    const u64 p = text::parse_uint(t.substr(8), "prime");
    if (!is_prime(p)) throw ParseError("sylnorm: needs a prime");
    u64 pa = 1;
    for (u64 n = G.order(); n % p == 0; n /= p) pa *= p;
    if (pa == 1) throw PreconditionError("sylnorm: p does not divide |G|");
    for (const auto& x : G.elements())
      if (x.order() == pa) return normalizer(G, subgroup(G, {x}));
    throw PreconditionError("sylnorm: the Sylow subgroup is not cyclic");
  }
  const PermGroupSpec H = PermGroupSpec::parse(t);
  if (H.degree() != G.degree()) throw ParseError("subgroup " + t + " has a different degree from the group");
  return subgroup(G, H.group().generators());
}

// ---------------------------------------------------------------------------
// Linear, affine, wreath and diagonal element syntax

inline Matrix parse_matrix(const Field& f, std::size_t d, std::string_view s) {
  const auto rows = text::split(s, ';');
  if (rows.size() != d) throw ParseError("matrix needs " + std::to_string(d) + " rows separated by ';'");
  std::vector<FieldElem> entries;
  for (const auto& r : rows) {
    std::size_t count = 0;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      const u64 v = text::parse_uint(cur, "matrix entry");
      if (v >= f.q()) throw ParseError("matrix entry " + cur + " outside F_" + std::to_string(f.q()));
      entries.push_back(static_cast<FieldElem>(v));
      ++count;
      cur.clear();
    };
    for (char c : r) {
      if (c == ' ' || c == ',' || c == '\t') flush();
      else cur += c;
    }
    flush();
    if (count != d) throw ParseError("matrix row '" + r + "' needs " + std::to_string(d) + " entries");
  }
  return Matrix(f, d, d, std::move(entries));
}

inline Vec parse_vector(const Field& f, std::size_t d, std::string_view s) {
  Vec v;
  std::string t = text::trim(s);
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    const u64 x = text::parse_uint(cur, "vector entry");
    if (x >= f.q()) throw ParseError("vector entry " + cur + " outside the field");
    v.push_back(static_cast<FieldElem>(x));
    cur.clear();
  };
  for (char c : t) {
    if (c == ' ' || c == ',') flush();
    else cur += c;
  }
  flush();
  if (v.size() != d) throw ParseError("vector needs " + std::to_string(d) + " entries");
  return v;
}

inline AffineMap parse_affine(const Field& f, std::size_t d, std::string_view s) {
  const auto parts = text::split(s, '|');
  if (parts.size() != 2) throw ParseError("affine map needs 'matrix | translation'");
  return AffineMap{parse_matrix(f, d, parts[0]), parse_vector(f, d, parts[1])};
}

inline WreathElement<Permutation> parse_wreath(std::size_t inner_degree, std::size_t r, std::string_view s) {
  const std::string t = text::trim(s);
  const auto at = t.find('@');
  const auto coords = text::split(std::string_view(t).substr(0, at), '|');
  if (coords.size() != r) throw ParseError("wreath element needs " + std::to_string(r) + " coordinates separated by '|'");
  WreathElement<Permutation> w;
  for (const auto& c : coords) w.coords.push_back(parse_permutation(c.empty() ? "()" : c, inner_degree));
  w.sigma = at == std::string::npos ? Permutation::identity(r) : parse_cycles(t.substr(at + 1), r);
  return w;
}

inline DiagonalElement parse_diagonal(const DiagonalSetting& S, std::string_view s) {
  const auto parts = text::split(s, '|');
  const std::size_t ell = S.ell();
  if (parts.size() != ell + 2) throw ParseError("diagonal element needs 'sigma | phi | t_1 | ... | t_l'");
  const auto& amb = S.automorphisms();
  const auto& T = amb.target();
  DiagonalElement x = S.identity();
  x.sigma = parse_cycles(parts[0], ell + 1);
  const Permutation phi = parse_cycles(parts[1], T.degree());
  x.phi = amb.index_of_rep(phi);
  for (std::size_t i = 1; i <= ell; ++i) {
    const Permutation ti = parse_cycles(parts[i + 1], T.degree());
    if (!T.contains(ti)) throw PreconditionError("diagonal translation " + parts[i + 1] + " is not in the target group");
    x.t[i] = static_cast<u32>(T.index_of(ti));
  }
  return x;
}

inline std::string render_matrix_rows(const Matrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + std::to_string(m(r, c));
  }
  return s;
}

inline std::string render_diagonal(const DiagonalSetting& S, const DiagonalElement& x) {
  const auto& amb = S.automorphisms();
  std::string s = render_cycles(x.sigma) + " | " + render_cycles(amb.coset_reps()[x.phi]);
  for (std::size_t i = 1; i < x.t.size(); ++i) s += " | " + render_cycles(amb.target().elements()[x.t[i]]);
  return s;
}

// ---------------------------------------------------------------------------
// Group specs

enum class GroupKind { permutation, linear, affine, wreath, diagonal };

struct GroupSpec {
  GroupKind kind = GroupKind::permutation;
  std::string text;
  std::optional<PermGroupSpec> perm;  // permutation groups and wreath bases
  std::size_t d = 0;                  // linear and affine
  u32 q = 0;
  std::size_t r = 0;     // wreath arity
  std::size_t n = 0;     // diagonal target degree (Alt(n))
  std::size_t ell = 0;   // diagonal
};

inline GroupSpec parse_group(std::string_view spec_text, std::size_t group_cap = kDefaultGroupCap) {
  GroupSpec g;
  g.text = text::trim(spec_text);
  const std::string& s = g.text;
  auto dq = [&](std::size_t from) {
    const auto parts = text::split(std::string_view(s).substr(from), ',');
    if (parts.size() != 2) throw ParseError("expected d,q in " + s);
    g.d = text::parse_uint(parts[0], "d");
    g.q = static_cast<u32>(text::parse_uint(parts[1], "q"));
    if (g.d < 1 || g.d > 8) throw ParseError("dimension out of range in " + s);
    if (g.q < 2 || g.q > 256 || factorize(g.q).omega() != 1) throw ParseError("q must be a prime power <= 256 in " + s);
  };
  if (text::starts_with(s, "gl:")) {
    g.kind = GroupKind::linear;
    dq(3);
  } else if (text::starts_with(s, "agl:")) {
    g.kind = GroupKind::affine;
    dq(4);
  } else if (text::starts_with(s, "wreath:")) {
    g.kind = GroupKind::wreath;
    const auto caret = s.rfind('^');
    if (caret == std::string::npos) throw ParseError("wreath: needs '^r', e.g. wreath:sym:3^2");
    g.perm = PermGroupSpec::parse(std::string_view(s).substr(7, caret - 7), group_cap);
    g.r = text::parse_uint(s.substr(caret + 1), "arity");
    if (g.r < 1 || g.r > 8) throw ParseError("wreath arity out of range");
  } else if (text::starts_with(s, "diag:alt")) {
    g.kind = GroupKind::diagonal;
    const auto parts = text::split(std::string_view(s).substr(8), ',');
    if (parts.size() != 2) throw ParseError("diag: expects diag:altN,l");
    std::string nt = parts[0];
    if (!nt.empty() && nt.front() == ':') nt = nt.substr(1);
    g.n = text::parse_uint(nt, "n");
    g.ell = text::parse_uint(parts[1], "l");
    if (g.n < 5 || g.n > 7) throw ParseError("diag: supports Alt(5)..Alt(7)");
    if (g.ell < 1 || g.ell > 3) throw ParseError("diag: supports 1 <= l <= 3");
  } else {
    g.kind = GroupKind::permutation;
    g.perm = PermGroupSpec::parse(s, group_cap);
  }
  return g;
}

}  // namespace regcycle
