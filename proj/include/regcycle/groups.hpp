#pragma once

// Desk-scale permutation groups: closure from generators, conjugacy
// classes, right-coset actions, named groups and the diagonal-type group
// W = (Sym(l+1) x Aut(T)) M acting on T^l.

#include <algorithm>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "regcycle/gfalgebra.hpp"
#include "regcycle/permcore.hpp"

namespace regcycle {

inline constexpr std::size_t kDefaultGroupCap = 5'000'000;

/// A permutation group together with its full element list, sorted by
/// image sequence.
class GeneratedGroup {
 public:
  GeneratedGroup() = default;

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const Permutation& g) const {
    return g.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), g);
  }

  /// Position of g in the sorted element list.
  std::size_t index_of(const Permutation& g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || *it != g) throw PreconditionError("element not in group");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool is_transitive() const {
    if (degree_ == 0) return true;
    std::vector<bool> seen(degree_, false);
    std::vector<u32> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const u32 x = stack.back();
      stack.pop_back();
      for (const auto& g : generators_) {
        const u32 y = g(x);
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count == degree_;
  }

  /// Subgroup of elements fixing `point`.
  GeneratedGroup stabilizer(u32 point) const {
    std::vector<Permutation> gens;
    for (const auto& g : elements_)
      if (g(point) == point) gens.push_back(g);
    return from_elements(degree_, std::move(gens));
  }

  /// Wraps an element list already known to be closed.
  static GeneratedGroup from_elements(std::size_t degree, std::vector<Permutation> elems) {
    GeneratedGroup g;
    g.degree_ = degree;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    g.generators_ = elems;
    g.elements_ = std::move(elems);
    return g;
  }

  friend GeneratedGroup closure(std::vector<Permutation> generators, std::size_t degree,
                                std::size_t cap);

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Breadth-first closure under right multiplication by the generators.
inline GeneratedGroup closure(std::vector<Permutation> generators, std::size_t degree,
                              std::size_t cap = kDefaultGroupCap) {
  if (cap == 0) throw PreconditionError("closure cap must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeded cap " + std::to_string(cap) +
                            " (partial size " + std::to_string(seen.size()) + ")");
        queue.push_back(std::move(y));
      }
    }
  }
  GeneratedGroup out;
  out.degree_ = degree;
  out.generators_ = std::move(generators);
  out.elements_.assign(seen.begin(), seen.end());
  std::sort(out.elements_.begin(), out.elements_.end());
  return out;
}

inline GeneratedGroup closure(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw PreconditionError("closure needs a degree or a generator");
  return closure(generators, generators.front().degree());
}

/// Orbit of g under conjugation by G.
inline std::vector<Permutation> conjugacy_class(const GeneratedGroup& G, const Permutation& g) {
  if (!G.contains(g)) throw PreconditionError("conjugacy_class: element not in group");
  std::unordered_set<Permutation, PermutationHash> seen{g};
  std::vector<Permutation> stack{g};
  while (!stack.empty()) {
    const Permutation x = std::move(stack.back());
    stack.pop_back();
    for (const auto& s : G.generators()) {
      Permutation y = x.conjugate_by(s);
      if (seen.insert(y).second) stack.push_back(std::move(y));
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Every conjugacy class of G, each sorted, ordered by least member.
inline std::vector<std::vector<Permutation>> conjugacy_classes(const GeneratedGroup& G) {
  std::vector<std::vector<Permutation>> out;
  std::unordered_set<Permutation, PermutationHash> done;
  for (const auto& g : G.elements()) {
    if (done.count(g)) continue;
    auto cls = conjugacy_class(G, g);
    for (const auto& x : cls) done.insert(x);
    out.push_back(std::move(cls));
  }
  return out;
}

/// Right cosets Hx of H in G. Coset i is represented by the least element
/// of G (in sorted order) lying in it; g maps Hx to Hxg.
class CosetSpace {
 public:
  CosetSpace(const GeneratedGroup& G, const GeneratedGroup& H,
             std::size_t domain_cap = 10'000'000)
      : degree_(G.degree()) {
    if (H.degree() != G.degree()) throw PreconditionError("coset_action: degree mismatch");
    for (const auto& h : H.generators())
      if (!G.contains(h)) throw PreconditionError("coset_action: H is not a subgroup of G");
    if (G.order() % H.order() != 0) throw PreconditionError("coset_action: |H| does not divide |G|");
    const std::size_t index = G.order() / H.order();
    if (index > domain_cap) throw CapExceeded("coset_action: index exceeds domain cap");
    coset_of_.reserve(G.order());
    for (const auto& x : G.elements()) {
      if (coset_of_.count(x)) continue;
      const u32 id = static_cast<u32>(reps_.size());
      reps_.push_back(x);
      for (const auto& h : H.elements()) coset_of_.emplace(h * x, id);
    }
    if (reps_.size() != index) throw PreconditionError("coset_action: inconsistent coset count");
  }

  std::size_t size() const { return reps_.size(); }
  std::size_t group_degree() const { return degree_; }
  const Permutation& representative(u32 coset) const { return reps_.at(coset); }

  u32 coset_of(const Permutation& x) const {
    auto it = coset_of_.find(x);
    if (it == coset_of_.end()) throw PreconditionError("element not in the ambient group");
    return it->second;
  }

  u32 apply(const Permutation& g, u32 coset) const { return coset_of(reps_.at(coset) * g); }

 private:
  std::size_t degree_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, u32, PermutationHash> coset_of_;
};

// ---------------------------------------------------------------------------
// Named groups.

inline Permutation cycle_perm(std::size_t degree, std::initializer_list<u32> one_based) {
  std::vector<u32> img(degree);
  for (u32 i = 0; i < degree; ++i) img[i] = i;
  std::vector<u32> c(one_based);
  for (std::size_t j = 0; j < c.size(); ++j) img[c[j] - 1] = c[(j + 1) % c.size()] - 1;
  return Permutation(std::move(img));
}

inline std::vector<Permutation> symmetric_generators(std::size_t n) {
  if (n < 2) return {Permutation::identity(std::max<std::size_t>(n, 1))};
  std::vector<u32> img(n);
  for (u32 i = 0; i < n; ++i) img[i] = (i + 1) % static_cast<u32>(n);
  return {Permutation(std::move(img)), cycle_perm(n, {1, 2})};
}

inline std::vector<Permutation> alternating_generators(std::size_t n) {
  if (n < 3) return {Permutation::identity(std::max<std::size_t>(n, 1))};
  // 3-cycles (1 2 k) generate Alt(n).
  std::vector<Permutation> gens;
  for (u32 k = 3; k <= n; ++k) gens.push_back(cycle_perm(n, {1, 2, k}));
  return gens;
}

inline GeneratedGroup symmetric_group(std::size_t n, std::size_t cap = kDefaultGroupCap) {
  return closure(symmetric_generators(n), std::max<std::size_t>(n, 1), cap);
}

inline GeneratedGroup alternating_group(std::size_t n, std::size_t cap = kDefaultGroupCap) {
  return closure(alternating_generators(n), std::max<std::size_t>(n, 1), cap);
}

inline bool is_even(const Permutation& p) {
  std::size_t transpositions = 0;
  for (const auto& c : p.cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

/// Generators of PGL_2(q) (or PSL_2(q) when `special`) as 2x2 matrices:
/// [[1,1],[0,1]], [[1,0],[1,1]] and diag(w, 1) for PGL or diag(w, 1/w) for
/// PSL, with w primitive.
inline std::vector<Matrix> pgl2_matrix_generators(const Field& f, bool special) {
  std::vector<Matrix> gens;
  gens.emplace_back(f, 2, 2, std::vector<FieldElem>{1, 1, 0, 1});
  gens.emplace_back(f, 2, 2, std::vector<FieldElem>{1, 0, 1, 1});
  const FieldElem w = f.primitive_element();
  if (special) gens.emplace_back(f, 2, 2, std::vector<FieldElem>{w, 0, 0, f.inv(w)});
  else gens.emplace_back(f, 2, 2, std::vector<FieldElem>{w, 0, 0, 1});
  return gens;
}

inline GeneratedGroup pgl2(std::uint32_t q) {
  const Field& f = Field::get(q);
  std::vector<Permutation> gens;
  for (const auto& m : pgl2_matrix_generators(f, false)) gens.push_back(projective_permutation(m));
  return closure(gens, q + 1);
}

inline GeneratedGroup psl2(std::uint32_t q) {
  const Field& f = Field::get(q);
  std::vector<Permutation> gens;
  for (const auto& m : pgl2_matrix_generators(f, true)) gens.push_back(projective_permutation(m));
  return closure(gens, q + 1);
}

/// PGammaL_2(q): PGL_2(q) extended by the field automorphism.
inline GeneratedGroup pgammal2(std::uint32_t q) {
  const Field& f = Field::get(q);
  std::vector<Permutation> gens;
  for (const auto& m : pgl2_matrix_generators(f, false)) gens.push_back(projective_permutation(m));
  if (f.degree() > 1)
    gens.push_back(projective_permutation(SemilinearMap{Matrix::identity(f, 2), 1}));
  return closure(gens, q + 1);
}

/// M_10 on the 10 points of PG(1,9): PSL_2(9) extended by diag(nonsquare,1)
/// composed with the Frobenius.
inline GeneratedGroup mathieu10() {
  const Field& f = Field::get(9);
  std::vector<Permutation> gens;
  for (const auto& m : pgl2_matrix_generators(f, true)) gens.push_back(projective_permutation(m));
  Matrix d(f, 2, 2, std::vector<FieldElem>{f.primitive_element(), 0, 0, 1});
  gens.push_back(projective_permutation(SemilinearMap{d, 1}));
  return closure(gens, 10);
}

/// Sym(6) acting on the 6 points of PG(1,5) contains PGL_2(5) transitively;
/// this is that copy as a subgroup of Sym(6).
inline GeneratedGroup transitive_pgl2_5() { return pgl2(5); }

/// Subgroup of G generated by `gens` (all assumed to lie in G).
inline GeneratedGroup subgroup(const GeneratedGroup& G, std::vector<Permutation> gens) {
  for (const auto& g : gens)
    if (!G.contains(g)) throw PreconditionError("subgroup generator not in group");
  return closure(std::move(gens), G.degree());
}

/// Elements of G normalizing H (H given as a sorted element list).
inline GeneratedGroup normalizer(const GeneratedGroup& G, const GeneratedGroup& H) {
  std::vector<Permutation> out;
  for (const auto& x : G.elements()) {
    bool ok = true;
    for (const auto& h : H.generators())
      if (!H.contains(h.conjugate_by(x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return GeneratedGroup::from_elements(G.degree(), std::move(out));
}

/// Setwise stabilizer of a point set.
inline GeneratedGroup set_stabilizer(const GeneratedGroup& G, const std::vector<u32>& set) {
  std::vector<bool> in(G.degree(), false);
  for (u32 x : set) in.at(x) = true;
  std::vector<Permutation> out;
  for (const auto& g : G.elements()) {
    bool ok = true;
    for (u32 x : set)
      if (!in[g(x)]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return GeneratedGroup::from_elements(G.degree(), std::move(out));
}

// ---------------------------------------------------------------------------
// Automorphisms realized by an ambient normalizing group.

class AmbientAutomorphisms {
 public:
  /// Collects one representative per distinct automorphism of `target`
  /// induced by conjugation with elements of `ambient`.
  AmbientAutomorphisms(GeneratedGroup target, const GeneratedGroup& ambient)
      : target_(std::move(target)) {
    if (ambient.degree() != target_.degree())
      throw PreconditionError("ambient/target degree mismatch");
    for (const auto& a : ambient.generators())
      for (const auto& t : target_.generators())
        if (!target_.contains(t.conjugate_by(a)))
          throw PreconditionError("ambient group does not normalize the target");
    std::unordered_set<std::vector<std::size_t>, VecHash> seen;
    for (const auto& a : ambient.elements()) {
      std::vector<std::size_t> sig;
      for (const auto& t : target_.generators()) sig.push_back(target_.index_of(t.conjugate_by(a)));
      if (seen.insert(sig).second) reps_.push_back(a);
    }
    // index maps: auto_table_[r][i] = index of (element i)^(rep r)
    const auto& elems = target_.elements();
    auto_table_.assign(reps_.size(), std::vector<u32>(elems.size()));
    for (std::size_t r = 0; r < reps_.size(); ++r)
      for (std::size_t i = 0; i < elems.size(); ++i)
        auto_table_[r][i] = static_cast<u32>(target_.index_of(elems[i].conjugate_by(reps_[r])));

    std::vector<std::size_t> gen_idx;
    for (const auto& t : target_.generators()) gen_idx.push_back(target_.index_of(t));
    std::unordered_map<std::vector<std::size_t>, std::size_t, VecHash> by_sig;
    auto signature = [&](auto&& image) {
      std::vector<std::size_t> sig;
      for (auto gi : gen_idx) sig.push_back(image(gi));
      return sig;
    };
    for (std::size_t r = 0; r < reps_.size(); ++r)
      by_sig.emplace(signature([&](std::size_t gi) { return auto_table_[r][gi]; }), r);
    auto lookup = [&](const std::vector<std::size_t>& sig) {
      auto it = by_sig.find(sig);
      if (it == by_sig.end()) throw PreconditionError("automorphism not realized by the ambient group");
      return it->second;
    };
    compose_.assign(reps_.size(), std::vector<std::size_t>(reps_.size()));
    for (std::size_t r = 0; r < reps_.size(); ++r)
      for (std::size_t s = 0; s < reps_.size(); ++s)
        compose_[r][s] = lookup(signature([&](std::size_t gi) { return auto_table_[s][auto_table_[r][gi]]; }));
    inner_.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      inner_[i] = lookup(signature([&](std::size_t gi) {
        return target_.index_of(elems[gi].conjugate_by(elems[i]));
      }));
  }

  const GeneratedGroup& target() const { return target_; }
  const std::vector<Permutation>& coset_reps() const { return reps_; }
  std::size_t count() const { return reps_.size(); }
  /// Image index of target element i under automorphism r.
  u32 apply(std::size_t r, u32 i) const { return auto_table_[r][i]; }
  /// Automorphism r followed by s.
  std::size_t compose(std::size_t r, std::size_t s) const { return compose_[r][s]; }
  /// Automorphism induced by conjugation with target element i.
  std::size_t inner(u32 i) const { return inner_[i]; }
  std::size_t index_of_rep(const Permutation& a) const {
    for (std::size_t r = 0; r < reps_.size(); ++r) {
      bool same = true;
      for (const auto& t : target_.generators())
        if (t.conjugate_by(a) != t.conjugate_by(reps_[r])) {
          same = false;
          break;
        }
      if (same) return r;
    }
    throw PreconditionError("element does not induce a listed automorphism");
  }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto x : v) h = (h ^ x) * 1099511628211ull;
      return h;
    }
  };

  GeneratedGroup target_;
  std::vector<Permutation> reps_;
  std::vector<std::vector<u32>> auto_table_;
  std::vector<std::vector<std::size_t>> compose_;
  std::vector<std::size_t> inner_;
};

/// Element sigma * phi * (t_0, ..., t_l) of W, acting on the right in that
/// order. sigma permutes the coordinates {0..l}; phi indexes an ambient
/// automorphism; t holds target element indices.
struct DiagonalElement {
  Permutation sigma;
  std::size_t phi = 0;
  std::vector<u32> t;
};

/// The diagonal-type action of W on Omega = T^l, points stored as the
/// distinguished coset representatives [1, a_1, ..., a_l].
class DiagonalSetting {
 public:
  DiagonalSetting(const AmbientAutomorphisms& amb, std::size_t ell) : amb_(&amb), ell_(ell) {
    if (ell == 0) throw PreconditionError("diagonal action needs l >= 1");
    const auto& T = amb.target();
    const auto& el = T.elements();
    n_ = el.size();
    mul_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        mul_[i * n_ + j] = static_cast<u32>(T.index_of(el[i] * el[j]));
    inv_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) inv_[i] = static_cast<u32>(T.index_of(el[i].inverse()));
    one_ = static_cast<u32>(T.index_of(Permutation::identity(T.degree())));
    identity_aut_ = amb.index_of_rep(Permutation::identity(T.degree()));
    size_ = 1;
    for (std::size_t i = 0; i < ell; ++i) {
      if (size_ > (u64{1} << 40) / n_) throw CapExceeded("diagonal domain too large");
      size_ *= n_;
    }
  }

  const AmbientAutomorphisms& automorphisms() const { return *amb_; }
  std::size_t ell() const { return ell_; }
  std::size_t target_order() const { return n_; }
  u64 size() const { return size_; }
  u32 one() const { return one_; }
  u32 mul(u32 a, u32 b) const { return mul_[a * n_ + b]; }
  u32 inv(u32 a) const { return inv_[a]; }

  DiagonalElement identity() const {
    return {Permutation::identity(ell_ + 1), identity_aut_, std::vector<u32>(ell_ + 1, one_)};
  }

  /// Coordinates a_1..a_l of the point with the given index (base |T|).
  std::vector<u32> decode(u64 index) const {
    std::vector<u32> a(ell_);
    for (std::size_t i = ell_; i-- > 0;) {
      a[i] = static_cast<u32>(index % n_);
      index /= n_;
    }
    return a;
  }
  u64 encode(const std::vector<u32>& a) const {
    u64 idx = 0;
    for (u32 x : a) idx = idx * n_ + x;
    return idx;
  }

  /// Image of [1, a_1..a_l] under sigma, then phi, then (t_0..t_l).
  std::vector<u32> apply(const DiagonalElement& x, const std::vector<u32>& a) const {
    if (x.sigma.degree() != ell_ + 1 || x.t.size() != ell_ + 1 || a.size() != ell_)
      throw PreconditionError("diagonal element/point shape mismatch");
    // beta = (1, a_1, ..., a_l), coordinates permuted: position i^sigma gets beta_i
    std::vector<u32> beta(ell_ + 1);
    beta[x.sigma(0)] = one_;
    for (std::size_t i = 1; i <= ell_; ++i) beta[x.sigma(static_cast<u32>(i))] = a[i - 1];
    // renormalize to leading 1
    const u32 lead_inv = inv_[beta[0]];
    std::vector<u32> out(ell_);
    for (std::size_t i = 1; i <= ell_; ++i) out[i - 1] = mul(lead_inv, beta[i]);
    for (auto& v : out) v = amb_->apply(x.phi, v);
    // [1, a_i] -> [1, t_0^{-1} a_i t_i]
    const u32 t0i = inv_[x.t[0]];
    for (std::size_t i = 1; i <= ell_; ++i) out[i - 1] = mul(mul(t0i, out[i - 1]), x.t[i]);
    return out;
  }

  u64 apply(const DiagonalElement& x, u64 index) const { return encode(apply(x, decode(index))); }

  /// x then y. Coordinates of x's translation part are carried along by
  /// y's coordinate permutation and twisted by y's automorphism.
  DiagonalElement multiply(const DiagonalElement& x, const DiagonalElement& y) const {
    DiagonalElement z;
    z.sigma = x.sigma * y.sigma;
    z.phi = amb_->compose(x.phi, y.phi);
    z.t.assign(ell_ + 1, one_);
    for (u32 i = 0; i <= ell_; ++i) z.t[y.sigma(i)] = amb_->apply(y.phi, x.t[i]);
    for (u32 i = 0; i <= ell_; ++i) z.t[i] = mul(z.t[i], y.t[i]);
    return normalize(std::move(z));
  }

  DiagonalElement power(DiagonalElement x, u64 e) const {
    DiagonalElement acc = identity();
    while (e) {
      if (e & 1) acc = multiply(acc, x);
      x = multiply(x, x);
      e >>= 1;
    }
    return acc;
  }

  /// Rewrites (sigma, phi, t) with t_0 = 1: the diagonal (t_0, ..., t_0)
  /// acts as conjugation by t_0 and is absorbed into phi.
  DiagonalElement normalize(DiagonalElement x) const {
    const u32 t0 = x.t[0];
    if (t0 == one_) return x;
    x.phi = amb_->compose(x.phi, amb_->inner(t0));
    const u32 t0i = inv_[t0];
    for (auto& v : x.t) v = mul(t0i, v);
    return x;
  }

  Permutation to_permutation(const DiagonalElement& x) const {
    if (size_ > 10'000'000) throw CapExceeded("diagonal domain exceeds the full-scan cap");
    std::vector<u32> img(size_);
    for (u64 i = 0; i < size_; ++i) img[i] = static_cast<u32>(apply(x, i));
    return Permutation::from_images_unchecked(std::move(img));
  }

  /// Generators of W as permutations of Omega: translations by M, the
  /// ambient automorphisms, inner automorphisms and Sym(l+1).
  std::vector<Permutation> generators() const {
    std::vector<Permutation> gens;
    const auto& T = amb_->target();
    for (std::size_t i = 1; i <= ell_; ++i)
      for (const auto& t : T.generators()) {
        DiagonalElement x = identity();
        x.t[i] = static_cast<u32>(T.index_of(t));
        gens.push_back(to_permutation(x));
      }
    for (std::size_t r = 0; r < amb_->count(); ++r) {
      DiagonalElement x = identity();
      x.phi = r;
      gens.push_back(to_permutation(x));
    }
    for (const auto& s : symmetric_generators(ell_ + 1)) {
      DiagonalElement x = identity();
      x.sigma = s;
      gens.push_back(to_permutation(x));
    }
    return gens;
  }

  /// Uniform element of W via its unique sigma*phi*m decomposition.
  template <class Rng>
  DiagonalElement random_element(Rng& rng) const {
    DiagonalElement x = identity();
    std::vector<u32> sig(ell_ + 1);
    for (u32 i = 0; i <= ell_; ++i) sig[i] = i;
    std::shuffle(sig.begin(), sig.end(), rng);
    x.sigma = Permutation(std::move(sig));
    x.phi = std::uniform_int_distribution<std::size_t>(0, amb_->count() - 1)(rng);
    std::uniform_int_distribution<u32> pick(0, static_cast<u32>(n_ - 1));
    for (std::size_t i = 1; i <= ell_; ++i) x.t[i] = pick(rng);
    return x;
  }

  std::string render_point(const std::vector<u32>& a) const {
    const auto& el = amb_->target().elements();
    std::string s = "[1";
    for (u32 v : a) s += "," + render_cycles(el[v]);
    return s + "]";
  }

 private:
  const AmbientAutomorphisms* amb_;
  std::size_t ell_;
  std::size_t n_ = 0;
  u64 size_ = 0;
  u32 one_ = 0;
  std::size_t identity_aut_ = 0;
  std::vector<u32> mul_, inv_;
};

/// Visits every element of W once, as sigma * phi * (1, t_1, ..., t_l).
template <class Fn>
void for_each_diagonal_element(const DiagonalSetting& S, Fn&& fn) {
  std::vector<u32> sig(S.ell() + 1);
  for (u32 i = 0; i <= S.ell(); ++i) sig[i] = i;
  do {
    for (std::size_t r = 0; r < S.automorphisms().count(); ++r)
      for (u64 m = 0; m < S.size(); ++m) {
        DiagonalElement x = S.identity();
        x.sigma = Permutation(sig);
        x.phi = r;
        const auto t = S.decode(m);
        for (std::size_t i = 0; i < t.size(); ++i) x.t[i + 1] = t[i];
        fn(x);
      }
  } while (std::next_permutation(sig.begin(), sig.end()));
}

/// Generators of W acting on T^l, closed to a group when it fits the cap.
inline std::vector<Permutation> realize_diagonal_group(const AmbientAutomorphisms& amb,
                                                       std::size_t ell) {
  return DiagonalSetting(amb, ell).generators();
}

}  // namespace regcycle
