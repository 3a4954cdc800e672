#pragma once

// Induced actions behind one interface: a domain with a rank/unrank codec,
// canonical points, and a right action of some element type.
//
// Every action type models `InducedAction`:
//   element_type, point_type
//   size()                 number of points
//   apply(g, x)            canonical image (unchecked fast path)
//   rank(x) / unrank(i)    dense indices 0..size()-1
//   group_order(g)         |g| in the abstract group
//   check_element(g), check_point(x)   throw on inadmissible input
//   render(x), name()

#include <algorithm>
#include <concepts>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "regcycle/gfalgebra.hpp"
#include "regcycle/groups.hpp"
#include "regcycle/parallel.hpp"
#include "regcycle/permcore.hpp"
#include "regcycle/rational.hpp"

namespace regcycle {

inline constexpr u64 kDefaultDomainCap = 10'000'000;

template <class A>
concept InducedAction = requires(const A& a, const typename A::element_type& g,
                                 const typename A::point_type& x, u64 i) {
  { a.size() } -> std::convertible_to<u64>;
  { a.apply(g, x) } -> std::same_as<typename A::point_type>;
  { a.rank(x) } -> std::convertible_to<u64>;
  { a.unrank(i) } -> std::same_as<typename A::point_type>;
  { a.group_order(g) } -> std::convertible_to<u64>;
  { a.render(x) } -> std::convertible_to<std::string>;
  { a.name() } -> std::convertible_to<std::string>;
  a.check_element(g);
  a.check_point(x);
};

// ---------------------------------------------------------------------------

class NaturalAction {
 public:
  using element_type = Permutation;
  using point_type = u32;

  explicit NaturalAction(std::size_t degree) : n_(degree) {}

  u64 size() const { return n_; }
  u32 apply(const Permutation& g, u32 x) const { return g(x); }
  u64 rank(u32 x) const { return x; }
  u32 unrank(u64 i) const { return static_cast<u32>(i); }
  u64 group_order(const Permutation& g) const { return g.order(); }
  Permutation induced(const Permutation& g) const { return g; }
  void check_element(const Permutation& g) const {
    if (g.degree() != n_) throw PreconditionError("element degree does not match the action");
  }
  void check_point(u32 x) const {
    if (x >= n_) throw PreconditionError("point out of range");
  }
  std::string render(u32 x) const { return std::to_string(x + 1); }
  std::string name() const { return "natural"; }
  std::size_t degree() const { return n_; }

 private:
  std::size_t n_;
};

/// Sym(m) on k-subsets; points are sorted 0-indexed sets, ranked in colex
/// order.
class KSetAction {
 public:
  using element_type = Permutation;
  using point_type = std::vector<u32>;

  KSetAction(std::size_t m, std::size_t k) : m_(m), k_(k) {
    if (k > m) throw PreconditionError("ksets: k exceeds the degree");
    size_ = binomial(m, k);
  }

  std::size_t degree() const { return m_; }
  std::size_t k() const { return k_; }
  u64 size() const { return size_; }

  point_type apply(const Permutation& g, const point_type& x) const {
    point_type y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = g(x[i]);
    std::sort(y.begin(), y.end());
    return y;
  }
  u64 rank(const point_type& x) const {
    u64 r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) r += binomial(x[i], i + 1);
    return r;
  }
  point_type unrank(u64 r) const {
    point_type x(k_);
    u64 top = m_;
    for (std::size_t i = k_; i-- > 0;) {
      u64 c = top - 1;
      while (binomial(c, i + 1) > r) --c;
      x[i] = static_cast<u32>(c);
      r -= binomial(c, i + 1);
      top = c;
    }
    return x;
  }
  u64 group_order(const Permutation& g) const { return g.order(); }
  void check_element(const Permutation& g) const {
    if (g.degree() != m_) throw PreconditionError("element degree does not match the action");
  }
  void check_point(const point_type& x) const {
    if (x.size() != k_) throw PreconditionError("k-set has the wrong size");
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] >= m_) throw PreconditionError("k-set point out of range");
      if (i && x[i - 1] >= x[i]) throw PreconditionError("k-set is not canonical (sorted, distinct)");
    }
  }
  std::string render(const point_type& x) const {
    std::string s = "{";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i] + 1);
    return s + "}";
  }
  std::string name() const { return "ksets:" + std::to_string(k_); }

 private:
  std::size_t m_, k_;
  u64 size_;
};

/// Sym(ab) on partitions of {0..ab-1} into b blocks of size a. Canonical
/// form: blocks sorted internally, ordered by least element.
class PartitionAction {
 public:
  using element_type = Permutation;
  using point_type = std::vector<std::vector<u32>>;

  PartitionAction(std::size_t a, std::size_t b) : a_(a), b_(b) {
    if (a < 1 || b < 1) throw PreconditionError("partitions: a and b must be positive");
    // (ab)! / (a!^b b!) computed incrementally: choose the block of the
    // least remaining point each time.
    u64 s = 1;
    std::size_t rest = a * b;
    for (std::size_t j = 0; j < b; ++j) {
      s *= binomial(rest - 1, a - 1);
      rest -= a;
    }
    size_ = s;
  }

  std::size_t block_size() const { return a_; }
  std::size_t block_count() const { return b_; }
  std::size_t degree() const { return a_ * b_; }
  u64 size() const { return size_; }
  bool unfaithful() const { return a_ == 2 && b_ == 2; }

  static point_type canonicalize(point_type blocks) {
    for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return blocks;
  }

  point_type apply(const Permutation& g, const point_type& x) const {
    point_type y = x;
    for (auto& blk : y)
      for (auto& v : blk) v = g(v);
    return canonicalize(std::move(y));
  }

  u64 rank(const point_type& x) const {
    ensure_index();
    auto it = index_->find(key_of(x));
    if (it == index_->end()) throw PreconditionError("partition not in the domain");
    return it->second;
  }
  point_type unrank(u64 i) const {
    ensure_index();
    return from_key(points_->at(i));
  }

  u64 group_order(const Permutation& g) const { return g.order(); }

  /// Full induced permutation via block-label arrays.
  Permutation induced(const Permutation& g) const {
    ensure_index();
    const std::size_t n = a_ * b_;
    std::vector<u32> img(size_);
    std::vector<u8> lab(n), relabel(b_);
    for (u64 i = 0; i < size_; ++i) {
      const u64 key = (*points_)[i];
      for (std::size_t x = 0; x < n; ++x) lab[g(static_cast<u32>(x))] = (key >> (4 * x)) & 15u;
      std::fill(relabel.begin(), relabel.end(), u8{255});
      u8 next = 0;
      u64 out = 0;
      for (std::size_t x = 0; x < n; ++x) {
        u8& r = relabel[lab[x]];
        if (r == 255) r = next++;
        out |= u64{r} << (4 * x);
      }
      img[i] = static_cast<u32>(index_->at(out));
    }
    return Permutation::from_images_unchecked(std::move(img));
  }

  void check_element(const Permutation& g) const {
    if (g.degree() != a_ * b_) throw PreconditionError("element degree does not match the action");
  }
  void check_point(const point_type& x) const {
    if (x.size() != b_) throw PreconditionError("partition has the wrong number of blocks");
    std::vector<bool> seen(a_ * b_, false);
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].size() != a_) throw PreconditionError("partition block has the wrong size");
      for (std::size_t i = 0; i < a_; ++i) {
        const u32 v = x[j][i];
        if (v >= a_ * b_ || seen[v]) throw PreconditionError("partition blocks do not tile the points");
        seen[v] = true;
        if (i && x[j][i - 1] >= v) throw PreconditionError("partition block not sorted");
      }
      if (j && x[j - 1].front() >= x[j].front())
        throw PreconditionError("partition blocks not ordered by least element");
    }
  }
  std::string render(const point_type& x) const {
    std::string s = "{";
    for (std::size_t j = 0; j < x.size(); ++j) {
      s += j ? ",{" : "{";
      for (std::size_t i = 0; i < x[j].size(); ++i) s += (i ? "," : "") + std::to_string(x[j][i] + 1);
      s += "}";
    }
    return s + "}";
  }
  std::string name() const { return "partitions:" + std::to_string(a_) + "x" + std::to_string(b_); }

 private:
  using u8 = std::uint8_t;

  u64 key_of(const point_type& x) const {
    u64 key = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      for (u32 v : x[j]) key |= u64{j} << (4 * v);
    return key;
  }
  point_type from_key(u64 key) const {
    point_type out(b_);
    for (std::size_t x = 0; x < a_ * b_; ++x) out[(key >> (4 * x)) & 15u].push_back(static_cast<u32>(x));
    return out;
  }

  void ensure_index() const {
    if (points_) return;
    if (a_ * b_ > 16) throw CapExceeded("partition indexing supports at most 16 points");
    if (size_ > kDefaultDomainCap) throw CapExceeded("partition domain exceeds the full-scan cap");
    auto pts = std::make_shared<std::vector<u64>>();
    pts->reserve(size_);
    const std::size_t n = a_ * b_;
    std::vector<int> lab(n, -1);
    // Block j starts at the least unlabelled point, then picks a-1 more.
    auto rec = [&](auto&& self, std::size_t block) -> void {
      if (block == b_) {
        u64 key = 0;
        for (std::size_t x = 0; x < n; ++x) key |= u64(lab[x]) << (4 * x);
        pts->push_back(key);
        return;
      }
      std::size_t first = 0;
      while (lab[first] != -1) ++first;
      lab[first] = static_cast<int>(block);
      auto choose = [&](auto&& choose_self, std::size_t from, std::size_t left) -> void {
        if (left == 0) {
          self(self, block + 1);
          return;
        }
        for (std::size_t x = from; x < n; ++x) {
          if (lab[x] != -1) continue;
          lab[x] = static_cast<int>(block);
          choose_self(choose_self, x + 1, left - 1);
          lab[x] = -1;
        }
      };
      choose(choose, first + 1, a_ - 1);
      lab[first] = -1;
    };
    rec(rec, 0);
    auto idx = std::make_shared<std::unordered_map<u64, u64>>();
    idx->reserve(pts->size());
    for (u64 i = 0; i < pts->size(); ++i) idx->emplace((*pts)[i], i);
    points_ = std::move(pts);
    index_ = std::move(idx);
  }

  std::size_t a_, b_;
  u64 size_;
  // Lazily built, then read-only.
  mutable std::shared_ptr<const std::vector<u64>> points_;
  mutable std::shared_ptr<const std::unordered_map<u64, u64>> index_;
};

/// Element (h_1, ..., h_r) sigma of H wr Sym(r). On a tuple x the image y
/// has y_{i^sigma} = x_i^{h_i}.
template <class InnerElement>
struct WreathElement {
  std::vector<InnerElement> coords;
  Permutation sigma;

  /// Apply *this, then rhs.
  WreathElement operator*(const WreathElement& rhs) const {
    WreathElement out;
    out.sigma = sigma * rhs.sigma;
    out.coords.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) out.coords.push_back(coords[i] * rhs.coords[sigma(static_cast<u32>(i))]);
    return out;
  }
  bool operator==(const WreathElement&) const = default;
};

/// Product action of (inner group) wr Sym(r) on Delta^r.
template <InducedAction Inner>
class ProductAction {
 public:
  using inner_element = typename Inner::element_type;
  using inner_point = typename Inner::point_type;
  using element_type = WreathElement<inner_element>;
  using point_type = std::vector<inner_point>;

  ProductAction(Inner inner, std::size_t r) : inner_(std::move(inner)), r_(r) {
    if (r == 0) throw PreconditionError("product action needs r >= 1");
    const u64 base = inner_.size();
    size_ = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (base && size_ > (u64{1} << 62) / base) throw CapExceeded("product domain size overflow");
      size_ *= base;
    }
  }

  const Inner& inner() const { return inner_; }
  std::size_t arity() const { return r_; }
  u64 size() const { return size_; }

  point_type apply(const element_type& g, const point_type& x) const {
    point_type y(r_);
    for (std::size_t i = 0; i < r_; ++i) y[g.sigma(static_cast<u32>(i))] = inner_.apply(g.coords[i], x[i]);
    return y;
  }
  u64 rank(const point_type& x) const {
    u64 idx = 0;
    for (const auto& c : x) idx = idx * inner_.size() + inner_.rank(c);
    return idx;
  }
  point_type unrank(u64 i) const {
    point_type x(r_);
    for (std::size_t j = r_; j-- > 0;) {
      x[j] = inner_.unrank(i % inner_.size());
      i /= inner_.size();
    }
    return x;
  }

  /// lcm over sigma-cycles (c_1 .. c_L) of L * |h_{c_1} ... h_{c_L}|.
  u64 group_order(const element_type& g) const {
    u64 o = 1;
    for (const auto& cyc : g.sigma.cycles()) {
      inner_element h = g.coords[cyc[0]];
      for (std::size_t j = 1; j < cyc.size(); ++j) h = h * g.coords[cyc[j]];
      o = lcm_u64(o, cyc.size() * inner_.group_order(h));
    }
    return o;
  }

  /// Full induced permutation: the inner induced permutations are computed
  /// once, then tuples are mapped digit-wise.
  Permutation induced(const element_type& g) const {
    if (size_ > kDefaultDomainCap) throw CapExceeded("product domain exceeds the full-scan cap");
    std::vector<std::vector<u32>> inner_img(r_);
    const u64 base = inner_.size();
    for (std::size_t i = 0; i < r_; ++i) {
      inner_img[i].resize(base);
      for (u64 d = 0; d < base; ++d)
        inner_img[i][d] = static_cast<u32>(inner_.rank(inner_.apply(g.coords[i], inner_.unrank(d))));
    }
    std::vector<u64> weight(r_);  // weight of coordinate j in the index
    u64 w = 1;
    for (std::size_t j = r_; j-- > 0;) {
      weight[j] = w;
      w *= base;
    }
    std::vector<u32> img(size_);
    std::vector<u32> digits(r_);
    for (u64 idx = 0; idx < size_; ++idx) {
      u64 t = idx;
      for (std::size_t j = r_; j-- > 0;) {
        digits[j] = static_cast<u32>(t % base);
        t /= base;
      }
      u64 out = 0;
      for (std::size_t i = 0; i < r_; ++i) out += weight[g.sigma(static_cast<u32>(i))] * inner_img[i][digits[i]];
      img[idx] = static_cast<u32>(out);
    }
    return Permutation::from_images_unchecked(std::move(img));
  }

  void check_element(const element_type& g) const {
    if (g.coords.size() != r_ || g.sigma.degree() != r_)
      throw PreconditionError("wreath element does not match the product arity");
    for (const auto& h : g.coords) inner_.check_element(h);
  }
  void check_point(const point_type& x) const {
    if (x.size() != r_) throw PreconditionError("tuple has the wrong length");
    for (const auto& c : x) inner_.check_point(c);
  }
  std::string render(const point_type& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + inner_.render(x[i]);
    return s + ")";
  }
  std::string name() const { return "product:" + inner_.name() + "^" + std::to_string(r_); }

 private:
  Inner inner_;
  std::size_t r_;
  u64 size_;
};

/// GL_d(q) on row vectors.
class VectorAction {
 public:
  using element_type = Matrix;
  using point_type = Vec;

  VectorAction(const Field& f, std::size_t d) : f_(&f), d_(d) {
    size_ = 1;
    for (std::size_t i = 0; i < d; ++i) size_ *= f.q();
  }

  const Field& field() const { return *f_; }
  std::size_t dimension() const { return d_; }
  u64 size() const { return size_; }
  Vec apply(const Matrix& g, const Vec& x) const { return g.act(x); }
  u64 rank(const Vec& x) const { return vector_index(*f_, x); }
  Vec unrank(u64 i) const { return vector_from_index(*f_, d_, i); }
  u64 group_order(const Matrix& g) const { return g.order(); }
  void check_element(const Matrix& g) const {
    if (g.rows() != d_ || g.cols() != d_ || g.field().q() != f_->q() || !g.invertible())
      throw PreconditionError("element is not in GL_d(q) for this action");
  }
  void check_point(const Vec& x) const {
    if (x.size() != d_) throw PreconditionError("vector has the wrong length");
    for (auto v : x)
      if (v >= f_->q()) throw PreconditionError("vector entry outside the field");
  }
  std::string render(const Vec& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
  }
  std::string name() const { return "vectors"; }

 private:
  const Field* f_;
  std::size_t d_;
  u64 size_;
};

/// AGL_d(q) on F_q^d.
class AffineAction {
 public:
  using element_type = AffineMap;
  using point_type = Vec;

  AffineAction(const Field& f, std::size_t d) : vectors_(f, d) {}

  const Field& field() const { return vectors_.field(); }
  std::size_t dimension() const { return vectors_.dimension(); }
  u64 size() const { return vectors_.size(); }
  Vec apply(const AffineMap& g, const Vec& x) const { return g.act(x); }
  u64 rank(const Vec& x) const { return vectors_.rank(x); }
  Vec unrank(u64 i) const { return vectors_.unrank(i); }
  u64 group_order(const AffineMap& g) const { return g.order(); }
  void check_element(const AffineMap& g) const {
    vectors_.check_element(g.linear);
    vectors_.check_point(g.translation);
  }
  void check_point(const Vec& x) const { vectors_.check_point(x); }
  std::string render(const Vec& x) const { return vectors_.render(x); }
  std::string name() const { return "affine"; }

 private:
  VectorAction vectors_;
};

/// W on the distinguished coset representatives [1, a_1, ..., a_l].
class DiagonalAction {
 public:
  using element_type = DiagonalElement;
  using point_type = std::vector<u32>;

  explicit DiagonalAction(const DiagonalSetting& s) : s_(&s) {}

  const DiagonalSetting& setting() const { return *s_; }
  u64 size() const { return s_->size(); }
  point_type apply(const DiagonalElement& g, const point_type& x) const { return s_->apply(g, x); }
  u64 rank(const point_type& x) const { return s_->encode(x); }
  point_type unrank(u64 i) const { return s_->decode(i); }
  Permutation induced(const DiagonalElement& g) const { return s_->to_permutation(g); }
  // W acts faithfully on Omega.
  u64 group_order(const DiagonalElement& g) const { return induced(g).order(); }
  void check_element(const DiagonalElement& g) const {
    if (g.sigma.degree() != s_->ell() + 1 || g.t.size() != s_->ell() + 1 ||
        g.phi >= s_->automorphisms().count())
      throw PreconditionError("diagonal element does not match the action");
    for (u32 v : g.t)
      if (v >= s_->target_order()) throw PreconditionError("diagonal translation out of range");
  }
  void check_point(const point_type& x) const {
    if (x.size() != s_->ell()) throw PreconditionError("diagonal point has the wrong length");
    for (u32 v : x)
      if (v >= s_->target_order()) throw PreconditionError("diagonal coordinate out of range");
  }
  std::string render(const point_type& x) const { return s_->render_point(x); }
  std::string name() const { return "diagonal:" + std::to_string(s_->ell()); }

 private:
  const DiagonalSetting* s_;
};

/// G on the right cosets of H.
class CosetAction {
 public:
  using element_type = Permutation;
  using point_type = u32;

  CosetAction(std::shared_ptr<const CosetSpace> space, std::string label)
      : space_(std::move(space)), label_(std::move(label)) {}

  const CosetSpace& space() const { return *space_; }
  u64 size() const { return space_->size(); }
  u32 apply(const Permutation& g, u32 x) const { return space_->apply(g, x); }
  u64 rank(u32 x) const { return x; }
  u32 unrank(u64 i) const { return static_cast<u32>(i); }
  u64 group_order(const Permutation& g) const { return g.order(); }
  void check_element(const Permutation& g) const { (void)space_->coset_of(g); }
  void check_point(u32 x) const {
    if (x >= space_->size()) throw PreconditionError("coset index out of range");
  }
  std::string render(u32 x) const { return "H" + render_cycles(space_->representative(x)); }
  std::string name() const { return "cosets:" + label_; }

 private:
  std::shared_ptr<const CosetSpace> space_;
  std::string label_;
};

inline CosetAction coset_action(const GeneratedGroup& G, const GeneratedGroup& H,
                                std::string label = "H", u64 domain_cap = kDefaultDomainCap) {
  return CosetAction(std::make_shared<CosetSpace>(G, H, domain_cap), std::move(label));
}

// ---------------------------------------------------------------------------
// Generic operations.

template <InducedAction A>
typename A::point_type apply(const A& a, const typename A::element_type& g,
                             const typename A::point_type& x) {
  a.check_element(g);
  a.check_point(x);
  return a.apply(g, x);
}

/// The permutation g induces on domain indices.
template <InducedAction A>
Permutation induced_permutation(const A& a, const typename A::element_type& g,
                                u64 domain_cap = kDefaultDomainCap) {
  if (a.size() > domain_cap) throw CapExceeded("domain of " + a.name() + " exceeds the cap");
  if constexpr (requires { a.induced(g); }) {
    return a.induced(g);
  } else {
    std::vector<u32> img(a.size());
    for (u64 i = 0; i < a.size(); ++i) img[i] = static_cast<u32>(a.rank(a.apply(g, a.unrank(i))));
    return Permutation::from_images_unchecked(std::move(img));
  }
}

template <class Point>
struct Orbit {
  u64 length = 0;
  std::vector<Point> cycle;  // x, x^g, x^{g^2}, ...
};

/// Iterates apply from x until it returns; never touches the full domain.
template <InducedAction A>
Orbit<typename A::point_type> element_orbit(const A& a, const typename A::element_type& g,
                                            const typename A::point_type& x,
                                            u64 max_length = ~u64{0}) {
  a.check_element(g);
  a.check_point(x);
  Orbit<typename A::point_type> out;
  out.cycle.push_back(x);
  auto y = a.apply(g, x);
  while (!(y == x)) {
    if (out.cycle.size() >= max_length) throw CapExceeded("orbit longer than the allowed bound");
    out.cycle.push_back(y);
    y = a.apply(g, y);
  }
  out.length = out.cycle.size();
  return out;
}

/// Orbit length only.
template <InducedAction A>
u64 orbit_length(const A& a, const typename A::element_type& g, const typename A::point_type& x) {
  u64 len = 1;
  auto y = a.apply(g, x);
  while (!(y == x)) {
    ++len;
    y = a.apply(g, y);
  }
  return len;
}

struct FixSet {
  std::string action;
  std::vector<bool> members;
  u64 count = 0;

  bool contains(u64 i) const { return members[i]; }
};

inline FixSet fixed_points(const Permutation& induced, std::string action_name = {}) {
  FixSet fs{std::move(action_name), std::vector<bool>(induced.degree(), false), 0};
  for (u32 i = 0; i < induced.degree(); ++i)
    if (induced(i) == i) {
      fs.members[i] = true;
      ++fs.count;
    }
  return fs;
}

/// Fixed points of g and the exact ratio |Fix| / |Omega|. Large domains
/// are scanned by index ranges across `threads` workers.
template <InducedAction A>
std::pair<FixSet, Rational> fix_and_fpr(const A& a, const typename A::element_type& g,
                                        unsigned threads = 1, u64 domain_cap = kDefaultDomainCap) {
  a.check_element(g);
  if (a.size() > domain_cap) throw CapExceeded("domain of " + a.name() + " exceeds the cap");
  FixSet fs{a.name(), std::vector<bool>(a.size(), false), 0};
  if constexpr (requires { a.induced(g); }) {
    const Permutation p = a.induced(g);
    for (u32 i = 0; i < p.degree(); ++i)
      if (p(i) == i) fs.members[i] = true;
  } else {
    std::vector<char> hit(a.size(), 0);
    parallel_ranges(a.size(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const auto x = a.unrank(i);
        hit[i] = (a.apply(g, x) == x) ? 1 : 0;
      }
    });
    for (u64 i = 0; i < a.size(); ++i) fs.members[i] = hit[i] != 0;
  }
  for (bool b : fs.members) fs.count += b ? 1 : 0;
  Rational r(static_cast<std::int64_t>(fs.count), static_cast<std::int64_t>(a.size()));
  return {std::move(fs), r};
}

/// Order of the permutation induced on the domain (divides group_order).
template <InducedAction A>
u64 induced_order(const A& a, const typename A::element_type& g, u64 domain_cap = kDefaultDomainCap) {
  a.check_element(g);
  return induced_permutation(a, g, domain_cap).order();
}

/// Sorted multiset of orbit lengths of the induced permutation.
inline std::vector<u64> orbit_lengths(const Permutation& induced) {
  std::vector<u64> out;
  for (const auto& c : induced.cycles()) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace regcycle
