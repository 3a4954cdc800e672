#pragma once

// Small finite fields, matrices in the row-vector convention (w -> w*M),
// affine maps, semilinear 2x2 maps and their action on the projective line.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "regcycle/permcore.hpp"

namespace regcycle {

using FieldElem = std::uint8_t;

/// F_q for q in {2,3,4,5,7,8,9,11,13}. Elements are encoded as integers
/// 0..q-1 whose base-p digits are the polynomial coefficients (constant
/// term first) modulo the fixed irreducible modulus.
class Field {
 public:
  static constexpr std::array<std::uint32_t, 9> kSupported = {2, 3, 4, 5, 7, 8, 9, 11, 13};

  /// Shared, immutable instance for q.
  static const Field& get(std::uint32_t q) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[q];
    if (!slot) slot.reset(new Field(q));
    return *slot;
  }

  std::uint32_t q() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  /// Coefficients of the monic modulus, constant term first (size e+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem add(FieldElem a, FieldElem b) const { return add_[a * q_ + b]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add_[a * q_ + neg_[b]]; }
  FieldElem mul(FieldElem a, FieldElem b) const { return mul_[a * q_ + b]; }
  FieldElem neg(FieldElem a) const { return neg_[a]; }
  FieldElem inv(FieldElem a) const {
    if (a == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(q_));
    return inv_[a];
  }
  FieldElem pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// x -> x^p.
  FieldElem frobenius(FieldElem a) const { return pow(a, p_); }

  /// Least generator of the multiplicative group.
  FieldElem primitive_element() const {
    for (std::uint32_t c = 1; c < q_; ++c) {
      std::uint32_t ord = 1;
      FieldElem x = static_cast<FieldElem>(c);
      while (x != 1) {
        x = mul(x, static_cast<FieldElem>(c));
        ++ord;
      }
      if (ord == q_ - 1) return static_cast<FieldElem>(c);
    }
    return 1;
  }

  bool is_square(FieldElem a) const {
    if (a == 0) return true;
    for (std::uint32_t c = 1; c < q_; ++c)
      if (mul(static_cast<FieldElem>(c), static_cast<FieldElem>(c)) == a) return true;
    return false;
  }

 private:
  explicit Field(std::uint32_t q) : q_(q) {
    switch (q) {
      case 2: case 3: case 5: case 7: case 11: case 13:
        p_ = q; e_ = 1; modulus_ = {0, 1}; break;
      case 4: p_ = 2; e_ = 2; modulus_ = {1, 1, 1}; break;     // x^2+x+1
      case 8: p_ = 2; e_ = 3; modulus_ = {1, 1, 0, 1}; break;  // x^3+x+1
      case 9: p_ = 3; e_ = 2; modulus_ = {1, 0, 1}; break;     // x^2+1
      default:
        throw PreconditionError("unsupported field order q=" + std::to_string(q));
    }
    if (e_ > 1 && !modulus_irreducible())
      throw PreconditionError("field modulus is reducible");
    build_tables();
  }

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }
  std::uint32_t undigits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::uint32_t i = e_; i-- > 0;) a = a * p_ + d[i];
    return a;
  }

  // Degree 2 and 3 moduli are irreducible iff they have no root in F_p.
  bool modulus_irreducible() const {
    for (std::uint32_t x = 0; x < p_; ++x) {
      std::uint32_t v = 0;
      for (std::uint32_t i = e_ + 1; i-- > 0;) v = (v * x + modulus_[i]) % p_;
      if (v == 0) return false;
    }
    return true;
  }

  void build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      const auto da = digits(a);
      std::vector<std::uint32_t> dn(e_);
      for (std::uint32_t i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[a] = static_cast<FieldElem>(undigits(dn));
      for (std::uint32_t b = 0; b < q_; ++b) {
        const auto db = digits(b);
        std::vector<std::uint32_t> ds(e_);
        for (std::uint32_t i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = static_cast<FieldElem>(undigits(ds));
        // schoolbook product, then reduce by the monic modulus
        std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
          for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (std::uint32_t k = 2 * e_ - 1; k-- > e_;) {
          const std::uint32_t c = prod[k];
          if (!c) continue;
          for (std::uint32_t i = 0; i <= e_; ++i) {
            const std::uint32_t idx = k - e_ + i;
            prod[idx] = (prod[idx] + (p_ - c) * modulus_[i]) % p_;
          }
        }
        prod.resize(e_);
        mul_[a * q_ + b] = static_cast<FieldElem>(undigits(prod));
      }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
      for (std::uint32_t b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<FieldElem>(b);
  }

  std::uint32_t q_ = 0, p_ = 0, e_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<FieldElem> add_, mul_, neg_, inv_;
};

using Vec = std::vector<FieldElem>;

/// Dense matrix over a supported field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries)
      : field_(&f), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw PreconditionError("matrix entry count mismatch");
    for (FieldElem x : a_)
      if (x >= f.q()) throw PreconditionError("matrix entry outside the field");
  }

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const std::vector<FieldElem>& entries() const { return a_; }

  Matrix operator*(const Matrix& b) const {
    if (cols_ != b.rows_ || field_->q() != b.field_->q())
      throw PreconditionError("matrix shape mismatch");
    const Field& f = *field_;
    Matrix out(f, rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const FieldElem x = (*this)(i, k);
        if (!x) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
      }
    return out;
  }

  /// Row vector times matrix.
  Vec act(const Vec& w) const {
    if (w.size() != rows_) throw PreconditionError("vector length mismatch");
    const Field& f = *field_;
    Vec out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!w[i]) continue;
      for (std::size_t j = 0; j < cols_; ++j) out[j] = f.add(out[j], f.mul(w[i], (*this)(i, j)));
    }
    return out;
  }

  /// Rank by Gaussian elimination.
  std::size_t rank() const {
    Matrix m = *this;
    const Field& f = *field_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && m(piv, c) == 0) ++piv;
      if (piv == rows_) continue;
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(piv, j));
      const FieldElem iv = f.inv(m(r, c));
      for (std::size_t j = 0; j < cols_; ++j) m(r, j) = f.mul(m(r, j), iv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || m(i, c) == 0) continue;
        const FieldElem factor = m(i, c);
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
      ++r;
    }
    return r;
  }

  FieldElem determinant() const {
    if (rows_ != cols_) throw PreconditionError("determinant of non-square matrix");
    Matrix m = *this;
    const Field& f = *field_;
    FieldElem det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t piv = c;
      while (piv < rows_ && m(piv, c) == 0) ++piv;
      if (piv == rows_) return 0;
      if (piv != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(c, j), m(piv, j));
        det = f.neg(det);
      }
      det = f.mul(det, m(c, c));
      const FieldElem iv = f.inv(m(c, c));
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (!m(i, c)) continue;
        const FieldElem factor = f.mul(m(i, c), iv);
        for (std::size_t j = c; j < cols_; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
      }
    }
    return det;
  }

  bool invertible() const { return rows_ == cols_ && determinant() != 0; }

  /// Gauss-Jordan on [M | I].
  Matrix inverse() const {
    if (rows_ != cols_) throw PreconditionError("inverse of non-square matrix");
    const Field& f = *field_;
    const std::size_t n = rows_;
    Matrix m = *this;
    Matrix inv = identity(f, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && m(piv, c) == 0) ++piv;
      if (piv == n) throw PreconditionError("singular matrix has no inverse");
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(c, j), m(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
      const FieldElem iv = f.inv(m(c, c));
      for (std::size_t j = 0; j < n; ++j) {
        m(c, j) = f.mul(m(c, j), iv);
        inv(c, j) = f.mul(inv(c, j), iv);
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || m(i, c) == 0) continue;
        const FieldElem factor = m(i, c);
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
          inv(i, j) = f.sub(inv(i, j), f.mul(factor, inv(c, j)));
        }
      }
    }
    return inv;
  }

  /// Entrywise x -> x^{p^k}.
  Matrix frobenius(std::uint32_t k) const {
    Matrix out = *this;
    for (auto& x : out.a_)
      for (std::uint32_t j = 0; j < k; ++j) x = field_->frobenius(x);
    return out;
  }

  std::uint64_t order() const {
    if (!invertible()) throw PreconditionError("order of a singular matrix");
    const Matrix id = identity(*field_, rows_);
    Matrix x = *this;
    std::uint64_t o = 1;
    while (x != id) {
      x = x * *this;
      ++o;
    }
    return o;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_->q() == o.field_->q() && a_ == o.a_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ',';
      s += '[';
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ',';
        s += std::to_string((*this)(i, j));
      }
      s += ']';
    }
    return s + "]";
  }

 private:
  const Field* field_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElem> a_;
};

/// w -> w*linear + translation.
struct AffineMap {
  Matrix linear;
  Vec translation;

  static AffineMap identity(const Field& f, std::size_t d) {
    return {Matrix::identity(f, d), Vec(d, 0)};
  }

  std::size_t dimension() const { return linear.rows(); }

  Vec act(const Vec& w) const {
    Vec out = linear.act(w);
    const Field& f = linear.field();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], translation[i]);
    return out;
  }

  /// Apply *this, then rhs.
  AffineMap operator*(const AffineMap& rhs) const {
    return {linear * rhs.linear, rhs.act(translation)};
  }

  /// The (d+1)x(d+1) matrix [[linear, 0], [translation, 1]]; (w,1) maps to
  /// (w*linear + translation, 1).
  Matrix block_matrix() const {
    const std::size_t d = dimension();
    Matrix m(linear.field(), d + 1, d + 1);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = linear(i, j);
    for (std::size_t j = 0; j < d; ++j) m(d, j) = translation[j];
    m(d, d) = 1;
    return m;
  }

  std::uint64_t order() const { return block_matrix().order(); }

  bool operator==(const AffineMap& o) const {
    return linear == o.linear && translation == o.translation;
  }
};

/// w -> frob^k(w) * matrix on the projective line.
struct SemilinearMap {
  Matrix matrix;
  std::uint32_t frobenius_power = 0;

  /// Apply *this, then rhs: (A,f)(B,g) = (frob^g(A) B, f+g).
  SemilinearMap operator*(const SemilinearMap& rhs) const {
    const std::uint32_t e = matrix.field().degree();
    return {matrix.frobenius(rhs.frobenius_power) * rhs.matrix,
            (frobenius_power + rhs.frobenius_power) % e};
  }
};

/// Projective line PG(1,q): point index x in [0,q) is (1,x), index q is (0,1).
inline std::size_t projective_line_size(const Field& f) { return f.q() + 1; }

inline Vec projective_point(const Field& f, std::size_t index) {
  if (index > f.q()) throw PreconditionError("projective point index out of range");
  if (index == f.q()) return {0, 1};
  return {1, static_cast<FieldElem>(index)};
}

inline std::size_t projective_index(const Field& f, const Vec& v) {
  if (v.size() != 2) throw PreconditionError("projective point must have 2 coordinates");
  if (v[0] != 0) return f.mul(v[1], f.inv(v[0]));
  if (v[1] == 0) throw PreconditionError("zero vector is not a projective point");
  return f.q();
}

inline std::size_t projective_action(const SemilinearMap& m, std::size_t point) {
  const Field& f = m.matrix.field();
  if (m.matrix.rows() != 2 || m.matrix.cols() != 2 || !m.matrix.invertible())
    throw PreconditionError("projective action needs an invertible 2x2 matrix");
  Vec v = projective_point(f, point);
  for (auto& x : v)
    for (std::uint32_t j = 0; j < m.frobenius_power; ++j) x = f.frobenius(x);
  return projective_index(f, m.matrix.act(v));
}

inline std::size_t projective_action(const Matrix& m, std::size_t point) {
  return projective_action(SemilinearMap{m, 0}, point);
}

/// Induced permutation of the q+1 projective points.
inline Permutation projective_permutation(const SemilinearMap& m) {
  const Field& f = m.matrix.field();
  const std::size_t n = projective_line_size(f);
  std::vector<u32> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<u32>(projective_action(m, i));
  return Permutation(std::move(img));
}

inline Permutation projective_permutation(const Matrix& m) {
  return projective_permutation(SemilinearMap{m, 0});
}

/// Vectors of F_q^d indexed by base-q digits, first coordinate most
/// significant.
inline Vec vector_from_index(const Field& f, std::size_t d, u64 index) {
  Vec v(d);
  for (std::size_t i = d; i-- > 0;) {
    v[i] = static_cast<FieldElem>(index % f.q());
    index /= f.q();
  }
  return v;
}

inline u64 vector_index(const Field& f, const Vec& v) {
  u64 idx = 0;
  for (FieldElem x : v) idx = idx * f.q() + x;
  return idx;
}

/// All matrices of GL_d(q), in index order of their entry sequences.
inline std::vector<Matrix> enumerate_gl(const Field& f, std::size_t d) {
  u64 total = 1;
  for (std::size_t i = 0; i < d * d; ++i) total *= f.q();
  std::vector<Matrix> out;
  for (u64 idx = 0; idx < total; ++idx) {
    Matrix m(f, d, d, vector_from_index(f, d * d, idx));
    if (m.invertible()) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace regcycle
