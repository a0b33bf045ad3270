#pragma once

// Dense linear algebra over the field with two elements.
//
// Matrices are stored row-major with each row packed into 64-bit words.
// Bit j of a row lives in word j / 64 at position j % 64. Padding bits past
// the last column are always zero; every mutating routine preserves that.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace recolle::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * stride_, 0) {}

  static BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  // One string per row, character 0 is column 0.
  static BitMatrix from_strings(const std::vector<std::string>& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("BitMatrix: ragged row string");
      for (std::size_t j = 0; j < cols; ++j) {
        const char ch = rows[i][j];
        if (ch != '0' && ch != '1') throw std::invalid_argument("BitMatrix: entries must be 0 or 1");
        m.set(i, j, ch == '1');
      }
    }
    return m;
  }

  static BitMatrix from_strings(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    return from_strings(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    Word& w = bits_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = v ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) { bits_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

  const Word* row_data(std::size_t r) const { return bits_.data() + r * stride_; }
  Word* row_data(std::size_t r) { return bits_.data() + r * stride_; }

  void xor_row_into(std::size_t src, std::size_t dst) {
    Word* d = row_data(dst);
    const Word* s = row_data(src);
    for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row_data(a), row_data(a) + stride_, row_data(b));
  }
  bool row_is_zero(std::size_t r) const {
    const Word* p = row_data(r);
    return std::all_of(p, p + stride_, [](Word w) { return w == 0; });
  }

  bool is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j) != (i == j)) return false;
    return true;
  }
  std::size_t popcount() const {
    std::size_t n = 0;
    for (Word w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) t.set(j, i, true);
    return t;
  }

  BitMatrix row(std::size_t r) const { return block(r, 0, 1, cols_); }
  BitMatrix col(std::size_t c) const { return block(0, c, rows_, 1); }

  BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("BitMatrix::block");
    BitMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        if (get(r0 + i, c0 + j)) b.set(i, j, true);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const BitMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("BitMatrix::set_block");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) set(r0 + i, c0 + j, b.get(i, j));
  }

  BitMatrix& operator+=(const BitMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] ^= o.bits_[k];
    return *this;
  }
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("BitMatrix: product shape mismatch");
    BitMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      Word* dst = c.row_data(i);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!a.get(i, k)) continue;
        const Word* src = b.row_data(k);
        for (std::size_t w = 0; w < c.stride_; ++w) dst[w] ^= src[w];
      }
    }
    return c;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

  // Lexicographic comparison of the row strings; used for stable ordering.
  friend bool operator<(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.to_strings() < b.to_strings();
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out(rows_, std::string(cols_, '0'));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) out[i][j] = '1';
    return out;
  }

  static BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("BitMatrix::hstack: row mismatch");
    BitMatrix m(a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
  }
  static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("BitMatrix::vstack: column mismatch");
    BitMatrix m(a.rows_ + b.rows_, a.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
  }
  static BitMatrix block_diagonal(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, a.cols_, b);
    return m;
  }

 private:
  void require_same_shape(const BitMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("BitMatrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

/// A linear map F2^domain -> F2^codomain acting on column vectors; the matrix
/// has shape codomain x domain.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(BitMatrix m) : m_(std::move(m)) {}

  static LinearMap zero(std::size_t domain, std::size_t codomain) {
    return LinearMap(BitMatrix::zero(codomain, domain));
  }
  static LinearMap identity(std::size_t n) { return LinearMap(BitMatrix::identity(n)); }

  std::size_t domain_dim() const { return m_.cols(); }
  std::size_t codomain_dim() const { return m_.rows(); }
  const BitMatrix& matrix() const { return m_; }
  BitMatrix& matrix() { return m_; }

  bool is_zero() const { return m_.is_zero(); }
  bool is_identity() const { return m_.is_identity(); }

  /// (*this) after `inner`.
  LinearMap after(const LinearMap& inner) const {
    if (domain_dim() != inner.codomain_dim()) throw std::invalid_argument("LinearMap: composition dimension mismatch");
    return LinearMap(m_ * inner.m_);
  }
  friend LinearMap operator*(const LinearMap& outer, const LinearMap& inner) { return outer.after(inner); }
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ + b.m_); }
  LinearMap& operator+=(const LinearMap& o) {
    m_ += o.m_;
    return *this;
  }
  LinearMap transpose() const { return LinearMap(m_.transpose()); }

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }

 private:
  BitMatrix m_;
};

struct RrefResult {
  BitMatrix reduced;
  std::vector<std::size_t> pivots;
  BitMatrix transform;  // transform * input == reduced

  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; `transform` records the row operations.
inline RrefResult rref(const BitMatrix& m) {
  RrefResult r{m, {}, BitMatrix::identity(m.rows())};
  BitMatrix& a = r.reduced;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, row);
    r.transform.swap_rows(p, row);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != row && a.get(i, c)) {
        a.xor_row_into(row, i);
        r.transform.xor_row_into(row, i);
      }
    }
    r.pivots.push_back(c);
    ++row;
  }
  return r;
}

/// Row reduction without the transform bookkeeping.
inline std::size_t rank(BitMatrix a) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, row);
    for (std::size_t i = row + 1; i < a.rows(); ++i)
      if (a.get(i, c)) a.xor_row_into(row, i);
    ++row;
  }
  return row;
}
inline std::size_t rank(const LinearMap& f) { return rank(f.matrix()); }

/// A subspace of F2^ambient held by its reduced row-echelon basis, so two
/// subspaces are equal exactly when their bases are bit-equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `spanning` (need not be independent).
  static Subspace span_of_rows(const BitMatrix& spanning) {
    Subspace s(spanning.cols());
    RrefResult r = rref(spanning);
    s.basis_ = r.reduced.block(0, 0, r.rank(), spanning.cols());
    s.pivots_ = std::move(r.pivots);
    return s;
  }
  static Subspace span_of_columns(const BitMatrix& spanning) { return span_of_rows(spanning.transpose()); }
  static Subspace whole(std::size_t n) { return span_of_rows(BitMatrix::identity(n)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const BitMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Columns are the basis vectors: an injective map F2^dim -> F2^ambient.
  LinearMap inclusion() const { return LinearMap(basis_.transpose()); }

  /// Reads the pivot coordinates; retraction() * inclusion() == identity.
  LinearMap retraction() const {
    BitMatrix m(dim(), ambient_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) m.set(i, pivots_[i], true);
    return LinearMap(std::move(m));
  }

  bool contains(const BitMatrix& column) const {
    BitMatrix v = column.transpose();
    for (std::size_t i = 0; i < pivots_.size(); ++i)
      if (v.get(0, pivots_[i])) {
        for (std::size_t j = 0; j < ambient_; ++j)
          if (basis_.get(i, j)) v.flip(0, j);
      }
    return v.is_zero();
  }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i).transpose())) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  BitMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace kernel_basis(const LinearMap& f) {
  const BitMatrix& m = f.matrix();
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  BitMatrix basis(n - r.rank(), n);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.set(k, free, true);
    for (std::size_t i = 0; i < r.rank(); ++i)
      if (r.reduced.get(i, free)) basis.set(k, r.pivots[i], true);
    ++k;
  }
  return Subspace::span_of_rows(basis);
}

struct ImageCokernel {
  Subspace image;
  std::size_t coker_dim = 0;
  LinearMap projection;  // codomain -> F2^coker_dim, surjective, kernel == image
  LinearMap section;     // F2^coker_dim -> codomain, projection * section == identity
};

/// The cokernel is coordinatised by the non-pivot columns of the image's
/// canonical basis, which makes induced maps on cokernels deterministic.
inline ImageCokernel image_and_cokernel(const LinearMap& f) {
  ImageCokernel out;
  out.image = Subspace::span_of_columns(f.matrix());
  const std::size_t n = f.codomain_dim();
  std::vector<std::size_t> coord(n, n);  // codomain index -> cokernel coordinate, n if pivot
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : out.image.pivots()) is_pivot[p] = true;
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) coord[j] = k++;
  out.coker_dim = k;
  BitMatrix proj(k, n);
  BitMatrix sec(n, k);
  for (std::size_t j = 0; j < n; ++j) {
    if (coord[j] != n) {
      proj.set(coord[j], j, true);
      sec.set(j, coord[j], true);
    }
  }
  const BitMatrix& b = out.image.basis();
  for (std::size_t i = 0; i < out.image.dim(); ++i) {
    const std::size_t p = out.image.pivots()[i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != p && b.get(i, j)) proj.set(coord[j], p, true);
  }
  out.projection = LinearMap(std::move(proj));
  out.section = LinearMap(std::move(sec));
  return out;
}

/// Finds g with f * g == target. Among all solutions the one with every free
/// variable set to zero is returned: it is the least solution when coordinate
/// i is weighted 2^i. Returns nullopt when target leaves the image of f.
inline std::optional<LinearMap> solve(const LinearMap& f, const LinearMap& target) {
  if (f.codomain_dim() != target.codomain_dim()) throw std::invalid_argument("solve: codomain mismatch");
  const RrefResult r = rref(f.matrix());
  const BitMatrix s = r.transform * target.matrix();
  for (std::size_t i = r.rank(); i < s.rows(); ++i)
    if (!s.row_is_zero(i)) return std::nullopt;
  BitMatrix g(f.domain_dim(), target.domain_dim());
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < target.domain_dim(); ++j)
      if (s.get(i, j)) g.set(r.pivots[i], j, true);
  return LinearMap(std::move(g));
}

/// Finds h with h * f == target (factoring through f from the right).
inline std::optional<LinearMap> solve_right(const LinearMap& f, const LinearMap& target) {
  if (f.domain_dim() != target.domain_dim()) throw std::invalid_argument("solve_right: domain mismatch");
  auto t = solve(f.transpose(), target.transpose());
  if (!t) return std::nullopt;
  return t->transpose();
}

inline std::optional<LinearMap> inverse(const LinearMap& f) {
  if (f.domain_dim() != f.codomain_dim()) return std::nullopt;
  const RrefResult r = rref(f.matrix());
  if (r.rank() != f.domain_dim()) return std::nullopt;
  return LinearMap(r.transform);
}

inline bool is_injective(const LinearMap& f) { return rank(f) == f.domain_dim(); }
inline bool is_surjective(const LinearMap& f) { return rank(f) == f.codomain_dim(); }
inline bool is_invertible(const LinearMap& f) {
  return f.domain_dim() == f.codomain_dim() && rank(f) == f.domain_dim();
}

struct Pullback {
  std::size_t dim = 0;
  LinearMap p1;
  LinearMap p2;
};

/// P = {(a, b) : f(a) = g(b)} with its two projections.
inline Pullback pullback(const LinearMap& f, const LinearMap& g) {
  if (f.codomain_dim() != g.codomain_dim()) throw std::invalid_argument("pullback: codomain mismatch");
  // Over F2, f - g == f + g.
  const LinearMap joint(BitMatrix::hstack(f.matrix(), g.matrix()));
  const LinearMap incl = kernel_basis(joint).inclusion();
  const std::size_t a = f.domain_dim();
  const std::size_t b = g.domain_dim();
  BitMatrix pa(a, a + b), pb(b, a + b);
  pa.set_block(0, 0, BitMatrix::identity(a));
  pb.set_block(0, a, BitMatrix::identity(b));
  return {incl.domain_dim(), LinearMap(pa) * incl, LinearMap(pb) * incl};
}

struct Pushout {
  std::size_t dim = 0;
  LinearMap q1;
  LinearMap q2;
};

/// Q = (A + B) / {(f(c), g(c))} with its two insertions.
inline Pushout pushout(const LinearMap& f, const LinearMap& g) {
  if (f.domain_dim() != g.domain_dim()) throw std::invalid_argument("pushout: domain mismatch");
  const LinearMap joint(BitMatrix::vstack(f.matrix(), g.matrix()));
  const ImageCokernel ic = image_and_cokernel(joint);
  const std::size_t a = f.codomain_dim();
  const std::size_t b = g.codomain_dim();
  BitMatrix ia(a + b, a), ib(a + b, b);
  ia.set_block(0, 0, BitMatrix::identity(a));
  ib.set_block(a, 0, BitMatrix::identity(b));
  return {ic.coker_dim, ic.projection * LinearMap(ia), ic.projection * LinearMap(ib)};
}

inline nlohmann::json to_json(const BitMatrix& m) {
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", m.to_strings()}};
}

inline BitMatrix bitmatrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto data = j.at("data").get<std::vector<std::string>>();
  if (data.size() != rows) throw std::invalid_argument("BitMatrix JSON: row count mismatch");
  return BitMatrix::from_strings(data, cols);
}

}  // namespace recolle::gf2
