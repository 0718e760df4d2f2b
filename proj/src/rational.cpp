#include "ckforms/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ckforms {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void QMatrix::append_row(const QVector& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("QMatrix::append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::select_cols(const std::vector<std::size_t>& cols) const {
  QMatrix s(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(i, cols[j]);
  return s;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix*QVector: size mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix product: size mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix sum");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix difference");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: width mismatch");
  QMatrix s(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, j) = b(i, j);
  return s;
}

Echelon row_echelon(QMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  QMatrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return row_echelon(m).pivots.size(); }

QMatrix nullspace(const QMatrix& m) {
  const Echelon e = row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  QMatrix basis(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.append_row(v);
  }
  return basis;
}

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Rational determinant_bareiss(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant_bareiss: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class v = m(i, j).get_num() * (l / m(i, j).get_den());
      a[i * n + j] = v;
    }
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = t;
      }
    prev = a[k * n + k];
  }
  Rational det(mpz_class(sign * a[n * n - 1]), scale);
  det.canonicalize();
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<QVector> solve_in_row_space(const QMatrix& a, const QVector& b) {
  const std::size_t k = a.rows(), n = a.cols();
  if (b.size() != n) throw std::invalid_argument("solve_in_row_space: size mismatch");
  // a^T x = b, augmented
  QMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(j, i);
    aug(i, k) = b[i];
  }
  const Echelon e = row_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  QVector x(k);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, k);
  return x;
}

Inertia inertia(const QMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw std::invalid_argument("inertia: matrix not symmetric");
  QMatrix a = symmetric;
  const std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  Inertia out;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && sgn(a(i, i)) != 0) { piv = i; break; }
    if (piv == n) {
      // all remaining diagonals vanish; fold a nonzero off-diagonal into the diagonal
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && sgn(a(i, j)) != 0) { pi = i; pj = j; break; }
      if (pi == n) {
        for (std::size_t i = 0; i < n; ++i)
          if (!done[i]) ++out.zero;
        return out;
      }
      // row/col pi += row/col pj
      for (std::size_t j = 0; j < n; ++j) a(pi, j) += a(pj, j);
      for (std::size_t i = 0; i < n; ++i) a(i, pi) += a(i, pj);
      piv = pi;
    }
    const Rational d = a(piv, piv);
    (sgn(d) > 0 ? out.positive : out.negative)++;
    done[piv] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a(i, piv)) == 0) continue;
      const Rational f = a(i, piv) / d;
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(piv, j);
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j]) a(piv, j) = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i]) a(i, piv) = 0;
  }
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

namespace {

bool entry_less(const SparseEntry& a, const SparseEntry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

std::vector<SparseEntry> normalize(std::vector<SparseEntry> e) {
  std::sort(e.begin(), e.end(), entry_less);
  std::vector<SparseEntry> out;
  out.reserve(e.size());
  for (auto& x : e) {
    if (!out.empty() && out.back().row == x.row && out.back().col == x.col)
      out.back().value += x.value;
    else
      out.push_back(std::move(x));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const SparseEntry& s) { return sgn(s.value) == 0; }),
            out.end());
  return out;
}

}  // namespace

SparseQMatrix::SparseQMatrix(std::size_t n, std::vector<SparseEntry> entries)
    : n_(n), entries_(normalize(std::move(entries))) {
  for (const auto& e : entries_)
    if (e.row >= n_ || e.col >= n_) throw std::out_of_range("SparseQMatrix: entry out of range");
}

Rational SparseQMatrix::at(std::size_t i, std::size_t j) const {
  SparseEntry key{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, entry_less);
  if (it != entries_.end() && it->row == i && it->col == j) return it->value;
  return 0;
}

SparseQMatrix SparseQMatrix::transpose() const {
  std::vector<SparseEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return SparseQMatrix(n_, std::move(t));
}

SparseQMatrix SparseQMatrix::scaled(const Rational& s) const {
  if (sgn(s) == 0) return SparseQMatrix(n_);
  SparseQMatrix out = *this;
  for (auto& e : out.entries_) e.value *= s;
  return out;
}

QMatrix SparseQMatrix::to_dense() const {
  QMatrix m(n_, n_);
  for (const auto& e : entries_) m(e.row, e.col) = e.value;
  return m;
}

SparseQMatrix SparseQMatrix::from_dense(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SparseQMatrix::from_dense: not square");
  std::vector<SparseEntry> e;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0)
        e.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), m(i, j)});
  return SparseQMatrix(m.rows(), std::move(e));
}

SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("SparseQMatrix product: size mismatch");
  // row ranges of b
  std::vector<std::size_t> start(b.n_ + 1, 0);
  for (const auto& e : b.entries_) ++start[e.row + 1];
  for (std::size_t i = 0; i < b.n_; ++i) start[i + 1] += start[i];
  std::vector<SparseEntry> out;
  for (const auto& x : a.entries_)
    for (std::size_t t = start[x.col]; t < start[x.col + 1]; ++t) {
      const auto& y = b.entries_[t];
      out.push_back({x.row, y.col, x.value * y.value});
    }
  return SparseQMatrix(a.n_, std::move(out));
}

SparseQMatrix operator+(const SparseQMatrix& a, const SparseQMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("SparseQMatrix sum: size mismatch");
  std::vector<SparseEntry> e = a.entries_;
  e.insert(e.end(), b.entries_.begin(), b.entries_.end());
  return SparseQMatrix(a.n_, std::move(e));
}

SparseQMatrix operator-(const SparseQMatrix& a, const SparseQMatrix& b) {
  return a + b.scaled(-1);
}

bool operator==(const SparseQMatrix& a, const SparseQMatrix& b) {
  if (a.n_ != b.n_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto &x = a.entries_[i], &y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

SparseQMatrix commutator(const SparseQMatrix& a, const SparseQMatrix& b) {
  return a * b - b * a;
}

SparseQMatrix linear_combination(const std::vector<SparseQMatrix>& mats, const QVector& coeffs,
                                 std::size_t n) {
  if (mats.size() != coeffs.size()) throw std::invalid_argument("linear_combination: size mismatch");
  std::vector<SparseEntry> e;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    for (const auto& x : mats[k].entries()) e.push_back({x.row, x.col, coeffs[k] * x.value});
  }
  return SparseQMatrix(n, std::move(e));
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace ckforms
