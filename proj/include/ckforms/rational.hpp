#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ckforms {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

// dense row-major rational matrix
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  QVector row(std::size_t i) const;
  void append_row(const QVector& r);
  QMatrix transpose() const;
  QMatrix select_cols(const std::vector<std::size_t>& cols) const;
  bool is_zero() const;
  bool is_symmetric() const;

  QVector operator*(const QVector& v) const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix vstack(const QMatrix& a, const QMatrix& b);

struct Echelon {
  QMatrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon row_echelon(QMatrix m);
std::size_t rank(const QMatrix& m);

// rows form a basis of {x : m x = 0}
QMatrix nullspace(const QMatrix& m);

Rational determinant(QMatrix m);
// fraction-free elimination on a denominator-cleared copy
Rational determinant_bareiss(const QMatrix& m);

std::optional<QMatrix> inverse(const QMatrix& m);

// solves x^T a = b^T for x, i.e. expresses b in the row space of a; nullopt if b is not in it
std::optional<QVector> solve_in_row_space(const QMatrix& a, const QVector& b);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

// congruence diagonalization with 2x2 pivots for zero diagonals
Inertia inertia(const QMatrix& symmetric);

Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);

// sparse square rational matrix, entries sorted row-major without explicit zeros
struct SparseEntry {
  std::uint32_t row;
  std::uint32_t col;
  Rational value;
};

class SparseQMatrix {
 public:
  SparseQMatrix() = default;
  explicit SparseQMatrix(std::size_t n) : n_(n) {}
  SparseQMatrix(std::size_t n, std::vector<SparseEntry> entries);

  std::size_t size() const noexcept { return n_; }
  const std::vector<SparseEntry>& entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  Rational at(std::size_t i, std::size_t j) const;
  SparseQMatrix transpose() const;
  SparseQMatrix scaled(const Rational& s) const;
  QMatrix to_dense() const;
  static SparseQMatrix from_dense(const QMatrix& m);

  friend SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b);
  friend SparseQMatrix operator+(const SparseQMatrix& a, const SparseQMatrix& b);
  friend SparseQMatrix operator-(const SparseQMatrix& a, const SparseQMatrix& b);
  friend bool operator==(const SparseQMatrix& a, const SparseQMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<SparseEntry> entries_;
};

SparseQMatrix commutator(const SparseQMatrix& a, const SparseQMatrix& b);
SparseQMatrix linear_combination(const std::vector<SparseQMatrix>& mats, const QVector& coeffs,
                                 std::size_t n);

// sparse coordinate vector, sorted by index
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

std::string rational_to_string(const Rational& q);

}  // namespace ckforms
