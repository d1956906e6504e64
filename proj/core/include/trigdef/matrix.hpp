#pragma once

#include <optional>
#include <vector>

#include "trigdef/rational.hpp"

namespace trigdef {

// Dense matrix over Q, row-major. All reductions use exact Gaussian
// elimination with first-nonzero pivoting, so results are deterministic.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static QMatrix identity(int n);
  // Columns given as vectors of equal length.
  static QMatrix from_columns(const std::vector<std::vector<Rational>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Rational> column(int j) const;
  QMatrix transposed() const;
  // [*this | other], row counts must match.
  QMatrix hstack(const QMatrix& other) const;

  int rank() const;
  // Reduced row echelon form and the pivot column indices.
  std::pair<QMatrix, std::vector<int>> rref() const;
  // Basis of { x : Ax = 0 }, one vector per free column, ascending.
  std::vector<std::vector<Rational>> kernel_basis() const;
  // One solution of Ax = b, or nullopt.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  bool operator==(const QMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> e_;
};

struct MembershipResult {
  bool member = false;
  std::vector<Rational> coords;  // v = sum coords[i] * span[i] when member
};

// Is v in the span of the given vectors? All vectors must have equal length.
MembershipResult subspace_membership(const std::vector<std::vector<Rational>>& span,
                                     const std::vector<Rational>& v);

int rank_of_columns(const std::vector<std::vector<Rational>>& cols);

// Subset of the given columns forming a basis of their span (the pivot
// columns of the echelon form; deterministic).
std::vector<std::vector<Rational>> pivot_columns(const std::vector<std::vector<Rational>>& cols);

// dim(span(a) cap ...) bookkeeping helper: true iff the two column families
// span the same subspace.
bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b);

}  // namespace trigdef
