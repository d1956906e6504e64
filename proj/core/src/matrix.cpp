#include "trigdef/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace trigdef {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return QMatrix(0, 0);
  const int rows = static_cast<int>(cols[0].size());
  for (const auto& c : cols) {
    if (static_cast<int>(c.size()) != rows) throw std::invalid_argument("from_columns: ragged columns");
  }
  QMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

std::vector<Rational> QMatrix::column(int j) const {
  std::vector<Rational> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::hstack(const QMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hstack: row mismatch");
  QMatrix m(rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
  }
  return m;
}

std::pair<QMatrix, std::vector<int>> QMatrix::rref() const {
  QMatrix m = *this;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int i = row; i < rows_; ++i) {
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(row, j));
    }
    const Rational inv = 1 / m.at(row, col);
    for (int j = col; j < cols_; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

int QMatrix::rank() const { return static_cast<int>(rref().second.size()); }

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
  auto [r, pivots] = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve: rhs length mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto [r, pivots] = aug.rref();
  // Inconsistent iff the augmented column is a pivot.
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rational> x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(static_cast<int>(i), cols_);
  return x;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: length mismatch");
  std::vector<Rational> y(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (int j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

MembershipResult subspace_membership(const std::vector<std::vector<Rational>>& span,
                                     const std::vector<Rational>& v) {
  for (const auto& s : span) {
    if (s.size() != v.size()) throw std::invalid_argument("subspace_membership: dimension mismatch");
  }
  MembershipResult res;
  if (span.empty()) {
    for (const auto& x : v) {
      if (x != 0) return res;
    }
    res.member = true;
    return res;
  }
  QMatrix m = QMatrix::from_columns(span);
  auto sol = m.solve(v);
  if (!sol) return res;
  res.member = true;
  res.coords = std::move(*sol);
  return res;
}

int rank_of_columns(const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return 0;
  return QMatrix::from_columns(cols).rank();
}

std::vector<std::vector<Rational>> pivot_columns(const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return {};
  const auto pivots = QMatrix::from_columns(cols).rref().second;
  std::vector<std::vector<Rational>> basis;
  basis.reserve(pivots.size());
  for (int p : pivots) basis.push_back(cols[p]);
  return basis;
}

bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b) {
  if (a.empty() && b.empty()) return true;
  if (a.empty()) return rank_of_columns(b) == 0;
  if (b.empty()) return rank_of_columns(a) == 0;
  std::vector<std::vector<Rational>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const int ra = rank_of_columns(a);
  const int rb = rank_of_columns(b);
  return ra == rb && rank_of_columns(all) == ra;
}

}  // namespace trigdef
