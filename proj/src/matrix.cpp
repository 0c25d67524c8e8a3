#include "hamop/matrix.hpp"

#include <utility>

#include "hamop/errors.hpp"

namespace hamop {

ExprMatrix::ExprMatrix(SpaceP sp, unsigned rows, unsigned cols)
    : sp_(std::move(sp)), rows_(rows), cols_(cols) {
  if (rows_ == 0 || cols_ == 0) throw ShapeMismatch("matrix dimensions must be positive");
  e_.assign(static_cast<size_t>(rows_) * cols_, Expr::zero(sp_));
}

ExprMatrix::ExprMatrix(SpaceP sp, std::vector<std::vector<Expr>> rows)
    : sp_(std::move(sp)) {
  if (rows.empty() || rows.front().empty())
    throw ShapeMismatch("matrix dimensions must be positive");
  rows_ = static_cast<unsigned>(rows.size());
  cols_ = static_cast<unsigned>(rows.front().size());
  e_.reserve(static_cast<size_t>(rows_) * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged matrix rows");
    for (auto& x : r) {
      require_same_space(sp_, x.space());
      e_.push_back(std::move(x));
    }
  }
}

ExprMatrix ExprMatrix::identity(SpaceP sp, unsigned n) {
  ExprMatrix m(sp, n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = Expr::constant(sp, 1);
  return m;
}

ExprMatrix ExprMatrix::operator+(const ExprMatrix& o) const {
  require_same_space(sp_, o.sp_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("matrix addition requires equal shapes");
  ExprMatrix r(sp_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

ExprMatrix ExprMatrix::operator-(const ExprMatrix& o) const {
  require_same_space(sp_, o.sp_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("matrix subtraction requires equal shapes");
  ExprMatrix r(sp_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

ExprMatrix ExprMatrix::operator*(const ExprMatrix& o) const {
  require_same_space(sp_, o.sp_);
  if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
  ExprMatrix r(sp_, rows_, o.cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < o.cols_; ++j) {
      Expr acc = Expr::zero(sp_);
      for (unsigned k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

ExprMatrix ExprMatrix::mul(const Expr& c) const {
  require_same_space(sp_, c.space());
  ExprMatrix r(sp_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
  return r;
}

ExprMatrix ExprMatrix::transpose() const {
  ExprMatrix r(sp_, cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool ExprMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = i + 1; j < cols_; ++j)
      if (!(at(i, j) == at(j, i))) return false;
  return true;
}

bool ExprMatrix::is_zero() const {
  for (const auto& x : e_) if (!x.is_zero()) return false;
  return true;
}

namespace {

// Entries entering elimination must be even functions: division below
// happens in the rational-function field.
RatFun even_entry(const Expr& x) {
  if (!x.is_even_function())
    throw ParityViolation("matrix elimination requires entries free of odd variables");
  return x.ratfun();
}

}  // namespace

ExprMatrix ExprMatrix::inverse() const {
  if (rows_ != cols_) throw ShapeMismatch("only square matrices can be inverted");
  const unsigned n = rows_;
  // Work on an augmented [A | I] block of rational functions.
  std::vector<std::vector<RatFun>> a(n, std::vector<RatFun>(2 * n, RatFun()));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) a[i][j] = even_entry(at(i, j));
    a[i][n + i] = RatFun::constant(1);
  }
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular");
    if (piv != col) std::swap(a[piv], a[col]);
    RatFun inv = a[col][col].inverse();
    for (unsigned j = col; j < 2 * n; ++j) a[col][j] = a[col][j] * inv;
    for (unsigned i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      RatFun f = a[i][col];
      for (unsigned j = col; j < 2 * n; ++j) a[i][j] = a[i][j] - f * a[col][j];
    }
  }
  ExprMatrix r(sp_, n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) r.at(i, j) = Expr::from_ratfun(sp_, a[i][n + j]);
  return r;
}

Expr ExprMatrix::det() const {
  if (rows_ != cols_) throw ShapeMismatch("determinant requires a square matrix");
  const unsigned n = rows_;
  std::vector<std::vector<RatFun>> a(n, std::vector<RatFun>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) a[i][j] = even_entry(at(i, j));
  RatFun d = RatFun::constant(1);
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return Expr::zero(sp_);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = d * RatFun::constant(-1);
    }
    d = d * a[col][col];
    RatFun inv = a[col][col].inverse();
    for (unsigned i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      RatFun f = a[i][col] * inv;
      for (unsigned j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[col][j];
    }
  }
  return Expr::from_ratfun(sp_, d);
}

bool ExprMatrix::operator==(const ExprMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < e_.size(); ++k) if (!(e_[k] == o.e_[k])) return false;
  return true;
}

}  // namespace hamop
