#ifndef HAMOP_MATRIX_HPP
#define HAMOP_MATRIX_HPP

#include <vector>

#include "hamop/expr.hpp"

namespace hamop {

/// Dense matrix of expressions. Inversion and determinants work over
/// the rational-function field, so entries used there must be free of
/// odd factors.
class ExprMatrix {
 public:
  ExprMatrix(SpaceP sp, unsigned rows, unsigned cols);
  ExprMatrix(SpaceP sp, std::vector<std::vector<Expr>> rows);
  static ExprMatrix identity(SpaceP sp, unsigned n);

  const SpaceP& space() const { return sp_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  Expr& at(unsigned i, unsigned j) { return e_[i * cols_ + j]; }
  const Expr& at(unsigned i, unsigned j) const { return e_[i * cols_ + j]; }

  ExprMatrix operator+(const ExprMatrix& o) const;
  ExprMatrix operator-(const ExprMatrix& o) const;
  ExprMatrix operator*(const ExprMatrix& o) const;
  ExprMatrix mul(const Expr& c) const;
  ExprMatrix transpose() const;

  bool is_symmetric() const;
  bool is_zero() const;

  /// Exact inverse by Gauss-Jordan elimination; throws SingularMatrix
  /// when the determinant vanishes identically.
  ExprMatrix inverse() const;
  Expr det() const;

  bool operator==(const ExprMatrix& o) const;

 private:
  SpaceP sp_;
  unsigned rows_ = 0, cols_ = 0;
  std::vector<Expr> e_;
};

}  // namespace hamop

#endif  // HAMOP_MATRIX_HPP
