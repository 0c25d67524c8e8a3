#ifndef HAMOP_OPERATORS_HPP
#define HAMOP_OPERATORS_HPP

#include <vector>

#include "hamop/expr.hpp"

namespace hamop {

/// Vector of expressions homogeneous in the odd coordinates; the
/// canonical carrier for linearizations (degree 1), operator images and
/// characteristics. Components share one space.
struct Superfun {
  unsigned degree = 1;
  std::vector<Expr> comps;

  Superfun(unsigned deg, std::vector<Expr> cs);

  const SpaceP& space() const { return comps.front().space(); }
  unsigned size() const { return (unsigned)comps.size(); }

  Superfun operator+(const Superfun& o) const;
  Superfun operator-() const;
  Superfun operator-(const Superfun& o) const { return *this + (-o); }
  bool is_zero() const;
  bool operator==(const Superfun& o) const = default;
};

/// Matrix differential operator in total derivatives: entry (i, j) is a
/// finite sum of coefficients (expressions without odd factors) times
/// derivative multi-indices. Applied to a vector of arguments it gives
/// sums of coefficient * derivative-of-argument.
class CDiffOp {
 public:
  using Entry = std::map<MultiIndex, Expr>;

  CDiffOp(SpaceP sp, unsigned rows, unsigned cols);
  static CDiffOp identity(SpaceP sp, unsigned n);
  /// Diagonal operator d^k along the lambda-th independent variable.
  static CDiffOp derivative(SpaceP sp, unsigned n, unsigned lambda,
                            unsigned k = 1);
  /// Multiplication operator by a matrix of coefficients.
  static CDiffOp mult(SpaceP sp, const std::vector<std::vector<Expr>>& m);

  const SpaceP& space() const { return sp_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  const Entry& entry(unsigned i, unsigned j) const {
    return e_[i * cols_ + j];
  }

  /// Accumulates c * d_mi into entry (i, j); drops exact zeros.
  void add(unsigned i, unsigned j, const MultiIndex& mi, const Expr& c);
  Expr coefficient(unsigned i, unsigned j, const MultiIndex& mi) const;

  std::vector<Expr> apply(const std::vector<Expr>& psi) const;
  CDiffOp compose(const CDiffOp& o) const;
  CDiffOp operator+(const CDiffOp& o) const;
  CDiffOp operator-() const;
  CDiffOp operator-(const CDiffOp& o) const { return *this + (-o); }
  CDiffOp scale(const Rat& c) const;
  bool is_zero() const;
  bool operator==(const CDiffOp& o) const;

 private:
  SpaceP sp_;
  unsigned rows_ = 0, cols_ = 0;
  std::vector<Entry> e_;
};

/// Operator -> superfunction: row i maps to sum of coefficient times
/// the odd jet of the column variable, pairing column j with the j-th
/// odd variable.
Superfun op_to_superfun(const CDiffOp& a);

/// Inverse of op_to_superfun; every term must be linear in the odd
/// coordinates.
CDiffOp superfun_to_op(const Superfun& s);

/// Scalar encoding of a vector superfunction: sum over i of the i-th
/// odd variable (undifferentiated, on the left) times component i.
Expr superfun_to_multivector(const Superfun& s);

}  // namespace hamop

#endif  // HAMOP_OPERATORS_HPP
