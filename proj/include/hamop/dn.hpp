#ifndef HAMOP_DN_HPP
#define HAMOP_DN_HPP

#include <vector>

#include "hamop/matrix.hpp"
#include "hamop/operators.hpp"

namespace hamop {

/// Exact inverse over the rational-function field.
ExprMatrix matrix_inverse(const ExprMatrix& m);

/// Which jet coordinates play the role of the field variables of a
/// homogeneous operator: the order-0 jets u^i, or (after writing
/// u^i = b^i_x) the order-1 jets b^i_x.
enum class DnCoords { Hydrodynamic, Potential };

/// Symmetric coefficient matrix of a homogeneous operator, together
/// with the coordinates its entries (and the derived geometry) refer
/// to. Entries may involve only those coordinates and parameters.
struct MetricField {
  ExprMatrix g;
  DnCoords coords = DnCoords::Hydrodynamic;

  static MetricField hydrodynamic(ExprMatrix g);
  static MetricField potential(ExprMatrix g);

  const SpaceP& space() const { return g.space(); }
  unsigned n() const { return g.rows(); }
  /// Jet atom of the k-th field coordinate.
  Atom coord(unsigned k) const;
  /// Partial derivative of f by the k-th field coordinate.
  Expr comma(const Expr& f, unsigned k) const;
  MetricField inverse() const;
};

/// Dense rank-3 array of expressions over one space.
struct Tensor3 {
  SpaceP sp;
  unsigned n = 0;
  std::vector<Expr> e;

  Tensor3(SpaceP space, unsigned dim);
  Expr& at(unsigned i, unsigned j, unsigned k) {
    return e[(i * n + j) * n + k];
  }
  const Expr& at(unsigned i, unsigned j, unsigned k) const {
    return e[(i * n + j) * n + k];
  }
  bool is_zero() const;
};

enum class ConnForm { Lower, Upper };

/// Christoffel-type symbols: at(i,j,k) holds the lower form G^i_{jk}
/// or the upper form G^{ij}_k according to the tag.
struct ConnectionField {
  Tensor3 t;
  ConnForm form = ConnForm::Lower;
};

/// Levi-Civita symbols of a symmetric nondegenerate metric, in lower
/// form: G^i_{jk} = 1/2 g^{is}(g_{sk,j} + g_{sj,k} - g_{jk,s}).
ConnectionField christoffel_lc(const MetricField& g_lower);

/// Upper form G^{ij}_k = -h^{is} G^j_{sk} of a lower connection.
ConnectionField raise_connection(const MetricField& h_upper,
                                 const ConnectionField& gamma_lower);

/// True iff the Riemann curvature of the Levi-Civita connection of the
/// metric vanishes identically.
bool riemann_is_flat(const MetricField& g_lower);

/// First-order homogeneous operator A^{ij} = h^{ij} d_x + G^{ij}_k u^k_x.
CDiffOp dn1_operator(const MetricField& h_upper,
                     const ConnectionField& gamma_upper);
/// Same with the Levi-Civita connection of the inverse metric.
CDiffOp dn1_from_metric(const MetricField& h_upper);

/// Coefficients c_{skm} = 1/3 (g_{sm,k} - g_{sk,m}) of a third-order
/// homogeneous operator, plus the raised form c^{pq}_k obtained by
/// inverting c_{ijk} = g_{iq} g_{jp} c^{pq}_k.
struct Dn3Coeffs {
  Tensor3 lower;
  Tensor3 upper;
};
Dn3Coeffs dn3_c_from_g(const MetricField& g_lower);

/// Third-order homogeneous operator built from a lower metric:
/// hydrodynamic form d_x (g^{ij} d_x + c^{ij}_k u^k_x) d_x, or
/// potential form -(g^{ij} d_x + c^{ij}_k b^k_xx). The requested form
/// must agree with the coordinates the metric is written in.
CDiffOp dn3_operator(const MetricField& g_lower, DnCoords coords);

/// Symbolic residuals of the two identities that make the third-order
/// operator Hamiltonian: the cyclic sum g_{mk,s} + g_{ks,m} + g_{ms,k}
/// and the quadratic identity c_{msk,l} + g^{pq} c_{pml} c_{qsk}.
struct Dn3Report {
  std::vector<Expr> cyclic_residual;
  std::vector<Expr> quadratic_residual;
  bool cyclic_ok = false;
  bool quadratic_ok = false;
  bool all_ok() const { return cyclic_ok && quadratic_ok; }
};
Dn3Report check_dn3_conditions(const MetricField& g_lower);

/// Residuals of the linear relations between a first-order metric and
/// its upper connection: G^{ij}_k + G^{ji}_k - d_k h^{ij} and
/// h^{is} G^{jk}_s - h^{js} G^{ik}_s.
struct GammaLinearReport {
  std::vector<Expr> symmetry_residual;
  std::vector<Expr> pairing_residual;
  bool symmetry_ok = false;
  bool pairing_ok = false;
  bool all_ok() const { return symmetry_ok && pairing_ok; }
};
GammaLinearReport check_gamma_linear(const MetricField& h_upper,
                                     const ConnectionField& gamma_upper);

/// Residuals A(delta C^a / delta u) for each candidate Casimir density,
/// flattened with the components of one density adjacent.
std::vector<Expr> casimir_check(const CDiffOp& a, const std::vector<Expr>& c);

/// Casimir densities C^a = (1/2 psi^a_{mk} b^k_x + omega^a_m) b^m of a
/// potential-form operator, from constant antisymmetric arrays psi and
/// constants omega.
std::vector<Expr> casimir_construct(
    const SpaceP& sp, const std::vector<std::vector<std::vector<Rat>>>& psi,
    const std::vector<std::vector<Rat>>& omega);

}  // namespace hamop

#endif  // HAMOP_DN_HPP
