#include "stratweyl/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace sw {

CMatrix polar_unitary(const CMatrix& m, double rank_tol) {
  if (m.rows() != m.cols()) throw DimensionError("polar_unitary: matrix must be square");
  if (m.rows() == 0) return m;
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  if (sv(sv.size() - 1) < rank_tol * std::max(1.0, sv(0))) {
    throw NumericError("polar_unitary: matrix is rank deficient");
  }
  // M = W S V* = (W S W*) (W V*)
  return svd.matrixU() * svd.matrixV().adjoint();
}

namespace {

CMatrix hermitian_function(const CMatrix& m, double tol, bool inverse) {
  if (m.rows() != m.cols()) throw DimensionError("psd: matrix must be square");
  if (m.rows() == 0) return m;
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const RVector& ev = es.eigenvalues();
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  RVector f(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (inverse) {
      if (ev(i) <= tol * std::max(1.0, scale)) {
        throw NumericError("psd_inv_sqrt: matrix is not positive definite");
      }
      f(i) = 1.0 / std::sqrt(ev(i));
    } else {
      if (ev(i) < -tol * std::max(1.0, scale)) throw NumericError("psd_sqrt: negative eigenvalue");
      f(i) = std::sqrt(std::max(ev(i), 0.0));
    }
  }
  return es.eigenvectors() * f.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

CMatrix psd_inv_sqrt(const CMatrix& m, double tol) { return hermitian_function(m, tol, true); }

CMatrix psd_sqrt(const CMatrix& m, double tol) { return hermitian_function(m, tol, false); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return r;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff: shape mismatch");
  return max_abs(a - b);
}

CMatrix leading_block(const CMatrix& m, int k) { return m.topLeftCorner(k, k); }

}  // namespace sw
