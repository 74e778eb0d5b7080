#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "wigner_ur/half_int.hpp"

namespace wigner_ur {

using cplx = std::complex<double>;

/// Global default tolerance for floating-point matrix comparisons.
inline constexpr double kDefaultTol = 1e-12;

/// Dense complex matrix with explicit row/column basis labels.
struct CplxMat {
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    Eigen::MatrixXcd m;
    double tol = kDefaultTol;

    CplxMat() = default;
    CplxMat(std::vector<std::string> r, std::vector<std::string> c, Eigen::MatrixXcd mat)
        : rows(std::move(r)), cols(std::move(c)), m(std::move(mat)) {}

    double max_abs_diff(const CplxMat& o) const;
    bool approx_equal(const CplxMat& o, double eps) const { return max_abs_diff(o) < eps; }
    bool approx_equal(const CplxMat& o) const { return approx_equal(o, tol); }

    double hermiticity_error() const { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }
    double unitarity_error() const {
        Eigen::MatrixXcd g = m.adjoint() * m;
        g -= Eigen::MatrixXcd::Identity(m.cols(), m.cols());
        return g.cwiseAbs().maxCoeff();
    }
};

/// Largest entrywise |a - b| between two equally sized matrices.
double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Largest deviation of a from the identity.
double identity_error(const Eigen::MatrixXcd& a);

/// Largest entrywise magnitude of the commutator [a, b].
double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Basis labels: "(n1,n2)" for the two-mode Fock basis.
std::vector<std::string> fock_labels(int k);

/// Basis labels "m=<half-int>", descending m so that m = j comes first.
std::vector<std::string> spin_labels(HalfInt j);

/// Basis labels "t=<offset>" for the eigenbasis of the cyclic operator.
std::vector<std::string> alpha_labels(HalfInt j);

}  // namespace wigner_ur
