#pragma once

#include <vector>

#include "wigner_ur/cplx_mat.hpp"
#include "wigner_ur/half_int.hpp"
#include "wigner_ur/wigner_d.hpp"

namespace wigner_ur::urbasis {

/// Eigenvalue label alpha = -j r + t of the cyclic unitary, keyed by the
/// integer offset t in 0..2j so label arithmetic stays exact for any r.
struct AlphaLabel {
    HalfInt j;
    double r = 0;
    int t = 0;

    AlphaLabel() = default;
    AlphaLabel(HalfInt j_, double r_, int t_) : j(j_), r(r_), t(t_) {
        if (t < 0 || t > j.twice())
            throw std::invalid_argument("AlphaLabel: offset t outside 0..2j");
    }
    double alpha() const { return -j.value() * r + t; }
};

struct BasisVector {
    HalfInt j;
    AlphaLabel label;
    Eigen::VectorXcd coeffs;  // in the descending-m spin ordering
};

/// <j m | j alpha; r> = q^{alpha m} / sqrt(2j+1), q = exp(2 pi i/(2j+1)).
cplx overlap_coeff(HalfInt j, HalfInt m, const AlphaLabel& a);

/// All 2j+1 basis vectors, ordered by t = 0..2j.
std::vector<BasisVector> build_basis(HalfInt j, double r);

/// Unitary change of basis V with V(m index, t) = <j m|j alpha_t; r>.
/// Columns are the basis vectors.
Eigen::MatrixXcd ur_transform(HalfInt j, double r);

/// Coefficients of |j m> expanded over the B_r vectors (inverse transform),
/// indexed by t.
Eigen::VectorXcd inverse_expansion(HalfInt j, HalfInt m, double r);

/// Inter-basis overlap <j alpha; r | j beta; s> via the Dirichlet-kernel
/// closed form; at alpha - beta = n (2j+1) the analytic limit (-1)^(2jn) is
/// returned instead of 0/0.
cplx basis_overlap(HalfInt j, const AlphaLabel& a, const AlphaLabel& b);

/// Same overlap from the explicit inner product of basis vectors (dual route).
cplx basis_overlap_direct(HalfInt j, const AlphaLabel& a, const AlphaLabel& b);

/// max over (m, t) of | |<jm|j alpha;r>| - 1/sqrt(2j+1) | (unbiasedness).
double mub_check(HalfInt j, double r);

/// Rotation matrix in the alpha basis: V^dag D^{(j)}(R) V.
Eigen::MatrixXcd rot_matrix_r(HalfInt j, const EulerAngles& e, double r);

/// Rotation about z by p 2 pi/(2j+1), expressed in the alpha basis.
Eigen::MatrixXcd cyclic_rotation(HalfInt j, double r, int p);

/// Predicted action of cyclic_rotation: the permutation t -> t - p mod 2j+1
/// carrying a (-1)^{2j} phase on wrapped labels (trivial for integer j).
Eigen::MatrixXcd cyclic_rotation_expected(HalfInt j, int p);

/// Labeled wrappers.
CplxMat rot_matrix_r_mat(HalfInt j, const EulerAngles& e, double r);
CplxMat wigner_D_mat(HalfInt j, const EulerAngles& e);

}  // namespace wigner_ur::urbasis
