#pragma once

#include "wigner_ur/cplx_mat.hpp"
#include "wigner_ur/half_int.hpp"

namespace wigner_ur {

/// Active z-y-z Euler angles.
struct EulerAngles {
    double alpha = 0, beta = 0, gamma = 0;
};

/// Wigner small-d matrix element d^j_{m'm}(beta) by the explicit sum formula.
double small_d(HalfInt j, HalfInt mp, HalfInt m, double beta);

/// Standard rotation matrix D^{(j)}(R)_{m'm} = e^{-i m' alpha} d(beta) e^{-i m gamma},
/// rows/columns ordered by descending m.
Eigen::MatrixXcd wigner_D(HalfInt j, const EulerAngles& e);

/// Euler angles of the composed rotation R1 * R2, extracted from the SU(2)
/// spin-1/2 product so that D^{(j)}(compose(e1,e2)) = D^{(j)}(e1) D^{(j)}(e2)
/// holds for every j, including the half-integer double cover.
EulerAngles euler_compose(const EulerAngles& e1, const EulerAngles& e2);

}  // namespace wigner_ur
