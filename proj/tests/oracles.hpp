// Test-only oracles: independent brute-force routes to the coupling and
// recoupling coefficients, kept separate from the library implementations
// they are used to check.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>

#include "wigner_ur/cplx_mat.hpp"
#include "wigner_ur/half_int.hpp"
#include "wigner_ur/sqrt_rational.hpp"
#include "wigner_ur/su2_core.hpp"

namespace oracles {

using namespace wigner_ur;

// 6-j from the overlap of the two three-spin coupling orders,
// <(j1 j2) j12, j3; j m | j1, (j2 j3) j23; j m> evaluated by CG sums:
// {j1 j2 j12; j3 j j23} = (-1)^{j1+j2+j3+j} overlap / sqrt((2j12+1)(2j23+1)).
inline SqrtRational sixj_from_cg(HalfInt j1, HalfInt j2, HalfInt j12, HalfInt j3, HalfInt j,
                                 HalfInt j23) {
    if (!triangle(j1, j2, j12) || !triangle(j12, j3, j) || !triangle(j2, j3, j23) ||
        !triangle(j1, j23, j))
        return SqrtRational::zero();
    const int tm = j.twice();  // evaluate at the highest weight
    SqrtRational overlap = SqrtRational::zero();
    for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2)
     for (int tm2 = -j2.twice(); tm2 <= j2.twice(); tm2 += 2) {
         const int tm12 = tm1 + tm2;
         if (std::abs(tm12) > j12.twice()) continue;
         const int tm3 = tm - tm12;
         if (std::abs(tm3) > j3.twice()) continue;
         const int tm23 = tm2 + tm3;
         if (std::abs(tm23) > j23.twice()) continue;
         overlap += su2::cg(j1, j2, HalfInt(tm1), HalfInt(tm2), j12, HalfInt(tm12)) *
                    su2::cg(j12, j3, HalfInt(tm12), HalfInt(tm3), j, HalfInt(tm)) *
                    su2::cg(j2, j3, HalfInt(tm2), HalfInt(tm3), j23, HalfInt(tm23)) *
                    su2::cg(j1, j23, HalfInt(tm1), HalfInt(tm23), j, HalfInt(tm));
     }
    SqrtRational result = overlap / SqrtRational::make(1, mpq_class((j12.twice() + 1)) *
                                                              (j23.twice() + 1));
    if (neg1pow(j1 + j2 + j3 + j) < 0) result = -result;
    return result;
}

// 9-j from the overlap of the two four-spin coupling orders (quadruple CG sums):
// <(j1 j2) j12, (j3 j4) j34; j m | (j1 j3) j13, (j2 j4) j24; j m>
//   = sqrt((2j12+1)(2j34+1)(2j13+1)(2j24+1)) {j1 j2 j12; j3 j4 j34; j13 j24 j}.
inline SqrtRational ninej_from_cg(const std::array<HalfInt, 9>& a) {
    const HalfInt j1 = a[0], j2 = a[1], j12 = a[2];
    const HalfInt j3 = a[3], j4 = a[4], j34 = a[5];
    const HalfInt j13 = a[6], j24 = a[7], j = a[8];
    const int tm = j.twice();
    SqrtRational overlap = SqrtRational::zero();
    for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2)
     for (int tm2 = -j2.twice(); tm2 <= j2.twice(); tm2 += 2)
      for (int tm3 = -j3.twice(); tm3 <= j3.twice(); tm3 += 2) {
          const int tm4 = tm - tm1 - tm2 - tm3;
          if (std::abs(tm4) > j4.twice()) continue;
          const int tm12 = tm1 + tm2, tm34 = tm3 + tm4;
          const int tm13 = tm1 + tm3, tm24 = tm2 + tm4;
          if (std::abs(tm12) > j12.twice() || std::abs(tm34) > j34.twice() ||
              std::abs(tm13) > j13.twice() || std::abs(tm24) > j24.twice())
              continue;
          overlap += su2::cg(j1, j2, HalfInt(tm1), HalfInt(tm2), j12, HalfInt(tm12)) *
                     su2::cg(j3, j4, HalfInt(tm3), HalfInt(tm4), j34, HalfInt(tm34)) *
                     su2::cg(j12, j34, HalfInt(tm12), HalfInt(tm34), j, HalfInt(tm)) *
                     su2::cg(j1, j3, HalfInt(tm1), HalfInt(tm3), j13, HalfInt(tm13)) *
                     su2::cg(j2, j4, HalfInt(tm2), HalfInt(tm4), j24, HalfInt(tm24)) *
                     su2::cg(j13, j24, HalfInt(tm13), HalfInt(tm24), j, HalfInt(tm));
      }
    const mpq_class dims = mpq_class(j12.twice() + 1) * (j34.twice() + 1) *
                           (j13.twice() + 1) * (j24.twice() + 1);
    return overlap / SqrtRational::make(1, dims);
}

// Coupled-basis coefficients of two spin-1/2's from direct diagonalization of
// the total J^2 on the 4-dimensional product space, with the highest-weight
// sign convention applied. Returns <m1 = +1/2, m2 = -1/2 | j m = 0>.
inline double two_spin_coeff_from_diagonalization(HalfInt jtot) {
    using Mat = Eigen::Matrix4cd;
    auto kron = [](const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) {
        Mat out;
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) out.block<2, 2>(2 * i, 2 * k) = x(i, k) * y;
        return out;
    };
    Eigen::Matrix2cd sp, sm, sz, id2;
    sp << 0, 1, 0, 0;  // basis order (+1/2, -1/2)
    sm << 0, 0, 1, 0;
    sz << 0.5, 0, 0, -0.5;
    id2.setIdentity();
    const Mat jp = kron(sp, id2) + kron(id2, sp);
    const Mat jm = kron(sm, id2) + kron(id2, sm);
    const Mat jz = kron(sz, id2) + kron(id2, sz);
    const Mat j2 = 0.5 * (jp * jm + jm * jp) + jz * jz;
    Eigen::SelfAdjointEigenSolver<Mat> es(j2);
    const double target = jtot.value() * (jtot.value() + 1.0);
    for (int i = 0; i < 4; ++i) {
        if (std::abs(es.eigenvalues()(i) - target) > 1e-9) continue;
        Eigen::Vector4cd v = es.eigenvectors().col(i);
        // restrict to the m = 0 block: components (+1/2,-1/2) and (-1/2,+1/2)
        if (std::abs(v(0)) > 1e-9 || std::abs(v(3)) > 1e-9) continue;
        // Condon-Shortley: the coefficient on the highest m1 is positive real
        const cplx lead = v(1);
        v /= lead / std::abs(lead);
        if (v(1).real() < 0) v = -v;
        return v(1).real();
    }
    return 0.0;
}

}  // namespace oracles
