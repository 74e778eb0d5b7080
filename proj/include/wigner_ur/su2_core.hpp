#pragma once

#include <array>

#include "wigner_ur/half_int.hpp"
#include "wigner_ur/sqrt_rational.hpp"

namespace wigner_ur::su2 {

/// Clebsch-Gordan coefficient (j1 j2 m1 m2 | j3 m3) in the Condon-Shortley
/// convention, computed exactly by Racah's closed summation formula.
/// Returns zero unless m1+m2=m3 and (j1,j2,j3) is a valid triad.
SqrtRational cg(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, HalfInt j3, HalfInt m3);

/// 3-jm symbol, (-1)^(j1-j2-m3) cg(j1,j2,m1,m2,j3,-m3)/sqrt(2j3+1).
SqrtRational threejm(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// 6-j symbol by Racah's single-sum formula. Zero when any of the four triads
/// fails the triangle rule.
SqrtRational sixj(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

/// 9-j symbol as the single sum over products of three 6-j symbols.
/// Argument order is row-major.
SqrtRational ninej(const std::array<HalfInt, 9>& j);

/// Standard 2-jm metric tensor (-1)^(j+m) delta(mp, -m), Edmonds normalization.
int metric_m(HalfInt j, HalfInt m, HalfInt mp);

double cg_d(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, HalfInt j3, HalfInt m3);
double threejm_d(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);
double sixj_d(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);
double ninej_d(const std::array<HalfInt, 9>& j);

}  // namespace wigner_ur::su2
