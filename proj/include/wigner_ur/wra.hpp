#pragma once

#include <array>
#include <vector>

#include "wigner_ur/cplx_mat.hpp"
#include "wigner_ur/half_int.hpp"
#include "wigner_ur/ur_basis.hpp"

namespace wigner_ur::wra {

using urbasis::AlphaLabel;

/// Coupling coefficient (j1 j2 alpha1 alpha2 | j3 alpha3)_r: the standard CG
/// coefficient carried into the cyclic eigenbasis by a triple phase sum.
/// Labels are passed as integer offsets t (alpha = -j r + t).
cplx cg_ur(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r);
cplx cg_ur(const AlphaLabel& a1, const AlphaLabel& a2, const AlphaLabel& a3);

/// f_r symbol: (-1)^(2 j3) (2j1+1)^{-1/2} (j2 j3 alpha2 alpha3 | j1 alpha1)_r^*.
cplx f_r(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r);

/// fbar_r symbol: triple phase sum over an ordinary 3-jm symbol; carries the
/// full 3-jm column-permutation symmetry.
cplx fbar_r(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r);

/// 2-j alpha metric tensor (j j; alpha alpha')_r.
cplx metric_alpha(HalfInt j, int t, int tp, double r);
Eigen::MatrixXcd metric_alpha_table(HalfInt j, double r);

/// Dense table of fbar_r over all (t1, t2, t3).
struct Tab3 {
    int d1 = 0, d2 = 0, d3 = 0;
    std::vector<cplx> v;
    Tab3() = default;
    Tab3(int a, int b, int c) : d1(a), d2(b), d3(c), v(std::size_t(a) * b * c) {}
    cplx& at(int a, int b, int c) { return v[(std::size_t(a) * d2 + b) * d3 + c]; }
    cplx at(int a, int b, int c) const { return v[(std::size_t(a) * d2 + b) * d3 + c]; }
};
Tab3 fbar_table(HalfInt j1, HalfInt j2, HalfInt j3, double r);

/// f_r reconstructed from fbar_r through the metric (and vice versa); the two
/// routes are mutually inverse.
cplx fbar_from_f(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r);
cplx f_from_fbar(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r);

/// Orthogonality sums of the fbar symbol over (j3, alpha3) and over
/// (alpha1, alpha2); returns the worst deviation of each from its target.
struct OrthogonalityDeviation {
    double over_j3_alpha3 = 0;
    double over_alpha12 = 0;
    long cases = 0;
};
OrthogonalityDeviation fbar_orthogonality(HalfInt j1, HalfInt j2, double r);

/// Deviations of the five 6-j decompositions through fbar symbols and metric
/// tensors from the Racah-formula 6-j, for one argument pattern.
struct SixjIdentityDeviations {
    double via_six_metrics = 0;   // full 0+4 contraction, six metrics
    double via_three_metrics = 0; // 0+4 contraction with one conjugated fbar
    double one_plus_three = 0;
    double two_plus_two = 0;
    double three_plus_one = 0;
    double worst() const;
};
SixjIdentityDeviations sixj_identity_suite(const std::array<HalfInt, 6>& j, double r);

/// Deviations of the three 9-j decompositions (0+6, 1+5, 2+4 forms).
struct NinejIdentityDeviations {
    double zero_plus_six = 0;
    double one_plus_five = 0;
    double two_plus_four = 0;
    double worst() const;
};
NinejIdentityDeviations ninej_identity_suite(const std::array<HalfInt, 9>& j, double r);

/// Value-carrying coupling symbols with their index triples.
struct FrSymbol {
    std::array<HalfInt, 3> j;
    std::array<int, 3> t;
    double r = 0;
    cplx value;
};
struct FbarSymbol {
    std::array<HalfInt, 3> j;
    std::array<int, 3> t;
    double r = 0;
    cplx value;
};
FrSymbol make_f_r(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r);
FbarSymbol make_fbar_r(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r);

/// Spherical tensor operator of rank k: component matrices on a carrier,
/// indexed like the spin basis (descending m, comps[0] is m = +k). The tau
/// label distinguishes repeated irreps; it is an opaque pass-through with no
/// arithmetic content.
struct SphericalTensor {
    HalfInt k;
    std::vector<Eigen::MatrixXcd> comps;
    std::string tau;
    const Eigen::MatrixXcd& comp_tm(int tm) const { return comps.at((k.twice() - tm) / 2); }
    Eigen::MatrixXcd& comp_tm(int tm) { return comps.at((k.twice() - tm) / 2); }
};

/// Wigner unit operator from eps(j2) to eps(j1): the operator whose matrix
/// elements in the standard basis are the f-symbol pattern, so its reduced
/// matrix element is exactly 1.
SphericalTensor unit_tensor(HalfInt j1, HalfInt j2, HalfInt k);

/// Rank-1 tensor built from the su(2) generators on eps(j):
/// (-J+/sqrt2, Jz, J-/sqrt2).
SphericalTensor vector_tensor(HalfInt j);

/// DFT of the 2k+1 spherical components into the alpha scheme (vector form).
Eigen::VectorXcd alpha_components(const Eigen::VectorXcd& m_components, HalfInt k, double r);

/// Component T^{(k)}_{alpha_t; r} of a tensor operator.
Eigen::MatrixXcd tensor_alpha(const SphericalTensor& tensor, double r, int t);

/// Coupled product {T^{(k1)} U^{(k2)}}^{(k)}_{alpha_t; r}.
Eigen::MatrixXcd tensor_product_ur(const SphericalTensor& T, const SphericalTensor& U, HalfInt k,
                                   int t, double r);

/// Scalar product (T . U) along three routes that must agree: the standard
/// component sum, the k x k -> 0 coupling, and the metric-tensor sum.
Eigen::MatrixXcd scalar_product_components(const SphericalTensor& T, const SphericalTensor& U);
Eigen::MatrixXcd scalar_product_coupled(const SphericalTensor& T, const SphericalTensor& U,
                                        double r);
Eigen::MatrixXcd scalar_product_metric(const SphericalTensor& T, const SphericalTensor& U,
                                       double r);

/// Matrix element predicted by the factorization theorem:
/// reduced_me * f_r(j1 j2 k; alpha1 alpha2 alpha).
cplx wigner_eckart_ur(HalfInt j1, int t1, HalfInt j2, int t2, HalfInt k, int t, double r,
                      cplx reduced_me);

/// Unit-tensor probe of the factorization theorem: computes the explicit
/// matrix elements of the transformed unit tensor between B_r vectors and
/// compares them against the f_r symbol.
struct ReducedMeProbe {
    cplx reduced_mean = 0;   // mean of LHS / f_r over labels with |f_r| > cutoff
    double spread = 0;       // max |ratio - mean|
    double worst_match = 0;  // max |LHS - f_r| over all labels
    long samples = 0;
};
ReducedMeProbe probe_reduced_me(HalfInt j1, HalfInt j2, HalfInt k, double r);

}  // namespace wigner_ur::wra
