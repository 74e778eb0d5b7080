#include "wigner_ur/ur_basis.hpp"

#include <cmath>
#include <numbers>

namespace wigner_ur::urbasis {

namespace {
// exp(2 pi i x / (2j+1))
cplx qpow(HalfInt j, double x) {
    return std::polar(1.0, 2.0 * std::numbers::pi * x / (j.twice() + 1));
}
}  // namespace

cplx overlap_coeff(HalfInt j, HalfInt m, const AlphaLabel& a) {
    require_jm(j, m, "overlap_coeff");
    if (a.j != j) throw std::invalid_argument("overlap_coeff: mismatched j");
    return qpow(j, a.alpha() * m.value()) / std::sqrt(double(j.twice() + 1));
}

Eigen::MatrixXcd ur_transform(HalfInt j, double r) {
    const int d = j.twice() + 1;
    Eigen::MatrixXcd v(d, d);
    for (int t = 0; t < d; ++t) {
        const AlphaLabel a(j, r, t);
        for (int i = 0; i < d; ++i) {
            const HalfInt m(j.twice() - 2 * i);
            v(i, t) = overlap_coeff(j, m, a);
        }
    }
    return v;
}

std::vector<BasisVector> build_basis(HalfInt j, double r) {
    const Eigen::MatrixXcd v = ur_transform(j, r);
    std::vector<BasisVector> out;
    out.reserve(j.twice() + 1);
    for (int t = 0; t <= j.twice(); ++t)
        out.push_back(BasisVector{j, AlphaLabel(j, r, t), v.col(t)});
    return out;
}

Eigen::VectorXcd inverse_expansion(HalfInt j, HalfInt m, double r) {
    require_jm(j, m, "inverse_expansion");
    const int d = j.twice() + 1;
    Eigen::VectorXcd out(d);
    for (int t = 0; t < d; ++t)
        out(t) = qpow(j, -m.value() * AlphaLabel(j, r, t).alpha()) / std::sqrt(double(d));
    return out;
}

cplx basis_overlap(HalfInt j, const AlphaLabel& a, const AlphaLabel& b) {
    if (a.j != j || b.j != j) throw std::invalid_argument("basis_overlap: mismatched j");
    const int d = j.twice() + 1;
    const double diff = a.alpha() - b.alpha();
    const double n_real = diff / d;
    const double n_round = std::round(n_real);
    if (std::abs(n_real - n_round) < 1e-12) {
        // analytic limit of the kernel at alpha - beta = n (2j+1)
        const long n = static_cast<long>(n_round);
        const bool flip = (n % 2 != 0) && (j.twice() % 2 != 0);
        return flip ? -1.0 : 1.0;
    }
    return std::sin(diff * std::numbers::pi) /
           std::sin(diff * std::numbers::pi / d) / static_cast<double>(d);
}

cplx basis_overlap_direct(HalfInt j, const AlphaLabel& a, const AlphaLabel& b) {
    if (a.j != j || b.j != j) throw std::invalid_argument("basis_overlap_direct: mismatched j");
    const int d = j.twice() + 1;
    cplx sum = 0;
    for (int i = 0; i < d; ++i) {
        const HalfInt m(j.twice() - 2 * i);
        sum += std::conj(overlap_coeff(j, m, a)) * overlap_coeff(j, m, b);
    }
    return sum;
}

double mub_check(HalfInt j, double r) {
    const double target = 1.0 / std::sqrt(double(j.twice() + 1));
    double worst = 0;
    for (int t = 0; t <= j.twice(); ++t) {
        const AlphaLabel a(j, r, t);
        for (int tm = -j.twice(); tm <= j.twice(); tm += 2)
            worst = std::max(worst, std::abs(std::abs(overlap_coeff(j, HalfInt(tm), a)) - target));
    }
    return worst;
}

Eigen::MatrixXcd rot_matrix_r(HalfInt j, const EulerAngles& e, double r) {
    const Eigen::MatrixXcd v = ur_transform(j, r);
    return v.adjoint() * wigner_D(j, e) * v;
}

Eigen::MatrixXcd cyclic_rotation(HalfInt j, double r, int p) {
    const double phi = p * 2.0 * std::numbers::pi / (j.twice() + 1);
    return rot_matrix_r(j, EulerAngles{phi, 0.0, 0.0}, r);
}

Eigen::MatrixXcd cyclic_rotation_expected(HalfInt j, int p) {
    const int d = j.twice() + 1;
    const double wrap_sign = j.is_integer() ? 1.0 : -1.0;  // (-1)^{2j}
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (int t = 0; t < d; ++t) {
        int tp = t - p;
        int wraps = 0;
        while (tp < 0) {
            tp += d;
            ++wraps;
        }
        while (tp >= d) {
            tp -= d;
            --wraps;
        }
        out(tp, t) = (wraps % 2 != 0) ? wrap_sign : 1.0;
    }
    return out;
}

CplxMat rot_matrix_r_mat(HalfInt j, const EulerAngles& e, double r) {
    return CplxMat(alpha_labels(j), alpha_labels(j), rot_matrix_r(j, e, r));
}

CplxMat wigner_D_mat(HalfInt j, const EulerAngles& e) {
    return CplxMat(spin_labels(j), spin_labels(j), wigner_D(j, e));
}

}  // namespace wigner_ur::urbasis
