#include "wigner_ur/cplx_mat.hpp"

#include <stdexcept>

namespace wigner_ur {

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

double identity_error(const Eigen::MatrixXcd& a) {
    return max_abs_diff(a, Eigen::MatrixXcd::Identity(a.rows(), a.cols()));
}

double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a * b - b * a).cwiseAbs().maxCoeff();
}

double CplxMat::max_abs_diff(const CplxMat& o) const { return wigner_ur::max_abs_diff(m, o.m); }

std::vector<std::string> fock_labels(int k) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(k) * k);
    for (int n1 = 0; n1 < k; ++n1)
        for (int n2 = 0; n2 < k; ++n2)
            out.push_back("(" + std::to_string(n1) + "," + std::to_string(n2) + ")");
    return out;
}

std::vector<std::string> spin_labels(HalfInt j) {
    std::vector<std::string> out;
    for (int tm = j.twice(); tm >= -j.twice(); tm -= 2) out.push_back("m=" + HalfInt(tm).str());
    return out;
}

std::vector<std::string> alpha_labels(HalfInt j) {
    std::vector<std::string> out;
    for (int t = 0; t <= j.twice(); ++t) out.push_back("t=" + std::to_string(t));
    return out;
}

}  // namespace wigner_ur
