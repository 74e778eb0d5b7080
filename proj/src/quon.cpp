#include "wigner_ur/quon.hpp"

#include <cmath>
#include <numbers>

namespace wigner_ur::quon {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx root_of_unity_pow(int k, double x) {
    // exp(2 pi i x / k)
    return std::polar(1.0, kTwoPi * x / k);
}
}  // namespace

cplx q_number(double x, int k) {
    if (k < 2) throw std::invalid_argument("q_number: k must be >= 2");
    const cplx q = root_of_unity_pow(k, 1.0);
    return (1.0 - root_of_unity_pow(k, x)) / (1.0 - q);
}

cplx q_factorial(int n, int k) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative n");
    cplx f = 1.0;
    for (int i = 1; i <= n; ++i) f *= q_number(i, k);
    return f;
}

double phi_r(int k, double r) { return std::numbers::pi * (k - 1) * r; }

QuonOps quon_ops(int k) {
    FockSpace fk(k);
    const int d = fk.dim();
    QuonOps ops;
    for (auto* p : {&ops.a1m, &ops.a1p, &ops.a2m, &ops.a2p, &ops.n1, &ops.n2})
        *p = Eigen::MatrixXcd::Zero(d, d);
    for (int n1 = 0; n1 < k; ++n1) {
        for (int n2 = 0; n2 < k; ++n2) {
            const int col = fk.index(n1, n2);
            if (n1 + 1 < k) ops.a1p(fk.index(n1 + 1, n2), col) = 1.0;
            if (n1 > 0) ops.a1m(fk.index(n1 - 1, n2), col) = q_number(n1, k);
            if (n2 + 1 < k) ops.a2p(fk.index(n1, n2 + 1), col) = q_number(n2 + 1, k);
            if (n2 > 0) ops.a2m(fk.index(n1, n2 - 1), col) = 1.0;
            ops.n1(col, col) = n1;
            ops.n2(col, col) = n2;
        }
    }
    return ops;
}

Eigen::MatrixXcd h_op(int k) {
    FockSpace fk(k);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(fk.dim(), fk.dim());
    for (int n1 = 0; n1 < k; ++n1)
        for (int n2 = 0; n2 < k; ++n2) {
            const int i = fk.index(n1, n2);
            h(i, i) = std::sqrt(double(n1) * (n2 + 1));
        }
    return h;
}

Eigen::MatrixXcd u_op(int k, double r) {
    FockSpace fk(k);
    const double phi = phi_r(k, r);
    const cplx half_wrap = std::polar(1.0, phi / 2.0);
    const cplx full_wrap = std::polar(1.0, phi);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(fk.dim(), fk.dim());
    for (int n1 = 0; n1 < k; ++n1) {
        for (int n2 = 0; n2 < k; ++n2) {
            const int col = fk.index(n1, n2);
            const bool top1 = (n1 == k - 1), bot2 = (n2 == 0);
            if (!top1 && !bot2) {
                u(fk.index(n1 + 1, n2 - 1), col) = 1.0;
            } else if (top1 && !bot2) {
                u(fk.index(0, n2 - 1), col) = half_wrap;
            } else if (!top1 && bot2) {
                u(fk.index(n1 + 1, k - 1), col) = half_wrap;
            } else {
                u(fk.index(0, k - 1), col) = full_wrap;
            }
        }
    }
    return u;
}

Eigen::MatrixXcd u_op_from_generators(int k, double r) {
    const QuonOps ops = quon_ops(k);
    const cplx qfac = q_factorial(k - 1, k);
    if (std::abs(qfac) < 1e-14)
        throw std::domain_error("u_op_from_generators: vanishing q-factorial");
    const cplx half_wrap = std::polar(1.0, phi_r(k, r) / 2.0);
    const int d = k * k;
    Eigen::MatrixXcd a1m_pow = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd a2p_pow = Eigen::MatrixXcd::Identity(d, d);
    for (int i = 0; i < k - 1; ++i) {
        a1m_pow = a1m_pow * ops.a1m;
        a2p_pow = a2p_pow * ops.a2p;
    }
    Eigen::MatrixXcd left = ops.a1p + (half_wrap / qfac) * a1m_pow;
    Eigen::MatrixXcd right = ops.a2m + (half_wrap / qfac) * a2p_pow;
    return left * right;
}

Eigen::MatrixXcd restrict_to_spin(const Eigen::MatrixXcd& fock_op, HalfInt j) {
    SpinSpace sp(j);
    const int k = sp.dim();
    if (fock_op.rows() != k * k || fock_op.cols() != k * k)
        throw std::invalid_argument("restrict_to_spin: operator is not on F_{2j+1}");
    Eigen::MatrixXcd out(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) out(a, b) = fock_op(sp.fock_index(a), sp.fock_index(b));
    return out;
}

Eigen::MatrixXcd spin_h(HalfInt j) {
    SpinSpace sp(j);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(sp.dim(), sp.dim());
    for (int i = 0; i < sp.dim(); ++i) {
        const int tm = sp.twice_m(i);
        const double jm = (j.twice() + tm) / 2.0;        // j + m
        const double jmp1 = (j.twice() - tm) / 2.0 + 1;  // j - m + 1
        h(i, i) = std::sqrt(jm * jmp1);
    }
    return h;
}

Eigen::MatrixXcd spin_u(HalfInt j, double r) {
    SpinSpace sp(j);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(sp.dim(), sp.dim());
    const cplx wrap = std::polar(1.0, std::numbers::pi * j.twice() * r);
    for (int i = 0; i < sp.dim(); ++i) {
        const int tm = sp.twice_m(i);
        if (tm < j.twice())
            u(sp.index_of_tm(tm + 2), i) = 1.0;
        else
            u(sp.index_of_tm(-j.twice()), i) = wrap;  // |j j> -> e^{i phi_r} |j -j>
    }
    return u;
}

Eigen::MatrixXcd spin_u_dag(HalfInt j, double r) { return spin_u(j, r).adjoint(); }

Eigen::MatrixXcd spin_jz(HalfInt j) {
    SpinSpace sp(j);
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(sp.dim(), sp.dim());
    for (int i = 0; i < sp.dim(); ++i) z(i, i) = sp.twice_m(i) / 2.0;
    return z;
}

Su2Generators su2_generators(HalfInt j, double r) {
    if (j.twice() < 1) throw std::invalid_argument("su2_generators: need j >= 1/2");
    const Eigen::MatrixXcd h = spin_h(j);
    const Eigen::MatrixXcd u = spin_u(j, r);
    return Su2Generators{h * u, u.adjoint() * h, spin_jz(j)};
}

CasimirForms casimir_forms(HalfInt j, double r) {
    SpinSpace sp(j);
    const int d = sp.dim();
    const Eigen::MatrixXcd h = spin_h(j);
    const Eigen::MatrixXcd u = spin_u(j, r);
    const Eigen::MatrixXcd jz = spin_jz(j);
    const Eigen::MatrixXcd h2 = h * h;
    CasimirForms forms;
    forms.via_h = h2 + jz * jz - jz;
    forms.via_shifted_h = u.adjoint() * h2 * u + jz * jz + jz;
    Eigen::MatrixXcd num = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const double n1 = (j.twice() + sp.twice_m(i)) / 2.0;
        const double n2 = (j.twice() - sp.twice_m(i)) / 2.0;
        num(i, i) = 0.25 * (n1 + n2) * (n1 + n2 + 2.0);
    }
    forms.via_numbers = num;
    return forms;
}

Eigen::MatrixXcd casimir(HalfInt j, double r) { return casimir_forms(j, r).via_h; }

CplxMat h_mat(int k) { return CplxMat(fock_labels(k), fock_labels(k), h_op(k)); }
CplxMat u_mat(int k, double r) { return CplxMat(fock_labels(k), fock_labels(k), u_op(k, r)); }
CplxMat spin_op_mat(HalfInt j, const Eigen::MatrixXcd& op) {
    return CplxMat(spin_labels(j), spin_labels(j), op);
}

}  // namespace wigner_ur::quon
