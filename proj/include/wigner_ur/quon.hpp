#pragma once

#include "wigner_ur/cplx_mat.hpp"
#include "wigner_ur/half_int.hpp"

namespace wigner_ur::quon {

/// q-deformed number [x]_q = (1 - q^x)/(1 - q) with q = exp(2 pi i / k).
cplx q_number(double x, int k);

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
cplx q_factorial(int n, int k);

/// Wrap phase phi_r = pi (k-1) r of the cyclic unitary.
double phi_r(int k, double r);

/// Two-mode truncated Fock space F_k, dimension k^2, basis |n1,n2) ordered
/// lexicographically in (n1, n2).
struct FockSpace {
    int k;
    explicit FockSpace(int k_) : k(k_) {
        if (k < 2) throw std::invalid_argument("FockSpace: k must be >= 2");
    }
    int dim() const { return k * k; }
    int index(int n1, int n2) const { return n1 * k + n2; }
};

/// Generators of the two commuting quon algebras in their Fock representation.
struct QuonOps {
    Eigen::MatrixXcd a1m, a1p, a2m, a2p, n1, n2;
};
QuonOps quon_ops(int k);

/// Diagonal Hermitean operator with entries sqrt(n1 (n2+1)).
Eigen::MatrixXcd h_op(int k);

/// Cyclic unitary on F_k: |n1,n2) -> |n1+1,n2-1) with wrap phases
/// exp(i phi_r / 2) per boundary crossing.
Eigen::MatrixXcd u_op(int k, double r);

/// Same operator assembled from the quon generators and q-factorials
/// (bracketed-product definition); kept as an independent construction route.
Eigen::MatrixXcd u_op_from_generators(int k, double r);

/// Spin space eps(j) of dimension 2j+1 embedded in F_k with k = 2j+1 via
/// (n1, n2) = (j+m, j-m). Basis ordered by descending m, so |j j> comes first.
struct SpinSpace {
    HalfInt j;
    explicit SpinSpace(HalfInt j_) : j(j_) {
        if (j.twice() < 0) throw std::invalid_argument("SpinSpace: j must be >= 0");
    }
    int dim() const { return j.twice() + 1; }
    int twice_m(int i) const { return j.twice() - 2 * i; }
    int index_of_tm(int tm) const { return (j.twice() - tm) / 2; }
    /// Index of |j m> inside F_{2j+1} under the lexicographic Fock ordering.
    int fock_index(int i) const { return (j.twice() - i) * (j.twice() + 1) + i; }
};

/// Restriction of an operator on F_{2j+1} to the stable subspace eps(j).
Eigen::MatrixXcd restrict_to_spin(const Eigen::MatrixXcd& fock_op, HalfInt j);

Eigen::MatrixXcd spin_h(HalfInt j);
Eigen::MatrixXcd spin_u(HalfInt j, double r);
Eigen::MatrixXcd spin_u_dag(HalfInt j, double r);
Eigen::MatrixXcd spin_jz(HalfInt j);

/// su(2) ladder operators and J_z on eps(j), obtained from the polar pair
/// (H, U_r): J+ = H U_r, J- = U_r^dag H.
struct Su2Generators {
    Eigen::MatrixXcd jp, jm, jz;
};
Su2Generators su2_generators(HalfInt j, double r);

/// The Casimir J^2 on eps(j) computed along three algebraically distinct
/// routes; all must agree with j(j+1) I.
struct CasimirForms {
    Eigen::MatrixXcd via_h;           // H^2 + Jz^2 - Jz
    Eigen::MatrixXcd via_shifted_h;   // U^dag H^2 U + Jz^2 + Jz
    Eigen::MatrixXcd via_numbers;     // (N1+N2)(N1+N2+2)/4 restricted
};
CasimirForms casimir_forms(HalfInt j, double r);
Eigen::MatrixXcd casimir(HalfInt j, double r);

/// Labeled wrappers for serialization.
CplxMat h_mat(int k);
CplxMat u_mat(int k, double r);
CplxMat spin_op_mat(HalfInt j, const Eigen::MatrixXcd& op);

}  // namespace wigner_ur::quon
