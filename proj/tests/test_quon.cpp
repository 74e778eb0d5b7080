#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "wigner_ur/quon.hpp"

using namespace wigner_ur;
using namespace wigner_ur::quon;
using Eigen::MatrixXcd;

namespace {
constexpr double tol = 1e-12;
const int kset[] = {2, 3, 4, 5, 7};
}  // namespace

TEST_CASE("q-number special values") {
    CHECK(std::abs(q_number(0, 5)) < 1e-15);
    CHECK(std::abs(q_number(1, 5) - 1.0) < 1e-15);
    CHECK(std::abs(q_number(2, 2)) < 1e-15);  // 1 + e^{i pi} = 0
    for (int k : kset) {
        // [n]_q = 1 + q + ... + q^{n-1}
        cplx geom = 0;
        for (int i = 0; i < 3; ++i) geom += std::polar(1.0, 2.0 * std::numbers::pi * i / k);
        CHECK(std::abs(q_number(3, k) - geom) < 1e-14);
        // [k]_q = 0 at a k-th root of unity
        CHECK(std::abs(q_number(k, k)) < 1e-13);
    }
    CHECK_THROWS_AS(q_number(1, 1), std::invalid_argument);
}

TEST_CASE("fock actions match the defining relations") {
    for (int k : {2, 3, 5}) {
        FockSpace fk(k);
        const auto ops = quon_ops(k);
        // N diagonal with the occupation numbers
        for (int n1 = 0; n1 < k; ++n1)
            for (int n2 = 0; n2 < k; ++n2) {
                const int i = fk.index(n1, n2);
                CHECK(ops.n1(i, i) == cplx(n1, 0));
                CHECK(ops.n2(i, i) == cplx(n2, 0));
            }
        // annihilation at the boundaries
        for (int n2 = 0; n2 < k; ++n2) {
            CHECK(ops.a1m.col(fk.index(0, n2)).cwiseAbs().maxCoeff() == 0.0);
            CHECK(ops.a1p.col(fk.index(k - 1, n2)).cwiseAbs().maxCoeff() == 0.0);
        }
        for (int n1 = 0; n1 < k; ++n1) {
            CHECK(ops.a2m.col(fk.index(n1, 0)).cwiseAbs().maxCoeff() == 0.0);
            CHECK(ops.a2p.col(fk.index(n1, k - 1)).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("quon algebra relations hold as full matrix identities") {
    for (int k : kset) {
        const auto ops = quon_ops(k);
        const MatrixXcd id = MatrixXcd::Identity(k * k, k * k);
        const cplx q = std::polar(1.0, 2.0 * std::numbers::pi / k);
        CHECK(max_abs_diff(ops.a1m * ops.a1p - q * ops.a1p * ops.a1m, id) < tol);
        CHECK(max_abs_diff(ops.a2m * ops.a2p - q * ops.a2p * ops.a2m, id) < tol);
        CHECK(max_abs_diff(ops.n1 * ops.a1p - ops.a1p * ops.n1, ops.a1p) < tol);
        CHECK(max_abs_diff(ops.n2 * ops.a2m - ops.a2m * ops.n2, -ops.a2m) < tol);
        // commuting copies
        for (const auto& x1 : {ops.a1m, ops.a1p, ops.n1})
            for (const auto& x2 : {ops.a2m, ops.a2p, ops.n2})
                CHECK(commutator_norm(x1, x2) < tol);
        // nilpotency of order k
        MatrixXcd pw = id;
        for (int i = 0; i < k; ++i) pw *= ops.a1p;
        CHECK(pw.cwiseAbs().maxCoeff() < tol);
        pw = id;
        for (int i = 0; i < k; ++i) pw *= ops.a2m;
        CHECK(pw.cwiseAbs().maxCoeff() < tol);
    }
}

TEST_CASE("raising operators are not adjoints of lowering ones beyond k=2") {
    const auto ops2 = quon_ops(2);
    CHECK(max_abs_diff(ops2.a1p, ops2.a1m.adjoint()) < tol);  // fermion case
    const auto ops3 = quon_ops(3);
    CHECK(max_abs_diff(ops3.a1p, ops3.a1m.adjoint()) > 0.1);
    // N differs from a+ a- except at k=2
    CHECK(max_abs_diff(ops3.n1, ops3.a1p * ops3.a1m) > 0.1);
}

TEST_CASE("diagonal polar factor") {
    const MatrixXcd h = h_op(3);
    FockSpace f3(3);
    CHECK(std::abs(h(f3.index(0, 1), f3.index(0, 1))) == 0.0);
    CHECK(std::abs(h(f3.index(1, 0), f3.index(1, 0)) - 1.0) < tol);
    CHECK(std::abs(h(f3.index(2, 1), f3.index(2, 1)) - 2.0) < tol);  // sqrt(2*2)
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("cyclic unitary: action, unitarity, constructive definition") {
    for (int k : kset) {
        for (double r : {0.0, 1.0, 0.37}) {
            const MatrixXcd u = u_op(k, r);
            const MatrixXcd id = MatrixXcd::Identity(k * k, k * k);
            CHECK(max_abs_diff(u.adjoint() * u, id) < tol);
            CHECK(max_abs_diff(u, u_op_from_generators(k, r)) < tol);
            MatrixXcd uk = id;
            for (int i = 0; i < k; ++i) uk *= u;
            CHECK(max_abs_diff(uk, std::polar(1.0, phi_r(k, r)) * id) < tol);
        }
    }
    // k=2, r=0: |0,0) -> |1,1) with unit phase
    FockSpace f2(2);
    const MatrixXcd u20 = u_op(2, 0.0);
    CHECK(std::abs(u20(f2.index(1, 1), f2.index(0, 0)) - 1.0) < tol);
}

TEST_CASE("cyclic unitaries with different wrap parameters do not commute") {
    CHECK(commutator_norm(u_op(3, 0.0), u_op(3, 1.0)) > 0.5);
}

TEST_CASE("restriction to the spin subspace matches the dyadic forms") {
    for (int k : {2, 3, 4, 7}) {
        const HalfInt j(k - 1);
        for (double r : {0.0, 0.37}) {
            CHECK(max_abs_diff(restrict_to_spin(h_op(k), j), spin_h(j)) < tol);
            CHECK(max_abs_diff(restrict_to_spin(u_op(k, r), j), spin_u(j, r)) < tol);
        }
    }
}

TEST_CASE("spin-space cyclicity and adjoint wrap phase") {
    const HalfInt j(3);
    const double r = 0.37;
    const MatrixXcd u = spin_u(j, r);
    MatrixXcd upow = MatrixXcd::Identity(4, 4);
    for (int i = 0; i < 4; ++i) upow *= u;
    CHECK(max_abs_diff(upow, std::polar(1.0, phi_r(4, r)) * MatrixXcd::Identity(4, 4)) < tol);
    // adjoint sends |j -j> to e^{-i phi} |j j>
    SpinSpace sp(j);
    const MatrixXcd ud = spin_u_dag(j, r);
    CHECK(std::abs(ud(sp.index_of_tm(3), sp.index_of_tm(-3)) - std::polar(1.0, -phi_r(4, r))) <
          tol);
}

TEST_CASE("su(2) generators: ladder elements, commutators, r-independence") {
    for (int tj = 1; tj <= 20; ++tj) {
        const HalfInt j(tj);
        for (double r : {0.0, 1.0, 0.37}) {
            const auto gen = su2_generators(j, r);
            SpinSpace sp(j);
            const int d = sp.dim();
            for (int i = 0; i < d; ++i) {
                const double m = sp.twice_m(i) / 2.0, jj = j.value();
                if (i > 0)
                    CHECK(std::abs(gen.jp(i - 1, i) - std::sqrt((jj - m) * (jj + m + 1))) < tol);
                if (i + 1 < d)
                    CHECK(std::abs(gen.jm(i + 1, i) - std::sqrt((jj + m) * (jj - m + 1))) < tol);
                CHECK(std::abs(gen.jz(i, i) - m) < tol);
            }
            CHECK(max_abs_diff(gen.jm, gen.jp.adjoint()) < tol);
            CHECK(max_abs_diff(gen.jz * gen.jp - gen.jp * gen.jz, gen.jp) < tol);
            CHECK(max_abs_diff(gen.jp * gen.jm - gen.jm * gen.jp, 2.0 * gen.jz) < tol);
        }
    }
    // j=1/2 explicit ladder in the (m=+1/2, m=-1/2) ordering
    const auto gen = su2_generators(HalfInt(1), 0.37);
    CHECK(std::abs(gen.jp(0, 1) - 1.0) < tol);
    CHECK(std::abs(gen.jp(0, 0)) < tol);
    CHECK(std::abs(gen.jp(1, 0)) < tol);
    CHECK(std::abs(gen.jp(1, 1)) < tol);
    // top of the ladder annihilates
    Eigen::VectorXcd top = Eigen::VectorXcd::Zero(2);
    top(0) = 1.0;
    CHECK((gen.jp * top).cwiseAbs().maxCoeff() < tol);
}

TEST_CASE("casimir forms agree and commute with the cyclic unitary") {
    for (int tj : {1, 2, 3, 5, 8}) {
        const HalfInt j(tj);
        for (double r : {0.0, 1.0, 0.37}) {
            const auto forms = casimir_forms(j, r);
            const MatrixXcd target = j.value() * (j.value() + 1.0) *
                                     MatrixXcd::Identity(tj + 1, tj + 1);
            CHECK(max_abs_diff(forms.via_h, target) < tol);
            CHECK(max_abs_diff(forms.via_shifted_h, target) < tol);
            CHECK(max_abs_diff(forms.via_numbers, target) < tol);
            CHECK(commutator_norm(casimir(j, r), spin_u(j, r)) < tol);
        }
    }
    CHECK(std::abs(casimir(HalfInt(1), 0.0)(0, 0) - 0.75) < tol);
    CHECK(std::abs(casimir(HalfInt(2), 0.0)(0, 0) - 2.0) < tol);
}
