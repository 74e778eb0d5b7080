#include "wigner_ur/wigner_d.hpp"

#include <cmath>

namespace wigner_ur {

namespace {
// extended precision keeps the formula's factorial quotients accurate through
// the intended j <= 10 range (documented accuracy budget ~1e-12)
long double fact(int n) {
    long double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
}  // namespace

double small_d(HalfInt j, HalfInt mp, HalfInt m, double beta) {
    require_jm(j, mp, "small_d");
    require_jm(j, m, "small_d");
    const int jpm = (j.twice() + m.twice()) / 2, jmm = (j.twice() - m.twice()) / 2;
    const int jpmp = (j.twice() + mp.twice()) / 2, jmmp = (j.twice() - mp.twice()) / 2;
    const int dm = (mp.twice() - m.twice()) / 2;  // m' - m
    const long double c = std::cos(static_cast<long double>(beta) / 2);
    const long double s = std::sin(static_cast<long double>(beta) / 2);
    const long double norm = std::sqrt(fact(jpm) * fact(jmm) * fact(jpmp) * fact(jmmp));
    const int kmin = std::max(0, -dm);
    const int kmax = std::min(jpm, jmmp);
    long double sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        const long double den = fact(jpm - k) * fact(k) * fact(jmmp - k) * fact(k + dm);
        const int twojmk = j.twice() - 2 * k;  // 2j - 2k
        long double term = norm / den * std::pow(c, twojmk - dm) * std::pow(s, 2 * k + dm);
        if ((k + dm) % 2 != 0) term = -term;
        sum += term;
    }
    return static_cast<double>(sum);
}

Eigen::MatrixXcd wigner_D(HalfInt j, const EulerAngles& e) {
    const int d = j.twice() + 1;
    Eigen::MatrixXcd D(d, d);
    for (int a = 0; a < d; ++a) {
        const int tmp = j.twice() - 2 * a;
        for (int b = 0; b < d; ++b) {
            const int tm = j.twice() - 2 * b;
            D(a, b) = std::polar(1.0, -0.5 * tmp * e.alpha) *
                      small_d(j, HalfInt(tmp), HalfInt(tm), e.beta) *
                      std::polar(1.0, -0.5 * tm * e.gamma);
        }
    }
    return D;
}

EulerAngles euler_compose(const EulerAngles& e1, const EulerAngles& e2) {
    const Eigen::MatrixXcd u = wigner_D(HalfInt(1), e1) * wigner_D(HalfInt(1), e2);
    // u = [[e^{-i(a+c)/2} cos(b/2), -e^{-i(a-c)/2} sin(b/2)],
    //      [e^{+i(a-c)/2} sin(b/2),  e^{+i(a+c)/2} cos(b/2)]]
    const double b = 2.0 * std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0)));
    double apc, amc;
    if (std::abs(u(0, 0)) > std::abs(u(1, 0))) {
        apc = -2.0 * std::arg(u(0, 0));
        amc = std::abs(u(1, 0)) > 1e-300 ? 2.0 * std::arg(u(1, 0)) : 0.0;
    } else {
        amc = 2.0 * std::arg(u(1, 0));
        apc = std::abs(u(0, 0)) > 1e-300 ? -2.0 * std::arg(u(0, 0)) : 0.0;
    }
    EulerAngles out;
    out.alpha = 0.5 * (apc + amc);
    out.beta = b;
    out.gamma = 0.5 * (apc - amc);
    // the extraction can land on the wrong SU(2) sheet; fix the sign against u
    const Eigen::MatrixXcd check = wigner_D(HalfInt(1), out);
    if ((check + u).cwiseAbs().maxCoeff() < (check - u).cwiseAbs().maxCoeff()) {
        out.alpha += 2.0 * std::numbers::pi;  // shifts D^{(1/2)} by a global -1
    }
    return out;
}

}  // namespace wigner_ur
