#include "wigner_ur/su2_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace wigner_ur::su2 {

namespace {

// (a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!  -- all three j's form a triad
mpq_class triangle_coeff(HalfInt a, HalfInt b, HalfInt c) {
    long t1 = (a.twice() + b.twice() - c.twice()) / 2;
    long t2 = (a.twice() - b.twice() + c.twice()) / 2;
    long t3 = (-a.twice() + b.twice() + c.twice()) / 2;
    long t4 = (a.twice() + b.twice() + c.twice()) / 2 + 1;
    return mpq_class(factorial(t1) * factorial(t2) * factorial(t3), factorial(t4));
}

void require_pair(HalfInt j, HalfInt m, const char* where) { require_jm(j, m, where); }

}  // namespace

SqrtRational cg(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, HalfInt j3, HalfInt m3) {
    require_pair(j1, m1, "cg");
    require_pair(j2, m2, "cg");
    require_pair(j3, m3, "cg");
    if (m1 + m2 != m3 || !triangle(j1, j2, j3)) return SqrtRational::zero();

    // all of these are integers for a valid triad + projections
    const long p1 = (j1.twice() + m1.twice()) / 2, q1 = (j1.twice() - m1.twice()) / 2;
    const long p2 = (j2.twice() + m2.twice()) / 2, q2 = (j2.twice() - m2.twice()) / 2;
    const long p3 = (j3.twice() + m3.twice()) / 2, q3 = (j3.twice() - m3.twice()) / 2;
    const long jjj = (j1.twice() + j2.twice() - j3.twice()) / 2;
    const long a = (j3.twice() - j2.twice() + m1.twice()) / 2;
    const long b = (j3.twice() - j1.twice() - m2.twice()) / 2;

    mpq_class common = triangle_coeff(j1, j2, j3);
    common *= mpq_class(j3.twice() + 1);
    common *= factorial(p1) * factorial(q1) * factorial(p2) * factorial(q2) * factorial(p3) *
              factorial(q3);

    const long zmin = std::max({0L, -a, -b});
    const long zmax = std::min({jjj, q1, p2});
    mpq_class sum = 0;
    for (long z = zmin; z <= zmax; ++z) {
        mpq_class term(1, 1);
        term /= factorial(z) * factorial(jjj - z) * factorial(q1 - z) * factorial(p2 - z) *
                factorial(a + z) * factorial(b + z);
        if (z % 2 != 0) term = -term;
        sum += term;
    }
    int s = sgn(sum);
    return SqrtRational::make(s, sum * sum * common);
}

SqrtRational threejm(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    require_pair(j1, m1, "threejm");
    require_pair(j2, m2, "threejm");
    require_pair(j3, m3, "threejm");
    if ((m1 + m2 + m3).twice() != 0 || !triangle(j1, j2, j3)) return SqrtRational::zero();
    SqrtRational c = cg(j1, j2, m1, m2, j3, -m3);
    if (c.is_zero()) return c;
    int phase = neg1pow(j1 - j2 - m3);
    SqrtRational norm = SqrtRational::make(1, mpq_class(1, j3.twice() + 1));
    return (phase > 0 ? c : -c) * norm;
}

SqrtRational sixj(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
    if (!triangle(j1, j2, j3) || !triangle(j1, j5, j6) || !triangle(j4, j2, j6) ||
        !triangle(j4, j5, j3))
        return SqrtRational::zero();

    const long t1 = (j1.twice() + j2.twice() + j3.twice()) / 2;
    const long t2 = (j1.twice() + j5.twice() + j6.twice()) / 2;
    const long t3 = (j4.twice() + j2.twice() + j6.twice()) / 2;
    const long t4 = (j4.twice() + j5.twice() + j3.twice()) / 2;
    const long b1 = (j1.twice() + j2.twice() + j4.twice() + j5.twice()) / 2;
    const long b2 = (j2.twice() + j3.twice() + j5.twice() + j6.twice()) / 2;
    const long b3 = (j3.twice() + j1.twice() + j6.twice() + j4.twice()) / 2;

    mpq_class common = triangle_coeff(j1, j2, j3) * triangle_coeff(j1, j5, j6) *
                       triangle_coeff(j4, j2, j6) * triangle_coeff(j4, j5, j3);

    const long zmin = std::max({t1, t2, t3, t4});
    const long zmax = std::min({b1, b2, b3});
    mpq_class sum = 0;
    for (long z = zmin; z <= zmax; ++z) {
        mpq_class term(factorial(z + 1), 1);
        term /= factorial(z - t1) * factorial(z - t2) * factorial(z - t3) * factorial(z - t4) *
                factorial(b1 - z) * factorial(b2 - z) * factorial(b3 - z);
        if (z % 2 != 0) term = -term;
        sum += term;
    }
    int s = sgn(sum);
    return SqrtRational::make(s, sum * sum * common);
}

SqrtRational ninej(const std::array<HalfInt, 9>& j) {
    const HalfInt j11 = j[0], j12 = j[1], j13 = j[2];
    const HalfInt j21 = j[3], j22 = j[4], j23 = j[5];
    const HalfInt j31 = j[6], j32 = j[7], j33 = j[8];
    if (!triangle(j11, j12, j13) || !triangle(j21, j22, j23) || !triangle(j31, j32, j33) ||
        !triangle(j11, j21, j31) || !triangle(j12, j22, j32) || !triangle(j13, j23, j33))
        return SqrtRational::zero();

    const int txmin = std::max({std::abs(j11.twice() - j33.twice()),
                                std::abs(j21.twice() - j32.twice()),
                                std::abs(j12.twice() - j23.twice())});
    const int txmax = std::min({j11.twice() + j33.twice(), j21.twice() + j32.twice(),
                                j12.twice() + j23.twice()});
    SqrtRational sum = SqrtRational::zero();
    for (int tx = txmin; tx <= txmax; tx += 2) {
        const HalfInt x(tx);
        SqrtRational term = sixj(j11, j21, j31, j32, j33, x) *
                            sixj(j12, j22, j32, j21, x, j23) *
                            sixj(j13, j23, j33, x, j11, j12);
        term = term * SqrtRational::integer(tx + 1);
        if (tx % 2 != 0) term = -term;  // (-1)^{2x}
        sum += term;
    }
    return sum;
}

int metric_m(HalfInt j, HalfInt m, HalfInt mp) {
    require_pair(j, m, "metric_m");
    require_pair(j, mp, "metric_m");
    if (mp != -m) return 0;
    return neg1pow(j + m);
}

double cg_d(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, HalfInt j3, HalfInt m3) {
    return cg(j1, j2, m1, m2, j3, m3).to_double();
}
double threejm_d(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    return threejm(j1, j2, j3, m1, m2, m3).to_double();
}
double sixj_d(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
    return sixj(j1, j2, j3, j4, j5, j6).to_double();
}
double ninej_d(const std::array<HalfInt, 9>& j) { return ninej(j).to_double(); }

}  // namespace wigner_ur::su2
