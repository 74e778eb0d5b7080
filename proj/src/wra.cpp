#include "wigner_ur/wra.hpp"

#include <cmath>
#include <numbers>

#include "wigner_ur/quon.hpp"
#include "wigner_ur/su2_core.hpp"

namespace wigner_ur::wra {

namespace {

cplx qpow(HalfInt j, double x) {
    return std::polar(1.0, 2.0 * std::numbers::pi * x / (j.twice() + 1));
}

double alpha_of(HalfInt j, double r, int t) { return -j.value() * r + t; }

void require_offset(HalfInt j, int t, const char* where) {
    if (t < 0 || t > j.twice())
        throw std::invalid_argument(std::string(where) + ": label offset outside 0..2j");
}

}  // namespace

cplx cg_ur(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r) {
    require_offset(j1, t1, "cg_ur");
    require_offset(j2, t2, "cg_ur");
    require_offset(j3, t3, "cg_ur");
    if (!triangle(j1, j2, j3)) return 0.0;
    const double a1 = alpha_of(j1, r, t1), a2 = alpha_of(j2, r, t2), a3 = alpha_of(j3, r, t3);
    cplx sum = 0;
    for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2) {
        for (int tm2 = -j2.twice(); tm2 <= j2.twice(); tm2 += 2) {
            const int tm3 = tm1 + tm2;
            if (std::abs(tm3) > j3.twice()) continue;
            const double c =
                su2::cg_d(j1, j2, HalfInt(tm1), HalfInt(tm2), j3, HalfInt(tm3));
            if (c == 0.0) continue;
            sum += qpow(j1, -a1 * tm1 / 2.0) * qpow(j2, -a2 * tm2 / 2.0) *
                   qpow(j3, a3 * tm3 / 2.0) * c;
        }
    }
    const double norm =
        std::sqrt(double(j1.twice() + 1) * (j2.twice() + 1) * (j3.twice() + 1));
    return sum / norm;
}

cplx cg_ur(const AlphaLabel& a1, const AlphaLabel& a2, const AlphaLabel& a3) {
    if (a1.r != a2.r || a1.r != a3.r)
        throw std::invalid_argument("cg_ur: labels carry different r");
    return cg_ur(a1.j, a2.j, a3.j, a1.t, a2.t, a3.t, a1.r);
}

cplx f_r(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r) {
    const int phase = (j3.twice() % 2 == 0) ? 1 : -1;  // (-1)^{2 j3}
    return double(phase) / std::sqrt(double(j1.twice() + 1)) *
           std::conj(cg_ur(j2, j3, j1, t2, t3, t1, r));
}

cplx fbar_r(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r) {
    require_offset(j1, t1, "fbar_r");
    require_offset(j2, t2, "fbar_r");
    require_offset(j3, t3, "fbar_r");
    if (!triangle(j1, j2, j3)) return 0.0;
    const double a1 = alpha_of(j1, r, t1), a2 = alpha_of(j2, r, t2), a3 = alpha_of(j3, r, t3);
    cplx sum = 0;
    for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2) {
        for (int tm2 = -j2.twice(); tm2 <= j2.twice(); tm2 += 2) {
            const int tm3 = -tm1 - tm2;
            if (std::abs(tm3) > j3.twice()) continue;
            const double w =
                su2::threejm_d(j1, j2, j3, HalfInt(tm1), HalfInt(tm2), HalfInt(tm3));
            if (w == 0.0) continue;
            sum += qpow(j1, -a1 * tm1 / 2.0) * qpow(j2, -a2 * tm2 / 2.0) *
                   qpow(j3, -a3 * tm3 / 2.0) * w;
        }
    }
    const double norm =
        std::sqrt(double(j1.twice() + 1) * (j2.twice() + 1) * (j3.twice() + 1));
    return sum / norm;
}

cplx metric_alpha(HalfInt j, int t, int tp, double r) {
    require_offset(j, t, "metric_alpha");
    require_offset(j, tp, "metric_alpha");
    (void)r;  // alpha' - alpha = tp - t, so the wrap parameter cancels
    cplx sum = 0;
    for (int tm = -j.twice(); tm <= j.twice(); tm += 2)
        sum += double(neg1pow_twice(j.twice() + tm)) * qpow(j, (tp - t) * tm / 2.0);
    return sum / double(j.twice() + 1);
}

Eigen::MatrixXcd metric_alpha_table(HalfInt j, double r) {
    const int d = j.twice() + 1;
    Eigen::MatrixXcd m(d, d);
    for (int t = 0; t < d; ++t)
        for (int tp = 0; tp < d; ++tp) m(t, tp) = metric_alpha(j, t, tp, r);
    return m;
}

Tab3 fbar_table(HalfInt j1, HalfInt j2, HalfInt j3, double r) {
    const int d1 = j1.twice() + 1, d2 = j2.twice() + 1, d3 = j3.twice() + 1;
    Tab3 tab(d1, d2, d3);
    if (!triangle(j1, j2, j3)) return tab;
    // hoist the 3-jm values; they do not depend on the labels
    Eigen::MatrixXd w(d1, d2);
    for (int i1 = 0; i1 < d1; ++i1) {
        const int tm1 = -j1.twice() + 2 * i1;
        for (int i2 = 0; i2 < d2; ++i2) {
            const int tm2 = -j2.twice() + 2 * i2;
            const int tm3 = -tm1 - tm2;
            w(i1, i2) = std::abs(tm3) <= j3.twice()
                            ? su2::threejm_d(j1, j2, j3, HalfInt(tm1), HalfInt(tm2), HalfInt(tm3))
                            : 0.0;
        }
    }
    const double norm = std::sqrt(double(d1) * d2 * d3);
    for (int t1 = 0; t1 < d1; ++t1) {
        const double a1 = alpha_of(j1, r, t1);
        for (int t2 = 0; t2 < d2; ++t2) {
            const double a2 = alpha_of(j2, r, t2);
            for (int t3 = 0; t3 < d3; ++t3) {
                const double a3 = alpha_of(j3, r, t3);
                cplx sum = 0;
                for (int i1 = 0; i1 < d1; ++i1) {
                    const int tm1 = -j1.twice() + 2 * i1;
                    for (int i2 = 0; i2 < d2; ++i2) {
                        const int tm2 = -j2.twice() + 2 * i2;
                        if (w(i1, i2) == 0.0) continue;
                        const int tm3 = -tm1 - tm2;
                        sum += qpow(j1, -a1 * tm1 / 2.0) * qpow(j2, -a2 * tm2 / 2.0) *
                               qpow(j3, -a3 * tm3 / 2.0) * w(i1, i2);
                    }
                }
                tab.at(t1, t2, t3) = sum / norm;
            }
        }
    }
    return tab;
}

cplx fbar_from_f(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r) {
    cplx sum = 0;
    for (int tp3 = 0; tp3 <= j3.twice(); ++tp3)
        sum += metric_alpha(j3, t3, tp3, r) * std::conj(f_r(j3, j2, j1, tp3, t2, t1, r));
    return sum;
}

cplx f_from_fbar(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r) {
    cplx sum = 0;
    for (int tp1 = 0; tp1 <= j1.twice(); ++tp1)
        sum += metric_alpha(j1, tp1, t1, r) * std::conj(fbar_r(j1, j3, j2, tp1, t3, t2, r));
    return sum;
}

OrthogonalityDeviation fbar_orthogonality(HalfInt j1, HalfInt j2, double r) {
    OrthogonalityDeviation dev;
    const int d1 = j1.twice() + 1, d2 = j2.twice() + 1;
    const int tj3min = std::abs(j1.twice() - j2.twice());
    const int tj3max = j1.twice() + j2.twice();
    std::vector<Tab3> tabs;
    std::vector<int> tj3s;
    for (int tj3 = tj3min; tj3 <= tj3max; tj3 += 2) {
        tj3s.push_back(tj3);
        tabs.push_back(fbar_table(j1, j2, HalfInt(tj3), r));
    }
    // sum over (j3, alpha3) against delta(alpha1', alpha1) delta(alpha2', alpha2)
    for (int t1 = 0; t1 < d1; ++t1)
        for (int t2 = 0; t2 < d2; ++t2)
            for (int u1 = 0; u1 < d1; ++u1)
                for (int u2 = 0; u2 < d2; ++u2) {
                    cplx sum = 0;
                    for (std::size_t a = 0; a < tabs.size(); ++a)
                        for (int t3 = 0; t3 <= tj3s[a]; ++t3)
                            sum += double(tj3s[a] + 1) *
                                   std::conj(tabs[a].at(t1, t2, t3)) * tabs[a].at(u1, u2, t3);
                    const double target = (t1 == u1 && t2 == u2) ? 1.0 : 0.0;
                    dev.over_j3_alpha3 = std::max(dev.over_j3_alpha3, std::abs(sum - target));
                    ++dev.cases;
                }
    // sum over (alpha1, alpha2) against the weighted deltas in (j3, alpha3)
    for (std::size_t a = 0; a < tabs.size(); ++a)
        for (std::size_t b = 0; b < tabs.size(); ++b)
            for (int t3 = 0; t3 <= tj3s[a]; ++t3)
                for (int u3 = 0; u3 <= tj3s[b]; ++u3) {
                    cplx sum = 0;
                    for (int t1 = 0; t1 < d1; ++t1)
                        for (int t2 = 0; t2 < d2; ++t2)
                            sum += tabs[a].at(t1, t2, t3) * std::conj(tabs[b].at(t1, t2, u3));
                    const double target =
                        (a == b && t3 == u3) ? 1.0 / (tj3s[a] + 1) : 0.0;
                    dev.over_alpha12 = std::max(dev.over_alpha12, std::abs(sum - target));
                    ++dev.cases;
                }
    return dev;
}

double SixjIdentityDeviations::worst() const {
    return std::max({via_six_metrics, via_three_metrics, one_plus_three, two_plus_two,
                     three_plus_one});
}

SixjIdentityDeviations sixj_identity_suite(const std::array<HalfInt, 6>& j, double r) {
    SixjIdentityDeviations dev;
    const HalfInt j1 = j[0], j2 = j[1], j3 = j[2], j4 = j[3], j5 = j[4], j6 = j[5];
    const bool triads_ok = triangle(j1, j2, j3) && triangle(j1, j5, j6) &&
                           triangle(j4, j2, j6) && triangle(j4, j5, j3);
    const double w_ref = su2::sixj_d(j1, j2, j3, j4, j5, j6);

    const int d1 = j1.twice() + 1, d2 = j2.twice() + 1, d3 = j3.twice() + 1;
    const int d4 = j4.twice() + 1, d5 = j5.twice() + 1, d6 = j6.twice() + 1;
    const Tab3 A = fbar_table(j1, j2, j3, r);
    const Tab3 B = fbar_table(j1, j5, j6, r);
    const Tab3 C = fbar_table(j4, j2, j6, r);
    const Tab3 D = fbar_table(j4, j5, j3, r);
    const Eigen::MatrixXcd M1 = metric_alpha_table(j1, r), M2 = metric_alpha_table(j2, r),
                           M3 = metric_alpha_table(j3, r), M4 = metric_alpha_table(j4, r),
                           M5 = metric_alpha_table(j5, r), M6 = metric_alpha_table(j6, r);

    // full contraction with six metrics
    {
        cplx sum = 0;
        for (int a1 = 0; a1 < d1; ++a1)
         for (int a1p = 0; a1p < d1; ++a1p)
          for (int a2 = 0; a2 < d2; ++a2)
           for (int a2p = 0; a2p < d2; ++a2p)
            for (int a3 = 0; a3 < d3; ++a3)
             for (int a3p = 0; a3p < d3; ++a3p) {
                 const cplx pre =
                     std::conj(M1(a1, a1p) * M2(a2, a2p) * M3(a3, a3p)) * A.at(a1, a2, a3);
                 if (pre == 0.0) continue;
                 for (int a4 = 0; a4 < d4; ++a4)
                  for (int a4p = 0; a4p < d4; ++a4p)
                   for (int a5 = 0; a5 < d5; ++a5)
                    for (int a5p = 0; a5p < d5; ++a5p)
                     for (int a6 = 0; a6 < d6; ++a6)
                      for (int a6p = 0; a6p < d6; ++a6p)
                          sum += pre * std::conj(M4(a4, a4p) * M5(a5, a5p) * M6(a6, a6p)) *
                                 B.at(a1p, a5, a6p) * C.at(a4p, a2p, a6) * D.at(a4, a5p, a3p);
             }
        dev.via_six_metrics = std::abs(sum - w_ref);
    }

    // contraction with three metrics and one conjugated fbar
    {
        cplx sum = 0;
        for (int a1 = 0; a1 < d1; ++a1)
         for (int a2 = 0; a2 < d2; ++a2)
          for (int a3 = 0; a3 < d3; ++a3) {
              const cplx pre = std::conj(A.at(a1, a2, a3));
              if (pre == 0.0) continue;
              for (int a4 = 0; a4 < d4; ++a4)
               for (int a4p = 0; a4p < d4; ++a4p)
                for (int a5 = 0; a5 < d5; ++a5)
                 for (int a5p = 0; a5p < d5; ++a5p)
                  for (int a6 = 0; a6 < d6; ++a6)
                   for (int a6p = 0; a6p < d6; ++a6p)
                       sum += pre * std::conj(M4(a4, a4p) * M5(a5, a5p) * M6(a6, a6p)) *
                              B.at(a1, a5, a6p) * C.at(a4p, a2, a6) * D.at(a4, a5p, a3);
          }
        dev.via_three_metrics = std::abs(sum - w_ref);
    }

    // 1+3: one fbar on the left
    {
        const double delta = triangle(j1, j2, j3) ? 1.0 : 0.0;
        for (int a1 = 0; a1 < d1; ++a1)
         for (int a2 = 0; a2 < d2; ++a2)
          for (int a3 = 0; a3 < d3; ++a3) {
              cplx rhs = 0;
              for (int a4 = 0; a4 < d4; ++a4)
               for (int a4p = 0; a4p < d4; ++a4p)
                for (int a5 = 0; a5 < d5; ++a5)
                 for (int a5p = 0; a5p < d5; ++a5p)
                  for (int a6 = 0; a6 < d6; ++a6)
                   for (int a6p = 0; a6p < d6; ++a6p)
                       rhs += std::conj(M4(a4, a4p) * M5(a5, a5p) * M6(a6, a6p)) *
                              B.at(a1, a5, a6p) * C.at(a4p, a2, a6) * D.at(a4, a5p, a3);
              dev.one_plus_three = std::max(
                  dev.one_plus_three, std::abs(A.at(a1, a2, a3) * w_ref - delta * rhs));
          }
    }

    // 2+2: two fbar's and the 6-j summed over (j3, alpha3) on the left
    {
        const int tj3min = std::max(std::abs(j1.twice() - j2.twice()),
                                    std::abs(j4.twice() - j5.twice()));
        const int tj3max = std::min(j1.twice() + j2.twice(), j4.twice() + j5.twice());
        std::vector<Tab3> As, Ds;
        std::vector<double> Ws;
        std::vector<int> tj3s;
        for (int tj3 = tj3min; tj3 <= tj3max; tj3 += 2) {
            const HalfInt jx(tj3);
            tj3s.push_back(tj3);
            As.push_back(fbar_table(j1, j2, jx, r));
            Ds.push_back(fbar_table(j4, j5, jx, r));
            Ws.push_back(su2::sixj_d(j1, j2, jx, j4, j5, j6));
        }
        for (int a1 = 0; a1 < d1; ++a1)
         for (int a2 = 0; a2 < d2; ++a2)
          for (int a4 = 0; a4 < d4; ++a4)
           for (int a5 = 0; a5 < d5; ++a5) {
               cplx lhs = 0;
               for (std::size_t x = 0; x < tj3s.size(); ++x)
                   for (int a3 = 0; a3 <= tj3s[x]; ++a3)
                       lhs += double(tj3s[x] + 1) * As[x].at(a1, a2, a3) *
                              std::conj(Ds[x].at(a4, a5, a3)) * Ws[x];
               cplx rhs = 0;
               for (int a4p = 0; a4p < d4; ++a4p)
                for (int a5p = 0; a5p < d5; ++a5p)
                 for (int a6 = 0; a6 < d6; ++a6)
                  for (int a6p = 0; a6p < d6; ++a6p)
                      rhs += std::conj(M4(a4, a4p) * M5(a5p, a5) * M6(a6, a6p)) *
                             B.at(a1, a5p, a6p) * C.at(a4p, a2, a6);
               dev.two_plus_two = std::max(dev.two_plus_two, std::abs(lhs - rhs));
           }
    }

    // 3+1: three fbar's and the 6-j inside the sum, unconjugated metrics
    {
        const double delta = triangle(j1, j5, j6) ? 1.0 : 0.0;
        const int tj3min = std::max(std::abs(j1.twice() - j2.twice()),
                                    std::abs(j4.twice() - j5.twice()));
        const int tj3max = std::min(j1.twice() + j2.twice(), j4.twice() + j5.twice());
        std::vector<Tab3> As, Ds;
        std::vector<double> Ws;
        std::vector<int> tj3s;
        for (int tj3 = tj3min; tj3 <= tj3max; tj3 += 2) {
            const HalfInt jx(tj3);
            tj3s.push_back(tj3);
            As.push_back(fbar_table(j1, j2, jx, r));
            Ds.push_back(fbar_table(j4, j5, jx, r));
            Ws.push_back(su2::sixj_d(j1, j2, jx, j4, j5, j6));
        }
        for (int a2 = 0; a2 < d2; ++a2)
         for (int a4 = 0; a4 < d4; ++a4)
          for (int a6 = 0; a6 < d6; ++a6) {
              cplx lhs = 0;
              for (std::size_t x = 0; x < tj3s.size(); ++x)
               for (int a3 = 0; a3 <= tj3s[x]; ++a3)
                for (int a4p = 0; a4p < d4; ++a4p)
                 for (int a5p = 0; a5p < d5; ++a5p)
                  for (int a6p = 0; a6p < d6; ++a6p)
                   for (int a1 = 0; a1 < d1; ++a1)
                    for (int a5 = 0; a5 < d5; ++a5)
                        lhs += double(tj3s[x] + 1) * M4(a4p, a4) * M5(a5, a5p) * M6(a6, a6p) *
                               As[x].at(a1, a2, a3) * std::conj(B.at(a1, a5, a6p)) *
                               std::conj(Ds[x].at(a4p, a5p, a3)) * Ws[x];
              const cplx rhs = delta / double(j6.twice() + 1) * C.at(a4, a2, a6);
              dev.three_plus_one = std::max(dev.three_plus_one, std::abs(lhs - rhs));
          }
    }

    (void)triads_ok;
    return dev;
}

double NinejIdentityDeviations::worst() const {
    return std::max({zero_plus_six, one_plus_five, two_plus_four});
}

NinejIdentityDeviations ninej_identity_suite(const std::array<HalfInt, 9>& j, double r) {
    NinejIdentityDeviations dev;
    const HalfInt j11 = j[0], j12 = j[1], j13 = j[2];
    const HalfInt j21 = j[3], j22 = j[4], j23 = j[5];
    const HalfInt j31 = j[6], j32 = j[7], j33 = j[8];
    const double x_ref = su2::ninej_d(j);

    const Tab3 C1 = fbar_table(j11, j21, j31, r);
    const Tab3 C2 = fbar_table(j12, j22, j32, r);
    const Tab3 C3 = fbar_table(j13, j23, j33, r);
    const Tab3 R1 = fbar_table(j11, j12, j13, r);
    const Tab3 R2 = fbar_table(j21, j22, j23, r);
    const Tab3 R3 = fbar_table(j31, j32, j33, r);
    const int e11 = j11.twice() + 1, e12 = j12.twice() + 1, e13 = j13.twice() + 1;
    const int e21 = j21.twice() + 1, e22 = j22.twice() + 1, e23 = j23.twice() + 1;
    const int e31 = j31.twice() + 1, e32 = j32.twice() + 1, e33 = j33.twice() + 1;

    // full 0+6 contraction: three column symbols against three conjugated rows
    {
        cplx sum = 0;
        for (int t11 = 0; t11 < e11; ++t11)
         for (int t12 = 0; t12 < e12; ++t12)
          for (int t13 = 0; t13 < e13; ++t13) {
              const cplx p1 = std::conj(R1.at(t11, t12, t13));
              if (p1 == 0.0) continue;
              for (int t21 = 0; t21 < e21; ++t21)
               for (int t22 = 0; t22 < e22; ++t22)
                for (int t23 = 0; t23 < e23; ++t23) {
                    const cplx p2 = p1 * std::conj(R2.at(t21, t22, t23));
                    if (p2 == 0.0) continue;
                    for (int t31 = 0; t31 < e31; ++t31)
                     for (int t32 = 0; t32 < e32; ++t32)
                      for (int t33 = 0; t33 < e33; ++t33)
                          sum += p2 * std::conj(R3.at(t31, t32, t33)) * C1.at(t11, t21, t31) *
                                 C2.at(t12, t22, t32) * C3.at(t13, t23, t33);
                }
          }
        dev.zero_plus_six = std::abs(sum - x_ref);
    }

    // 1+5: one row symbol on the left
    {
        const double delta = triangle(j31, j32, j33) ? 1.0 : 0.0;
        for (int t31 = 0; t31 < e31; ++t31)
         for (int t32 = 0; t32 < e32; ++t32)
          for (int t33 = 0; t33 < e33; ++t33) {
              cplx rhs = 0;
              for (int t11 = 0; t11 < e11; ++t11)
               for (int t12 = 0; t12 < e12; ++t12)
                for (int t13 = 0; t13 < e13; ++t13)
                 for (int t21 = 0; t21 < e21; ++t21)
                  for (int t22 = 0; t22 < e22; ++t22)
                   for (int t23 = 0; t23 < e23; ++t23)
                       rhs += C1.at(t11, t21, t31) * C2.at(t12, t22, t32) *
                              C3.at(t13, t23, t33) * std::conj(R1.at(t11, t12, t13)) *
                              std::conj(R2.at(t21, t22, t23));
              dev.one_plus_five = std::max(
                  dev.one_plus_five, std::abs(R3.at(t31, t32, t33) * x_ref - delta * rhs));
          }
    }

    // 2+4: first column and third row summed over (j31, alpha31) on the left
    {
        const int tgmin = std::max(std::abs(j11.twice() - j21.twice()),
                                   std::abs(j32.twice() - j33.twice()));
        const int tgmax = std::min(j11.twice() + j21.twice(), j32.twice() + j33.twice());
        std::vector<Tab3> C1s, R3s;
        std::vector<double> Xs;
        std::vector<int> tgs;
        for (int tg = tgmin; tg <= tgmax; tg += 2) {
            const HalfInt g(tg);
            tgs.push_back(tg);
            C1s.push_back(fbar_table(j11, j21, g, r));
            R3s.push_back(fbar_table(g, j32, j33, r));
            Xs.push_back(su2::ninej_d({j11, j12, j13, j21, j22, j23, g, j32, j33}));
        }
        for (int t11 = 0; t11 < e11; ++t11)
         for (int t21 = 0; t21 < e21; ++t21)
          for (int t32 = 0; t32 < e32; ++t32)
           for (int t33 = 0; t33 < e33; ++t33) {
               cplx lhs = 0;
               for (std::size_t x = 0; x < tgs.size(); ++x)
                   for (int t31 = 0; t31 <= tgs[x]; ++t31)
                       lhs += double(tgs[x] + 1) * std::conj(C1s[x].at(t11, t21, t31)) *
                              R3s[x].at(t31, t32, t33) * Xs[x];
               cplx rhs = 0;
               for (int t12 = 0; t12 < e12; ++t12)
                for (int t13 = 0; t13 < e13; ++t13)
                 for (int t22 = 0; t22 < e22; ++t22)
                  for (int t23 = 0; t23 < e23; ++t23)
                      rhs += C2.at(t12, t22, t32) * C3.at(t13, t23, t33) *
                             std::conj(R1.at(t11, t12, t13)) * std::conj(R2.at(t21, t22, t23));
               dev.two_plus_four = std::max(dev.two_plus_four, std::abs(lhs - rhs));
           }
    }

    return dev;
}

FrSymbol make_f_r(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r) {
    return FrSymbol{{j1, j2, j3}, {t1, t2, t3}, r, f_r(j1, j2, j3, t1, t2, t3, r)};
}

FbarSymbol make_fbar_r(HalfInt j1, HalfInt j2, HalfInt j3, int t1, int t2, int t3, double r) {
    return FbarSymbol{{j1, j2, j3}, {t1, t2, t3}, r, fbar_r(j1, j2, j3, t1, t2, t3, r)};
}

SphericalTensor unit_tensor(HalfInt j1, HalfInt j2, HalfInt k) {
    const int phase = (k.twice() % 2 == 0) ? 1 : -1;  // (-1)^{2k}
    const double norm = std::sqrt(double(j1.twice() + 1));
    SphericalTensor T{k, {}, {}};
    T.comps.reserve(k.twice() + 1);
    for (int tm = k.twice(); tm >= -k.twice(); tm -= 2) {
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(j1.twice() + 1, j2.twice() + 1);
        for (int i1 = 0; i1 <= j1.twice(); ++i1) {
            const int tm1 = j1.twice() - 2 * i1;
            const int tm2 = tm1 - tm;
            if (std::abs(tm2) > j2.twice() || (j2.twice() - tm2) % 2 != 0) continue;
            const int i2 = (j2.twice() - tm2) / 2;
            comp(i1, i2) = phase / norm *
                           su2::cg_d(j2, k, HalfInt(tm2), HalfInt(tm), j1, HalfInt(tm1));
        }
        T.comps.push_back(std::move(comp));
    }
    return T;
}

SphericalTensor vector_tensor(HalfInt j) {
    const auto g = quon::su2_generators(j, 0.0);
    SphericalTensor T{HalfInt::from_int(1), {}, {}};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    T.comps.push_back(-inv_sqrt2 * g.jp);
    T.comps.push_back(g.jz);
    T.comps.push_back(inv_sqrt2 * g.jm);
    return T;
}

Eigen::VectorXcd alpha_components(const Eigen::VectorXcd& m_components, HalfInt k, double r) {
    const int d = k.twice() + 1;
    if (m_components.size() != d)
        throw std::invalid_argument("alpha_components: wrong component count");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d);
    for (int t = 0; t < d; ++t) {
        const double a = alpha_of(k, r, t);
        for (int i = 0; i < d; ++i) {
            const int tm = k.twice() - 2 * i;
            out(t) += qpow(k, a * tm / 2.0) * m_components(i);
        }
        out(t) /= std::sqrt(double(d));
    }
    return out;
}

Eigen::MatrixXcd tensor_alpha(const SphericalTensor& tensor, double r, int t) {
    require_offset(tensor.k, t, "tensor_alpha");
    const double a = alpha_of(tensor.k, r, t);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(tensor.comps[0].rows(), tensor.comps[0].cols());
    for (int tm = tensor.k.twice(); tm >= -tensor.k.twice(); tm -= 2)
        out += qpow(tensor.k, a * tm / 2.0) * tensor.comp_tm(tm);
    return out / std::sqrt(double(tensor.k.twice() + 1));
}

Eigen::MatrixXcd tensor_product_ur(const SphericalTensor& T, const SphericalTensor& U, HalfInt k,
                                   int t, double r) {
    if (T.comps[0].cols() != U.comps[0].rows())
        throw std::invalid_argument("tensor_product_ur: carrier dimensions do not chain");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(T.comps[0].rows(), U.comps[0].cols());
    for (int t1 = 0; t1 <= T.k.twice(); ++t1) {
        const Eigen::MatrixXcd Ta = tensor_alpha(T, r, t1);
        for (int t2 = 0; t2 <= U.k.twice(); ++t2) {
            const cplx c = cg_ur(T.k, U.k, k, t1, t2, t, r);
            if (std::abs(c) < 1e-16) continue;
            out += c * Ta * tensor_alpha(U, r, t2);
        }
    }
    return out;
}

Eigen::MatrixXcd scalar_product_components(const SphericalTensor& T, const SphericalTensor& U) {
    if (T.k != U.k) throw std::invalid_argument("scalar_product: rank mismatch");
    if (!T.k.is_integer())
        throw std::invalid_argument("scalar_product: rank must be an integer");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(T.comps[0].rows(), U.comps[0].cols());
    for (int tm = T.k.twice(); tm >= -T.k.twice(); tm -= 2)
        out += double(neg1pow_twice(tm)) * T.comp_tm(tm) * U.comp_tm(-tm);
    return out;
}

Eigen::MatrixXcd scalar_product_coupled(const SphericalTensor& T, const SphericalTensor& U,
                                        double r) {
    if (T.k != U.k) throw std::invalid_argument("scalar_product: rank mismatch");
    const cplx phase = std::polar(1.0, std::numbers::pi * T.k.value());  // (-1)^k
    return phase * std::sqrt(double(T.k.twice() + 1)) *
           tensor_product_ur(T, U, HalfInt(0), 0, r);
}

Eigen::MatrixXcd scalar_product_metric(const SphericalTensor& T, const SphericalTensor& U,
                                       double r) {
    if (T.k != U.k) throw std::invalid_argument("scalar_product: rank mismatch");
    const cplx phase = std::polar(1.0, -std::numbers::pi * T.k.value());  // (-1)^{-k}
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(T.comps[0].rows(), U.comps[0].cols());
    std::vector<Eigen::MatrixXcd> Ua;
    for (int tp = 0; tp <= U.k.twice(); ++tp) Ua.push_back(tensor_alpha(U, r, tp));
    for (int t = 0; t <= T.k.twice(); ++t) {
        const Eigen::MatrixXcd Ta = tensor_alpha(T, r, t);
        for (int tp = 0; tp <= U.k.twice(); ++tp)
            out += metric_alpha(T.k, t, tp, r) * Ta * Ua[tp];
    }
    return phase * out;
}

cplx wigner_eckart_ur(HalfInt j1, int t1, HalfInt j2, int t2, HalfInt k, int t, double r,
                      cplx reduced_me) {
    return reduced_me * f_r(j1, j2, k, t1, t2, t, r);
}

ReducedMeProbe probe_reduced_me(HalfInt j1, HalfInt j2, HalfInt k, double r) {
    ReducedMeProbe probe;
    const SphericalTensor T = unit_tensor(j1, j2, k);
    const Eigen::MatrixXcd v1 = urbasis::ur_transform(j1, r);
    const Eigen::MatrixXcd v2 = urbasis::ur_transform(j2, r);
    std::vector<std::pair<cplx, cplx>> elems;  // (lhs, f_r)
    double fmax = 0;
    for (int t = 0; t <= k.twice(); ++t) {
        const Eigen::MatrixXcd lhs = v1.adjoint() * tensor_alpha(T, r, t) * v2;
        for (int t1 = 0; t1 <= j1.twice(); ++t1) {
            for (int t2 = 0; t2 <= j2.twice(); ++t2) {
                const cplx fr = f_r(j1, j2, k, t1, t2, t, r);
                probe.worst_match = std::max(probe.worst_match, std::abs(lhs(t1, t2) - fr));
                ++probe.samples;
                fmax = std::max(fmax, std::abs(fr));
                elems.emplace_back(lhs(t1, t2), fr);
            }
        }
    }
    // ratio extraction is ill-conditioned where f_r is an incidental numerical
    // zero; the absolute worst_match above still covers every label
    std::vector<cplx> ratios;
    for (const auto& [lhs, fr] : elems)
        if (std::abs(fr) > 1e-3 * fmax) ratios.push_back(lhs / fr);
    if (!ratios.empty()) {
        cplx mean = 0;
        for (const cplx& x : ratios) mean += x;
        mean /= double(ratios.size());
        probe.reduced_mean = mean;
        for (const cplx& x : ratios) probe.spread = std::max(probe.spread, std::abs(x - mean));
    }
    return probe;
}

}  // namespace wigner_ur::wra
