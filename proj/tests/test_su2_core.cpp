#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "wigner_ur/su2_core.hpp"

using namespace wigner_ur;

namespace {
std::vector<HalfInt> range(int tjmax) {
    std::vector<HalfInt> out;
    for (int t = 0; t <= tjmax; ++t) out.emplace_back(t);
    return out;
}
const HalfInt h0(0), h12(1), h1(2), h32(3), h2(4);
}  // namespace

TEST_CASE("cg with a scalar factor is trivial") {
    for (int tj = 0; tj <= 6; ++tj)
        for (int tm = -tj; tm <= tj; tm += 2)
            CHECK(su2::cg(HalfInt(tj), h0, HalfInt(tm), h0, HalfInt(tj), HalfInt(tm)) ==
                  SqrtRational::one());
}

TEST_CASE("singlet coefficient matches the product-space diagonalization oracle") {
    const double oracle = oracles::two_spin_coeff_from_diagonalization(h0);
    CHECK(oracle == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(su2::cg(h12, h12, h12, -h12, h0, h0) == SqrtRational::make(1, mpq_class(1, 2)));
}

TEST_CASE("m-selection rule") {
    CHECK(su2::cg(h12, h12, h12, h12, h0, h0).is_zero());
    CHECK(su2::cg(h1, h1, h1, h1, h1, h0).is_zero());
}

TEST_CASE("input validation rejects parity violations") {
    CHECK_THROWS_AS(su2::cg(h12, h0, h0, h0, h12, h0), std::invalid_argument);
    CHECK_THROWS_AS(su2::threejm(h1, h1, h1, h12, h0, h0), std::invalid_argument);
    CHECK_THROWS_AS(su2::metric_m(h1, h12, -h12), std::invalid_argument);
}

TEST_CASE("3-jm values") {
    // odd permutation parity forces the symmetric zero
    CHECK(su2::threejm(h1, h1, h1, h0, h0, h0).is_zero());
    CHECK(su2::threejm(h0, h0, h0, h0, h0, h0) == SqrtRational::one());
    // frozen from the cg oracle: (-1)^{j1-j2-m3} cg(.., -m3)/sqrt(2j3+1)
    CHECK(su2::threejm(h12, h12, h1, h12, h12, HalfInt(-2)) ==
          SqrtRational::make(-1, mpq_class(1, 3)));
}

TEST_CASE("3-jm column permutation parity is exact") {
    for (HalfInt j1 : range(4))
     for (HalfInt j2 : range(4))
      for (HalfInt j3 : range(4)) {
          if (!triangle(j1, j2, j3)) continue;
          const int eps = neg1pow(j1 + j2 + j3);
          for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2)
           for (int tm2 = -j2.twice(); tm2 <= j2.twice(); tm2 += 2) {
               const int tm3 = -tm1 - tm2;
               if (std::abs(tm3) > j3.twice()) continue;
               const HalfInt m1(tm1), m2(tm2), m3(tm3);
               const auto base = su2::threejm(j1, j2, j3, m1, m2, m3);
               // even: cyclic
               CHECK(base == su2::threejm(j2, j3, j1, m2, m3, m1));
               CHECK(base == su2::threejm(j3, j1, j2, m3, m1, m2));
               // odd: swap with the parity phase
               auto swapped = su2::threejm(j2, j1, j3, m2, m1, m3);
               CHECK(base == (eps > 0 ? swapped : -swapped));
           }
      }
}

TEST_CASE("6-j: zero-argument pattern closed form and oracle") {
    for (HalfInt j : {h12, h1, h32, h2}) {
        const auto v = su2::sixj(h0, j, j, h0, j, j);
        const int sign = neg1pow(j + j);
        CHECK(v == SqrtRational::make(sign, mpq_class(1, (j.twice() + 1) * (j.twice() + 1))));
        CHECK(v == oracles::sixj_from_cg(h0, j, j, h0, j, j));
    }
}

TEST_CASE("6-j: broken triangle yields zero") {
    CHECK(su2::sixj(h12, h12, h2, h12, h12, h1).is_zero());
    CHECK(su2::sixj(h12, h12, h12, h12, h12, h12).is_zero());  // half-odd triad sums
}

TEST_CASE("6-j equals the three-spin recoupling oracle") {
    CHECK(su2::sixj(h12, h12, h1, h12, h12, h1) == SqrtRational::make(1, mpq_class(1, 36)));
    for (HalfInt j1 : range(3))
     for (HalfInt j2 : range(3))
      for (HalfInt j12 : range(4))
       for (HalfInt j3 : range(3))
        for (HalfInt j : range(4))
         for (HalfInt j23 : range(4)) {
             const auto direct = su2::sixj(j1, j2, j12, j3, j, j23);
             const auto oracle = oracles::sixj_from_cg(j1, j2, j12, j3, j, j23);
             CHECK(direct == oracle);
         }
}

TEST_CASE("6-j symmetries: column permutations and row-pair swaps") {
    const std::vector<std::array<HalfInt, 6>> pats = {
        {h12, h12, h1, h12, h12, h1}, {h1, h32, h12, h32, h1, h12}, {h2, h1, h1, h1, h2, h1}};
    for (const auto& p : pats) {
        const auto base = su2::sixj(p[0], p[1], p[2], p[3], p[4], p[5]);
        CHECK(base == su2::sixj(p[1], p[2], p[0], p[4], p[5], p[3]));
        CHECK(base == su2::sixj(p[2], p[0], p[1], p[5], p[3], p[4]));
        CHECK(base == su2::sixj(p[1], p[0], p[2], p[4], p[3], p[5]));
        CHECK(base == su2::sixj(p[3], p[4], p[2], p[0], p[1], p[5]));
        CHECK(base == su2::sixj(p[0], p[4], p[5], p[3], p[1], p[2]));
    }
}

TEST_CASE("9-j equals the quadruple-cg recoupling oracle for all j <= 1") {
    const auto js = range(2);
    long checked = 0;
    for (HalfInt a : js)
     for (HalfInt b : js)
      for (HalfInt c : js) {
          if (!triangle(a, b, c)) continue;
          for (HalfInt d : js)
           for (HalfInt e : js)
            for (HalfInt f : js) {
                if (!triangle(d, e, f)) continue;
                for (HalfInt p : js) {
                    if (!triangle(a, d, p)) continue;
                    for (HalfInt q : js) {
                        if (!triangle(b, e, q)) continue;
                        for (HalfInt t : js) {
                            if (!triangle(p, q, t) || !triangle(c, f, t)) continue;
                            const std::array<HalfInt, 9> arr{a, b, c, d, e, f, p, q, t};
                            CHECK(su2::ninej(arr) == oracles::ninej_from_cg(arr));
                            ++checked;
                        }
                    }
                }
            }
      }
    CHECK(checked > 100);
}

TEST_CASE("9-j: broken column triad yields zero") {
    CHECK(su2::ninej({h1, h1, h1, h1, h1, h1, h2, h2, h2}).is_zero() == false);
    CHECK(su2::ninej({h1, h1, h2, h1, h1, h2, h2, h2, h0}).is_zero() == false);
    // identical first and second rows with odd total spin force zero
    CHECK(su2::ninej({h1, h1, h2, h1, h1, h2, h2, h2, h1}).is_zero());
    CHECK(su2::ninej({h12, h12, h1, h12, h12, h1, h2, h1, h1}).is_zero());
}

TEST_CASE("9-j with a zero entry reduces to a 6-j over a dimension factor") {
    // {a b c; d e c'; g g 0} = delta(c,c') (-1)^{b+c+d+g} / sqrt((2c+1)(2g+1)) {a b c; e d g}
    const std::vector<std::array<HalfInt, 6>> pats = {
        {h1, h1, h1, h1, h1, h1}, {h12, h12, h1, h12, h12, h1}, {h1, h12, h12, h12, h1, h12}};
    for (const auto& p : pats) {
        const HalfInt a = p[0], b = p[1], c = p[2], d = p[3], e = p[4], gg = p[5];
        if (!triangle(a, b, c) || !triangle(d, e, c) || !triangle(a, d, gg) ||
            !triangle(b, e, gg))
            continue;
        const auto lhs = su2::ninej({a, b, c, d, e, c, gg, gg, h0});
        auto rhs = su2::sixj(a, b, c, e, d, gg) /
                   SqrtRational::make(1, mpq_class(c.twice() + 1) * (gg.twice() + 1));
        if (neg1pow(b + c + d + gg) < 0) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("9-j transposition and row-swap symmetries") {
    const std::array<HalfInt, 9> a{h1, h12, h12, h12, h1, h12, h12, h12, h1};
    const std::array<HalfInt, 9> at{a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]};
    CHECK(su2::ninej(a) == su2::ninej(at));
    // swapping two rows multiplies by (-1)^{sum of all nine}
    const std::array<HalfInt, 9> swapped{a[3], a[4], a[5], a[0], a[1], a[2], a[6], a[7], a[8]};
    HalfInt total(0);
    for (const auto& j : a) total = total + j;
    const auto rhs = su2::ninej(swapped);
    CHECK(su2::ninej(a) == (neg1pow(total) > 0 ? rhs : -rhs));
}

TEST_CASE("standard 2-jm metric") {
    // (-1)^{j+m} delta(mp, -m)
    CHECK(su2::metric_m(h12, h12, -h12) == -1);
    CHECK(su2::metric_m(h12, -h12, h12) == 1);
    CHECK(su2::metric_m(h1, h0, h1) == 0);
    CHECK(su2::metric_m(h1, -h1, h1) == 1);
    CHECK(su2::metric_m(h1, h1, -h1) == 1);
}

TEST_CASE("cg orthogonality is exact for all j <= 3") {
    for (HalfInt j1 : range(6)) {
        for (HalfInt j2 : range(6)) {
            for (int tj = std::abs(j1.twice() - j2.twice()); tj <= j1.twice() + j2.twice();
                 tj += 2) {
                for (int tjp = tj; tjp <= j1.twice() + j2.twice(); tjp += 2) {
                    for (int tm = -tj; tm <= tj; tm += 2) {
                        if (std::abs(tm) > tjp) continue;
                        SqrtRational sum = SqrtRational::zero();
                        for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2) {
                            const int tm2 = tm - tm1;
                            if (std::abs(tm2) > j2.twice()) continue;
                            sum += su2::cg(j1, j2, HalfInt(tm1), HalfInt(tm2), HalfInt(tj),
                                           HalfInt(tm)) *
                                   su2::cg(j1, j2, HalfInt(tm1), HalfInt(tm2), HalfInt(tjp),
                                           HalfInt(tm));
                        }
                        CHECK(sum == (tj == tjp ? SqrtRational::one() : SqrtRational::zero()));
                    }
                }
            }
        }
    }
}
