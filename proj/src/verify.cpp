#include "wigner_ur/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "wigner_ur/cplx_mat.hpp"
#include "wigner_ur/quon.hpp"
#include "wigner_ur/su2_core.hpp"
#include "wigner_ur/ur_basis.hpp"
#include "wigner_ur/wra.hpp"

namespace wigner_ur::verify {

namespace {

using Eigen::MatrixXcd;

template <class Fn>
std::vector<SuiteReport> run_fragments(std::size_t n, bool parallel, Fn&& fn) {
    std::vector<SuiteReport> frags(n);
    auto guarded = [&](std::size_t i) {
        try {
            frags[i] = fn(i);
        } catch (const std::exception&) {
            frags[i].add("fragment-exception", std::numeric_limits<double>::infinity());
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(n); ++i) guarded(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) guarded(i);
    }
    return frags;
}

SuiteReport merge_all(const std::string& name, std::vector<SuiteReport> frags) {
    SuiteReport out;
    out.suite = name;
    for (const auto& f : frags) out.merge(f);
    return out;
}

std::vector<HalfInt> j_range(HalfInt jmax, HalfInt jmin = HalfInt(0)) {
    std::vector<HalfInt> out;
    for (int tj = jmin.twice(); tj <= jmax.twice(); ++tj) out.push_back(HalfInt(tj));
    return out;
}

// ---------------------------------------------------------------- quon suite

SuiteReport quon_fragment(int k, double r) {
    using namespace quon;
    SuiteReport rep;
    const int d = k * k;
    const MatrixXcd id = MatrixXcd::Identity(d, d);
    const QuonOps ops = quon_ops(k);
    const cplx q = std::polar(1.0, 2.0 * std::numbers::pi / k);

    rep.add("quon-relation",
            std::max(max_abs_diff(ops.a1m * ops.a1p - q * ops.a1p * ops.a1m, id),
                     max_abs_diff(ops.a2m * ops.a2p - q * ops.a2p * ops.a2m, id)),
            2);
    double ncomm = 0;
    ncomm = std::max(ncomm, max_abs_diff(ops.n1 * ops.a1p - ops.a1p * ops.n1, ops.a1p));
    ncomm = std::max(ncomm, max_abs_diff(ops.n1 * ops.a1m - ops.a1m * ops.n1, -ops.a1m));
    ncomm = std::max(ncomm, max_abs_diff(ops.n2 * ops.a2p - ops.a2p * ops.n2, ops.a2p));
    ncomm = std::max(ncomm, max_abs_diff(ops.n2 * ops.a2m - ops.a2m * ops.n2, -ops.a2m));
    rep.add("number-commutator", ncomm, 4);

    double cross = 0;
    const MatrixXcd g1[] = {ops.a1m, ops.a1p, ops.n1};
    const MatrixXcd g2[] = {ops.a2m, ops.a2p, ops.n2};
    for (const auto& x1 : g1)
        for (const auto& x2 : g2) cross = std::max(cross, commutator_norm(x1, x2));
    rep.add("cross-commutativity", cross, 9);

    MatrixXcd p1 = id, p2 = id, m1 = id, m2 = id;
    for (int i = 0; i < k; ++i) {
        p1 *= ops.a1p;
        p2 *= ops.a2p;
        m1 *= ops.a1m;
        m2 *= ops.a2m;
    }
    double nil = 0;
    for (const auto* mp : {&p1, &p2, &m1, &m2})
        nil = std::max(nil, mp->cwiseAbs().maxCoeff());
    rep.add("nilpotency", nil, 4);

    const MatrixXcd h = h_op(k);
    const MatrixXcd u = u_op(k, r);
    rep.add("h-hermitean", (h - h.adjoint()).cwiseAbs().maxCoeff());
    rep.add("u-unitarity", max_abs_diff(u.adjoint() * u, id));
    rep.add("u-constructive", max_abs_diff(u, u_op_from_generators(k, r)));

    MatrixXcd uk = id;
    for (int i = 0; i < k; ++i) uk *= u;
    rep.add("u-cyclicity", max_abs_diff(uk, std::polar(1.0, phi_r(k, r)) * id));

    // restriction to eps(j), j = (k-1)/2, against the dyadic spin-space forms
    const HalfInt j(k - 1);
    rep.add("projector-restriction",
            std::max(max_abs_diff(restrict_to_spin(h, j), spin_h(j)),
                     max_abs_diff(restrict_to_spin(u, j), spin_u(j, r))),
            2);

    // adjoint action on eps(j): shift down with e^{-i phi} wrap on |j -j>
    {
        const MatrixXcd udag = spin_u(j, r).adjoint();
        SpinSpace sp(j);
        MatrixXcd expected = MatrixXcd::Zero(sp.dim(), sp.dim());
        for (int i = 0; i < sp.dim(); ++i) {
            const int tm = sp.twice_m(i);
            if (tm > -j.twice())
                expected(sp.index_of_tm(tm - 2), i) = 1.0;
            else
                expected(sp.index_of_tm(j.twice()), i) = std::polar(1.0, -phi_r(k, r));
        }
        rep.add("u-adjoint-action", max_abs_diff(udag, expected));
    }

    {
        MatrixXcd us = spin_u(j, r);
        MatrixXcd usk = MatrixXcd::Identity(k, k);
        for (int i = 0; i < k; ++i) usk *= us;
        rep.add("u-spin-cyclicity",
                max_abs_diff(usk, std::polar(1.0, phi_r(k, r)) * MatrixXcd::Identity(k, k)));
    }
    return rep;
}

SuiteReport suite_quon(const Options& opts) {
    std::vector<std::pair<int, double>> insts;
    for (int k : opts.ks)
        for (double r : opts.rs) insts.emplace_back(k, r);
    auto frags = run_fragments(insts.size(), opts.parallel, [&](std::size_t i) {
        return quon_fragment(insts[i].first, insts[i].second);
    });
    SuiteReport rep = merge_all("quon", std::move(frags));
    // distinct wrap parameters must give non-commuting cyclic unitaries on F_k
    const double norm = commutator_norm(quon::u_op(3, 0.0), quon::u_op(3, 1.0));
    rep.add("u-r-dependence", norm > 1e-6 ? 0.0 : 1.0);
    return rep;
}

// ----------------------------------------------------------------- su2 suite

SuiteReport su2_fragment(HalfInt j, double r) {
    using namespace quon;
    SuiteReport rep;
    const auto gen = su2_generators(j, r);
    const int d = j.twice() + 1;
    SpinSpace sp(j);

    MatrixXcd jp_ref = MatrixXcd::Zero(d, d), jm_ref = MatrixXcd::Zero(d, d),
              jz_ref = MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const double m = sp.twice_m(i) / 2.0, jj = j.value();
        jz_ref(i, i) = m;
        if (i > 0) jp_ref(i - 1, i) = std::sqrt((jj - m) * (jj + m + 1));
        if (i + 1 < d) jm_ref(i + 1, i) = std::sqrt((jj + m) * (jj - m + 1));
    }
    rep.add("ladder-matrix-elements",
            std::max({max_abs_diff(gen.jp, jp_ref), max_abs_diff(gen.jm, jm_ref),
                      max_abs_diff(gen.jz, jz_ref)}),
            3);
    rep.add("ladder-adjoint", max_abs_diff(gen.jm, gen.jp.adjoint()));
    rep.add("su2-commutators",
            std::max({max_abs_diff(gen.jz * gen.jp - gen.jp * gen.jz, gen.jp),
                      max_abs_diff(gen.jz * gen.jm - gen.jm * gen.jz, -gen.jm),
                      max_abs_diff(gen.jp * gen.jm - gen.jm * gen.jp, 2.0 * gen.jz)}),
            3);

    Eigen::VectorXcd top = Eigen::VectorXcd::Zero(d), bottom = Eigen::VectorXcd::Zero(d);
    top(0) = 1.0;
    bottom(d - 1) = 1.0;
    rep.add("ladder-annihilation",
            std::max((gen.jp * top).cwiseAbs().maxCoeff(),
                     (gen.jm * bottom).cwiseAbs().maxCoeff()),
            2);

    const auto forms = casimir_forms(j, r);
    const MatrixXcd target =
        j.value() * (j.value() + 1.0) * MatrixXcd::Identity(d, d);
    rep.add("casimir-forms",
            std::max({max_abs_diff(forms.via_h, target), max_abs_diff(forms.via_shifted_h, target),
                      max_abs_diff(forms.via_numbers, target)}),
            3);
    rep.add("casimir-defining-form",
            max_abs_diff(0.5 * (gen.jp * gen.jm + gen.jm * gen.jp) + gen.jz * gen.jz, target));
    rep.add("casimir-commutes-cyclic", commutator_norm(forms.via_h, spin_u(j, r)));

    const auto gen0 = su2_generators(j, 0.0);
    rep.add("generator-r-independence",
            std::max(max_abs_diff(gen.jp, gen0.jp), max_abs_diff(gen.jm, gen0.jm)), 2);
    return rep;
}

SuiteReport suite_su2(const Options& opts) {
    std::vector<std::pair<HalfInt, double>> insts;
    for (HalfInt j : j_range(opts.jmax, HalfInt(1)))
        for (double r : opts.rs) insts.emplace_back(j, r);
    return merge_all("su2", run_fragments(insts.size(), opts.parallel, [&](std::size_t i) {
                         return su2_fragment(insts[i].first, insts[i].second);
                     }));
}

// --------------------------------------------------------------- basis suite

SuiteReport basis_fragment(HalfInt j, double r, const Options& opts) {
    using namespace urbasis;
    SuiteReport rep;
    const int d = j.twice() + 1;
    const MatrixXcd v = ur_transform(j, r);
    const MatrixXcd id = MatrixXcd::Identity(d, d);

    rep.add("basis-unitarity", max_abs_diff(v.adjoint() * v, id));
    rep.add("basis-completeness", max_abs_diff(v * v.adjoint(), id));

    if (j.twice() >= 1) {
        const MatrixXcd u = quon::spin_u(j, r);
        double worst = 0;
        for (int t = 0; t < d; ++t) {
            const AlphaLabel a(j, r, t);
            const cplx lambda =
                std::polar(1.0, -2.0 * std::numbers::pi * a.alpha() / d);
            worst = std::max(worst, (u * v.col(t) - lambda * v.col(t)).cwiseAbs().maxCoeff());
        }
        rep.add("eigenvector-property", worst, d);
    }

    {
        double worst = 0;
        for (int i = 0; i < d; ++i) {
            const HalfInt m(j.twice() - 2 * i);
            const Eigen::VectorXcd coeff = inverse_expansion(j, m, r);
            Eigen::VectorXcd rebuilt = Eigen::VectorXcd::Zero(d);
            for (int t = 0; t < d; ++t) rebuilt += coeff(t) * v.col(t);
            Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(d);
            unit(i) = 1.0;
            worst = std::max(worst, (rebuilt - unit).cwiseAbs().maxCoeff());
        }
        rep.add("inverse-roundtrip", worst, d);
    }

    // Dirichlet overlap kernel against explicit inner products, all r pairs
    {
        double worst = 0;
        long n = 0;
        for (double s : opts.rs) {
            for (int t = 0; t < d; ++t)
                for (int u = 0; u < d; ++u) {
                    const AlphaLabel a(j, r, t), b(j, s, u);
                    worst = std::max(worst, std::abs(basis_overlap(j, a, b) -
                                                     basis_overlap_direct(j, a, b)));
                    ++n;
                }
        }
        rep.add("overlap-kernel", worst, n);
    }

    {
        double worst = 0;
        for (int p = 0; p < d; ++p)
            worst = std::max(worst,
                             max_abs_diff(cyclic_rotation(j, r, p), cyclic_rotation_expected(j, p)));
        rep.add("cyclic-action", worst, d);
    }

    // closure of the cyclic action (projectively for half-odd j) and
    // faithfulness of p -> P(p)
    {
        std::vector<MatrixXcd> ps;
        for (int p = 0; p < d; ++p) ps.push_back(cyclic_rotation_expected(j, p));
        double worst = 0;
        for (int p1 = 0; p1 < d; ++p1)
            for (int p2 = 0; p2 < d; ++p2) {
                const MatrixXcd prod = ps[p1] * ps[p2];
                const MatrixXcd& tgt = ps[(p1 + p2) % d];
                if (j.is_integer())
                    worst = std::max(worst, max_abs_diff(prod, tgt));
                else
                    worst = std::max(worst, std::min(max_abs_diff(prod, tgt),
                                                     max_abs_diff(prod, -tgt)));
            }
        rep.add(j.is_integer() ? "cyclic-closure" : "cyclic-closure-projective", worst,
                long(d) * d);
        double faithful = 0;
        for (int p1 = 0; p1 < d; ++p1)
            for (int p2 = p1 + 1; p2 < d; ++p2)
                if (max_abs_diff(ps[p1], ps[p2]) < 0.5) faithful = 1.0;
        rep.add("cyclic-faithful", faithful);
    }

    {
        std::mt19937 rng(opts.seed + static_cast<unsigned>(j.twice()));
        std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
        double worst_group = 0, worst_unit = 0, worst_conj = 0;
        const MatrixXcd met = wra::metric_alpha_table(j, r);
        for (int trial = 0; trial < 4; ++trial) {
            const EulerAngles e1{ang(rng), ang(rng) / 2.0, ang(rng)};
            const EulerAngles e2{ang(rng), ang(rng) / 2.0, ang(rng)};
            const MatrixXcd d1 = rot_matrix_r(j, e1, r), d2 = rot_matrix_r(j, e2, r);
            worst_group = std::max(
                worst_group, max_abs_diff(d1 * d2, rot_matrix_r(j, euler_compose(e1, e2), r)));
            worst_unit = std::max(worst_unit, max_abs_diff(d1.adjoint() * d1, id));
            worst_conj = std::max(
                worst_conj, max_abs_diff(d1.conjugate(), met.conjugate() * d1 * met.transpose()));
        }
        rep.add("rotation-group-property", worst_group, 4);
        rep.add("rotation-unitarity", worst_unit, 4);
        rep.add("rotation-conjugation", worst_conj, 4);
        rep.add("rotation-identity",
                max_abs_diff(rot_matrix_r(j, EulerAngles{}, r), id));

        const double k2sign = j.is_integer() ? 1.0 : -1.0;
        rep.add("time-reversal-squared",
                max_abs_diff(met.conjugate() * met, k2sign * id));
    }
    return rep;
}

SuiteReport suite_basis(const Options& opts) {
    std::vector<std::pair<HalfInt, double>> insts;
    for (HalfInt j : j_range(opts.jmax))
        for (double r : opts.rs) insts.emplace_back(j, r);
    return merge_all("basis", run_fragments(insts.size(), opts.parallel, [&](std::size_t i) {
                         return basis_fragment(insts[i].first, insts[i].second, opts);
                     }));
}

SuiteReport suite_mub(const Options& opts) {
    std::vector<std::pair<HalfInt, double>> insts;
    for (HalfInt j : j_range(opts.jmax))
        for (double r : opts.rs) insts.emplace_back(j, r);
    return merge_all("mub", run_fragments(insts.size(), opts.parallel, [&](std::size_t i) {
                         SuiteReport rep;
                         rep.add("mub-modulus",
                                 urbasis::mub_check(insts[i].first, insts[i].second));
                         return rep;
                     }));
}

// ------------------------------------------------------------- symbols suite

SuiteReport symbols_triple_fragment(HalfInt j1, HalfInt j2, HalfInt j3, double r) {
    using namespace wra;
    SuiteReport rep;
    const int d1 = j1.twice() + 1, d2 = j2.twice() + 1, d3 = j3.twice() + 1;
    const int sum_parity = ((j1 + j2 + j3).twice() / 2) % 2;  // j1+j2+j3 mod 2
    const double eps = neg1pow(j1 + j2 + j3);

    const Tab3 F = fbar_table(j1, j2, j3, r);
    const Tab3 F132 = fbar_table(j1, j3, j2, r);
    const Tab3 F213 = fbar_table(j2, j1, j3, r);
    const Tab3 F231 = fbar_table(j2, j3, j1, r);
    const Tab3 F312 = fbar_table(j3, j1, j2, r);
    const Tab3 F321 = fbar_table(j3, j2, j1, r);
    const MatrixXcd M1 = metric_alpha_table(j1, r), M2 = metric_alpha_table(j2, r),
                    M3 = metric_alpha_table(j3, r);

    double perm = 0, conj_parity = 0, conj_metrics = 0, swap_f = 0, roundtrip = 0,
           conv_a = 0, conv_b = 0;
    for (int t1 = 0; t1 < d1; ++t1)
     for (int t2 = 0; t2 < d2; ++t2)
      for (int t3 = 0; t3 < d3; ++t3) {
          const cplx base = F.at(t1, t2, t3);
          perm = std::max(perm, std::abs(base - F231.at(t2, t3, t1)));
          perm = std::max(perm, std::abs(base - F312.at(t3, t1, t2)));
          perm = std::max(perm, std::abs(base - eps * F132.at(t1, t3, t2)));
          perm = std::max(perm, std::abs(base - eps * F213.at(t2, t1, t3)));
          perm = std::max(perm, std::abs(base - eps * F321.at(t3, t2, t1)));
          conj_parity = std::max(conj_parity, std::abs(std::conj(base) - eps * base));

          cplx conv = 0;
          for (int u1 = 0; u1 < d1; ++u1)
           for (int u2 = 0; u2 < d2; ++u2)
            for (int u3 = 0; u3 < d3; ++u3)
                conv += std::conj(M1(t1, u1) * M2(t2, u2) * M3(t3, u3)) * F.at(u1, u2, u3);
          conj_metrics = std::max(conj_metrics, std::abs(std::conj(base) - conv));

          const cplx f = f_r(j1, j2, j3, t1, t2, t3, r);
          swap_f = std::max(swap_f, std::abs(f - eps * f_r(j1, j3, j2, t1, t3, t2, r)));
          roundtrip =
              std::max(roundtrip, std::abs(f - f_from_fbar(j1, j2, j3, t1, t2, t3, r)));
          conv_a = std::max(conv_a, std::abs(base - fbar_from_f(j1, j2, j3, t1, t2, t3, r)));
          conv_b = std::max(conv_b, std::abs(base - fbar_r(j1, j2, j3, t1, t2, t3, r)));
      }
    const long n = long(d1) * d2 * d3;
    rep.add("fbar-permutation", perm, 5 * n);
    rep.add("fbar-conjugation-parity", conj_parity, n);
    rep.add("fbar-conjugation-metrics", conj_metrics, n);
    rep.add("fr-column-swap", swap_f, n);
    rep.add("f-fbar-roundtrip", roundtrip, n);
    rep.add("fbar-from-f", conv_a, n);
    rep.add("fbar-table-consistency", conv_b, n);

    // odd triads with every label zero vanish at the symmetric wrap parameter
    if (r == 1.0 && j1.is_integer() && j2.is_integer() && j3.is_integer() && sum_parity == 1) {
        rep.add("fbar-odd-zero",
                std::abs(fbar_r(j1, j2, j3, j1.twice() / 2, j2.twice() / 2, j3.twice() / 2, 1.0)));
    }
    return rep;
}

SuiteReport symbols_metric_fragment(HalfInt j, double r) {
    using namespace wra;
    SuiteReport rep;
    const int d = j.twice() + 1;
    const MatrixXcd m = metric_alpha_table(j, r);
    rep.add("metric-unitarity", max_abs_diff(m.adjoint() * m, MatrixXcd::Identity(d, d)));
    rep.add("metric-transpose",
            max_abs_diff(m.transpose(), (j.is_integer() ? 1.0 : -1.0) * m));
    double dev = 0;
    for (int t = 0; t < d; ++t)
        for (int tp = 0; tp < d; ++tp)
            dev = std::max(dev, std::abs(m(t, tp) - std::sqrt(double(d)) *
                                                          fbar_r(j, HalfInt(0), j, t, 0, tp, r)));
    rep.add("metric-from-fbar", dev, long(d) * d);
    return rep;
}

SuiteReport suite_symbols(const Options& opts) {
    struct Inst {
        int kind;  // 0: triple, 1: metric, 2: orthogonality
        HalfInt j1, j2, j3;
        double r;
    };
    std::vector<Inst> insts;
    const auto js = j_range(opts.jmax);
    for (double r : opts.rs) {
        for (HalfInt j1 : js)
            for (HalfInt j2 : js)
                for (HalfInt j3 : js)
                    if (triangle(j1, j2, j3)) insts.push_back({0, j1, j2, j3, r});
        for (HalfInt j : js) insts.push_back({1, j, HalfInt(0), HalfInt(0), r});
        for (HalfInt j1 : js)
            for (HalfInt j2 : js) insts.push_back({2, j1, j2, HalfInt(0), r});
    }
    return merge_all("symbols", run_fragments(insts.size(), opts.parallel, [&](std::size_t i) {
                         const Inst& in = insts[i];
                         if (in.kind == 0)
                             return symbols_triple_fragment(in.j1, in.j2, in.j3, in.r);
                         if (in.kind == 1) return symbols_metric_fragment(in.j1, in.r);
                         SuiteReport rep;
                         const auto dev = wra::fbar_orthogonality(in.j1, in.j2, in.r);
                         rep.add("fbar-orthogonality-j3a3", dev.over_j3_alpha3, dev.cases / 2);
                         rep.add("fbar-orthogonality-a12", dev.over_alpha12, dev.cases / 2);
                         return rep;
                     }));
}

// ---------------------------------------------------------- recoupling suite

SuiteReport suite_recoupling(const Options& opts) {
    struct Inst {
        int kind;  // 0: sixj, 1: ninej
        std::array<HalfInt, 9> j;
        double r;
    };
    std::vector<Inst> insts;
    const auto js = j_range(opts.jmax_recoupling);
    for (double r : opts.rs) {
        for (HalfInt j1 : js)
         for (HalfInt j2 : js)
          for (HalfInt j3 : js) {
              if (!triangle(j1, j2, j3)) continue;
              for (HalfInt j4 : js)
               for (HalfInt j5 : js) {
                   if (!triangle(j4, j5, j3)) continue;
                   for (HalfInt j6 : js) {
                       if (!triangle(j1, j5, j6) || !triangle(j4, j2, j6)) continue;
                       insts.push_back({0, {j1, j2, j3, j4, j5, j6, HalfInt(0), HalfInt(0),
                                            HalfInt(0)}, r});
                   }
               }
          }
        for (HalfInt a : js)
         for (HalfInt b : js)
          for (HalfInt c : js) {
              if (!triangle(a, b, c)) continue;
              for (HalfInt d : js)
               for (HalfInt e : js)
                for (HalfInt f : js) {
                    if (!triangle(d, e, f)) continue;
                    for (HalfInt g : js) {
                        if (!triangle(a, d, g)) continue;
                        for (HalfInt h : js) {
                            if (!triangle(b, e, h)) continue;
                            for (HalfInt i2 : js) {
                                if (!triangle(g, h, i2) || !triangle(c, f, i2)) continue;
                                insts.push_back({1, {a, b, c, d, e, f, g, h, i2}, r});
                            }
                        }
                    }
                }
          }
    }
    return merge_all("recoupling", run_fragments(insts.size(), opts.parallel, [&](std::size_t i) {
                         const Inst& in = insts[i];
                         SuiteReport rep;
                         if (in.kind == 0) {
                             const auto dev = wra::sixj_identity_suite(
                                 {in.j[0], in.j[1], in.j[2], in.j[3], in.j[4], in.j[5]}, in.r);
                             rep.add("6j-0p4-six-metrics", dev.via_six_metrics);
                             rep.add("6j-0p4-three-metrics", dev.via_three_metrics);
                             rep.add("6j-1p3", dev.one_plus_three);
                             rep.add("6j-2p2", dev.two_plus_two);
                             rep.add("6j-3p1", dev.three_plus_one);
                         } else {
                             const auto dev = wra::ninej_identity_suite(in.j, in.r);
                             rep.add("9j-0p6", dev.zero_plus_six);
                             rep.add("9j-1p5", dev.one_plus_five);
                             rep.add("9j-2p4", dev.two_plus_four);
                         }
                         return rep;
                     }));
}

// -------------------------------------------------------------- tensor suite

SuiteReport tensor_fragment(HalfInt j1, HalfInt j2, HalfInt k, double r, const Options& opts) {
    using namespace wra;
    SuiteReport rep;
    const auto probe = probe_reduced_me(j1, j2, k, r);
    rep.add("wigner-eckart-unit-match", probe.worst_match, probe.samples);
    rep.add("wigner-eckart-constancy", probe.spread, probe.samples);

    if (j1 == j2) {
        // rotation covariance of the transformed components
        std::mt19937 rng(opts.seed + static_cast<unsigned>(97 * j1.twice() + k.twice()));
        std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
        const EulerAngles e{ang(rng), ang(rng) / 2.0, ang(rng)};
        const SphericalTensor T = unit_tensor(j1, j2, k);
        const MatrixXcd p = wigner_D(j1, e);
        const MatrixXcd drk = urbasis::rot_matrix_r(k, e, r);
        double worst = 0;
        for (int t = 0; t <= k.twice(); ++t) {
            MatrixXcd lhs = p * tensor_alpha(T, r, t) * p.adjoint();
            MatrixXcd rhs = MatrixXcd::Zero(lhs.rows(), lhs.cols());
            for (int tp = 0; tp <= k.twice(); ++tp)
                rhs += tensor_alpha(T, r, tp) * drk(tp, t);
            worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
        rep.add("tensor-covariance", worst, k.twice() + 1);

        if (k.is_integer()) {
            const SphericalTensor U = unit_tensor(j2, j1, k);
            const MatrixXcd ref = scalar_product_components(T, U);
            rep.add("scalar-product-coupled",
                    max_abs_diff(scalar_product_coupled(T, U, r), ref));
            rep.add("scalar-product-metric",
                    max_abs_diff(scalar_product_metric(T, U, r), ref));
        }
    }

    // the component transform is a unitary map
    {
        const int d = k.twice() + 1;
        MatrixXcd w(d, d);
        for (int i = 0; i < d; ++i) {
            Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(d);
            unit(i) = 1.0;
            w.col(i) = alpha_components(unit, k, r);
        }
        rep.add("tensor-transform-unitary",
                max_abs_diff(w.adjoint() * w, MatrixXcd::Identity(d, d)));
    }
    return rep;
}

SuiteReport suite_tensor(const Options& opts) {
    struct Inst {
        HalfInt j1, j2, k;
        double r;
    };
    std::vector<Inst> insts;
    const auto js = j_range(opts.jmax);
    for (double r : opts.rs)
        for (HalfInt j1 : js)
            for (HalfInt j2 : js)
                for (HalfInt k : js)
                    if (k.twice() >= 1 && triangle(j1, j2, k)) insts.push_back({j1, j2, k, r});
    return merge_all("tensor", run_fragments(insts.size(), opts.parallel, [&](std::size_t i) {
                         return tensor_fragment(insts[i].j1, insts[i].j2, insts[i].k, insts[i].r,
                                                opts);
                     }));
}

// --------------------------------------------------------------- exact suite

struct SixjCache {
    std::map<std::array<int, 6>, SqrtRational> memo;
    const SqrtRational& get(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f) {
        const std::array<int, 6> key{a.twice(), b.twice(), c.twice(),
                                     d.twice(), e.twice(), f.twice()};
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, su2::sixj(a, b, c, d, e, f)).first;
        return it->second;
    }
};

SuiteReport exact_cg_fragment(HalfInt j1, HalfInt j2) {
    SuiteReport rep;
    long n = 0;
    bool ok = true;
    // row orthogonality: sum over (m1, m2) of products of two couplings
    for (int tj = std::abs(j1.twice() - j2.twice()); tj <= j1.twice() + j2.twice(); tj += 2)
     for (int tjp = std::abs(j1.twice() - j2.twice()); tjp <= j1.twice() + j2.twice(); tjp += 2)
      for (int tm = -tj; tm <= tj; tm += 2)
       for (int tmp = -tjp; tmp <= tjp; tmp += 2) {
           SqrtRational sum = SqrtRational::zero();
           for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2) {
               const int tm2 = tm - tm1;
               if (std::abs(tm2) > j2.twice()) continue;
               if (tmp != tm) break;  // fixed m1+m2 can only reach m' = m
               sum += su2::cg(j1, j2, HalfInt(tm1), HalfInt(tm2), HalfInt(tj), HalfInt(tm)) *
                      su2::cg(j1, j2, HalfInt(tm1), HalfInt(tm2), HalfInt(tjp), HalfInt(tmp));
           }
           const SqrtRational target = (tj == tjp && tm == tmp) ? SqrtRational::one()
                                                                : SqrtRational::zero();
           if (!(sum == target)) ok = false;
           ++n;
       }
    rep.add("cg-orthogonality-exact", ok ? 0.0 : 1.0, n);
    return rep;
}

SuiteReport exact_pentagon_fragment(HalfInt p, HalfInt q, HalfInt rr, HalfInt jmax) {
    SuiteReport rep;
    SixjCache cache;
    long n = 0;
    bool ok = true;
    const auto js = j_range(jmax);
    for (HalfInt a : js)
     for (HalfInt d : js) {
         if (!triangle(p, a, d)) continue;
         for (HalfInt e : js) {
             if (!triangle(e, q, d) || !triangle(e, a, rr)) continue;
             for (HalfInt b : js)
              for (HalfInt c : js) {
                  if (!triangle(p, b, c)) continue;
                  for (HalfInt f : js) {
                      if (!triangle(f, q, c) || !triangle(f, b, rr)) continue;
                      SqrtRational lhs = SqrtRational::zero();
                      const int tsum = (a + b + c + d + e + f + p + q + rr).twice();
                      for (int tx = 0; tx <= 2 * jmax.twice(); ++tx) {
                          const HalfInt x(tx);
                          SqrtRational term = cache.get(a, b, x, c, d, p) *
                                              cache.get(c, d, x, e, f, q) *
                                              cache.get(e, f, x, b, a, rr);
                          if (term.is_zero()) continue;
                          term = term * SqrtRational::integer(tx + 1);
                          // (-1)^{a+b+c+d+e+f+p+q+r+x}; the exponent is an
                          // integer whenever the term survives the triads
                          if (neg1pow_twice(tsum + tx) < 0) term = -term;
                          lhs += term;
                      }
                      const SqrtRational rhs = cache.get(p, q, rr, e, a, d) *
                                               cache.get(p, q, rr, f, b, c);
                      if (!(lhs == rhs)) ok = false;
                      ++n;
                  }
              }
         }
     }
    rep.add("sixj-pentagon-exact", ok ? 0.0 : 1.0, n);
    return rep;
}

SuiteReport exact_sixj_orthogonality_fragment(HalfInt a, HalfInt b, HalfInt jmax) {
    SuiteReport rep;
    SixjCache cache;
    long n = 0;
    bool ok = true;
    const auto js = j_range(jmax);
    for (HalfInt c : js)
     for (HalfInt d : js)
      for (HalfInt p : js) {
          if (!triangle(a, d, p) || !triangle(c, b, p)) continue;
          for (HalfInt q : js) {
              if (!triangle(a, d, q) || !triangle(c, b, q)) continue;
              SqrtRational lhs = SqrtRational::zero();
              for (int tx = 0; tx <= 2 * jmax.twice(); ++tx) {
                  const HalfInt x(tx);
                  SqrtRational term =
                      cache.get(a, b, x, c, d, p) * cache.get(a, b, x, c, d, q);
                  if (term.is_zero()) continue;
                  lhs += term * SqrtRational::integer(tx + 1);
              }
              SqrtRational rhs = SqrtRational::zero();
              if (p == q)
                  rhs = SqrtRational::make(1, mpq_class(1, (p.twice() + 1) * (p.twice() + 1)));
              if (!(lhs == rhs)) ok = false;
              ++n;
          }
      }
    rep.add("sixj-orthogonality-exact", ok ? 0.0 : 1.0, n);
    return rep;
}

SuiteReport suite_exact(const Options& opts) {
    const HalfInt jmax_cg = std::min(opts.jmax, HalfInt::from_int(3));
    const HalfInt jmax_6j = std::min(opts.jmax, HalfInt(5));  // 5/2
    struct Inst {
        int kind;
        HalfInt a, b, c;
    };
    std::vector<Inst> insts;
    for (HalfInt j1 : j_range(jmax_cg))
        for (HalfInt j2 : j_range(jmax_cg)) insts.push_back({0, j1, j2, HalfInt(0)});
    for (HalfInt p : j_range(jmax_6j))
        for (HalfInt q : j_range(jmax_6j))
            for (HalfInt rr : j_range(jmax_6j))
                if (triangle(p, q, rr)) insts.push_back({1, p, q, rr});
    for (HalfInt a : j_range(jmax_6j))
        for (HalfInt b : j_range(jmax_6j)) insts.push_back({2, a, b, HalfInt(0)});
    return merge_all("exact", run_fragments(insts.size(), opts.parallel, [&](std::size_t i) {
                         const Inst& in = insts[i];
                         if (in.kind == 0) return exact_cg_fragment(in.a, in.b);
                         if (in.kind == 1)
                             return exact_pentagon_fragment(in.a, in.b, in.c, jmax_6j);
                         return exact_sixj_orthogonality_fragment(in.a, in.b, jmax_6j);
                     }));
}

}  // namespace

void SuiteReport::add(const std::string& tag, double deviation, long n) {
    worst = std::max(worst, deviation);
    cases += n;
    for (auto& id : identities) {
        if (id.tag == tag) {
            id.worst = std::max(id.worst, deviation);
            id.cases += n;
            return;
        }
    }
    identities.push_back(IdentityResult{tag, deviation, n});
}

void SuiteReport::merge(const SuiteReport& other) {
    for (const auto& id : other.identities) add(id.tag, id.worst, id.cases);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "quon", "su2", "basis", "mub", "symbols", "recoupling", "tensor", "exact"};
    return names;
}

SuiteReport run_suite(const std::string& name, const Options& opts) {
    if (name == "all") {
        SuiteReport rep;
        rep.suite = "all";
        for (const auto& n : suite_names()) rep.merge(run_suite(n, opts));
        return rep;
    }
    if (name == "quon") return suite_quon(opts);
    if (name == "su2") return suite_su2(opts);
    if (name == "basis") return suite_basis(opts);
    if (name == "mub") return suite_mub(opts);
    if (name == "symbols") return suite_symbols(opts);
    if (name == "recoupling") return suite_recoupling(opts);
    if (name == "tensor") return suite_tensor(opts);
    if (name == "exact") return suite_exact(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace wigner_ur::verify
