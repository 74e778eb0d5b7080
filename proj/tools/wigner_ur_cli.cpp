// Command-line surface for the {J^2, U_r} Wigner-Racah toolkit: standard and
// transformed coupling coefficients, basis tables, rotation matrices and the
// numerical verification suites.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wigner_ur/quon.hpp"
#include "wigner_ur/serialize.hpp"
#include "wigner_ur/su2_core.hpp"
#include "wigner_ur/ur_basis.hpp"
#include "wigner_ur/verify.hpp"
#include "wigner_ur/wra.hpp"

namespace {

using namespace wigner_ur;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    bool twice = false;
    std::string format = "pretty";
    std::string out;
    double tol = kDefaultTol;
};

HalfInt parse_half(const std::string& s, const GlobalOpts& g) {
    if (g.twice) {
        std::size_t pos = 0;
        const int t = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad twice-value: " + s);
        return HalfInt(t);
    }
    return HalfInt::parse(s);
}

double parse_real(const std::string& s) {
    const std::size_t slash = s.find('/');
    if (slash != std::string::npos)
        return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
    return std::stod(s);
}

std::vector<double> parse_real_list(const std::string& s) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::string tok =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) out.push_back(parse_real(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty list: " + s);
    return out;
}

void emit(const GlobalOpts& g, const std::string& pretty, const json& payload,
          const std::string& csv = "") {
    std::string text;
    if (g.format == "json")
        text = payload.dump(2) + "\n";
    else if (g.format == "csv")
        text = csv.empty() ? pretty : csv;
    else
        text = pretty;
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out);
        if (!f) throw std::runtime_error("cannot open output file " + g.out);
        f << text;
    }
}

json value_payload(const std::string& command, const json& labels, const SqrtRational& v) {
    json out = serialize::to_json(v);
    out["command"] = command;
    out["labels"] = labels;
    return out;
}

json value_payload(const std::string& command, const json& labels, cplx v) {
    json out;
    out["schema"] = serialize::kSchemaVersion;
    out["command"] = command;
    out["labels"] = labels;
    out["value"] = serialize::to_json(v);
    return out;
}

std::string pretty_value(const SqrtRational& v) {
    return v.str() + "\n  = " + serialize::fmt_double(v.to_double()) + "\n";
}

std::string pretty_value(cplx v) {
    return serialize::fmt_double(v.real()) + (v.imag() < 0 ? " - " : " + ") +
           serialize::fmt_double(std::abs(v.imag())) + "i\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wigner-Racah calculus of SU(2) in the {J^2, U_r} quantization scheme"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    if (const char* env = std::getenv("WIGNER_UR_TOL")) g.tol = std::atof(env);
    app.add_flag("--twice", g.twice, "integer arguments are twice-values (2j, 2m)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--out", g.out, "write output to a file instead of stdout");
    app.add_option("--tol", g.tol, "tolerance for verify exit status");

    int exit_code = kExitOk;

    // ---- standard-basis exact symbols -------------------------------------
    std::vector<std::string> args6(6), args9(9);

    auto* cg_cmd = app.add_subcommand("cg", "Clebsch-Gordan coefficient (j1 j2 m1 m2 | j3 m3)");
    cg_cmd->add_option("labels", args6, "j1 j2 m1 m2 j3 m3")->expected(6);
    cg_cmd->callback([&] {
        const HalfInt j1 = parse_half(args6[0], g), j2 = parse_half(args6[1], g);
        const HalfInt m1 = parse_half(args6[2], g), m2 = parse_half(args6[3], g);
        const HalfInt j3 = parse_half(args6[4], g), m3 = parse_half(args6[5], g);
        const SqrtRational v = su2::cg(j1, j2, m1, m2, j3, m3);
        const json labels = {{"j1", j1.str()}, {"j2", j2.str()}, {"m1", m1.str()},
                             {"m2", m2.str()}, {"j3", j3.str()}, {"m3", m3.str()}};
        emit(g, pretty_value(v), value_payload("cg", labels, v));
    });

    auto* three_cmd = app.add_subcommand("threejm", "Wigner 3-jm symbol");
    three_cmd->add_option("labels", args6, "j1 j2 j3 m1 m2 m3")->expected(6);
    three_cmd->callback([&] {
        const HalfInt j1 = parse_half(args6[0], g), j2 = parse_half(args6[1], g);
        const HalfInt j3 = parse_half(args6[2], g), m1 = parse_half(args6[3], g);
        const HalfInt m2 = parse_half(args6[4], g), m3 = parse_half(args6[5], g);
        const SqrtRational v = su2::threejm(j1, j2, j3, m1, m2, m3);
        const json labels = {{"j1", j1.str()}, {"j2", j2.str()}, {"j3", j3.str()},
                             {"m1", m1.str()}, {"m2", m2.str()}, {"m3", m3.str()}};
        emit(g, pretty_value(v), value_payload("threejm", labels, v));
    });

    auto* sixj_cmd = app.add_subcommand("sixj", "Wigner 6-j symbol");
    sixj_cmd->add_option("labels", args6, "j1 j2 j3 j4 j5 j6")->expected(6);
    sixj_cmd->callback([&] {
        std::array<HalfInt, 6> j;
        for (int i = 0; i < 6; ++i) j[i] = parse_half(args6[i], g);
        const SqrtRational v = su2::sixj(j[0], j[1], j[2], j[3], j[4], j[5]);
        json labels;
        for (int i = 0; i < 6; ++i) labels["j" + std::to_string(i + 1)] = j[i].str();
        emit(g, pretty_value(v), value_payload("sixj", labels, v));
    });

    auto* ninej_cmd = app.add_subcommand("ninej", "Wigner 9-j symbol (row-major)");
    ninej_cmd->add_option("labels", args9, "j11 j12 j13 j21 j22 j23 j31 j32 j33")->expected(9);
    ninej_cmd->callback([&] {
        std::array<HalfInt, 9> j;
        for (int i = 0; i < 9; ++i) j[i] = parse_half(args9[i], g);
        const SqrtRational v = su2::ninej(j);
        json labels;
        for (int i = 0; i < 9; ++i)
            labels["j" + std::to_string(i / 3 + 1) + std::to_string(i % 3 + 1)] = j[i].str();
        emit(g, pretty_value(v), value_payload("ninej", labels, v));
    });

    // ---- transformed symbols ----------------------------------------------
    std::string sj1, sj2, sj3, sj, sm, smp;
    int t1 = 0, t2 = 0, t3 = 0, tt = 0, tp = 0, uu = 0;
    std::string sr = "0", ss = "0";

    auto add_symbol_cmd = [&](const char* name, const char* desc, auto compute) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--j1", sj1)->required();
        cmd->add_option("--j2", sj2)->required();
        cmd->add_option("--j3", sj3)->required();
        cmd->add_option("--t1", t1, "label offset, alpha1 = -j1 r + t1")->required();
        cmd->add_option("--t2", t2)->required();
        cmd->add_option("--t3", t3)->required();
        cmd->add_option("--r", sr, "wrap parameter r")->required();
        cmd->callback([&, name, compute] {
            const HalfInt j1 = parse_half(sj1, g), j2 = parse_half(sj2, g),
                          j3 = parse_half(sj3, g);
            const double r = parse_real(sr);
            const cplx v = compute(j1, j2, j3, t1, t2, t3, r);
            const json labels = {{"j1", j1.str()}, {"j2", j2.str()}, {"j3", j3.str()},
                                 {"t1", t1},       {"t2", t2},       {"t3", t3},
                                 {"r", r}};
            emit(g, pretty_value(v), value_payload(name, labels, v));
        });
    };
    add_symbol_cmd("cg-ur", "coupling coefficient (j1 j2 a1 a2 | j3 a3)_r",
                   [](HalfInt j1, HalfInt j2, HalfInt j3, int u1, int u2, int u3, double r) {
                       return wra::cg_ur(j1, j2, j3, u1, u2, u3, r);
                   });
    add_symbol_cmd("fr", "f_r coupling symbol",
                   [](HalfInt j1, HalfInt j2, HalfInt j3, int u1, int u2, int u3, double r) {
                       return wra::f_r(j1, j2, j3, u1, u2, u3, r);
                   });
    add_symbol_cmd("fbar", "fbar_r coupling symbol (3-jm-like symmetry)",
                   [](HalfInt j1, HalfInt j2, HalfInt j3, int u1, int u2, int u3, double r) {
                       return wra::fbar_r(j1, j2, j3, u1, u2, u3, r);
                   });

    // ---- metric ------------------------------------------------------------
    auto* metric_cmd =
        app.add_subcommand("metric", "2-jm metric (j m mp), or 2-jalpha metric with --r");
    std::vector<std::string> metric_pos;
    bool metric_table = false;
    metric_cmd->add_option("labels", metric_pos, "j m mp (standard mode)")->expected(0, 3);
    metric_cmd->add_option("--j", sj);
    metric_cmd->add_option("--r", sr);
    metric_cmd->add_option("--t", tt);
    metric_cmd->add_option("--tp", tp);
    metric_cmd->add_flag("--table", metric_table, "emit the full 2-jalpha matrix");
    metric_cmd->callback([&] {
        if (metric_pos.size() == 3) {
            const HalfInt j = parse_half(metric_pos[0], g), m = parse_half(metric_pos[1], g),
                          mp = parse_half(metric_pos[2], g);
            const int v = su2::metric_m(j, m, mp);
            const SqrtRational sv = SqrtRational::integer(v);
            const json labels = {{"j", j.str()}, {"m", m.str()}, {"mp", mp.str()}};
            emit(g, pretty_value(sv), value_payload("metric", labels, sv));
            return;
        }
        if (sj.empty()) throw CLI::ValidationError("metric", "need j m mp or --j with --r");
        const HalfInt j = parse_half(sj, g);
        const double r = parse_real(sr);
        if (metric_table) {
            CplxMat m(alpha_labels(j), alpha_labels(j), wra::metric_alpha_table(j, r));
            json payload = serialize::to_json(m);
            payload["command"] = "metric";
            payload["r"] = r;
            std::ostringstream pretty;
            pretty << "2-jalpha metric, j=" << j.str() << ", r=" << r << ":\n" << m.m << "\n";
            emit(g, pretty.str(), payload, serialize::matrix_csv(m));
            return;
        }
        const cplx v = wra::metric_alpha(j, tt, tp, r);
        const json labels = {{"j", j.str()}, {"t", tt}, {"tp", tp}, {"r", r}};
        emit(g, pretty_value(v), value_payload("metric", labels, v));
    });

    // ---- basis -------------------------------------------------------------
    auto* basis_cmd = app.add_subcommand("basis", "eigenbasis of the cyclic unitary at (j, r)");
    basis_cmd->add_option("--j", sj)->required();
    basis_cmd->add_option("--r", sr)->required();
    basis_cmd->callback([&] {
        const HalfInt j = parse_half(sj, g);
        const double r = parse_real(sr);
        const auto basis = urbasis::build_basis(j, r);
        json payload = serialize::to_json(basis, r);
        payload["command"] = "basis";
        std::ostringstream pretty;
        pretty << "basis vectors |j alpha; r>, j=" << j.str() << ", r=" << r
               << " (coefficients on m = j..-j):\n";
        for (const auto& v : basis) {
            pretty << "  t=" << v.label.t << "  alpha=" << serialize::fmt_double(v.label.alpha())
                   << "  [";
            for (Eigen::Index i = 0; i < v.coeffs.size(); ++i) {
                if (i) pretty << ", ";
                pretty << serialize::fmt_double(v.coeffs(i).real()) << (v.coeffs(i).imag() < 0 ? "-" : "+")
                       << serialize::fmt_double(std::abs(v.coeffs(i).imag())) << "i";
            }
            pretty << "]\n";
        }
        emit(g, pretty.str(), payload, serialize::basis_csv(basis));
    });

    // ---- overlap -----------------------------------------------------------
    auto* overlap_cmd = app.add_subcommand(
        "overlap", "<j a_t; r | j b_u; s> inter-basis overlap, or <j m|j a_t; r> with --m");
    overlap_cmd->add_option("--j", sj)->required();
    overlap_cmd->add_option("--r", sr)->required();
    overlap_cmd->add_option("--t", tt)->required();
    overlap_cmd->add_option("--s", ss);
    overlap_cmd->add_option("--u", uu);
    overlap_cmd->add_option("--m", sm);
    overlap_cmd->callback([&] {
        const HalfInt j = parse_half(sj, g);
        const double r = parse_real(sr);
        const urbasis::AlphaLabel a(j, r, tt);
        if (!sm.empty()) {
            const HalfInt m = parse_half(sm, g);
            const cplx v = urbasis::overlap_coeff(j, m, a);
            const json labels = {{"j", j.str()}, {"m", m.str()}, {"t", tt}, {"r", r}};
            emit(g, pretty_value(v), value_payload("overlap", labels, v));
            return;
        }
        const double s = parse_real(ss);
        const urbasis::AlphaLabel b(j, s, uu);
        const cplx v = urbasis::basis_overlap(j, a, b);
        const json labels = {{"j", j.str()}, {"t", tt}, {"r", r}, {"u", uu}, {"s", s}};
        emit(g, pretty_value(v), value_payload("overlap", labels, v));
    });

    // ---- rotation matrices ---------------------------------------------------
    auto* dmat_cmd = app.add_subcommand(
        "dmat", "rotation matrix: standard by default, alpha-basis when --r is given");
    std::string euler_str = "0,0,0";
    bool dmat_alpha = false;
    dmat_cmd->add_option("--j", sj)->required();
    dmat_cmd->add_option("--euler", euler_str, "z-y-z Euler angles a,b,c (radians)");
    dmat_cmd->add_option("--r", sr)->each([&](const std::string&) { dmat_alpha = true; });
    dmat_cmd->callback([&] {
        const HalfInt j = parse_half(sj, g);
        const auto angles = parse_real_list(euler_str);
        if (angles.size() != 3) throw CLI::ValidationError("dmat", "--euler needs a,b,c");
        const EulerAngles e{angles[0], angles[1], angles[2]};
        CplxMat m = dmat_alpha ? urbasis::rot_matrix_r_mat(j, e, parse_real(sr))
                               : urbasis::wigner_D_mat(j, e);
        json payload = serialize::to_json(m);
        payload["command"] = "dmat";
        payload["euler"] = angles;
        if (dmat_alpha) payload["r"] = parse_real(sr);
        std::ostringstream pretty;
        pretty << "rotation matrix, j=" << j.str() << ":\n" << m.m << "\n";
        emit(g, pretty.str(), payload, serialize::matrix_csv(m));
    });

    // ---- verify --------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run numerical verification suites");
    std::string suite = "all", rs_str = "0,1,0.37", ks_str = "2,3,4,5,7";
    std::string sjmax = "2", sjmax_rec = "1";
    bool serial = false;
    verify_cmd->add_option("--suite", suite, "suite name or 'all'");
    verify_cmd->add_option("--jmax", sjmax, "largest j for the j-indexed suites");
    verify_cmd->add_option("--jmax-recoupling", sjmax_rec, "largest j for the 6-j/9-j suites");
    verify_cmd->add_option("--r", rs_str, "comma-separated wrap parameters");
    verify_cmd->add_option("--k", ks_str, "comma-separated Fock truncations (quon suite)");
    verify_cmd->add_option("--j", sjmax, "alias of --jmax");
    verify_cmd->add_flag("--serial", serial, "use the serial reference execution path");
    verify_cmd->callback([&] {
        verify::Options opts;
        opts.jmax = parse_half(sjmax, g);
        opts.jmax_recoupling = parse_half(sjmax_rec, g);
        opts.rs = parse_real_list(rs_str);
        opts.ks.clear();
        for (double k : parse_real_list(ks_str)) opts.ks.push_back(static_cast<int>(k));
        opts.parallel = !serial;
        const auto valid = verify::suite_names();
        if (suite != "all" &&
            std::find(valid.begin(), valid.end(), suite) == valid.end())
            throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");
        const auto rep = verify::run_suite(suite, opts);
        std::ostringstream pretty;
        pretty << "suite: " << rep.suite << "\ncases: " << rep.cases
               << "\nworst deviation: " << serialize::fmt_double(rep.worst) << "\n";
        for (const auto& id : rep.identities)
            pretty << "  " << id.tag << ": " << serialize::fmt_double(id.worst) << "  ("
                   << id.cases << " cases)\n";
        pretty << (rep.pass(g.tol) ? "PASS" : "FAIL") << " (tol " << g.tol << ")\n";
        emit(g, pretty.str(), serialize::to_json(rep, g.tol));
        if (!rep.pass(g.tol)) exit_code = kExitVerifyFailed;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
