#include "wigner_ur/serialize.hpp"

#include <charconv>
#include <sstream>

namespace wigner_ur::serialize {

std::string fmt_double(double v) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im] pair");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json to_json(const SqrtRational& v) {
    json out;
    out["schema"] = kSchemaVersion;
    if (v.exact()) out["exact"] = v.str();
    out["value"] = v.to_double();
    return out;
}

SqrtRational sqrt_rational_from_json(const json& j) {
    if (j.contains("exact")) {
        auto parsed = SqrtRational::parse(j["exact"].get<std::string>());
        if (!parsed) throw std::invalid_argument("bad exact value: " + j["exact"].dump());
        return *parsed;
    }
    throw std::invalid_argument("inexact values do not round-trip to SqrtRational");
}

json to_json(const CplxMat& m) {
    json out;
    out["schema"] = kSchemaVersion;
    out["rows"] = m.rows;
    out["cols"] = m.cols;
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.m.cols(); ++k) row.push_back(to_json(m.m(i, k)));
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

CplxMat cplx_mat_from_json(const json& j) {
    CplxMat out;
    out.rows = j["rows"].get<std::vector<std::string>>();
    out.cols = j["cols"].get<std::vector<std::string>>();
    const auto& entries = j["entries"];
    out.m.resize(static_cast<Eigen::Index>(out.rows.size()),
                 static_cast<Eigen::Index>(out.cols.size()));
    for (Eigen::Index i = 0; i < out.m.rows(); ++i)
        for (Eigen::Index k = 0; k < out.m.cols(); ++k)
            out.m(i, k) = complex_from_json(entries[i][k]);
    return out;
}

json to_json(const std::vector<urbasis::BasisVector>& basis, double r) {
    json out;
    out["schema"] = kSchemaVersion;
    out["r"] = r;
    if (!basis.empty()) {
        out["j"] = basis.front().j.str();
        out["ordering"] = "m descending";
    }
    json vecs = json::array();
    for (const auto& v : basis) {
        json entry;
        entry["t"] = v.label.t;
        entry["alpha"] = v.label.alpha();
        json coeffs = json::array();
        for (Eigen::Index i = 0; i < v.coeffs.size(); ++i) coeffs.push_back(to_json(v.coeffs(i)));
        entry["coeffs"] = std::move(coeffs);
        vecs.push_back(std::move(entry));
    }
    out["vectors"] = std::move(vecs);
    return out;
}

std::vector<urbasis::BasisVector> basis_from_json(const json& j) {
    std::vector<urbasis::BasisVector> out;
    const HalfInt jj = HalfInt::parse(j["j"].get<std::string>());
    const double r = j["r"].get<double>();
    for (const auto& entry : j["vectors"]) {
        urbasis::BasisVector v;
        v.j = jj;
        v.label = urbasis::AlphaLabel(jj, r, entry["t"].get<int>());
        const auto& coeffs = entry["coeffs"];
        v.coeffs.resize(static_cast<Eigen::Index>(coeffs.size()));
        for (Eigen::Index i = 0; i < v.coeffs.size(); ++i)
            v.coeffs(i) = complex_from_json(coeffs[i]);
        out.push_back(std::move(v));
    }
    return out;
}

json to_json(const verify::SuiteReport& rep, double tol) {
    json out;
    out["schema"] = kSchemaVersion;
    out["suite"] = rep.suite;
    out["cases"] = rep.cases;
    out["worst_deviation"] = rep.worst;
    out["tol"] = tol;
    out["pass"] = rep.pass(tol);
    json ids = json::array();
    for (const auto& id : rep.identities) {
        json e;
        e["tag"] = id.tag;
        e["worst_deviation"] = id.worst;
        e["cases"] = id.cases;
        ids.push_back(std::move(e));
    }
    out["identities"] = std::move(ids);
    return out;
}

std::string basis_csv(const std::vector<urbasis::BasisVector>& basis) {
    std::ostringstream os;
    os << "j,r,t,alpha,m,re,im\n";
    for (const auto& v : basis) {
        for (Eigen::Index i = 0; i < v.coeffs.size(); ++i) {
            const HalfInt m(v.j.twice() - 2 * static_cast<int>(i));
            os << v.j.str() << ',' << fmt_double(v.label.r) << ',' << v.label.t << ','
               << fmt_double(v.label.alpha()) << ',' << m.str() << ','
               << fmt_double(v.coeffs(i).real()) << ',' << fmt_double(v.coeffs(i).imag()) << '\n';
        }
    }
    return os.str();
}

std::string matrix_csv(const CplxMat& m) {
    std::ostringstream os;
    os << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < m.m.rows(); ++i)
        for (Eigen::Index k = 0; k < m.m.cols(); ++k)
            os << m.rows[static_cast<std::size_t>(i)] << ',' << m.cols[static_cast<std::size_t>(k)]
               << ',' << fmt_double(m.m(i, k).real()) << ',' << fmt_double(m.m(i, k).imag())
               << '\n';
    return os.str();
}

}  // namespace wigner_ur::serialize
