#include "gencoh/problem.hpp"

#include <fstream>

namespace gencoh {

namespace {

using nlohmann::json;

const json& need(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "." + key, "missing field");
    return *it;
}

std::size_t need_index(const json& j, const std::string& path, std::size_t dim) {
    if (!j.is_number_unsigned()) throw ParseError(path, "expected a positive integer index");
    std::size_t v = j.get<std::size_t>();
    if (v < 1 || v > dim) throw ParseError(path, "index out of range 1.." + std::to_string(dim));
    return v;
}

GaussianRational need_scalar(const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path, "expected a scalar string");
    try {
        return GaussianRational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

std::vector<FormTerm> parse_terms(const json& j, const std::string& path, std::size_t dim,
                                  std::size_t degree) {
    if (!j.is_array()) throw ParseError(path, "expected an array of terms");
    std::vector<FormTerm> out;
    for (std::size_t t = 0; t < j.size(); ++t) {
        std::string tp = path + "[" + std::to_string(t) + "]";
        const json& term = j[t];
        FormTerm ft;
        const json& idx = need(term, "indices", tp);
        if (!idx.is_array()) throw ParseError(tp + ".indices", "expected an array");
        if (degree != 0 && idx.size() != degree)
            throw ParseError(tp + ".indices", "expected " + std::to_string(degree) + " indices");
        std::size_t prev = 0;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            std::size_t v = need_index(idx[k], tp + ".indices[" + std::to_string(k) + "]", dim);
            if (v <= prev) throw ParseError(tp + ".indices", "indices must be strictly increasing");
            prev = v;
            ft.indices.push_back(v);
        }
        ft.coeff = need_scalar(need(term, "coeff", tp), tp + ".coeff");
        out.push_back(std::move(ft));
    }
    return out;
}

json terms_to_json(const std::vector<FormTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms) {
        json jt;
        jt["indices"] = t.indices;
        jt["coeff"] = t.coeff.str();
        out.push_back(jt);
    }
    return out;
}

Form terms_to_form(const std::vector<FormTerm>& terms, std::size_t m) {
    Form f(m);
    for (const auto& t : terms) {
        Mask mask = 0;
        for (std::size_t idx : t.indices) mask |= Mask(1) << (idx - 1);
        f.add(mask, t.coeff);
    }
    return f;
}

}  // namespace

ProblemFile parse_problem(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("$", "problem file must be a JSON object");
    const json& schema = need(j, "schema", "$");
    if (!schema.is_string() || schema.get<std::string>() != kProblemSchema)
        throw ParseError("$.schema", std::string("expected \"") + kProblemSchema + "\"");

    ProblemFile p;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("$.name", "expected a string");
        p.name = j["name"].get<std::string>();
    }

    const json& alg = need(j, "algebra", "$");
    const json& dim = need(alg, "dim", "$.algebra");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
        throw ParseError("$.algebra.dim", "expected a positive integer");
    p.dim = dim.get<std::size_t>();

    if (alg.contains("brackets")) {
        const json& brs = alg["brackets"];
        if (!brs.is_array()) throw ParseError("$.algebra.brackets", "expected an array");
        for (std::size_t b = 0; b < brs.size(); ++b) {
            std::string bp = "$.algebra.brackets[" + std::to_string(b) + "]";
            const json& e = brs[b];
            BracketEntry entry;
            entry.i = need_index(need(e, "i", bp), bp + ".i", p.dim);
            entry.j = need_index(need(e, "j", bp), bp + ".j", p.dim);
            if (entry.i >= entry.j) throw ParseError(bp, "requires i < j");
            const json& out = need(e, "out", bp);
            if (!out.is_array()) throw ParseError(bp + ".out", "expected an array of [k, coeff] pairs");
            for (std::size_t t = 0; t < out.size(); ++t) {
                std::string tp = bp + ".out[" + std::to_string(t) + "]";
                const json& pair = out[t];
                if (!pair.is_array() || pair.size() != 2) throw ParseError(tp, "expected [k, coeff]");
                std::size_t k = need_index(pair[0], tp + "[0]", p.dim);
                GaussianRational c = need_scalar(pair[1], tp + "[1]");
                if (!c.is_real()) throw ParseError(tp + "[1]", "structure constants must be real");
                entry.out.emplace_back(k, c.re());
            }
            p.brackets.push_back(std::move(entry));
        }
    }

    const json& pf = need(j, "pure_form", "$");
    const json& type = need(pf, "type", "$.pure_form");
    if (!type.is_number_unsigned()) throw ParseError("$.pure_form.type", "expected an integer >= 0");
    p.type_k = type.get<std::size_t>();
    if (pf.contains("B")) p.B = parse_terms(pf["B"], "$.pure_form.B", p.dim, 2);
    if (pf.contains("omega")) p.omega = parse_terms(pf["omega"], "$.pure_form.omega", p.dim, 2);
    if (pf.contains("Omega")) {
        const json& om = pf["Omega"];
        if (!om.is_array()) throw ParseError("$.pure_form.Omega", "expected an array of 1-forms");
        for (std::size_t t = 0; t < om.size(); ++t)
            p.omega_factors.push_back(
                parse_terms(om[t], "$.pure_form.Omega[" + std::to_string(t) + "]", p.dim, 1));
    }
    if (p.omega_factors.size() != p.type_k)
        throw ParseError("$.pure_form.Omega",
                         "expected " + std::to_string(p.type_k) + " factors for a type-" +
                             std::to_string(p.type_k) + " form");

    if (j.contains("ideal")) {
        const json& id = j["ideal"];
        IdealSection sec;
        if (id.contains("h_indices")) {
            const json& hs = id["h_indices"];
            if (!hs.is_array()) throw ParseError("$.ideal.h_indices", "expected an array");
            for (std::size_t t = 0; t < hs.size(); ++t)
                sec.h_indices.push_back(
                    need_index(hs[t], "$.ideal.h_indices[" + std::to_string(t) + "]", p.dim));
        } else if (id.contains("vectors")) {
            const json& vs = id["vectors"];
            if (!vs.is_array()) throw ParseError("$.ideal.vectors", "expected an array");
            for (std::size_t t = 0; t < vs.size(); ++t) {
                std::string vp = "$.ideal.vectors[" + std::to_string(t) + "]";
                const json& row = vs[t];
                if (!row.is_array() || row.size() != 2 * p.dim)
                    throw ParseError(vp, "expected " + std::to_string(2 * p.dim) + " scalars");
                Vec v(2 * p.dim);
                for (std::size_t k = 0; k < row.size(); ++k)
                    v[k] = need_scalar(row[k], vp + "[" + std::to_string(k) + "]");
                sec.vectors.push_back(std::move(v));
            }
        } else {
            throw ParseError("$.ideal", "expected h_indices or vectors");
        }
        p.ideal = std::move(sec);
    }

    if (j.contains("deformation")) {
        const json& df = j["deformation"];
        DeformSection sec;
        sec.epsilon = parse_terms(need(df, "epsilon", "$.deformation"), "$.deformation.epsilon",
                                  p.dim, 2);
        if (df.contains("order")) {
            if (!df["order"].is_number_unsigned() || df["order"].get<std::size_t>() == 0)
                throw ParseError("$.deformation.order", "expected a positive integer");
            sec.order = df["order"].get<std::size_t>();
        }
        p.deformation = std::move(sec);
    }
    return p;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("$", "cannot open file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(j);
}

nlohmann::json problem_to_json(const ProblemFile& p) {
    json j;
    j["schema"] = kProblemSchema;
    if (!p.name.empty()) j["name"] = p.name;
    json alg;
    alg["dim"] = p.dim;
    json brs = json::array();
    for (const auto& b : p.brackets) {
        json e;
        e["i"] = b.i;
        e["j"] = b.j;
        json out = json::array();
        for (const auto& [k, c] : b.out) out.push_back({k, rational_str(c)});
        e["out"] = out;
        brs.push_back(e);
    }
    alg["brackets"] = brs;
    j["algebra"] = alg;
    json pf;
    pf["type"] = p.type_k;
    if (!p.B.empty()) pf["B"] = terms_to_json(p.B);
    pf["omega"] = terms_to_json(p.omega);
    json om = json::array();
    for (const auto& th : p.omega_factors) om.push_back(terms_to_json(th));
    pf["Omega"] = om;
    j["pure_form"] = pf;
    if (p.ideal) {
        json id;
        if (!p.ideal->h_indices.empty()) id["h_indices"] = p.ideal->h_indices;
        if (!p.ideal->vectors.empty()) {
            json vs = json::array();
            for (const auto& v : p.ideal->vectors) {
                json row = json::array();
                for (const auto& c : v) row.push_back(c.str());
                vs.push_back(row);
            }
            id["vectors"] = vs;
        }
        j["ideal"] = id;
    }
    if (p.deformation) {
        json df;
        df["epsilon"] = terms_to_json(p.deformation->epsilon);
        df["order"] = p.deformation->order;
        j["deformation"] = df;
    }
    return j;
}

LieAlgebra build_algebra(const ProblemFile& p) {
    LieAlgebra g(p.dim);
    for (const auto& b : p.brackets) {
        std::vector<Rational> coeffs(p.dim, Rational(0));
        for (const auto& [k, c] : b.out) coeffs[k - 1] += c;
        g.set_bracket(b.i - 1, b.j - 1, coeffs);
    }
    return g;
}

PureFormSpec build_spec(const ProblemFile& p) {
    PureFormSpec spec;
    spec.m = p.dim;
    spec.type_k = p.type_k;
    spec.B = terms_to_form(p.B, p.dim);
    spec.omega = terms_to_form(p.omega, p.dim);
    for (const auto& th : p.omega_factors) spec.omega_factors.push_back(terms_to_form(th, p.dim));
    return spec;
}

Subspace build_ideal_S(const ProblemFile& p, const PureFormSpec& spec) {
    if (!p.ideal) throw std::invalid_argument("problem has no ideal section");
    const std::size_t m = p.dim;
    std::vector<Vec> rows;
    if (!p.ideal->vectors.empty()) {
        rows = p.ideal->vectors;
    } else {
        // S = {X - i omega(X)} over the ideal h of g.
        for (std::size_t idx : p.ideal->h_indices) {
            Vec ei(m);
            ei[idx - 1] = GaussianRational(1);
            Form contraction = interior(ei, spec.omega);
            Vec v(2 * m);
            v[idx - 1] = GaussianRational(1);
            for (std::size_t k = 0; k < m; ++k)
                v[m + k] = -GaussianRational::i() * contraction.coeff(Mask(1) << k);
            rows.push_back(std::move(v));
        }
    }
    return Subspace::span(Matrix::from_rows(rows, 2 * m));
}

}  // namespace gencoh
