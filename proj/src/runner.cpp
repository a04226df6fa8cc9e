#include "gencoh/runner.hpp"

#include "gencoh/cohomology.hpp"
#include "gencoh/deform.hpp"

#include <sstream>

namespace gencoh {

namespace {

using nlohmann::json;

json error_json(const ValidationError& e) {
    json out;
    out["kind"] = ValidationError::kind_name(e.kind);
    out["message"] = e.message;
    out["witness"] = e.witness;
    if (e.kind == ValidationError::Kind::NilcalViolation)
        out["integrability_solvable"] = e.integrability_solvable;
    return out;
}

json structure_summary(const GCStructure& s) {
    json out;
    out["valid"] = true;
    out["n"] = s.n();
    out["type"] = s.type_k();
    out["nilpotent"] = s.nilpotent();
    if (s.nilpotent()) out["nilpotency_step"] = s.nilpotency_step();
    out["d_rho_zero"] = s.d_rho_zero();
    out["rho"] = s.rho().str();
    json lb = json::array();
    for (const auto& v : s.L_basis()) lb.push_back(v.str());
    out["L_basis"] = lb;
    out["u_dims"] = s.U_dims();
    out["rational_structure_constants"] = true;
    return out;
}

json gh_table_json(const GCStructure& s, Theory t) {
    GHTable table = gh_table(s, t);
    json out;
    out["theory"] = theory_name(t);
    json entries = json::array();
    for (const auto& e : table.entries) {
        json je;
        je["degree"] = e.degree;
        je["dim"] = e.dim;
        json reps = json::array();
        json coords = json::array();
        for (std::size_t r = 0; r < e.reps.size(); ++r) {
            reps.push_back(e.reps[r].str());
            json cv = json::array();
            for (const auto& c : e.rep_coords[r]) cv.push_back(c.str());
            coords.push_back(cv);
        }
        je["representatives"] = reps;
        je["u_coords"] = coords;
        entries.push_back(je);
    }
    out["entries"] = entries;
    out["dims"] = table.dims();
    return out;
}

json derham_table_json(const LieAlgebra& g) {
    json out;
    out["theory"] = "derham";
    json entries = json::array();
    std::vector<std::size_t> dims;
    for (const auto& e : derham_cohomology(g)) {
        json je;
        je["degree"] = e.degree;
        je["dim"] = e.dim;
        json reps = json::array();
        for (const auto& f : e.representatives) reps.push_back(f.str());
        je["representatives"] = reps;
        entries.push_back(je);
        dims.push_back(e.dim);
    }
    out["entries"] = entries;
    out["dims"] = dims;
    return out;
}

json algebroid_table_json(const AlgebroidFrame& frame) {
    json out;
    out["theory"] = "algebroid";
    AlgebroidCohomology coh = algebroid_cohomology(frame);
    json entries = json::array();
    for (std::size_t k = 0; k < coh.dims.size(); ++k) {
        json je;
        je["degree"] = k;
        je["dim"] = coh.dims[k];
        json reps = json::array();
        for (const auto& f : coh.reps[k]) reps.push_back(f.str());
        je["representatives"] = reps;
        entries.push_back(je);
    }
    out["entries"] = entries;
    out["dims"] = coh.dims;
    return out;
}

json dolbeault_table_json(const LieAlgebra& g, const PureFormSpec& spec) {
    json out;
    out["theory"] = "dolbeault";
    DolbeaultTable t = dolbeault_bigraded(g, spec);
    out["h"] = t.h;
    out["diagonal_sums"] = t.diagonal_sums();
    return out;
}

json cohomology_json(const GCStructure& s, const PureFormSpec& spec,
                     const std::vector<std::string>& theories) {
    json out;
    json tables = json::array();
    json notes = json::array();
    for (const auto& name : theories) {
        if (name == "delbar")
            tables.push_back(gh_table_json(s, Theory::Delbar));
        else if (name == "del")
            tables.push_back(gh_table_json(s, Theory::Del));
        else if (name == "bc")
            tables.push_back(gh_table_json(s, Theory::BottChern));
        else if (name == "aeppli")
            tables.push_back(gh_table_json(s, Theory::Aeppli));
        else if (name == "derham")
            tables.push_back(derham_table_json(s.algebra()));
        else if (name == "algebroid")
            tables.push_back(algebroid_table_json(dual_frame(s)));
        else if (name == "dolbeault")
            tables.push_back(dolbeault_table_json(s.algebra(), spec));
        else
            throw std::invalid_argument("unknown theory '" + name + "'");
    }
    if (s.type_k() == 0)
        notes.push_back("symplectic type: GH_delbar^{n-k} is H^k of the de Rham complex");
    if (s.d_rho_zero())
        notes.push_back("d rho = 0: GH_delbar^{n-r} is H^r of the algebroid complex");
    out["tables"] = tables;
    out["notes"] = notes;
    return out;
}

// S expressed in l-basis coordinates; fails when S is not inside L.
std::optional<Subspace> s_in_l_coords(const AlgebroidFrame& f, const Subspace& S_dg) {
    Matrix cols(S_dg.ambient(), f.two_n);
    for (std::size_t b = 0; b < f.two_n; ++b)
        for (std::size_t x = 0; x < S_dg.ambient(); ++x) cols.at(x, b) = f.l_basis[b].coords[x];
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < S_dg.dim(); ++r) {
        auto sol = solve(cols, S_dg.basis().row(r));
        if (!sol) return std::nullopt;
        rows.push_back(*sol);
    }
    return Subspace::span(Matrix::from_rows(rows, f.two_n));
}

json spectral_json(const GCStructure& s, const ProblemFile& p, const PureFormSpec& spec,
                   std::size_t r_max) {
    json out;
    AlgebroidFrame frame = dual_frame(s);
    Subspace S_dg = build_ideal_S(p, spec);
    auto S = s_in_l_coords(frame, S_dg);
    if (!S) {
        out["error"] = {{"kind", "NotAnIdeal"},
                        {"message", "the ideal section does not lie inside L"},
                        {"witness", ""}};
        return out;
    }
    out["ideal_dim"] = S->dim();
    try {
        FilteredComplex fc = hs_filtration(frame, *S);
        std::size_t stable = fc.p_len + 1;
        std::vector<SpectralPage> pgs = pages(fc, std::max(r_max, stable));
        json jp = json::array();
        for (const auto& page : pgs) {
            if (page.r > r_max && page.r != stable) continue;
            json pj;
            pj["r"] = page.r;
            json cells = json::array();
            for (const auto& [pq, cell] : page.cells) {
                if (cell.dim == 0) continue;
                cells.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", cell.dim}});
            }
            pj["cells"] = cells;
            jp.push_back(pj);
        }
        out["pages"] = jp;

        auto e2 = e2_direct(frame, *S);
        json e2j = json::array();
        for (const auto& [pq, dim] : e2) {
            if (dim == 0) continue;
            e2j.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", dim}});
        }
        out["e2_direct"] = e2j;
        bool match = true;
        const SpectralPage& p2 = pgs[2];
        for (const auto& [pq, dim] : e2)
            if (p2.dim(pq.first, pq.second) != dim) match = false;
        for (const auto& [pq, cell] : p2.cells) {
            auto it = e2.find(pq);
            std::size_t want = (it == e2.end()) ? 0 : it->second;
            if (cell.dim != want) match = false;
        }
        out["e2_matches_page2"] = match;

        const SpectralPage& last = pgs.back();
        std::vector<std::size_t> totals = last.totals(fc.cx.m);
        out["einfty_totals"] = totals;
        std::vector<std::size_t> hl = total_cohomology_dims(fc.cx);
        out["algebroid_dims"] = hl;
        out["converges"] = (totals == hl);
    } catch (const NotAnIdealError& e) {
        out["error"] = {{"kind", "NotAnIdeal"}, {"message", e.what()}, {"witness", e.witness}};
    }
    return out;
}

json deform_json(const GCStructure& s, const ProblemFile& p, std::size_t order,
                 const std::vector<std::string>& theories) {
    json out;
    AlgebroidFrame frame = dual_frame(s);
    Form eps(frame.two_n);
    for (const auto& t : p.deformation->epsilon) {
        Mask mask = 0;
        for (std::size_t idx : t.indices) mask |= Mask(1) << (idx - 1);
        eps.add(mask, t.coeff);
    }
    out["epsilon"] = eps.str();
    Form residual = mc_residual(frame, eps);
    out["mc_residual"] = residual.str();
    out["mc_zero"] = residual.is_zero();

    MetricOperators ops = metric_operators(frame);
    json kj;
    try {
        KuranishiSeries series = kuranishi(frame, ops, eps, order);
        json terms = json::array();
        for (const auto& t : series.terms) terms.push_back(t.str());
        kj["order"] = order;
        kj["terms"] = terms;
        kj["partial_sum"] = series.partial_sum().str();
    } catch (const std::invalid_argument& e) {
        kj["error"] = {{"kind", "NonHarmonicInput"}, {"message", e.what()}, {"witness", eps.str()}};
    }
    out["kuranishi"] = kj;

    ValidationResult res = deformed_structure(s, frame, eps);
    if (std::holds_alternative<ValidationError>(res)) {
        out["deformed"] = {{"error", error_json(std::get<ValidationError>(res))}};
    } else {
        const GCStructure& ds = std::get<GCStructure>(res);
        json dj = structure_summary(ds);
        json tables = json::array();
        for (const auto& name : theories) {
            if (name == "delbar")
                tables.push_back(gh_table_json(ds, Theory::Delbar));
            else if (name == "del")
                tables.push_back(gh_table_json(ds, Theory::Del));
            else if (name == "bc")
                tables.push_back(gh_table_json(ds, Theory::BottChern));
            else if (name == "aeppli")
                tables.push_back(gh_table_json(ds, Theory::Aeppli));
        }
        dj["tables"] = tables;
        out["deformed"] = dj;
    }
    return out;
}

}  // namespace

json run_command(const std::string& command, const ProblemFile& p, const RunOptions& opts) {
    json out;
    out["schema"] = kResultSchema;
    out["command"] = command;
    out["problem"] = {{"name", p.name}, {"dim", p.dim}, {"type", p.type_k}};

    LieAlgebra g = build_algebra(p);
    JacobiReport jac = check_jacobi(g);
    if (!jac.ok) {
        std::string triple = "(" + std::to_string(jac.i) + "," + std::to_string(jac.j) + "," +
                             std::to_string(jac.k) + ")";
        out["error"] = {{"kind", "JacobiViolation"},
                        {"message", "Jacobi identity fails at " + triple},
                        {"witness", triple}};
        return out;
    }
    PureFormSpec spec = build_spec(p);
    ValidationResult res = validate(g, spec);
    if (std::holds_alternative<ValidationError>(res)) {
        out["error"] = error_json(std::get<ValidationError>(res));
        return out;
    }
    const GCStructure& s = std::get<GCStructure>(res);
    out["check"] = structure_summary(s);

    if (command == "check") {
        out["check"]["j_grading_ok"] = s.j_grading_check();
        return out;
    }
    if (command == "cohomology") {
        out["cohomology"] = cohomology_json(s, spec, opts.theories);
        return out;
    }
    if (command == "spectral") {
        if (!p.ideal) {
            out["error"] = {{"kind", "MissingSection"},
                            {"message", "spectral requires an ideal section"},
                            {"witness", "ideal"}};
            return out;
        }
        out["spectral"] = spectral_json(s, p, spec, opts.pages);
        return out;
    }
    if (command == "deform") {
        if (!p.deformation) {
            out["error"] = {{"kind", "MissingSection"},
                            {"message", "deform requires a deformation section"},
                            {"witness", "deformation"}};
            return out;
        }
        out["deform"] = deform_json(s, p, opts.order, opts.theories);
        return out;
    }
    throw std::invalid_argument("unknown command '" + command + "'");
}

bool result_has_error(const json& result) {
    if (result.is_object()) {
        if (result.contains("error")) return true;
        for (const auto& [k, v] : result.items())
            if (result_has_error(v)) return true;
    } else if (result.is_array()) {
        for (const auto& v : result)
            if (result_has_error(v)) return true;
    }
    return false;
}

namespace {

std::string style(const std::string& text, const char* code, bool color) {
    if (!color) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string dims_line(const json& dims) {
    std::ostringstream os;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (k) os << " ";
        os << dims[k].get<std::size_t>();
    }
    return os.str();
}

void render_check(std::ostringstream& os, const json& c, bool color) {
    os << style("structure", "1", color) << "\n";
    os << "  valid: yes\n";
    os << "  type: " << c["type"].get<std::size_t>() << " (n = " << c["n"].get<std::size_t>()
       << ")\n";
    if (c["nilpotent"].get<bool>())
        os << "  nilpotent: yes, step " << c["nilpotency_step"].get<std::size_t>() << "\n";
    else
        os << "  nilpotent: no\n";
    os << "  d rho = 0: " << (c["d_rho_zero"].get<bool>() ? "yes" : "no") << "\n";
    os << "  rho = " << c["rho"].get<std::string>() << "\n";
    os << "  L basis:\n";
    for (const auto& v : c["L_basis"]) os << "    " << v.get<std::string>() << "\n";
    os << "  U dims (j = n..-n): " << dims_line(c["u_dims"]) << "\n";
    if (c.contains("j_grading_ok"))
        os << "  dJ - Jd = -i(del - delbar): " << (c["j_grading_ok"].get<bool>() ? "ok" : "FAIL")
           << "\n";
}

void render_error(std::ostringstream& os, const json& e, bool color) {
    os << style("error", "1;31", color) << ": " << e["kind"].get<std::string>() << ": "
       << e["message"].get<std::string>() << "\n";
    if (e.contains("witness") && !e["witness"].get<std::string>().empty())
        os << "  witness: " << e["witness"].get<std::string>() << "\n";
    if (e.contains("integrability_solvable"))
        os << "  d rho = w.rho solvable: "
           << (e["integrability_solvable"].get<bool>() ? "yes" : "no") << "\n";
}

void render_table(std::ostringstream& os, const json& t, bool color) {
    std::string name = t["theory"].get<std::string>();
    if (name == "dolbeault") {
        os << style("dolbeault h^{p,q}", "1", color) << "\n";
        const auto& h = t["h"];
        for (std::size_t p = 0; p < h.size(); ++p) {
            os << "  p=" << p << ":";
            for (std::size_t q = 0; q < h[p].size(); ++q)
                os << " " << h[p][q].get<std::size_t>();
            os << "\n";
        }
        os << "  sums over p-q = j (j = n..-n): " << dims_line(t["diagonal_sums"]) << "\n";
        return;
    }
    os << style("GH_" + name, "1", color) << "  dims: " << dims_line(t["dims"]) << "\n";
    for (const auto& e : t["entries"]) {
        os << "  degree " << e["degree"].get<int>() << " (dim " << e["dim"].get<std::size_t>()
           << ")";
        const auto& reps = e["representatives"];
        if (reps.empty()) {
            os << "\n";
            continue;
        }
        os << ":\n";
        for (const auto& r : reps) os << "    [" << r.get<std::string>() << "]\n";
    }
}

}  // namespace

std::string render_text(const json& result, bool color) {
    std::ostringstream os;
    os << style("gencoh " + result["command"].get<std::string>(), "1;36", color);
    std::string name = result["problem"]["name"].get<std::string>();
    if (!name.empty()) os << " - " << name;
    os << "\n";
    if (result.contains("error")) {
        render_error(os, result["error"], color);
        return os.str();
    }
    if (result.contains("check")) render_check(os, result["check"], color);
    if (result.contains("cohomology")) {
        for (const auto& t : result["cohomology"]["tables"]) render_table(os, t, color);
        for (const auto& n : result["cohomology"]["notes"])
            os << "note: " << n.get<std::string>() << "\n";
    }
    if (result.contains("spectral")) {
        const json& sp = result["spectral"];
        if (sp.contains("error")) {
            render_error(os, sp["error"], color);
            return os.str();
        }
        os << style("spectral sequence", "1", color) << " (ideal dim "
           << sp["ideal_dim"].get<std::size_t>() << ")\n";
        for (const auto& page : sp["pages"]) {
            os << "  E_" << page["r"].get<std::size_t>() << ":";
            for (const auto& cell : page["cells"])
                os << " (" << cell["p"].get<int>() << "," << cell["q"].get<int>() << ")->"
                   << cell["dim"].get<std::size_t>();
            os << "\n";
        }
        os << "  E_2 direct:";
        for (const auto& cell : sp["e2_direct"])
            os << " (" << cell["p"].get<int>() << "," << cell["q"].get<int>() << ")->"
               << cell["dim"].get<std::size_t>();
        os << "\n";
        os << "  E_2 matches page 2: " << (sp["e2_matches_page2"].get<bool>() ? "yes" : "NO")
           << "\n";
        os << "  E_infty totals: " << dims_line(sp["einfty_totals"]) << "\n";
        os << "  algebroid H dims: " << dims_line(sp["algebroid_dims"]) << "\n";
        os << "  converges: " << (sp["converges"].get<bool>() ? "yes" : "NO") << "\n";
    }
    if (result.contains("deform")) {
        const json& df = result["deform"];
        os << style("deformation", "1", color) << "\n";
        os << "  epsilon = " << df["epsilon"].get<std::string>() << "\n";
        os << "  MC residual = " << df["mc_residual"].get<std::string>() << "\n";
        const json& kj = df["kuranishi"];
        if (kj.contains("error")) {
            render_error(os, kj["error"], color);
        } else {
            os << "  Kuranishi series (formal through order " << kj["order"].get<std::size_t>()
               << "):\n";
            const auto& terms = kj["terms"];
            for (std::size_t r = 0; r < terms.size(); ++r)
                os << "    eps_" << (r + 1) << " = " << terms[r].get<std::string>() << "\n";
        }
        if (df["deformed"].contains("error")) {
            render_error(os, df["deformed"]["error"], color);
        } else {
            render_check(os, df["deformed"], color);
            for (const auto& t : df["deformed"]["tables"]) render_table(os, t, color);
        }
    }
    return os.str();
}

}  // namespace gencoh
