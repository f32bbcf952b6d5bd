#include "gtcat/json_io.hpp"

namespace gtcat {

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order();
    j["labels"] = g.labels();
    Json table = Json::array();
    for (int a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

GroupPtr group_from_json(const Json& j) {
    require(j.contains("order") && j.contains("table"), "group JSON: missing fields");
    const int n = j.at("order").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
        require(static_cast<int>(labels.size()) == n, "group JSON: labels size");
    } else {
        for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    }
    std::vector<int> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : j.at("table")) {
        require(static_cast<int>(row.size()) == n, "group JSON: table shape");
        for (const auto& v : row) table.push_back(v.get<int>());
    }
    require(static_cast<int>(table.size()) == n * n, "group JSON: table shape");
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

Json subgroup_to_json(const Subgroup& s) {
    return Json(s.elements());
}

Subgroup subgroup_from_json(const GroupPtr& g, const Json& j) {
    return Subgroup(g, j.get<std::vector<int>>());
}

Json cochain_to_json(const Cochain& c) {
    Json j;
    j["degree"] = c.degree();
    j["modulus"] = c.modulus();
    j["values"] = c.values();
    return j;
}

Cochain cochain_from_json(const Subgroup& domain, const Json& j) {
    const int degree = j.at("degree").get<int>();
    const long long m = j.at("modulus").get<long long>();
    Cochain c(domain, degree, m);
    const auto vals = j.at("values").get<std::vector<long long>>();
    require(vals.size() == c.values().size(), "cochain JSON: wrong value count");
    // route through set_local so normalization is validated
    const int s = domain.size();
    std::vector<int> t(degree);
    for (size_t flat = 0; flat < vals.size(); ++flat) {
        size_t rest = flat;
        for (int i = degree - 1; i >= 0; --i) {
            t[i] = static_cast<int>(rest % s);
            rest /= s;
        }
        c.set_local(t, vals[flat]);
        require(mod_reduce(c.at_local(t) - vals[flat], m) == 0,
                "cochain JSON: normalization violated");
    }
    return c;
}

Json certificate_to_json(const GroupPtr& g, const CocycleCertificate& c) {
    Json j;
    j["is_cocycle"] = c.is_cocycle;
    if (!c.is_cocycle) {
        Json w = Json::array();
        for (int x : c.witness) w.push_back(g->label(x));
        j["witness"] = std::move(w);
    }
    return j;
}

Json simples_to_json(const SimplesResult& r, const GroupPtr& g) {
    Json j;
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        Json jb;
        jb["coset_rep"] = g->label(b.coset.rep);
        jb["coset_size"] = b.coset.elements.size();
        jb["stabilizer_order"] = b.coset.stabilizer.size();
        jb["stabilizer"] = b.coset.stabilizer.elements();
        jb["cocycle"] = cochain_to_json(b.xi);
        jb["irrep_dims"] = b.report.dims;
        if (!b.report.pcover_dims.empty()) jb["pcover_dims"] = b.report.pcover_dims;
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    Json simples = Json::array();
    for (const auto& s : r.simples) {
        Json js;
        js["block"] = s.block;
        js["coset_rep"] = g->label(s.coset_rep);
        js["irrep_index"] = s.irrep_index;
        js["dim"] = s.dim;
        js["fpdim"] = s.fpdim;
        js["pcover_fpdim"] = s.pcover_fpdim;
        simples.push_back(std::move(js));
    }
    j["simples"] = std::move(simples);
    return j;
}

Json module_cats_to_json(const std::vector<std::pair<Subgroup, Cochain>>& pairs) {
    Json j = Json::array();
    for (const auto& [H, psi] : pairs) {
        Json je;
        je["H"] = H.elements();
        je["psi"] = cochain_to_json(psi);
        j.push_back(std::move(je));
    }
    return j;
}

Json center_to_json(const CenterResult& r, const GroupPtr& g) {
    Json j;
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        Json jb;
        jb["class_rep"] = g->label(b.cls.rep);
        jb["class_size"] = b.cls.elements.size();
        jb["centralizer_order"] = b.cls.centralizer.size();
        jb["cocycle"] = cochain_to_json(b.cocycle);
        jb["irrep_dims"] = b.report.dims;
        if (!b.report.pcover_dims.empty()) jb["pcover_dims"] = b.report.pcover_dims;
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    Json simples = Json::array();
    for (const auto& s : r.simples) {
        Json js;
        js["block"] = s.block;
        js["class_rep"] = g->label(s.coset_rep);
        js["irrep_index"] = s.irrep_index;
        js["dim"] = s.dim;
        js["fpdim"] = s.fpdim;
        js["pcover_fpdim"] = s.pcover_fpdim;
        simples.push_back(std::move(js));
    }
    j["simples"] = std::move(simples);
    return j;
}

Json cross_check_to_json(const CrossCheckReport& r, const GroupPtr& g) {
    Json j;
    j["pass"] = r.pass;
    j["class_count"] = r.class_count;
    j["double_block_count"] = r.block_count_double;
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        Json jb;
        jb["class_rep"] = g->label(b.class_rep);
        jb["simple_count_center"] = b.simple_count_center;
        jb["simple_count_double"] = b.simple_count_double;
        jb["fpdims_center"] = b.fpdims_center;
        jb["fpdims_double"] = b.fpdims_double;
        jb["cocycles_pointwise_equal"] = b.cocycles_pointwise_equal;
        jb["cocycles_cohomologous"] = b.cocycles_cohomologous;
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

Json double_cosets_to_json(const std::vector<DoubleCoset>& cosets,
                           const GroupPtr& g) {
    Json j = Json::array();
    for (const auto& dc : cosets) {
        Json jd;
        jd["rep"] = g->label(dc.rep);
        jd["size"] = dc.elements.size();
        jd["elements"] = dc.elements;
        jd["stabilizer"] = dc.stabilizer.elements();
        j.push_back(std::move(jd));
    }
    return j;
}

Json classes_to_json(const std::vector<ConjugacyClass>& classes, const GroupPtr& g) {
    Json j = Json::array();
    for (const auto& c : classes) {
        Json jc;
        jc["rep"] = g->label(c.rep);
        jc["size"] = c.elements.size();
        jc["elements"] = c.elements;
        jc["centralizer_order"] = c.centralizer.size();
        j.push_back(std::move(jc));
    }
    return j;
}

Json solve_d2_to_json(const SolveD2Result& r) {
    Json j;
    j["solvable"] = r.solvable;
    if (!r.solvable) return j;
    j["modulus"] = r.modulus;
    j["particular"] = cochain_to_json(*r.particular);
    Json gens = Json::array();
    for (const auto& k : r.kernel_gens) gens.push_back(cochain_to_json(k));
    j["kernel_gens"] = std::move(gens);
    Json h2 = Json::array();
    for (const auto& k : r.h2_classes) h2.push_back(cochain_to_json(k));
    j["h2_classes"] = std::move(h2);
    return j;
}

std::string dump_stable(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace gtcat
