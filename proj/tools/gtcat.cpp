#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gtcat/json_io.hpp"
#include "gtcat/selftest.hpp"

using namespace gtcat;

namespace {

struct RunConfig {
    uint64_t seed = kDefaultSeed;
    double tol = 1e-9;
    int max_group_order = 10000;
    int subgroup_bound = 48;
    std::string format = "json";
    std::string out_path;
    int threads = 1;
};

void emit(const RunConfig& cfg, const Json& j, const std::string& table_text = "") {
    std::string text =
        cfg.format == "table" && !table_text.empty() ? table_text : dump_stable(j);
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        require(f.good(), "cannot open output path " + cfg.out_path);
        f << text;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

Json load_json(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), "cannot open " + path);
    Json j;
    f >> j;
    return j;
}

GroupPtr parse_group(const std::string& spec, const RunConfig& cfg) {
    if (spec.rfind("preset:", 0) != 0) return group_from_json(load_json(spec));
    const auto parts = split(spec, ':');
    require(parts.size() >= 2, "bad group preset: " + spec);
    const std::string& kind = parts[1];
    if (kind == "cyclic") {
        require(parts.size() == 3, "usage: preset:cyclic:N");
        return cyclic_group(std::stoi(parts[2]), cfg.max_group_order);
    }
    if (kind == "dihedral") {
        require(parts.size() == 3, "usage: preset:dihedral:N");
        return dihedral_group(std::stoi(parts[2]), cfg.max_group_order);
    }
    if (kind == "sym") {
        require(parts.size() == 3, "usage: preset:sym:N");
        return symmetric_group(std::stoi(parts[2]), cfg.max_group_order);
    }
    if (kind == "quat8") return quaternion_group();
    if (kind == "prod") {
        require(parts.size() >= 3, "usage: preset:prod:<a>+<b>");
        std::string rest = spec.substr(spec.find("prod:") + 5);
        const auto factors = split(rest, '+');
        require(factors.size() >= 2, "product needs at least two factors");
        GroupPtr acc = parse_group("preset:" + factors[0], cfg);
        for (size_t i = 1; i < factors.size(); ++i)
            acc = direct_product(acc, parse_group("preset:" + factors[i], cfg),
                                 cfg.max_group_order);
        return acc;
    }
    throw DomainError("unknown group preset kind: " + kind);
}

Subgroup parse_subgroup(const GroupPtr& g, const std::string& spec) {
    if (spec == "all") return Subgroup::whole(g);
    if (spec == "trivial") return Subgroup::trivial(g);
    if (spec.rfind("gens:", 0) == 0) {
        const std::string body = spec.substr(5);
        // split on top-level commas (labels may contain parentheses)
        std::vector<std::string> labels;
        std::string cur;
        int depth = 0;
        for (char c : body) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                labels.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) labels.push_back(cur);
        std::vector<int> gens;
        for (const auto& l : labels) {
            const int idx = g->index_of(l);
            require(idx >= 0, "no element labelled '" + l + "'");
            gens.push_back(idx);
        }
        return Subgroup::closure(g, gens);
    }
    if (spec.rfind("elems:", 0) == 0) {
        std::vector<int> elems;
        for (const auto& tok : split(spec.substr(6), ','))
            elems.push_back(std::stoi(tok));
        return Subgroup(g, elems);
    }
    return subgroup_from_json(g, load_json(spec));
}

Cochain parse_omega(const GroupPtr& g, const std::string& spec) {
    if (spec == "trivial") return Cochain(Subgroup::whole(g), 3, 1);
    if (spec.rfind("preset:", 0) == 0)
        return preset_omega_cyclic(g, std::stoll(spec.substr(7)));
    if (spec.rfind("pullback:", 0) == 0) {
        // pullback:<q>:<image list> along a hom G -> Z/n given by images
        const auto parts = split(spec, ':');
        require(parts.size() == 3, "usage: pullback:<q>:<i0,i1,...>");
        std::vector<int> img;
        for (const auto& tok : split(parts[2], ',')) img.push_back(std::stoi(tok));
        int n = 1;
        for (int v : img) n = std::max(n, v + 1);
        const auto zn = cyclic_group(n);
        const GroupHom hom(g, zn, img);
        return pullback(preset_omega_cyclic(zn, std::stoll(parts[1])), hom);
    }
    return cochain_from_json(Subgroup::whole(g), load_json(spec));
}

Cochain parse_psi(const Subgroup& S, const Cochain& omega, const std::string& spec) {
    if (spec == "trivial") return Cochain::zero(S, 2, 1);
    if (spec.rfind("solve", 0) == 0) {
        const auto sol = solve_d2_equals(restrict_cochain(omega, S));
        require(sol.solvable, "d psi = omega|_S has no solution at the retry moduli");
        size_t k = 0;
        if (spec.rfind("solve:", 0) == 0) k = std::stoul(spec.substr(6));
        require(k < sol.h2_classes.size(), "H^2 class index out of range");
        return cochain_add(*sol.particular, sol.h2_classes[k]);
    }
    return cochain_from_json(S, load_json(spec));
}

int dispatch(int argc, char** argv) {
    CLI::App app{"group scheme-theoretical category toolkit (etale case)"};
    app.require_subcommand(1);
    RunConfig cfg;
    if (const char* env = std::getenv("GTCAT_THREADS")) cfg.threads = std::atoi(env);
    app.add_option("--seed", cfg.seed, "random seed (default 0xC0FFEE)");
    app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--max-group-order", cfg.max_group_order, "preset order cap");
    app.add_option("--subgroup-bound", cfg.subgroup_bound,
                   "subgroup enumeration order cap");
    app.add_option("--format", cfg.format, "json | table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", cfg.out_path, "output path (default stdout)");
    app.add_option("--threads", cfg.threads, "worker threads for block pipelines");

    std::string group_spec, omega_spec = "trivial", H_spec = "trivial",
                psi_spec = "trivial", K_spec, eta_spec = "trivial", S_spec = "all",
                cochain_path;
    long long charp = 0;
    int preset_n = 2, simple_index = 0;
    long long preset_q = 0;
    std::string preset_kind = "cyclic";

    // group
    auto* g_grp = app.add_subcommand("group", "finite group utilities");
    auto* g_preset = g_grp->add_subcommand("preset", "emit a preset group");
    g_preset->add_option("--kind", preset_kind, "cyclic|dihedral|sym|quat8");
    g_preset->add_option("--n", preset_n, "size parameter");
    auto* g_load = g_grp->add_subcommand("load", "load and re-emit a group");
    g_load->add_option("--group", group_spec)->required();
    auto* g_sub = g_grp->add_subcommand("subgroups", "enumerate subgroups");
    g_sub->add_option("--group", group_spec)->required();
    auto* g_dc = g_grp->add_subcommand("double-cosets", "H\\G/K decomposition");
    g_dc->add_option("--group", group_spec)->required();
    g_dc->add_option("--H", H_spec)->required();
    g_dc->add_option("--K", K_spec)->required();
    auto* g_cl = g_grp->add_subcommand("classes", "conjugacy classes");
    g_cl->add_option("--group", group_spec)->required();

    // cochain
    auto* c_grp = app.add_subcommand("cochain", "cochain calculus");
    auto* c_ver = c_grp->add_subcommand("verify", "cocycle certificate");
    c_ver->add_option("--group", group_spec)->required();
    c_ver->add_option("--cochain", cochain_path)->required();
    c_ver->add_option("--S", S_spec);
    auto* c_cob = c_grp->add_subcommand("coboundary", "apply d");
    c_cob->add_option("--group", group_spec)->required();
    c_cob->add_option("--cochain", cochain_path)->required();
    c_cob->add_option("--S", S_spec);
    auto* c_pre = c_grp->add_subcommand("preset-omega", "standard cyclic 3-cocycle");
    c_pre->add_option("--n", preset_n)->required();
    c_pre->add_option("--q", preset_q)->required();
    auto* c_sol = c_grp->add_subcommand("solve", "solve d psi = omega|_S");
    c_sol->add_option("--group", group_spec)->required();
    c_sol->add_option("--omega", omega_spec);
    c_sol->add_option("--S", S_spec);
    auto* c_h2 = c_grp->add_subcommand("h2", "H^2 transversal of a subgroup");
    c_h2->add_option("--group", group_spec)->required();
    c_h2->add_option("--S", S_spec);

    // category
    auto* cat = app.add_subcommand("category", "C(G, omega, H, psi)");
    auto add_cat_opts = [&](CLI::App* sub, bool with_keta) {
        sub->add_option("--group", group_spec)->required();
        sub->add_option("--omega", omega_spec);
        sub->add_option("--H", H_spec);
        sub->add_option("--psi", psi_spec);
        if (with_keta) {
            sub->add_option("--K", K_spec);
            sub->add_option("--eta", eta_spec);
        }
    };
    auto* cat_simples = cat->add_subcommand("simples", "simple objects");
    add_cat_opts(cat_simples, true);
    auto* cat_proj = cat->add_subcommand("projectives", "projective covers");
    add_cat_opts(cat_proj, false);
    cat_proj->add_option("--char", charp, "characteristic p");
    auto* cat_dual = cat->add_subcommand("dual", "dual of a simple");
    add_cat_opts(cat_dual, false);
    cat_dual->add_option("--simple", simple_index, "index into the simples list");
    auto* cat_fib = cat->add_subcommand("fiber-functors", "rank-1 module categories");
    add_cat_opts(cat_fib, false);
    auto* cat_mc = cat->add_subcommand("module-cats",
                                       "module categories of Coh(G, omega)");
    cat_mc->add_option("--group", group_spec)->required();
    cat_mc->add_option("--omega", omega_spec);

    // center
    auto* ctr = app.add_subcommand("center", "Z(G, omega)");
    for (const char* sub : {"blocks", "simples", "projectives", "cross-check"}) {
        auto* c = ctr->add_subcommand(sub);
        c->add_option("--group", group_spec)->required();
        c->add_option("--omega", omega_spec);
        if (std::string(sub) == "projectives")
            c->add_option("--char", charp, "characteristic p");
    }

    // selftest
    auto* st = app.add_subcommand("selftest", "run the invariant suites");
    bool st_quick = false, st_full = false;
    st->add_flag("--quick", st_quick, "small fixtures only");
    st->add_flag("--full", st_full, "include the double cross-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 64;
    }

    if (g_preset->parsed()) {
        GroupPtr g;
        if (preset_kind == "cyclic") g = cyclic_group(preset_n, cfg.max_group_order);
        else if (preset_kind == "dihedral") g = dihedral_group(preset_n, cfg.max_group_order);
        else if (preset_kind == "sym") g = symmetric_group(preset_n, cfg.max_group_order);
        else if (preset_kind == "quat8") g = quaternion_group();
        else throw DomainError("unknown preset kind: " + preset_kind);
        emit(cfg, group_to_json(*g));
        return 0;
    }
    if (g_load->parsed()) {
        emit(cfg, group_to_json(*parse_group(group_spec, cfg)));
        return 0;
    }
    if (g_sub->parsed()) {
        const auto g = parse_group(group_spec, cfg);
        Json j = Json::array();
        for (const auto& s : enumerate_subgroups(g, cfg.subgroup_bound))
            j.push_back(subgroup_to_json(s));
        emit(cfg, j);
        return 0;
    }
    if (g_dc->parsed()) {
        const auto g = parse_group(group_spec, cfg);
        const auto H = parse_subgroup(g, H_spec);
        const auto K = parse_subgroup(g, K_spec);
        emit(cfg, double_cosets_to_json(double_cosets(H, K), g));
        return 0;
    }
    if (g_cl->parsed()) {
        const auto g = parse_group(group_spec, cfg);
        emit(cfg, classes_to_json(conjugacy_data(g), g));
        return 0;
    }

    if (c_ver->parsed() || c_cob->parsed()) {
        const auto g = parse_group(group_spec, cfg);
        const auto S = parse_subgroup(g, S_spec);
        const Cochain c = cochain_from_json(S, load_json(cochain_path));
        if (c_ver->parsed()) {
            emit(cfg, certificate_to_json(S.group(), is_cocycle(c)));
        } else {
            emit(cfg, cochain_to_json(coboundary(c)));
        }
        return 0;
    }
    if (c_pre->parsed()) {
        emit(cfg, cochain_to_json(preset_omega_cyclic(cyclic_group(preset_n), preset_q)));
        return 0;
    }
    if (c_sol->parsed() || c_h2->parsed()) {
        const auto g = parse_group(group_spec, cfg);
        const auto S = parse_subgroup(g, S_spec);
        const Cochain target = c_sol->parsed()
                                   ? restrict_cochain(parse_omega(g, omega_spec), S)
                                   : Cochain(S, 3, 2);
        emit(cfg, solve_d2_to_json(solve_d2_equals(target)));
        return 0;
    }

    auto build_cat_spec = [&]() {
        const auto g = parse_group(group_spec, cfg);
        const Cochain omega = parse_omega(g, omega_spec);
        const Subgroup H = parse_subgroup(g, H_spec);
        const Cochain psi = parse_psi(H, omega, psi_spec);
        return validate_category(g, omega, H, psi);
    };

    if (cat_simples->parsed()) {
        const auto spec = build_cat_spec();
        if (!K_spec.empty()) {
            const Subgroup K = parse_subgroup(spec.G, K_spec);
            const Cochain eta = parse_psi(K, spec.omega, eta_spec);
            const auto mc = validate_module_cat(spec, K, eta);
            emit(cfg, simples_to_json(module_cat_simples(mc, cfg.seed, cfg.threads),
                                      spec.G));
        } else {
            emit(cfg, simples_to_json(category_simples(spec, cfg.seed, cfg.threads),
                                      spec.G));
        }
        return 0;
    }
    if (cat_proj->parsed()) {
        const auto spec = build_cat_spec();
        emit(cfg, simples_to_json(
                      projective_cover_data(spec, charp, cfg.seed, cfg.threads),
                      spec.G));
        return 0;
    }
    if (cat_dual->parsed()) {
        const auto spec = build_cat_spec();
        const auto res = category_simples(spec, cfg.seed, cfg.threads);
        require(simple_index >= 0 &&
                    simple_index < static_cast<int>(res.simples.size()),
                "--simple index out of range");
        const auto d = simple_dual(spec, res, res.simples[simple_index], cfg.seed);
        Json j;
        j["block"] = d.block;
        j["coset_rep"] = spec.G->label(d.coset_rep);
        j["irrep_index"] = d.irrep_index;
        j["dim"] = d.dim;
        j["fpdim"] = d.fpdim;
        emit(cfg, j);
        return 0;
    }
    if (cat_fib->parsed()) {
        const auto spec = build_cat_spec();
        emit(cfg, module_cats_to_json(
                      fiber_functors(spec, cfg.seed, cfg.subgroup_bound)));
        return 0;
    }
    if (cat_mc->parsed()) {
        const auto g = parse_group(group_spec, cfg);
        const Cochain omega = parse_omega(g, omega_spec);
        emit(cfg, module_cats_to_json(
                      enumerate_module_categories(g, omega, cfg.subgroup_bound)));
        return 0;
    }

    if (ctr->parsed()) {
        const auto g = parse_group(group_spec, cfg);
        const Cochain omega = parse_omega(g, omega_spec);
        const auto* sub = ctr->get_subcommands().front();
        if (sub->get_name() == "blocks" || sub->get_name() == "simples") {
            const auto spec = validate_center(g, omega);
            emit(cfg, center_to_json(center_simples(spec, cfg.seed, cfg.threads), g));
        } else if (sub->get_name() == "projectives") {
            require(charp >= 2, "center projectives need --char p");
            const auto spec = validate_center(g, omega, charp);
            emit(cfg,
                 center_to_json(center_projectives(spec, cfg.seed, cfg.threads), g));
        } else {
            const auto spec = validate_center(g, omega);
            const auto rep = cross_check_via_double(spec, cfg.seed, cfg.threads);
            emit(cfg, cross_check_to_json(rep, g));
            if (!rep.pass)
                throw ConsistencyError("double cross-check found a mismatch");
        }
        return 0;
    }

    if (st->parsed()) {
        const bool quick = st_quick || !st_full;
        const auto results = run_selftest(quick, cfg.seed, cfg.threads);
        bool all = true;
        std::ostringstream table;
        Json j = Json::array();
        for (const auto& r : results) {
            all = all && r.pass;
            table << (r.pass ? "PASS  " : "FAIL  ") << r.name
                  << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
            Json e;
            e["name"] = r.name;
            e["pass"] = r.pass;
            if (!r.detail.empty()) e["detail"] = r.detail;
            j.push_back(std::move(e));
        }
        emit(cfg, j, table.str());
        if (!all) throw ConsistencyError("selftest failures");
        return 0;
    }

    throw DomainError("no subcommand dispatched");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ConsistencyError& e) {
        std::cerr << "internal-consistency error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
