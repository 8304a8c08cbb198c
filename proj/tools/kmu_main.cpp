// kmu -- Kustin-Miller unprojection toolkit
//
// Subcommands: gb, nf, eliminate, dimdeg, unproject {codim2,codim3,extend,
// tom,jerry}, invariants {ci,lemma,cascade}, verify {smoothness,nodes,
// containment,pfaffian-identity}, betti {koszul,link,show}, web {build,
// candidates,export,reproduce}, reproduce-paper.
//
// Exit codes: 0 pass, 1 check failure, 2 inconclusive (budget/genericity),
// 3 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "kmu/catalog.hpp"
#include "kmu/checks.hpp"
#include "kmu/parser.hpp"
#include "kmu/singularity.hpp"
#include "kmu/unprojection.hpp"

using namespace kmu;

namespace {

Json read_json_arg(const std::string& path) {
    Json j;
    if (path == "-") {
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    in >> j;
    return j;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
}

struct GlobalOpts {
    std::uint32_t prime = 101;
    std::uint64_t seed = 1;
    long long budget = 1'000'000;
    std::string data_dir;
    std::string out;

    GroebnerOptions gopts() const { return GroebnerOptions{budget}; }
    Field field() const { return Field::prime(prime); }
};

std::pair<VarietySpec, VarietySpec> read_pair(const std::string& path, Field field) {
    Json j = read_json_arg(path);
    VarietySpec X = spec_from_json(j.at("X"), field);
    VarietySpec D = spec_from_json(j.at("D"), field);
    X.ambient.field = field;
    D.ambient.field = field;
    return {std::move(X), std::move(D)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kustin-Miller unprojection toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;
    if (const char* env = std::getenv("KMU_PRIME")) g.prime = static_cast<std::uint32_t>(std::atoi(env));
    app.add_option("--prime", g.prime, "coefficient field F_p (0 is not allowed; default 101)")
        ->envname("KMU_PRIME");
    app.add_option("--seed", g.seed, "root seed for all randomness");
    app.add_option("--budget", g.budget, "Groebner reduction budget");
    app.add_option("--data", g.data_dir, "catalog data directory");
    app.add_option("--out", g.out, "output file (default stdout)");

    // --- groebner engine ------------------------------------------------------
    std::string ideal_path, poly_text, block_spec;
    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    gb->add_option("--input", ideal_path, "ideal JSON (file or -)")->required();
    auto* nf = app.add_subcommand("nf", "normal form of a polynomial modulo an ideal");
    nf->add_option("--input", ideal_path, "ideal JSON")->required();
    nf->add_option("--poly", poly_text, "polynomial text")->required();
    auto* elim = app.add_subcommand("eliminate", "eliminate a block of variables");
    elim->add_option("--input", ideal_path, "ideal JSON")->required();
    elim->add_option("--block", block_spec, "comma-separated variable names or indices")->required();
    auto* dimdeg = app.add_subcommand("dimdeg", "projective dimension and degree");
    dimdeg->add_option("--input", ideal_path, "ideal JSON")->required();

    // --- unprojection ---------------------------------------------------------
    auto* unproject = app.add_subcommand("unproject", "run a Kustin-Miller constructor");
    unproject->require_subcommand(1);
    std::string pair_path;
    for (const char* mech : {"codim2", "codim3", "extend", "tom", "jerry"}) {
        auto* sub = unproject->add_subcommand(mech, std::string("the ") + mech + " format");
        sub->add_option("--pair", pair_path, "JSON with the X and D specs")->required();
    }

    // --- invariants -----------------------------------------------------------
    auto* invariants_cmd = app.add_subcommand("invariants", "numerical invariants");
    invariants_cmd->require_subcommand(1);
    std::vector<int> inv_weights;
    std::vector<long long> inv_degrees;
    auto* inv_ci = invariants_cmd->add_subcommand("ci", "Chern-series invariants of a CI");
    inv_ci->add_option("--weights", inv_weights, "ambient weights")->required()->delimiter(',');
    inv_ci->add_option("--degrees", inv_degrees, "equation degrees")->required()->delimiter(',');
    long long lemma_d = 0;
    std::string lemma_dir = "unproject", inv_json;
    int cascade_steps = 0;
    auto* inv_lemma = invariants_cmd->add_subcommand("lemma", "transition arithmetic across one step");
    inv_lemma->add_option("--d", lemma_d, "del Pezzo degree")->required();
    inv_lemma->add_option("--direction", lemma_dir, "unproject|project");
    inv_lemma->add_option("--invariants", inv_json, "InvariantSet JSON (file or -)")->required();
    auto* inv_cascade = invariants_cmd->add_subcommand("cascade", "iterated transitions");
    inv_cascade->add_option("--d", lemma_d, "del Pezzo degree")->required();
    inv_cascade->add_option("--steps", cascade_steps, "number of steps")->required();
    inv_cascade->add_option("--invariants", inv_json, "InvariantSet JSON of the start")->required();
    inv_cascade->add_option("--direction", lemma_dir, "unproject|project");

    // --- verification ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "seeded verification jobs");
    verify->require_subcommand(1);
    std::string spec_path;
    auto* v_smooth = verify->add_subcommand("smoothness", "quasi-smoothness of a seeded member");
    v_smooth->add_option("--spec", spec_path, "VarietySpec JSON")->required();
    auto* v_nodes = verify->add_subcommand("nodes", "singular-scheme degree of X containing D");
    v_nodes->add_option("--pair", pair_path, "JSON with the X and D specs")->required();
    auto* v_contain = verify->add_subcommand("containment", "I_X inside I_D for a seeded pair");
    v_contain->add_option("--pair", pair_path, "JSON with the X and D specs")->required();
    auto* v_pfid = verify->add_subcommand("pfaffian-identity", "Kustin-Miller Pfaffian identity");
    v_pfid->add_option("--pair", pair_path, "JSON with the X and D specs")->required();

    // --- betti ----------------------------------------------------------------
    auto* betti_cmd = app.add_subcommand("betti", "graded Betti bookkeeping");
    betti_cmd->require_subcommand(1);
    std::vector<long long> betti_degrees, link_ci;
    std::string betti_path;
    int link_codim = 0;
    bool show_cone = false;
    auto* b_koszul = betti_cmd->add_subcommand("koszul", "Koszul complex of a regular sequence");
    b_koszul->add_option("--degrees", betti_degrees, "sequence degrees")->required()->delimiter(',');
    auto* b_link = betti_cmd->add_subcommand("link", "linkage through a complete intersection");
    b_link->add_option("--input", betti_path, "BettiTable JSON (file or -), or 'delpezzo6'")->required();
    b_link->add_option("--ci", link_ci, "CI degrees")->required()->delimiter(',');
    b_link->add_option("--codim", link_codim, "codimension (defaults to the CI length)");
    b_link->add_flag("--cone", show_cone, "also emit the uncancelled mapping cone");
    auto* b_show = betti_cmd->add_subcommand("show", "render a table in the (i, j-i) layout");
    b_show->add_option("--input", betti_path, "BettiTable JSON (file or -), or 'delpezzo6'")->required();

    // --- web ------------------------------------------------------------------
    auto* web = app.add_subcommand("web", "the transition web");
    web->require_subcommand(1);
    std::string web_format = "json", family_name;
    bool no_candidates = false;
    std::vector<long long> allowed_degrees;
    bool do_verify = false;
    auto* w_build = web->add_subcommand("build", "build the graph");
    w_build->add_flag("--no-candidates", no_candidates, "shipped edges only");
    w_build->add_flag("--verify", do_verify, "run the constructor checks and mark verified edges");
    auto* w_export = web->add_subcommand("export", "export the graph");
    w_export->add_option("--format", web_format, "dot|json");
    w_export->add_flag("--no-candidates", no_candidates, "shipped edges only");
    auto* w_cand = web->add_subcommand("candidates", "partners of a family by invariant arithmetic");
    w_cand->add_option("--family", family_name, "family name or key")->required();
    w_cand->add_option("--degrees", allowed_degrees, "allowed del Pezzo degrees")->delimiter(',');
    auto* w_repro = web->add_subcommand("reproduce", "per-row table reproduction report");

    // --- the whole battery ------------------------------------------------------
    std::string only, report_format = "text";
    int jobs = 1;
    auto* repro = app.add_subcommand("reproduce-paper", "run the full verification battery");
    repro->add_option("--only", only, "run only checks whose id/title starts with this");
    repro->add_option("--format", report_format, "text|json");
    repro->add_option("--jobs", jobs, "worker pool size (default 1)");

    // global options may follow the subcommand name
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (auto* s : a->get_subcommands([](const CLI::App*) { return true; })) {
            s->fallthrough();
            enable_fallthrough(s);
        }
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        Field field = g.field();
        GroebnerOptions opts = g.gopts();

        if (*gb) {
            Ideal I = ideal_from_json(read_json_arg(ideal_path));
            const auto& basis = I.groebner(MonomialOrder::wdegrevlex(), opts);
            Json out = ideal_to_json(Ideal(I.ring(), basis.elements));
            out["order"] = basis.order.describe();
            out["reductions"] = basis.reductions_used;
            emit(out, g.out);
        } else if (*nf) {
            Ideal I = ideal_from_json(read_json_arg(ideal_path));
            Polynomial f = parse_polynomial(poly_text, I.ring());
            Polynomial r = normal_form(f, I, opts);
            emit(Json{{"normal_form", r.str()}, {"member", r.is_zero()}}, g.out);
        } else if (*elim) {
            Ideal I = ideal_from_json(read_json_arg(ideal_path));
            std::vector<int> block;
            std::stringstream ss(block_spec);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                int idx = I.ring()->var_index(tok);
                block.push_back(idx >= 0 ? idx : std::stoi(tok));
            }
            Ideal E = eliminate(I, block, opts);
            emit(ideal_to_json(E), g.out);
        } else if (*dimdeg) {
            Ideal I = ideal_from_json(read_json_arg(ideal_path));
            auto dd = projective_dimension_and_degree(I, opts);
            Json out{{"dimension", dd.dimension}};
            if (dd.degree) out["degree"] = *dd.degree;
            emit(out, g.out);
        } else if (*unproject) {
            std::string mech = unproject->get_subcommands().front()->get_name();
            auto [X, D] = read_pair(pair_path, field);
            std::string internal = mech == "extend" ? "extend" : mech;
            auto res = unproject_pair(X, D, g.seed, internal);
            emit(unprojection_to_json(res), g.out);
        } else if (*inv_ci) {
            emit(invariants_to_json(ci_invariants(inv_weights, inv_degrees)), g.out);
        } else if (*inv_lemma) {
            auto inv = invariants_from_json(read_json_arg(inv_json));
            auto dir = lemma_dir == "project" ? TransitionDirection::project : TransitionDirection::unproject;
            emit(invariants_to_json(transition_invariants(inv, lemma_d, dir)), g.out);
        } else if (*inv_cascade) {
            auto inv = invariants_from_json(read_json_arg(inv_json));
            auto dir = lemma_dir == "project" ? TransitionDirection::project : TransitionDirection::unproject;
            Json seq = Json::array();
            for (const auto& s : cascade(inv, lemma_d, cascade_steps, dir))
                seq.push_back(invariants_to_json(s));
            emit(seq, g.out);
        } else if (*v_smooth) {
            VarietySpec spec = spec_from_json(read_json_arg(spec_path), field);
            spec.ambient.field = field;
            auto rep = quasi_smooth(spec, g.seed, opts);
            Json out = singularity_report_to_json(rep);
            out["spec"] = spec_to_json(spec);
            out["seed"] = g.seed;
            emit(out, g.out);
            return rep.is_smooth() ? 0 : 1;
        } else if (*v_nodes) {
            auto [X, D] = read_pair(pair_path, field);
            Rng rng(g.seed);
            Instance dinst = instantiate(D, g.seed);
            auto x = generic_containing(dinst.ideal.generators(),
                                        X.presentation.ci, rng.split("X"));
            Ideal XI(dinst.ideal.ring(), x);
            auto sing = singular_scheme(XI, static_cast<int>(X.presentation.ci.size()), opts);
            auto dd = projective_dimension_and_degree(sing, opts);
            Json out{{"dimension", dd.dimension}, {"seed", g.seed}};
            if (dd.degree) out["degree"] = *dd.degree;
            emit(out, g.out);
        } else if (*v_contain) {
            auto [X, D] = read_pair(pair_path, field);
            Rng rng(g.seed);
            Instance dinst = instantiate(D, g.seed);
            auto x = generic_containing(dinst.ideal.generators(), X.presentation.ci, rng.split("X"));
            Ideal XI(dinst.ideal.ring(), x);
            bool ok = contains(dinst.ideal, XI, opts);
            emit(Json{{"contained", ok}, {"seed", g.seed}}, g.out);
            return ok ? 0 : 1;
        } else if (*v_pfid) {
            auto [X, D] = read_pair(pair_path, field);
            auto res = unproject_pair(X, D, g.seed, "codim3");
            // symbolic identity: recompute the predicted generators
            bool ok = true;
            if (res.matrix) {
                // compare against the prediction built from the inputs
                auto t = Polynomial::variable(res.ring, res.unproj_var);
                std::vector<Polynomial> q, a, b;
                for (const auto& p : res.in_q) q.push_back(p.drop_to(X.ambient.ring()));
                for (const auto& p : res.in_a) a.push_back(p.drop_to(X.ambient.ring()));
                for (const auto& p : res.in_b) b.push_back(p.drop_to(X.ambient.ring()));
                AntisymmetricMatrix M(X.ambient.ring(),
                                      {static_cast<int>(q[1].weighted_degree() + q[2].weighted_degree() -
                                                        q[0].weighted_degree()),
                                       static_cast<int>(q[0].weighted_degree() + q[2].weighted_degree() -
                                                        q[1].weighted_degree()),
                                       static_cast<int>(q[0].weighted_degree() + q[1].weighted_degree() -
                                                        q[2].weighted_degree())});
                M.set(0, 1, q[2]);
                M.set(0, 2, -q[1]);
                M.set(1, 2, q[0]);
                auto predicted = km_predicted_generators(M, a, b, t);
                for (std::size_t i = 0; i < predicted.size(); ++i)
                    if (!(res.y_generators[i] == predicted[i])) ok = false;
            }
            emit(Json{{"identity_holds", ok}, {"seed", g.seed}}, g.out);
            return ok ? 0 : 1;
        } else if (*b_koszul) {
            emit(betti_to_json(koszul_betti(betti_degrees)), g.out);
        } else if (*b_link) {
            BettiTable input = betti_path == "delpezzo6" ? delpezzo6_betti(DelPezzo6Model::p2xp2)
                                                         : betti_from_json(read_json_arg(betti_path));
            int c = link_codim ? link_codim : static_cast<int>(link_ci.size());
            auto full = link_betti_full(input, link_ci, c);
            Json out = betti_to_json(full.reduced);
            if (show_cone) out["cone"] = betti_to_json(full.cone);
            emit(out, g.out);
        } else if (*b_show) {
            BettiTable input = betti_path == "delpezzo6" ? delpezzo6_betti(DelPezzo6Model::p2xp2)
                                                         : betti_from_json(read_json_arg(betti_path));
            std::cout << input.render();
        } else if (*w_build || *w_export) {
            Catalog cat = Catalog::load(g.data_dir);
            std::set<long long> allowed = default_allowed_degrees();
            if (!allowed_degrees.empty()) allowed = std::set<long long>(allowed_degrees.begin(), allowed_degrees.end());
            auto graph = build_web(cat, !no_candidates, allowed);
            if (do_verify) graph = verify_web(cat, std::move(graph), g.seed);
            if (*w_export && web_format == "dot") {
                if (g.out.empty() || g.out == "-")
                    std::cout << export_dot(graph);
                else
                    std::ofstream(g.out) << export_dot(graph);
            } else {
                emit(export_web_json(graph), g.out);
            }
        } else if (*w_cand) {
            Catalog cat = Catalog::load(g.data_dir);
            const FamilyRecord* f = cat.family(family_name);
            if (!f) throw Error("unknown family: " + family_name);
            std::set<long long> allowed = default_allowed_degrees();
            if (!allowed_degrees.empty())
                allowed = std::set<long long>(allowed_degrees.begin(), allowed_degrees.end());
            Json out = Json::array();
            for (const auto& c : candidates(cat, *f, allowed)) {
                const FamilyRecord* t = cat.family(c.family_key);
                out.push_back(Json{{"family", t ? t->names.front() : c.family_key},
                                   {"key", c.family_key},
                                   {"d", c.d},
                                   {"direction",
                                    c.direction == TransitionDirection::unproject ? "unproject" : "project"}});
            }
            emit(out, g.out);
        } else if (*w_repro) {
            Catalog cat = Catalog::load(g.data_dir);
            auto report = reproduce_tables(cat);
            emit(report.to_json(), g.out);
            return report.all_rows_pass() ? 0 : 1;
        } else if (*repro) {
            RunConfig config{g.prime, g.seed, g.budget, g.data_dir, only, jobs};
            auto results = run_paper_checks(config);
            if (report_format == "json") {
                emit(checks_to_json(results, config), g.out);
            } else {
                for (const auto& r : results)
                    std::printf("%-12s %-4s %s%s%s  [%.2fs]\n", r.status_name().c_str(), r.id.c_str(),
                                r.title.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str(),
                                r.seconds);
                if (!g.out.empty()) emit(checks_to_json(results, config), g.out);
            }
            return exit_code_for(results);
        }
        return 0;
    } catch (const BudgetExceededError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
