#include "idealforge/cli.hpp"

#include "idealforge/generators.hpp"
#include "idealforge/oracle.hpp"
#include "idealforge/orbit.hpp"
#include "idealforge/serialize.hpp"
#include "idealforge/suites.hpp"
#include "idealforge/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace idealforge::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

json labels_json(const FiniteLattice& l, uint32_t mask) {
    json out = json::array();
    for (const auto& lab : l.labels_of(mask)) out.push_back(lab);
    return out;
}

json suite_to_json(const SuiteReport& r) {
    return json{{"suite", r.suite}, {"pass", r.pass}, {"seed", r.seed}, {"cases", r.cases}, {"details", r.details}};
}

/// The per-instance lattice verification report (adjunction, the seven
/// consequences, the maximal-ideal conditions, optional invariance and
/// numerical-oracle sections).
json lattice_report(const InclusionInstance& inst, bool with_oracle, double tolerance, uint64_t oracle_seed,
                    bool& pass) {
    GaloisPair p = to_galois_pair(inst);
    json rep;
    rep["instance"] = inst.name;

    AdjunctionResult adj = check_adjunction(p);
    if (adj.ok)
        rep["adjunction"] = "pass";
    else
        rep["adjunction"] = json{{"I", labels_json(p.lat_A, adj.bad_I)},
                                 {"J", labels_json(p.lat_B, adj.bad_J)},
                                 {"J_le_ind_I", adj.lhs},
                                 {"coind_J_le_I", adj.rhs}};

    PropGaloisResult prop = verify_prop_galois(p);
    json items = json::array();
    for (int k = 0; k < 7; ++k) {
        json item{{"item", k + 1}, {"ok", prop.item_ok[k]}};
        item["witness"] = prop.item_ok[k] ? json() : json(prop.witness[k]);
        items.push_back(item);
    }
    rep["prop_items"] = items;

    MaxIdealResult mi = maxideal_report(p);
    rep["thm_conditions"] = json::array({mi.cond[0], mi.cond[1], mi.cond[2], mi.cond[3]});
    rep["thm_conditions_equivalent"] = mi.equivalent;
    if (!mi.bijection.empty()) {
        json bij = json::array();
        for (const auto& [M, J] : mi.bijection)
            bij.push_back(json::array({labels_json(p.lat_A, M), labels_json(p.lat_B, J)}));
        rep["bijection"] = bij;
    } else {
        rep["bijection"] = mi.cond[0] && mi.cond[3] ? json::array() : json();
    }
    rep["non_induced_maximal"] =
        mi.non_induced_maximal ? labels_json(p.lat_B, *mi.non_induced_maximal) : json();

    json maxp = json::array();
    for (uint32_t M : max_coinduced(p)) maxp.push_back(labels_json(p.lat_A, M));
    rep["max_coinduced"] = maxp;

    bool ok = adj.ok && prop.all_ok() && mi.equivalent;

    if (!inst.action.empty()) {
        InvarianceResult inv = coinduced_iff_invariant(inst);
        json co = json::array(), iv = json::array();
        for (uint32_t m : inv.coinduced) co.push_back(labels_json(p.lat_A, m));
        for (uint32_t m : inv.invariant) iv.push_back(labels_json(p.lat_A, m));
        rep["invariance"] = json{{"coinduced", co}, {"invariant", iv}, {"equal", inv.equal}};
        ok = ok && inv.equal;
    }

    if (with_oracle) {
        OracleReport trace = numerical_oracle_check(inst, tolerance);
        OracleReport weighted = numerical_oracle_check(inst, tolerance, oracle_seed);
        rep["oracle"] = json{{"tolerance", tolerance},
                             {"trace", json{{"agree", trace.agree}, {"detail", trace.detail}}},
                             {"randomized_weighting",
                              json{{"agree", weighted.agree}, {"detail", weighted.detail}, {"seed", oracle_seed}}}};
        ok = ok && trace.agree && weighted.agree;
    }

    rep["pass"] = ok;
    pass = ok;
    return rep;
}

int emit(std::ostream& out, json rep, Clock::time_point t0, bool pass) {
    rep["wall_ms"] = ms_since(t0);
    out << rep.dump(2) << "\n";
    return pass ? 0 : 1;
}

Dyadic parse_dyadic_arg(const std::string& s, const char* what) {
    auto d = Dyadic::parse(s);
    if (!d) throw CLI::ValidationError(std::string(what) + ": expected a dyadic like 3/2^3, got '" + s + "'");
    return *d;
}

Rat parse_rat_arg(const std::string& s, const char* what) {
    auto r = Rat::parse(s);
    if (!r) throw CLI::ValidationError(std::string(what) + ": expected a rational like 1/3, got '" + s + "'");
    return *r;
}

Arc parse_arc_arg(const Rat& x, const std::string& lo, const std::string& hi, const char* what) {
    return Arc(x, parse_dyadic_arg(lo, what), parse_dyadic_arg(hi, what));
}

json element_with_checks(const CircleHomeo& g) {
    json out;
    out["element"] = element_to_json(g);
    out["in_F"] = g.in_F();
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Galois-connection and Thompson-group verification suites"};
    app.require_subcommand(1);

    uint64_t seed = 1;
    int cases = 200;

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);

    auto* vlat = verify->add_subcommand("lattice", "Galois-connection checks on an inclusion instance");
    std::string instance_name, instance_file;
    bool with_oracle = false;
    double tolerance = 1e-8;
    vlat->add_option("--instance", instance_name, "built-in instance name");
    vlat->add_option("--file", instance_file, "instance JSON file");
    vlat->add_flag("--oracle", with_oracle, "also run the numerical matrix-model oracle");
    vlat->add_option("--tolerance", tolerance, "relative rank tolerance for the oracle")->capture_default_str();

    auto* vth = verify->add_subcommand("thompson", "property suites for the circle-homeomorphism engine");
    std::string suite;
    int wm = 1, wn = 2;
    vth->add_option("--suite", suite, "relations|cocycle|action|stabilizer|witness")->required();
    vth->add_option("--m", wm, "first modulus (witness suite)");
    vth->add_option("--n", wn, "second modulus (witness suite)");
    vth->add_option("--seed", seed, "PRNG seed (overridden by IDEALFORGE_SEED)");
    vth->add_option("--cases", cases, "number of randomized cases")->capture_default_str();

    // ---- witness ----
    auto* wit = app.add_subcommand("witness", "construct an explicit element and check its contract");
    wit->require_subcommand(1);
    std::string wx = "0", wu1lo, wu1hi, wu2lo, wu2hi, wu3lo, wu3hi, welement, wside = "right", wwlo, wwhi;
    int wslope_m = 1;

    auto* wcompress = wit->add_subcommand("compress", "element of the pointwise stabilizer mapping U1 into U2");
    wcompress->add_option("--x", wx, "basepoint (rational)")->required();
    wcompress->add_option("--u1-lo", wu1lo)->required();
    wcompress->add_option("--u1-hi", wu1hi)->required();
    wcompress->add_option("--u2-lo", wu2lo)->required();
    wcompress->add_option("--u2-hi", wu2hi)->required();

    auto* wseparate = wit->add_subcommand("separate", "element moving U1 off U3 with support missing U2");
    wseparate->add_option("--x", wx)->required();
    wseparate->add_option("--u1-lo", wu1lo)->required();
    wseparate->add_option("--u1-hi", wu1hi)->required();
    wseparate->add_option("--u2-lo", wu2lo)->required();
    wseparate->add_option("--u2-hi", wu2hi)->required();
    wseparate->add_option("--u3-lo", wu3lo)->required();
    wseparate->add_option("--u3-hi", wu3hi)->required();

    auto* wenclose = wit->add_subcommand("enclose", "arc at the basepoint containing the support of an element");
    wenclose->add_option("--x", wx)->required();
    wenclose->add_option("--element", welement, "element JSON or @file")->required();

    auto* wslope = wit->add_subcommand("slopewindow", "element supported in a window with prescribed edge slope");
    wslope->add_option("--window-lo", wwlo)->required();
    wslope->add_option("--window-hi", wwhi)->required();
    wslope->add_option("--side", wside, "left|right")->capture_default_str();
    wslope->add_option("--m", wslope_m, "log2 of the one-sided slope")->required();

    // ---- orbit ----
    auto* orbit_cmd = app.add_subcommand("orbit", "breadth-first orbit of the marked origin");
    int orbit_n = 1;
    std::string denom_bound = "2^4", generators_file;
    orbit_cmd->add_option("--n", orbit_n, "residue modulus")->required();
    orbit_cmd->add_option("--denom-bound", denom_bound, "denominator bound, e.g. 2^4")->capture_default_str();
    orbit_cmd->add_option("--generators", generators_file, "JSON file of named elements");

    // ---- list ----
    auto* list_cmd = app.add_subcommand("list", "enumerate built-in data");
    auto* list_instances = list_cmd->add_subcommand("instances", "built-in inclusion instances");

    app.name("idealforge");
    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (const char* env_seed = std::getenv("IDEALFORGE_SEED")) {
        try {
            seed = std::stoull(env_seed);
        } catch (...) {
            err << "error: IDEALFORGE_SEED is not an integer\n";
            return 2;
        }
    }

    Clock::time_point t0 = Clock::now();
    try {
        if (vlat->parsed()) {
            std::vector<InclusionInstance> targets;
            if (!instance_name.empty() && !instance_file.empty()) {
                err << "error: pass either --instance or --file, not both\n";
                return 2;
            }
            if (!instance_name.empty()) {
                targets.push_back(builtin_instance(instance_name));
            } else if (!instance_file.empty()) {
                std::ifstream in(instance_file);
                if (!in) {
                    err << "error: cannot open " << instance_file << "\n";
                    return 2;
                }
                targets.push_back(instance_from_json(json::parse(in), instance_file));
            } else {
                targets = builtin_catalog();
            }
            bool pass = true;
            json reports = json::array();
            for (const auto& inst : targets) {
                bool p = true;
                reports.push_back(lattice_report(inst, with_oracle, tolerance, seed, p));
                pass = pass && p;
            }
            json rep = targets.size() == 1 ? reports[0] : json{{"reports", reports}, {"pass", pass}};
            return emit(out, rep, t0, pass);
        }

        if (vth->parsed()) {
            SuiteReport r;
            if (suite == "relations")
                r = run_relations_suite();
            else if (suite == "cocycle")
                r = run_cocycle_suite(seed, cases);
            else if (suite == "action")
                r = run_action_suite(seed, cases);
            else if (suite == "stabilizer")
                r = run_stabilizer_suite(seed, cases);
            else if (suite == "witness")
                r = run_witness_suite(wm, wn);
            else {
                err << "error: unknown suite '" << suite << "'\n";
                return 2;
            }
            return emit(out, suite_to_json(r), t0, r.pass);
        }

        if (wcompress->parsed() || wseparate->parsed()) {
            Rat x = parse_rat_arg(wx, "--x");
            Arc u1 = parse_arc_arg(x, wu1lo, wu1hi, "--u1");
            Arc u2 = parse_arc_arg(x, wu2lo, wu2hi, "--u2");
            CircleHomeo g = wcompress->parsed() ? compress_witness(x, u1, u2)
                                                : separate_witness(x, u1, u2, parse_arc_arg(x, wu3lo, wu3hi, "--u3"));
            json rep = element_with_checks(g);
            rep["witness"] = wcompress->parsed() ? "compress" : "separate";
            rep["fixes_neighborhood_of_x"] = g.fixes_neighborhood_of(x);
            rep["pass"] = rep["fixes_neighborhood_of_x"].get<bool>();
            return emit(out, rep, t0, rep["pass"].get<bool>());
        }

        if (wenclose->parsed()) {
            Rat x = parse_rat_arg(wx, "--x");
            json elem_json;
            if (!welement.empty() && welement[0] == '@') {
                std::ifstream in(welement.substr(1));
                if (!in) {
                    err << "error: cannot open " << welement.substr(1) << "\n";
                    return 2;
                }
                elem_json = json::parse(in);
            } else {
                elem_json = json::parse(welement);
            }
            CircleHomeo g = element_from_json(elem_json);
            Arc u = enclosing_arc_witness(x, g);
            json rep{{"witness", "enclose"},
                     {"arc", {u.a.str(), u.b.str()}},
                     {"basepoint", u.basepoint.str()},
                     {"pass", true}};
            return emit(out, rep, t0, true);
        }

        if (wslope->parsed()) {
            WindowSide side;
            if (wside == "left")
                side = WindowSide::left;
            else if (wside == "right")
                side = WindowSide::right;
            else {
                err << "error: --side must be left or right\n";
                return 2;
            }
            Dyadic lo = parse_dyadic_arg(wwlo, "--window-lo");
            Dyadic hi = parse_dyadic_arg(wwhi, "--window-hi");
            CircleHomeo g = slope_window_witness(lo, hi, side, wslope_m);
            LogSlopes at_edge = g.log_slopes_at(side == WindowSide::right ? lo : hi);
            json rep = element_with_checks(g);
            rep["witness"] = "slopewindow";
            rep["edge_slopes"] = {at_edge.minus, at_edge.plus};
            bool ok = side == WindowSide::right ? at_edge.plus == wslope_m : at_edge.minus == wslope_m;
            rep["pass"] = ok;
            return emit(out, rep, t0, ok);
        }

        if (orbit_cmd->parsed()) {
            if (orbit_n < 1) {
                err << "error: --n must be positive\n";
                return 2;
            }
            // Accepts "2^K" or a plain power of two.
            int K = -1;
            if (denom_bound.rfind("2^", 0) == 0) {
                try {
                    K = std::stoi(denom_bound.substr(2));
                } catch (...) {
                }
            } else if (auto db = Dyadic::parse(denom_bound);
                       db && db->exp() == 0 && db->num() > 0 && (db->num() & (db->num() - 1)) == 0) {
                K = 0;
                for (BigInt v = db->num(); v > 1; v >>= 1) ++K;
            }
            if (K < 0 || K > 30) {
                err << "error: --denom-bound must be a power of two like 2^4\n";
                return 2;
            }
            std::vector<CircleHomeo> gens;
            if (generators_file.empty()) {
                gens = generators_T();
            } else {
                std::ifstream in(generators_file);
                if (!in) {
                    err << "error: cannot open " << generators_file << "\n";
                    return 2;
                }
                for (const auto& [name, g] : elements_from_json(json::parse(in))) gens.push_back(g);
            }
            auto orbit = orbit_explore(gens, MarkedPoint(Dyadic(0), 0, 0, orbit_n), K);
            json pts = json::array();
            for (const auto& p : orbit) pts.push_back(marked_point_to_json(p));
            size_t full = (size_t(1) << K) * orbit_n * orbit_n;
            json rep{{"n", orbit_n},
                     {"denom_bound", "2^" + std::to_string(K)},
                     {"size", orbit.size()},
                     {"full_set_size", full},
                     {"saturated", orbit.size() == full},
                     {"orbit", pts}};
            return emit(out, rep, t0, true);
        }

        if (list_instances->parsed()) {
            json items = json::array();
            for (const auto& inst : builtin_catalog()) items.push_back(instance_to_json(inst));
            return emit(out, json{{"instances", items}}, t0, true);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace idealforge::cli
