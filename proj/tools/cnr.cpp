// Command-line front end: psi evaluation through the independent backends,
// facet/f-vector runs, the Gr(2,5) classifier and sweep, sagbi lifting
// reports, tree/verlinde/zonotopal queries, and a cross-check harness.

#include <iostream>
#include <mutex>

#include "CLI11.hpp"

#include "cnr/fiber.hpp"
#include "cnr/formulas.hpp"
#include "cnr/gr25.hpp"
#include "cnr/json_io.hpp"
#include "cnr/parallel.hpp"
#include "cnr/presets.hpp"
#include "cnr/sagbi.hpp"

using namespace cnr;

namespace {

struct Options {
    bool json = false;
    uint64_t seed = 1;
    int workers = 0;
    bool enable_markov = false;
};

struct PresetContext {
    std::string name;
    ConfigInput cfg;
    bool generic = false;
    bool cayley_formula = false;
    std::vector<XYMonomial> in_monomials;  // sagbi data when available
    int dependent_yvar = -1;

    int d() const { return cfg.over_t ? cfg.t.d : cfg.q.d; }
    int n() const { return cfg.over_t ? cfg.t.n : cfg.q.n; }

    mutable std::shared_ptr<FiberCounter> counter;
    mutable DegreeMap dmap;
    const FiberCounter& fiber_counter() const {
        if (!counter) {
            auto* self = const_cast<PresetContext*>(this);
            self->dmap = degree_map_for(in_monomials, n(), dependent_yvar);
            PolyCone cone = initial_cone(in_monomials, dmap);
            self->counter = std::make_shared<FiberCounter>(cone, dmap);
        }
        return *counter;
    }
};

std::vector<XYMonomial> parse_monomials(const std::vector<std::string>& strs, int n) {
    std::vector<XYMonomial> out;
    for (const auto& s : strs) out.push_back(XYMonomial::parse(s, n));
    return out;
}

PresetContext load_preset(const std::string& name, const Options& opt) {
    PresetContext ctx;
    ctx.name = name;
    if (name == "cayley" || name == "zono-ex") {
        ctx.cfg.over_t = false;
        if (name == "cayley") {
            ctx.cfg.q = presets::cayley();
        } else {
            ctx.cfg.q = arrangement_from_C(presets::zono_example_C()).A;
        }
        ctx.cayley_formula = true;
        if (name == "cayley")
            ctx.in_monomials = parse_monomials(presets::cayley_initial_monomials(), 6);
    } else if (name == "dp3-generic") {
        ctx.cfg.over_t = false;
        ctx.cfg.q = presets::generic_points(3, 6, opt.seed);
        ctx.generic = true;
    } else if (name == "cubic-sagbi") {
        ctx.cfg.over_t = true;
        ctx.cfg.t = presets::cubic_sagbi();
        ctx.generic = true;
        ctx.in_monomials = [&] {
            GeneratorSet set = delpezzo_generators(ctx.cfg.t);
            return set.initial_monomials();
        }();
    } else if (name == "dp2-sagbi") {
        ctx.cfg.over_t = true;
        ctx.cfg.t = presets::dp2_sagbi();
        ctx.generic = true;
        ctx.in_monomials = [&] {
            GeneratorSet set = delpezzo_generators(ctx.cfg.t);
            return set.initial_monomials();
        }();
    } else if (name.rfind("type", 0) == 0 && name.size() == 5) {
        int t = name[4] - '0';
        if (t < 1 || t > 7) throw ParseError("unknown preset " + name);
        Metric5 m;
        const auto& d = presets::gr25_type_metrics()[t - 1];
        std::copy(d.begin(), d.end(), m.d.begin());
        TMatrix B = realize_metric(m);
        ctx.cfg.over_t = true;
        ctx.cfg.t = config_with_kernel_rowspan(B);
        ctx.generic = true;
        ctx.in_monomials = grassmann5_generators(B).initial_monomials();
        if (t == 6) ctx.dependent_yvar = 2;  // the paper's (x, y) = (b_1, b_4)
    } else if (name == "arrangement-p3") {
        TMatrix Ct = presets::arrangement_p3_C();
        TConfig At = arrangement_normals_t(Ct);
        ctx.cfg.over_t = true;
        ctx.cfg.t = At;
        std::vector<XYMonomial> monos;
        for (int i = 0; i < 10; ++i) {
            XYMonomial xm(10);
            xm.a[i] = 1;
            monos.push_back(xm);
        }
        for (const auto& deg : presets::arrangement_p3_plane_degrees()) {
            auto in = initial_monomial(generator_from_degree(At, deg));
            if (!in) throw std::runtime_error("arrangement generator not moneric");
            monos.push_back(*in);
        }
        ctx.in_monomials = std::move(monos);
    } else if (name.rfind("generic:", 0) == 0) {
        size_t comma = name.find(',', 8);
        int d = std::stoi(name.substr(8, comma - 8));
        int n = std::stoi(name.substr(comma + 1));
        ctx.cfg.over_t = false;
        ctx.cfg.q = presets::generic_points(d, n, opt.seed);
        ctx.generic = true;
    } else {
        throw ParseError("unknown preset " + name);
    }
    return ctx;
}

PresetContext context_from_matrix(const std::string& path) {
    PresetContext ctx;
    ctx.name = "matrix:" + path;
    ctx.cfg = load_config(path);
    return ctx;
}

std::vector<std::string> applicable_backends(const PresetContext& ctx) {
    std::vector<std::string> out{"oracle"};
    long long dummy;
    if (ctx.cayley_formula ||
        psi_formula(ctx.d(), ctx.n(), ctx.generic, DegreeVector(0, std::vector<int>(ctx.n(), 0)),
                    dummy))
        out.push_back("formula");
    if (!ctx.in_monomials.empty()) out.push_back("cone");
    if (ctx.n() == ctx.d() + 2) out.push_back("tree");
    return out;
}

long long eval_backend(const PresetContext& ctx, const std::string& backend,
                       const DegreeVector& deg) {
    if (backend == "oracle")
        return ctx.cfg.over_t ? psi_direct(ctx.cfg.t, deg) : psi_direct(ctx.cfg.q, deg);
    if (backend == "formula") {
        if (ctx.cayley_formula) return psi_cayley(deg.r, deg.u);
        long long out;
        std::string which;
        if (!psi_formula(ctx.d(), ctx.n(), ctx.generic, deg, out, &which))
            throw std::runtime_error("no closed formula covers d=" + std::to_string(ctx.d()) +
                                     ", n=" + std::to_string(ctx.n()) +
                                     (ctx.generic ? " (generic)" : " (special)"));
        return out;
    }
    if (backend == "cone") {
        if (ctx.in_monomials.empty())
            throw std::runtime_error("no sagbi cone attached to this input");
        return ctx.fiber_counter().count(deg);
    }
    if (backend == "tree") {
        if (ctx.n() != ctx.d() + 2) throw std::runtime_error("tree backend needs n = d+2");
        return decoration_count(TrivalentTree::caterpillar(ctx.n()), deg);
    }
    if (backend == "gt") {
        if (ctx.n() != ctx.d() + 1) throw std::runtime_error("gt backend needs n = d+1");
        return gt_count(deg);
    }
    throw ParseError("unknown backend " + backend);
}

struct GridSpec {
    int rmax = -1;
    int umax = -1;
    bool active() const { return rmax >= 0; }
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    if (s.empty()) return g;
    // "r<=4,u<=2"
    size_t rpos = s.find("r<=");
    size_t upos = s.find("u<=");
    if (rpos == std::string::npos || upos == std::string::npos)
        throw ParseError("grid must look like r<=4,u<=2");
    g.rmax = std::stoi(s.substr(rpos + 3));
    g.umax = std::stoi(s.substr(upos + 3));
    return g;
}

std::vector<DegreeVector> grid_degrees(int n, const GridSpec& g) {
    std::vector<DegreeVector> out;
    std::vector<int> u(n, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            for (int r = 0; r <= g.rmax; ++r) out.emplace_back(r, u);
            return;
        }
        for (int v = 0; v <= g.umax; ++v) {
            u[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

int run_psi_like(const PresetContext& ctx, const std::vector<std::string>& backends,
                 const std::vector<DegreeVector>& degrees, const Options& opt,
                 const std::string& command) {
    Json report;
    report["command"] = command;
    report["input"] = ctx.name;
    report["backends"] = backends;
    Json results = Json::array();
    std::string verdict = "ok";
    DegreeVector witness;
    std::mutex mu;
    std::vector<Json> rows(degrees.size());
    std::atomic<bool> mismatch{false};
    parallel_for(degrees.size(), opt.workers, [&](size_t i) {
        const DegreeVector& deg = degrees[i];
        Json row;
        row["degree"] = deg.str();
        long long first = 0;
        bool have_first = false, agree = true;
        for (const auto& b : backends) {
            long long v = eval_backend(ctx, b, deg);
            row[b] = v;
            if (!have_first) {
                first = v;
                have_first = true;
            } else if (v != first) {
                agree = false;
            }
        }
        if (!agree) {
            std::lock_guard<std::mutex> lock(mu);
            mismatch = true;
            witness = deg;
        }
        rows[i] = std::move(row);
    });
    for (auto& r : rows) results.push_back(std::move(r));
    if (mismatch) {
        verdict = "mismatch";
        report["witness"] = witness.str();
    }
    report["agreement"] = verdict;
    report["results"] = results;
    if (opt.json) {
        std::cout << report.dump(2) << "\n";
    } else {
        for (const auto& row : results) {
            std::cout << row["degree"].get<std::string>() << " :";
            for (const auto& b : backends)
                std::cout << " " << b << "=" << row[b].get<long long>();
            std::cout << "\n";
        }
        std::cout << "agreement: " << verdict << "\n";
        if (mismatch) std::cout << "witness: " << witness.str() << "\n";
    }
    return mismatch ? 2 : 0;
}

std::vector<std::vector<BigInt>> preset_cone_generators(const PresetContext& ctx) {
    if (ctx.in_monomials.empty())
        throw std::runtime_error("preset has no attached monomial cone");
    DegreeMap dm = degree_map_for(ctx.in_monomials, ctx.n(), ctx.dependent_yvar);
    std::vector<std::vector<BigInt>> gens;
    for (const auto& m : ctx.in_monomials) gens.push_back(dm.embed(m));
    return gens;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cox-Nagata ring toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--seed", opt.seed, "seed for random generic configurations");
    app.add_option("--workers", opt.workers, "worker threads (0 = all cores)");
    app.add_flag("--enable-markov", opt.enable_markov, "allow large markov computations");

    std::string preset, matrix_path, degree_str, grid_str, backend = "oracle";
    bool all_backends = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--preset", preset,
                        "dp3-generic|cayley|type1..7|cubic-sagbi|dp2-sagbi|zono-ex|"
                        "arrangement-p3|generic:d,n");
        cmd->add_option("--matrix", matrix_path, "configuration JSON file");
    };

    auto* psi = app.add_subcommand("psi", "evaluate the counting function");
    add_input(psi);
    psi->add_option("--degree", degree_str, "degree literal r,u1,...,un");
    psi->add_option("--grid", grid_str, "sweep degrees r<=R,u<=U");
    psi->add_option("--backend", backend, "oracle|formula|cone|tree|gt");
    psi->add_flag("--all-backends", all_backends, "cross-check all applicable backends");

    auto* facets_cmd = app.add_subcommand("facets", "facet enumeration by double description");
    std::string gens_path;
    bool with_fvec = false;
    add_input(facets_cmd);
    facets_cmd->add_option("--generators", gens_path, "JSON {\"generators\": [[...]]}");
    facets_cmd->add_flag("--f-vector", with_fvec, "also compute the f-vector");

    auto* fvec_cmd = app.add_subcommand("f-vector", "face counts of a cone");
    add_input(fvec_cmd);
    fvec_cmd->add_option("--generators", gens_path, "JSON {\"generators\": [[...]]}");

    auto* classify = app.add_subcommand("classify-gr25", "classify a Trop Gr(2,5) metric");
    std::string metric_str;
    classify->add_option("--metric", metric_str, "ten distances d12,...,d45")->required();

    auto* sweep = app.add_subcommand("sweep-gr25", "sweep moneric classes up to a bound");
    int bound = 8;
    sweep->add_option("--bound", bound, "metric entry bound");

    auto* sagbi_cmd = app.add_subcommand("sagbi-check", "binomial and lifting report");
    add_input(sagbi_cmd);
    sagbi_cmd->add_option("--metric", metric_str, "n=5 metric instead of a preset");
    int sagbi_n = 0;
    sagbi_cmd->add_option("--n", sagbi_n, "5, 6 or 7 (for --matrix inputs)");

    auto* tree_cmd = app.add_subcommand("tree-psi", "decoration count on a trivalent tree");
    std::string tree_spec;
    tree_cmd->add_option("--tree", tree_spec, "caterpillar:n or splits JSON")->required();
    tree_cmd->add_option("--degree", degree_str, "degree literal")->required();

    auto* verlinde_cmd = app.add_subcommand("verlinde", "Verlinde trigonometric sum");
    int vd = 2;
    std::string vl = "1";
    verlinde_cmd->add_option("--d", vd, "dimension d")->required();
    verlinde_cmd->add_option("--l", vl, "level (integer or half-integer like 1/2)")->required();

    auto* zono_cmd = app.add_subcommand("zonotopal", "matroid formula for psi(r, Cv)");
    std::string cpath, vstr;
    int zr = 0;
    bool zsum = false;
    zono_cmd->add_option("--C", cpath, "JSON with {\"C\": [[...]]}");
    zono_cmd->add_option("--v", vstr, "v vector, comma separated")->required();
    zono_cmd->add_option("--r", zr, "degree r");
    zono_cmd->add_flag("--sum", zsum, "emit sum over r and the product identity value");

    auto* cross = app.add_subcommand("cross-check", "backend agreement over a grid");
    add_input(cross);
    cross->add_option("--grid", grid_str, "sweep degrees r<=R,u<=U")->required();
    std::string backends_csv;
    cross->add_option("--backends", backends_csv, "comma-separated backend list");

    auto* markov_cmd = app.add_subcommand("markov", "minimal binomial generators (flagged)");
    add_input(markov_cmd);
    markov_cmd->add_option("--metric", metric_str, "n=5 metric");
    int markov_cap = 3;
    markov_cmd->add_option("--degree-cap", markov_cap, "total degree cap");

    CLI11_PARSE(app, argc, argv);

    try {
        auto make_context = [&]() -> PresetContext {
            if (!preset.empty()) return load_preset(preset, opt);
            if (!matrix_path.empty()) return context_from_matrix(matrix_path);
            throw ParseError("need --preset or --matrix");
        };

        if (psi->parsed()) {
            PresetContext ctx = make_context();
            std::vector<std::string> backends;
            if (all_backends) backends = applicable_backends(ctx);
            else backends.push_back(backend);
            std::vector<DegreeVector> degrees;
            GridSpec grid = parse_grid(grid_str);
            if (grid.active()) degrees = grid_degrees(ctx.n(), grid);
            if (!degree_str.empty()) degrees.push_back(DegreeVector::parse(degree_str));
            if (degrees.empty()) throw ParseError("need --degree or --grid");
            return run_psi_like(ctx, backends, degrees, opt, "psi");
        }
        if (facets_cmd->parsed() || fvec_cmd->parsed()) {
            std::vector<std::vector<BigInt>> gens;
            if (!gens_path.empty()) {
                std::ifstream f(gens_path);
                if (!f) throw ParseError("cannot open " + gens_path);
                Json j;
                f >> j;
                gens = parse_generators(j);
            } else {
                PresetContext ctx = make_context();
                gens = preset_cone_generators(ctx);
            }
            PolyCone cone = dd_facets(gens);
            bool want_f = fvec_cmd->parsed() || with_fvec;
            Json out = cone_to_json(cone, want_f);
            if (opt.json) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "ambient dimension " << cone.ambient_dim << ", "
                          << cone.facets.size() << " facets\n";
                if (want_f) {
                    std::cout << "f-vector:";
                    for (const auto& x : out["f_vector"]) std::cout << " " << x;
                    std::cout << "\n";
                }
                if (facets_cmd->parsed())
                    for (const auto& row : out["facets"]) std::cout << row.dump() << "\n";
            }
            return 0;
        }
        if (classify->parsed()) {
            Metric5 m = Metric5::parse(metric_str);
            if (!tropical_plucker_check(m)) {
                std::cout << (opt.json ? "{\"error\":\"not in Trop Gr(2,5)\"}"
                                       : "not in Trop Gr(2,5)")
                          << "\n";
                return 2;
            }
            ClassifyResult res = classify_moneric(m);
            Json out;
            out["metric"] = m.str();
            out["moneric"] = res.moneric;
            if (res.moneric) {
                out["type"] = res.cls.type_id;
                out["sagbi"] = res.cls.sagbi;
                Json inF = Json::array();
                for (const auto& mono : res.cls.initial_monomials) inF.push_back(mono.str());
                out["in_F"] = inF;
            }
            std::cout << (opt.json ? out.dump(2) : out.dump()) << "\n";
            return 0;
        }
        if (sweep->parsed()) {
            SweepResult res = enumerate_moneric_classes(bound, opt.workers);
            Json out;
            out["bound"] = bound;
            out["classes"] = res.classes.size();
            out["metrics_visited"] = res.metrics_visited;
            out["moneric_metrics"] = res.moneric_metrics;
            out["type_tally"] = res.type_tally;
            std::set<uint32_t> canon;
            for (uint32_t c : res.classes) canon.insert(canonical_class_code(c));
            out["classes_mod_s5"] = canon.size();
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (sagbi_cmd->parsed()) {
            PresetContext ctx;
            if (!metric_str.empty()) {
                Metric5 m = Metric5::parse(metric_str);
                TMatrix B = realize_metric(m);
                ctx.cfg.over_t = true;
                ctx.cfg.t = config_with_kernel_rowspan(B);
                ctx.in_monomials = grassmann5_generators(B).initial_monomials();
                ctx.name = "metric:" + metric_str;
            } else if (!matrix_path.empty() && sagbi_n != 0) {
                std::ifstream f(matrix_path);
                Json j;
                f >> j;
                TMatrix B = parse_tmatrix(j, j.contains("A") ? "A" : "M");
                if (B.rows() == 2 && sagbi_n == 5) {
                    ctx.cfg.over_t = true;
                    ctx.cfg.t = config_with_kernel_rowspan(B);
                    ctx.in_monomials = grassmann5_generators(B).initial_monomials();
                } else {
                    ctx.cfg.over_t = true;
                    ctx.cfg.t.d = B.rows();
                    ctx.cfg.t.n = B.cols();
                    ctx.cfg.t.A = B;
                    ctx.in_monomials = delpezzo_generators(ctx.cfg.t).initial_monomials();
                }
                ctx.name = "matrix:" + matrix_path;
            } else {
                ctx = make_context();
            }
            if (ctx.in_monomials.empty()) throw ParseError("no generator data for sagbi-check");
            BinomialReport report = quadratic_binomials(ctx.in_monomials);
            LiftMode mode = ctx.n() >= 7 ? LiftMode::certified : LiftMode::exact;
            LiftingReport lifting = lifting_report(ctx.cfg.t, report, mode, opt.workers);
            Json out;
            out["input"] = ctx.name;
            out["binomials"] = report.total_binomials();
            out["syzygy_degrees"] = report.degrees.size();
            Json rows = Json::array();
            for (const auto& [deg, lifts] : lifting.degrees) {
                const auto& info = report.degrees.at(deg);
                rows.push_back(Json{{"degree", deg.str()},
                                    {"binomials", info.binomials()},
                                    {"images", info.distinct_images},
                                    {"lifts", lifts}});
            }
            out["degrees"] = rows;
            out["sagbi"] = lifting.all_lift;
            std::cout << out.dump(2) << "\n";
            return lifting.all_lift ? 0 : 2;
        }
        if (tree_cmd->parsed()) {
            TrivalentTree tree = parse_tree(tree_spec);
            DegreeVector deg = DegreeVector::parse(degree_str);
            std::cout << decoration_count(tree, deg) << "\n";
            return 0;
        }
        if (verlinde_cmd->parsed()) {
            TScalar l = TScalar::parse(vl);
            std::cout << verlinde(vd, l.rational_value()) << "\n";
            return 0;
        }
        if (zono_cmd->parsed()) {
            QMatrix C = cpath.empty() ? presets::zono_example_C() : [&] {
                std::ifstream f(cpath);
                if (!f) throw ParseError("cannot open " + cpath);
                Json j;
                f >> j;
                return parse_qmatrix(j, "C");
            }();
            ZonotopalConfig cfg = arrangement_from_C(C);
            std::vector<int> v;
            {
                DegreeVector dv = DegreeVector::parse("0," + vstr);
                v = dv.u;
            }
            if (zsum) {
                long long total = 0, vsum = 0;
                for (int x : v) vsum += x;
                for (int r = 0; r <= vsum; ++r) total += psi_zonotopal(cfg, r, v);
                LinearMatroid matroid(cfg.C);
                long long poly = 0;
                for (uint32_t I = 0; I < (1u << cfg.m); ++I) {
                    if (!matroid.independent(I)) continue;
                    long long prod = 1;
                    for (int k = 0; k < cfg.m; ++k)
                        if ((I >> k) & 1) prod *= v[k];
                    poly += prod;
                }
                Json out{{"sum_over_r", total}, {"independent_set_polynomial", poly}};
                std::cout << out.dump() << "\n";
                return total == poly ? 0 : 2;
            }
            std::cout << psi_zonotopal(cfg, zr, v) << "\n";
            return 0;
        }
        if (cross->parsed()) {
            PresetContext ctx = make_context();
            std::vector<std::string> backends;
            if (backends_csv.empty()) {
                backends = applicable_backends(ctx);
            } else {
                size_t pos = 0;
                while (pos < backends_csv.size()) {
                    size_t comma = backends_csv.find(',', pos);
                    if (comma == std::string::npos) comma = backends_csv.size();
                    backends.push_back(backends_csv.substr(pos, comma - pos));
                    pos = comma + 1;
                }
            }
            GridSpec grid = parse_grid(grid_str);
            std::vector<DegreeVector> degrees = grid_degrees(ctx.n(), grid);
            return run_psi_like(ctx, backends, degrees, opt, "cross-check");
        }
        if (markov_cmd->parsed()) {
            PresetContext ctx;
            if (!metric_str.empty()) {
                Metric5 m = Metric5::parse(metric_str);
                TMatrix B = realize_metric(m);
                ctx.in_monomials = grassmann5_generators(B).initial_monomials();
                ctx.name = "metric:" + metric_str;
            } else {
                ctx = make_context();
            }
            MarkovResult res =
                markov_basis(ctx.in_monomials, markov_cap, opt.enable_markov);
            Json out;
            out["input"] = ctx.name;
            out["count_by_degree"] = res.count_by_degree;
            out["total"] = res.basis.size();
            out["degree_cap"] = res.degree_cap;
            out["new_at_cap"] = res.new_at_cap;
            if (res.new_at_cap) out["note"] = "inconclusive above the degree cap";
            std::cout << out.dump(2) << "\n";
            return 0;
        }
    } catch (const InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
