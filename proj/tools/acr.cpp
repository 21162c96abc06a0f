#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "acr/cache.hpp"
#include "acr/canonical.hpp"
#include "acr/cutrank.hpp"
#include "acr/enumerate.hpp"
#include "acr/error.hpp"
#include "acr/families.hpp"
#include "acr/graph_io.hpp"
#include "acr/local_ops.hpp"
#include "acr/named.hpp"
#include "acr/obstructions.hpp"
#include "acr/parameters.hpp"
#include "acr/report.hpp"
#include "acr/suites.hpp"

using namespace acr;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kCapacity = 3 };

struct GraphArgs {
    std::string g6;
    std::string edges;
    std::string named;
};

void add_graph_flags(CLI::App* cmd, GraphArgs& a) {
    cmd->add_option("--g6", a.g6, "graph in graph6");
    cmd->add_option("--edges", a.edges, "edge list \"n; u-v, ...\"");
    cmd->add_option("--named", a.named, "named graph, e.g. C5, P5,1, K3,3");
}

Graph read_graph(const GraphArgs& a) {
    const int given = !a.g6.empty() + !a.edges.empty() + !a.named.empty();
    if (given != 1) throw ParameterError("give exactly one of --g6, --edges, --named");
    if (!a.g6.empty()) return parse_graph6(a.g6);
    if (!a.edges.empty()) return parse_edge_list(a.edges);
    return parse_named(a.named);
}

// graph6 first, then a name, then an edge list
Graph read_any(const std::string& text) {
    try {
        return parse_graph6(text);
    } catch (const ParseError&) {
    }
    try {
        return parse_named(text);
    } catch (const Error&) {
    }
    return parse_edge_list(text);
}

Word parse_mask(const std::string& text) {
    std::size_t used = 0;
    Word m = 0;
    try {
        if (text.rfind("0b", 0) == 0) {
            m = std::stoull(text.substr(2), &used, 2);
            used += 2;
        } else {
            m = std::stoull(text, &used, 0);
        }
    } catch (const std::exception&) {
        throw ParseError("invalid vertex mask '" + text + "'", 0);
    }
    if (used != text.size()) throw ParseError("invalid vertex mask '" + text + "'", used);
    return m;
}

ThresholdMode parse_mode(const std::string& m) {
    if (m == "le") return ThresholdMode::AtMost;
    if (m == "lt") return ThresholdMode::LessThan;
    throw ParameterError("--mode must be le or lt");
}

std::string dyadic_line(const Dyadic& d) { return d.to_string() + "\t" + d.to_pow2_string() + "\t" + d.to_decimal(); }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json tagged(const std::string& command, const Json& body) {
    Json out = {{"command", command}};
    for (const auto& [k, v] : body.items()) out[k] = v;
    return out;
}

Dyadic cached_average(const Graph& g, Cache& cache, const EngineOptions& engine) {
    // keyed by canonical code, so only up to the canonical cap
    if (!cache.enabled() || g.order() > kCanonicalCap) return average_cut_rank(g, engine);
    const std::string key = "avg:" + canonical_code(g);
    if (auto hit = cache.get(key)) return Dyadic::parse(*hit);
    const Dyadic d = average_cut_rank(g, engine);
    cache.put(key, d.to_pow2_string());
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acr: average cut-rank of graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    int workers = 1;
    std::string cache_path;
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--cache", cache_path, "on-disk cache file");

    GraphArgs graph_args;
    std::string what = "avg";
    std::string set_mask;
    auto* compute = app.add_subcommand("compute", "compute a quantity of one graph");
    add_graph_flags(compute, graph_args);
    compute->add_option("--what", what, "avg | max | cutrank | params")
        ->check(CLI::IsMember({"avg", "max", "cutrank", "params"}));
    compute->add_option("--set", set_mask, "vertex mask for cutrank, e.g. 0b0101");

    std::string suite;
    SuiteOptions so;
    std::string alpha_text;
    std::string eps_text;
    std::string mode_text = "le";
    std::optional<int> max_n;
    std::optional<int> n_opt;
    std::optional<int> samples;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", max_n, "largest graph order examined");
    verify->add_option("--max-param", so.max_param, "largest family parameter");
    verify->add_option("--alpha", alpha_text, "threshold p/2^q");
    verify->add_option("--mode", mode_text, "le | lt");
    verify->add_option("--eps", eps_text, "family offset p/2^q");
    verify->add_option("--n", n_opt, "family index");
    verify->add_option("--seed", so.seed, "seed for randomized checks");
    verify->add_option("--samples", samples, "number of random samples");
    verify->add_option("--fixtures", so.fixtures_dir, "fixture directory");

    std::string family_json;
    int family_n = 0;
    auto* family = app.add_subcommand("family", "build F_{eps+n}");
    family->add_option("--eps", eps_text, "eps in [0, 1)")->required();
    family->add_option("--n", family_n, "n in [0, 5]")->required();
    family->add_option("--sidecar", family_json, "also write the JSON report to this file");

    int xseq_n = 0;
    auto* xseq = app.add_subcommand("xseq", "x_n(eps)");
    xseq->add_option("--eps", eps_text, "eps in [0, 1)")->required();
    xseq->add_option("--n", xseq_n, "n >= 0")->required()->check(CLI::NonNegativeNumber);

    std::size_t orbit_cap = 200000;
    auto* orbit_cmd = app.add_subcommand("orbit", "local-equivalence class up to isomorphism");
    add_graph_flags(orbit_cmd, graph_args);
    orbit_cmd->add_option("--cap", orbit_cap, "classes explored before truncating");

    std::string minor_text;
    std::string host_text;
    auto* vm = app.add_subcommand("vm", "vertex-minor test");
    vm->add_option("--minor", minor_text, "graph6, name or edge list")->required();
    vm->add_option("--host", host_text, "graph6, name or edge list")->required();

    int enum_n = 0;
    auto* enumerate = app.add_subcommand("enumerate", "one graph per isomorphism class");
    enumerate->add_option("--n", enum_n, "order")->required()->check(CLI::Range(0, kEnumerationCap));

    std::string fixture_path;
    auto* obs = app.add_subcommand("obstructions", "minimal graphs above a threshold");
    obs->add_option("--alpha", alpha_text, "threshold p/2^q")->required();
    obs->add_option("--mode", mode_text, "le | lt");
    obs->add_option("--max-n", max_n, "largest order (<= 8)");
    obs->add_option("--fixture", fixture_path, "expected graph list to diff against");

    std::string cap_text = "3/2";
    auto* census = app.add_subcommand("census", "distinct Eρ values up to a cap");
    census->add_option("--max-n", max_n, "largest order");
    census->add_option("--cap", cap_text, "largest value listed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Cache cache(cache_path);
        EngineOptions engine;
        engine.workers = workers;
        int status = kOk;

        if (compute->parsed()) {
            const Graph g = read_graph(graph_args);
            Json out = {{"command", "compute"}, {"graph", graph_json(g)}, {"what", what}};
            if (what == "avg") {
                const Dyadic d = cached_average(g, cache, engine);
                out["avg"] = to_json(d);
                if (!json) std::cout << dyadic_line(d) << '\n';
            } else if (what == "max") {
                const int m = max_cut_rank(g, engine);
                out["max_cut_rank"] = m;
                if (!json) std::cout << m << '\n';
            } else if (what == "cutrank") {
                if (set_mask.empty()) throw ParameterError("--what cutrank needs --set");
                const Word m = parse_mask(set_mask);
                if ((m & ~low_bits(g.order())) != 0) throw ParameterError("--set names a vertex outside the graph");
                const int r = cut_rank(g, VertexSet(m));
                out["set"] = VertexSet(m).to_vector();
                out["cut_rank"] = r;
                if (!json) std::cout << r << '\n';
            } else {
                ParamOptions p;
                p.engine = engine;
                const ParamReport rep = verify_chain(g, p);
                out["params"] = to_json(rep);
                if (!json) {
                    std::cout << "avg\t" << dyadic_line(rep.avg) << "\nmax\t" << rep.max_rho << "\nnd\t" << rep.nd
                              << "\nmr_f2\t" << (rep.mr2 ? std::to_string(rep.mr2->rank) : "-") << "\nmr_f3\t"
                              << (rep.mr3 ? std::to_string(*rep.mr3) : "-") << "\ncd\t"
                              << (rep.cd ? std::to_string(*rep.cd) : "-") << "\ncd_upper\t"
                              << rep.cd_upper.cliques.size() << '\n';
                    for (const auto& c : rep.comparisons) {
                        std::cout << (c.holds ? "holds" : "FAILS") << "\t(" << c.chain << ") " << c.relation << "\t"
                                  << c.lhs << " vs " << c.rhs << '\n';
                    }
                    for (const auto& gap : rep.gaps) std::cout << "skipped\t" << gap << '\n';
                }
                if (!rep.all_ok()) status = kFailed;
            }
            if (json) emit(out);
        } else if (verify->parsed()) {
            so.max_n = max_n;
            so.n = n_opt;
            so.samples = samples;
            so.workers = workers;
            so.mode = parse_mode(mode_text);
            if (!alpha_text.empty()) so.alpha = Dyadic::parse(alpha_text);
            if (!eps_text.empty()) so.eps = Dyadic::parse(eps_text);
            const SuiteResult r = run_suite(suite, so);
            if (json) {
                Json out = tagged("verify", to_json(r));
                emit(out);
            } else {
                std::cout << r.suite << ": " << r.cases << " checks, " << r.failures.size() << " failures, "
                          << r.indeterminate << " indeterminate, " << r.wall_ms << " ms\n";
                for (const auto& f : r.failures) {
                    std::cout << "FAIL\t" << f.check << "\tcertificate=" << f.certificate << "\t" << f.quantity
                              << ": expected " << f.expected << ", got " << f.actual << '\n';
                }
            }
            status = r.ok() ? kOk : kFailed;
        } else if (family->parsed()) {
            const ForestFamily fam = build_family(Dyadic::parse(eps_text), family_n);
            const std::vector<Tri> minimal = check_members(fam, workers);
            const Json out = tagged("family", to_json(fam, minimal));
            if (json) {
                emit(out);
            } else {
                for (const auto& m : fam.members) std::cout << to_graph6(m.forest) << '\n';
            }
            if (!family_json.empty()) {
                std::ofstream side(family_json);
                if (!side) throw ParameterError("cannot write " + family_json);
                side << out.dump(2) << '\n';
            }
            if (fam.partial) {
                std::cerr << "acr: " << fam.partial_reason << '\n';
                status = kCapacity;
            }
        } else if (xseq->parsed()) {
            const Dyadic eps = Dyadic::parse(eps_text);
            const BigInt x = x_sequence(eps, xseq_n);
            if (json) {
                emit({{"command", "xseq"}, {"eps", to_json(eps)}, {"n", xseq_n}, {"value", x.str()}});
            } else {
                std::cout << x.str() << '\n';
            }
        } else if (orbit_cmd->parsed()) {
            const Graph g = read_graph(graph_args);
            const OrbitClasses oc = orbit_classes(g, orbit_cap);
            if (json) {
                emit({{"command", "orbit"},
                      {"graph", graph_json(g)},
                      {"classes", oc.codes.size()},
                      {"truncated", oc.truncated},
                      {"codes", oc.codes}});
            } else {
                for (const auto& c : oc.codes) std::cout << c << '\n';
                if (oc.truncated) std::cout << "# truncated after " << orbit_cap << " classes\n";
            }
            if (oc.truncated) status = kCapacity;
        } else if (vm->parsed()) {
            const Graph h = read_any(minor_text);
            const Graph g = read_any(host_text);
            const VmResult r = is_vertex_minor(h, g);
            if (json) {
                Json out = tagged("vm", to_json(r));
                out["minor"] = graph_json(h);
                out["host"] = graph_json(g);
                emit(out);
            } else {
                std::cout << (r.answer == Tri::True ? "true" : r.answer == Tri::False ? "false" : "indeterminate")
                          << '\n';
                for (const auto& step : r.witness) std::cout << step << '\n';
            }
            if (r.answer == Tri::Indeterminate) status = kCapacity;
        } else if (enumerate->parsed()) {
            const auto& graphs = enumerate_graphs(enum_n, workers);
            if (json) {
                Json codes = Json::array();
                for (const Graph& g : graphs) codes.push_back(to_graph6(g));
                emit({{"command", "enumerate"}, {"n", enum_n}, {"count", graphs.size()}, {"graphs", codes}});
            } else {
                for (const Graph& g : graphs) std::cout << to_graph6(g) << '\n';
            }
        } else if (obs->parsed()) {
            const Dyadic alpha = Dyadic::parse(alpha_text);
            const ThresholdMode mode = parse_mode(mode_text);
            ObstructionOptions opt;
            opt.workers = workers;
            ObstructionReport rep = obstructions(alpha, mode, max_n.value_or(8), opt);
            std::string fixture = fixture_path;
            if (fixture.empty()) fixture = obstruction_fixture(default_fixtures_dir(), alpha, mode);
            std::vector<ListedGraph> listed;
            if (!fixture.empty()) {
                listed = read_graph_list(fixture);
                std::vector<Graph> expected;
                for (const auto& l : listed) expected.push_back(l.graph);
                rep.diff = diff_against(rep, expected);
            }
            if (json) {
                Json out = tagged("obstructions", to_json(rep));
                if (out.contains("diff")) {
                    for (std::size_t i = 0; i < listed.size() && i < out["diff"].size(); ++i) {
                        out["diff"][i]["name"] = listed[i].name;
                    }
                }
                emit(out);
            } else {
                for (const auto& c : rep.classes) {
                    std::cout << c.representative << '\t' << c.order << '\t' << c.avg.to_string() << '\t'
                              << c.members.size() << " members\n";
                }
                for (std::size_t i = 0; i < rep.diff.size(); ++i) {
                    const auto& d = rep.diff[i];
                    std::cout << "# " << d.status << '\t' << d.canon << '\t' << d.avg.to_string();
                    if (i < listed.size() && !listed[i].name.empty()) std::cout << '\t' << listed[i].name;
                    if (!d.reason.empty()) std::cout << '\t' << d.reason;
                    std::cout << '\n';
                }
            }
            if (!rep.post_check_ok) status = kFailed;
        } else if (census->parsed()) {
            const Dyadic cap = Dyadic::parse(cap_text);
            const auto values = value_census(max_n.value_or(8), cap, workers);
            if (json) {
                emit({{"command", "census"}, {"max_n", max_n.value_or(8)}, {"cap", to_json(cap)}, {"values", to_json(values)}});
            } else {
                for (const auto& e : values) std::cout << dyadic_line(e.value) << '\t' << e.witness << '\n';
            }
        }
        cache.flush();
        return status;
    } catch (const CapacityError& e) {
        std::cerr << "acr: capacity: " << e.what() << '\n';
        return kCapacity;
    } catch (const IntegrityError& e) {
        std::cerr << "acr: integrity: " << e.what() << '\n';
        return kFailed;
    } catch (const Error& e) {
        std::cerr << "acr: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "acr: " << e.what() << '\n';
        return kUsage;
    }
}
