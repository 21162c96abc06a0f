// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance                   exit 0 iff every criterion passes
//   acceptance --documented      exit 0 iff the only failure is the figure1.json
//                                deviation, with exactly the recorded values

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "acr/cutrank.hpp"
#include "acr/enumerate.hpp"
#include "acr/families.hpp"
#include "acr/graph_io.hpp"
#include "acr/named.hpp"
#include "acr/obstructions.hpp"
#include "acr/report.hpp"
#include "acr/suites.hpp"
#include "oracles.hpp"

using namespace acr;

namespace {

struct Outcome {
    bool pass = false;
    std::string note;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string suite_note(const SuiteResult& r) {
    std::ostringstream out;
    out << r.cases << " checks, " << r.failures.size() << " failures, " << r.indeterminate << " indeterminate";
    for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i) {
        const auto& f = r.failures[i];
        out << "; " << f.check << " [" << f.certificate << " " << f.quantity << ": expected " << f.expected
            << ", got " << f.actual << "]";
    }
    return out.str();
}

Outcome from_suite(const std::string& name, SuiteOptions o, double limit_s) {
    const auto t0 = Clock::now();
    const SuiteResult r = run_suite(name, o);
    const double s = seconds_since(t0);
    Outcome out{r.ok() && s < limit_s, suite_note(r)};
    if (s >= limit_s) out.note += "; over the time limit";
    return out;
}

// figure1.json values the gate tolerates under --documented: name -> computed value.
const std::map<std::string, std::string> kFigureDeviation{{"P5,1", "51/32"}, {"P5,2", "55/32"}, {"C4,1", "53/32"}};
std::map<std::string, std::string> figure_mismatches;

Outcome closed_forms() {
    SuiteOptions o;
    o.max_param = 10;
    return from_suite("formulas", o, 10.0);
}

Outcome figure1() {
    const auto t0 = Clock::now();
    const std::pair<const char*, const char*> printed[] = {
        {"C5", "25/16"},   {"P6", "57/32"},   {"P4,1", "49/32"}, {"P5,1", "7/4"},
        {"P5,2", "51/32"}, {"C3,1", "57/32"}, {"C4,1", "27/16"}, {"P5", "23/16"},
    };
    std::ostringstream note;
    int bad = 0;
    for (const auto& [name, value] : printed) {
        const Graph g = parse_named(name);
        const Dyadic computed = average_cut_rank(g);
        if (computed != Dyadic::parse(value)) {
            ++bad;
            figure_mismatches[name] = computed.to_string();
            note << (bad > 1 ? "; " : "") << name << " g6=" << to_graph6(g) << " computed " << computed.to_string()
                 << " (oracle " << oracle::average_cut_rank(g).to_string() << "), printed " << value;
        }
    }
    const double s = seconds_since(t0);
    if (bad == 0) note << "all 8 values match";
    return {bad == 0 && s < 1.0, note.str()};
}

Outcome lc_invariance() {
    SuiteOptions o;
    o.max_n = 7;
    return from_suite("lc-invariance", o, 300.0);
}

Outcome monotonicity() {
    SuiteOptions o;
    o.max_n = 7;
    return from_suite("monotonicity", o, 1800.0);
}

Outcome nd_chain() {
    SuiteOptions o;
    o.max_n = 7;
    return from_suite("nd-chain", o, 1800.0);
}

Outcome rank_bounds() {
    SuiteOptions o;
    o.max_n = 7;
    o.samples = 10000;
    return from_suite("bounds", o, 1800.0);
}

Outcome max_cutrank() {
    std::ostringstream note;
    bool ok = true;
    for (int k = 0; k <= 2; ++k) {
        const auto found = max_cutrank_obstructions(k, 8);
        bool sizes = !found.empty();
        for (const Graph& g : found) sizes = sizes && g.order() == 2 * k + 2;
        ok = ok && sizes;
        note << (k ? "; " : "") << "k=" << k << ": " << found.size() << " minimal graphs"
             << (sizes ? ", all on " + std::to_string(2 * k + 2) + " vertices" : ", WRONG ORDER OR NONE");
    }
    return {ok, note.str()};
}

Outcome obstruction_census() {
    std::ostringstream note;
    bool ok = true;
    const std::pair<const char*, ThresholdMode> runs[] = {{"1", ThresholdMode::AtMost},
                                                          {"1", ThresholdMode::LessThan},
                                                          {"3/2", ThresholdMode::AtMost},
                                                          {"3/2", ThresholdMode::LessThan}};
    for (const auto& [alpha, mode] : runs) {
        SuiteOptions o;
        o.max_n = 8;
        o.alpha = Dyadic::parse(alpha);
        o.mode = mode;
        const SuiteResult r = run_suite("obstructions", o);
        const Json& rep = r.details["report"];
        const bool match = rep.value("fixture_match", false);
        ok = ok && r.ok();
        if (std::string(alpha) == "1" && mode == ThresholdMode::AtMost) ok = ok && match;
        note << (note.tellp() > 0 ? "; " : "") << to_string(mode) << " " << alpha << ": " << rep["classes"].size()
             << " classes, " << r.failures.size() << " invariant failures";
        for (const auto& d : rep["diff"]) {
            if (d["status"] == "matched") continue;
            note << ", " << d["status"].get<std::string>() << " " << d.value("name", d["canon"].get<std::string>())
                 << " (" << d["avg"]["fraction"].get<std::string>() << ")";
        }
    }
    return {ok, note.str()};
}

Outcome value_set() {
    SuiteOptions o;
    o.max_n = 8;
    return from_suite("census", o, 1200.0);
}

Outcome forest_families() {
    SuiteOptions o;
    Outcome suite = from_suite("families", o, 1800.0);
    std::ostringstream note;
    bool counts = true;
    for (const char* e : {"0", "1/2", "3/4"}) {
        for (int k = 0; k <= 2; ++k) {
            const FamilyCounts c = family_counts(Dyadic::parse(e), k);
            counts = counts && c.ok();
            if (!c.ok()) note << "; eps=" << e << " k=" << k << ": " << c.even << "/" << c.odd << " vs " << c.expected;
        }
    }
    return {suite.pass && counts, suite.note + note.str()};
}

Outcome forest_equivalence() {
    SuiteOptions o;
    o.max_n = 8;
    return from_suite("forests", o, 1800.0);
}

Outcome xseq() {
    std::ostringstream note;
    bool ok = x_sequence(Dyadic(), 0) == 5 && x_sequence(Dyadic(), 1) == 1572864;
    note << "x_0(0)=" << x_sequence(Dyadic(), 0) << ", x_1(0)=" << x_sequence(Dyadic(), 1);
    int compared = 0;
    for (const char* e : {"0", "1/2", "1/4", "3/4", "5/8", "63/64", "1/1024", "1023/1024", "12345/65536"}) {
        for (int n = 0; n <= 3; ++n) {
            const Dyadic eps = Dyadic::parse(e);
            ++compared;
            if (x_sequence(eps, n) != oracle::x_sequence_float(eps, n)) {
                ok = false;
                note << "; mismatch at eps=" << e << " n=" << n;
            }
        }
    }
    note << ", " << compared << " values against the 300-bit float re-evaluation";
    return {ok, note.str()};
}

Outcome determinism() {
    std::map<int, std::string> dumps;
    for (int w : {1, 4, 8}) {
        Json all = Json::object();
        Json avgs = Json::array();
        EngineOptions engine;
        engine.workers = w;
        for (const Graph& g : enumerate_graphs(7)) {
            if (g.edge_count() % 5 == 0) avgs.push_back(average_cut_rank(g, engine).to_pow2_string());
        }
        std::mt19937_64 rng(11);
        for (int i = 0; i < 8; ++i) avgs.push_back(average_cut_rank(oracle::random_graph(rng, 20), engine).to_pow2_string());
        all["averages"] = avgs;
        all["census"] = to_json(value_census(8, Dyadic::parse("3/2"), w));
        ObstructionOptions opt;
        opt.workers = w;
        all["obstructions_le_1"] = to_json(obstructions(Dyadic::integer(1), ThresholdMode::AtMost, 8, opt));
        all["obstructions_lt_3/2"] = to_json(obstructions(Dyadic::parse("3/2"), ThresholdMode::LessThan, 7, opt));
        dumps[w] = all.dump();
    }
    const bool same = dumps[1] == dumps[4] && dumps[1] == dumps[8];
    return {same, std::to_string(dumps[1].size()) + " bytes of JSON, workers 1/4/8 " +
                      (same ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main(int argc, char** argv) {
    const bool documented = argc > 1 && std::string(argv[1]) == "--documented";
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"closed forms", closed_forms},
        {"figure1.json regression", figure1},
        {"local-complementation invariance", lc_invariance},
        {"vertex-minor monotonicity", monotonicity},
        {"parameter chains (i), (ii), (iii) over F2", nd_chain},
        {"rank/diversity bounds", rank_bounds},
        {"minimal graphs for maxρ > k", max_cutrank},
        {"obstruction census", obstruction_census},
        {"value set up to 3/2", value_set},
        {"forest families", forest_families},
        {"forest local equivalence", forest_equivalence},
        {"x_sequence", xseq},
        {"determinism across worker counts", determinism},
    };
    std::set<int> failed;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) failed.insert(index);
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << name << " (" << seconds_since(t0)
                  << " s): " << o.note << std::endl;
    }
    if (!documented) return failed.empty() ? 0 : 1;
    const bool only_figure = failed == std::set<int>{2} && figure_mismatches == kFigureDeviation;
    std::cout << (only_figure ? "only the recorded figure1.json deviation fails" : "unexpected failures") << std::endl;
    return failed.empty() || only_figure ? 0 : 1;
}
