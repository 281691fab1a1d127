// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failed check. Criteria 4 and 5 run over the published benchmark
// instances; the deterministic constructions are built in memory, the
// data-only ones are read from COLORSAT_DATA_DIR and reported as SKIP
// when the files are not present.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "colorsat/bounds.hpp"
#include "colorsat/encode_bcp.hpp"
#include "colorsat/encode_gcp.hpp"
#include "colorsat/generators.hpp"
#include "colorsat/ilp.hpp"
#include "colorsat/instance.hpp"
#include "colorsat/oracle.hpp"
#include "colorsat/preprocess.hpp"
#include "colorsat/search.hpp"
#include "colorsat/solve.hpp"

using namespace colorsat;
using Clock = std::chrono::steady_clock;

namespace {

int g_criteria_failed = 0;
long long g_witnesses_checked = 0;
long long g_witness_failures = 0;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, const std::string& name, bool pass, const std::string& detail,
            int skipped = 0) {
    const char* status = !pass ? "FAIL" : skipped ? "PARTIAL" : "PASS";
    std::cout << "criterion " << criterion << " [" << name << "] " << status << " (" << detail
              << ")\n"
              << std::flush;
    if (!pass) ++g_criteria_failed;
}

std::string solver_bin() {
    const char* env = std::getenv("CDCLSAT_BIN");
    return env ? env : "cdclsat";
}

std::filesystem::path data_dir() {
    const char* env = std::getenv("COLORSAT_DATA_DIR");
    return env ? env : "data";
}

bool check_witness(const Instance& inst, const Coloring& c, Problem problem) {
    ++g_witnesses_checked;
    bool ok = verify(inst, c, problem).empty();
    if (!ok) ++g_witness_failures;
    return ok;
}

// smallest vertex opening color class i must exceed the one opening i-1
bool smallest_vertex_climbs(const Coloring& c, int k) {
    std::map<int, int> smallest;
    for (int v = 1; v <= c.num_vertices(); ++v)
        if (!smallest.count(c.color(v))) smallest[c.color(v)] = v;
    for (int i = 2; i <= k; ++i)
        if (smallest.count(i) && smallest.count(i - 1) && smallest[i] < smallest[i - 1]) return false;
    return true;
}

Encoding build_gcp(EncodingKind kind, const Instance& g, int k, bool symmetry) {
    EncodeOptions eo;
    eo.symmetry = symmetry;
    switch (kind) {
        case EncodingKind::AssS: return encode_ass_s(g, k, eo);
        case EncodingKind::PopS: return encode_pop_s(g, k, eo);
        default: return encode_poph_s(g, k, eo);
    }
}

// criteria 1, 6, and the GCP share of 7
void criterion_1_and_6() {
    auto t0 = Clock::now();
    long long checks = 0, mismatches = 0;
    long long order_checked = 0, order_failed = 0, sym_sat_failed = 0;
    const double probs[3] = {0.2, 0.5, 0.8};
    for (int g = 0; g < 200; ++g) {
        int n = 4 + g % 6;
        double p = probs[g % 3];
        Instance inst = random_gnp(n, p, 10'000 + g);
        int chi = exact_gcp(inst).optimum;
        for (int k = 1; k <= n; ++k) {
            bool expected = chi <= k;
            for (EncodingKind kind :
                 {EncodingKind::AssS, EncodingKind::PopS, EncodingKind::PophS}) {
                Encoding enc = build_gcp(kind, inst, k, true);
                auto res = solve_internal(enc.cnf);
                ++checks;
                if ((res.status == SolveStatus::Sat) != expected) {
                    ++mismatches;
                    continue;
                }
                if (res.status == SolveStatus::Sat) {
                    Coloring c = decode(res.assignment, enc);
                    check_witness(inst, c, Problem::Gcp);
                    if (kind == EncodingKind::PopS) {
                        ++order_checked;
                        if (!smallest_vertex_climbs(c, k)) ++order_failed;
                    }
                }
                if (kind == EncodingKind::PopS && expected && res.status != SolveStatus::Sat)
                    ++sym_sat_failed;
            }
            // the symmetry-free ladder encoding must agree as well
            Encoding plain = build_gcp(EncodingKind::PopS, inst, k, false);
            if ((solve_internal(plain.cnf).status == SolveStatus::Sat) != expected) ++mismatches;
        }
    }
    double t = elapsed(t0);
    {
        std::ostringstream d;
        d << "200 graphs, " << checks << " encoder checks, " << mismatches << " mismatches, "
          << t << "s";
        report(1, "oracle equivalence, coloring", mismatches == 0 && t < 300.0, d.str());
    }
    {
        std::ostringstream d;
        d << order_checked << " models checked, " << order_failed
          << " class-order violations, " << sym_sat_failed << " symmetry-SAT failures";
        report(6, "ladder symmetry properties", order_failed == 0 && sym_sat_failed == 0, d.str());
    }
}

void criterion_2() {
    auto t0 = Clock::now();
    long long mismatches = 0;
    for (int g = 0; g < 100; ++g) {
        int n = 3 + g % 5;
        Instance inst = random_weighted(n, 0.5, 4, 20'000 + g);
        int expected = exact_bcp(inst).optimum;
        for (EncodingKind kind :
             {EncodingKind::AssSB, EncodingKind::PopSB, EncodingKind::PophSB}) {
            SolveReport rep = solve_bcp(inst, kind, {});
            if (!rep.optimal || rep.ub != expected) {
                ++mismatches;
                continue;
            }
            check_witness(inst, rep.witness, Problem::Bcp);
        }
    }
    double t = elapsed(t0);
    std::ostringstream d;
    d << "100 weighted graphs, 3 encoders, " << mismatches << " mismatches, " << t << "s";
    report(2, "oracle equivalence, bandwidth", mismatches == 0 && t < 300.0, d.str());
}

void criterion_3() {
    long long bad = 0;
    // (a) ladder base size: k(|V|+|E|) clauses, k|V| variables, exact
    for (int i = 0; i < 50; ++i) {
        int n = 3 + i % 7;
        Instance g = random_gnp(n, 0.2 + 0.1 * (i % 6), 30'000 + i);
        int k = 1 + (i * 7) % 11;
        auto c = encode_pop_s(g, k, {false, {}, {}}).counts();
        long long m = g.num_edges();
        if (c.base_vars != static_cast<long long>(k) * n) ++bad;
        if (c.base_clauses != static_cast<long long>(k) * (n + m)) ++bad;
        if (c.post_vars != static_cast<long long>(k - 1) * n) ++bad;
        if (c.post_base_clauses != static_cast<long long>(k) * (n + m) - n) ++bad;
    }
    // (b) sequential at-most-one block: 3k-4 clauses, k-1 auxiliaries per vertex
    for (int k = 2; k <= 9; ++k) {
        Instance g(3, {});
        Encoding enc = encode_ass_s(g, k, {false, {}, {}});
        if (enc.cnf.group_clauses(group::seq_amo) != 3LL * (3 * k - 4)) ++bad;
        long long aux = enc.cnf.nvars() - 3LL * k;
        if (aux != 3LL * (k - 1)) ++bad;
    }
    // (c) assignment bandwidth model: closed form equals the row generator
    for (int i = 0; i < 50; ++i) {
        int n = 3 + i % 6;
        Instance g = random_weighted(n, 0.5, 4, 40'000 + i);
        int H = std::max(greedy_bcp_upper_bound(g).H, g.max_distance()) + (i % 3);
        auto closed = count_ass_i_b_closed_form(g, H);
        auto counted = count_model_size(IlpKind::AssIB, g, H);
        if (closed.first != counted.nvars || closed.second != counted.nconstraints) ++bad;
    }
    std::ostringstream d;
    d << "50 ladder + 8 counter + 50 closed-form checks, " << bad << " deviations";
    report(3, "size formulas, exact", bad == 0, d.str());
}

struct NamedOptimum {
    std::string name;
    int optimum;
};

void criterion_4() {
    auto t0 = Clock::now();
    const std::vector<NamedOptimum> expected = {
        {"myciel3", 4},   {"myciel4", 5},    {"queen5_5", 5}, {"queen6_6", 7},
        {"queen7_7", 7},  {"huck", 11},      {"david", 11},   {"jean", 10},
        {"anna", 11},     {"games120", 9},   {"miles250", 8}, {"mug88_1", 4},
        {"1-FullIns_3", 4}, {"2-Insertions_3", 4},
    };
    std::map<std::string, Instance> built = {
        {"myciel3", mycielski_tower(3)}, {"myciel4", mycielski_tower(4)},
        {"queen5_5", queen_graph(5)},    {"queen6_6", queen_graph(6)},
        {"queen7_7", queen_graph(7)},
    };
    int verified = 0, wrong = 0, missing = 0;
    std::string missing_names;
    for (const auto& [name, opt] : expected) {
        Instance inst;
        if (auto it = built.find(name); it != built.end()) {
            inst = it->second;
        } else {
            auto path = data_dir() / "dimacs" / (name + ".col");
            if (!std::filesystem::exists(path)) {
                ++missing;
                missing_names += (missing_names.empty() ? "" : " ") + name;
                continue;
            }
            inst = load_instance(path.string());
        }
        // published size spot check
        if (name == "anna" && (inst.num_vertices() != 138 || inst.num_edges() != 493)) {
            std::cout << "  !! anna: expected 138 vertices / 493 edges\n";
            ++wrong;
            continue;
        }
        bool all_ok = true;
        for (EncodingKind kind : {EncodingKind::PopS, EncodingKind::PophS, EncodingKind::AssS}) {
            SearchOptions so;
            so.backend = Backend::External;
            so.solver_cmd = solver_bin();
            so.budget_s = 60.0;
            SolveReport rep = solve_gcp(inst, kind, so);
            bool ok = rep.optimal && rep.ub == opt && rep.has_witness &&
                      check_witness(inst, rep.witness, Problem::Gcp);
            if (!ok) {
                all_ok = false;
                std::cout << "  !! " << name << " " << to_string(kind) << ": expected " << opt
                          << ", got " << (rep.optimal ? std::to_string(rep.ub) : "bounds only")
                          << "\n";
            }
        }
        if (all_ok)
            ++verified;
        else
            ++wrong;
    }
    std::ostringstream d;
    d << verified << "/" << expected.size() << " instances at the published optimum, 3 encoders, "
      << elapsed(t0) << "s";
    if (missing)
        d << "; SKIPPED " << missing << " (instance files not in data/dimacs: " << missing_names
          << ")";
    report(4, "published coloring optima, external solver", wrong == 0, d.str(), missing);
}

void criterion_5() {
    auto t0 = Clock::now();
    const std::vector<NamedOptimum> expected = {
        {"GEOM20", 21},  {"GEOM20a", 20}, {"GEOM20b", 13}, {"GEOM30", 28}, {"GEOM30a", 27},
        {"GEOM30b", 26}, {"GEOM40", 28},  {"GEOM40a", 37}, {"GEOM40b", 33}, {"GEOM50", 28},
    };
    int verified = 0, wrong = 0, missing = 0;
    std::string missing_names;
    for (const auto& [name, opt] : expected) {
        auto path = data_dir() / "geom" / (name + ".col");
        if (!std::filesystem::exists(path)) {
            ++missing;
            missing_names += (missing_names.empty() ? "" : " ") + name;
            continue;
        }
        Instance inst = load_instance(path.string());
        // published size spot checks
        if ((name == "GEOM20" && (inst.num_vertices() != 20 || inst.num_edges() != 20)) ||
            (name == "GEOM50" && (inst.num_vertices() != 50 || inst.num_edges() != 127))) {
            std::cout << "  !! " << name << ": size differs from the published table\n";
            ++wrong;
            continue;
        }
        bool all_ok = true;
        for (EncodingKind kind : {EncodingKind::PopSB, EncodingKind::PophSB}) {
            SearchOptions so;
            so.backend = Backend::External;
            so.solver_cmd = solver_bin();
            so.budget_s = 120.0;
            SolveReport rep = solve_bcp(inst, kind, so);
            bool ok = rep.optimal && rep.ub == opt && rep.has_witness &&
                      check_witness(inst, rep.witness, Problem::Bcp);
            if (!ok) {
                all_ok = false;
                std::cout << "  !! " << name << " " << to_string(kind) << ": expected " << opt
                          << ", got " << (rep.optimal ? std::to_string(rep.ub) : "bounds only")
                          << "\n";
            }
        }
        if (all_ok)
            ++verified;
        else
            ++wrong;
    }
    std::ostringstream d;
    d << verified << "/" << expected.size() << " instances at the published optimum, 2 encoders, "
      << elapsed(t0) << "s";
    if (missing)
        d << "; SKIPPED " << missing << " (instance files not in data/geom: " << missing_names
          << ")";
    report(5, "published bandwidth optima, external solver", wrong == 0, d.str(), missing);
}

void criterion_7() {
    std::ostringstream d;
    d << g_witnesses_checked << " decoded witnesses verified, " << g_witness_failures
      << " failures";
    report(7, "verifier gate", g_witness_failures == 0 && g_witnesses_checked > 0, d.str());
}

void criterion_8() {
    auto t0 = Clock::now();
    long long bad = 0;
    for (int g = 0; g < 100; ++g) {
        int n = 4 + g % 6;
        Instance inst = random_gnp(n, 0.3 + 0.2 * (g % 3), 50'000 + g);
        int chi = exact_gcp(inst).optimum;
        int lower = static_cast<int>(exact_max_clique(inst).size());
        if (lower < 1) lower = 1;
        auto [reduced, log] = reduce(inst, lower);
        Coloring partial = reduced.num_vertices() ? exact_gcp(reduced).witness : Coloring(0);
        Coloring lifted = lift_coloring(log, partial);
        if (!check_witness(inst, lifted, Problem::Gcp) || lifted.max_color() != chi) ++bad;
    }
    std::ostringstream d;
    d << "100 graphs reduced at the exact clique bound, " << bad << " lift failures, "
      << elapsed(t0) << "s";
    report(8, "preprocessing soundness", bad == 0, d.str());
}

void criterion_9() {
    long long prev_num = 0, prev_den = 1;
    bool monotone = true;
    std::ostringstream ratios;
    for (int d = 1; d <= 6; ++d) {
        Instance g = random_gnm_uniform_d(30, 60, d, 60'000);
        int H = greedy_bcp_upper_bound(g).H;
        auto ass = count_model_size(IlpKind::AssIB, g, H);
        auto pop = count_model_size(IlpKind::PopIB, g, H);
        long long num = ass.row_groups.at("bandwidth_edge");
        long long den = pop.row_groups.at("bandwidth_edge");
        ratios << (d > 1 ? " " : "") << static_cast<double>(num) / static_cast<double>(den);
        if (d > 1 && num * prev_den <= prev_num * den) monotone = false;
        prev_num = num;
        prev_den = den;
    }
    report(9, "edge-row ratio grows with distance", monotone, "ratios: " + ratios.str());
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    std::cout << "acceptance suite: external solver = " << solver_bin()
              << ", data dir = " << data_dir().string() << "\n";
    criterion_1_and_6();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_7();
    criterion_8();
    criterion_9();
    std::cout << (g_criteria_failed ? "RESULT: FAIL" : "RESULT: PASS") << " ("
              << g_criteria_failed << " criteria failed, " << elapsed(t0) << "s total)\n";
    return g_criteria_failed ? 1 : 0;
}
