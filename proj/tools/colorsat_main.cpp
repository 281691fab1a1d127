// colorsat: exact graph and bandwidth coloring via SAT encodings, with
// LP model emission, a benchmark harness, and a coloring verifier.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "colorsat/bounds.hpp"
#include "colorsat/encode_bcp.hpp"
#include "colorsat/encode_gcp.hpp"
#include "colorsat/ilp.hpp"
#include "colorsat/instance.hpp"
#include "colorsat/search.hpp"

using namespace colorsat;
using nlohmann::json;

namespace {

// process exit codes
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitBoundsOnly = 4;
constexpr int kExitSolverError = 5;
constexpr int kExitInvalidColoring = 6;

const std::map<std::string, EncodingKind> kSatModels = {
    {"ass-s", EncodingKind::AssS},     {"pop-s", EncodingKind::PopS},
    {"poph-s", EncodingKind::PophS},   {"ass-s-b", EncodingKind::AssSB},
    {"pop-s-b", EncodingKind::PopSB},  {"poph-s-b", EncodingKind::PophSB},
};

const std::map<std::string, IlpKind> kIlpModels = {
    {"ass-i", IlpKind::AssI},     {"pop-i", IlpKind::PopI},
    {"poph-i", IlpKind::PophI},   {"ass-i-b", IlpKind::AssIB},
    {"pop-i-b", IlpKind::PopIB},  {"poph-i-b", IlpKind::PophIB},
};

std::string g_argv0;

std::string default_external_solver() {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::path self(g_argv0);
    fs::path sibling = self.parent_path() / "cdclsat";
    if (fs::exists(sibling, ec)) return sibling.string();
    return "cdclsat";
}

Instance load_or_exit(const std::string& path) {
    std::vector<std::string> warnings;
    try {
        Instance inst = load_instance(path, &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
        return inst;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExitParse);
    }
}

bool model_matches_problem(const std::string& model, const std::string& problem) {
    bool bandwidth = model.size() > 2 && model.substr(model.size() - 2) == "-b";
    return bandwidth == (problem == "bcp");
}

std::vector<int> degree_order(const Instance& inst) {
    std::vector<int> order(inst.num_vertices());
    for (int v = 1; v <= inst.num_vertices(); ++v) order[v - 1] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (inst.degree(a) != inst.degree(b)) return inst.degree(a) > inst.degree(b);
        return a < b;
    });
    return order;
}

struct EncodeArgs {
    std::string instance, problem, model, out, order = "input";
    int k = 0, H = 0;
    bool no_symmetry = false;
    std::uint64_t seed = 1;
};

int run_encode(const EncodeArgs& a) {
    if (!model_matches_problem(a.model, a.problem)) {
        std::cerr << "error: model " << a.model << " does not fit problem " << a.problem << "\n";
        return kExitUsage;
    }
    Instance inst = load_or_exit(a.instance);
    std::ostringstream text;
    std::string counts_line;

    try {
        if (auto it = kSatModels.find(a.model); it != kSatModels.end()) {
            if (a.k < 1) {
                std::cerr << "error: SAT models need --k >= 1\n";
                return kExitUsage;
            }
            Encoding enc;
            if (is_bandwidth_kind(it->second)) {
                switch (it->second) {
                    case EncodingKind::AssSB: enc = encode_ass_s_b(inst, a.k); break;
                    case EncodingKind::PopSB: enc = encode_pop_s_b(inst, a.k); break;
                    default: enc = encode_poph_s_b(inst, a.k); break;
                }
            } else {
                EncodeOptions eo;
                eo.symmetry = !a.no_symmetry;
                if (a.order == "degree") eo.vertex_order = degree_order(inst);
                switch (it->second) {
                    case EncodingKind::AssS: enc = encode_ass_s(inst, a.k, eo); break;
                    case EncodingKind::PopS: enc = encode_pop_s(inst, a.k, eo); break;
                    default: enc = encode_poph_s(inst, a.k, eo); break;
                }
            }
            text << to_dimacs(enc.cnf);
            auto c = enc.counts();
            std::ostringstream line;
            line << "vars=" << c.vars_total << " clauses=" << c.clauses_total << "\n";
            if (it->second == EncodingKind::PopS || it->second == EncodingKind::PophS ||
                it->second == EncodingKind::PopSB || it->second == EncodingKind::PophSB) {
                line << "base_vars=" << c.base_vars << " base_clauses=" << c.base_clauses
                     << " after_units_vars=" << c.post_vars
                     << " after_units_clauses=" << c.post_base_clauses << "\n";
            }
            counts_line = line.str();
        } else if (auto jt = kIlpModels.find(a.model); jt != kIlpModels.end()) {
            int H = a.H;
            if (H < 1) {
                H = (a.problem == "bcp") ? greedy_bcp_upper_bound(inst).H
                                         : greedy_gcp_upper_bound(inst).H;
            }
            text << emit_model(jt->second, inst, H);
            auto size = count_model_size(jt->second, inst, H);
            std::ostringstream line;
            line << "vars=" << size.nvars << " rows=" << size.nconstraints << "\n";
            counts_line = line.str();
        } else {
            std::cerr << "error: unknown model " << a.model << "\n";
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::ofstream out(a.out);
    if (!out) {
        std::cerr << "error: cannot write " << a.out << "\n";
        return kExitParse;
    }
    out << text.str();
    std::cout << counts_line;
    return kExitOk;
}

struct SolveArgs {
    std::string instance, problem, model, backend = "internal", solver, json_path, order = "input";
    double timeout = 3600.0;
    std::uint64_t seed = 1;
    bool no_symmetry = false;
};

json report_to_json(const SolveReport& rep, const Instance& inst) {
    json j;
    j["schema"] = 1;
    j["instance"] = rep.instance_name;
    j["problem"] = to_string(rep.problem);
    j["model"] = to_string(rep.encoder);
    j["n"] = inst.num_vertices();
    j["m"] = inst.num_edges();
    j["lb"] = rep.lb;
    j["ub"] = rep.ub;
    j["optimal"] = rep.optimal;
    j["time_s"] = rep.total_seconds;
    j["preprocess_removed"] = rep.preprocess_removed;
    j["clique_size"] = rep.clique_size;
    json per_k = json::array();
    for (const auto& q : rep.per_k)
        per_k.push_back({{"k", q.k}, {"decision", to_string(q.decision)}, {"time_s", q.seconds}});
    j["per_k"] = per_k;
    if (rep.has_witness) {
        json colors = json::array();
        for (int v = 1; v <= rep.witness.num_vertices(); ++v) colors.push_back(rep.witness.color(v));
        j["colors"] = colors;
    } else {
        j["colors"] = nullptr;
    }
    if (!rep.error.empty()) j["error"] = rep.error;
    return j;
}

SolveReport run_search(const Instance& inst, const std::string& problem, EncodingKind kind,
                       const SearchOptions& so) {
    return problem == "bcp" ? solve_bcp(inst, kind, so) : solve_gcp(inst, kind, so);
}

int run_solve(const SolveArgs& a) {
    auto it = kSatModels.find(a.model);
    if (it == kSatModels.end()) {
        std::cerr << "error: solve needs a SAT model, got " << a.model << "\n";
        return kExitUsage;
    }
    if (!model_matches_problem(a.model, a.problem)) {
        std::cerr << "error: model " << a.model << " does not fit problem " << a.problem << "\n";
        return kExitUsage;
    }
    Instance inst = load_or_exit(a.instance);

    SearchOptions so;
    so.backend = a.backend == "external" ? Backend::External : Backend::Internal;
    so.solver_cmd = a.solver.empty() ? default_external_solver() : a.solver;
    so.budget_s = a.timeout;
    so.seed = a.seed;
    so.symmetry = !a.no_symmetry;
    so.degree_order = a.order == "degree";

    SolveReport rep;
    try {
        rep = run_search(inst, a.problem, it->second, so);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolverError;
    }

    std::cout << "instance=" << rep.instance_name << " problem=" << a.problem
              << " model=" << a.model << "\n";
    for (const auto& q : rep.per_k)
        std::cout << "  k=" << q.k << " " << to_string(q.decision) << " " << q.seconds << "s\n";
    if (rep.preprocess_removed || rep.clique_size)
        std::cout << "  preprocess: removed=" << rep.preprocess_removed
                  << " clique=" << rep.clique_size << "\n";
    if (rep.optimal) {
        std::cout << (a.problem == "bcp" ? "opt=" : "chi=") << rep.ub << " optimal"
                  << " time=" << rep.total_seconds << "s\n";
    } else {
        std::cout << "bounds lb=" << rep.lb << " ub=" << rep.ub << " time=" << rep.total_seconds
                  << "s\n";
    }

    if (!a.json_path.empty()) {
        std::ofstream jout(a.json_path);
        jout << report_to_json(rep, inst).dump(2) << "\n";
    }
    if (!rep.error.empty()) {
        std::cerr << "solver error: " << rep.error << "\n";
        return kExitSolverError;
    }
    return rep.optimal ? kExitOk : kExitBoundsOnly;
}

struct BenchArgs {
    std::string dir, problem, models, out, survival, backend = "internal", solver;
    double timeout = 3600.0;
    int jobs = 1;
    std::uint64_t seed = 1;
};

std::string sanitize_csv(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == ';') c = ' ';
    return s;
}

int run_bench(const BenchArgs& a) {
    std::vector<std::string> models;
    {
        std::istringstream ms(a.models);
        std::string m;
        while (std::getline(ms, m, ',')) {
            if (m.empty()) continue;
            if (!kSatModels.count(m)) {
                std::cerr << "error: unknown SAT model " << m << "\n";
                return kExitUsage;
            }
            if (!model_matches_problem(m, a.problem)) {
                std::cerr << "error: model " << m << " does not fit problem " << a.problem << "\n";
                return kExitUsage;
            }
            models.push_back(m);
        }
    }
    if (models.empty()) {
        std::cerr << "error: --models list is empty\n";
        return kExitUsage;
    }

    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(a.dir))
        if (entry.is_regular_file() && entry.path().extension() == ".col")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "error: no .col files in " << a.dir << "\n";
        return kExitUsage;
    }

    struct Task {
        std::string file, model;
    };
    std::vector<Task> tasks;
    for (const auto& f : files)
        for (const auto& m : models) tasks.push_back({f, m});

    struct RowData {
        std::string row;
        std::string model;
        bool solved = false;
        double time_s = 0.0;
    };
    std::vector<RowData> rows(tasks.size());
    std::atomic<size_t> next{0};

    auto worker = [&] {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) return;
            const Task& t = tasks[idx];
            std::ostringstream row;
            try {
                Instance inst = load_instance(t.file);  // failures become rows, not aborts
                SearchOptions so;
                so.backend = a.backend == "external" ? Backend::External : Backend::Internal;
                so.solver_cmd = a.solver.empty() ? default_external_solver() : a.solver;
                so.budget_s = a.timeout;
                so.seed = a.seed;
                SolveReport rep = run_search(inst, a.problem, kSatModels.at(t.model), so);
                std::ostringstream per_k;
                for (size_t i = 0; i < rep.per_k.size(); ++i) {
                    const auto& q = rep.per_k[i];
                    const char* d = q.decision == SolveStatus::Sat      ? "S"
                                    : q.decision == SolveStatus::Unsat  ? "U"
                                    : q.decision == SolveStatus::Timeout ? "T"
                                                                         : "E";
                    per_k << (i ? "|" : "") << q.k << ":" << d << ":" << q.seconds;
                }
                row << rep.instance_name << "," << a.problem << "," << t.model << ","
                    << inst.num_vertices() << "," << inst.num_edges() << "," << rep.lb << ","
                    << rep.ub << "," << (rep.optimal ? 1 : 0) << "," << rep.total_seconds << ","
                    << rep.preprocess_removed << "," << rep.clique_size << "," << per_k.str();
                rows[idx] = {row.str(), t.model, rep.optimal, rep.total_seconds};
            } catch (const std::exception& e) {
                std::filesystem::path p(t.file);
                row << p.stem().string() << "," << a.problem << "," << t.model
                    << ",0,0,0,0,0,0,0,0,error: " << sanitize_csv(e.what());
                rows[idx] = {row.str(), t.model, false, 0.0};
            }
        }
    };

    int jobs = std::max(1, a.jobs);
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ofstream out(a.out);
    if (!out) {
        std::cerr << "error: cannot write " << a.out << "\n";
        return kExitParse;
    }
    out << "instance,problem,model,n,m,lb,ub,optimal,time_s,preprocess_removed,clique_size,per_k\n";
    for (const auto& r : rows) out << r.row << "\n";
    std::cout << "wrote " << rows.size() << " rows to " << a.out << "\n";

    // survival data: per model, solved instances sorted by time, cumulative
    std::string survival_path = a.survival.empty() ? a.out + ".survival.csv" : a.survival;
    std::ofstream surv(survival_path);
    surv << "model,time_s,cum_solved\n";
    for (const auto& m : models) {
        std::vector<double> times;
        for (const auto& r : rows)
            if (r.model == m && r.solved) times.push_back(r.time_s);
        std::sort(times.begin(), times.end());
        for (size_t i = 0; i < times.size(); ++i)
            surv << m << "," << times[i] << "," << (i + 1) << "\n";
    }
    std::cout << "wrote survival data to " << survival_path << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string instance, coloring, problem;
};

int run_verify(const VerifyArgs& a) {
    Instance inst = load_or_exit(a.instance);
    Coloring c(inst.num_vertices());
    {
        std::ifstream in(a.coloring);
        if (!in) {
            std::cerr << "error: cannot open " << a.coloring << "\n";
            return kExitParse;
        }
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string tag;
            if (!(ls >> tag)) continue;
            if (tag == "c" || tag[0] == '#') continue;
            int v, col;
            if (tag != "v" || !(ls >> v >> col) || v < 1 || v > inst.num_vertices() || col < 1) {
                std::cerr << "error: bad coloring line " << lineno << ": " << line << "\n";
                return kExitParse;
            }
            c.set(v, col);
        }
    }
    if (!c.total()) {
        std::cerr << "error: coloring does not assign every vertex\n";
        return kExitParse;
    }
    auto violations = verify(inst, c, a.problem == "bcp" ? Problem::Bcp : Problem::Gcp);
    if (violations.empty()) {
        std::cout << "valid (max color " << c.max_color() << ")\n";
        return kExitOk;
    }
    for (const auto& viol : violations)
        std::cout << "violated edge " << viol.u << " " << viol.v << " (colors "
                  << c.color(viol.u) << ", " << c.color(viol.v) << ")\n";
    return kExitInvalidColoring;
}

}  // namespace

int main(int argc, char** argv) {
    g_argv0 = argv[0];
    CLI::App app{"exact graph/bandwidth coloring toolkit"};
    app.require_subcommand(1);

    EncodeArgs ea;
    auto* enc = app.add_subcommand("encode", "emit a CNF or LP model for one instance");
    enc->add_option("--instance", ea.instance, "DIMACS .col file")->required();
    enc->add_option("--problem", ea.problem)->check(CLI::IsMember({"gcp", "bcp"}))->required();
    enc->add_option("--model", ea.model)->required();
    enc->add_option("--k", ea.k, "colors for SAT models");
    enc->add_option("--H", ea.H, "color bound for ILP models (default: greedy bound)");
    enc->add_option("--out", ea.out, "output path")->required();
    enc->add_flag("--no-symmetry", ea.no_symmetry);
    enc->add_option("--order", ea.order)->check(CLI::IsMember({"input", "degree"}));
    enc->add_option("--seed", ea.seed);

    SolveArgs sa;
    auto* sol = app.add_subcommand("solve", "compute the optimum by linear search");
    sol->add_option("--instance", sa.instance)->required();
    sol->add_option("--problem", sa.problem)->check(CLI::IsMember({"gcp", "bcp"}))->required();
    sol->add_option("--model", sa.model)->required();
    sol->add_option("--backend", sa.backend)->check(CLI::IsMember({"internal", "external"}));
    sol->add_option("--solver", sa.solver, "external solver command");
    sol->add_option("--timeout", sa.timeout, "wall clock budget in seconds");
    sol->add_option("--seed", sa.seed);
    sol->add_option("--json", sa.json_path, "write a JSON report");
    sol->add_flag("--no-symmetry", sa.no_symmetry);
    sol->add_option("--order", sa.order)->check(CLI::IsMember({"input", "degree"}));

    BenchArgs ba;
    auto* ben = app.add_subcommand("bench", "sweep a directory of instances");
    ben->add_option("--dir", ba.dir)->required();
    ben->add_option("--problem", ba.problem)->check(CLI::IsMember({"gcp", "bcp"}))->required();
    ben->add_option("--models", ba.models, "comma-separated SAT models")->required();
    ben->add_option("--timeout", ba.timeout);
    ben->add_option("--jobs", ba.jobs);
    ben->add_option("--out", ba.out)->required();
    ben->add_option("--survival", ba.survival, "survival curve CSV path");
    ben->add_option("--backend", ba.backend)->check(CLI::IsMember({"internal", "external"}));
    ben->add_option("--solver", ba.solver);
    ben->add_option("--seed", ba.seed);

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "check a coloring file against an instance");
    ver->add_option("--instance", va.instance)->required();
    ver->add_option("--coloring", va.coloring, "lines `v <vertex> <color>`")->required();
    ver->add_option("--problem", va.problem)->check(CLI::IsMember({"gcp", "bcp"}))->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (*enc) return run_encode(ea);
    if (*sol) return run_solve(sa);
    if (*ben) return run_bench(ba);
    if (*ver) return run_verify(va);
    return kExitUsage;
}
