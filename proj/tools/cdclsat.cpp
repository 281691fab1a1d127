// Conflict-driven SAT solver with the standard DIMACS CLI contract:
//   cdclsat FILE.cnf
// prints `s SATISFIABLE` + `v` lines or `s UNSATISFIABLE`,
// exit code 10 for satisfiable, 20 for unsatisfiable, 1 on input errors.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace {

using std::size_t;

int lit_var(int lit) { return std::abs(lit) - 1; }  // 0-based
int lit_idx(int lit) { return 2 * lit_var(lit) + (lit < 0 ? 1 : 0); }

struct Clause {
    std::vector<int> lits;  // DIMACS literals
    double act = 0.0;
    bool learnt = false;
};

class Solver {
public:
    bool parse(std::istream& in) {
        std::string tok;
        long long declared_vars = -1;
        std::vector<int> cur;
        while (in >> tok) {
            if (tok == "c") {
                in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
            } else if (tok == "p") {
                std::string fmt;
                long long m;
                if (!(in >> fmt >> declared_vars >> m) || fmt != "cnf") return false;
                init_vars(static_cast<int>(declared_vars));
            } else if (tok == "%") {
                break;
            } else {
                int lit;
                try {
                    lit = std::stoi(tok);
                } catch (...) {
                    return false;
                }
                if (lit == 0) {
                    add_input_clause(cur);
                    cur.clear();
                } else {
                    if (declared_vars < std::abs(lit)) {
                        declared_vars = std::abs(lit);
                        init_vars(static_cast<int>(declared_vars));
                    }
                    cur.push_back(lit);
                }
            }
        }
        if (!cur.empty()) add_input_clause(cur);
        if (declared_vars < 0) init_vars(0);
        return true;
    }

    // 10 = SAT, 20 = UNSAT
    int solve() {
        if (unsat_on_input_) return 20;
        for (int lit : input_units_)
            if (!enqueue(lit, -1)) return 20;
        if (propagate() != -1) return 20;

        long long conflicts_until_restart = luby_restart_limit();
        long long max_learnts = std::max<long long>(4000, static_cast<long long>(clauses_.size()) / 3);

        while (true) {
            int confl = propagate();
            if (confl != -1) {
                ++conflicts_;
                if (level() == 0) return 20;
                std::vector<int> learnt;
                int back_level = analyze(confl, learnt);
                backtrack(back_level);
                add_learnt(learnt);
                decay_activities();
                if (--conflicts_until_restart <= 0) {
                    backtrack(0);
                    ++restarts_;
                    conflicts_until_restart = luby_restart_limit();
                }
            } else {
                if (static_cast<long long>(learnt_count_) >= max_learnts) {
                    backtrack(0);
                    if (!reduce_db()) return 20;
                    max_learnts += max_learnts / 2;
                    continue;  // re-propagate any units found while simplifying
                }
                int v = pick_branch_var();
                if (v == -1) return 10;  // complete assignment
                trail_lim_.push_back(trail_.size());
                enqueue(polarity_[v] ? (v + 1) : -(v + 1), -1);
            }
        }
    }

    bool model_check() const {
        for (const Clause& c : clauses_) {
            if (c.learnt) continue;
            bool sat = false;
            for (int lit : c.lits)
                if (value_of(lit) == 1) {
                    sat = true;
                    break;
                }
            if (!sat) return false;
        }
        for (int lit : input_units_)
            if (value_of(lit) != 1) return false;
        return true;
    }

    void print_model(std::ostream& out) const {
        int per_line = 0;
        for (int v = 0; v < nvars_; ++v) {
            if (per_line == 0) out << "v";
            out << " " << (assign_[v] == 1 ? v + 1 : -(v + 1));
            if (++per_line == 32) {
                out << "\n";
                per_line = 0;
            }
        }
        if (per_line) out << "\n";
        out << "v 0\n";
    }

    long long conflicts() const { return conflicts_; }
    long long restarts() const { return restarts_; }

private:
    void init_vars(int n) {
        if (n <= nvars_) return;
        int old = nvars_;
        nvars_ = n;
        watches_.resize(2 * static_cast<size_t>(n));
        assign_.resize(n, 0);
        level_of_.resize(n, 0);
        reason_.resize(n, -1);
        activity_.resize(n, 0.0);
        polarity_.resize(n, false);
        seen_.resize(n, 0);
        heap_pos_.resize(n, -1);
        for (int v = old; v < n; ++v) heap_insert(v);
    }

    void add_input_clause(std::vector<int> lits) {
        std::sort(lits.begin(), lits.end(),
                  [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
        // drop duplicates, detect tautologies
        std::vector<int> out;
        for (int lit : lits) {
            if (!out.empty() && out.back() == lit) continue;
            if (!out.empty() && out.back() == -lit) return;  // tautology
            out.push_back(lit);
        }
        if (out.empty()) {
            unsat_on_input_ = true;
            return;
        }
        if (out.size() == 1) {
            input_units_.push_back(out[0]);
            return;
        }
        attach(out, false);
    }

    int attach(const std::vector<int>& lits, bool learnt) {
        int ci = static_cast<int>(clauses_.size());
        clauses_.push_back({lits, learnt ? clause_inc_ : 0.0, learnt});
        watches_[lit_idx(lits[0])].push_back(ci);
        watches_[lit_idx(lits[1])].push_back(ci);
        if (learnt) ++learnt_count_;
        return ci;
    }

    int value_of(int lit) const {  // 1 true, -1 false, 0 unassigned
        int v = assign_[lit_var(lit)];
        return lit > 0 ? v : -v;
    }

    int level() const { return static_cast<int>(trail_lim_.size()); }

    bool enqueue(int lit, int reason) {
        int v = lit_var(lit);
        if (assign_[v] != 0) return value_of(lit) == 1;
        assign_[v] = lit > 0 ? 1 : -1;
        level_of_[v] = level();
        reason_[v] = reason;
        trail_.push_back(lit);
        return true;
    }

    // returns conflicting clause index or -1
    int propagate() {
        while (qhead_ < trail_.size()) {
            int lit = trail_[qhead_++];
            auto& wl = watches_[lit_idx(-lit)];
            size_t keep = 0;
            for (size_t wi = 0; wi < wl.size(); ++wi) {
                int ci = wl[wi];
                auto& lits = clauses_[ci].lits;
                if (lits[0] == -lit) std::swap(lits[0], lits[1]);
                if (value_of(lits[0]) == 1) {
                    wl[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (size_t i = 2; i < lits.size(); ++i)
                    if (value_of(lits[i]) != -1) {
                        std::swap(lits[1], lits[i]);
                        watches_[lit_idx(lits[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                if (moved) continue;
                wl[keep++] = ci;
                if (!enqueue(lits[0], ci)) {
                    for (size_t rest = wi + 1; rest < wl.size(); ++rest) wl[keep++] = wl[rest];
                    wl.resize(keep);
                    qhead_ = trail_.size();
                    return ci;
                }
            }
            wl.resize(keep);
        }
        return -1;
    }

    // first-UIP conflict analysis; learnt[0] is the asserting literal
    int analyze(int confl, std::vector<int>& learnt) {
        learnt.push_back(0);  // placeholder
        int counter = 0;
        int lit = 0;
        size_t idx = trail_.size();
        int ci = confl;
        do {
            Clause& c = clauses_[ci];
            if (c.learnt) bump_clause(c);
            for (int q : c.lits) {
                if (q == lit) continue;  // skip the resolved literal
                int v = lit_var(q);
                if (!seen_[v] && level_of_[v] > 0) {
                    seen_[v] = 1;
                    bump_var(v);
                    if (level_of_[v] == level())
                        ++counter;
                    else
                        learnt.push_back(q);
                }
            }
            // walk back to the next marked trail literal
            while (!seen_[lit_var(trail_[idx - 1])]) --idx;
            --idx;
            lit = trail_[idx];
            seen_[lit_var(lit)] = 0;
            ci = reason_[lit_var(lit)];
            --counter;
        } while (counter > 0);
        learnt[0] = -lit;

        for (size_t i = 1; i < learnt.size(); ++i) seen_[lit_var(learnt[i])] = 0;

        if (learnt.size() == 1) return 0;
        // move the literal of the highest remaining level to position 1
        size_t best = 1;
        for (size_t i = 2; i < learnt.size(); ++i)
            if (level_of_[lit_var(learnt[i])] > level_of_[lit_var(learnt[best])]) best = i;
        std::swap(learnt[1], learnt[best]);
        return level_of_[lit_var(learnt[1])];
    }

    void add_learnt(const std::vector<int>& learnt) {
        if (learnt.size() == 1) {
            enqueue(learnt[0], -1);
            return;
        }
        int ci = attach(learnt, true);
        enqueue(learnt[0], ci);
    }

    void backtrack(int target_level) {
        if (level() <= target_level) return;
        size_t bound = trail_lim_[target_level];
        for (size_t i = trail_.size(); i-- > bound;) {
            int v = lit_var(trail_[i]);
            polarity_[v] = assign_[v] == 1;
            assign_[v] = 0;
            reason_[v] = -1;
            if (heap_pos_[v] == -1) heap_insert(v);
        }
        trail_.resize(bound);
        trail_lim_.resize(target_level);
        qhead_ = trail_.size();
    }

    int pick_branch_var() {
        while (!heap_.empty()) {
            int v = heap_[0];
            heap_remove_top();
            if (assign_[v] == 0) return v;
        }
        return -1;
    }

    void bump_var(int v) {
        activity_[v] += var_inc_;
        if (activity_[v] > 1e100) {
            for (int u = 0; u < nvars_; ++u) activity_[u] *= 1e-100;
            var_inc_ *= 1e-100;
        }
        if (heap_pos_[v] != -1) heap_up(heap_pos_[v]);
    }

    void bump_clause(Clause& c) {
        c.act += clause_inc_;
        if (c.act > 1e20) {
            for (Clause& other : clauses_)
                if (other.learnt) other.act *= 1e-20;
            clause_inc_ *= 1e-20;
        }
    }

    void decay_activities() {
        var_inc_ /= 0.95;
        clause_inc_ /= 0.999;
    }

    // drop the less active half of the learnt clauses and simplify against
    // the root assignment; must run at decision level 0. Watch positions
    // are rebuilt on non-false literals so no propagation can be missed.
    // Returns false when simplification proves unsatisfiability.
    bool reduce_db() {
        std::vector<int> cand;
        for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci) {
            const Clause& c = clauses_[ci];
            if (c.learnt && c.lits.size() > 2) cand.push_back(ci);
        }
        std::sort(cand.begin(), cand.end(),
                  [&](int a, int b) { return clauses_[a].act < clauses_[b].act; });
        std::vector<char> drop(clauses_.size(), 0);
        for (size_t i = 0; i < cand.size() / 2; ++i) drop[cand[i]] = 1;

        std::vector<Clause> compact;
        compact.reserve(clauses_.size());
        for (size_t ci = 0; ci < clauses_.size(); ++ci) {
            if (drop[ci]) continue;
            Clause& c = clauses_[ci];
            bool satisfied = false;
            std::vector<int> lits;
            for (int lit : c.lits) {
                int val = value_of(lit);
                if (val == 1) {
                    satisfied = true;
                    break;
                }
                if (val == 0) lits.push_back(lit);  // root-false literals vanish
            }
            if (satisfied) continue;
            if (lits.empty()) return false;
            if (lits.size() == 1) {
                if (!enqueue(lits[0], -1)) return false;
                continue;
            }
            c.lits = std::move(lits);
            compact.push_back(std::move(c));
        }
        clauses_ = std::move(compact);
        learnt_count_ = 0;
        for (const Clause& c : clauses_)
            if (c.learnt) ++learnt_count_;
        for (auto& wl : watches_) wl.clear();
        for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci) {
            watches_[lit_idx(clauses_[ci].lits[0])].push_back(ci);
            watches_[lit_idx(clauses_[ci].lits[1])].push_back(ci);
        }
        // root assignments are facts; no reason clause may dangle
        for (int v = 0; v < nvars_; ++v) reason_[v] = -1;
        return true;
    }

    long long luby_restart_limit() {
        // luby sequence 1,1,2,1,1,2,4,... scaled by 128
        auto luby = [](long long x) {
            long long size = 1, seq = 0;
            while (size < x + 1) {
                ++seq;
                size = 2 * size + 1;
            }
            while (size - 1 != x) {
                size = (size - 1) / 2;
                --seq;
                x = x % size;
            }
            return 1LL << seq;
        };
        return 128 * luby(restarts_);
    }

    // indexed binary max-heap on activity, ties by lower var index
    bool heap_less(int a, int b) const {
        if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
        return a < b;
    }
    void heap_insert(int v) {
        heap_pos_[v] = static_cast<int>(heap_.size());
        heap_.push_back(v);
        heap_up(heap_pos_[v]);
    }
    void heap_up(int i) {
        int v = heap_[i];
        while (i > 0) {
            int p = (i - 1) / 2;
            if (!heap_less(v, heap_[p])) break;
            heap_[i] = heap_[p];
            heap_pos_[heap_[i]] = i;
            i = p;
        }
        heap_[i] = v;
        heap_pos_[v] = i;
    }
    void heap_down(int i) {
        int v = heap_[i];
        int n = static_cast<int>(heap_.size());
        while (true) {
            int l = 2 * i + 1, r = 2 * i + 2, best = i;
            if (l < n && heap_less(heap_[l], v)) best = l;
            if (r < n && heap_less(heap_[r], best == i ? v : heap_[best])) best = r;
            if (best == i) break;
            heap_[i] = heap_[best];
            heap_pos_[heap_[i]] = i;
            i = best;
        }
        heap_[i] = v;
        heap_pos_[v] = i;
    }
    void heap_remove_top() {
        int v = heap_[0];
        heap_pos_[v] = -1;
        if (heap_.size() > 1) {
            heap_[0] = heap_.back();
            heap_pos_[heap_[0]] = 0;
            heap_.pop_back();
            heap_down(0);
        } else {
            heap_.pop_back();
        }
    }

    int nvars_ = 0;
    bool unsat_on_input_ = false;
    std::vector<Clause> clauses_;
    std::vector<int> input_units_;
    std::vector<std::vector<int>> watches_;
    std::vector<int> assign_;
    std::vector<int> level_of_;
    std::vector<int> reason_;
    std::vector<int> trail_;
    std::vector<size_t> trail_lim_;
    size_t qhead_ = 0;
    std::vector<double> activity_;
    std::vector<bool> polarity_;
    std::vector<char> seen_;
    std::vector<int> heap_;
    std::vector<int> heap_pos_;
    double var_inc_ = 1.0;
    double clause_inc_ = 1.0;
    long long conflicts_ = 0;
    long long restarts_ = 0;
    long long learnt_count_ = 0;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: cdclsat FILE.cnf\n";
        return 1;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 1;
    }
    Solver solver;
    if (!solver.parse(in)) {
        std::cerr << "parse error in " << argv[1] << "\n";
        return 1;
    }
    int result = solver.solve();
    if (result == 10) {
        if (!solver.model_check()) {
            std::cerr << "internal error: model check failed\n";
            return 1;
        }
        std::cout << "c conflicts " << solver.conflicts() << " restarts " << solver.restarts() << "\n";
        std::cout << "s SATISFIABLE\n";
        solver.print_model(std::cout);
        return 10;
    }
    std::cout << "c conflicts " << solver.conflicts() << " restarts " << solver.restarts() << "\n";
    std::cout << "s UNSATISFIABLE\n";
    return 20;
}
