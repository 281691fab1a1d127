#include "colorsat/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace colorsat {

std::string to_string(const VarKey& key) {
    const char* k = key.kind == VarKind::X ? "x" : key.kind == VarKind::Y ? "y" : "s";
    return std::string(k) + "_" + std::to_string(key.v) + "_" + std::to_string(key.i);
}

int VarRegistry::add(const VarKey& key) {
    auto [it, inserted] = index_.emplace(key, static_cast<int>(keys_.size()) + 1);
    if (!inserted) throw std::runtime_error("registry: duplicate variable " + to_string(key));
    keys_.push_back(key);
    return it->second;
}

int VarRegistry::get(const VarKey& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw std::runtime_error("registry: unknown variable " + to_string(key));
    return it->second;
}

int VarRegistry::lookup(const VarKey& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? 0 : it->second;
}

const VarKey& VarRegistry::key(int var) const {
    if (var < 1 || var > size()) throw std::runtime_error("registry: variable index out of range");
    return keys_[var - 1];
}

void Cnf::add_clause(std::vector<int> lits, const std::string& group) {
    if (lits.empty()) throw std::runtime_error("cnf: empty clause");
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (size_t i = 0; i < lits.size(); ++i) {
        int lit = lits[i];
        if (lit == 0 || std::abs(lit) > nvars())
            throw std::runtime_error("cnf: literal out of range");
        if (i > 0 && lits[i - 1] == -lit)
            throw std::runtime_error("cnf: complementary literals in one clause");
    }
    clauses_.push_back(std::move(lits));
    groups_[group].clauses++;
}

void Cnf::add_unit(int lit, const std::string& group) {
    if (lit == 0 || std::abs(lit) > nvars()) throw std::runtime_error("cnf: unit literal out of range");
    for (int u : units_) {
        if (u == lit) return;  // already fixed
        if (u == -lit) {
            trivially_unsat_ = true;
            return;
        }
    }
    units_.push_back(lit);
    groups_[group].units++;
}

long long Cnf::group_clauses(const std::string& g) const {
    auto it = groups_.find(g);
    if (it == groups_.end()) return 0;
    return it->second.clauses + it->second.units;
}

std::string to_dimacs(const Cnf& f) {
    std::ostringstream out;
    // a proved-trivially-unsat formula carries one marker empty clause
    long long count = f.clause_count() + (f.trivially_unsat() ? 1 : 0);
    out << "p cnf " << f.nvars() << " " << count << "\n";
    if (f.trivially_unsat()) out << "0\n";
    for (int u : f.units()) out << u << " 0\n";
    for (const auto& cl : f.clauses()) {
        for (int lit : cl) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

ParsedModel parse_model(const std::string& solver_output, const Cnf& f) {
    ParsedModel m;
    std::istringstream in(solver_output);
    std::string line;
    bool saw_sat = false;
    std::vector<bool> assign(static_cast<size_t>(f.nvars()) + 1, false);
    while (std::getline(in, line)) {
        if (line.rfind("s ", 0) == 0) {
            if (line.find("UNSATISFIABLE") != std::string::npos) {
                m.status = ModelStatus::Unsat;
                return m;
            }
            if (line.find("SATISFIABLE") != std::string::npos) saw_sat = true;
        } else if (line.rfind("v ", 0) == 0 || line == "v") {
            std::istringstream ls(line.substr(1));
            long long lit;
            while (ls >> lit) {
                if (lit == 0) continue;
                long long var = lit > 0 ? lit : -lit;
                if (var <= f.nvars()) assign[static_cast<size_t>(var)] = lit > 0;
            }
        }
    }
    if (!saw_sat) return m;  // Unknown
    m.status = ModelStatus::Sat;
    m.assignment = std::move(assign);
    return m;
}

bool satisfies(const Cnf& f, const std::vector<bool>& assignment) {
    if (f.trivially_unsat()) return false;
    if (assignment.size() < static_cast<size_t>(f.nvars()) + 1) return false;
    auto lit_true = [&](int lit) {
        bool v = assignment[static_cast<size_t>(std::abs(lit))];
        return lit > 0 ? v : !v;
    };
    for (int u : f.units())
        if (!lit_true(u)) return false;
    for (const auto& cl : f.clauses()) {
        bool sat = false;
        for (int lit : cl)
            if (lit_true(lit)) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

}  // namespace colorsat
