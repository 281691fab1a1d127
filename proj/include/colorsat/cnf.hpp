#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace colorsat {

/// Semantic CNF variable: X(v,i) assignment, Y(v,i) partial-order ladder,
/// S(v,i) sequential-counter auxiliary.
enum class VarKind : std::uint8_t { X, Y, S };

struct VarKey {
    VarKind kind;
    int v;
    int i;
    auto operator<=>(const VarKey&) const = default;
};

std::string to_string(const VarKey& key);

/// Bijection between semantic keys and DIMACS variable indices 1..nvars.
class VarRegistry {
public:
    int add(const VarKey& key);           // throws on duplicate
    int get(const VarKey& key) const;     // throws if unregistered
    int lookup(const VarKey& key) const;  // 0 if unregistered
    const VarKey& key(int var) const;
    int size() const { return static_cast<int>(keys_.size()); }

private:
    std::map<VarKey, int> index_;
    std::vector<VarKey> keys_;
};

struct GroupCount {
    long long clauses = 0;
    long long units = 0;
};

/// CNF formula under construction: clauses plus pre-fixed unit literals
/// (precoloring and top-of-ladder fixings are kept as units, not
/// substituted away). Clause groups are tagged for size accounting.
class Cnf {
public:
    int nvars() const { return registry_.size(); }
    int new_var(const VarKey& key) { return registry_.add(key); }
    int var(const VarKey& key) const { return registry_.get(key); }

    void add_clause(std::vector<int> lits, const std::string& group);
    void add_unit(int lit, const std::string& group);

    const std::vector<std::vector<int>>& clauses() const { return clauses_; }
    const std::vector<int>& units() const { return units_; }
    long long clause_count() const {
        return static_cast<long long>(clauses_.size()) + static_cast<long long>(units_.size());
    }
    const std::map<std::string, GroupCount>& groups() const { return groups_; }
    long long group_clauses(const std::string& g) const;
    const VarRegistry& registry() const { return registry_; }
    bool trivially_unsat() const { return trivially_unsat_; }

private:
    VarRegistry registry_;
    std::vector<std::vector<int>> clauses_;
    std::vector<int> units_;
    std::map<std::string, GroupCount> groups_;
    bool trivially_unsat_ = false;
};

/// DIMACS CNF text: header, units first, then clauses, all 0-terminated.
std::string to_dimacs(const Cnf& f);

enum class ModelStatus { Sat, Unsat, Unknown };

struct ParsedModel {
    ModelStatus status = ModelStatus::Unknown;
    std::vector<bool> assignment;  // index 1..nvars; unmentioned vars false
};

/// Interpret standard SAT solver output: `s` status line, `v` value lines.
ParsedModel parse_model(const std::string& solver_output, const Cnf& f);

/// True iff the assignment satisfies every clause and unit of f.
bool satisfies(const Cnf& f, const std::vector<bool>& assignment);

}  // namespace colorsat
