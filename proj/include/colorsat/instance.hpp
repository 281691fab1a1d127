#pragma once

#include <string>
#include <utility>
#include <vector>

namespace colorsat {

/// Undirected edge with a required color distance. Stored normalized (u < v).
struct Edge {
    int u = 0;
    int v = 0;
    int d = 1;
};

/// An undirected graph with 1-based vertex labels 1..n and positive integer
/// edge distances (all 1 for a plain coloring instance).
class Instance {
public:
    Instance() = default;
    Instance(int n, std::vector<Edge> edges, std::string name = "");

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name() const { return name_; }

    // neighbors of v as (vertex, distance) pairs, sorted by vertex
    const std::vector<std::pair<int, int>>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;
    // distance of edge {u,v}, 0 if not adjacent
    int distance(int u, int v) const;

    // true if any edge has d > 1
    bool weighted() const;
    long long total_distance() const;
    double avg_distance() const;
    int max_distance() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::string name_;
};

/// Total color assignment, color(v) >= 1 for v in 1..n.
struct Coloring {
    std::vector<int> colors;  // index 0 unused

    Coloring() = default;
    explicit Coloring(int n) : colors(n + 1, 0) {}

    int num_vertices() const { return static_cast<int>(colors.size()) - 1; }
    int color(int v) const { return colors[v]; }
    void set(int v, int c) { colors[v] = c; }
    int max_color() const;
    bool total() const;  // every vertex has a color >= 1
};

/// Parse DIMACS .col text. Accepts `p edge`/`p edges`, `e u v [d]` lines,
/// `c` comments and `n` node-weight lines (ignored). Duplicate edges are
/// merged keeping the maximum distance. Throws std::runtime_error on
/// malformed input; a problem-line/edge-count mismatch only adds a warning.
Instance parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Canonical DIMACS text: sorted edges, distance token omitted when d = 1.
std::string write_dimacs(const Instance& inst);

/// Read and parse an instance file; the instance name is the file stem.
Instance load_instance(const std::string& path, std::vector<std::string>* warnings = nullptr);

}  // namespace colorsat
