#include "colorsat/instance.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace colorsat {

Instance::Instance(int n, std::vector<Edge> edges, std::string name)
    : n_(n), name_(std::move(name)) {
    if (n < 0) throw std::runtime_error("instance: negative vertex count");
    std::map<std::pair<int, int>, int> merged;
    for (Edge e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 1 || e.v > n) throw std::runtime_error("instance: endpoint out of range 1..n");
        if (e.u == e.v) throw std::runtime_error("instance: self-loop on vertex " + std::to_string(e.u));
        if (e.d < 1) throw std::runtime_error("instance: edge distance must be >= 1");
        auto key = std::make_pair(e.u, e.v);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, e.d);
        else
            it->second = std::max(it->second, e.d);  // keep the most constrained distance
    }
    edges_.reserve(merged.size());
    adj_.assign(n + 1, {});
    for (const auto& [uv, d] : merged) {
        edges_.push_back({uv.first, uv.second, d});
        adj_[uv.first].emplace_back(uv.second, d);
        adj_[uv.second].emplace_back(uv.first, d);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<std::pair<int, int>>& Instance::neighbors(int v) const { return adj_.at(v); }

int Instance::degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

bool Instance::adjacent(int u, int v) const { return distance(u, v) != 0; }

int Instance::distance(int u, int v) const {
    const auto& a = adj_.at(u);
    auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, 0));
    if (it != a.end() && it->first == v) return it->second;
    return 0;
}

bool Instance::weighted() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.d > 1; });
}

long long Instance::total_distance() const {
    long long s = 0;
    for (const Edge& e : edges_) s += e.d;
    return s;
}

double Instance::avg_distance() const {
    if (edges_.empty()) return 0.0;
    return static_cast<double>(total_distance()) / static_cast<double>(edges_.size());
}

int Instance::max_distance() const {
    int m = 0;
    for (const Edge& e : edges_) m = std::max(m, e.d);
    return m;
}

int Coloring::max_color() const {
    int m = 0;
    for (size_t v = 1; v < colors.size(); ++v) m = std::max(m, colors[v]);
    return m;
}

bool Coloring::total() const {
    for (size_t v = 1; v < colors.size(); ++v)
        if (colors[v] < 1) return false;
    return true;
}

Instance parse_dimacs(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long declared_m = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto fail = [&](const std::string& msg) {
            throw std::runtime_error("dimacs parse error at line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok == "c" || tok[0] == 'c') {
            continue;
        } else if (tok == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> declared_m)) fail("malformed problem line");
            if (kind != "edge" && kind != "edges") fail("expected 'p edge', got 'p " + kind + "'");
            if (n < 0) fail("negative vertex count");
        } else if (tok == "e") {
            if (n < 0) fail("edge line before problem line");
            int u, v;
            if (!(ls >> u >> v)) fail("malformed edge line");
            int d = 1;
            ls >> d;  // optional distance token
            if (u < 1 || u > n || v < 1 || v > n) fail("endpoint out of range");
            if (u == v) fail("self-loop on vertex " + std::to_string(u));
            if (d <= 0) fail("nonpositive edge distance");
            edges.push_back({u, v, d});
        } else if (tok == "n") {
            // node weight line, irrelevant for coloring
            continue;
        } else {
            fail("unrecognized line '" + tok + "'");
        }
    }
    if (n < 0) throw std::runtime_error("dimacs parse error: missing problem line");
    Instance inst(n, std::move(edges));
    if (declared_m != inst.num_edges() && warnings) {
        warnings->push_back("declared edge count " + std::to_string(declared_m) + " but parsed " +
                            std::to_string(inst.num_edges()) + " distinct edges");
    }
    return inst;
}

std::string write_dimacs(const Instance& inst) {
    std::ostringstream out;
    out << "p edge " << inst.num_vertices() << " " << inst.num_edges() << "\n";
    for (const Edge& e : inst.edges()) {
        out << "e " << e.u << " " << e.v;
        if (e.d != 1) out << " " << e.d;
        out << "\n";
    }
    return out.str();
}

Instance load_instance(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    Instance inst = parse_dimacs(buf.str(), warnings);
    std::string stem = path;
    if (auto pos = stem.find_last_of('/'); pos != std::string::npos) stem = stem.substr(pos + 1);
    if (auto pos = stem.find_last_of('.'); pos != std::string::npos) stem = stem.substr(0, pos);
    return Instance(inst.num_vertices(), inst.edges(), stem);
}

}  // namespace colorsat
