#include "colorsat/ilp.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace colorsat {

bool is_bandwidth_ilp(IlpKind kind) {
    return kind == IlpKind::AssIB || kind == IlpKind::PopIB || kind == IlpKind::PophIB;
}

std::string to_string(IlpKind kind) {
    switch (kind) {
        case IlpKind::AssI: return "ass-i";
        case IlpKind::PopI: return "pop-i";
        case IlpKind::PophI: return "poph-i";
        case IlpKind::AssIB: return "ass-i-b";
        case IlpKind::PopIB: return "pop-i-b";
        case IlpKind::PophIB: return "poph-i-b";
    }
    return "?";
}

namespace {

struct Term {
    long long coef;
    std::string var;
};

struct Row {
    const char* group;
    std::vector<Term> terms;
    char sense;  // 'L' <=, 'G' >=, 'E' =
    long long rhs;
};

std::string xv(int v, int i) { return "x_" + std::to_string(v) + "_" + std::to_string(i); }
std::string yv(int v, int i) { return "y_" + std::to_string(v) + "_" + std::to_string(i); }
std::string yq(int i) { return "y_q_" + std::to_string(i); }
std::string wi(int i) { return "w_" + std::to_string(i); }

using Sink = std::function<void(Row&&)>;

bool uses_x(IlpKind k) {
    return k == IlpKind::AssI || k == IlpKind::AssIB || k == IlpKind::PophI || k == IlpKind::PophIB;
}
bool uses_y(IlpKind k) { return !(k == IlpKind::AssI || k == IlpKind::AssIB); }

void assignment_rows(const Instance& inst, int H, const Sink& out) {
    for (int v = 1; v <= inst.num_vertices(); ++v) {
        Row r{"assign", {}, 'E', 1};
        for (int i = 1; i <= H; ++i) r.terms.push_back({1, xv(v, i)});
        out(std::move(r));
    }
}

void order_rows(const Instance& inst, int H, const Sink& out) {
    int n = inst.num_vertices();
    for (int v = 1; v <= n; ++v) out({"order_top", {{1, yv(v, H)}}, 'E', 0});
    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= H - 1; ++i)
            out({"order_chain", {{1, yv(v, i)}, {-1, yv(v, i + 1)}}, 'G', 0});
}

// the isolated dummy vertex tracks the largest used color
void dummy_rows(const Instance& inst, int H, const Sink& out) {
    for (int v = 1; v <= inst.num_vertices(); ++v)
        for (int i = 1; i <= H - 1; ++i)
            out({"dummy_link", {{1, yq(i)}, {-1, yv(v, i)}}, 'G', 0});
}

void channel_rows(const Instance& inst, int H, const Sink& out) {
    for (int v = 1; v <= inst.num_vertices(); ++v) {
        out({"channel", {{1, xv(v, 1)}, {1, yv(v, 1)}}, 'E', 1});
        for (int i = 2; i <= H; ++i)
            out({"channel", {{1, xv(v, i)}, {-1, yv(v, i - 1)}, {1, yv(v, i)}}, 'E', 0});
    }
}

void sym_position_rows_x(const Instance& inst, int H, const Sink& out) {
    for (int v = 1; v <= std::min(inst.num_vertices(), H); ++v)
        for (int i = v + 1; i <= H; ++i) out({"sym_position", {{1, xv(v, i)}}, 'E', 0});
}

void sym_position_rows_y(const Instance& inst, int H, const Sink& out) {
    for (int v = 1; v <= std::min(inst.num_vertices(), H); ++v)
        out({"sym_position", {{1, yv(v, v)}}, 'E', 0});
}

void sym_ladder_rows_x(const Instance& inst, int H, const Sink& out) {
    for (int v = 2; v <= inst.num_vertices() - 1; ++v)
        for (int i = 2; i <= H; ++i) {
            Row r{"sym_ladder", {{1, xv(v, i)}}, 'L', 0};
            for (int u = i - 1; u <= v - 1; ++u) r.terms.push_back({-1, xv(u, i - 1)});
            out(std::move(r));
        }
}

void sym_ladder_rows_y(const Instance& inst, int H, const Sink& out) {
    for (int v = 2; v <= inst.num_vertices() - 1; ++v)
        for (int i = 2; i <= H; ++i) {
            Row r{"sym_ladder", {{1, yv(v, i)}}, 'L', 0};
            for (int u = i - 1; u <= v - 1; ++u) {
                r.terms.push_back({-1, yv(u, i - 1)});
                r.terms.push_back({1, yv(u, i)});
            }
            out(std::move(r));
        }
}

// ladder term with the out-of-range convention y(v,i)=1 for i<1, 0 for i>H
void add_bounded_y(Row& r, long long coef, int v, int i, int H) {
    if (i < 1)
        r.rhs -= coef;  // constant contribution moves to the right side
    else if (i <= H)
        r.terms.push_back({coef, yv(v, i)});
}

void generate_rows(IlpKind kind, const Instance& inst, int H, const Sink& out) {
    int n = inst.num_vertices();
    switch (kind) {
        case IlpKind::AssI: {
            assignment_rows(inst, H, out);
            for (const Edge& e : inst.edges())
                for (int i = 1; i <= H; ++i)
                    out({"edge_conflict", {{1, xv(e.u, i)}, {1, xv(e.v, i)}, {-1, wi(i)}}, 'L', 0});
            for (int i = 1; i <= H; ++i) {
                Row r{"color_used", {{1, wi(i)}}, 'L', 0};
                for (int v = 1; v <= n; ++v) r.terms.push_back({-1, xv(v, i)});
                out(std::move(r));
            }
            for (int i = 2; i <= H; ++i)
                out({"color_chain", {{1, wi(i)}, {-1, wi(i - 1)}}, 'L', 0});
            sym_position_rows_x(inst, H, out);
            sym_ladder_rows_x(inst, H, out);
            break;
        }
        case IlpKind::AssIB: {
            assignment_rows(inst, H, out);
            for (const Edge& e : inst.edges())
                for (int i = 1; i <= H; ++i)
                    for (int j = std::max(1, i - e.d + 1); j <= std::min(H, i + e.d - 1); ++j)
                        out({"bandwidth_edge", {{1, xv(e.u, i)}, {1, xv(e.v, j)}}, 'L', 1});
            for (int v = 1; v <= n; ++v)
                for (int i = 1; i <= H; ++i)
                    out({"max_color", {{static_cast<long long>(i), xv(v, i)}, {-1, "zmax"}}, 'L', 0});
            break;
        }
        case IlpKind::PopI: {
            order_rows(inst, H, out);
            for (const Edge& e : inst.edges()) {
                out({"edge_first_color", {{1, yv(e.u, 1)}, {1, yv(e.v, 1)}}, 'G', 1});
                for (int i = 2; i <= H; ++i)
                    out({"edge_order",
                         {{1, yv(e.u, i - 1)}, {-1, yv(e.u, i)}, {1, yv(e.v, i - 1)}, {-1, yv(e.v, i)}},
                         'L', 1});
            }
            dummy_rows(inst, H, out);
            sym_position_rows_y(inst, H, out);
            sym_ladder_rows_y(inst, H, out);
            break;
        }
        case IlpKind::PophI: {
            order_rows(inst, H, out);
            channel_rows(inst, H, out);
            for (const Edge& e : inst.edges())
                for (int i = 1; i <= H; ++i)
                    out({"edge_conflict", {{1, xv(e.u, i)}, {1, xv(e.v, i)}}, 'L', 1});
            dummy_rows(inst, H, out);
            sym_position_rows_y(inst, H, out);
            sym_ladder_rows_x(inst, H, out);
            break;
        }
        case IlpKind::PopIB: {
            order_rows(inst, H, out);
            for (const Edge& e : inst.edges())
                for (int i = 1; i <= H; ++i) {
                    Row r{"bandwidth_edge", {}, 'L', 1};
                    add_bounded_y(r, 1, e.u, i - 1, H);
                    r.terms.push_back({-1, yv(e.u, i)});
                    add_bounded_y(r, 1, e.v, i - e.d, H);
                    add_bounded_y(r, -1, e.v, i + e.d - 1, H);
                    out(std::move(r));
                }
            dummy_rows(inst, H, out);
            break;
        }
        case IlpKind::PophIB: {
            order_rows(inst, H, out);
            channel_rows(inst, H, out);
            for (const Edge& e : inst.edges())
                for (int i = 1; i <= H; ++i) {
                    Row r{"bandwidth_edge", {{1, xv(e.u, i)}}, 'L', 1};
                    add_bounded_y(r, 1, e.v, i - e.d, H);
                    add_bounded_y(r, -1, e.v, i + e.d - 1, H);
                    out(std::move(r));
                }
            dummy_rows(inst, H, out);
            break;
        }
    }
}

std::vector<std::string> variable_names(IlpKind kind, const Instance& inst, int H) {
    std::vector<std::string> names;
    int n = inst.num_vertices();
    if (uses_x(kind))
        for (int v = 1; v <= n; ++v)
            for (int i = 1; i <= H; ++i) names.push_back(xv(v, i));
    if (uses_y(kind)) {
        for (int v = 1; v <= n; ++v)
            for (int i = 1; i <= H; ++i) names.push_back(yv(v, i));
        for (int i = 1; i <= H; ++i) names.push_back(yq(i));
    }
    if (kind == IlpKind::AssI)
        for (int i = 1; i <= H; ++i) names.push_back(wi(i));
    return names;  // zmax handled separately: it is continuous
}

void check_kind(IlpKind kind, const Instance& inst, int H) {
    if (H < 1) throw std::runtime_error("ilp: H must be >= 1");
    if (!is_bandwidth_ilp(kind) && inst.weighted())
        throw std::runtime_error("ilp: weighted instance needs a bandwidth model kind");
}

}  // namespace

std::string emit_model(IlpKind kind, const Instance& inst, int H) {
    check_kind(kind, inst, H);
    std::ostringstream out;
    out << "\\ " << (inst.name().empty() ? "instance" : inst.name()) << " " << to_string(kind)
        << " H=" << H << "\n";
    out << "Minimize\n obj:";
    switch (kind) {
        case IlpKind::AssI:
            for (int i = 1; i <= H; ++i) out << (i == 1 ? " " : " + ") << wi(i);
            break;
        case IlpKind::AssIB:
            out << " zmax";
            break;
        default:
            out << " 1";
            for (int i = 1; i <= H; ++i) out << " + " << yq(i);
            break;
    }
    out << "\nSubject To\n";
    long long idx = 0;
    generate_rows(kind, inst, H, [&](Row&& r) {
        out << " " << r.group << "_" << ++idx << ":";
        for (size_t t = 0; t < r.terms.size(); ++t) {
            long long c = r.terms[t].coef;
            out << (c < 0 ? " - " : (t == 0 ? " " : " + "));
            if (std::abs(c) != 1) out << std::abs(c) << " ";
            out << r.terms[t].var;
        }
        if (r.terms.empty()) out << " 0";
        out << (r.sense == 'L' ? " <= " : r.sense == 'G' ? " >= " : " = ") << r.rhs << "\n";
    });
    out << "Binaries\n";
    for (const auto& name : variable_names(kind, inst, H)) out << " " << name << "\n";
    out << "End\n";
    return out.str();
}

IlpSize count_model_size(IlpKind kind, const Instance& inst, int H) {
    check_kind(kind, inst, H);
    IlpSize s;
    s.nvars = static_cast<long long>(variable_names(kind, inst, H).size()) +
              (kind == IlpKind::AssIB ? 1 : 0);
    generate_rows(kind, inst, H, [&](Row&& r) {
        ++s.nconstraints;
        ++s.row_groups[r.group];
    });
    return s;
}

std::pair<long long, long long> count_ass_i_b_closed_form(const Instance& inst, int H) {
    long long n = inst.num_vertices();
    long long m = inst.num_edges();
    long long h = H;
    long long vars = h * n + 1;
    long long sum_d = inst.total_distance();
    long long sum_dsq_minus_d = 0;
    for (const Edge& e : inst.edges())
        sum_dsq_minus_d += static_cast<long long>(e.d) * e.d - e.d;
    // H|E|(2 d_avg - 1) = H (2 sum_d - |E|), kept in integers
    long long rows = (h + 1) * n + h * (2 * sum_d - m) - sum_dsq_minus_d;
    return {vars, rows};
}

LpStructure parse_lp_structure(const std::string& lp_text) {
    LpStructure s;
    std::istringstream in(lp_text);
    std::string line;
    enum { Start, Objective, Rows, Bins, Done } state = Start;
    auto is_name = [](const std::string& t) {
        if (t.empty() || std::isdigit(static_cast<unsigned char>(t[0]))) return false;
        return std::all_of(t.begin(), t.end(),
                           [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
    };
    auto is_number = [](const std::string& t) {
        if (t.empty()) return false;
        size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) return false;
        return std::all_of(t.begin() + start, t.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto parse_expr_side = [&](std::vector<std::string> toks, bool allow_constant, long long* terms) {
        // expects [const|term] (+|- [coef] var)*
        size_t i = 0;
        bool first = true;
        while (i < toks.size()) {
            std::string sign = "+";
            if (toks[i] == "+" || toks[i] == "-") {
                sign = toks[i];
                ++i;
            } else if (!first) {
                throw std::runtime_error("lp: missing operator near '" + toks[i] + "'");
            }
            if (i >= toks.size()) throw std::runtime_error("lp: dangling operator");
            if (is_number(toks[i])) {
                if (i + 1 < toks.size() && is_name(toks[i + 1])) {
                    ++i;  // coefficient
                } else if (allow_constant) {
                    s.has_objective_constant = true;
                    ++i;
                    first = false;
                    continue;
                } else {
                    throw std::runtime_error("lp: stray constant in row");
                }
            }
            if (i >= toks.size() || !is_name(toks[i]))
                throw std::runtime_error("lp: expected variable name");
            ++i;
            ++*terms;
            first = false;
        }
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '\\') continue;
        std::string joined = toks[0];
        if (toks.size() >= 2) joined += " " + toks[1];
        if (toks[0] == "Minimize" || toks[0] == "Maximize") {
            state = Objective;
            continue;
        }
        if (joined == "Subject To") {
            state = Rows;
            continue;
        }
        if (toks[0] == "Binaries" || toks[0] == "Bounds" || toks[0] == "Generals") {
            state = Bins;
            continue;
        }
        if (toks[0] == "End") {
            state = Done;
            continue;
        }
        switch (state) {
            case Objective: {
                if (toks[0].back() != ':') throw std::runtime_error("lp: objective needs a name");
                parse_expr_side({toks.begin() + 1, toks.end()}, true, &s.objective_terms);
                break;
            }
            case Rows: {
                if (toks[0].back() != ':') throw std::runtime_error("lp: row needs a name");
                // split at the sense token
                size_t sense = 0;
                for (size_t i = 1; i < toks.size(); ++i)
                    if (toks[i] == "<=" || toks[i] == ">=" || toks[i] == "=") {
                        sense = i;
                        break;
                    }
                if (sense == 0 || sense + 2 != toks.size() || !is_number(toks[sense + 1]))
                    throw std::runtime_error("lp: malformed row: " + line);
                long long terms = 0;
                parse_expr_side({toks.begin() + 1, toks.begin() + sense}, false, &terms);
                ++s.rows;
                break;
            }
            case Bins: {
                for (const auto& tok : toks) {
                    if (!is_name(tok)) throw std::runtime_error("lp: bad binary name " + tok);
                    ++s.binaries;
                }
                break;
            }
            default:
                throw std::runtime_error("lp: content outside any section: " + line);
        }
    }
    if (state != Done) throw std::runtime_error("lp: missing End");
    return s;
}

}  // namespace colorsat
