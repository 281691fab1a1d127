#include "colorsat/solve.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace colorsat {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Sat: return "sat";
        case SolveStatus::Unsat: return "unsat";
        case SolveStatus::Timeout: return "timeout";
        case SolveStatus::Error: return "error";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// chronological-backtracking DPLL over watched literals
class Dpll {
public:
    explicit Dpll(const Cnf& f) : f_(f), nvars_(f.nvars()) {
        for (const auto& cl : f.clauses()) clauses_.push_back(cl);
        watches_.assign(2 * static_cast<size_t>(nvars_) + 2, {});
        value_.assign(nvars_ + 1, 0);
        for (size_t ci = 0; ci < clauses_.size(); ++ci) {
            auto& cl = clauses_[ci];
            if (cl.size() == 1) {
                pending_units_.push_back(cl[0]);
            } else {
                watches_[widx(cl[0])].push_back(ci);
                watches_[widx(cl[1])].push_back(ci);
            }
        }
        for (int u : f.units()) pending_units_.push_back(u);
    }

    SolveResult run(double timeout_s) {
        auto t0 = Clock::now();
        SolveResult res;
        if (timeout_s <= 0) {
            res.status = SolveStatus::Timeout;
            return res;
        }
        if (f_.trivially_unsat()) {
            res.status = SolveStatus::Unsat;
            res.seconds = seconds_since(t0);
            return res;
        }
        for (int u : pending_units_)
            if (!enqueue(u)) {
                res.status = SolveStatus::Unsat;
                res.seconds = seconds_since(t0);
                return res;
            }
        if (!propagate()) {
            res.status = SolveStatus::Unsat;
            res.seconds = seconds_since(t0);
            return res;
        }
        long long steps = 0;
        while (true) {
            if (((++steps) & 0xff) == 0 && seconds_since(t0) > timeout_s) {
                res.status = SolveStatus::Timeout;
                res.seconds = seconds_since(t0);
                return res;
            }
            int v = next_unassigned();
            if (v == 0) {
                res.status = SolveStatus::Sat;
                res.assignment.assign(nvars_ + 1, false);
                for (int i = 1; i <= nvars_; ++i) res.assignment[i] = value_[i] > 0;
                res.seconds = seconds_since(t0);
                if (!satisfies(f_, res.assignment)) {
                    res.status = SolveStatus::Error;
                    res.message = "internal solver produced a non-model";
                }
                return res;
            }
            decisions_.push_back({v, false});
            trail_marks_.push_back(trail_.size());
            enqueue(v);  // try true first
            while (!propagate()) {
                // undo to the most recent decision still having an untried branch
                while (!decisions_.empty() && decisions_.back().tried_false) {
                    undo_to(trail_marks_.back());
                    decisions_.pop_back();
                    trail_marks_.pop_back();
                }
                if (decisions_.empty()) {
                    res.status = SolveStatus::Unsat;
                    res.seconds = seconds_since(t0);
                    return res;
                }
                int dv = decisions_.back().var;
                undo_to(trail_marks_.back());
                decisions_.back().tried_false = true;
                enqueue(-dv);
            }
        }
    }

private:
    struct Decision {
        int var;
        bool tried_false;
    };

    static size_t widx(int lit) {
        return 2 * static_cast<size_t>(std::abs(lit)) + (lit > 0 ? 0 : 1);
    }

    int next_unassigned() const {
        for (int v = 1; v <= nvars_; ++v)
            if (value_[v] == 0) return v;
        return 0;
    }

    bool enqueue(int lit) {
        int v = std::abs(lit);
        int want = lit > 0 ? 1 : -1;
        if (value_[v] != 0) return value_[v] == want;
        value_[v] = want;
        trail_.push_back(v);
        queue_.push_back(lit);
        return true;
    }

    bool lit_true(int lit) const { return value_[std::abs(lit)] == (lit > 0 ? 1 : -1); }
    bool lit_false(int lit) const { return value_[std::abs(lit)] == (lit > 0 ? -1 : 1); }

    bool propagate() {
        while (!queue_.empty()) {
            int lit = queue_.back();
            queue_.pop_back();
            auto& wl = watches_[widx(-lit)];  // clauses watching the now-false literal
            size_t keep = 0;
            for (size_t wi = 0; wi < wl.size(); ++wi) {
                size_t ci = wl[wi];
                auto& cl = clauses_[ci];
                if (cl[0] == -lit) std::swap(cl[0], cl[1]);
                if (lit_true(cl[0])) {
                    wl[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (size_t i = 2; i < cl.size(); ++i) {
                    if (!lit_false(cl[i])) {
                        std::swap(cl[1], cl[i]);
                        watches_[widx(cl[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                wl[keep++] = ci;  // stays watched
                if (!enqueue(cl[0])) {
                    // conflict: keep remaining watches intact
                    for (size_t rest = wi + 1; rest < wl.size(); ++rest) wl[keep++] = wl[rest];
                    wl.resize(keep);
                    queue_.clear();
                    return false;
                }
            }
            wl.resize(keep);
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            value_[trail_.back()] = 0;
            trail_.pop_back();
        }
        queue_.clear();
    }

    const Cnf& f_;
    int nvars_;
    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<size_t>> watches_;
    std::vector<int> value_;  // 0 unassigned, +1 true, -1 false
    std::vector<int> trail_;
    std::vector<int> pending_units_;
    std::vector<int> queue_;
    std::vector<Decision> decisions_;
    std::vector<size_t> trail_marks_;
};

std::vector<std::string> split_command(const std::string& cmd) {
    std::istringstream in(cmd);
    std::vector<std::string> parts;
    std::string t;
    while (in >> t) parts.push_back(t);
    return parts;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        const char* tmpdir = getenv("TMPDIR");
        std::string templ = std::string(tmpdir ? tmpdir : "/tmp") + "/colorsat_XXXXXX";
        std::vector<char> buf(templ.begin(), templ.end());
        buf.push_back('\0');
        int fd = mkstemp(buf.data());
        if (fd < 0) throw std::runtime_error("cannot create temp file");
        path.assign(buf.data());
        ssize_t off = 0;
        while (off < static_cast<ssize_t>(contents.size())) {
            ssize_t w = write(fd, contents.data() + off, contents.size() - off);
            if (w < 0) {
                close(fd);
                throw std::runtime_error("cannot write temp file");
            }
            off += w;
        }
        close(fd);
    }
    ~TempFile() { unlink(path.c_str()); }
};

}  // namespace

SolveResult solve_internal(const Cnf& f, double timeout_s) {
    Dpll solver(f);
    return solver.run(timeout_s);
}

SolveResult solve_external(const Cnf& f, const std::string& solver_cmd, double timeout_s) {
    auto t0 = Clock::now();
    SolveResult res;
    auto argv_parts = split_command(solver_cmd);
    if (argv_parts.empty()) {
        res.message = "empty solver command";
        return res;
    }

    TempFile cnf_file(to_dimacs(f));
    argv_parts.push_back(cnf_file.path);

    // argv is assembled before fork: only async-signal-safe calls may run
    // in the child of a multithreaded parent (bench workers fork here)
    std::vector<char*> argv;
    for (auto& s : argv_parts) argv.push_back(s.data());
    argv.push_back(nullptr);

    int out_pipe[2], err_pipe[2];
    if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
        res.message = "pipe failed";
        return res;
    }
    pid_t pid = fork();
    if (pid < 0) {
        res.message = "fork failed";
        return res;
    }
    if (pid == 0) {
        setpgid(0, 0);
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        close(out_pipe[0]);
        close(out_pipe[1]);
        close(err_pipe[0]);
        close(err_pipe[1]);
        execvp(argv[0], argv.data());
        const char msg[] = "exec failed\n";
        ssize_t ignored = write(STDERR_FILENO, msg, sizeof msg - 1);
        (void)ignored;
        _exit(127);
    }
    setpgid(pid, pid);  // also from the parent side, against the exec race
    close(out_pipe[1]);
    close(err_pipe[1]);

    std::string out_text, err_text;
    bool timed_out = false;
    {
        struct pollfd fds[2] = {{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}};
        bool open_fd[2] = {true, true};
        char buf[4096];
        while (open_fd[0] || open_fd[1]) {
            double remain = timeout_s - seconds_since(t0);
            if (remain <= 0) {
                timed_out = true;
                kill(-pid, SIGKILL);
                kill(pid, SIGKILL);
                break;
            }
            int timeout_ms = static_cast<int>(std::min(remain * 1000.0 + 1, 1000.0));
            fds[0].events = open_fd[0] ? POLLIN : 0;
            fds[1].events = open_fd[1] ? POLLIN : 0;
            int rc = poll(fds, 2, timeout_ms);
            if (rc < 0) break;
            for (int i = 0; i < 2; ++i) {
                if (!open_fd[i] || !(fds[i].revents & (POLLIN | POLLHUP))) continue;
                ssize_t r = read(fds[i].fd, buf, sizeof buf);
                if (r > 0)
                    (i == 0 ? out_text : err_text).append(buf, static_cast<size_t>(r));
                else
                    open_fd[i] = false;
            }
        }
    }
    close(out_pipe[0]);
    close(err_pipe[0]);

    int status = 0;
    waitpid(pid, &status, 0);  // always reap
    res.seconds = seconds_since(t0);

    if (timed_out) {
        res.status = SolveStatus::Timeout;
        return res;
    }

    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    ParsedModel model = parse_model(out_text, f);
    if (exit_code == 20 || model.status == ModelStatus::Unsat) {
        res.status = SolveStatus::Unsat;
        return res;
    }
    if (exit_code == 10 || model.status == ModelStatus::Sat) {
        if (model.status != ModelStatus::Sat || !satisfies(f, model.assignment)) {
            res.status = SolveStatus::Error;
            res.message = "solver claimed SAT but provided no valid model; stderr: " + err_text;
            return res;
        }
        res.status = SolveStatus::Sat;
        res.assignment = std::move(model.assignment);
        return res;
    }
    res.status = SolveStatus::Error;
    res.message = "unexpected solver exit code " + std::to_string(exit_code) + "; stderr: " + err_text;
    return res;
}

}  // namespace colorsat
