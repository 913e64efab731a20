// Copyright 2026 The effnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Everything numeric goes through the C API.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "effnoise/effnoise.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitValidation = 4;

class Failure : public std::runtime_error {
   public:
    Failure(int exit_code, const std::string &msg) : std::runtime_error(msg), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

   private:
    int exit_code_;
};

[[noreturn]] void usage(const std::string &msg) { throw Failure(kExitUsage, msg); }

void check(effnoise_status s) {
    if (s == EFFNOISE_OK) {
        return;
    }
    std::string msg = std::string(effnoise_status_name(s)) + ": " + effnoise_last_error();
    switch (s) {
        case EFFNOISE_RESOURCE_LIMIT:
            throw Failure(kExitResource, msg);
        case EFFNOISE_CONSTRUCTION_FAILURE:
            throw Failure(kExitValidation, msg);
        case EFFNOISE_INTERNAL_ERROR:
            throw Failure(kExitInternal, msg);
        default:
            throw Failure(kExitUsage, msg);
    }
}

struct CodeDeleter {
    void operator()(effnoise_code *c) const { effnoise_code_free(c); }
};
struct EffectiveDeleter {
    void operator()(effnoise_effective *e) const { effnoise_effective_free(e); }
};
struct ReportDeleter {
    void operator()(effnoise_report *r) const { effnoise_report_free(r); }
};
using CodePtr = std::unique_ptr<effnoise_code, CodeDeleter>;
using EffectivePtr = std::unique_ptr<effnoise_effective, EffectiveDeleter>;
using ReportPtr = std::unique_ptr<effnoise_report, ReportDeleter>;

using Channel = std::array<double, 4>;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

double to_double(const std::string &s, const std::string &what) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        usage("cannot read " + what + " from '" + s + "'");
    }
}

std::size_t to_size(const std::string &s, const std::string &what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size() || v < 0) {
            throw std::invalid_argument(s);
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception &) {
        usage("cannot read " + what + " from '" + s + "'");
    }
}

// "a,b,c" or "start:stop[:step]" (inclusive).
std::vector<std::size_t> size_list(const std::string &text, const std::string &what) {
    std::vector<std::size_t> out;
    if (text.find(':') != std::string::npos) {
        auto parts = split(text, ':');
        if (parts.size() < 2 || parts.size() > 3) {
            usage(what + " range must read start:stop or start:stop:step");
        }
        std::size_t a = to_size(parts[0], what);
        std::size_t b = to_size(parts[1], what);
        std::size_t step = parts.size() == 3 ? to_size(parts[2], what) : 1;
        if (step == 0 || a > b) {
            usage(what + " range is empty");
        }
        for (std::size_t v = a; v <= b; v += step) {
            out.push_back(v);
        }
        return out;
    }
    for (const auto &item : split(text, ',')) {
        out.push_back(to_size(item, what));
    }
    return out;
}

std::vector<double> p_grid(const std::string &text) {
    auto parts = split(text, ':');
    if (parts.size() != 3) {
        usage("--p-grid must read start:stop:count");
    }
    double start = to_double(parts[0], "p-grid start");
    double stop = to_double(parts[1], "p-grid stop");
    std::size_t count = to_size(parts[2], "p-grid count");
    if (count == 0) {
        usage("--p-grid count must be positive");
    }
    if (!(0 <= start && start <= stop && stop <= 1)) {
        usage("--p-grid needs 0 <= start <= stop <= 1");
    }
    if (count == 1) {
        if (start != stop) {
            usage("--p-grid with one point needs start = stop");
        }
        return {start};
    }
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = k + 1 == count ? stop : start + (stop - start) * static_cast<double>(k) / static_cast<double>(count - 1);
    }
    return out;
}

/// Flag and config-file values; flags override the file.
struct RunConfig {
    std::string codes;
    std::string m;
    std::string m1;
    std::string m2;
    std::string noise = "white";
    std::string lambda;
    std::string p_grid;
    std::string p;
    std::string n_grid;
    double tol = 0;
    std::string out;
    unsigned jobs = 0;
    std::vector<std::string> code_files;
};

std::string json_scalar(const nlohmann::json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string out;
        for (const auto &e : v) {
            out += (out.empty() ? "" : ",") + json_scalar(e);
        }
        return out;
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    if (v.is_number()) {
        return fmt(v.get<double>());
    }
    usage("config value " + v.dump() + " has an unsupported type");
}

void load_config(const std::string &path, const std::string &command, RunConfig &cfg,
                 const std::function<bool(const std::string &)> &given) {
    std::ifstream in(path);
    if (!in) {
        usage("cannot open config file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        usage("config file '" + path + "': " + e.what());
    }
    if (!doc.is_object()) {
        usage("config file must hold a JSON object");
    }
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string &key = it.key();
        const auto &v = it.value();
        auto set = [&](const char *flag, std::string &field) {
            if (!given(flag)) {
                field = json_scalar(v);
            }
        };
        if (key == "command") {
            if (json_scalar(v) != command) {
                usage("config file is for command '" + json_scalar(v) + "', not '" + command + "'");
            }
        } else if (key == "code") {
            set("--code", cfg.codes);
        } else if (key == "m") {
            set("--m", cfg.m);
        } else if (key == "m1") {
            set("--m1", cfg.m1);
        } else if (key == "m2") {
            set("--m2", cfg.m2);
        } else if (key == "noise") {
            set("--noise", cfg.noise);
        } else if (key == "lambda") {
            set("--lambda", cfg.lambda);
        } else if (key == "p_grid") {
            set("--p-grid", cfg.p_grid);
        } else if (key == "p") {
            set("--p", cfg.p);
        } else if (key == "n_grid") {
            set("--n-grid", cfg.n_grid);
        } else if (key == "out") {
            set("--out", cfg.out);
        } else if (key == "tol") {
            if (!given("--tol")) {
                if (!v.is_number()) {
                    usage("config 'tol' must be a number");
                }
                cfg.tol = v.get<double>();
            }
        } else if (key == "jobs") {
            if (!given("--jobs")) {
                if (!v.is_number_unsigned()) {
                    usage("config 'jobs' must be a non-negative integer");
                }
                cfg.jobs = v.get<unsigned>();
            }
        } else if (key == "code_file") {
            if (!given("--code-file")) {
                cfg.code_files.clear();
                for (const auto &f : v.is_array() ? v : nlohmann::json::array({v})) {
                    cfg.code_files.push_back(json_scalar(f));
                }
            }
        } else {
            usage("unknown config key '" + key + "'");
        }
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        usage("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CodeSel {
    std::string name;  // family or file label
    std::size_t m = 1;
    std::string file;  // set for user-defined codes
};

CodePtr build(const CodeSel &sel) {
    effnoise_code *raw = nullptr;
    if (!sel.file.empty()) {
        auto text = read_file(sel.file);
        effnoise_status s = effnoise_code_from_json(text.c_str(), &raw);
        if (s != EFFNOISE_OK) {
            std::string msg = "code file '" + sel.file + "': " + effnoise_last_error();
            throw Failure(s == EFFNOISE_CONSTRUCTION_FAILURE ? kExitValidation : kExitUsage, msg);
        }
    } else {
        check(effnoise_code_builtin(sel.name.c_str(), sel.m, &raw));
    }
    return CodePtr(raw);
}

std::vector<CodeSel> code_selection(const RunConfig &cfg, bool need_any) {
    std::vector<std::size_t> ms = cfg.m.empty() ? std::vector<std::size_t>{} : size_list(cfg.m, "--m");
    std::vector<CodeSel> out;
    for (const auto &token : split(cfg.codes, ',')) {
        auto colon = token.find(':');
        if (colon != std::string::npos) {
            out.push_back({token.substr(0, colon), to_size(token.substr(colon + 1), "code size"), ""});
            continue;
        }
        if (ms.empty()) {
            usage("code '" + token + "' needs a size: use " + token + ":M or --m");
        }
        for (auto m : ms) {
            out.push_back({token, m, ""});
        }
    }
    for (const auto &f : cfg.code_files) {
        CodeSel sel;
        sel.file = f;
        auto code = build(sel);
        sel.name = effnoise_code_label(code.get());
        sel.m = effnoise_code_size(code.get());
        out.push_back(sel);
    }
    if (need_any && out.empty()) {
        usage("no codes selected (use --code or --code-file)");
    }
    return out;
}

std::optional<Channel> custom_channel(const RunConfig &cfg) {
    if (cfg.noise == "white" || cfg.noise == "phase") {
        if (!cfg.lambda.empty()) {
            usage("--lambda needs --noise custom");
        }
        return std::nullopt;
    }
    if (cfg.noise != "custom") {
        usage("--noise must be white, phase or custom");
    }
    auto parts = split(cfg.lambda, ',');
    if (parts.size() != 4) {
        usage("--lambda needs four comma-separated values");
    }
    Channel c{};
    for (std::size_t j = 0; j < 4; ++j) {
        c[j] = to_double(parts[j], "--lambda");
    }
    check(effnoise_check_channel(c.data()));
    return c;
}

effnoise_noise noise_kind(const RunConfig &cfg) {
    return cfg.noise == "phase" ? EFFNOISE_NOISE_PHASE : EFFNOISE_NOISE_WHITE;
}

Channel physical(const RunConfig &cfg, double p) {
    Channel c{};
    check(effnoise_noise_channel(noise_kind(cfg), p, c.data()));
    return c;
}

std::vector<double> p_points(const RunConfig &cfg) {
    if (!cfg.p.empty() && !cfg.p_grid.empty()) {
        usage("give either --p or --p-grid");
    }
    if (!cfg.p.empty()) {
        double p = to_double(cfg.p, "--p");
        if (!(p >= 0 && p <= 1)) {
            usage("--p must lie in [0, 1]");
        }
        return {p};
    }
    if (cfg.p_grid.empty()) {
        usage("missing --p-grid");
    }
    return p_grid(cfg.p_grid);
}

std::vector<std::size_t> n_points(const RunConfig &cfg) {
    auto ns = cfg.n_grid.empty() ? std::vector<std::size_t>{} : size_list(cfg.n_grid, "--n-grid");
    if (ns.empty()) {
        usage("--n-grid is empty");
    }
    for (auto n : ns) {
        if (n < 2) {
            usage("--n-grid entries must be at least 2");
        }
    }
    return ns;
}

double tolerance(const RunConfig &cfg, double fallback) {
    if (cfg.tol == 0) {
        return fallback;
    }
    if (!(cfg.tol > 0)) {
        usage("--tol must be positive");
    }
    return cfg.tol;
}

/// Runs fn(0..count-1) on `jobs` threads and returns the results in index
/// order. The first failure by index is rethrown.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)> &fn) {
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned threads = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

class Output {
   public:
    explicit Output(const std::string &path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                usage("cannot write '" + path + "'");
            }
        }
    }
    std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }

   private:
    std::ofstream file_;
};

void write_rows(const RunConfig &cfg, const std::string &header, const std::vector<std::string> &rows) {
    Output out(cfg.out);
    auto &os = out.stream();
    os << header << '\n';
    for (const auto &r : rows) {
        os << r << '\n';
    }
    os.flush();
    if (!os) {
        throw Failure(kExitInternal, "write failed");
    }
}

int cmd_channel(const RunConfig &cfg) {
    auto codes = code_selection(cfg, true);
    auto custom = custom_channel(cfg);
    std::vector<double> ps = custom ? std::vector<double>{-1} : p_points(cfg);

    struct Point {
        std::size_t code;
        double p;
    };
    std::vector<std::size_t> order(codes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return codes[a].m < codes[b].m; });
    std::vector<Point> points;
    for (auto c : order) {
        for (double p : ps) {
            points.push_back({c, p});
        }
    }
    // Sorted by (m, p); codes of equal m keep their command-line order.
    std::stable_sort(points.begin(), points.end(), [&](const Point &a, const Point &b) {
        if (codes[a.code].m != codes[b.code].m) {
            return codes[a.code].m < codes[b.code].m;
        }
        return a.p < b.p;
    });

    std::vector<CodePtr> built;
    for (const auto &sel : codes) {
        built.push_back(build(sel));
    }
    auto rows = parallel_map<std::string>(points.size(), cfg.jobs, [&](std::size_t i) {
        const auto &pt = points[i];
        const auto &sel = codes[pt.code];
        Channel phys = custom ? *custom : physical(cfg, pt.p);
        effnoise_effective *raw = nullptr;
        check(effnoise_derive(built[pt.code].get(), phys.data(), 0, 1, &raw));
        EffectivePtr eff(raw);
        Channel lam{};
        Channel mu{};
        check(effnoise_effective_syndrome(eff.get(), 0, nullptr, lam.data(), nullptr));
        check(effnoise_effective_mean(eff.get(), mu.data()));
        std::string row = sel.name + "," + std::to_string(sel.m) + "," + (custom ? "NA" : fmt(pt.p));
        for (double v : lam) {
            row += "," + fmt(v);
        }
        for (double v : mu) {
            row += "," + fmt(v);
        }
        row += ",";
        if (sel.file.empty() && sel.name == "cluster_ring" && sel.m == 5 && !custom) {
            double pe = 0;
            check(effnoise_p_eff_estimate(pt.p, &pe));
            row += fmt(pe);
        }
        return row;
    });
    write_rows(cfg, "code,m,p,lambda0,lambda1,lambda2,lambda3,mu0,mu1,mu2,mu3,p_eff", rows);
    return kExitOk;
}

int cmd_lifetime(const RunConfig &cfg) {
    custom_channel(cfg);
    if (cfg.noise == "custom") {
        usage("lifetime sweeps p and needs --noise white or phase");
    }
    auto ns = n_points(cfg);
    double tol = tolerance(cfg, 1e-9);
    bool concat = !cfg.m1.empty() || !cfg.m2.empty();
    if (concat && (cfg.m1.empty() || cfg.m2.empty())) {
        usage("--m1 and --m2 go together");
    }
    std::vector<CodeSel> codes = concat && cfg.codes.empty() && cfg.code_files.empty()
                                     ? std::vector<CodeSel>{}
                                     : code_selection(cfg, !concat);
    std::vector<CodePtr> built;
    for (const auto &sel : codes) {
        built.push_back(build(sel));
    }
    struct Task {
        int kind;  // 0 code, 1 concat pair
        std::size_t index;
        std::size_t n;
        std::size_t m1;
        std::size_t m2;
    };
    std::vector<Task> tasks;
    for (std::size_t c = 0; c < codes.size(); ++c) {
        for (auto n : ns) {
            tasks.push_back({0, c, n, 0, 0});
        }
    }
    if (concat) {
        for (auto a : size_list(cfg.m1, "--m1")) {
            for (auto b : size_list(cfg.m2, "--m2")) {
                for (auto n : ns) {
                    tasks.push_back({1, 0, n, a, b});
                }
            }
        }
    }
    auto rows = parallel_map<std::string>(tasks.size(), cfg.jobs, [&](std::size_t i) {
        const auto &t = tasks[i];
        auto line = [](const std::string &enc, std::size_t m, std::size_t n, const effnoise_lifetime_result &r) {
            return enc + "," + std::to_string(m) + "," + std::to_string(n) + "," + fmt(r.p_crit) + "," +
                   fmt(r.residual);
        };
        if (t.kind == 0) {
            effnoise_lifetime_result r{};
            check(effnoise_lifetime(built[t.index].get(), noise_kind(cfg), t.n, tol, &r));
            return line(codes[t.index].name, codes[t.index].m, t.n, r);
        }
        if (cfg.noise != "white") {
            usage("the concatenation lifetime comparison uses white noise");
        }
        effnoise_lifetime_result one{};
        effnoise_lifetime_result two{};
        check(effnoise_lifetime_concat_compare(t.n, t.m1, t.m2, tol, &one, &two));
        std::string tag = std::to_string(t.m1) + "x" + std::to_string(t.m2);
        return line("concat_one_level_" + tag, t.m1 * t.m2, t.n, one) + "\n" +
               line("concat_two_level_" + tag, t.m1 * t.m2, t.n, two);
    });
    write_rows(cfg, "encoding,m,N,p_crit,residual", rows);
    return kExitOk;
}

int cmd_negativity(const RunConfig &cfg) {
    auto codes = code_selection(cfg, true);
    auto custom = custom_channel(cfg);
    double p = -1;
    if (!custom) {
        auto ps = p_points(cfg);
        if (ps.size() != 1) {
            usage("negativity runs at a single p (--p or a one-point --p-grid)");
        }
        p = ps.front();
    }
    auto ns = n_points(cfg);
    Channel phys = custom ? *custom : physical(cfg, p);

    std::vector<Channel> means;
    for (const auto &sel : codes) {
        auto code = build(sel);
        effnoise_effective *raw = nullptr;
        check(effnoise_derive(code.get(), phys.data(), 0, 1, &raw));
        EffectivePtr eff(raw);
        Channel mu{};
        check(effnoise_effective_mean(eff.get(), mu.data()));
        means.push_back(mu);
    }
    std::size_t per = ns.size();
    auto values = parallel_map<double>(codes.size() * per, cfg.jobs, [&](std::size_t i) {
        double v = 0;
        check(effnoise_ghz_negativity(ns[i % per], means[i / per].data(), &v));
        return v;
    });
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto &sel = codes[i / per];
        rows.push_back(sel.name + "," + std::to_string(sel.m) + "," + std::to_string(ns[i % per]) + "," +
                       fmt(values[i]));
    }
    write_rows(cfg, "encoding,m,N,negativity", rows);

    // Curves of different encodings with equal m: report where their order flips.
    for (std::size_t a = 0; a < codes.size(); ++a) {
        for (std::size_t b = a + 1; b < codes.size(); ++b) {
            if (codes[a].m != codes[b].m || codes[a].name == codes[b].name) {
                continue;
            }
            int prev = 0;
            for (std::size_t k = 0; k < per; ++k) {
                double d = values[a * per + k] - values[b * per + k];
                int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
                if (s != 0 && prev != 0 && s != prev) {
                    std::cerr << "N_crit " << codes[a].name << ":" << codes[a].m << " vs " << codes[b].name << ":"
                              << codes[b].m << " = " << ns[k] << '\n';
                }
                if (s != 0) {
                    prev = s;
                }
            }
        }
    }
    return kExitOk;
}

int cmd_concat(const RunConfig &cfg) {
    if (cfg.m1.empty() || cfg.m2.empty()) {
        usage("concat needs --m1 and --m2");
    }
    auto m1s = size_list(cfg.m1, "--m1");
    auto m2s = size_list(cfg.m2, "--m2");
    if (m1s.empty() || m2s.empty()) {
        usage("concat grid is empty");
    }
    double tol = tolerance(cfg, 1e-10);
    std::vector<std::pair<std::size_t, std::size_t>> grid;
    for (auto a : m1s) {
        for (auto b : m2s) {
            grid.emplace_back(a, b);
        }
    }
    auto rows = parallel_map<std::string>(grid.size(), cfg.jobs, [&](std::size_t i) {
        auto [a, b] = grid[i];
        effnoise_critical_rate_result r{};
        std::array<double, 128> brackets{};
        check(effnoise_critical_rate(a, b, tol, 0, 1, &r, brackets.data(), brackets.size() / 2));
        if (!r.grid_checked) {
            std::string msg = "(" + std::to_string(a) + "," + std::to_string(b) + ") sign changes in";
            for (std::size_t k = 0; k < r.num_brackets && k < brackets.size() / 2; ++k) {
                msg += " [" + fmt(brackets[2 * k]) + "," + fmt(brackets[2 * k + 1]) + "]";
            }
            std::cerr << msg + "\n";
        }
        return std::to_string(a) + "," + std::to_string(b) + "," + (r.has_p_c ? fmt(r.p_c) : "NA") + "," +
               (r.grid_checked ? "true" : "false");
    });
    write_rows(cfg, "m1,m2,p_c,grid_checked", rows);
    return kExitOk;
}

int cmd_validate(const RunConfig &cfg) {
    std::vector<CodeSel> targets;
    if (cfg.codes.empty()) {
        targets = {{"trivial", 1, ""},     {"repetition", 3, ""}, {"repetition", 5, ""},   {"repetition", 7, ""}, {"ghz", 3, ""},
                   {"ghz", 5, ""},         {"ghz", 7, ""},        {"cluster_ring", 5, ""}, {"cluster_ring", 7, ""}};
    } else {
        RunConfig only_builtin = cfg;
        only_builtin.code_files.clear();
        targets = code_selection(only_builtin, false);
    }
    std::vector<std::string> lines;
    bool all = true;
    auto run = [&](const CodeSel &sel, CodePtr code) {
        effnoise_report *raw = nullptr;
        check(effnoise_code_validate(code.get(), &raw));
        ReportPtr report(raw);
        bool ok = effnoise_report_all_passed(report.get()) != 0;
        all = all && ok;
        std::string who = sel.file.empty() ? sel.name + ":" + std::to_string(sel.m) : sel.file;
        lines.push_back(std::string(ok ? "PASS " : "FAIL ") + who);
        for (std::size_t i = 0; i < effnoise_report_size(report.get()); ++i) {
            const char *name = nullptr;
            const char *detail = nullptr;
            int passed = 0;
            check(effnoise_report_check(report.get(), i, &name, &passed, &detail));
            std::string line = std::string("  ") + (passed ? "ok   " : "FAIL ") + name;
            if (detail && *detail) {
                line += " (" + std::string(detail) + ")";
            }
            lines.push_back(line);
        }
    };
    for (const auto &sel : targets) {
        run(sel, build(sel));
    }
    for (const auto &f : cfg.code_files) {
        CodeSel sel;
        sel.file = f;
        try {
            run(sel, build(sel));
        } catch (const Failure &e) {
            if (e.exit_code() != kExitValidation) {
                throw;
            }
            all = false;
            lines.push_back("FAIL " + f);
            lines.push_back(std::string("  ") + e.what());
        }
    }
    Output out(cfg.out);
    for (const auto &l : lines) {
        out.stream() << l << '\n';
    }
    return all ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Effective logical Pauli channels of stabilizer-encoded qubits"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(effnoise_version()));

    RunConfig cfg;
    std::string config_path;
    std::vector<CLI::App *> subs;
    auto add = [&](const char *name, const char *help) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("--code", cfg.codes, "Code list: family or family:m tokens, comma separated");
        sub->add_option("--code-file", cfg.code_files, "JSON code definition (repeatable)");
        sub->add_option("--m", cfg.m, "Code sizes for --code tokens without :m (list or start:stop[:step])");
        sub->add_option("--m1", cfg.m1, "Inner GHZ sizes");
        sub->add_option("--m2", cfg.m2, "Outer repetition sizes");
        sub->add_option("--noise", cfg.noise, "white | phase | custom");
        sub->add_option("--lambda", cfg.lambda, "Custom channel a,b,c,d");
        sub->add_option("--p-grid", cfg.p_grid, "start:stop:count");
        sub->add_option("--p", cfg.p, "Single noise parameter");
        sub->add_option("--n-grid", cfg.n_grid, "System sizes (list or start:stop[:step])");
        sub->add_option("--tol", cfg.tol, "Bisection tolerance");
        sub->add_option("--out", cfg.out, "Output file (default stdout)");
        sub->add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)");
        sub->add_option("--config", config_path, "JSON config; flags override it");
        subs.push_back(sub);
        return sub;
    };
    add("channel", "Projected and mean effective channels over a p-grid");
    add("lifetime", "Lower bound on the lifetime of distillable GHZ entanglement");
    add("negativity", "Mean-channel negativity of the logical GHZ state");
    add("concat", "Critical rates of the (m1, m2) concatenated code");
    add("validate", "Check built-in and user-defined codes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    CLI::App *sub = app.get_subcommands().front();
    try {
        if (!config_path.empty()) {
            load_config(config_path, sub->get_name(), cfg,
                        [&](const std::string &flag) { return sub->get_option(flag)->count() > 0; });
        }
        const std::string name = sub->get_name();
        if (name == "channel") {
            return cmd_channel(cfg);
        }
        if (name == "lifetime") {
            return cmd_lifetime(cfg);
        }
        if (name == "negativity") {
            return cmd_negativity(cfg);
        }
        if (name == "concat") {
            return cmd_concat(cfg);
        }
        return cmd_validate(cfg);
    } catch (const Failure &e) {
        std::cerr << "effnoise: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception &e) {
        std::cerr << "effnoise: " << e.what() << '\n';
        return kExitInternal;
    }
}
