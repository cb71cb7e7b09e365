// Copyright 2026 The Everett Authors
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


// Command-line front end. Talks to the simulator only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "everett/everett.h"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Freer {
    void operator()(char *s) const { ev_string_free(s); }
    void operator()(ev_superdense *r) const { ev_superdense_free(r); }
    void operator()(ev_teleport *r) const { ev_teleport_free(r); }
    void operator()(ev_program *p) const { ev_program_free(p); }
    void operator()(ev_execution *e) const { ev_execution_free(e); }
    void operator()(ev_report *r) const { ev_report_free(r); }
};

template <typename T>
using Owned = std::unique_ptr<T, Freer>;

class CliError : public std::runtime_error {
  public:
    CliError(int code, const std::string &msg) : std::runtime_error(msg), code(code) {}
    int code;
};

void check(ev_status status, int exit_code = kExitFailed) {
    if (status != EV_OK) {
        throw CliError(exit_code, std::string(ev_status_string(status)) + ": " + ev_last_error());
    }
}

std::string take(char *s) {
    Owned<char> holder(s);
    return s ? std::string(s) : std::string();
}

// 12 decimals; values that round to zero print unsigned.
std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    std::string out = buf;
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) {
        out.erase(0, 1);
    }
    return out;
}

// The number a reader recovers from fixed(v).
double as_printed(double v) { return std::strtod(fixed(v).c_str(), nullptr); }

std::string complex_text(double re, double im) { return "(" + fixed(re) + "," + fixed(im) + ")"; }

std::pair<double, double> parse_complex(const std::string &text, const char *flag) {
    auto comma = text.find(',');
    auto bad = [&] { return CliError(kExitUsage, std::string(flag) + " expects <re>,<im>, got '" + text + "'"); };
    if (comma == std::string::npos) {
        throw bad();
    }
    std::string re_s = text.substr(0, comma);
    std::string im_s = text.substr(comma + 1);
    char *end = nullptr;
    double re = std::strtod(re_s.c_str(), &end);
    if (re_s.empty() || *end != '\0') {
        throw bad();
    }
    double im = std::strtod(im_s.c_str(), &end);
    if (im_s.empty() || *end != '\0') {
        throw bad();
    }
    return {re, im};
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError(kExitUsage, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Owned<ev_program> parse_file(const std::string &path) {
    std::string source = read_file(path);
    ev_program *prog = nullptr;
    ev_parse_error err{};
    ev_status st = ev_program_parse(source.c_str(), &prog, &err);
    if (st == EV_ERR_PARSE) {
        std::string msg = path + ":" + std::to_string(err.line) + ":" + std::to_string(err.column) + ": " +
                          err.message;
        if (err.expected[0] != '\0') {
            msg += std::string(" (expected ") + err.expected + ")";
        }
        throw CliError(kExitUsage, msg);
    }
    check(st);
    return Owned<ev_program>(prog);
}

void print_trace(const ev_trace *trace, bool json) {
    for (size_t i = 0; i < ev_trace_size(trace); ++i) {
        char *line = nullptr;
        check(json ? ev_trace_json(trace, i, &line) : ev_trace_line(trace, i, &line));
        std::cout << take(line) << '\n';
    }
}

struct DecodeInfo {
    char labels[4][3];
    int bijective;
    int matches_identity;
};

DecodeInfo decode_info() {
    DecodeInfo info{};
    check(ev_decode_table(info.labels, &info.bijective, &info.matches_identity));
    return info;
}

std::string table_text(const DecodeInfo &info) {
    static const char *inputs[4] = {"00", "01", "10", "11"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        out += (k ? " " : "") + std::string(inputs[k]) + "->" + info.labels[k];
    }
    return out;
}

int cmd_superdense(int p, int q, bool trace, bool json) {
    ev_superdense *raw = nullptr;
    check(ev_superdense_run(p, q, &raw));
    Owned<ev_superdense> r(raw);
    DecodeInfo info = decode_info();
    const std::string input = std::to_string(p) + std::to_string(q);
    const std::string pointer = ev_superdense_pointer(r.get());

    if (json) {
        ordered_json head;
        head["record"] = "superdense";
        head["p"] = p;
        head["q"] = q;
        head["pointer"] = pointer;
        head["branch_count"] = ev_superdense_branch_count(r.get());
        std::cout << head.dump() << '\n';
    } else {
        std::cout << "superdense p=" << p << " q=" << q << '\n';
        std::cout << "pointer: " << pointer << '\n';
        std::cout << "branches (E1 E2):\n";
    }
    for (size_t i = 0; i < ev_superdense_branch_count(r.get()); ++i) {
        const char *label = nullptr;
        double raw_weight = 0;
        double weight = 0;
        check(ev_superdense_branch(r.get(), i, &label, &raw_weight, &weight));
        if (json) {
            ordered_json br;
            br["record"] = "branch";
            br["label"] = label;
            br["raw_weight"] = as_printed(raw_weight);
            br["weight"] = as_printed(weight);
            std::cout << br.dump() << '\n';
        } else {
            std::cout << "  " << label << " raw_weight=" << fixed(raw_weight) << " weight=" << fixed(weight) << '\n';
        }
    }
    if (json) {
        ordered_json table;
        table["record"] = "decode_table";
        ordered_json map;
        static const char *inputs[4] = {"00", "01", "10", "11"};
        for (int k = 0; k < 4; ++k) {
            map[inputs[k]] = info.labels[k];
        }
        table["table"] = map;
        table["bijective"] = info.bijective != 0;
        table["matches_identity"] = info.matches_identity != 0;
        std::cout << table.dump() << '\n';
    } else {
        std::cout << "decode table: " << table_text(info) << '\n';
        if (pointer == input) {
            std::cout << "note: pointer reads the input label " << input << '\n';
        } else {
            std::cout << "note: pointer reads " << pointer << " for input " << input
                      << "; the label map pq -> pq does not hold, but the table is a "
                      << (info.bijective ? "bijection" : "NON-bijection") << " Bob can invert\n";
        }
    }
    if (trace) {
        if (!json) {
            std::cout << "trace:\n";
        }
        print_trace(ev_superdense_trace(r.get()), json);
    }
    return kExitOk;
}

int cmd_teleport(const std::string &alpha_text, const std::string &beta_text, bool trace, bool json) {
    auto [are, aim] = parse_complex(alpha_text, "--alpha");
    auto [bre, bim] = parse_complex(beta_text, "--beta");
    ev_teleport *raw = nullptr;
    ev_status st = ev_teleport_run(are, aim, bre, bim, &raw);
    check(st, st == EV_ERR_ZERO_STATE || st == EV_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailed);
    Owned<ev_teleport> r(raw);
    const ev_state *bob = ev_teleport_bob_qubit(r.get());
    double b0r = 0, b0i = 0, b1r = 0, b1i = 0;
    check(ev_state_amplitude(bob, 0, &b0r, &b0i));
    check(ev_state_amplitude(bob, 1, &b1r, &b1i));
    const double fid = ev_teleport_fidelity(r.get());
    const size_t rank = ev_teleport_schmidt_rank(r.get());
    if (json) {
        ordered_json j;
        j["record"] = "teleport";
        j["alpha"] = {as_printed(are), as_printed(aim)};
        j["beta"] = {as_printed(bre), as_printed(bim)};
        j["fidelity"] = as_printed(fid);
        j["bob"] = {{as_printed(b0r), as_printed(b0i)}, {as_printed(b1r), as_printed(b1i)}};
        j["schmidt_rank"] = rank;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "teleport alpha=" << complex_text(are, aim) << " beta=" << complex_text(bre, bim) << '\n';
        std::cout << "fidelity: " << fixed(fid) << '\n';
        std::cout << "bob: " << complex_text(b0r, b0i) << "|0> + " << complex_text(b1r, b1i) << "|1>\n";
        std::cout << "schmidt_rank: " << rank << '\n';
    }
    if (trace) {
        if (!json) {
            std::cout << "trace:\n";
        }
        print_trace(ev_teleport_trace(r.get()), json);
    }
    return kExitOk;
}

int cmd_run(const std::string &path, bool json) {
    Owned<ev_program> prog = parse_file(path);
    ev_execution *raw = nullptr;
    ev_status st = ev_program_exec(prog.get(), &raw);
    if (st != EV_OK) {
        throw CliError(kExitFailed, path + ": " + ev_status_string(st) + ": " + ev_last_error());
    }
    Owned<ev_execution> ex(raw);
    int passed = 0;
    int failed = 0;
    for (size_t i = 0; i < ev_execution_assertion_count(ex.get()); ++i) {
        int line = 0;
        int ok = 0;
        const char *kind = nullptr;
        const char *detail = nullptr;
        check(ev_execution_assertion(ex.get(), i, &line, &kind, &ok, &detail));
        (ok ? passed : failed) += 1;
        if (json) {
            ordered_json j;
            j["record"] = "assertion";
            j["line"] = line;
            j["kind"] = kind;
            j["passed"] = ok != 0;
            j["detail"] = detail;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "line " << line << ": assert " << kind << ": " << (ok ? "PASS" : "FAIL") << ": " << detail
                      << '\n';
        }
    }
    if (json) {
        print_trace(ev_execution_trace(ex.get()), true);
        ordered_json j;
        j["record"] = "summary";
        j["passed"] = passed;
        j["failed"] = failed;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "summary: " << passed << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? kExitOk : kExitFailed;
}

int cmd_render(const std::string &path) {
    Owned<ev_program> prog = parse_file(path);
    char *text = nullptr;
    check(ev_program_render(prog.get(), &text));
    std::cout << take(text);
    return kExitOk;
}

int cmd_verify() {
    ev_report *raw = nullptr;
    check(ev_verify_run(&raw));
    Owned<ev_report> report(raw);
    for (size_t i = 0; i < ev_report_count(report.get()); ++i) {
        int id = 0;
        int ok = 0;
        const char *name = nullptr;
        const char *detail = nullptr;
        check(ev_report_check(report.get(), i, &id, &name, &ok, &detail));
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << detail << '\n';
    }
    DecodeInfo info = decode_info();
    std::cout << "finding: decode table " << table_text(info) << " "
              << (info.matches_identity ? "matches" : "does not match") << " the identity label map pq -> pq\n";
    bool all = ev_report_all_passed(report.get()) != 0;
    std::cout << (all ? "verify: all checks passed" : "verify: FAILED") << '\n';
    return all ? kExitOk : kExitFailed;
}

void apply_tolerance_override() {
    const char *env = std::getenv("EVERETT_TOL");
    if (env == nullptr || *env == '\0') {
        return;
    }
    char *end = nullptr;
    double tol = std::strtod(env, &end);
    if (*end != '\0') {
        throw CliError(kExitUsage, std::string("EVERETT_TOL is not a decimal number: '") + env + "'");
    }
    check(ev_set_default_tolerance(tol), kExitUsage);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Everett-picture superdense coding and teleportation simulator", "everett"};
    app.require_subcommand(1, 1);

    int p = 0;
    int q = 0;
    bool trace = false;
    bool json = false;
    std::string alpha;
    std::string beta;
    std::string file;

    auto *sd = app.add_subcommand("superdense", "Run superdense coding for Alice's bits (p, q)");
    sd->add_option("--p", p, "First bit")->required()->check(CLI::Range(0, 1));
    sd->add_option("--q", q, "Second bit")->required()->check(CLI::Range(0, 1));
    sd->add_flag("--trace", trace, "Print the event trace");
    sd->add_flag("--json", json, "Line-delimited JSON output");

    auto *tp = app.add_subcommand("teleport", "Teleport alpha|0> + beta|1>");
    tp->add_option("--alpha", alpha, "Amplitude of |0> as <re>,<im>")->required();
    tp->add_option("--beta", beta, "Amplitude of |1> as <re>,<im>")->required();
    tp->add_flag("--trace", trace, "Print the event trace");
    tp->add_flag("--json", json, "Line-delimited JSON output");

    auto *run = app.add_subcommand("run", "Execute a .ecirc circuit file and check its assertions");
    run->add_option("file", file, "Circuit file")->required();
    run->add_flag("--json", json, "Line-delimited JSON output");

    auto *render = app.add_subcommand("render", "Draw a .ecirc circuit file");
    render->add_option("file", file, "Circuit file")->required();

    auto *verify = app.add_subcommand("verify", "Run the full self-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        apply_tolerance_override();
        if (sd->parsed()) {
            return cmd_superdense(p, q, trace, json);
        }
        if (tp->parsed()) {
            return cmd_teleport(alpha, beta, trace, json);
        }
        if (run->parsed()) {
            return cmd_run(file, json);
        }
        if (render->parsed()) {
            return cmd_render(file);
        }
        if (verify->parsed()) {
            return cmd_verify();
        }
    } catch (const CliError &e) {
        std::cerr << "everett: " << e.what() << '\n';
        return e.code;
    }
    std::cerr << app.help();
    return kExitUsage;
}
