#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bott/canon.hpp"
#include "bott/classify.hpp"
#include "bott/cohomology.hpp"
#include "bott/decompose.hpp"
#include "bott/digraph6.hpp"
#include "bott/json_io.hpp"

namespace {

using nlohmann::ordered_json;

std::uint64_t orbit_budget_from_env() {
    if (const char* env = std::getenv("BOTT_ORBIT_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            bott::throw_domain("UsageError", "BOTT_ORBIT_BUDGET must be a positive integer");
        return v;
    }
    return bott::default_orbit_budget;
}

std::string load_payload(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') return arg;
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) bott::throw_domain("FileError", "cannot open " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string first_line(const std::string& payload) {
    const auto pos = payload.find('\n');
    return pos == std::string::npos ? payload : payload.substr(0, pos);
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\n' || s[b] == '\r')) ++b;
    return s.substr(b);
}

std::string detect_format(const std::string& payload) {
    if (!payload.empty() && payload.front() == '&') return "d6";
    if (payload.find(':') != std::string::npos) return "hex";
    return "bin";
}

bott::BottMatrix parse_matrix(const std::string& arg, std::string format) {
    const std::string payload = trimmed(load_payload(arg));
    if (format == "auto") format = detect_format(payload);
    if (format == "bin") return bott::BottMatrix::from_bin(payload);
    if (format == "hex") return bott::BottMatrix::from_hex(first_line(payload));
    if (format == "d6") return bott::parse_digraph6(first_line(payload));
    bott::throw_domain("UsageError", "unknown format " + format);
}

// raw variant used by `check`, which must accept non-Bott matrices
std::pair<int, std::vector<std::uint64_t>> parse_raw(const std::string& arg, std::string format) {
    const std::string payload = trimmed(load_payload(arg));
    if (format == "auto") format = detect_format(payload);
    if (format == "bin") return bott::parse_bin_raw(payload);
    if (format == "hex") {
        const bott::BottMatrix m = bott::BottMatrix::from_hex(first_line(payload));
        return {m.size(), m.rows()};
    }
    if (format == "d6") return bott::decode_digraph6_raw(first_line(payload));
    bott::throw_domain("UsageError", "unknown format " + format);
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "matrix input format")
        ->check(CLI::IsMember({"auto", "bin", "hex", "d6"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification engine for real Bott manifolds / acyclic digraphs"};
    app.require_subcommand(1);

    std::string fmt_check = "auto", fmt_canon = "auto", fmt_orbit = "auto", fmt_inv = "auto",
                fmt_betti = "auto", fmt_dec = "auto", fmt_iso = "auto", fmt_stream = "auto";
    std::string arg_check, arg_canon, arg_orbit, arg_inv, arg_betti, arg_dec, arg_iso_a, arg_iso_b;
    std::size_t orbit_limit = 100;
    int classify_n = 0, workers = 4;
    bool long_run = false, csv = false;
    std::string stream_file;

    auto* c_check = app.add_subcommand("check", "test whether a matrix is a Bott matrix");
    c_check->add_option("matrix", arg_check, "matrix text or @file")->required();
    add_format_option(c_check, fmt_check);

    auto* c_canon = app.add_subcommand("canon", "canonical forms of a Bott matrix");
    c_canon->add_option("matrix", arg_canon, "matrix text or @file")->required();
    add_format_option(c_canon, fmt_canon);

    auto* c_orbit = app.add_subcommand("orbit", "list the class members (iso-canonical forms)");
    c_orbit->add_option("matrix", arg_orbit, "matrix text or @file")->required();
    c_orbit->add_option("--limit", orbit_limit, "maximum members to list, 0 = all")
        ->capture_default_str();
    add_format_option(c_orbit, fmt_orbit);

    auto* c_classify = app.add_subcommand("classify", "classify all matrices of a given size");
    c_classify->add_option("--n", classify_n, "matrix size")->required()->check(CLI::Range(1, 8));
    c_classify->add_option("--stream", stream_file, "classify the matrices in this file instead");
    c_classify->add_option("--workers", workers, "worker threads")->capture_default_str();
    c_classify->add_flag("--long-run", long_run, "allow n >= 7");
    c_classify->add_flag("--csv", csv, "emit a CSV table instead of JSON");
    add_format_option(c_classify, fmt_stream);

    auto* c_inv = app.add_subcommand("invariants", "invariant fingerprint of a Bott matrix");
    c_inv->add_option("matrix", arg_inv, "matrix text or @file")->required();
    add_format_option(c_inv, fmt_inv);

    auto* c_betti = app.add_subcommand("betti", "rational Betti numbers");
    c_betti->add_option("matrix", arg_betti, "matrix text or @file")->required();
    add_format_option(c_betti, fmt_betti);

    auto* c_dec = app.add_subcommand("decompose", "split into indecomposable factors");
    c_dec->add_option("matrix", arg_dec, "matrix text or @file")->required();
    add_format_option(c_dec, fmt_dec);

    auto* c_iso = app.add_subcommand("iso", "decide Bott equivalence of two matrices");
    c_iso->add_option("a", arg_iso_a, "first matrix")->required();
    c_iso->add_option("b", arg_iso_b, "second matrix")->required();
    add_format_option(c_iso, fmt_iso);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        ordered_json err{{"code", "UsageError"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    }

    try {
        const std::uint64_t budget = orbit_budget_from_env();

        if (*c_check) {
            auto [n, rows] = parse_raw(arg_check, fmt_check);
            const bool ok = bott::is_bott(n, rows);
            emit(ordered_json{{"n", n}, {"bott", ok}});
            return ok ? 0 : 1;
        }
        if (*c_canon) {
            const auto a = parse_matrix(arg_canon, fmt_canon);
            const auto iso = bott::iso_canon(a);
            const auto rep = bott::bott_canon(a, budget);
            emit(ordered_json{{"n", a.size()},
                              {"iso_canon", iso.matrix.to_hex()},
                              {"canonical", rep.canonical.to_hex()},
                              {"orbit_size", rep.orbit_size}});
            return 0;
        }
        if (*c_orbit) {
            const auto a = parse_matrix(arg_orbit, fmt_orbit);
            const auto orbit = bott::bott_orbit(a, budget);
            ordered_json members = ordered_json::array();
            for (std::size_t i = 0; i < orbit.size(); ++i) {
                if (orbit_limit != 0 && i >= orbit_limit) break;
                members.push_back(orbit[i].to_hex());
            }
            emit(ordered_json{{"n", a.size()},
                              {"canonical", orbit.front().to_hex()},
                              {"orbit_size", orbit.size()},
                              {"members", std::move(members)}});
            return 0;
        }
        if (*c_classify) {
            bott::ClassifyOptions options;
            options.workers = workers;
            options.long_run = long_run;
            options.orbit_budget = budget;
            bott::ClassificationSummary summary;
            if (!stream_file.empty()) {
                std::ifstream in(stream_file);
                if (!in) bott::throw_domain("FileError", "cannot open " + stream_file);
                std::vector<bott::BottMatrix> source;
                std::string line;
                while (std::getline(in, line)) {
                    line = trimmed(line);
                    if (line.empty()) continue;
                    std::string f = fmt_stream == "auto" ? detect_format(line) : fmt_stream;
                    if (f == "d6") source.push_back(bott::parse_digraph6(line));
                    else if (f == "hex") source.push_back(bott::BottMatrix::from_hex(line));
                    else source.push_back(bott::BottMatrix::from_bin(line));
                }
                summary = bott::classify_stream(source, options);
                if (summary.n != classify_n)
                    bott::throw_domain("SizeMismatch", "stream matrices do not match --n");
            } else {
                summary = bott::classify_all(classify_n, options);
            }
            if (csv) std::cout << bott::classification_csv(summary);
            else emit(bott::classification_json(summary));
            return 0;
        }
        if (*c_inv) {
            const auto a = parse_matrix(arg_inv, fmt_inv);
            emit(bott::fingerprint_json(bott::fingerprint(a)));
            return 0;
        }
        if (*c_betti) {
            const auto a = parse_matrix(arg_betti, fmt_betti);
            emit(ordered_json{{"n", a.size()}, {"rank", bott::rank(a)}, {"betti", bott::betti(a)}});
            return 0;
        }
        if (*c_dec) {
            const auto a = parse_matrix(arg_dec, fmt_dec);
            emit(bott::decomposition_json(bott::decompose(a, budget)));
            return 0;
        }
        if (*c_iso) {
            const auto a = parse_matrix(arg_iso_a, fmt_iso);
            const auto b = parse_matrix(arg_iso_b, fmt_iso);
            emit(ordered_json{{"equivalent", bott::bott_equivalent(a, b, budget)}});
            return 0;
        }
    } catch (const bott::BudgetError& e) {
        ordered_json err{{"code", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const bott::Error& e) {
        ordered_json err{{"code", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        ordered_json err{{"code", "InternalError"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 3;
}
