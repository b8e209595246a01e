#pragma once

// The qyt command line. run() is separate from main so tests can drive it with
// string streams.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <qyt/board.hpp>
#include <qyt/io.hpp>
#include <qyt/partition.hpp>
#include <qyt/perm.hpp>
#include <qyt/pnk.hpp>
#include <qyt/symfun.hpp>
#include <qyt/tableau.hpp>
#include <qyt/verify.hpp>

namespace qyt::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

using io::Json;

/// Thrown for bad arguments that parse but make no sense.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + '"';
}

inline void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << '\n';
}

inline std::string ints(const std::vector<Integer>& v) { return io::join(v); }

struct Context {
    std::string format = "text";
    int limit = kDefaultBruteForceLimit;
    std::ostream* out = &std::cout;
};

inline void emit_json(const Context& c, const Json& j) { *c.out << j.dump(2) << '\n'; }

// --- count -----------------------------------------------------------------

struct CountArgs {
    std::string shape;
    std::optional<int> exact, at_most, ssyt;
    bool syt = false;
};

inline void count(const Context& c, const CountArgs& a) {
    const auto lambda = Partition::parse(a.shape);
    const int chosen = a.exact.has_value() + a.at_most.has_value() + a.ssyt.has_value() + a.syt;
    if (chosen > 1) throw usage_error("count takes at most one of --exact-entry, --max-entry, --ssyt, --syt");

    // With no selector: the full census of QYT by largest entry.
    if (chosen == 0) {
        auto counts = qyt_counts(lambda);
        if (c.format == "json") {
            Json rows = Json::array();
            for (int m = 1; m < static_cast<int>(counts.size()); ++m) rows.push_back(Json{{"exact_entry", m}, {"count", io::to_json(counts[m])}});
            emit_json(c, Json{{"shape", io::to_json(lambda)}, {"statistic", "qyt-census"}, {"rows", rows}});
        } else if (c.format == "csv") {
            csv_row(*c.out, {"shape", "exact_entry", "count"});
            for (int m = 1; m < static_cast<int>(counts.size()); ++m) csv_row(*c.out, {lambda.str(), std::to_string(m), counts[m].str()});
        } else {
            for (int m = 1; m < static_cast<int>(counts.size()); ++m) *c.out << "QYT_{=" << m << "}(" << lambda.str() << ") = " << counts[m] << '\n';
        }
        return;
    }

    std::string stat;
    int k = 0;
    Integer value;
    if (a.exact) {
        stat = "qyt-exact", k = *a.exact;
        value = enumerate_qyt_exact(lambda, k).size();
    } else if (a.at_most) {
        stat = "qyt-at-most", k = *a.at_most;
        value = enumerate_qyt_at_most(lambda, k).size();
    } else if (a.ssyt) {
        stat = "ssyt", k = *a.ssyt;
        value = hook_content_count(lambda, k);
    } else {
        stat = "syt", k = lambda.size();
        value = hook_length_count(lambda);
    }
    if (c.format == "json") {
        Json j{{"shape", io::to_json(lambda)}, {"statistic", stat}};
        if (stat != "syt") j["k"] = k;
        j["count"] = io::to_json(value);
        emit_json(c, j);
    } else if (c.format == "csv") {
        csv_row(*c.out, {"shape", "statistic", "k", "count"});
        csv_row(*c.out, {lambda.str(), stat, stat == "syt" ? "" : std::to_string(k), value.str()});
    } else {
        *c.out << value << '\n';
    }
}

// --- board -----------------------------------------------------------------

struct BoardArgs {
    std::string shape;
    bool plus_one = false, hits = false, q_hits = false;
};

inline void board(const Context& c, const BoardArgs& a) {
    if (a.hits && a.q_hits) throw usage_error("board takes only one of --hits, --q-hits");
    auto b = FerrersBoard::from_partition(Partition::parse(a.shape));
    if (a.plus_one) b = b.plus_one();

    if (a.hits) {
        auto h = hit_numbers(b, c.limit);
        if (c.format == "json") {
            emit_json(c, Json{{"board", io::to_json(b)}, {"hits", io::to_json(h)}});
        } else if (c.format == "csv") {
            csv_row(*c.out, {"k", "hits"});
            for (std::size_t k = 0; k < h.size(); ++k) csv_row(*c.out, {std::to_string(k), h[k].str()});
        } else {
            *c.out << ints(h) << '\n';
        }
    } else if (a.q_hits) {
        auto t = q_hit_numbers(b, c.limit);
        if (c.format == "json") {
            emit_json(c, Json{{"board", io::to_json(b)}, {"q_hits", io::to_json(t)}});
        } else if (c.format == "csv") {
            csv_row(*c.out, {"k", "degree", "coeff"});
            for (std::size_t k = 0; k < t.size(); ++k)
                for (int d = 0; d <= t[k].degree(); ++d)
                    if (t[k][d] != 0) csv_row(*c.out, {std::to_string(k), std::to_string(d), t[k][d].str()});
        } else {
            for (std::size_t k = 0; k < t.size(); ++k) *c.out << "T_" << k << " = " << t[k] << '\n';
        }
    } else {
        if (c.format == "json") {
            emit_json(c, io::to_json(b));
        } else if (c.format == "csv") {
            csv_row(*c.out, {"column", "height"});
            for (int i = 1; i <= b.n(); ++i) csv_row(*c.out, {std::to_string(i), std::to_string(b.height(i))});
        } else {
            *c.out << io::join(b.heights()) << '\n';
        }
    }
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::optional<int> max_n;
    std::uint64_t seed = 0;
    bool no_timing = false;
};

/// QYT_MAX_N, if set, replaces every suite's default bound.
inline std::optional<int> env_max_n() {
    const char* v = std::getenv("QYT_MAX_N");
    if (!v || !*v) return std::nullopt;
    try {
        std::size_t used = 0;
        int n = std::stoi(v, &used);
        if (used != std::string(v).size() || n < 1) throw std::invalid_argument("");
        return n;
    } catch (const std::exception&) {
        throw usage_error(std::string("QYT_MAX_N must be a positive integer, got '") + v + "'");
    }
}

inline int verify(const Context& c, const VerifyArgs& a) {
    verify::Options o;
    o.seed = a.seed;
    o.limit = c.limit;
    if (a.max_n) {
        if (*a.max_n < 1) throw usage_error("--max-n must be positive");
        o.max_n = *a.max_n;
    } else if (auto e = env_max_n()) {
        o.max_n = *e;
    }

    std::vector<verify::SuiteReport> reports;
    if (a.suite == "all") {
        reports = verify::run_all(o);
    } else {
        try {
            verify::find_suite(a.suite);
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
        reports.push_back(verify::run_suite(a.suite, o));
    }
    if (a.no_timing)
        for (auto& r : reports) r.ms = 0;

    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();

    if (c.format == "json") {
        if (reports.size() == 1) {
            emit_json(c, reports.front().to_json());
        } else {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(r.to_json());
            emit_json(c, arr);
        }
    } else if (c.format == "csv") {
        csv_row(*c.out, {"suite", "status", "ms", "bounds", "counterexample"});
        for (const auto& r : reports)
            csv_row(*c.out, {r.suite, r.passed() ? "pass" : "fail", std::to_string(r.ms), r.bounds.dump(), r.counterexample.dump()});
    } else {
        for (const auto& r : reports) {
            *c.out << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << "  bounds " << r.bounds.dump() << "  " << r.ms << " ms\n";
            if (!r.passed()) *c.out << "  counterexample " << r.counterexample.dump() << '\n';
        }
    }
    return ok ? kPass : kFail;
}

// --- table -----------------------------------------------------------------

inline void table_a_coeffs(const Context& c, int n) {
    if (n < 1) throw usage_error("--n must be positive");
    const ACoeffTable t(n);
    if (c.format == "json") {
        Json rows = Json::array();
        for (int k = 0; k <= n; ++k) rows.push_back(Json{{"k", k}, {"a", io::to_json(t.row(n, k))}});
        emit_json(c, Json{{"n", n}, {"rows", rows}});
    } else if (c.format == "csv") {
        csv_row(*c.out, {"n", "k", "m", "a"});
        for (int k = 0; k <= n; ++k)
            for (int m = 0; m <= n; ++m) csv_row(*c.out, {std::to_string(n), std::to_string(k), std::to_string(m), t.at(n, k, m).str()});
    } else {
        // Shaped like the printed triangle: one line per m, k = 0..n-1 along it.
        *c.out << "a(" << n << ",k,m), k = 0.." << n - 1 << '\n';
        for (int m = n; m >= 0; --m) {
            std::vector<Integer> line;
            for (int k = 0; k < n; ++k) line.push_back(t.at(n, k, m));
            *c.out << "m=" << m << ": " << ints(line) << '\n';
        }
    }
}

// --- rsk -------------------------------------------------------------------

inline void rsk(const Context& c, const std::string& word) {
    const auto w = parse_word(word);
    for (int x : w)
        if (x < 1) throw usage_error("rsk needs positive letters");
    const auto r = rsk_word(w);
    const auto des = descent_set(r.recording);
    const std::string shape = r.insertion.shape().str();
    if (c.format == "json") {
        emit_json(c, Json{{"word", format_word(w)}, {"insertion", r.insertion.str()}, {"recording", r.recording.str()}, {"shape", io::to_json(r.insertion.shape())}, {"recording_descents", des}});
    } else if (c.format == "csv") {
        csv_row(*c.out, {"word", "insertion", "recording", "shape", "recording_descents"});
        csv_row(*c.out, {format_word(w), r.insertion.str(), r.recording.str(), shape, io::join(des)});
    } else {
        *c.out << "P: " << r.insertion.str() << '\n'
               << "Q: " << r.recording.str() << '\n'
               << "shape: " << shape << '\n'
               << "Des(Q): {" << io::join(des) << "}\n";
    }
}

// --- expand ----------------------------------------------------------------

inline void expand_schur(const Context& c, const std::string& shape, int vars) {
    if (vars < 0) throw usage_error("--vars must be nonnegative");
    const auto lambda = Partition::parse(shape);
    const auto s = schur_truncated(lambda, vars);
    if (c.format == "json") {
        Json terms = Json::array();
        for (const auto& [e, k] : s.terms()) terms.push_back(Json{{"exponent", e}, {"coeff", io::to_json(k)}});
        emit_json(c, Json{{"shape", io::to_json(lambda)}, {"vars", vars}, {"terms", terms}});
    } else if (c.format == "csv") {
        csv_row(*c.out, {"exponent", "coeff"});
        for (const auto& [e, k] : s.terms()) csv_row(*c.out, {io::join(e), k.str()});
    } else {
        for (const auto& [e, k] : s.terms()) *c.out << k << "  " << monomial_str(e) << '\n';
    }
}

inline void expand_genfun(const Context& c, int n, bool plain) {
    if (n < 1) throw usage_error("--n must be positive");
    const auto g = gen_fn(n, !plain);
    if (c.format == "json") {
        emit_json(c, Json{{"n", n}, {"q", !plain}, {"terms", io::to_json(g)}});
    } else if (c.format == "csv") {
        csv_row(*c.out, {"partition", "q", "t", "coeff"});
        for (const auto& [lambda, p] : g.ordered())
            for (const auto& [key, k] : p.terms()) csv_row(*c.out, {lambda.str(), std::to_string(key.first), std::to_string(key.second), k.str()});
    } else {
        for (const auto& [lambda, p] : g.ordered()) *c.out << "s_(" << lambda.str() << "): " << p << '\n';
    }
}

// --- wiring ----------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Quasi-Yamanouchi tableaux: counting, boards, P_{n,k} tables, RSK and verification suites", "qyt"};
    app.require_subcommand(1);
    Context ctx;
    ctx.out = &out;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
        sub->add_option("--limit", ctx.limit, "Largest n for any brute force over S_n")->check(CLI::PositiveNumber)->capture_default_str();
    };

    CountArgs ca;
    auto* count_cmd = app.add_subcommand("count", "Count QYT, SSYT or SYT of a shape");
    count_cmd->add_option("--shape", ca.shape, "Partition, e.g. 2,2,1")->required();
    count_cmd->add_option("--exact-entry", ca.exact, "QYT with largest entry exactly k");
    count_cmd->add_option("--max-entry", ca.at_most, "QYT with largest entry at most k");
    count_cmd->add_option("--ssyt", ca.ssyt, "SSYT with entries at most m");
    count_cmd->add_flag("--syt", ca.syt, "Standard Young tableaux");
    add_common(count_cmd);

    BoardArgs ba;
    auto* board_cmd = app.add_subcommand("board", "Ferrers board of a shape and its hit numbers");
    board_cmd->add_option("--shape", ba.shape, "Partition, e.g. 3,2")->required();
    board_cmd->add_flag("--plus-one", ba.plus_one, "Raise every column by one");
    board_cmd->add_flag("--hits", ba.hits, "Hit numbers h_0..h_n");
    board_cmd->add_flag("--q-hits", ba.q_hits, "q-hit numbers T_0..T_n");
    add_common(board_cmd);

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite (exit 0 pass, 1 fail)");
    std::string suite_names = "all";
    for (const auto& s : verify::suites()) suite_names += ", " + s.name;
    verify_cmd->add_option("suite", va.suite, "One of: " + suite_names)->required();
    verify_cmd->add_option("--max-n", va.max_n, "Bound overriding the suite default");
    verify_cmd->add_option("--seed", va.seed, "Seed for the randomized checks")->capture_default_str();
    verify_cmd->add_flag("--no-timing", va.no_timing, "Report ms as 0, for byte-stable output");
    add_common(verify_cmd);

    int table_n = 0;
    auto* table_cmd = app.add_subcommand("table", "Coefficient tables");
    table_cmd->require_subcommand(1);
    auto* acoeff_cmd = table_cmd->add_subcommand("a-coeffs", "a(n,k,m): coefficient of e_m in P_{n,k}");
    acoeff_cmd->add_option("--n", table_n, "n")->required();
    add_common(acoeff_cmd);

    std::string word;
    auto* rsk_cmd = app.add_subcommand("rsk", "Row-insert a word; print both tableaux");
    rsk_cmd->add_option("word", word, "Word, e.g. 45312 or 10,2,3")->required();
    add_common(rsk_cmd);

    std::string ex_shape;
    int ex_vars = 0, ex_n = 0;
    bool ex_plain = false;
    auto* expand_cmd = app.add_subcommand("expand", "Expansions of symmetric functions");
    expand_cmd->require_subcommand(1);
    auto* schur_cmd = expand_cmd->add_subcommand("schur", "s_lambda in N variables, monomial by monomial");
    schur_cmd->add_option("--shape", ex_shape, "Partition")->required();
    schur_cmd->add_option("--vars", ex_vars, "Number of variables N")->required();
    add_common(schur_cmd);
    auto* genfun_cmd = expand_cmd->add_subcommand("genfun", "sum over QYT of q^maj t^des s_lambda");
    genfun_cmd->add_option("--n", ex_n, "Degree n")->required();
    genfun_cmd->add_flag("--plain", ex_plain, "Drop q (QYT counts only)");
    add_common(genfun_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (count_cmd->parsed()) count(ctx, ca);
        else if (board_cmd->parsed()) board(ctx, ba);
        else if (verify_cmd->parsed()) return verify(ctx, va);
        else if (acoeff_cmd->parsed()) table_a_coeffs(ctx, table_n);
        else if (rsk_cmd->parsed()) rsk(ctx, word);
        else if (schur_cmd->parsed()) expand_schur(ctx, ex_shape, ex_vars);
        else if (genfun_cmd->parsed()) expand_genfun(ctx, ex_n, ex_plain);
    } catch (const limit_exceeded& e) {
        err << "qyt: " << e.what() << " (raise --limit to allow)\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "qyt: " << e.what() << '\n';
        return kUsage;
    }
    return kPass;
}

}  // namespace qyt::cli
