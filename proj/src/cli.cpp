#include "symf/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "symf/hall_littlewood.hpp"
#include "symf/schur.hpp"
#include "symf/sweep.hpp"
#include "symf/universal_characters.hpp"

namespace symf::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
    std::vector<int> out;
    if (s.empty()) return out;
    size_t pos = 0;
    while (true) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw UsageError("parse error in " + flag + ": '" + tok + "' is not an integer");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Partition parse_partition(const std::string& s, const std::string& flag) {
    try {
        return Partition(parse_int_list(s, flag));
    } catch (const std::invalid_argument& e) {
        throw UsageError("parse error in " + flag + ": " + e.what());
    }
}

long long to_ll(const Int& v) {
    static const Int lo(std::numeric_limits<long long>::min());
    static const Int hi(std::numeric_limits<long long>::max());
    if (v < lo || v > hi) throw std::logic_error("coefficient exceeds the JSON integer range");
    return v.convert_to<long long>();
}

ojson tpoly_json(const TPoly& p) {
    ojson a = ojson::array();
    for (const Int& c : p.coeffs()) a.push_back(to_ll(c));
    return a;
}

ojson key_json(const Partition& p) {
    ojson a = ojson::array();
    for (int x : p.parts()) a.push_back(x);
    return a;
}

ojson key_json(const UCIndex& k) {
    return ojson{{"la", key_json(k.la)}, {"mu", key_json(k.mu)}};
}

// ---- queries ---------------------------------------------------------------

struct Query {
    std::string command;
    std::string basis;
    std::vector<int> alpha;
    Partition mu, nu, la, mu2, eta, tau, nu2;
    int r = 1;
    std::optional<int> t_eval;
};

TPoly eval_if_requested(const TPoly& p, const std::optional<int>& t_eval) {
    if (!t_eval) return p;
    return TPoly(p.eval(Int(*t_eval)));
}

ojson terms_json(const SchurSum& s) {
    ojson terms = ojson::array();
    for (const auto& [key, c] : s)
        terms.push_back(ojson{{"key", key_json(key)}, {"coeff", ojson::array({to_ll(c)})}});
    return terms;
}

ojson terms_json(const HLSum& s, const std::optional<int>& t_eval) {
    ojson terms = ojson::array();
    for (const auto& [key, c] : s) {
        TPoly v = eval_if_requested(c, t_eval);
        if (v.is_zero()) continue;
        terms.push_back(ojson{{"key", key_json(key)}, {"coeff", tpoly_json(v)}});
    }
    return terms;
}

ojson terms_json(const UCSum& s) {
    ojson terms = ojson::array();
    for (const auto& [key, c] : s)
        terms.push_back(ojson{{"key", key_json(key)}, {"coeff", ojson::array({to_ll(c)})}});
    return terms;
}

ojson compute(const Query& q) {
    ojson result;
    result["basis"] = q.basis;
    if (q.command == "straighten") {
        if (q.basis == "schur") {
            SchurSum s;
            if (auto sp = straighten_schur(q.alpha)) s.emplace(sp->partition, sp->sign);
            result["terms"] = terms_json(s);
        } else if (q.basis == "hl") {
            result["terms"] = terms_json(straighten_hl(q.alpha), q.t_eval);
        } else {
            throw UsageError("--basis for straighten must be schur or hl");
        }
    } else if (q.command == "pieri") {
        if (q.r < 1) throw UsageError("--r must be a positive integer");
        if (q.basis == "schur")
            result["terms"] = terms_json(pieri_schur(q.mu, q.r));
        else if (q.basis == "hl")
            result["terms"] = terms_json(pieri_hl(q.mu, q.r), q.t_eval);
        else
            throw UsageError("--basis for pieri must be schur or hl");
    } else if (q.command == "mul") {
        if (q.basis == "schur")
            result["terms"] = terms_json(mul_schur(q.mu, q.nu));
        else if (q.basis == "hl")
            result["terms"] = terms_json(mul_hl(q.mu, q.nu), q.t_eval);
        else if (q.basis == "uc")
            result["terms"] = terms_json(mul_uc({q.mu, q.eta}, {q.tau, q.nu2}));
        else
            throw UsageError("--basis must be schur, hl or uc");
    } else if (q.command == "coeff") {
        if (q.basis == "schur") {
            SchurSum s = mul_schur(q.mu, q.nu);
            auto it = s.find(q.la);
            result["coeff"] =
                it == s.end() ? ojson::array() : ojson::array({to_ll(it->second)});
        } else if (q.basis == "hl") {
            HLSum s = mul_hl(q.mu, q.nu);
            auto it = s.find(q.la);
            TPoly c = it == s.end() ? TPoly() : it->second;
            result["coeff"] = tpoly_json(eval_if_requested(c, q.t_eval));
        } else if (q.basis == "uc") {
            UCSum s = mul_uc({q.mu, q.eta}, {q.tau, q.nu2});
            auto it = s.find({q.la, q.mu2});
            result["coeff"] =
                it == s.end() ? ojson::array() : ojson::array({to_ll(it->second)});
        } else {
            throw UsageError("--basis must be schur, hl or uc");
        }
    } else {
        throw UsageError("unknown command " + q.command);
    }
    return result;
}

std::string render_text(const std::string& basis, const ojson& result) {
    std::ostringstream os;
    if (result.contains("coeff")) {
        const ojson& c = result["coeff"];
        if (basis == "hl") {
            std::vector<Int> coeffs;
            for (const auto& v : c) coeffs.emplace_back(v.get<long long>());
            os << to_string(TPoly(std::move(coeffs))) << "\n";
        } else {
            os << (c.empty() ? 0LL : c[0].get<long long>()) << "\n";
        }
        return os.str();
    }
    const ojson& terms = result["terms"];
    if (terms.empty()) {
        os << "0\n";
        return os.str();
    }
    for (const auto& term : terms) {
        const ojson& key = term["key"];
        if (basis == "uc") {
            auto fmt = [](const ojson& parts) {
                std::string s = "(";
                for (size_t i = 0; i < parts.size(); ++i)
                    s += (i ? "," : "") + std::to_string(parts[i].get<long long>());
                return s + ")";
            };
            os << "S[" << fmt(key["la"]) << "," << fmt(key["mu"]) << "]";
        } else {
            os << (basis == "hl" ? "Q(" : "S(");
            for (size_t i = 0; i < key.size(); ++i)
                os << (i ? "," : "") << key[i].get<long long>();
            os << ")";
        }
        std::vector<Int> coeffs;
        for (const auto& v : term["coeff"]) coeffs.emplace_back(v.get<long long>());
        os << ": " << to_string(TPoly(std::move(coeffs))) << "\n";
    }
    return os.str();
}

// ---- corpus ----------------------------------------------------------------

Query query_from_json(const ojson& j) {
    Query q;
    q.command = j.at("command").get<std::string>();
    q.basis = j.at("basis").get<std::string>();
    auto get_list = [&](const char* name) -> std::vector<int> {
        if (!j.contains(name)) return {};
        return j.at(name).get<std::vector<int>>();
    };
    auto get_partition = [&](const char* name) {
        try {
            return Partition(get_list(name));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("field ") + name + ": " + e.what());
        }
    };
    q.alpha = get_list("alpha");
    q.mu = get_partition("mu");
    q.nu = get_partition("nu");
    q.la = get_partition("la");
    q.mu2 = get_partition("mu2");
    q.eta = get_partition("eta");
    q.tau = get_partition("tau");
    q.nu2 = get_partition("nu2");
    if (j.contains("r")) q.r = j.at("r").get<int>();
    if (j.contains("t_eval")) q.t_eval = j.at("t_eval").get<int>();
    return q;
}

std::string first_diff(const ojson& expected, const ojson& got) {
    if (expected.contains("coeff") || got.contains("coeff")) {
        return "expected coeff " + expected.value("coeff", ojson::array()).dump() + ", got " +
               got.value("coeff", ojson::array()).dump();
    }
    const ojson &e = expected.value("terms", ojson::array()),
                &g = got.value("terms", ojson::array());
    for (const auto& term : e) {
        bool found = false;
        for (const auto& t2 : g)
            if (t2["key"] == term["key"]) {
                found = true;
                if (t2["coeff"] != term["coeff"])
                    return "key " + term["key"].dump() + ": expected coeff " +
                           term["coeff"].dump() + ", got " + t2["coeff"].dump();
            }
        if (!found) return "key " + term["key"].dump() + " missing from result";
    }
    for (const auto& t2 : g) {
        bool found = false;
        for (const auto& term : e) found |= (t2["key"] == term["key"]);
        if (!found) return "unexpected key " + t2["key"].dump();
    }
    return "term order differs from canonical order";
}

int run_corpus(const std::string& path, std::ostream& os) {
    std::ifstream in(path);
    if (!in) {
        os << "cannot open corpus file " << path << "\n";
        return 2;
    }
    size_t total = 0, passed = 0, lineno = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ojson j;
        try {
            j = ojson::parse(line);
        } catch (const ojson::parse_error& e) {
            os << "line " << lineno << ": malformed JSON: " << e.what() << "\n";
            return 2;
        }
        ++total;
        try {
            const auto start = std::chrono::steady_clock::now();
            Query q = query_from_json(j);
            ojson got = compute(q);
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
            ojson expected = j.at("expected");
            bool ok = true;
            if (expected.contains("terms")) ok = expected["terms"] == got["terms"];
            if (expected.contains("coeff")) ok = ok && expected["coeff"] == got["coeff"];
            if (ok) {
                ++passed;
                os << "case " << total << ": ok (" << ms << " ms)\n";
            } else {
                os << "case " << total << ": FAIL " << first_diff(expected, got) << "\n";
            }
        } catch (const ojson::exception& e) {
            os << "line " << lineno << ": bad case: " << e.what() << "\n";
            return 2;
        } catch (const UsageError& e) {
            os << "line " << lineno << ": bad case: " << e.what() << "\n";
            return 2;
        }
    }
    os << passed << "/" << total << " cases passed\n";
    return passed == total ? 0 : 1;
}

// ---- oracle-check / selftest -----------------------------------------------

void describe(std::ostream& os, const std::string& name, const SweepReport& r, long long ms) {
    os << name << ": " << r.cases << " cases, " << r.mismatches.size() << " mismatches (" << ms
       << " ms)\n";
    size_t shown = 0;
    for (const std::string& m : r.mismatches) {
        if (++shown > 5) {
            os << "  ...\n";
            break;
        }
        os << "  " << m << "\n";
    }
}

template <class F>
SweepReport timed(F&& f, long long& ms) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport r = f();
    ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
             .count();
    return r;
}

int run_oracle_check(const std::string& basis, int bound, bool parallel, std::ostream& os) {
    bool ok = true;
    long long ms = 0;
    auto report = [&](const std::string& name, SweepReport r) {
        describe(os, name, r, ms);
        ok &= r.ok();
    };
    if (basis == "schur") {
        if (bound < 0) bound = 8;
        if (bound > 8) throw UsageError("--bound for schur is capped at 8");
        report("mul_schur vs tableaux oracle",
               timed([&] { return sweep_schur_vs_lr(bound, 4, parallel); }, ms));
    } else if (basis == "hl") {
        if (bound < 0) bound = 6;
        if (bound > 6) throw UsageError("--bound for hl is capped at 6");
        report("mul_hl vs x-expansion oracle",
               timed([&] { return sweep_hl_vs_expansion(bound, parallel); }, ms));
        report("pieri_hl vs psi formula",
               timed([&] { return sweep_hl_pieri_vs_psi(bound, 4, parallel); }, ms));
    } else if (basis == "uc") {
        if (bound < 0) bound = 6;
        if (bound > 6) throw UsageError("--bound for uc is capped at 6");
        report("mul_uc vs Koike oracle",
               timed([&] { return sweep_uc_vs_koike(bound, parallel); }, ms));
        report("mul_uc vs xy-polynomial oracle",
               timed([&] { return sweep_uc_vs_xy(std::min(bound, 5), parallel); }, ms));
    } else {
        throw UsageError("--basis must be schur, hl or uc");
    }
    return ok ? 0 : 1;
}

int run_selftest(bool parallel, std::ostream& os) {
    bool ok = true;
    long long ms = 0;
    auto report = [&](const std::string& name, SweepReport r) {
        describe(os, name, r, ms);
        ok &= r.ok();
    };
    report("schur two-row relation", timed([&] { return check_schur_two_row(-2, 6); }, ms));
    report("deformed fermionic relation",
           timed([&] { return check_deformed_fermionic(-2, 6); }, ms));
    report("series ordering independence",
           timed([&] { return check_ordering_independence(1000, 20240601, parallel); }, ms));
    report("pruning soundness",
           timed([&] { return check_pruning_soundness(4, -4, 6, parallel); }, ms));
    report("straightening confluence",
           timed([&] { return check_hl_confluence(3, -3, 6, parallel); }, ms));
    report("t=0 degeneration of straightening",
           timed([&] { return check_hl_t0_matches_schur(3, -3, 6, parallel); }, ms));
    return ok ? 0 : 1;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
    CLI::App app{"exact structure constants in the Schur, Hall-Littlewood and universal "
                 "character bases"};
    app.name("symfunc");
    app.require_subcommand(1);

    struct Raw {
        std::string basis = "schur";
        std::string alpha, mu, nu, la, mu2, eta, tau, nu2;
        std::string format = "text";
        std::string corpus_path;
        int r = 1;
        int bound = -1;
        int t_eval = 0;
        bool serial = false;
    } raw;

    auto add_common = [&](CLI::App* cmd, bool with_basis = true) {
        if (with_basis) cmd->add_option("--basis", raw.basis, "schur, hl or uc");
        cmd->add_option("--format", raw.format, "text or json");
        cmd->add_option("--t-eval", raw.t_eval, "evaluate coefficients at t = N");
    };

    CLI::App* straighten = app.add_subcommand("straighten", "normalize one basis symbol");
    straighten->add_option("--alpha", raw.alpha, "integer index vector")->required();
    add_common(straighten);

    CLI::App* pieri = app.add_subcommand("pieri", "multiply by h_r / q_r");
    pieri->add_option("--mu", raw.mu, "partition");
    pieri->add_option("--r", raw.r, "strip size")->required();
    add_common(pieri);

    CLI::App* mul = app.add_subcommand("mul", "product of two basis elements");
    mul->add_option("--mu", raw.mu, "first operand (uc: its x-partition)");
    mul->add_option("--nu", raw.nu, "second operand (schur/hl)");
    mul->add_option("--eta", raw.eta, "uc: y-partition of the first operand");
    mul->add_option("--tau", raw.tau, "uc: x-partition of the second operand");
    mul->add_option("--nu2", raw.nu2, "uc: y-partition of the second operand");
    add_common(mul);

    CLI::App* coeff = app.add_subcommand("coeff", "one structure constant of a product");
    coeff->add_option("--mu", raw.mu, "first operand (uc: its x-partition)");
    coeff->add_option("--nu", raw.nu, "second operand (schur/hl)");
    coeff->add_option("--eta", raw.eta, "uc: y-partition of the first operand");
    coeff->add_option("--tau", raw.tau, "uc: x-partition of the second operand");
    coeff->add_option("--nu2", raw.nu2, "uc: y-partition of the second operand");
    coeff->add_option("--la", raw.la, "target key")->required();
    coeff->add_option("--mu2", raw.mu2, "uc: y-partition of the target key");
    add_common(coeff);

    CLI::App* oracle = app.add_subcommand("oracle-check", "algebraic route vs oracle(s)");
    oracle->add_option("--basis", raw.basis, "schur, hl or uc")->required();
    oracle->add_option("--bound", raw.bound, "total weight bound");
    oracle->add_flag("--serial", raw.serial, "run the serial reference path");

    CLI::App* corpus = app.add_subcommand("corpus", "run a golden corpus file");
    corpus->add_option("--corpus", raw.corpus_path, "line-delimited JSON file")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "identity and pruning suites");
    selftest->add_flag("--serial", raw.serial, "run the serial reference path");

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {2, std::string(e.what()) + "\n"};
    }

    std::ostringstream out;
    try {
        if (*corpus) return {run_corpus(raw.corpus_path, out), out.str()};
        if (*oracle) return {run_oracle_check(raw.basis, raw.bound, !raw.serial, out), out.str()};
        if (*selftest) return {run_selftest(!raw.serial, out), out.str()};

        Query q;
        q.basis = raw.basis;
        for (CLI::App* cmd : {straighten, pieri, mul, coeff})
            if (cmd->parsed() && cmd->count("--t-eval") > 0) q.t_eval = raw.t_eval;
        if (*straighten) {
            q.command = "straighten";
            q.alpha = parse_int_list(raw.alpha, "--alpha");
        } else if (*pieri) {
            q.command = "pieri";
            q.mu = parse_partition(raw.mu, "--mu");
            q.r = raw.r;
        } else if (*mul || *coeff) {
            q.command = *mul ? "mul" : "coeff";
            q.mu = parse_partition(raw.mu, "--mu");
            q.nu = parse_partition(raw.nu, "--nu");
            q.eta = parse_partition(raw.eta, "--eta");
            q.tau = parse_partition(raw.tau, "--tau");
            q.nu2 = parse_partition(raw.nu2, "--nu2");
            if (q.basis == "uc" && !raw.nu.empty())
                throw UsageError("--nu is not a uc flag; the second uc operand is --tau/--nu2");
            if (*coeff) {
                q.la = parse_partition(raw.la, "--la");
                q.mu2 = parse_partition(raw.mu2, "--mu2");
            }
        }
        ojson result = compute(q);
        if (raw.format == "json")
            out << result.dump() << "\n";
        else if (raw.format == "text")
            out << render_text(q.basis, result);
        else
            throw UsageError("--format must be text or json");
        return {0, out.str()};
    } catch (const UsageError& e) {
        return {2, out.str() + e.what() + "\n"};
    } catch (const std::exception& e) {
        // exact-arithmetic invariants are enforced with exceptions; any that
        // escape are internal assertion failures
        return {3, out.str() + "internal error: " + e.what() + "\n"};
    }
}

}  // namespace symf::cli
