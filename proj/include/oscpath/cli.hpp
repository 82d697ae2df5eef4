#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "oscpath/brute_force.hpp"
#include "oscpath/ct_engine.hpp"
#include "oscpath/dp_solver.hpp"
#include "oscpath/errors.hpp"
#include "oscpath/format.hpp"
#include "oscpath/lgv.hpp"
#include "oscpath/problem.hpp"

namespace oscpath {

/// Exit codes shared by the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitBadSpec = 2,
    kExitMismatch = 3,
    kExitBudget = 4,
};

/// Everything one invocation needs: which command to run, the instance, and
/// the evaluation knobs.  Unset values keep their documented defaults:
/// t = 2n, boundary heights 0,2,...,2(n-1) on both ends, window and cap at
/// the engine's safe defaults.
struct RunConfig {
    std::string command;  // ct | dp | brute | verify | table
    int n = 3;
    int t = -1;                       // -1 -> 2n
    std::vector<int> y_start, y_end;  // empty -> default heights
    int window = 0;                   // 0 -> safe default
    int omega_cap = -1;               // -1 -> degree bound
    std::string eval_omega;           // optional rational evaluation point
    std::string format = "text";      // text | json
    int threads = 0;                  // 0 -> hardware concurrency
    double budget_seconds = 0.0;      // 0 -> no deadline
};

/// Parse "0,2,4" (optionally with spaces) into heights.  Throws ParseError.
inline std::vector<int> parse_heights(const std::string& text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t comma = text.find(',', i);
        std::string piece = text.substr(i, comma == std::string::npos ? comma : comma - i);
        std::size_t from = piece.find_first_not_of(" \t");
        std::size_t to = piece.find_last_not_of(" \t");
        if (from == std::string::npos) throw ParseError("empty height in list: " + text);
        piece = piece.substr(from, to - from + 1);
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(piece, &used));
            if (used != piece.size()) throw ParseError("");
        } catch (...) {
            throw ParseError("not an integer height: " + piece);
        }
        if (comma == std::string::npos) break;
        i = comma + 1;
    }
    return out;
}

namespace detail {

inline ProblemSpec spec_from_config(const RunConfig& cfg) {
    int t = cfg.t >= 0 ? cfg.t : 2 * cfg.n;
    std::vector<int> ys = cfg.y_start.empty() ? default_heights(cfg.n) : cfg.y_start;
    std::vector<int> ye = cfg.y_end.empty() ? default_heights(cfg.n) : cfg.y_end;
    return ProblemSpec(cfg.n, t, std::move(ys), std::move(ye));
}

inline CtSettings settings_from_config(const ProblemSpec& spec, const RunConfig& cfg) {
    CtSettings st;
    st.omega_cap = cfg.omega_cap >= 0 ? cfg.omega_cap : default_omega_cap(spec);
    st.window = cfg.window > 0 ? cfg.window : safe_window_bound(spec, st.omega_cap);
    st.threads = cfg.threads;
    return st;
}

/// Append the optional rational evaluation of the polynomial to a JSON
/// record / a text stream.
inline void attach_eval(const RunConfig& cfg, const OmegaPoly& poly, Json* record,
                        std::ostream* out) {
    if (cfg.eval_omega.empty()) return;
    Rational omega = parse_rational(cfg.eval_omega);
    Rational value = poly.eval(omega);
    if (record)
        (*record)["eval"] = Json{{"omega", rational_to_string(omega)},
                                 {"value", rational_to_string(value)}};
    if (out)
        *out << "R(" << rational_to_string(omega) << ") = " << rational_to_string(value) << "\n";
}

inline int run_single(const RunConfig& cfg, std::ostream& out) {
    ProblemSpec spec = spec_from_config(cfg);
    Deadline deadline = cfg.budget_seconds > 0 ? Deadline::after_seconds(cfg.budget_seconds)
                                               : Deadline{};
    CtSettings st = settings_from_config(spec, cfg);
    OmegaPoly poly;
    if (cfg.command == "ct")
        poly = ct_evaluate(spec, st, deadline);
    else if (cfg.command == "dp")
        poly = dp_run(spec, deadline);
    else
        poly = brute_force(spec, deadline);

    if (cfg.format == "json") {
        Json record = result_to_json(spec, cfg.command, st.window, st.omega_cap, poly);
        attach_eval(cfg, poly, &record, nullptr);
        out << record.dump() << "\n";
    } else {
        out << poly_to_text(poly) << "\n";
        attach_eval(cfg, poly, nullptr, &out);
    }
    return kExitOk;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
    ProblemSpec spec = spec_from_config(cfg);
    Deadline deadline = cfg.budget_seconds > 0 ? Deadline::after_seconds(cfg.budget_seconds)
                                               : Deadline{};
    CtSettings st = settings_from_config(spec, cfg);

    OmegaPoly ct = ct_evaluate(spec, st, deadline);
    OmegaPoly dp = dp_run(spec, deadline);
    bool brute_ran = static_cast<long>(spec.n()) * spec.t() <= 24;
    OmegaPoly bf;
    if (brute_ran) bf = brute_force(spec, deadline);
    Integer det = lgv_determinant(spec);

    bool ct_dp = ct == dp;
    bool dp_bf = !brute_ran || dp == bf;
    bool lgv_ok = det == dp.coeff(0);
    bool ok = ct_dp && dp_bf && lgv_ok;

    if (cfg.format == "json") {
        Json record = result_to_json(spec, "verify", st.window, st.omega_cap, ct);
        record["checks"] = Json{{"ct_equals_dp", ct_dp},
                                {"dp_equals_brute", brute_ran ? Json(dp_bf) : Json(nullptr)},
                                {"vicious_slice_equals_determinant", lgv_ok}};
        record["ok"] = ok;
        out << record.dump() << "\n";
    } else {
        out << "ct    : " << poly_to_text(ct) << "\n";
        out << "dp    : " << poly_to_text(dp) << "\n";
        if (brute_ran)
            out << "brute : " << poly_to_text(bf) << "\n";
        else
            out << "brute : skipped (n*t > 24)\n";
        out << "det   : " << det.get_str() << " vs constant coefficient "
            << dp.coeff(0).get_str() << "\n";
        out << (ok ? "verify: OK" : "verify: MISMATCH") << "\n";
    }
    return ok ? kExitOk : kExitMismatch;
}

inline int run_table(const RunConfig& cfg, std::ostream& out) {
    Deadline deadline = cfg.budget_seconds > 0 ? Deadline::after_seconds(cfg.budget_seconds)
                                               : Deadline{};
    Json rows = Json::array();
    for (int n = 2; n <= 5; ++n) {
        ProblemSpec spec = ProblemSpec::example(n);
        CtSettings st = default_ct_settings(spec);
        st.threads = cfg.threads;
        OmegaPoly poly = ct_evaluate(spec, st, deadline);
        if (cfg.format == "json")
            rows.push_back(result_to_json(spec, "ct", st.window, st.omega_cap, poly));
        else
            out << "R_" << spec.t() << "(w) = " << poly_to_text(poly) << "\n";
    }
    if (cfg.format == "json") out << Json{{"table", rows}}.dump() << "\n";
    return kExitOk;
}

}  // namespace detail

/// Execute one parsed invocation, writing results to out and complaints to
/// err.  Returns the process exit code; never throws.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.format != "text" && cfg.format != "json") {
            err << "error: unknown format '" << cfg.format << "' (expected text or json)\n";
            return kExitUsage;
        }
        if (cfg.command == "ct" || cfg.command == "dp" || cfg.command == "brute")
            return detail::run_single(cfg, out);
        if (cfg.command == "verify") return detail::run_verify(cfg, out);
        if (cfg.command == "table") return detail::run_table(cfg, out);
        err << "error: unknown command '" << cfg.command << "'\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadSpec;
    } catch (const SettingsError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadSpec;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const EvalError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
}

}  // namespace oscpath
