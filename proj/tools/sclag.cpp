// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line frontend: computes recurrence coefficients of the
// semi-classical Laguerre and Freud weights by independent routes and runs
// the identity-verification suites as reproducible tables.
//
// Exit status: 0 all checks pass, 1 check failure, 2 usage/domain error,
// 3 precision exhaustion.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sclag/discrete.hpp"
#include "sclag/errors.hpp"
#include "sclag/freud.hpp"
#include "sclag/ladder.hpp"
#include "sclag/moments.hpp"
#include "sclag/numerics.hpp"
#include "sclag/painleve4.hpp"
#include "sclag/toda.hpp"

using namespace sclag;

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

struct Config {
    std::string alpha = "1";
    std::string t;
    std::string t_min, t_max;
    long t_steps = 1;
    long n_max = 1;
    Prec precision_bits = kDefaultPrecision;
    std::string h;
    std::string tol_route = "1e-25";
    std::string tol_toda = "1e-12";
    std::string tol_ode = "1e-12";
    std::string tol_p4 = "1e-12";
    std::string tol_ladder = "1e-20";
    std::string tol_cond = "1e-25";
    std::string tol_riccati = "1e-25";
    std::string tol_fd = "1e-12";
    std::string format = "csv";
    bool fault = false;

    int digits() const {
        return static_cast<int>(std::ceil(0.3010 * static_cast<double>(precision_bits)));
    }
    Real real(const std::string& s) const { return Real::parse(s, precision_bits); }
    WeightParams params(const Real& t_val) const {
        return WeightParams(real(alpha), t_val);
    }
    std::vector<Real> grid() const {
        std::vector<Real> g;
        if (!t.empty()) {
            g.push_back(real(t));
            return g;
        }
        if (t_min.empty() || t_max.empty())
            throw DomainError("either --t or --t-min/--t-max/--t-steps required");
        if (t_steps < 1) throw DomainError("--t-steps must be >= 1");
        Real lo = real(t_min), hi = real(t_max);
        if (t_steps == 1) {
            g.push_back(lo);
            return g;
        }
        for (long i = 0; i < t_steps; ++i)
            g.push_back(lo + (hi - lo) * i / (t_steps - 1));
        return g;
    }
    Real fd_step() const {
        return h.empty() ? default_fd_step(precision_bits) : real(h);
    }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

void emit(const Table& table, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json obj;
            for (size_t i = 0; i < table.columns.size(); ++i)
                obj[table.columns[i]] = row[i];
            out.push_back(std::move(obj));
        }
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (size_t i = 0; i < table.columns.size(); ++i)
        std::cout << (i ? "," : "") << table.columns[i];
    std::cout << "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
    }
}

void emit_error(const std::string& code, const std::string& message,
                const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json obj;
        obj["error"] = code;
        obj["message"] = message;
        std::cout << obj.dump(2) << "\n";
    } else {
        std::cout << "error,message\n" << code << ",\"" << message << "\"\n";
    }
    std::cerr << "sclag: " << message << "\n";
}

int run_coeffs(const Config& cfg, const std::string& route) {
    if (cfg.n_max < 1) throw DomainError("coeffs: --n-max must be >= 1");
    const int d = cfg.digits();
    Table table;
    const bool both = route == "both";
    if (both)
        table.columns = {"t", "n", "a2_hankel", "a2_discrete", "a2_absdiff",
                         "b_hankel", "b_discrete", "b_absdiff"};
    else
        table.columns = {"t", "n", "a2", "b"};
    for (const Real& t : cfg.grid()) {
        WeightParams params = cfg.params(t);
        if (route == "hankel") {
            CoeffTable c = hankel_route(params, cfg.n_max, cfg.precision_bits);
            for (long n = 0; n <= cfg.n_max; ++n)
                table.add({t.str(d), std::to_string(n), c.a2[n].str(d),
                           c.b[n].str(d)});
        } else if (route == "discrete") {
            CoeffTable c = run_discrete(params, cfg.n_max, cfg.precision_bits).coeffs;
            for (long n = 0; n <= cfg.n_max; ++n)
                table.add({t.str(d), std::to_string(n), c.a2[n].str(d),
                           c.b[n].str(d)});
        } else {
            CoeffTable ch = hankel_route(params, cfg.n_max, cfg.precision_bits);
            CoeffTable cd = run_discrete(params, cfg.n_max, cfg.precision_bits).coeffs;
            for (long n = 0; n <= cfg.n_max; ++n)
                table.add({t.str(d), std::to_string(n), ch.a2[n].str(d),
                           cd.a2[n].str(d), abs(ch.a2[n] - cd.a2[n]).str(6),
                           ch.b[n].str(d), cd.b[n].str(d),
                           abs(ch.b[n] - cd.b[n]).str(6)});
        }
    }
    emit(table, cfg.format);
    return 0;
}

int run_trace(const Config& cfg, const std::string& quantity) {
    const int d = cfg.digits();
    Table table;
    if (quantity == "coeffs") {
        table.columns = {"t", "n", "a2", "b"};
        for (const Real& t : cfg.grid()) {
            CoeffTable c = hankel_route(cfg.params(t), std::max(cfg.n_max, 1L),
                                        cfg.precision_bits);
            for (long n = 0; n <= cfg.n_max; ++n)
                table.add({t.str(d), std::to_string(n), c.a2[n].str(d),
                           c.b[n].str(d)});
        }
    } else if (quantity == "q") {
        table.columns = {"t", "z", "n", "q", "q1"};
        const Real h = cfg.fd_step();
        for (const Real& t : cfg.grid()) {
            Real z = t / 2L;
            for (long n = 0; n <= cfg.n_max; ++n) {
                P4Point p = q_from_orbit(cfg.params(t), n, z, h, cfg.precision_bits);
                table.add({t.str(d), z.str(d), std::to_string(n), p.q.str(d),
                           p.q1.str(d)});
            }
        }
    } else if (quantity == "freud") {
        table.columns = {"t", "n", "A2"};
        for (const Real& t : cfg.grid()) {
            FreudTable f = dpi_run(cfg.params(t), cfg.n_max, cfg.precision_bits);
            for (long n = 0; n <= cfg.n_max; ++n)
                table.add({t.str(d), std::to_string(n), f.A2[n].str(d)});
        }
    } else {
        throw DomainError("trace: unknown quantity '" + quantity + "'");
    }
    emit(table, cfg.format);
    return 0;
}

class VerifySink {
public:
    VerifySink(Table& table, int digits) : table_(table), digits_(digits) {}

    void row(const std::string& suite, const std::string& id, long n,
             const Real& t, const Real& z, const Real& residual,
             const Real& tol) {
        bool pass = abs(residual) <= tol;
        failures_ += pass ? 0 : 1;
        table_.add({suite, id, std::to_string(n), t.str(digits_),
                    z.is_nan() ? "" : z.str(digits_), abs(residual).str(6),
                    tol.str(3), pass ? "pass" : "fail"});
    }
    long failures() const { return failures_; }

private:
    Table& table_;
    int digits_;
    long failures_ = 0;
};

void verify_riccati(const Config& cfg, VerifySink& sink) {
    const Real tol = cfg.real(cfg.tol_riccati);
    const Real h = cfg.fd_step();
    for (const Real& t : cfg.grid()) {
        Real z = t / 2L;
        WeightParams params = cfg.params(t);
        P4Point p = q_from_orbit(params, 0, z, h, cfg.precision_bits);
        Real res = riccati_residual(p.q, p.q1, z, params.alpha);
        sink.row("riccati", "riccati", 0, t, z, res, tol);
        if (cfg.fault) {
            Real bad = riccati_residual(p.q * cfg.real("1.000001"), p.q1, z,
                                        params.alpha);
            sink.row("riccati", "fault_probe", 0, t, z, bad, tol);
        }
    }
}

void verify_toda(const Config& cfg, VerifySink& sink) {
    const Real tol = cfg.real(cfg.tol_toda);
    const Real tol_ode = cfg.real(cfg.tol_ode);
    const Real h = cfg.fd_step();
    const Real nan{};
    for (const Real& t : cfg.grid()) {
        WeightParams params = cfg.params(t);
        TodaResidualReport report =
            toda_residuals(params, cfg.n_max, {t}, h, cfg.precision_bits);
        const TodaResiduals& res = report.at.front();
        for (long n = 1; n <= cfg.n_max; ++n)
            sink.row("toda", "toda_a2_flow", n, t, nan, res.r1[n], tol);
        for (long n = 0; n < cfg.n_max; ++n)
            sink.row("toda", "toda_b_flow", n, t, nan, res.r2[n], tol);
        for (long n = 0; n <= cfg.n_max; ++n)
            sink.row("toda", "xn_ode", n, t, nan,
                     xn_ode_residual(params, n, t, h, cfg.precision_bits),
                     tol_ode);
        if (cfg.fault) {
            CoeffTable c = hankel_route(params, cfg.n_max, cfg.precision_bits);
            Real lo = hankel_route(params.with_t(t - h), 1, cfg.precision_bits).b[0];
            Real hi = hankel_route(params.with_t(t + h), 1, cfg.precision_bits).b[0];
            Real bad = (hi - lo) / (2L * h) - (c.a2[1] + cfg.real("0.001"));
            sink.row("toda", "fault_probe", 0, t, nan, bad, tol);
        }
    }
}

void verify_p4(const Config& cfg, VerifySink& sink) {
    const Real tol = cfg.real(cfg.tol_p4);
    const Real h = cfg.fd_step();
    for (const Real& t : cfg.grid()) {
        Real z = t / 2L;
        WeightParams params = cfg.params(t);
        for (long n = 0; n <= cfg.n_max; ++n) {
            P4Point p = q_from_orbit(params, n, z, h, cfg.precision_bits);
            sink.row("p4", "p4_orbit", n, t, z, p4_residual(p), tol);
        }
        for (long n = 1; n <= cfg.n_max; ++n) {
            P4Point p = freud_f_point(params, n, z, h, cfg.precision_bits);
            sink.row("p4", "p4_freud", n, t, z, p4_residual(p), tol);
        }
        if (cfg.fault) {
            P4Point p = q_from_orbit(params, 0, z, h, cfg.precision_bits);
            p.q2 += cfg.real("0.001");
            sink.row("p4", "fault_probe", 0, t, z, p4_residual(p), tol);
        }
    }
}

void verify_ladder(const Config& cfg, VerifySink& sink) {
    const Real tol = cfg.real(cfg.tol_cond);
    const Real nan{};
    for (const Real& t : cfg.grid()) {
        CoeffTable c =
            hankel_route(cfg.params(t), cfg.n_max + 1, cfg.precision_bits);
        for (const ConditionRow& row : verify_conditions(c, cfg.n_max)) {
            sink.row("ladder", "cond2", row.n, t, nan, row.cond2, tol);
            sink.row("ladder", "cond3", row.n, t, nan, row.cond3, tol);
            if (row.n >= 1) {
                sink.row("ladder", "cond4", row.n, t, nan, row.cond4, tol);
                sink.row("ladder", "cond6", row.n, t, nan, row.cond6, tol);
                sink.row("ladder", "cond7", row.n, t, nan, row.cond7, tol);
            }
        }
        if (cfg.fault) {
            CoeffTable bad = c;
            bad.a2[1] *= cfg.real("1.000001");
            sink.row("ladder", "fault_probe", 1, t, nan,
                     verify_conditions(bad, cfg.n_max)[1].cond7, tol);
        }
    }
}

void verify_backlund(const Config& cfg, VerifySink& sink) {
    const Real tol = cfg.real(cfg.tol_ladder);
    const Real tol_fd = cfg.real(cfg.tol_fd);
    const Real h = cfg.fd_step();
    for (const Real& t : cfg.grid()) {
        Real z = t / 2L;
        WeightParams params = cfg.params(t);
        for (long n = 1; n <= cfg.n_max; ++n)
            sink.row("backlund", "relation_E", n, t, z,
                     relation_E_check(params, n, z, cfg.precision_bits), tol);
        for (long n = 1; n <= cfg.n_max; ++n) {
            FreudBacklundLink link = freud_backlund_link(
                params, n, z, h, FreudLink::rel1, cfg.precision_bits);
            sink.row("backlund", "freud_link_rel1_f2", n, t, z,
                     link.f2_direct - link.f2_backlund, tol_fd);
            sink.row("backlund", "freud_link_rel1_q", n, t, z,
                     link.q_direct - link.q_backlund, tol_fd);
            link = freud_backlund_link(params, n, z, h, FreudLink::rel2,
                                       cfg.precision_bits);
            sink.row("backlund", "freud_link_rel2_f2", n, t, z,
                     link.f2_direct - link.f2_backlund, tol_fd);
            sink.row("backlund", "freud_link_rel2_q", n, t, z,
                     link.q_direct - link.q_backlund, tol_fd);
        }
        if (cfg.fault) {
            P4Point p = q_from_orbit(params, 1, z, h, cfg.precision_bits);
            Real up = ladder_up(p.q * cfg.real("1.000001"), p.q1, z,
                                1, params.alpha);
            P4Point p2 = q_from_orbit(params, 2, z, h, cfg.precision_bits);
            sink.row("backlund", "fault_probe", 1, t, z, up - p2.q, tol);
        }
    }
}

void verify_dpi(const Config& cfg, VerifySink& sink) {
    const Real tol = cfg.real(cfg.tol_toda);
    const Real tol_route = cfg.real(cfg.tol_route);
    const Real h = cfg.fd_step();
    const Real nan{};
    for (const Real& t : cfg.grid()) {
        WeightParams params = cfg.params(t);
        for (long n = 1; n <= cfg.n_max; ++n)
            sink.row("dpi", "f2_flow", n, t, nan,
                     dpi_f2_residual(params, n, h, cfg.precision_bits), tol);
        FreudTable run = dpi_run(params, cfg.n_max, cfg.precision_bits);
        FreudTable oracle =
            freud_hankel_oracle(params, cfg.n_max, cfg.precision_bits);
        for (long n = 1; n <= cfg.n_max; ++n)
            sink.row("dpi", "dpi_vs_hankel", n, t, nan,
                     run.A2[n] - oracle.A2[n], tol_route);
        if (cfg.fault) {
            Real bad = run.A2[1] * cfg.real("1.000001") - oracle.A2[1];
            sink.row("dpi", "fault_probe", 1, t, nan, bad, tol_route);
        }
    }
}

void verify_cross(const Config& cfg, VerifySink& sink) {
    const Real tol = cfg.real(cfg.tol_route);
    const Real nan{};
    for (const Real& t : cfg.grid()) {
        WeightParams params = cfg.params(t);
        for (const FreudCrossRow& row :
             freud_cross_check(params, cfg.n_max, cfg.precision_bits)) {
            if (row.n >= 1)
                sink.row("cross", "rel1_a", row.n, t, nan, row.a_alpha, tol);
            sink.row("cross", "rel1_b", row.n, t, nan, row.b_alpha, tol);
            sink.row("cross", "rel2_a", row.n, t, nan, row.a_alpha1, tol);
            sink.row("cross", "rel2_b", row.n, t, nan, row.b_alpha1, tol);
        }
        if (cfg.fault) {
            FreudTable fr = dpi_run(params, 2, cfg.precision_bits);
            CoeffTable lag = hankel_route(params, 1, cfg.precision_bits);
            Real bad = lag.b[0] - (fr.A2[0] + fr.A2[1] * cfg.real("1.000001"));
            sink.row("cross", "fault_probe", 0, t, nan, bad, tol);
        }
    }
}

int run_verify(const Config& cfg, const std::string& suite) {
    Table table;
    table.columns = {"suite", "id", "n", "t", "z", "residual", "tolerance",
                     "status"};
    VerifySink sink(table, cfg.digits());
    const bool all = suite == "all";
    if (all || suite == "riccati") verify_riccati(cfg, sink);
    if (all || suite == "toda") verify_toda(cfg, sink);
    if (all || suite == "p4") verify_p4(cfg, sink);
    if (all || suite == "ladder") verify_ladder(cfg, sink);
    if (all || suite == "backlund") verify_backlund(cfg, sink);
    if (all || suite == "dpi") verify_dpi(cfg, sink);
    if (all || suite == "cross") verify_cross(cfg, sink);
    emit(table, cfg.format);
    if (sink.failures() > 0) {
        std::cerr << "sclag: " << sink.failures() << " check(s) failed\n";
        return kExitCheckFailure;
    }
    return 0;
}

void add_common(CLI::App* cmd, Config& cfg) {
    cmd->set_help_flag("--help", "print this help and exit"); // frees -h for --h
    cmd->add_option("--alpha", cfg.alpha, "weight exponent alpha (> -1)");
    cmd->add_option("--t", cfg.t, "deformation parameter t");
    cmd->add_option("--t-min", cfg.t_min, "grid start");
    cmd->add_option("--t-max", cfg.t_max, "grid end");
    cmd->add_option("--t-steps", cfg.t_steps, "grid points (>= 1)");
    cmd->add_option("--n-max", cfg.n_max, "largest index n");
    cmd->add_option("--precision-bits", cfg.precision_bits,
                    "working precision in bits (>= 64)")
        ->envname("SCLAG_PRECISION_BITS");
    cmd->add_option("--h", cfg.h, "finite-difference step (default 2^-(bits/8))");
    cmd->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--tol-route", cfg.tol_route, "route-agreement tolerance");
    cmd->add_option("--tol-toda", cfg.tol_toda, "Toda/dPI flow tolerance");
    cmd->add_option("--tol-ode", cfg.tol_ode, "x_n ODE tolerance");
    cmd->add_option("--tol-p4", cfg.tol_p4, "P_IV residual tolerance");
    cmd->add_option("--tol-ladder", cfg.tol_ladder, "Backlund ladder tolerance");
    cmd->add_option("--tol-cond", cfg.tol_cond, "ladder-condition tolerance");
    cmd->add_option("--tol-riccati", cfg.tol_riccati, "Riccati tolerance");
    cmd->add_option("--tol-fd", cfg.tol_fd, "finite-difference comparison tolerance");
}

} // namespace

int run_main(int argc, char** argv) {
    CLI::App app{
        "recurrence coefficients of semi-classical Laguerre/Freud weights "
        "and their Painleve-IV identity checks"};
    app.require_subcommand(1);

    Config cfg_coeffs, cfg_verify, cfg_trace;
    std::string route = "both", suite = "all", quantity = "coeffs";

    CLI::App* coeffs = app.add_subcommand("coeffs", "recurrence coefficients");
    add_common(coeffs, cfg_coeffs);
    coeffs->add_option("--route", route, "hankel, discrete or both")
        ->check(CLI::IsMember({"hankel", "discrete", "both"}));

    CLI::App* verify = app.add_subcommand("verify", "identity verification suites");
    add_common(verify, cfg_verify);
    verify->add_option("--suite", suite, "which suite")
        ->check(CLI::IsMember({"toda", "p4", "riccati", "ladder", "backlund",
                               "dpi", "cross", "all"}));
    verify->add_flag("--fault", cfg_verify.fault,
                     "inject a coefficient perturbation (harness self-test)");

    CLI::App* trace = app.add_subcommand("trace", "tables over the t-grid");
    add_common(trace, cfg_trace);
    trace->add_option("--quantity", quantity, "coeffs, q or freud")
        ->check(CLI::IsMember({"coeffs", "q", "freud"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Config& cfg = coeffs->parsed()   ? cfg_coeffs
                        : verify->parsed() ? cfg_verify
                                           : cfg_trace;
    try {
        if (cfg.precision_bits < 64)
            throw DomainError("--precision-bits must be >= 64");
        if (cfg.n_max < 0) throw DomainError("--n-max must be >= 0");
        if (coeffs->parsed()) return run_coeffs(cfg, route);
        if (verify->parsed()) return run_verify(cfg, suite);
        return run_trace(cfg, quantity);
    } catch (const DomainError& e) {
        emit_error("domain_error", e.what(), cfg.format);
        return kExitUsage;
    } catch (const PrecisionError& e) {
        emit_error("precision_exhaustion", e.what(), cfg.format);
        return kExitPrecision;
    } catch (const SingularityError& e) {
        emit_error("singularity", e.what(), cfg.format);
        return kExitCheckFailure;
    } catch (const ConvergenceError& e) {
        emit_error("convergence_failure", e.what(), cfg.format);
        return kExitCheckFailure;
    } catch (const std::exception& e) {
        emit_error("internal_error", e.what(), cfg.format);
        return kExitCheckFailure;
    }
}

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "sclag: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (...) {
        std::cerr << "sclag: unknown failure\n";
        return kExitCheckFailure;
    }
}
