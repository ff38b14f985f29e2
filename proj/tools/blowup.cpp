// Command line front end: computes the numerical invariants of a rank-2
// bundle on the blown-up plane from its (j, p) data, runs formula-vs-oracle
// sweeps, and surveys charge spectra and (l(Q), l(R1)) strata.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "blowup/parser.hpp"
#include "blowup/report_io.hpp"

namespace {

using namespace blowup;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitNonStabilized = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error("cannot open output file: " + out_path);
        f << text;
    }
}

std::size_t budget_or_default(long j, std::size_t budget_flag) {
    if (budget_flag > 0) return budget_flag;
    if (const char* env = std::getenv("BLOWUP_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return default_budget(j);
}

struct WindowFlags {
    long umax = -1, zmin = 1, zmax = -1;
    bool any() const { return umax >= 0 || zmin <= 0 || zmax >= 0; }
    Window resolve(long j) const {
        Window w = default_window(j);
        if (umax >= 0) w.umax = umax;
        if (zmin <= 0) w.zmin = zmin;
        if (zmax >= 0) w.zmax = zmax;
        if (w.zmin > w.zmax) throw DomainError("window needs zmin <= zmax");
        return w;
    }
};

int run_invariants_one(long j, const std::string& ptext, const std::string& format,
                       std::ostream& sink) {
    BiLaurent p = parse_polynomial(ptext);
    BundleV b = make_bundle(j, p);
    InvariantReport r = report(b, CheckPolicy::Collect);
    sink << (format == "json" ? report_json(r) : report_table(r));
    return r.crosscheck_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical invariants of rank-2 bundles on the blown-up plane"};
    app.require_subcommand(1);

    // --- invariants ---------------------------------------------------------
    auto* inv = app.add_subcommand("invariants", "full invariant report for one (j, p)");
    long inv_j = 0;
    std::string inv_p = "0", inv_fmt = "table", inv_out, inv_batch;
    WindowFlags inv_win;
    inv->add_option("--j", inv_j, "splitting type (non-negative)")->required();
    inv->add_option("--p", inv_p, "extension class polynomial, e.g. \"z^2*u\"");
    inv->add_option("--batch", inv_batch, "file with one 'j; p' per line (overrides --j/--p)");
    inv->add_option("--format", inv_fmt, "table|json")->check(CLI::IsMember({"table", "json"}));
    inv->add_option("--out", inv_out, "write output to a file");
    inv->add_option("--umax", inv_win.umax, "window override: max u-degree");
    inv->add_option("--zmin", inv_win.zmin, "window override: min z-exponent");
    inv->add_option("--zmax", inv_win.zmax, "window override: max z-exponent");

    // --- verify -------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "formula-vs-oracle sweeps");
    VerifyOptions vopts;
    std::string ver_fmt = "table", ver_out;
    ver->add_option("--jmax", vopts.jmax, "largest splitting type to sweep")->required();
    ver->add_option("--samples", vopts.samples, "random classes per splitting type");
    ver->add_option("--seed", vopts.seed, "random seed");
    ver->add_flag("--robust", vopts.robust, "re-check dimensions under one extra enlargement");
    ver->add_option("--format", ver_fmt, "table|json")->check(CLI::IsMember({"table", "json"}));
    ver->add_option("--out", ver_out, "write output to a file");

    // --- spectrum / strata / witness ----------------------------------------
    auto* spec = app.add_subcommand("spectrum", "charge spectrum witnesses for one j");
    long sp_j = 1;
    std::size_t sp_budget = 0;
    std::uint64_t sp_seed = 0;
    std::string sp_fmt = "table", sp_out;
    spec->add_option("--j", sp_j, "splitting type (>= 1)")->required();
    spec->add_option("--budget", sp_budget, "candidate budget (default 500, 2000 for j=4)");
    spec->add_option("--seed", sp_seed, "random seed");
    spec->add_option("--format", sp_fmt, "table|json")->check(CLI::IsMember({"table", "json"}));
    spec->add_option("--out", sp_out, "write output to a file");

    auto* str = app.add_subcommand("strata", "survey the (l(Q), l(R1)) box for one j");
    long st_j = 1;
    std::size_t st_budget = 0;
    std::uint64_t st_seed = 0;
    std::string st_fmt = "table", st_out;
    str->add_option("--j", st_j, "splitting type (>= 1)")->required();
    str->add_option("--budget", st_budget, "candidate budget (default 500, 2000 for j=4)");
    str->add_option("--seed", st_seed, "random seed");
    str->add_option("--format", st_fmt, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    str->add_option("--out", st_out, "write output to a file");

    auto* wit = app.add_subcommand("witness", "find a class with given (l(Q), l(R1))");
    long wi_j = 1, wi_lq = 1, wi_lr1 = 0;
    std::size_t wi_budget = 0;
    std::uint64_t wi_seed = 0;
    wit->add_option("--j", wi_j, "splitting type (>= 1)")->required();
    wit->add_option("--lq", wi_lq, "target l(Q)")->required();
    wit->add_option("--lr1", wi_lr1, "target l(R1)")->required();
    wit->add_option("--budget", wi_budget, "candidate budget");
    wit->add_option("--seed", wi_seed, "random seed");

    auto* self = app.add_subcommand("selftest", "quick internal sanity sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*inv) {
            std::ostringstream sink;
            int rc = kExitOk;
            if (!inv_batch.empty()) {
                std::ifstream f(inv_batch);
                if (!f) throw Error("cannot open batch file: " + inv_batch);
                std::string line;
                while (std::getline(f, line)) {
                    if (line.empty() || line[0] == '#') continue;
                    auto semi = line.find(';');
                    if (semi == std::string::npos)
                        throw ParseError(0, "batch line needs 'j; p': " + line);
                    long j = std::stol(line.substr(0, semi));
                    int one = run_invariants_one(j, line.substr(semi + 1), inv_fmt, sink);
                    rc = std::max(rc, one);
                }
            } else {
                rc = run_invariants_one(inv_j, inv_p, inv_fmt, sink);
            }
            emit(sink.str(), inv_out);
            return rc;
        }
        if (*ver) {
            VerifyOutcome o = run_verify(vopts);
            emit(ver_fmt == "json" ? verify_json(o) : verify_table(o), ver_out);
            return o.all_ok ? kExitOk : kExitMismatch;
        }
        if (*spec) {
            SpectrumResult s = charge_spectrum(sp_j, budget_or_default(sp_j, sp_budget), sp_seed);
            emit(sp_fmt == "json" ? spectrum_json(s) : spectrum_table(s), sp_out);
            return kExitOk;
        }
        if (*str) {
            StrataTable t = strata_survey(st_j, budget_or_default(st_j, st_budget), st_seed);
            std::string text = st_fmt == "json"  ? strata_json(t)
                               : st_fmt == "csv" ? strata_csv(t)
                                                 : strata_table(t);
            emit(text, st_out);
            return kExitOk;
        }
        if (*wit) {
            auto found = find_witness(wi_j, wi_lq, wi_lr1, budget_or_default(wi_j, wi_budget),
                                      wi_seed);
            if (found)
                std::cout << found->p.to_string() << "\n";
            else
                std::cout << "not found within budget\n";
            return kExitOk;
        }
        if (*self) {
            VerifyOptions o;
            o.jmax = 2;
            o.samples = 5;
            VerifyOutcome out = run_verify(o);
            std::cout << verify_table(out);
            return out.all_ok ? kExitOk : kExitMismatch;
        }
    } catch (const NonStabilized& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonStabilized;
    } catch (const CrossCheckMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
