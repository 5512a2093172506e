#pragma once

// Batch command-line front end. Every subcommand is a thin layer over the
// library; output goes to `out` (or --out FILE), diagnostics to `err`.
//
// Exit codes: 0 success / verified, 1 falsified identity, 2 usage error,
// 3 numeric failure.

#include <cstdint>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "canonical.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "partition.hpp"
#include "points.hpp"
#include "rational.hpp"
#include "schur.hpp"
#include "series.hpp"
#include "statistics.hpp"
#include "thermo.hpp"

namespace pstat::cli {

enum ExitCode : int { kOk = 0, kFalsified = 1, kUsage = 2, kNumeric = 3 };

namespace detail {

class UsageError : public Error {
public:
    using Error::Error;
};

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed integer list '" + text + "'");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

inline EvalPoint parse_point(const std::string& text) { return EvalPoint(parse_rational_list(text)); }

inline std::vector<StatisticsKind> verify_all_kinds() {
    return {StatisticsKind::bose(),         StatisticsKind::fermi(),        StatisticsKind::hst(),
            StatisticsKind::even_rows(),    StatisticsKind::even_cols(),    StatisticsKind::parafermi(1),
            StatisticsKind::parafermi(2),   StatisticsKind::parafermi(3)};
}

inline SpectrumSpec parse_spectrum(const std::string& name, int qmax) {
    if (name == "eq1") return build_spectrum(SpectrumFamily::Anisotropic2D, qmax);
    if (name == "eq2") return build_spectrum(SpectrumFamily::Linear1D, qmax);
    throw ParseError("unknown spectrum '" + name + "' (expected eq1 or eq2)");
}

// "lo:hi:count", count >= 1 evenly spaced values including both ends.
inline std::vector<double> parse_range(const std::string& text) {
    std::stringstream ss(text);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
        throw ParseError("malformed range '" + text + "' (expected lo:hi:count)");
    try {
        const double lo = std::stod(a);
        const double hi = std::stod(b);
        const int count = std::stoi(c);
        if (count < 1) throw ParseError("range count must be >= 1");
        std::vector<double> out;
        for (int i = 0; i < count; ++i)
            out.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1));
        return out;
    } catch (const std::logic_error&) {
        throw ParseError("malformed range '" + text + "'");
    }
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition functions of permutation-group statistics, in exact arithmetic"};
    app.require_subcommand(1);
    std::string out_file;
    app.add_option("--out", out_file, "Write output to this file instead of stdout");

    std::string format;
    const auto formats = CLI::IsMember({"text", "json", "csv"});

    // partitions
    auto* cmd_part = app.add_subcommand("partitions", "List partitions of N, optionally filtered by a statistics kind");
    int part_n = 0;
    std::size_t part_max = 0;
    std::string part_kind;
    cmd_part->add_option("N", part_n, "Weight")->required()->check(CLI::NonNegativeNumber);
    cmd_part->add_option("--max-parts", part_max, "Maximum number of parts (default N)");
    cmd_part->add_option("--kind", part_kind, "Statistics kind filter");
    cmd_part->add_option("--format", format, "text|json|csv")->check(formats);

    // schur
    auto* cmd_schur = app.add_subcommand("schur", "Evaluate a Schur function with both backends");
    std::string schur_shape, schur_point;
    cmd_schur->add_option("--shape", schur_shape, "Partition, e.g. 2,1")->required();
    cmd_schur->add_option("--point", schur_point, "Comma-separated rationals")->required();
    cmd_schur->add_option("--format", format, "text|json")->check(formats);

    // zn
    auto* cmd_zn = app.add_subcommand("zn", "Canonical partition function Z_N");
    std::string zn_kind, zn_point, zn_exponents;
    int zn_n = 0;
    std::optional<std::size_t> zn_emax;
    cmd_zn->add_option("--kind", zn_kind, "Statistics kind")->required();
    auto* zn_point_opt = cmd_zn->add_option("--point", zn_point, "Comma-separated rationals");
    auto* zn_exp_opt = cmd_zn->add_option("--exponents", zn_exponents, "Integer energies e_i for x_i = q^e_i");
    zn_point_opt->excludes(zn_exp_opt);
    cmd_zn->add_option("--n", zn_n, "Particle number")->required()->check(CLI::NonNegativeNumber);
    cmd_zn->add_option("--emax", zn_emax, "Truncation degree in q (with --exponents)");
    cmd_zn->add_option("--format", format, "text|json")->check(formats);

    // gpf
    auto* cmd_gpf = app.add_subcommand("gpf", "Grand canonical series in the fugacity z");
    std::string gpf_kind, gpf_point;
    std::size_t gpf_nmax = 0;
    bool gpf_closed = false;
    cmd_gpf->add_option("--kind", gpf_kind, "Statistics kind")->required();
    cmd_gpf->add_option("--point", gpf_point, "Comma-separated rationals")->required();
    cmd_gpf->add_option("--nmax", gpf_nmax, "Truncation order")->required();
    cmd_gpf->add_flag("--closed-form", gpf_closed, "Expand the closed form instead of the Schur sum");
    cmd_gpf->add_option("--format", format, "text|json")->check(formats);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Check closed forms against the restricted Schur sum");
    std::string verify_kind, verify_point;
    bool verify_all = false;
    std::size_t verify_nmax = 6;
    std::size_t verify_m = 3;
    std::uint64_t verify_seed = 1;
    auto* vk = cmd_verify->add_option("--kind", verify_kind, "Statistics kind");
    auto* va = cmd_verify->add_flag("--all", verify_all, "All kinds with a closed form");
    vk->excludes(va);
    cmd_verify->add_option("--point", verify_point, "Comma-separated rationals (default: primes and a seeded point)");
    cmd_verify->add_option("--nmax", verify_nmax, "Truncation order");
    cmd_verify->add_option("--m", verify_m, "Number of levels for the default points")->check(CLI::Range(1, 12));
    cmd_verify->add_option("--seed", verify_seed, "Seed for the randomized point");
    cmd_verify->add_option("--format", format, "text|json")->check(formats);

    // equivalence
    auto* cmd_eq = app.add_subcommand("equivalence", "Bose (2-D 1:2 oscillator) vs conjugate-even (1-D oscillator)");
    int eq_qmax = 12;
    cmd_eq->add_option("--qmax", eq_qmax, "Truncation order in q")->check(CLI::PositiveNumber);
    cmd_eq->add_option("--format", format, "json|csv|text")->check(formats);

    // thermo
    auto* cmd_thermo = app.add_subcommand("thermo", "Numeric log Z, <N>, <E> on a named spectrum");
    std::string th_kind, th_spectrum;
    int th_qmax = 8;
    int th_nmax = 20;
    double th_beta = 0;
    std::optional<double> th_mu, th_target;
    std::string th_range;
    cmd_thermo->add_option("--kind", th_kind, "Statistics kind")->required();
    cmd_thermo->add_option("--spectrum", th_spectrum, "eq1 (2-D anisotropic) or eq2 (1-D)")
        ->required()
        ->check(CLI::IsMember({"eq1", "eq2"}));
    cmd_thermo->add_option("--qmax", th_qmax, "Spectrum cutoff")->check(CLI::PositiveNumber);
    cmd_thermo->add_option("--nmax", th_nmax, "Particle-number truncation")->check(CLI::PositiveNumber);
    cmd_thermo->add_option("--beta", th_beta, "beta hbar omega")->required();
    auto* o_mu = cmd_thermo->add_option("--mu", th_mu, "mu / hbar omega");
    auto* o_target = cmd_thermo->add_option("--target-n", th_target, "Solve mu for this mean particle number");
    auto* o_range = cmd_thermo->add_option("--mu-range", th_range, "lo:hi:count sweep (CSV)");
    o_mu->excludes(o_target)->excludes(o_range);
    o_target->excludes(o_range);
    cmd_thermo->add_option("--format", format, "text|json|csv")->check(formats);

    std::vector<const char*> argv{"pstat"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out;
        const int code = app.exit(e, help_out, err);
        out << help_out.str();
        return code == 0 ? kOk : kUsage;
    }

    std::ostringstream buf;
    int status = kOk;
    try {
        if (cmd_part->parsed()) {
            const std::size_t max_parts = part_max > 0 ? part_max : static_cast<std::size_t>(std::max(part_n, 1));
            const auto list = part_kind.empty() ? gen_partitions(part_n, max_parts)
                                                : admitted_partitions(parse_kind(part_kind), part_n, max_parts);
            if (format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& lam : list) j.push_back(io::partition_json(lam));
                buf << j.dump() << "\n";
            } else if (format == "csv") {
                buf << "weight,length,parts\n";
                for (const auto& lam : list) {
                    buf << lam.weight() << "," << lam.length() << ",";
                    for (std::size_t i = 0; i < lam.length(); ++i) buf << (i ? " " : "") << lam[i];
                    buf << "\n";
                }
            } else {
                for (const auto& lam : list) buf << to_string(lam) << "\n";
            }
        } else if (cmd_schur->parsed()) {
            const auto lam = parse_partition(schur_shape);
            const auto point = detail::parse_point(schur_point);
            const auto tableau = schur_tableau(lam, point);
            std::optional<Rational> bialt;
            if (point.pairwise_distinct()) bialt = schur_bialternant(lam, point);
            if (format == "json") {
                nlohmann::json j;
                j["shape"] = io::partition_json(lam);
                j["point"] = io::rational_list(point.coords());
                j["tableau"] = to_string(tableau);
                j["bialternant"] = bialt ? nlohmann::json(to_string(*bialt)) : nlohmann::json(nullptr);
                buf << j.dump() << "\n";
            } else {
                buf << "tableau: " << to_string(tableau) << "\n";
                buf << "bialternant: " << (bialt ? to_string(*bialt) : std::string("n/a (repeated coordinates)"))
                    << "\n";
            }
        } else if (cmd_zn->parsed()) {
            const auto kind = parse_kind(zn_kind);
            if (!zn_exponents.empty()) {
                const QMonomialPoint point(detail::parse_int_list(zn_exponents));
                const std::size_t emax =
                    zn_emax.value_or(static_cast<std::size_t>(point.max_exponent()) * static_cast<std::size_t>(zn_n));
                const auto poly = z_canonical_qpoly(kind, point, zn_n, emax);
                if (format == "json") {
                    nlohmann::json j = nlohmann::json::array();
                    for (std::size_t t = 0; t <= emax; ++t) j.push_back(io::integer(poly[t]));
                    buf << j.dump() << "\n";
                } else {
                    buf << io::poly_text(poly, emax + 1) << "\n";
                }
            } else {
                if (zn_point.empty()) throw detail::UsageError("zn: one of --point or --exponents is required");
                const auto value = z_canonical(kind, detail::parse_point(zn_point), zn_n);
                if (format == "json")
                    buf << nlohmann::json(to_string(value)).dump() << "\n";
                else
                    buf << to_string(value) << "\n";
            }
        } else if (cmd_gpf->parsed()) {
            const auto kind = parse_kind(gpf_kind);
            const auto point = detail::parse_point(gpf_point);
            const auto series = gpf_closed ? gpf_closed_form(kind, point, gpf_nmax) : gpf_definition(kind, point, gpf_nmax);
            if (format == "json")
                buf << io::rational_list(series.coeffs()).dump() << "\n";
            else
                buf << io::series_text(series) << "\n";
        } else if (cmd_verify->parsed()) {
            if (!verify_all && verify_kind.empty()) throw detail::UsageError("verify: --kind or --all is required");
            const auto kinds = verify_all ? detail::verify_all_kinds() : std::vector{parse_kind(verify_kind)};
            std::vector<EvalPoint> points;
            if (!verify_point.empty())
                points.push_back(detail::parse_point(verify_point));
            else
                points = {prime_point(verify_m), random_distinct_point(verify_m, verify_seed)};
            for (const auto& k : kinds)
                if (!has_closed_form(k)) throw UnsupportedKind("verify: no closed form for " + to_string(k));

            std::vector<std::future<IdentityReport>> jobs;
            for (const auto& k : kinds)
                for (const auto& p : points)
                    jobs.push_back(std::async(std::launch::async, [k, p, n = verify_nmax] { return verify_identity(k, p, n); }));
            std::vector<IdentityReport> reports;
            for (auto& job : jobs) reports.push_back(job.get());

            bool all_equal = true;
            for (const auto& r : reports) all_equal = all_equal && r.equal;
            if (format == "text") {
                for (const auto& r : reports)
                    buf << to_string(r.kind) << " " << io::series_text(r.point.coords()) << " nmax=" << r.nmax << " "
                        << (r.equal ? "equal" : "MISMATCH at z^" + std::to_string(*r.first_mismatch)) << "\n";
            } else {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : reports) j.push_back(io::to_json(r));
                buf << j.dump(2) << "\n";
            }
            status = all_equal ? kOk : kFalsified;
        } else if (cmd_eq->parsed()) {
            const auto report = check_equivalence(eq_qmax);
            if (format == "csv") {
                buf << io::degeneracy_csv(report);
            } else if (format == "text") {
                buf << "qmax=" << report.qmax << " equal=" << (report.equal ? "true" : "false") << "\n";
                for (const auto& a : report.multiplicity_audit)
                    buf << "q^" << a.t << ": bose degeneracy " << a.bose << ", pairs " << a.pairs
                        << (a.match() ? "" : "  MISMATCH") << "\n";
            } else {
                buf << io::to_json(report).dump(2) << "\n";
            }
            status = report.equal ? kOk : kFalsified;
        } else if (cmd_thermo->parsed()) {
            const auto kind = parse_kind(th_kind);
            const auto spec = detail::parse_spectrum(th_spectrum, th_qmax);
            if (!(th_beta > 0)) throw detail::UsageError("thermo: --beta must be positive");
            const CanonicalTable table(kind, spec, th_nmax);
            if (!th_range.empty()) {
                buf << thermo_sweep_csv(kind, spec, th_nmax, {th_beta}, detail::parse_range(th_range));
            } else {
                if (!th_mu && !th_target) throw detail::UsageError("thermo: one of --mu, --target-n, --mu-range is required");
                const double mu = th_mu ? *th_mu : solve_mu(table, th_beta, *th_target);
                const auto r = table.evaluate(th_beta, mu);
                if (format == "json") {
                    auto j = io::to_json(r);
                    j["beta_hw"] = th_beta;
                    j["mu_over_hw"] = mu;
                    buf << j.dump() << "\n";
                } else if (format == "csv") {
                    buf << "beta_hw,mu_over_hw,meanN,meanE_over_hw,logZ\n"
                        << format_double(th_beta) << "," << format_double(mu) << "," << format_double(r.mean_n) << ","
                        << format_double(r.mean_e_over_hw) << "," << format_double(r.log_z) << "\n";
                } else {
                    buf << "mu_over_hw=" << format_double(mu) << " logZ=" << format_double(r.log_z)
                        << " meanN=" << format_double(r.mean_n) << " meanE_over_hw=" << format_double(r.mean_e_over_hw)
                        << "\n";
                }
            }
        }
    } catch (const DistinctnessViolation& e) {
        err << "error: " << e.what() << "\n";
        return kNumeric;
    } catch (const DivisionInconsistency& e) {
        err << "error: " << e.what() << "\n";
        return kNumeric;
    } catch (const TruncationTail& e) {
        err << "error: " << e.what() << "\n";
        return kNumeric;
    } catch (const BracketFailure& e) {
        err << "error: " << e.what() << "\n";
        return kNumeric;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) {
            err << "error: cannot open " << out_file << "\n";
            return kUsage;
        }
        f << buf.str();
    } else {
        out << buf.str();
    }
    return status;
}

}  // namespace pstat::cli
