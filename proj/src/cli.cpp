#include "hypersum/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypersum/denominators.hpp"
#include "hypersum/dispersion.hpp"
#include "hypersum/expr.hpp"
#include "hypersum/format.hpp"
#include "hypersum/gcd_convergence.hpp"
#include "hypersum/json_io.hpp"
#include "hypersum/pipelines.hpp"

namespace hypersum {

namespace {

using nlohmann::json;

enum class Status { Ok, NoSolution };

struct Outcome {
    Status status = Status::Ok;
    json result = json::object();
    std::string text;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json_output = false;
    bool verbose = false;
    std::string file;
};

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

// Command-line arguments followed by the lines of --file, if any.
std::vector<std::string> gather(std::vector<std::string> args, const Options& opts) {
    if (!opts.file.empty()) {
        for (auto& line : read_lines(opts.file)) args.push_back(std::move(line));
    }
    return args;
}

void require_count(const std::vector<std::string>& args, std::size_t n, const std::string& what) {
    if (args.size() != n)
        throw InputError("expected " + std::to_string(n) + " expression(s) (" + what + "), got " +
                         std::to_string(args.size()));
}

Poly poly_arg(const std::string& text) { return parse_poly(text); }

RatFunc nonzero_ratio(const std::string& text) {
    RatFunc r = parse_ratfunc(text);
    if (r.is_zero()) throw InputError("the ratio must be nonzero");
    return r;
}

LinearRecurrence recurrence_args(const std::vector<std::string>& coeffs, const std::string& rhs) {
    if (coeffs.size() < 2) throw InputError("--coeffs needs at least two polynomials P0 ... PD");
    LinearRecurrence rec;
    for (const auto& c : coeffs) rec.coeffs.push_back(poly_arg(c));
    rec.rhs = poly_arg(rhs);
    validate(rec);
    return rec;
}

std::string indent_lines(const std::vector<Poly>& ps, const std::string& label) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ps.size(); ++i) os << "\n  " << label << i + 1 << " = " << format(ps[i]);
    return os.str();
}

Outcome cmd_dispersion(const std::vector<std::string>& args, const Options& opts) {
    require_count(args, 2, "A B");
    const Poly a = poly_arg(args[0]);
    const Poly b = poly_arg(args[1]);
    if (a.is_zero() || b.is_zero()) throw InputError("dispersion needs nonzero polynomials");
    const DispersionResult d = dispersion(a, b);

    Outcome out;
    out.result = to_json(d);
    std::ostringstream os;
    os << "dispersion = " << d.value;
    for (const auto& w : d.witnesses) os << "\n  k = " << w.shift << ": gcd = " << format(w.common_factor);
    if (opts.verbose && a.degree() > 0 && b.degree() > 0) {
        const Poly r = shifted_resultant(a, b);
        out.result["resultant"] = to_json(r);
        out.result["resultant"]["pretty"] = format(r, "h");
        os << "\nR(h) = " << format(r, "h");
    }
    out.text = os.str();
    return out;
}

Outcome cmd_denominator(const std::vector<std::string>& args, int order, const std::string& method,
                        const Options& opts) {
    require_count(args, 2, "P0 PD");
    const Poly p0 = poly_arg(args[0]);
    const Poly pd = poly_arg(args[1]);
    if (p0.is_zero() || pd.is_zero()) throw InputError("P0 and PD must be nonzero");
    if (order < 1) throw InputError("--order must be at least 1");

    Outcome out;
    std::ostringstream os;
    out.result["method"] = method;
    if (method == "explicit") {
        const Poly g = universal_denominator(p0, pd, order);
        const GcdLimit seq = gcd_limit(p0, pd, order);
        out.result["N"] = seq.k0;
        out.result["denominator"] = to_json(g);
        os << "N = " << seq.k0 << "\nG = " << format(g);
        if (opts.verbose) {
            out.result["gcd_sequence"] = to_json(seq);
            os << indent_lines(seq.trace, "G_");
        }
    } else if (method == "abramov") {
        const AbramovTrace t = abramov_reduce(p0, pd, order);
        out.result["N"] = t.N;
        out.result["denominator"] = to_json(t.denominator);
        os << "N = " << t.N << "\nG = " << format(t.denominator);
        if (opts.verbose) {
            out.result["trace"] = to_json(t);
            for (std::size_t i = 0; i < t.d_list.size(); ++i)
                os << "\n  d_" << t.N - static_cast<long>(i) << " = " << format(t.d_list[i]);
            os << "\n  A0 = " << format(t.A0) << "\n  B0 = " << format(t.B0);
        }
    } else {
        if (order != 1) throw InputError("--method gp applies to order-1 equations only");
        // Order-1 equation p1 y(n+1) + p0 y(n) = ..., read as a(n)/b(n) with a = p1, b = -p0.
        const GPTrace t = gp_reduce(pd, -p0);
        out.result["N"] = t.N;
        out.result["denominator"] = to_json(t.u);
        os << "N = " << t.N << "\nG = " << format(t.u);
        if (opts.verbose) {
            out.result["trace"] = to_json(t);
            os << indent_lines(t.delta_list, "delta_");
        }
    }
    out.text = os.str();
    return out;
}

Outcome cmd_gosper(const std::vector<std::string>& args, const Options& opts) {
    require_count(args, 1, "R");
    const RatFunc r = nonzero_ratio(args[0]);
    Outcome out;
    std::ostringstream os;
    const auto cert = gosper(r);
    if (!cert) {
        const GcdLimit seq = gcd_limit(r.den(), r.num(), 1);
        out.status = Status::NoSolution;
        out.result["k0"] = seq.k0;
        out.result["g"] = to_json(seq.limit);
        os << "no hypergeometric antidifference exists\nk0 = " << seq.k0 << "\ng = " << format(seq.limit);
        if (opts.verbose) {
            out.result["gcd_sequence"] = to_json(seq);
            os << indent_lines(seq.trace, "G_");
        }
        out.text = os.str();
        return out;
    }
    out.result["k0"] = cert->gcd_sequence.k0;
    out.result["g"] = to_json(cert->g_used);
    out.result["f"] = to_json(cert->f_used);
    out.result["y"] = to_json(cert->y);
    out.result["verified"] = verify_gosper(*cert);
    os << "k0 = " << cert->gcd_sequence.k0 << "\ng = " << format(cert->g_used) << "\nf = " << format(cert->f_used)
       << "\ny = " << format(cert->y);
    if (opts.verbose) {
        out.result["gcd_sequence"] = to_json(cert->gcd_sequence);
        os << indent_lines(cert->gcd_sequence.trace, "G_");
    }
    out.text = os.str();
    return out;
}

Outcome cmd_gp_rep(const std::vector<std::string>& args, const Options& opts) {
    require_count(args, 1, "R");
    const RatFunc r = nonzero_ratio(args[0]);
    const GosperRep rep = gp_rep_from_trace(r.num(), r.den());
    const RepCheck check = check_gp_rep(rep);

    Outcome out;
    out.result = to_json(rep);
    out.result["gp_check"] = to_json(check);
    std::ostringstream os;
    os << "c = " << format(rep.c) << "\na = " << format(rep.anum) << "\nb = " << format(rep.bden)
       << "\nGP conditions: " << (check.ok ? "hold" : "fail (" + check.failed_condition + ")");
    if (opts.verbose) {
        const GPTrace t = gp_reduce(r.num(), r.den());
        out.result["trace"] = to_json(t);
        os << indent_lines(t.delta_list, "delta_");
        const GosperRep abramov = gosper_rep_from_abramov(r.num(), r.den());
        const RepCheck ab_gosper = check_gosper_rep(abramov);
        const RepCheck ab_gp = check_gp_rep(abramov);
        out.result["abramov"] = to_json(abramov);
        out.result["abramov"]["gosper_check"] = to_json(ab_gosper);
        out.result["abramov"]["gp_check"] = to_json(ab_gp);
        os << "\nAbramov representation: c = " << format(abramov.c) << ", a = " << format(abramov.anum)
           << ", b = " << format(abramov.bden) << "\n  Gosper conditions: " << (ab_gosper.ok ? "hold" : "fail")
           << "\n  GP conditions: " << (ab_gp.ok ? "hold" : "fail (" + ab_gp.failed_condition + ")");
    }
    out.text = os.str();
    return out;
}

Outcome cmd_ratsolve(const std::vector<std::string>& coeffs, const std::string& rhs, const Options& opts) {
    const LinearRecurrence rec = recurrence_args(gather(coeffs, opts), rhs);
    const RationalSolveResult res = rational_solve(rec);

    Outcome out;
    out.status = res.has_solution() ? Status::Ok : Status::NoSolution;
    out.result["N"] = res.N;
    out.result["denominator"] = to_json(res.denominator);
    out.result["numerator_solutions"] = to_json(res.numerator_solutions);
    const auto particular = res.particular();
    out.result["particular"] = particular ? to_json(*particular) : json(nullptr);
    json hom = json::array();
    for (const auto& h : res.homogeneous()) hom.push_back(to_json(h));
    out.result["homogeneous"] = std::move(hom);

    std::ostringstream os;
    os << "N = " << res.N << "\nG = " << format(res.denominator);
    if (!particular) {
        os << "\nno rational solution";
    } else {
        os << "\nparticular: y = " << format(*particular);
        for (const auto& h : res.homogeneous()) os << "\nhomogeneous: " << format(h);
    }
    if (opts.verbose) {
        json cleared = json::array();
        for (const auto& c : res.cleared.coeffs) cleared.push_back(to_json(c));
        out.result["cleared"] = {{"coeffs", std::move(cleared)}, {"rhs", to_json(res.cleared.rhs)}};
        os << "\ncleared recurrence:";
        for (std::size_t m = 0; m < res.cleared.coeffs.size(); ++m)
            os << "\n  q_" << m << " = " << format(res.cleared.coeffs[m]);
        os << "\n  rhs = " << format(res.cleared.rhs) << "\n" << format(res.numerator_solutions);
    }
    out.text = os.str();
    return out;
}

Outcome verdict(bool valid) {
    Outcome out;
    out.status = valid ? Status::Ok : Status::NoSolution;
    out.result["valid"] = valid;
    out.text = valid ? "valid" : "invalid";
    return out;
}

Outcome cmd_verify_gosper(const std::vector<std::string>& args, const Options& opts) {
    const auto all = gather(args, opts);
    require_count(all, 2, "R Y");
    return verdict(verify_gosper(nonzero_ratio(all[0]), parse_ratfunc(all[1])));
}

Outcome cmd_verify_rational(const std::vector<std::string>& coeffs, const std::string& rhs, const std::string& y,
                            const Options& opts) {
    const LinearRecurrence rec = recurrence_args(gather(coeffs, opts), rhs);
    return verdict(verify_rational(rec, parse_ratfunc(y)));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Universal denominators, Gosper summation and rational solutions of linear recurrences",
                 "hypersum"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_flag("--json", opts.json_output, "Emit a JSON object instead of text");
    app.add_flag("-v,--verbose", opts.verbose, "Include intermediate sequences and traces");
    app.add_option("--file", opts.file, "Read expressions from FILE, one per line");

    std::vector<std::string> pos;
    std::vector<std::string> coeffs;
    std::string rhs = "0";
    std::string y_expr;
    int order = 1;
    std::string method = "explicit";
    std::function<Outcome()> action;
    std::string command;

    auto* disp = app.add_subcommand("dispersion", "Dispersion dis(A, B) of two polynomials");
    disp->add_option("exprs", pos, "A B");
    disp->callback([&] {
        command = "dispersion";
        action = [&] { return cmd_dispersion(gather(pos, opts), opts); };
    });

    auto* den = app.add_subcommand("denominator", "Universal denominator from P0 and PD of an order-D recurrence");
    den->add_option("--order", order, "Recurrence order D")->required();
    den->add_option("--method", method, "explicit | abramov | gp")
        ->check(CLI::IsMember({"explicit", "abramov", "gp"}));
    den->add_option("exprs", pos, "P0 PD");
    den->callback([&] {
        command = "denominator";
        action = [&] { return cmd_denominator(gather(pos, opts), order, method, opts); };
    });

    auto* gos = app.add_subcommand("gosper", "Gosper's algorithm for a term with ratio R = t(n+1)/t(n)");
    gos->add_option("ratio", pos, "R");
    gos->callback([&] {
        command = "gosper";
        action = [&] { return cmd_gosper(gather(pos, opts), opts); };
    });

    auto* gp = app.add_subcommand("gp-rep", "Gosper-Petkovsek representation of a rational function R");
    gp->add_option("ratio", pos, "R");
    gp->callback([&] {
        command = "gp-rep";
        action = [&] { return cmd_gp_rep(gather(pos, opts), opts); };
    });

    auto* rs = app.add_subcommand("ratsolve", "Rational solutions of sum P_m(n) y(n+m) = P(n)");
    rs->add_option("--coeffs", coeffs, "P0 ... PD");
    rs->add_option("--rhs", rhs, "Right-hand side P (default 0)");
    rs->callback([&] {
        command = "ratsolve";
        action = [&] { return cmd_ratsolve(coeffs, rhs, opts); };
    });

    auto* ver = app.add_subcommand("verify", "Check a certificate");
    ver->require_subcommand(1);
    auto* vg = ver->add_subcommand("gosper", "Check R(n) Y(n+1) - Y(n) = 1");
    vg->add_option("exprs", pos, "R Y");
    vg->callback([&] {
        command = "verify gosper";
        action = [&] { return cmd_verify_gosper(pos, opts); };
    });
    auto* vr = ver->add_subcommand("rational", "Check that Y solves sum P_m(n) y(n+m) = P(n)");
    vr->add_option("--coeffs", coeffs, "P0 ... PD");
    vr->add_option("--rhs", rhs, "Right-hand side P (default 0)");
    vr->add_option("y", y_expr, "Y")->required();
    vr->callback([&] {
        command = "verify rational";
        action = [&] { return cmd_verify_rational(coeffs, rhs, y_expr, opts); };
    });

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
        return kExitInputError;
    }

    auto report_error = [&](const std::string& message) {
        err << "error: " << message << "\n";
        if (opts.json_output)
            out << json{{"status", "error"}, {"command", command}, {"result", {{"message", message}}}}.dump(2)
                << "\n";
        return kExitInputError;
    };

    try {
        const Outcome outcome = action();
        const bool ok = outcome.status == Status::Ok;
        if (opts.json_output) {
            out << json{{"status", ok ? "ok" : "no_solution"}, {"command", command}, {"result", outcome.result}}.dump(2)
                << "\n";
        } else {
            out << outcome.text << "\n";
        }
        return ok ? kExitOk : kExitNoSolution;
    } catch (const ParseError& e) {
        return report_error(std::string("parse error: ") + e.what());
    } catch (const EvalError& e) {
        return report_error(e.what());
    } catch (const InputError& e) {
        return report_error(e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(e.what());
    } catch (const std::domain_error& e) {
        return report_error(e.what());
    } catch (const std::exception& e) {
        return report_error(std::string("internal error: ") + e.what());
    }
}

}  // namespace hypersum
