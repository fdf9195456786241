#include "cli/commands.hpp"

#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/document.hpp"
#include "cli/format.hpp"
#include "lfca/conformance.hpp"
#include "lfca/contour.hpp"
#include "lfca/error.hpp"
#include "lfca/residues.hpp"
#include "lfca/series.hpp"

namespace lfca::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Flags {
    std::string in;
    std::optional<double> alpha;
    std::string convention = "canonical";
    std::optional<int> order;
    std::optional<int> k;
    double radius = 1.0;
    int nodes = 1024;
    std::string alphas = "0.3,0.5,0.7,1.0";
    int seeds = 100;
    double tol = 1e-9;
    std::string format = "json";
    std::string out;
    std::string at;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool csv(const Flags& f) { return f.format == "csv"; }

DerivativeConvention convention(const Flags& f) {
    return f.convention == "scaled" ? DerivativeConvention::ScaledClassical : DerivativeConvention::Canonical;
}

std::string read_file(const std::string& path) {
    if (path.empty()) throw UsageError("--in <file> is required");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParsedFunction load(const Flags& f) { return parse_series(read_file(f.in), f.alpha); }

FractalSeries load_series(const Flags& f) {
    ParsedFunction parsed = load(f);
    if (auto* s = std::get_if<FractalSeries>(&parsed)) return std::move(*s);
    throw Error(ErrorKind::Domain, "this command needs a single-series document (no \"poles\")");
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json complex_json(const FractalComplex& c) { return ordered_json{{"re", c.re}, {"im", c.im}}; }

std::string complex_output(const Flags& f, const FractalComplex& c) {
    if (csv(f)) return "re,im\n" + format_double(c.re) + "," + format_double(c.im) + "\n";
    return dump(complex_json(c));
}

std::string series_output(const Flags& f, const FractalSeries& s) {
    if (!csv(f)) return serialize_series(s);
    std::string out = "k,re,im\n";
    for (int k = s.kmin(); k <= s.kmax(); ++k) {
        const FractalComplex c = s.coeff(k);
        if (c.is_zero() && !s.is_zero()) continue;
        out += std::to_string(k) + "," + format_double(c.re) + "," + format_double(c.im) + "\n";
    }
    return out;
}

CircleContour circle_for(const FractalSeries& s, const Flags& f) { return CircleContour(s.center(), f.radius); }

// ---------------------------------------------------------------------------

std::string cmd_mleval(const Flags& f) {
    if (!f.alpha) throw UsageError("mleval needs --alpha");
    const Alpha alpha(*f.alpha);
    if (!f.at.empty()) {
        std::istringstream ss(f.at);
        double re = 0.0, im = 0.0;
        char comma = 0;
        if (!(ss >> re) || ((ss >> comma) && (comma != ',' || !(ss >> im)))) {
            throw UsageError("--at expects re or re,im");
        }
        return complex_output(f, mittag_leffler(alpha, {re, im}));
    }
    if (f.nodes < 1) throw UsageError("--nodes must be positive");
    const MittagLefflerKernel kernel(alpha);
    std::string out = csv(f) ? "theta,value_re,value_im\n" : "";
    ordered_json rows = ordered_json::array();
    for (int j = 0; j < f.nodes; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / f.nodes;
        const FractalComplex v = frac_polar(FractalPolar(f.radius, theta), kernel);
        if (csv(f)) {
            out += format_double(theta) + "," + format_double(v.re) + "," + format_double(v.im) + "\n";
        } else {
            rows.push_back(ordered_json{{"theta", theta}, {"re", v.re}, {"im", v.im}});
        }
    }
    if (csv(f)) return out;
    return dump(ordered_json{{"alpha", alpha.value()}, {"radius", f.radius}, {"sweep", std::move(rows)}});
}

std::string cmd_diff(const Flags& f) {
    const int times = f.order.value_or(1);
    if (times < 0) throw UsageError("--order must be non-negative");
    return series_output(f, series_derivative(load_series(f), convention(f), times));
}

std::string cmd_integrate(const Flags& f) {
    return series_output(f, series_primitive(load_series(f), convention(f)));
}

std::string cmd_coefficients(const Flags& f, bool laurent) {
    const FractalSeries s = load_series(f);
    if (!laurent && s.kmin() < 0) {
        throw Error(ErrorKind::Domain, "series has a principal part; use 'laurent'");
    }
    const CircleContour c = circle_for(s, f);
    std::vector<int> ks;
    if (f.k) {
        if (!laurent && *f.k < 0) throw Error(ErrorKind::Domain, "taylor coefficients need k >= 0");
        ks.push_back(*f.k);
    } else {
        for (int k = laurent ? s.kmin() : std::max(0, s.kmin()); k <= s.kmax(); ++k) ks.push_back(k);
    }
    std::string out = csv(f) ? "k,re,im\n" : "";
    ordered_json rows = ordered_json::array();
    for (int k : ks) {
        const FractalComplex a = cauchy_coefficient(s, c, k);
        if (csv(f)) {
            out += std::to_string(k) + "," + format_double(a.re) + "," + format_double(a.im) + "\n";
        } else {
            rows.push_back(ordered_json{{"k", k}, {"re", a.re}, {"im", a.im}});
        }
    }
    if (csv(f)) return out;
    return dump(ordered_json{{"coefficients", std::move(rows)}});
}

std::string cmd_residue(const Flags& f) {
    const ParsedFunction parsed = load(f);
    if (const auto* s = std::get_if<FractalSeries>(&parsed)) {
        const FractalComplex r =
            f.order ? residue_via_derivative(*s, s->center(), *f.order) : residue(*s, s->center());
        return complex_output(f, r);
    }
    const auto& m = std::get<MultiPoleFunction>(parsed);
    std::string out = csv(f) ? "x,y,order,re,im\n" : "";
    ordered_json rows = ordered_json::array();
    for (const auto& p : m.poles()) {
        const int order = -p.principal.kmin();
        const FractalComplex r =
            f.order ? residue_via_derivative(p.principal, p.location, *f.order) : residue(m, p.location);
        if (csv(f)) {
            out += format_double(p.location.x) + "," + format_double(p.location.y) + "," + std::to_string(order) +
                   "," + format_double(r.re) + "," + format_double(r.im) + "\n";
        } else {
            rows.push_back(ordered_json{{"location", ordered_json::array({p.location.x, p.location.y})},
                                        {"order", order},
                                        {"re", r.re},
                                        {"im", r.im}});
        }
    }
    if (csv(f)) return out;
    return dump(ordered_json{{"residues", std::move(rows)}});
}

std::string cmd_cauchy(const Flags& f) {
    const FractalSeries s = load_series(f);
    const CircleContour c = circle_for(s, f);
    const int n = f.order.value_or(0);
    if (n == 0) return complex_output(f, cauchy_point_value(s, c));
    return complex_output(f, derivative_via_contour(s, c, n, convention(f)));
}

std::string cmd_gauss(const Flags& f) {
    const FractalSeries s = load_series(f);
    return complex_output(f, gauss_mean_value(s, s.center(), f.radius));
}

std::string cmd_quad(const Flags& f) {
    const FractalSeries s = load_series(f);
    const CircleContour c = circle_for(s, f);
    if (csv(f)) {
        std::string out = "theta,value_re,value_im,gap\n";
        for (const auto& row : quadrature_sweep(s, c, f.nodes)) {
            out += format_double(row.theta) + "," + format_double(row.partial.re) + "," +
                   format_double(row.partial.im) + "," + format_double(row.gap) + "\n";
        }
        return out;
    }
    const QuadratureResult r = quadrature_diagnostic(s, c, f.nodes);
    return dump(ordered_json{{"nodes", f.nodes},
                             {"value", complex_json(r.value)},
                             {"contour", complex_json(r.contour_value)},
                             {"gap", r.gap}});
}

std::vector<double> parse_alphas(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--alphas expects a comma-separated list of numbers");
        }
    }
    if (out.empty()) throw UsageError("--alphas is empty");
    return out;
}

std::string cmd_verify(const Flags& f) {
    ConformanceOptions options;
    options.seeds = f.seeds;
    options.tolerance = f.tol;
    const ConformanceReport report = conformance_matrix(parse_alphas(f.alphas), options);
    if (csv(f)) {
        std::string out = "alpha,theorem,convention,status,max_residual,probe\n";
        for (const auto& e : report.entries) {
            out += format_double(e.alpha) + "," + std::string(theorem_name(e.theorem)) + "," +
                   std::string(convention_name(e.convention)) + "," + (e.pass ? "pass" : "fail") + "," +
                   format_double(e.max_residual) + "," + (e.probe ? format_double(*e.probe) : "") + "\n";
        }
        return out;
    }
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json j{{"alpha", e.alpha},
                       {"theorem", theorem_name(e.theorem)},
                       {"convention", convention_name(e.convention)},
                       {"status", e.pass ? "pass" : "fail"},
                       {"max_residual", e.max_residual}};
        if (e.probe) j["probe"] = *e.probe;
        entries.push_back(std::move(j));
    }
    return dump(ordered_json{{"alphas", report.alphas}, {"tolerance", options.tolerance}, {"entries", entries}});
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local fractional complex analysis: series calculus, contour integrals, residues"};
    app.name("lfca");
    app.require_subcommand(1);
    Flags flags;

    const auto add_io = [&](CLI::App* sub) {
        sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", flags.out, "Output file (default: standard output)");
    };
    const auto add_series = [&](CLI::App* sub) {
        sub->add_option("--in", flags.in, "Series document (JSON)")->required();
        sub->add_option("--alpha", flags.alpha, "Override the document's alpha");
        add_io(sub);
    };
    const auto add_convention = [&](CLI::App* sub) {
        sub->add_option("--convention", flags.convention, "Derivative convention")
            ->check(CLI::IsMember({"canonical", "scaled"}));
    };

    auto* mleval = app.add_subcommand("mleval", "Mittag-Leffler values: a point with --at, else a theta sweep");
    mleval->add_option("--alpha", flags.alpha, "Order in (0, 1]")->required();
    mleval->add_option("--at", flags.at, "Argument re,im");
    mleval->add_option("--radius", flags.radius, "Sweep radius");
    mleval->add_option("--nodes", flags.nodes, "Sweep nodes");
    add_io(mleval);

    auto* diff = app.add_subcommand("diff", "Term-wise local fractional derivative");
    add_series(diff);
    add_convention(diff);
    diff->add_option("--order", flags.order, "Number of derivatives (default 1)");

    auto* integrate = app.add_subcommand("integrate", "Primitive with zero constant");
    add_series(integrate);
    add_convention(integrate);

    auto* taylor = app.add_subcommand("taylor", "Taylor coefficients by contour extraction");
    auto* laurent = app.add_subcommand("laurent", "Laurent coefficients by contour extraction");
    for (auto* sub : {taylor, laurent}) {
        add_series(sub);
        sub->add_option("--k", flags.k, "Single coefficient index");
        sub->add_option("--radius", flags.radius, "Contour radius");
    }

    auto* res = app.add_subcommand("residue", "Generalized residue (direct, or derivative formula with --order)");
    add_series(res);
    res->add_option("--order", flags.order, "Use the derivative formula with this n");

    auto* cauchy = app.add_subcommand("cauchy", "Cauchy point value, or n-th derivative with --order");
    add_series(cauchy);
    add_convention(cauchy);
    cauchy->add_option("--order", flags.order, "Derivative order n");
    cauchy->add_option("--radius", flags.radius, "Contour radius");

    auto* gauss = app.add_subcommand("gauss", "Circle mean value");
    add_series(gauss);
    gauss->add_option("--radius", flags.radius, "Circle radius");

    auto* quad = app.add_subcommand("quad", "Discrete Stieltjes quadrature and its gap to the contour value");
    add_series(quad);
    quad->add_option("--radius", flags.radius, "Contour radius");
    quad->add_option("--nodes", flags.nodes, "Quadrature nodes (>= 8)");

    auto* verify = app.add_subcommand("verify", "Theorem conformance matrix");
    verify->add_option("--alphas", flags.alphas, "Comma-separated orders");
    verify->add_option("--seeds", flags.seeds, "Random inputs per check");
    verify->add_option("--tol", flags.tol, "Pass threshold on residuals");
    add_io(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "lfca: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string output;
    try {
        if (*mleval) output = cmd_mleval(flags);
        else if (*diff) output = cmd_diff(flags);
        else if (*integrate) output = cmd_integrate(flags);
        else if (*taylor) output = cmd_coefficients(flags, false);
        else if (*laurent) output = cmd_coefficients(flags, true);
        else if (*res) output = cmd_residue(flags);
        else if (*cauchy) output = cmd_cauchy(flags);
        else if (*gauss) output = cmd_gauss(flags);
        else if (*quad) output = cmd_quad(flags);
        else if (*verify) output = cmd_verify(flags);
    } catch (const UsageError& e) {
        err << "lfca: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DocumentError& e) {
        err << "lfca: " << flags.in << ": " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        err << "lfca: " << e.what() << "\n";
        return kExitDomain;
    }

    if (flags.out.empty()) {
        out << output;
        return kExitOk;
    }
    std::ofstream file(flags.out, std::ios::binary);
    if (!(file << output)) {
        err << "lfca: cannot write '" << flags.out << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace lfca::cli
