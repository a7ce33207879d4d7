#include "cli.hpp"

#include "formred/centroid.hpp"
#include "formred/corpus.hpp"
#include "formred/errors.hpp"
#include "formred/forms.hpp"
#include "formred/julia.hpp"
#include "formred/reduce.hpp"
#include "formred/report.hpp"
#include "formred/roots.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace formred::cli {

namespace {

using nlohmann::json;

struct Settings {
    std::string form_text;
    std::string method;
    std::string format;
    double tol = 1e-10;
    std::optional<int> precision;
    std::string input;
    std::uint64_t seed = 1;
    int count = 10;
    int min_degree = 4;
    int max_degree = 8;
    std::int64_t bound = 10000;
    std::int64_t scramble = 0;
    unsigned threads = 0;
};

int log_level() {
    const char* value = std::getenv("FORMRED_LOG");
    if (value == nullptr || *value == '\0') return 0;
    const std::string v(value);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        return 1;
    }
}

void log(std::ostream& err, int level, const std::string& message) {
    if (log_level() >= level) err << "[formred] " << message << '\n';
}

std::string error_tag(const std::exception& e) {
    if (dynamic_cast<const RealRootDetected*>(&e)) return "real_root_detected";
    if (dynamic_cast<const UnpairedRoot*>(&e)) return "unpaired_root";
    if (dynamic_cast<const ConvergenceFailure*>(&e)) return "convergence_failure";
    if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
    if (dynamic_cast<const NotPositiveDefinite*>(&e)) return "not_positive_definite";
    if (dynamic_cast<const DegenerateCombination*>(&e)) return "degenerate_combination";
    if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid_input";
    return "error";
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const RealRootDetected*>(&e)) return kRealRoot;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e)) return kUsage;
    return kOptimizer;
}

int digits_for(const Settings& s, bool text) {
    return s.precision.value_or(text ? 12 : 30);
}

ReduceOptions reduce_options(const Settings& s) {
    ReduceOptions options;
    options.julia.tol = s.tol;
    return options;
}

std::vector<Method> methods_for(const std::string& name) {
    if (name == "both") return {Method::centroid, Method::julia};
    return {parse_method(name)};
}

BinaryForm form_from(const Settings& s) {
    if (s.form_text.empty()) throw std::invalid_argument("no form given; use --coeffs or a positional form");
    return parse_form(s.form_text);
}

std::string point_text(const PointH2& p, int digits) {
    return "(" + decimal_string(p.x, digits) + ", " + decimal_string(p.y, digits) + ")";
}

json point_json(const PointH2& p, int digits) {
    return {{"x", decimal_string(p.x, digits)}, {"y", decimal_string(p.y, digits)}};
}

json boundary_json(const BoundaryPoint2& b, int digits) {
    if (b.is_infinity()) return "inf";
    return decimal_string(*b.value, digits);
}

json zero_json(const ZeroPointResult& z, Method method, int digits) {
    json out = point_json(z.point, digits);
    out["root_residual"] = z.root_residual;
    if (method == Method::centroid) {
        if (z.exact) {
            out["x"] = rational_decimal_string(z.exact->t, digits);
            out["y"] = sqrt_decimal_string(z.exact->u_squared, digits);
            out["t_exact"] = z.exact->t.get_str();
            out["u_squared_exact"] = z.exact->u_squared.get_str();
            out["description"] = describe_exact_center(*z.exact);
        }
        out["center_residuals"] = {z.center_residuals.first, z.center_residuals.second};
    } else {
        out["gradient_norm"] = z.gradient_norm;
        out["iterations"] = z.iterations;
    }
    return out;
}

std::string report_text(const ReductionReport& r, int digits) {
    std::ostringstream out;
    out << "method       " << to_string(r.method) << '\n'
        << "input        " << to_polynomial_string(r.input) << '\n'
        << "zero point   " << point_text(r.zero_point, digits) << '\n';
    if (r.exact_zero) out << "             " << describe_exact_center(*r.exact_zero) << '\n';
    out << "matrix       " << to_string(r.matrix) << '\n'
        << "reduced      " << to_polynomial_string(r.reduced) << '\n'
        << "reduced zero " << point_text(r.reduced_zero, digits) << '\n'
        << "height       " << r.height_before.get_str() << " -> " << r.height_after.get_str() << '\n';
    if (r.method == Method::julia)
        out << "gradient     " << r.diagnostics.gradient_norm << " (" << r.diagnostics.iterations << " iterations)\n";
    return out.str();
}

// ---- single-form commands ---------------------------------------------------

int cmd_reduce(const Settings& s, std::ostream& out, std::ostream& err) {
    const BinaryForm form = form_from(s);
    const bool text = s.format == "text";
    const std::string method = s.method.empty() ? "centroid" : s.method;
    if (method == "both") {
        const ComparisonReport report = compare_methods(form, reduce_options(s));
        log(err, 1, "compare: zero_gap=" + std::to_string(report.zero_gap));
        if (text) {
            out << report_text(report.centroid_report, digits_for(s, true)) << '\n'
                << report_text(report.julia_report, digits_for(s, true)) << '\n'
                << "zero gap     " << decimal_string(report.zero_gap, digits_for(s, true)) << '\n'
                << "same matrix  " << (report.same_matrix ? "yes" : "no") << '\n'
                << "same form    " << (report.same_reduced_form ? "yes" : "no") << '\n';
        } else {
            out << to_json(report, digits_for(s, false)).dump(2) << '\n';
        }
        return kOk;
    }
    const ReductionReport report = reduce_form(form, parse_method(method), reduce_options(s));
    log(err, 1,
        "reduce: method=" + method + " passes=" + std::to_string(report.diagnostics.passes) +
            " exact=" + (report.diagnostics.exact ? "yes" : "no"));
    if (text)
        out << report_text(report, digits_for(s, true));
    else
        out << to_json(report, digits_for(s, false)).dump(2) << '\n';
    return kOk;
}

int cmd_zero(const Settings& s, const std::string& default_method, const std::string& default_format,
             std::ostream& out, std::ostream& err) {
    const BinaryForm form = form_from(s);
    const std::vector<Method> methods = methods_for(s.method.empty() ? default_method : s.method);
    const bool text = (s.format.empty() ? default_format : s.format) == "text";
    const int digits = digits_for(s, text);
    const ReduceOptions options = reduce_options(s);

    std::vector<ZeroPointResult> zeros;
    for (Method m : methods) {
        zeros.push_back(zero_point(form, m, options));
        log(err, 1, std::string("zero: method=") + std::string(to_string(m)) + " residual=" +
                        std::to_string(zeros.back().root_residual));
    }
    const bool has_gap = zeros.size() == 2;
    const double gap = has_gap ? dist_h2(zeros[0].point, zeros[1].point) : 0.0;

    if (text) {
        for (std::size_t i = 0; i < methods.size(); ++i) {
            const ZeroPointResult& z = zeros[i];
            if (methods[i] == Method::centroid) {
                if (z.exact)
                    out << describe_exact_center(*z.exact) << '\n';
                else
                    out << "t = " << decimal_string(z.point.x, digits) << ", u = " << decimal_string(z.point.y, digits)
                        << '\n';
                if (methods.size() > 1) out << "centroid " << point_text(z.point, digits) << '\n';
            } else {
                out << "julia " << point_text(z.point, digits) << '\n'
                    << "gradient_norm " << z.gradient_norm << '\n'
                    << "iterations " << z.iterations << '\n';
            }
        }
        if (has_gap) out << "zero_gap " << decimal_string(gap, digits) << '\n';
        return kOk;
    }
    json report{{"schema_version", kSchemaVersion}, {"form", to_json(form)}};
    for (std::size_t i = 0; i < methods.size(); ++i)
        report[std::string(to_string(methods[i]))] = zero_json(zeros[i], methods[i], digits);
    if (has_gap) report["zero_gap"] = gap;
    out << report.dump(2) << '\n';
    return kOk;
}

int cmd_compare(const Settings& s, std::ostream& out, std::ostream& err) {
    Settings both = s;
    both.method = "both";
    return cmd_reduce(both, out, err);
}

int cmd_geodata(const Settings& s, std::ostream& out) {
    const BinaryForm form = form_from(s);
    const int digits = digits_for(s, false);
    const ReduceOptions options = reduce_options(s);
    const RootSet roots = root_set(form);
    const ZeroPointResult centroid = zero_point(form, Method::centroid, options);
    const ZeroPointResult julia = zero_point(form, Method::julia, options);
    const Method method = parse_method(s.method.empty() || s.method == "both" ? "centroid" : s.method);
    const ReductionReport report = reduce_form(form, method, options);

    json root_list = json::array();
    json geodesics = json::array();
    for (std::size_t i = 0; i < roots.pairs.size(); ++i) {
        root_list.push_back(point_json(roots.pairs[i], digits));
        const auto [from, to] = geodesic_endpoints(centroid.point, roots.pairs[i]);
        geodesics.push_back({{"root", i}, {"through", "centroid"}, {"endpoints", {boundary_json(from, digits),
                                                                                   boundary_json(to, digits)}}});
    }
    json path = json::array();
    for (const auto& p : report.path) path.push_back(point_json(p, digits));
    out << json{{"schema_version", kSchemaVersion},
                {"form", to_json(form)},
                {"degree", form.degree()},
                {"roots", root_list},
                {"zeros", {{"centroid", point_json(centroid.point, digits)}, {"julia", point_json(julia.point, digits)}}},
                {"geodesics", geodesics},
                {"reduction",
                 {{"method", std::string(to_string(method))},
                  {"matrix", to_json(report.matrix)},
                  {"path", path},
                  {"ends_in_fundamental_domain", in_fundamental_domain(report.path.back(), 1e-9)}}}}
               .dump(2)
        << '\n';
    return kOk;
}

int cmd_corpus(const Settings& s, std::ostream& out) {
    Rng rng(s.seed);
    for (int i = 0; i < s.count; ++i) {
        BinaryForm form = random_totally_complex_form(rng, s.min_degree, s.max_degree, s.bound);
        if (s.scramble > 0) form = transform(form, random_unimodular(rng, s.scramble));
        out << "f" << i << ',' << serialize(form) << '\n';
    }
    return kOk;
}

// ---- batch ------------------------------------------------------------------

struct BatchResult {
    json record;
    std::vector<std::string> csv;
    std::string tag;  ///< empty on success
    std::optional<Rational> height_before;
    std::optional<Rational> height_after;
};

const std::vector<std::string> kCsvHeader{"id",
                                          "status",
                                          "degree",
                                          "height_before",
                                          "centroid_matrix",
                                          "centroid_height_after",
                                          "julia_matrix",
                                          "julia_height_after",
                                          "zero_gap",
                                          "same_reduced_form",
                                          "error"};

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string quoted = "\"";
    for (char c : v) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line += ',';
        line += csv_field(fields[i]);
    }
    return line;
}

BatchResult process_line(const std::string& line, const std::vector<Method>& methods, const Settings& s) {
    BatchResult result;
    result.csv.assign(kCsvHeader.size(), "");
    const auto comma = line.find(',');
    const std::string id = line.substr(0, comma);
    result.record = {{"schema_version", kSchemaVersion}, {"id", id}};
    result.csv[0] = id;
    try {
        if (comma == std::string::npos) throw ParseError("expected 'id,coefficients'");
        const BinaryForm form = parse_form(line.substr(comma + 1));
        result.record["form"] = to_json(form);
        result.csv[2] = std::to_string(form.degree());
        result.csv[3] = height(form).get_str();
        const ReduceOptions options = reduce_options(s);
        const int digits = digits_for(s, false);
        std::vector<ReductionReport> reports;
        for (Method m : methods) reports.push_back(reduce_form(form, m, options));
        for (const auto& r : reports) {
            const std::string name(to_string(r.method));
            result.record[name] = to_json(r, digits);
            const std::size_t col = r.method == Method::centroid ? 4 : 6;
            result.csv[col] = to_string(r.matrix);
            result.csv[col + 1] = r.height_after.get_str();
        }
        if (reports.size() == 2) {
            const double gap = dist_h2(reports[0].zero_point, reports[1].zero_point);
            const bool same = reports[0].reduced == reports[1].reduced;
            result.record["zero_gap"] = gap;
            result.record["same_matrix"] = reports[0].matrix.projectively_equal(reports[1].matrix);
            result.record["same_reduced_form"] = same;
            result.csv[8] = decimal_string(gap, 17);
            result.csv[9] = same ? "true" : "false";
        }
        result.height_before = reports.front().height_before;
        result.height_after = reports.front().height_after;
        result.record["status"] = "ok";
        result.csv[1] = "ok";
    } catch (const std::exception& e) {
        result.tag = error_tag(e);
        result.record["status"] = "error";
        result.record["error"] = result.tag;
        result.record["message"] = e.what();
        result.csv[1] = "error";
        result.csv[10] = result.tag;
    }
    return result;
}

int cmd_batch(const Settings& s, std::ostream& out, std::ostream& err) {
    const std::string format = s.format.empty() ? "jsonl" : s.format;
    if (format != "jsonl" && format != "csv") throw std::invalid_argument("batch supports --format jsonl or csv");
    const std::vector<Method> methods = methods_for(s.method.empty() ? "both" : s.method);

    std::ifstream file;
    if (s.input != "-") {
        file.open(s.input);
        if (!file) {
            err << "error: cannot read " << s.input << '\n';
            return kUsage;
        }
    }
    std::istream& in = s.input == "-" ? std::cin : file;
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back(line);
    }

    std::vector<BatchResult> results(lines.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) results[i] = process_line(lines[i], methods, s);
    };
    const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t count = std::min<std::size_t>(s.threads > 0 ? s.threads : hardware, lines.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    log(err, 1, "batch: " + std::to_string(lines.size()) + " records on " + std::to_string(count) + " threads");

    std::map<std::string, int> errors;
    int ok = 0, decreased = 0, unchanged = 0, increased = 0;
    double log_ratio_sum = 0.0;
    if (format == "csv") out << csv_line(kCsvHeader) << '\n';
    for (const auto& r : results) {
        if (format == "csv")
            out << csv_line(r.csv) << '\n';
        else
            out << r.record.dump() << '\n';
        if (!r.tag.empty()) {
            ++errors[r.tag];
            continue;
        }
        ++ok;
        const int order = cmp(*r.height_after, *r.height_before);
        (order < 0 ? decreased : order == 0 ? unchanged : increased)++;
        log_ratio_sum += std::log10(r.height_after->get_d()) - std::log10(r.height_before->get_d());
    }
    const double mean_log_ratio = ok > 0 ? log_ratio_sum / ok : 0.0;
    if (format == "csv") {
        out << "# summary records=" << results.size() << " ok=" << ok << " errors=" << results.size() - ok
            << " height_decreased=" << decreased << " height_unchanged=" << unchanged
            << " height_increased=" << increased << " mean_log10_height_ratio=" << mean_log_ratio << '\n';
    } else {
        out << json{{"summary",
                     {{"schema_version", kSchemaVersion},
                      {"records", results.size()},
                      {"ok", ok},
                      {"errors", errors.empty() ? json::object() : json(errors)},
                      {"height_decreased", decreased},
                      {"height_unchanged", unchanged},
                      {"height_increased", increased},
                      {"mean_log10_height_ratio", mean_log_ratio}}}}
                   .dump()
            << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reduction of real binary forms with no real roots under SL2(Z)", "formred"};
    app.require_subcommand(1);
    Settings s;

    const auto add_form = [&s](CLI::App* cmd) {
        cmd->add_option("--coeffs", s.form_text,
                        "Descending coefficients, e.g. 1,-24,306 (integers or p/q), or a polynomial in X, Z");
        cmd->add_option("form", s.form_text, "Form as a coefficient list or polynomial");
    };
    const auto add_numeric = [&s](CLI::App* cmd) {
        cmd->add_option("--tol", s.tol, "Gradient-norm tolerance of the Julia minimization")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--precision", s.precision, "Significant digits of printed points")
            ->check(CLI::Range(1, 50));
    };
    const auto methods = CLI::IsMember({"centroid", "center", "julia", "both"});

    auto* reduce = app.add_subcommand("reduce", "Reduce a form (default method centroid)");
    add_form(reduce);
    add_numeric(reduce);
    reduce->add_option("--method", s.method, "centroid, julia or both")->check(methods);
    reduce->add_option("--format", s.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));

    auto* zero = app.add_subcommand("zero", "Zero points of a form (default both methods)");
    add_form(zero);
    add_numeric(zero);
    zero->add_option("--method", s.method, "centroid, julia or both")->check(methods);
    zero->add_option("--format", s.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));

    auto* center = app.add_subcommand("center", "Hyperbolic center of mass of the roots");
    add_form(center);
    add_numeric(center);
    center->add_option("--format", s.format, "text (default) or json")->check(CLI::IsMember({"json", "text"}));

    auto* julia = app.add_subcommand("julia", "Julia point of a form");
    add_form(julia);
    add_numeric(julia);
    julia->add_option("--format", s.format, "text (default) or json")->check(CLI::IsMember({"json", "text"}));

    auto* compare = app.add_subcommand("compare", "Reduce with both methods and compare");
    add_form(compare);
    add_numeric(compare);
    compare->add_option("--format", s.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));

    auto* batch = app.add_subcommand("batch", "Reduce every line 'id,coefficients' of a file");
    batch->add_option("--input", s.input, "Input file, '-' for stdin")->required();
    batch->add_option("--format", s.format, "jsonl (default) or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    batch->add_option("--method", s.method, "centroid, julia or both (default)")->check(methods);
    batch->add_option("--threads", s.threads, "Worker threads (default: hardware concurrency)");
    add_numeric(batch);

    auto* geodata = app.add_subcommand("geodata", "Roots, zero points and reduction path as JSON for plotting");
    add_form(geodata);
    add_numeric(geodata);
    geodata->add_option("--method", s.method, "Method whose reduction path is emitted (default centroid)")
        ->check(methods);

    auto* corpus = app.add_subcommand("corpus", "Seeded random totally complex integer forms, one 'id,coeffs' per line");
    corpus->add_option("--seed", s.seed, "PRNG seed");
    corpus->add_option("--count", s.count, "Number of forms")->check(CLI::NonNegativeNumber);
    corpus->add_option("--min-degree", s.min_degree, "Smallest degree")->check(CLI::Range(2, 64));
    corpus->add_option("--max-degree", s.max_degree, "Largest degree")->check(CLI::Range(2, 64));
    corpus->add_option("--bound", s.bound, "Coefficient bound")->check(CLI::PositiveNumber);
    corpus->add_option("--scramble", s.scramble, "Apply a random SL2(Z) matrix with entries up to this bound");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        for (auto* sub : app.get_subcommands()) out << sub->help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    if (s.method == "center") s.method = "centroid";

    try {
        if (reduce->parsed()) return cmd_reduce(s, out, err);
        if (zero->parsed()) return cmd_zero(s, "both", "json", out, err);
        if (center->parsed()) return cmd_zero(s, "centroid", "text", out, err);
        if (julia->parsed()) return cmd_zero(s, "julia", "text", out, err);
        if (compare->parsed()) return cmd_compare(s, out, err);
        if (batch->parsed()) return cmd_batch(s, out, err);
        if (geodata->parsed()) return cmd_geodata(s, out);
        if (corpus->parsed()) return cmd_corpus(s, out);
    } catch (const std::exception& e) {
        err << "error (" << error_tag(e) << "): " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kUsage;
}

}  // namespace formred::cli
