#include "toric/cli.hpp"

#include "toric/io.hpp"
#include "toric/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace toric::cli {

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string polytope_path;
    long long q = 0;
    std::string field_spec;
    std::string out_path;
    std::string format = "json";
    Guards guards;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_format) {
    cmd->add_option("--polytope", c.polytope_path, "polytope JSON file")->required();
    cmd->add_option("--q", c.q, "field size q (prime power)");
    cmd->add_option("--field", c.field_spec, "field spec p=<int>,m=<int>");
    cmd->add_option("--out", c.out_path, "output file (default: stdout)");
    if (with_format)
        cmd->add_option("--format", c.format, "output format: json, text, or csv")
            ->check(CLI::IsMember({"json", "text", "csv"}));
    cmd->add_option("--max-points", c.guards.max_lattice_points, "lattice-point enumeration guard");
    cmd->add_option("--max-torus", c.guards.max_torus_points, "torus size guard");
    cmd->add_option("--max-box-tests", c.guards.max_box_tests, "upper-bound search guard");
    cmd->add_option("--max-field", c.guards.max_field_size, "field size guard");
}

GaloisField resolve_field(const CommonOpts& c) {
    if ((c.q != 0) == !c.field_spec.empty())
        throw input_error("exactly one of --q and --field is required");
    if (c.q != 0) return io::parse_field_spec("q=" + std::to_string(c.q), c.guards);
    return io::parse_field_spec(c.field_spec, c.guards);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw io_error("cannot open output file: " + out_path);
    file << text;
    file.flush();
    if (!file) throw io_error("failed writing output file: " + out_path);
}

int cmd_params(const CommonOpts& c, std::ostream& out) {
    auto polytope = io::load_polytope(c.polytope_path);
    GaloisField field = resolve_field(c);
    const long long q = field.q();
    auto points = lattice_points(polytope, c.guards);
    auto classes = reduced_set(points, q);
    const long long n = torus_size(field, polytope.dim(), c.guards);
    const long long k = static_cast<long long>(classes.size());
    bool injective = std::all_of(classes.begin(), classes.end(),
                                 [](const ReducedExponent& cls) { return cls.sources.size() == 1; });
    std::optional<Int> pick;
    if (polytope.dim() == 2 && polytope.affine_dim() == 2) pick = pick_count(polytope);

    std::ostringstream text;
    if (c.format == "json") {
        json j;
        j["q"] = q;
        j["r"] = polytope.dim();
        j["n"] = n;
        j["k"] = k;
        j["points"] = points.size();
        j["injective"] = injective;
        if (pick) j["pick"] = static_cast<long long>(*pick);
        text << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        text << "q,r,n,k,points,injective,pick\n";
        text << q << ',' << polytope.dim() << ',' << n << ',' << k << ',' << points.size() << ','
             << (injective ? "true" : "false") << ',';
        if (pick) text << *pick;
        text << "\n";
    } else {
        text << "q = " << q << "\nr = " << polytope.dim() << "\nn = " << n << "\nk = " << k
             << "\npoints = " << points.size() << "\ninjective = " << (injective ? "true" : "false")
             << "\n";
        if (pick) text << "pick = " << *pick << "\n";
    }
    emit(text.str(), c.out_path, out);
    return 0;
}

int cmd_genmat(const CommonOpts& c, const std::string& entry_format, std::ostream& out) {
    if (entry_format != "enc" && entry_format != "log")
        throw input_error("genmat: --format must be enc or log");
    auto polytope = io::load_polytope(c.polytope_path);
    GaloisField field = resolve_field(c);
    auto code = build_code(polytope, field, c.guards);
    emit(io::genmat_text(code, entry_format == "log"), c.out_path, out);
    return 0;
}

int cmd_distance(const CommonOpts& c, bool want_exact, bool want_bounds, long long limit, int jobs,
                 std::ostream& out) {
    auto polytope = io::load_polytope(c.polytope_path);
    GaloisField field = resolve_field(c);
    const long long q = field.q();
    Guards guards = c.guards;
    if (limit > 0) guards.max_messages = limit;
    if (!want_exact && !want_bounds) want_bounds = true;

    DistanceReport report;
    report.n = torus_size(field, polytope.dim(), guards);
    report.k = static_cast<long long>(reduced_set(polytope, q, guards).size());
    if (want_bounds) {
        auto lower = intersection_lower_bound(polytope, q, guards);
        report.lower_bound = lower.lower_bound;
        report.trivial_lower = lower.trivial_lower;
        report.lower_levels = std::move(lower.lower_levels);
        auto upper = box_upper_bound(polytope, q, guards);
        report.upper_bound = upper.bound;
        report.upper_witness = upper.witness;
    }
    if (want_exact) {
        auto code = build_code(polytope, field, guards);
        report.exact = exact_min_distance(code, guards, jobs);
    }

    std::ostringstream text;
    if (c.format == "json") {
        text << io::report_to_json(report).dump(2) << "\n";
    } else if (c.format == "csv") {
        text << "n,k,exact,lower_bound,upper_bound,trivial_lower\n";
        text << report.n << ',' << report.k << ',';
        if (report.exact) text << *report.exact;
        text << ',';
        if (report.lower_bound) text << *report.lower_bound;
        text << ',';
        if (report.upper_bound) text << *report.upper_bound;
        text << ',' << (report.trivial_lower ? "true" : "false") << "\n";
    } else {
        text << "n = " << report.n << "\nk = " << report.k << "\n";
        if (report.lower_bound) {
            text << "lower bound (raw) = " << *report.lower_bound << "\n";
            text << "lower bound (effective) = " << std::max(1LL, *report.lower_bound) << "\n";
        }
        if (report.upper_bound) text << "upper bound = " << *report.upper_bound << "\n";
        if (report.exact) text << "exact = " << *report.exact << "\n";
        if (report.trivial_lower) text << "note: intersection bound is trivial for this polytope\n";
    }
    emit(text.str(), c.out_path, out);
    return 0;
}

int cmd_verify(const std::string& case_name, int jobs, const std::string& format,
               const std::string& out_path, const Guards& guards, std::ostream& out) {
    verify::Options opt;
    opt.guards = guards;
    opt.jobs = jobs;
    auto results = verify::run_case(case_name, opt);
    std::ostringstream text;
    bool all_pass = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"criterion", r.criterion},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        text << arr.dump(2) << "\n";
    } else if (format == "csv") {
        text << "criterion,name,pass,detail\n";
        for (const auto& r : results) {
            text << r.criterion << ",\"" << r.name << "\"," << (r.pass ? "true" : "false") << ",\""
                 << r.detail << "\"\n";
            all_pass = all_pass && r.pass;
        }
    } else {
        for (const auto& r : results) {
            text << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.criterion << " (" << r.name
                 << "): " << r.detail << "\n";
            all_pass = all_pass && r.pass;
        }
        text << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    }
    emit(text.str(), out_path, out);
    return all_pass ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"toric evaluation codes from lattice polytopes"};
    app.require_subcommand(1);

    CommonOpts params_opts;
    auto* params = app.add_subcommand("params", "length, dimension, and injectivity report");
    add_common(params, params_opts, true);

    CommonOpts genmat_opts;
    std::string genmat_format = "enc";
    auto* genmat = app.add_subcommand(
        "genmat",
        "write the generator matrix; entries are integer encodings whose base-p digits are "
        "the coefficients of the residue polynomial (prime fields: the residue itself)");
    add_common(genmat, genmat_opts, false);
    genmat->add_option("--format", genmat_format, "entry format: enc or log (discrete logs)")
        ->check(CLI::IsMember({"enc", "log"}));

    CommonOpts distance_opts;
    bool want_exact = false, want_bounds = false;
    long long limit = 0;
    int jobs = 0;
    auto* distance = app.add_subcommand("distance", "minimum-distance bounds and exact search");
    add_common(distance, distance_opts, true);
    distance->add_flag("--exact", want_exact, "run the exhaustive search");
    distance->add_flag("--bounds", want_bounds, "compute lower and upper bounds (default)");
    distance->add_option("--limit", limit, "message-count guard for --exact");
    distance->add_option("--jobs", jobs, "worker threads (default: all cores)");

    std::string case_name;
    std::string verify_format = "text";
    std::string verify_out;
    int verify_jobs = 0;
    Guards verify_guards;
    auto* verify_cmd = app.add_subcommand("verify-paper", "replication suite");
    verify_cmd->add_option("--case", case_name, "hypercube, hexagon, joyner42, joyner43, pick, or all")
        ->required();
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
    verify_cmd->add_option("--format", verify_format, "output format: json, text, or csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    verify_cmd->add_option("--out", verify_out, "output file (default: stdout)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
        if (app.got_subcommand(params)) return cmd_params(params_opts, out);
        if (app.got_subcommand(genmat)) return cmd_genmat(genmat_opts, genmat_format, out);
        if (app.got_subcommand(distance))
            return cmd_distance(distance_opts, want_exact, want_bounds, limit, jobs, out);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(case_name, verify_jobs, verify_format, verify_out, verify_guards, out);
        err << "error: no command given\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const guard_error& e) {
        err << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const io_error& e) {
        err << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace toric::cli
