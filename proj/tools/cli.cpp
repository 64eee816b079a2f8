#include "cli.hpp"

#include "itx/corpus.hpp"
#include "itx/identities.hpp"
#include "itx/report.hpp"
#include "itx/transforms.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace itx::cli {

namespace {

namespace id = itx::identities;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string default_profile() {
    const char* env = std::getenv("ITX_PROFILE");
    return env && *env ? env : "default";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f << text;
}

// --- eval -------------------------------------------------------------------

struct EvalArgs {
    std::string transform;
    double order = 0.0;
    std::string function;
    corpus::Params params;
    std::vector<double> points;
};

int do_eval(const EvalArgs& a, const std::string& format, const std::string& output, std::ostream& out,
            std::ostream& err) {
    transforms::TransformKind kind;
    quad::Function1D f;
    try {
        kind = transforms::TransformKind::parse(a.transform, a.order);
        f = corpus::make(a.function, a.params);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    struct Row {
        double y;
        quad::IntegrationResult r;
    };
    std::vector<Row> rows;
    bool all_converged = true;
    for (double y : a.points) {
        if (!(y > 0.0)) throw UsageError("evaluation points must be positive, got " + g12(y));
        try {
            rows.push_back({y, transforms::apply(kind, f, y)});
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        } catch (const std::exception& e) {
            err << "itx: evaluation failed at y=" << g12(y) << ": " << e.what() << "\n";
            return kVerificationFailed;
        }
        all_converged = all_converged && rows.back().r.converged;
    }

    std::ostringstream os;
    if (format == "json") {
        json j;
        j["transform"] = kind.name();
        if (kind.has_order()) j["order"] = a.order;
        j["function"] = a.function;
        j["params"] = {{"mu", a.params.mu}, {"nu", a.params.nu}, {"z", a.params.z}};
        j["results"] = json::array();
        for (const Row& row : rows)
            j["results"].push_back({{"y", row.y},
                                    {"value", row.r.value},
                                    {"abs_err", row.r.abs_err},
                                    {"n_evals", row.r.n_evals},
                                    {"converged", row.r.converged}});
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "y,value,abs_err,converged\n";
        char buf[120];
        for (const Row& row : rows) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.3g,", row.y, row.r.value, row.r.abs_err);
            os << buf << (row.r.converged ? "true" : "false") << "\n";
        }
    } else {
        os << kind.name() << " of " << a.function << " (mu=" << g12(a.params.mu) << ", nu=" << g12(a.params.nu)
           << ", z=" << g12(a.params.z) << ")\n";
        for (const Row& row : rows) {
            os << "y=" << g12(row.y) << "  " << g12(row.r.value);
            char buf[40];
            std::snprintf(buf, sizeof buf, "  +/- %.2g", row.r.abs_err);
            os << buf << (row.r.converged ? "" : "  (not converged)") << "\n";
        }
    }
    emit(os.str(), output, out);
    if (!all_converged) err << "itx: warning: some evaluations did not reach the requested tolerance\n";
    return kOk;
}

// --- verify / report ----------------------------------------------------------

std::string render(const id::VerificationReport& rep, const std::string& format) {
    if (format == "json") return id::to_json(rep).dump(2) + "\n";
    if (format == "csv") return id::to_csv(rep);
    return id::to_text(rep);
}

int do_verify(const std::vector<std::string>& ids, const std::string& profile_name, unsigned workers,
              const std::string& format, const std::string& output, std::ostream& out) {
    id::Profile profile;
    try {
        profile = id::Profile::named(profile_name);
        for (const auto& i : ids) id::find(i);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto rep = id::verify_all(profile, workers, ids);
    emit(render(rep, format), output, out);
    return rep.ok() ? kOk : kVerificationFailed;
}

int do_report(const std::string& input, const std::string& format, const std::string& output, std::ostream& out) {
    std::ifstream f(input);
    if (!f) throw UsageError("cannot read '" + input + "'");
    id::VerificationReport rep;
    try {
        rep = id::from_json(json::parse(f));
    } catch (const std::exception& e) {
        throw UsageError("'" + input + "' is not a verification report: " + e.what());
    }
    emit(render(rep, format), output, out);
    return rep.ok() ? kOk : kVerificationFailed;
}

// --- list ---------------------------------------------------------------------

int do_list(const std::string& format, const std::string& output, std::ostream& out) {
    std::ostringstream os;
    if (format == "json") {
        json j = json::array();
        for (const auto& r : id::catalog())
            j.push_back({{"id", r.id},
                         {"family", r.family},
                         {"anchor", r.anchor},
                         {"lhs", r.lhs_text},
                         {"rhs", r.rhs_text},
                         {"tol_class", id::to_string(r.tol_class)},
                         {"grid_points", r.grid.size()},
                         {"note", r.note}});
        os << j.dump(2) << "\n";
    } else {
        const auto fams = id::families();
        os << fams.size() << " families, " << id::catalog().size() << " records\n";
        for (const auto& fam : fams) {
            os << "\n" << fam << "\n";
            for (const auto& r : id::catalog()) {
                if (r.family != fam) continue;
                os << "  " << r.id << "  [" << id::to_string(r.tol_class) << ", " << r.grid.size() << " points]  "
                   << r.anchor << "\n"
                   << "      " << r.lhs_text << "\n"
                   << "    = " << r.rhs_text << "\n";
            }
        }
        os << "\nfunctions:\n";
        for (const auto& e : corpus::entries()) os << "  " << e.name << "  " << e.formula << "\n";
        os << "transforms:";
        for (const auto& n : transforms::TransformKind::names()) os << " " << n;
        os << "\n";
    }
    emit(os.str(), output, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integral transforms and numerical identity verification"};
    app.name("itx");
    app.require_subcommand(1);

    std::string format = "text", output;
    auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("-o,--output", output, "Write to this file instead of stdout");
    };

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate a transform of a corpus function");
    eval->add_option("-t,--transform", ea.transform, "Transform name")->required();
    eval->add_option("--order", ea.order, "Order nu for hankel and k");
    eval->add_option("-f,--function", ea.function, "Corpus function name")->required();
    eval->add_option("--mu", ea.params.mu, "Parameter mu");
    eval->add_option("--nu", ea.params.nu, "Parameter nu");
    eval->add_option("--z", ea.params.z, "Parameter z");
    eval->add_option("-p,--points", ea.points, "Transform variable values")->required()->delimiter(',');
    common(eval, {"text", "json", "csv"});

    bool all = false;
    std::vector<std::string> ids;
    std::string profile = default_profile();
    unsigned workers = 0;
    auto* verify = app.add_subcommand("verify", "Verify identities on their default grids");
    verify->add_flag("--all", all, "Verify the whole catalog (the default)");
    verify->add_option("--id", ids, "Identity id (repeatable)")->delimiter(',');
    verify->add_option("--profile", profile, "Tolerance profile: default, strict, relaxed (env ITX_PROFILE)");
    verify->add_option("-j,--workers", workers, "Worker threads (0 = hardware)");
    common(verify, {"text", "json", "csv"});

    auto* list = app.add_subcommand("list", "List identity families, corpus functions and transforms");
    common(list, {"text", "json"});

    std::string input;
    auto* report = app.add_subcommand("report", "Re-render a saved JSON verification report");
    report->add_option("input", input, "JSON report from verify --format json")->required();
    common(report, {"text", "json", "csv"});

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval) return do_eval(ea, format, output, out, err);
        if (*verify) {
            if (all && !ids.empty()) throw UsageError("--all and --id are mutually exclusive");
            return do_verify(ids, profile, workers, format, output, out);
        }
        if (*list) return do_list(format, output, out);
        if (*report) return do_report(input, format, output, out);
    } catch (const UsageError& e) {
        err << "itx: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "itx: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kUsage;
}

}  // namespace itx::cli
