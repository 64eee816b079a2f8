#include "itx/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <sstream>

namespace itx::identities {

namespace {

nlohmann::json num(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

std::string g12(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string g3(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["profile"] = report.profile;
    j["summary"] = {{"n_pass", report.summary.n_pass},
                    {"n_fail", report.summary.n_fail},
                    {"worst_rel", num(report.summary.worst_rel)},
                    {"worst_id", report.summary.worst_id}};
    auto& pts = j["points"] = nlohmann::json::array();
    for (const PointResult& p : report.points) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [k, v] : p.point.coords()) params[k] = v;
        pts.push_back({{"id", p.id},
                       {"point", params},
                       {"lhs", num(p.lhs)},
                       {"rhs", num(p.rhs)},
                       {"lhs_err", num(p.lhs_err)},
                       {"rhs_err", num(p.rhs_err)},
                       {"abs_residual", num(p.abs_residual)},
                       {"rel_residual", num(p.rel_residual)},
                       {"threshold", p.threshold},
                       {"converged", p.converged},
                       {"pass", p.pass},
                       {"reason", p.reason}});
    }
    auto& notes = j["notes"] = nlohmann::json::array();
    for (const auto& [id, note] : report.notes) notes.push_back({{"id", id}, {"note", note}});
    return j;
}

VerificationReport from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("schema", "") != kReportSchema)
        throw std::invalid_argument(std::string("not a report with schema ") + kReportSchema);
    auto real = [](const nlohmann::json& v) {
        return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
    };
    VerificationReport rep;
    rep.profile = j.at("profile").get<std::string>();
    const auto& s = j.at("summary");
    rep.summary.n_pass = s.at("n_pass").get<int>();
    rep.summary.n_fail = s.at("n_fail").get<int>();
    rep.summary.worst_rel = s.at("worst_rel").is_null() ? std::numeric_limits<double>::infinity()
                                                         : s.at("worst_rel").get<double>();
    rep.summary.worst_id = s.at("worst_id").get<std::string>();
    for (const auto& p : j.at("points")) {
        PointResult r;
        r.id = p.at("id").get<std::string>();
        for (const auto& [k, v] : p.at("point").items()) r.point.set(k, v.get<double>());
        r.lhs = real(p.at("lhs"));
        r.rhs = real(p.at("rhs"));
        r.lhs_err = real(p.at("lhs_err"));
        r.rhs_err = real(p.at("rhs_err"));
        r.abs_residual = real(p.at("abs_residual"));
        r.rel_residual = real(p.at("rel_residual"));
        r.threshold = p.at("threshold").get<double>();
        r.converged = p.at("converged").get<bool>();
        r.pass = p.at("pass").get<bool>();
        r.reason = p.at("reason").get<std::string>();
        rep.points.push_back(std::move(r));
    }
    for (const auto& n : j.at("notes")) rep.notes.emplace_back(n.at("id").get<std::string>(), n.at("note").get<std::string>());
    return rep;
}

std::string to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "id,point,lhs,rhs,rel_residual,pass\n";
    for (const PointResult& p : report.points) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", p.lhs, p.rhs, p.rel_residual);
        os << csv_field(p.id) << ',' << csv_field(p.point.label()) << ',' << buf << ',' << (p.pass ? "true" : "false")
           << '\n';
    }
    return os.str();
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "profile " << report.profile << "\n";
    for (const PointResult& p : report.points) {
        os << (p.pass ? "PASS " : "FAIL ") << p.id;
        if (!p.point.coords().empty()) os << " [" << p.point.label() << "]";
        os << "  lhs=" << g12(p.lhs) << " rhs=" << g12(p.rhs) << " rel=" << g3(p.rel_residual)
           << " thr=" << g3(p.threshold);
        if (!p.reason.empty()) os << "  (" << p.reason << ")";
        os << "\n";
    }
    for (const auto& [id, note] : report.notes) os << "note " << id << ": " << note << "\n";
    os << "summary: " << report.summary.n_pass << " pass, " << report.summary.n_fail << " fail, worst rel "
       << g3(report.summary.worst_rel);
    if (!report.summary.worst_id.empty()) os << " (" << report.summary.worst_id << ")";
    os << "\n";
    return os.str();
}

}  // namespace itx::identities
