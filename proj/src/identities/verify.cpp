#include "itx/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace itx::identities {

double threshold(TolClass c) {
    switch (c) {
    case TolClass::smooth: return 1e-8;
    case TolClass::oscillatory: return 1e-6;
    case TolClass::near_singular: return 1e-4;
    }
    return 1e-8;
}

std::string to_string(TolClass c) {
    switch (c) {
    case TolClass::smooth: return "smooth";
    case TolClass::oscillatory: return "oscillatory";
    case TolClass::near_singular: return "near_singular";
    }
    return "smooth";
}

Point::Point(std::initializer_list<std::pair<std::string, double>> coords) {
    for (const auto& [k, v] : coords) set(k, v);
}

Point& Point::set(const std::string& name, double value) {
    for (auto& [k, v] : coords_)
        if (k == name) {
            v = value;
            return *this;
        }
    coords_.emplace_back(name, value);
    return *this;
}

double Point::get(const std::string& name) const {
    for (const auto& [k, v] : coords_)
        if (k == name) return v;
    throw std::out_of_range("point has no coordinate '" + name + "'");
}

bool Point::has(const std::string& name) const {
    return std::any_of(coords_.begin(), coords_.end(), [&](const auto& kv) { return kv.first == name; });
}

std::string Point::label() const {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto& [k, v] : coords_) {
        if (!first) os << ';';
        first = false;
        os << k << '=' << v;
    }
    return os.str();
}

Profile Profile::named(const std::string& name) {
    if (name == "default") return {"default", 1.0};
    if (name == "strict") return {"strict", 0.1};
    if (name == "relaxed") return {"relaxed", 10.0};
    throw std::invalid_argument("unknown tolerance profile '" + name + "'");
}

std::vector<std::string> Profile::names() { return {"default", "strict", "relaxed"}; }

PointResult evaluate_point(const IdentityRecord& record, const Point& point, double thr) {
    PointResult r;
    r.id = record.id;
    r.point = point;
    r.threshold = thr;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.lhs = r.rhs = r.abs_residual = r.rel_residual = nan;

    Evaluation lhs, rhs;
    try {
        lhs = record.lhs(point);
    } catch (const std::exception& e) {
        r.reason = std::string("lhs failed: ") + e.what();
        return r;
    }
    try {
        rhs = record.rhs(point);
    } catch (const std::exception& e) {
        r.lhs = lhs.value;
        r.reason = std::string("rhs failed: ") + e.what();
        return r;
    }
    r.lhs = lhs.value;
    r.rhs = rhs.value;
    r.lhs_err = lhs.abs_err;
    r.rhs_err = rhs.abs_err;
    r.converged = lhs.converged && rhs.converged;
    r.abs_residual = std::abs(lhs.value - rhs.value);
    r.rel_residual = r.abs_residual / std::abs(rhs.value);

    if (!std::isfinite(lhs.value) || !std::isfinite(rhs.value)) {
        r.reason = "non-finite value";
        return r;
    }
    if (!lhs.converged) r.reason = "lhs did not converge";
    else if (!rhs.converged) r.reason = "rhs did not converge";
    if (!r.reason.empty()) return r;

    const bool tiny = std::abs(rhs.value) < 1e-10;
    r.pass = tiny ? r.abs_residual <= thr : r.rel_residual <= thr;
    if (!r.pass) {
        std::ostringstream os;
        os.precision(3);
        os << (tiny ? "abs" : "rel") << " residual " << (tiny ? r.abs_residual : r.rel_residual)
           << " exceeds " << thr;
        r.reason = os.str();
    }
    return r;
}

namespace {

struct Task {
    const IdentityRecord* record;
    Point point;
    double threshold;
};

std::vector<PointResult> run_tasks(const std::vector<Task>& tasks, unsigned workers) {
    std::vector<PointResult> out(tasks.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<std::size_t>(1, tasks.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            out[i] = evaluate_point(*tasks[i].record, tasks[i].point, tasks[i].threshold);
    };
    if (workers <= 1) {
        work();
        return out;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();  // joins
    return out;
}

VerificationReport assemble(const std::string& profile, std::vector<PointResult> points,
                            const std::vector<const IdentityRecord*>& records) {
    VerificationReport rep;
    rep.profile = profile;
    rep.points = std::move(points);
    for (const PointResult& p : rep.points) {
        if (p.pass) ++rep.summary.n_pass;
        else ++rep.summary.n_fail;
        const double rel = std::isfinite(p.rel_residual) ? p.rel_residual : std::numeric_limits<double>::infinity();
        if (rep.summary.worst_id.empty() || rel > rep.summary.worst_rel) {
            rep.summary.worst_rel = rel;
            rep.summary.worst_id = p.id;
        }
    }
    for (const IdentityRecord* r : records)
        if (!r->note.empty()) rep.notes.emplace_back(r->id, r->note);
    return rep;
}

}  // namespace

VerificationReport verify(const IdentityRecord& record, const std::optional<std::vector<Point>>& grid,
                          std::optional<double> tol_override, const Profile& profile, unsigned workers) {
    const std::vector<Point>& pts = grid ? *grid : record.grid;
    for (const Point& p : pts)
        if (record.domain && !record.domain(p))
            throw std::invalid_argument("point " + p.label() + " lies outside the domain of " + record.id);

    const double thr = tol_override ? *tol_override : threshold(record.tol_class) * profile.threshold_scale;
    std::vector<Task> tasks;
    for (const Point& p : pts) tasks.push_back({&record, p, thr});
    return assemble(profile.name, run_tasks(tasks, workers), {&record});
}

VerificationReport verify_all(const Profile& profile, unsigned workers, const std::vector<std::string>& ids) {
    std::vector<const IdentityRecord*> records;
    if (ids.empty())
        for (const auto& r : catalog()) records.push_back(&r);
    else
        for (const auto& id : ids) records.push_back(&find(id));

    std::vector<Task> tasks;
    for (const IdentityRecord* r : records) {
        const double thr = threshold(r->tol_class) * profile.threshold_scale;
        for (const Point& p : r->grid) tasks.push_back({r, p, thr});
    }
    return assemble(profile.name, run_tasks(tasks, workers), records);
}

}  // namespace itx::identities
