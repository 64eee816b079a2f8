#pragma once

// Executable identity catalog: each record pairs a numerically evaluated
// left-hand side with a right-hand side (closed form over specfun, or a
// second quadrature pipeline where the identity relates two transforms)
// and a default parameter grid.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace itx::identities {

enum class TolClass { smooth, oscillatory, near_singular };

/// 1e-8, 1e-6, 1e-4.
double threshold(TolClass c);
std::string to_string(TolClass c);

/// A parameter point; coordinates keep insertion order (mu, nu, y, z).
class Point {
public:
    Point() = default;
    Point(std::initializer_list<std::pair<std::string, double>> coords);

    Point& set(const std::string& name, double value);
    double get(const std::string& name) const;  // throws std::out_of_range
    bool has(const std::string& name) const;
    const std::vector<std::pair<std::string, double>>& coords() const { return coords_; }

    /// "mu=0.25;y=1"; empty string for the empty point.
    std::string label() const;

    bool operator==(const Point& o) const { return coords_ == o.coords_; }

private:
    std::vector<std::pair<std::string, double>> coords_;
};

struct Evaluation {
    double value = 0.0;
    double abs_err = 0.0;
    bool converged = true;
};

using Side = std::function<Evaluation(const Point&)>;

struct IdentityRecord {
    std::string id;
    std::string family;
    std::string anchor;   // where the identity comes from, with a short quote
    std::string lhs_text;
    std::string rhs_text;
    std::string note;     // corrections and caveats, also emitted as report metadata
    TolClass tol_class = TolClass::smooth;
    Side lhs;
    Side rhs;
    std::function<bool(const Point&)> domain;
    std::vector<Point> grid;
};

/// The full catalog, in a fixed order.
const std::vector<IdentityRecord>& catalog();

/// Family names in catalog order, each listed once.
std::vector<std::string> families();

/// Throws std::invalid_argument for an unknown id.
const IdentityRecord& find(const std::string& id);

/// Tolerance profile: multiplies every class threshold.
struct Profile {
    std::string name = "default";
    double threshold_scale = 1.0;

    /// "default" (x1), "strict" (x0.1), "relaxed" (x10); throws otherwise.
    static Profile named(const std::string& name);
    static std::vector<std::string> names();
};

struct PointResult {
    std::string id;
    Point point;
    double lhs = 0.0;
    double rhs = 0.0;
    double lhs_err = 0.0;
    double rhs_err = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double threshold = 0.0;
    bool converged = false;
    bool pass = false;
    std::string reason;  // why a point failed, empty on pass
};

struct Summary {
    int n_pass = 0;
    int n_fail = 0;
    double worst_rel = 0.0;
    std::string worst_id;
};

struct VerificationReport {
    std::string profile = "default";
    std::vector<PointResult> points;
    Summary summary;
    /// (record id, note) for every verified record carrying a note.
    std::vector<std::pair<std::string, std::string>> notes;

    bool ok() const { return summary.n_fail == 0; }
};

/// Evaluates both sides at one point and applies the pass rule:
/// rel residual <= threshold, or abs residual <= threshold when |rhs| < 1e-10.
/// A non-converged side or a thrown error fails the point with a reason.
PointResult evaluate_point(const IdentityRecord& record, const Point& point, double threshold);

/// Verifies `record` on `grid` (its default grid when absent). Points outside
/// the record's domain are rejected with std::invalid_argument.
VerificationReport verify(const IdentityRecord& record, const std::optional<std::vector<Point>>& grid = std::nullopt,
                          std::optional<double> tol_override = std::nullopt, const Profile& profile = {},
                          unsigned workers = 1);

/// Verifies the given records (all when empty) on their default grids.
/// Output order is catalog order then grid order, whatever the worker count.
VerificationReport verify_all(const Profile& profile = {}, unsigned workers = 0,
                              const std::vector<std::string>& ids = {});

}  // namespace itx::identities
