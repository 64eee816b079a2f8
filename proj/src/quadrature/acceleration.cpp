#include "itx/acceleration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace itx::quad {

WynnEpsilon::WynnEpsilon(std::size_t window) : window_(std::max<std::size_t>(window, 3)) {}

void WynnEpsilon::reset() {
    sums_.clear();
    history_.clear();
}

double WynnEpsilon::extrapolate() const {
    std::size_t m = std::min(sums_.size(), window_);
    if (m % 2 == 0) --m;
    const std::size_t start = sums_.size() - m;

    std::vector<double> prev(m + 1, 0.0);
    std::vector<double> cur(sums_.begin() + static_cast<std::ptrdiff_t>(start), sums_.end());
    double best = cur.back();
    for (std::size_t k = 1; k < m; ++k) {
        std::vector<double> next(cur.size() - 1);
        bool degenerate = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double diff = cur[i + 1] - cur[i];
            if (diff == 0.0 || !std::isfinite(diff)) {
                degenerate = true;
                break;
            }
            next[i] = prev[i + 1] + 1.0 / diff;
        }
        if (degenerate) break;
        if (k % 2 == 0) {
            if (!std::isfinite(next.back())) break;
            best = next.back();
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return best;
}

WynnEpsilon::Estimate WynnEpsilon::push(double partial_sum) {
    sums_.push_back(partial_sum);
    const double est = extrapolate();
    history_.push_back(est);
    const std::size_t n = history_.size();
    const double floor = 5.0 * std::numeric_limits<double>::epsilon() * std::abs(est);
    if (n < 3) {
        const double err = n == 1 ? std::numeric_limits<double>::infinity()
                                  : std::abs(history_[1] - history_[0]);
        return {est, std::max(err, floor)};
    }
    const double err = std::abs(est - history_[n - 2]) + std::abs(est - history_[n - 3]);
    return {est, std::max(err, floor)};
}

}  // namespace itx::quad
