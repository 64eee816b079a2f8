#pragma once

#include <cstddef>
#include <vector>

namespace itx::quad {

/// Wynn's epsilon algorithm over a sliding window of partial sums.
///
/// push() accepts the next partial sum and returns the current limit
/// estimate together with an error estimate built from the last three
/// estimates (the QUADPACK qelg heuristic).
class WynnEpsilon {
public:
    struct Estimate {
        double value;
        double error;
    };

    explicit WynnEpsilon(std::size_t window = 31);

    Estimate push(double partial_sum);
    std::size_t size() const { return sums_.size(); }
    void reset();

private:
    double extrapolate() const;

    std::size_t window_;
    std::vector<double> sums_;
    std::vector<double> history_;
};

}  // namespace itx::quad
