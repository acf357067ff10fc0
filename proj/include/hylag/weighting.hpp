#pragma once

#include <vector>

#include "hylag/errors.hpp"
#include "hylag/hypergraph.hpp"

namespace hylag {

// Nonnegative vertex weights indexed by 1..n, unit sum within tolerance.
class Weighting {
public:
    static constexpr double kDefaultSumTolerance = 1e-12;

    explicit Weighting(std::vector<double> values,
                       double sum_tolerance = kDefaultSumTolerance);

    static Weighting uniform(int n);
    // uniform on the given vertices, zero elsewhere
    static Weighting uniform_on(int n, const std::vector<Vertex>& verts);

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](Vertex x) const { return values_[static_cast<std::size_t>(x) - 1]; }
    const std::vector<double>& values() const { return values_; }
    double sum() const;

private:
    std::vector<double> values_;
};

}  // namespace hylag
