#include "hylag/weighting.hpp"

#include <cmath>
#include <string>

namespace hylag {

Weighting::Weighting(std::vector<double> values, double sum_tolerance)
    : values_(std::move(values)) {
    if (values_.empty()) throw InputError("Weighting: empty value vector");
    double total = 0.0;
    for (double v : values_) {
        if (!(v >= 0.0)) throw InputError("Weighting: negative or NaN entry");
        total += v;
    }
    if (std::abs(total - 1.0) > sum_tolerance)
        throw InputError("Weighting: sum deviates from 1 by " + std::to_string(total - 1.0));
}

Weighting Weighting::uniform(int n) {
    if (n < 1) throw InputError("Weighting::uniform: n must be >= 1");
    return Weighting(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

Weighting Weighting::uniform_on(int n, const std::vector<Vertex>& verts) {
    if (verts.empty()) throw InputError("Weighting::uniform_on: empty vertex set");
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    for (Vertex x : verts) {
        if (x < 1 || x > n) throw InputError("Weighting::uniform_on: vertex outside 1..n");
        v[static_cast<std::size_t>(x) - 1] = 1.0 / static_cast<double>(verts.size());
    }
    return Weighting(std::move(v));
}

double Weighting::sum() const {
    double total = 0.0;
    for (double v : values_) total += v;
    return total;
}

}  // namespace hylag
