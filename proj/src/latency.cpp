#include "roc/latency.hpp"

#include <cmath>
#include <string>

#include "roc/errors.hpp"

namespace roc {

double exp_latency_pdf(int i, double z, const ChannelParams& p) {
    p.validate();
    if (i < 1 || i > p.n) throw ParameterError("neuron index out of range: " + std::to_string(i));
    if (!std::isfinite(z)) throw ParameterError("z must be finite");
    const double start = static_cast<double>(i - 1) * p.alpha;
    if (z < start) return 0.0;
    return p.lambda * std::exp(-p.lambda * (z - start));
}

void sample_latencies(const ChannelParams& p, Xoshiro256pp& rng, std::span<double> z) {
    const auto n = static_cast<std::size_t>(p.n);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = static_cast<double>(i) * p.alpha + exp_sample(rng, p.lambda);
}

void sample_gaussian_latencies(const GaussianNoiseParams& g, Xoshiro256pp& rng,
                               NormalGen& normal, std::span<double> z) {
    const auto n = static_cast<std::size_t>(g.n);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = static_cast<double>(i) * g.alpha + g.sigma * normal(rng);
}

}  // namespace roc
