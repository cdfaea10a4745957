#pragma once

#include <span>

#include "roc/params.hpp"
#include "roc/random.hpp"

namespace roc {

// Density of the i-th spike time (i is 1-based): lambda*e^{-lambda(z-(i-1)alpha)}
// for z >= (i-1)alpha, else 0.
double exp_latency_pdf(int i, double z, const ChannelParams& p);

// Draws Z_i = (i-1)alpha + Exp(lambda) into z[0..n).
void sample_latencies(const ChannelParams& p, Xoshiro256pp& rng, std::span<double> z);

// Draws Z_i ~ N((i-1)alpha, sigma^2) into z[0..n).
void sample_gaussian_latencies(const GaussianNoiseParams& g, Xoshiro256pp& rng,
                               NormalGen& normal, std::span<double> z);

}  // namespace roc
