#pragma once

#include <cmath>
#include <string>

#include "roc/errors.hpp"

namespace roc {

// Exponential-delay channel: neuron i (0-based) fires at i*alpha + Exp(lambda).
// Transition probabilities depend on the parameters only through x = lambda*alpha.
struct ChannelParams {
    int n = 2;          // presynaptic neurons, >= 2
    double alpha = 1.0; // inter-spike spacing, seconds, >= 0
    double lambda = 1.0;// exponential rate, 1/seconds, > 0

    double x() const { return lambda * alpha; }

    void validate() const {
        if (n < 2) throw ParameterError("n must be >= 2, got " + std::to_string(n));
        if (!(std::isfinite(alpha) && alpha >= 0.0))
            throw ParameterError("alpha must be finite and >= 0");
        if (!(std::isfinite(lambda) && lambda > 0.0))
            throw ParameterError("lambda must be finite and > 0");
    }
};

// Gaussian-noise variant: neuron i fires at N(i*alpha, sigma^2).
struct GaussianNoiseParams {
    int n = 2;
    double alpha = 1.0; // seconds, >= 0
    double sigma = 1.0; // seconds, > 0

    void validate() const {
        if (n < 2) throw ParameterError("n must be >= 2, got " + std::to_string(n));
        if (!(std::isfinite(alpha) && alpha >= 0.0))
            throw ParameterError("alpha must be finite and >= 0");
        if (!(std::isfinite(sigma) && sigma > 0.0))
            throw ParameterError("sigma must be finite and > 0");
    }
};

}  // namespace roc
