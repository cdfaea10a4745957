#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "roc/errors.hpp"
#include "roc/random.hpp"

namespace roc {

struct McConfig {
    std::uint64_t master_seed = 0;
    std::uint64_t samples = 10'000'000;
    std::uint64_t chunk_size = 1u << 20;
    unsigned workers = 1;

    void validate() const {
        if (samples < 1) throw ParameterError("samples must be >= 1");
        if (chunk_size < 1) throw ParameterError("chunk_size must be >= 1");
        if (workers < 1) throw ParameterError("workers must be >= 1");
    }
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample std / sqrt(samples)
    std::uint64_t samples = 0;
    std::uint64_t master_seed = 0;
};

// Exact per-category hit counts; sum of counts == samples.
struct CountTable {
    std::vector<std::uint64_t> counts;
    std::uint64_t samples = 0;
    std::uint64_t master_seed = 0;
};

namespace detail {

// Neumaier-compensated accumulator; merging preserves the compensation.
struct CompSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

inline std::uint64_t chunk_count(const McConfig& cfg) {
    return (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
}

inline std::uint64_t chunk_samples(const McConfig& cfg, std::uint64_t k) {
    const std::uint64_t begin = k * cfg.chunk_size;
    return std::min(cfg.chunk_size, cfg.samples - begin);
}

// Runs fn(k) for every chunk index k, distributed over cfg.workers threads.
// Chunk-to-worker assignment never influences results because each chunk's
// output lands in its own slot.
template <class Fn>
void for_each_chunk(const McConfig& cfg, Fn&& fn) {
    const std::uint64_t nchunks = chunk_count(cfg);
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.workers, nchunks));
    if (nthreads <= 1) {
        for (std::uint64_t k = 0; k < nchunks; ++k) fn(k);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned w = 0; w < nthreads; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t k = w; k < nchunks; k += nthreads) fn(k);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace detail

// Mean/SE of a real-valued kernel: double kernel(Xoshiro256pp&).
// The kernel prototype is copied once per chunk, so any mutable kernel state
// (scratch buffers, cached normal deviates) is chunk-local and the result is
// bit-identical for every worker count.
template <class Kernel>
Estimate run_mean(const Kernel& prototype, const McConfig& cfg) {
    cfg.validate();
    const std::uint64_t nchunks = detail::chunk_count(cfg);
    std::vector<detail::CompSum> sums(nchunks), sqsums(nchunks);

    detail::for_each_chunk(cfg, [&](std::uint64_t k) {
        Kernel kernel = prototype;
        Xoshiro256pp rng(cfg.master_seed, k);
        detail::CompSum s, sq;
        const std::uint64_t m = detail::chunk_samples(cfg, k);
        for (std::uint64_t i = 0; i < m; ++i) {
            const double v = kernel(rng);
            s.add(v);
            sq.add(v * v);
        }
        sums[k] = s;
        sqsums[k] = sq;
    });

    // Fixed chunk-order reduction keeps the floating-point result exact
    // across schedules.
    detail::CompSum total, total_sq;
    for (std::uint64_t k = 0; k < nchunks; ++k) {
        total.add(sums[k].value());
        total_sq.add(sqsums[k].value());
    }
    const auto n = static_cast<double>(cfg.samples);
    Estimate e;
    e.mean = total.value() / n;
    if (cfg.samples > 1) {
        const double var = std::max(0.0, (total_sq.value() - n * e.mean * e.mean) / (n - 1.0));
        e.std_error = std::sqrt(var / n);
    }
    e.samples = cfg.samples;
    e.master_seed = cfg.master_seed;
    return e;
}

// Category counts of an integer-valued kernel: uint32_t kernel(Xoshiro256pp&),
// values in [0, categories). Integer merges are exact, hence order-free.
template <class Kernel>
CountTable run_counts(std::size_t categories, const Kernel& prototype, const McConfig& cfg) {
    cfg.validate();
    if (categories < 1) throw ParameterError("categories must be >= 1");
    const std::uint64_t nchunks = detail::chunk_count(cfg);
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.workers, nchunks));
    std::vector<std::vector<std::uint64_t>> partial(
        std::max(1u, nthreads), std::vector<std::uint64_t>(categories, 0));

    if (nthreads <= 1) {
        auto& table = partial[0];
        for (std::uint64_t k = 0; k < nchunks; ++k) {
            Kernel kernel = prototype;
            Xoshiro256pp rng(cfg.master_seed, k);
            const std::uint64_t m = detail::chunk_samples(cfg, k);
            for (std::uint64_t i = 0; i < m; ++i) ++table[kernel(rng)];
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned w = 0; w < nthreads; ++w) {
            pool.emplace_back([&, w] {
                auto& table = partial[w];
                for (std::uint64_t k = w; k < nchunks; k += nthreads) {
                    Kernel kernel = prototype;
                    Xoshiro256pp rng(cfg.master_seed, k);
                    const std::uint64_t m = detail::chunk_samples(cfg, k);
                    for (std::uint64_t i = 0; i < m; ++i) ++table[kernel(rng)];
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    CountTable out;
    out.counts.assign(categories, 0);
    for (const auto& table : partial)
        for (std::size_t c = 0; c < categories; ++c) out.counts[c] += table[c];
    out.samples = cfg.samples;
    out.master_seed = cfg.master_seed;
    return out;
}

}  // namespace roc
