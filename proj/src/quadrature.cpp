#include "roc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "roc/errors.hpp"

namespace roc {
namespace {

// Non-owning callable; avoids std::function overhead in the hot recursion.
struct FuncRef {
    void* ctx;
    double (*fn)(void*, double);
    double operator()(double t) const { return fn(ctx, t); }
};

// Optional rigorous bound on the integral of |f| over a segment. When the
// bound is below the segment budget the segment is dropped unevaluated; the
// committed error is at most the bound itself.
struct MassBoundRef {
    void* ctx = nullptr;
    double (*fn)(void*, double, double) = nullptr;
    double operator()(double a, double b) const { return fn(ctx, a, b); }
};

// QUADPACK G7/K15 nodes and weights on [-1, 1].
constexpr std::array<double, 8> kNodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr std::array<double, 8> kWeights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gk15(FuncRef f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = kWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kNodes[static_cast<std::size_t>(i)];
        const double pair = f(c - dx) + f(c + dx);
        kronrod += kWeights[static_cast<std::size_t>(i)] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    return {kronrod * h, std::abs((kronrod - gauss) * h)};
}

double adaptive(FuncRef f, double a, double b, double abs_tol,
                std::span<const double> breakpoints, MassBoundRef bound = {}) {
    if (!(b > a)) return 0.0;

    struct Segment {
        double a, b, tol;
        int depth;
    };
    std::vector<Segment> stack;
    stack.reserve(64);

    // Initial segmentation at the supplied breakpoints.
    std::array<double, 16> pts{};
    std::size_t npts = 0;
    pts[npts++] = a;
    for (double p : breakpoints)
        if (p > a && p < b && npts + 1 < pts.size()) pts[npts++] = p;
    pts[npts++] = b;
    std::sort(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(npts));
    const double seg_tol = abs_tol / static_cast<double>(npts - 1);
    for (std::size_t i = 0; i + 1 < npts; ++i)
        stack.push_back({pts[i], pts[i + 1], seg_tol, 0});

    double total = 0.0, comp = 0.0;
    auto accumulate = [&](double v) {
        const double t = total + v;
        if (std::abs(total) >= std::abs(v))
            comp += (total - t) + v;
        else
            comp += (v - t) + total;
        total = t;
    };

    while (!stack.empty()) {
        const Segment seg = stack.back();
        stack.pop_back();
        if (bound.fn != nullptr && bound(seg.a, seg.b) <= 0.05 * seg.tol) continue;
        const auto [integral, error] = gk15(f, seg.a, seg.b);
        const double width = seg.b - seg.a;
        if (error <= seg.tol || seg.depth >= 48 ||
            width <= 4.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(seg.a) + std::abs(seg.b) + 1.0)) {
            accumulate(integral);
        } else {
            const double m = 0.5 * (seg.a + seg.b);
            stack.push_back({seg.a, m, 0.5 * seg.tol, seg.depth + 1});
            stack.push_back({m, seg.b, 0.5 * seg.tol, seg.depth + 1});
        }
    }
    return total + comp;
}

struct OrderedRegion {
    const int* order;
    int n;
    double lambda;
    double alpha;
    double upper;
    double level_tol;

    double density(int neuron, double t) const {
        const double start = static_cast<double>(neuron) * alpha;
        return t >= start ? lambda * std::exp(-lambda * (t - start)) : 0.0;
    }

    // Integral over the remaining variables given the (k-1)-th arrival at `lower`.
    double tail(int k, double lower) const {
        const int j = order[k];
        const double start = static_cast<double>(j) * alpha;
        const double lo = std::max(lower, start);
        // Beyond lo + 30/lambda this variable's density (and hence the whole
        // branch) carries mass below e^-30; dropping it is far inside budget.
        const double hi = std::min(upper, lo + 30.0 / lambda);
        if (lo >= hi) return 0.0;

        struct Ctx {
            const OrderedRegion* self;
            int k, j;
            double start;
        } ctx{this, k, j, start};

        FuncRef f{&ctx, [](void* raw, double t) {
                      const auto& c = *static_cast<Ctx*>(raw);
                      const double d = c.self->density(c.j, t);
                      if (d == 0.0) return 0.0;
                      return c.k + 1 < c.self->n ? d * c.self->tail(c.k + 1, t) : d;
                  }};

        // The branch integral over [a, b] is bounded by this variable's own
        // mass there (the deeper factors integrate to at most 1).
        MassBoundRef mass{&ctx, [](void* raw, double a, double b) {
                              const auto& c = *static_cast<Ctx*>(raw);
                              const double la = std::max(a, c.start) - c.start;
                              const double lb = std::max(b, c.start) - c.start;
                              return std::exp(-c.self->lambda * la) -
                                     std::exp(-c.self->lambda * lb);
                          }};

        // Deeper levels kink at each remaining support start. The ladder points
        // seed panels at the width this rule resolves in one pass, so long
        // ranges are not reached by repeated bisection; points landing near an
        // existing seed are redundant and skipped.
        std::array<double, 8> breaks{};
        std::size_t nb = 0;
        for (int m = k + 1; m < n; ++m)
            breaks[nb++] = static_cast<double>(order[m]) * alpha;
        const double min_gap = 2.5 / lambda;
        for (double c : {6.0, 13.0, 21.0}) {
            const double cand = lo + c / lambda;
            if (cand >= hi - min_gap) break;
            bool near = false;
            for (std::size_t i = 0; i < nb; ++i)
                if (std::abs(breaks[i] - cand) < min_gap) near = true;
            if (!near) breaks[nb++] = cand;
        }
        return adaptive(f, lo, hi, level_tol,
                        std::span<const double>(breaks.data(), nb), mass);
    }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, std::span<const double> breakpoints) {
    if (!(abs_tol > 0.0)) throw ParameterError("abs_tol must be > 0");
    FuncRef ref{const_cast<std::function<double(double)>*>(&f), [](void* ctx, double t) {
                    return (*static_cast<const std::function<double(double)>*>(ctx))(t);
                }};
    return adaptive(ref, a, b, abs_tol, breakpoints);
}

double ordered_region_prob(std::span<const int> order, const ChannelParams& p, double tol) {
    p.validate();
    if (static_cast<int>(order.size()) != p.n) throw ParameterError("order size != n");
    if (!(tol > 0.0)) throw ParameterError("tol must be > 0");
    OrderedRegion region{
        order.data(), p.n, p.lambda, p.alpha,
        static_cast<double>(p.n - 1) * p.alpha + 40.0 / p.lambda,
        tol / (2.0 * static_cast<double>(p.n)),
    };
    return region.tail(0, 0.0);
}

}  // namespace roc
