#include "roc/permutation.hpp"

#include <algorithm>
#include <cmath>

#include "roc/errors.hpp"

namespace roc {

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw ParameterError("factorial requires 0 <= n <= 20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t order_rank(std::span<const int> order) {
    const int n = static_cast<int>(order.size());
    std::uint64_t rank = 0;
    std::uint64_t place = factorial(n);
    for (int i = 0; i < n; ++i) {
        place /= static_cast<std::uint64_t>(n - i);
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (order[j] < order[i]) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * place;
    }
    return rank;
}

std::uint64_t perm_to_index(const Permutation& p) {
    if (!is_valid_order(p.order)) throw ParameterError("not a permutation");
    return order_rank(p.order);
}

Permutation index_to_perm(std::uint64_t k, int n) {
    const std::uint64_t nf = factorial(n);
    if (k >= nf) throw ParameterError("rank out of range for n");
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    Permutation p;
    p.order.reserve(static_cast<std::size_t>(n));
    std::uint64_t place = nf;
    for (int i = 0; i < n; ++i) {
        place /= static_cast<std::uint64_t>(n - i);
        const auto idx = static_cast<std::size_t>(k / place);
        k %= place;
        p.order.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return p;
}

std::string perm_label(const Permutation& p) {
    if (p.n() > 26) throw ParameterError("labels defined for n <= 26");
    std::string s;
    s.reserve(p.order.size());
    for (int i : p.order) s.push_back(static_cast<char>('A' + i));
    return s;
}

Permutation parse_label(const std::string& label) {
    Permutation p;
    p.order.reserve(label.size());
    for (char c : label) {
        if (c < 'A' || c > 'Z') throw ParameterError("bad symbol label: " + label);
        p.order.push_back(c - 'A');
    }
    if (!is_valid_order(p.order)) throw ParameterError("bad symbol label: " + label);
    return p;
}

void arrival_order_into(std::span<const double> z, std::span<int> out) {
    const int n = static_cast<int>(z.size());
    for (int i = 0; i < n; ++i)
        if (std::isnan(z[static_cast<std::size_t>(i)])) throw DataError("NaN latency");
    // Insertion sort of indices; strict < keeps equal times in index order.
    for (int i = 0; i < n; ++i) {
        int j = i;
        while (j > 0 && z[static_cast<std::size_t>(i)] < z[static_cast<std::size_t>(out[static_cast<std::size_t>(j - 1)])]) {
            out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j - 1)];
            --j;
        }
        out[static_cast<std::size_t>(j)] = i;
    }
}

Permutation arrival_order(std::span<const double> z) {
    Permutation p;
    p.order.resize(z.size());
    arrival_order_into(z, p.order);
    return p;
}

bool is_valid_order(std::span<const int> order) {
    const int n = static_cast<int>(order.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

}  // namespace roc
