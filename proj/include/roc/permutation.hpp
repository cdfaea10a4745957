#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace roc {

// A channel symbol: the firing order of the n neurons. order[k] is the index
// of the neuron that fires k-th. rank() is the lexicographic rank in [0, n!).
struct Permutation {
    std::vector<int> order;

    int n() const { return static_cast<int>(order.size()); }
    bool operator==(const Permutation&) const = default;
};

// n! as uint64; requires 0 <= n <= 20.
std::uint64_t factorial(int n);

// Lexicographic (Lehmer-code) rank bijection.
std::uint64_t perm_to_index(const Permutation& p);
Permutation index_to_perm(std::uint64_t k, int n);

// Rank of an order given as a raw span, without constructing a Permutation.
std::uint64_t order_rank(std::span<const int> order);

// Label round-trip: neuron 0 = 'A'. Requires n <= 26.
std::string perm_label(const Permutation& p);
Permutation parse_label(const std::string& label);

// Firing order of a latency vector: neuron indices by increasing time,
// ties broken toward the lower index. NaN entries raise DataError.
Permutation arrival_order(std::span<const double> z);

// In-place variant writing into out[0..n); same contract, no allocation.
void arrival_order_into(std::span<const double> z, std::span<int> out);

// True iff order is a bijection on {0..n-1}.
bool is_valid_order(std::span<const int> order);

}  // namespace roc
