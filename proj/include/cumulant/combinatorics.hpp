#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace cumulant {

/// A set partition of {0..n-1}. Blocks are sorted internally and listed in
/// order of their smallest element.
using Blocks = std::vector<std::vector<int>>;

/// Visits every set partition of {0..n-1} exactly once (Bell(n) calls),
/// enumerated through restricted growth strings.
void for_each_set_partition(int n, const std::function<void(const Blocks&)>& visit);

/// Visits every size-k subset of {0..n-1} as a sorted position list, in
/// lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit);

std::uint64_t bell_number(int n);
std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

}  // namespace cumulant
