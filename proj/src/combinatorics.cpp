#include "cumulant/combinatorics.hpp"

#include <stdexcept>

namespace cumulant {

namespace {

void partitions_rec(int position, int n, std::vector<int>& growth, int blocks, Blocks& scratch,
                    const std::function<void(const Blocks&)>& visit) {
  if (position == n) {
    scratch.assign(blocks, {});
    for (int i = 0; i < n; ++i) scratch[growth[i]].push_back(i);
    visit(scratch);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    growth[position] = b;
    partitions_rec(position + 1, n, growth, b == blocks ? blocks + 1 : blocks, scratch, visit);
  }
}

void subsets_rec(int start, int n, int k, std::vector<int>& chosen,
                 const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(chosen.size()) == k) {
    visit(chosen);
    return;
  }
  const int remaining = k - static_cast<int>(chosen.size());
  for (int i = start; i <= n - remaining; ++i) {
    chosen.push_back(i);
    subsets_rec(i + 1, n, k, chosen, visit);
    chosen.pop_back();
  }
}

}  // namespace

void for_each_set_partition(int n, const std::function<void(const Blocks&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative set size");
  std::vector<int> growth(n, 0);
  Blocks scratch;
  partitions_rec(0, n, growth, 0, scratch, visit);
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> chosen;
  chosen.reserve(k);
  subsets_rec(0, n, k, chosen, visit);
}

std::uint64_t bell_number(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto value : row) next.push_back(next.back() + value);
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::uint64_t factorial(int n) {
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace cumulant
