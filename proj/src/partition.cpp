#include "supergraph/partition.hpp"

#include <algorithm>
#include <limits>

#include "supergraph/error.hpp"
#include "supergraph/group.hpp"

namespace supergraph {

Partition::Partition(std::size_t ground_size, std::vector<std::vector<std::size_t>> blocks)
    : n_(ground_size), blocks_(std::move(blocks)) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  block_of_.assign(n_, kUnset);
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidParameter("partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t x : blocks_[i]) {
      if (x >= n_) throw InvalidParameter("element " + std::to_string(x) + " outside ground set of size " + std::to_string(n_));
      if (block_of_[x] != kUnset) throw InvalidParameter("element " + std::to_string(x) + " appears in two blocks");
      block_of_[x] = i;
    }
  }
  for (std::size_t x = 0; x < n_; ++x)
    if (block_of_[x] == kUnset) throw InvalidParameter("element " + std::to_string(x) + " is not covered");
}

std::vector<std::size_t> Partition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.size());
  return out;
}

Partition least_partition(std::size_t n) {
  if (n == 0) throw InvalidParameter("partition needs a nonempty ground set");
  std::vector<std::vector<std::size_t>> blocks(n);
  for (std::size_t x = 0; x < n; ++x) blocks[x] = {x};
  return Partition(n, std::move(blocks));
}

Partition greatest_partition(std::size_t n) {
  if (n == 0) throw InvalidParameter("partition needs a nonempty ground set");
  std::vector<std::size_t> all(n);
  for (std::size_t x = 0; x < n; ++x) all[x] = x;
  return Partition(n, {std::move(all)});
}

bool refines(const Partition& finer, const Partition& coarser) {
  if (finer.ground_size() != coarser.ground_size())
    throw SizeMismatch("partitions on " + std::to_string(finer.ground_size()) + " and " +
                       std::to_string(coarser.ground_size()) + " points");
  for (const auto& b : finer.blocks()) {
    const std::size_t target = coarser.block_of(b.front());
    for (std::size_t x : b)
      if (coarser.block_of(x) != target) return false;
  }
  return true;
}

Partition order_partition(const FiniteGroup& g) { return Partition::from_keys(element_orders(g)); }

Partition conjugacy_partition(const FiniteGroup& g) { return conjugacy_classes(g); }

}  // namespace supergraph
