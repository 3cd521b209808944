#pragma once

#include <cstddef>
#include <vector>

namespace supergraph {

class FiniteGroup;

// Equivalence relation on {0, ..., n-1} stored as its classes. Always kept
// in normal form: each block ascending, blocks ordered by their minimum.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidParameter unless the blocks are nonempty, disjoint and
  // cover the ground set.
  Partition(std::size_t ground_size, std::vector<std::vector<std::size_t>> blocks);

  // Blocks are the fibers of `key`; equal keys share a block.
  template <class Key>
  static Partition from_keys(const std::vector<Key>& key);

  std::size_t ground_size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& block(std::size_t i) const { return blocks_[i]; }
  std::size_t block_of(std::size_t x) const { return block_of_[x]; }
  std::vector<std::size_t> sizes() const;

  bool operator==(const Partition& other) const { return n_ == other.n_ && blocks_ == other.blocks_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

template <class Key>
Partition Partition::from_keys(const std::vector<Key>& key) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<Key> seen;
  for (std::size_t x = 0; x < key.size(); ++x) {
    std::size_t b = 0;
    while (b < seen.size() && !(seen[b] == key[x])) ++b;
    if (b == seen.size()) {
      seen.push_back(key[x]);
      blocks.emplace_back();
    }
    blocks[b].push_back(x);
  }
  return Partition(key.size(), std::move(blocks));
}

Partition least_partition(std::size_t n);
Partition greatest_partition(std::size_t n);

// True iff every block of `finer` lies inside a block of `coarser`.
bool refines(const Partition& finer, const Partition& coarser);

Partition order_partition(const FiniteGroup& g);
Partition conjugacy_partition(const FiniteGroup& g);

}  // namespace supergraph
