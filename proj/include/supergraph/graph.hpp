#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supergraph/matrix.hpp"

namespace supergraph {

class FiniteGroup;
class Partition;

// Finite simple undirected graph on vertices 0..n-1, stored as bit rows.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0, std::vector<std::string> labels = {});

  std::size_t n() const { return n_; }
  bool has_edge(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  // Throws InvalidParameter on loops or out-of-range endpoints.
  void add_edge(std::size_t i, std::size_t j);

  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  // Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  IntMatrix adjacency() const;
  IntMatrix laplacian() const;

  SimpleGraph induced(const std::vector<std::size_t>& vertices) const;
  // New vertex i is old vertex order[i]; `order` must be a permutation.
  SimpleGraph permuted(const std::vector<std::size_t>& order) const;

  // Closed neighbourhood N[v] as raw bit words.
  std::vector<std::uint64_t> closed_neighborhood(std::size_t v) const;

  // Vertex count and edge set; labels are ignored.
  bool operator==(const SimpleGraph& other) const { return n_ == other.n_ && rows_ == other.rows_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph empty_graph(std::size_t n);
// K_{1,k-1} on k vertices with vertex 0 at the centre.
SimpleGraph star_graph(std::size_t k);

// Vertices are the group elements in enumeration order; i ~ j iff they commute.
SimpleGraph commuting_graph(const FiniteGroup& g);

// x ~ y iff x != y and they share a block or some pair across their blocks
// is adjacent in `graph`.
SimpleGraph super_graph(const SimpleGraph& graph, const Partition& partition);
// One vertex per block; blocks adjacent iff some cross edge exists.
SimpleGraph compressed_graph(const SimpleGraph& graph, const Partition& partition);

// Disjoint union of `parts` with complete bipartite links between parts i
// and j whenever i ~ j in `frame`. Vertices are numbered part by part.
SimpleGraph generalized_join(const SimpleGraph& frame, const std::vector<SimpleGraph>& parts);
// generalized_join(frame, [K_{sizes[0]}, K_{sizes[1]}, ...])
SimpleGraph clique_join(const SimpleGraph& frame, const std::vector<std::size_t>& sizes);

bool is_connected(const SimpleGraph& graph);
std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& graph);
bool is_spanning_subgraph(const SimpleGraph& sub, const SimpleGraph& super);

// Vertex order that lists partition blocks one after the other.
std::vector<std::size_t> block_concatenation_order(const Partition& partition);

// Canonical description of a graph as a generalized join of cliques:
// vertices grouped into classes of equal closed neighbourhoods, the
// quotient relabelled canonically. Two graphs are isomorphic iff their
// forms compare equal.
struct CliqueJoinForm {
  SimpleGraph quotient;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::size_t>> classes;  // original vertices, canonical order

  bool operator==(const CliqueJoinForm& other) const {
    return quotient == other.quotient && sizes == other.sizes;
  }
};

// Throws CanonicalAmbiguity if resolving symmetric classes would need more
// than `max_labelings` candidate labelings.
CliqueJoinForm twin_canonical_form(const SimpleGraph& graph, std::size_t max_labelings = 2'000'000);

// Block sizes centre-first when the quotient is a star K_{1,k-1} (k >= 2);
// leaves keep their canonical order.
std::optional<std::vector<std::size_t>> star_frame_sizes(const CliqueJoinForm& form);

// Human-readable shape such as "K_8", "K_{1,3}[K_2,K_2,K_2,K_2]".
std::string describe(const CliqueJoinForm& form);

}  // namespace supergraph
