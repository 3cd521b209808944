#include "supergraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

#include "supergraph/error.hpp"
#include "supergraph/group.hpp"
#include "supergraph/partition.hpp"

namespace supergraph {

SimpleGraph::SimpleGraph(std::size_t n, std::vector<std::string> labels)
    : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {
  set_labels(std::move(labels));
}

void SimpleGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_)
    throw SizeMismatch("got " + std::to_string(labels.size()) + " labels for " + std::to_string(n_) + " vertices");
  labels_ = std::move(labels);
}

void SimpleGraph::add_edge(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_)
    throw InvalidParameter("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  if (i == j) throw InvalidParameter("loop at vertex " + std::to_string(i));
  rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  rows_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t SimpleGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(rows_[v * words_ + w]));
  return d;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (has_edge(v, u)) out.push_back(u);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

IntMatrix SimpleGraph::adjacency() const {
  IntMatrix a(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) a(i, j) = has_edge(i, j) ? 1 : 0;
  return a;
}

IntMatrix SimpleGraph::laplacian() const {
  IntMatrix l(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) l(i, j) = has_edge(i, j) ? -1 : 0;
    l(i, i) = static_cast<std::int64_t>(degree(i));
  }
  return l;
}

SimpleGraph SimpleGraph::induced(const std::vector<std::size_t>& vertices) const {
  std::vector<std::string> labels;
  if (!labels_.empty())
    for (std::size_t v : vertices) labels.push_back(labels_[v]);
  SimpleGraph out(vertices.size(), std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

SimpleGraph SimpleGraph::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != n_) throw SizeMismatch("permutation of wrong length");
  std::vector<char> seen(n_);
  for (std::size_t v : order) {
    if (v >= n_ || seen[v]++) throw InvalidParameter("not a permutation of the vertex set");
  }
  return induced(order);
}

std::vector<std::uint64_t> SimpleGraph::closed_neighborhood(std::size_t v) const {
  std::vector<std::uint64_t> out(rows_.begin() + v * words_, rows_.begin() + (v + 1) * words_);
  out[v / 64] |= std::uint64_t{1} << (v % 64);
  return out;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph empty_graph(std::size_t n) { return SimpleGraph(n); }

SimpleGraph star_graph(std::size_t k) {
  if (k < 2) throw InvalidParameter("star graph needs at least 2 vertices");
  SimpleGraph g(k);
  for (std::size_t v = 1; v < k; ++v) g.add_edge(0, v);
  return g;
}

SimpleGraph commuting_graph(const FiniteGroup& group) {
  SimpleGraph g(group.order(), group.labels());
  for (std::size_t i = 0; i < group.order(); ++i)
    for (std::size_t j = i + 1; j < group.order(); ++j)
      if (group.commute(i, j)) g.add_edge(i, j);
  return g;
}

namespace {

void require_same_size(const SimpleGraph& graph, const Partition& partition) {
  if (graph.n() != partition.ground_size())
    throw SizeMismatch("graph has " + std::to_string(graph.n()) + " vertices, partition covers " +
                       std::to_string(partition.ground_size()));
}

}  // namespace

SimpleGraph compressed_graph(const SimpleGraph& graph, const Partition& partition) {
  require_same_size(graph, partition);
  SimpleGraph out(partition.block_count());
  for (const auto& [i, j] : graph.edges()) {
    const std::size_t bi = partition.block_of(i);
    const std::size_t bj = partition.block_of(j);
    if (bi != bj) out.add_edge(bi, bj);
  }
  return out;
}

SimpleGraph super_graph(const SimpleGraph& graph, const Partition& partition) {
  const SimpleGraph quotient = compressed_graph(graph, partition);
  SimpleGraph out(graph.n(), graph.labels());
  for (std::size_t x = 0; x < graph.n(); ++x) {
    for (std::size_t y = x + 1; y < graph.n(); ++y) {
      const std::size_t bx = partition.block_of(x);
      const std::size_t by = partition.block_of(y);
      if (bx == by || quotient.has_edge(bx, by)) out.add_edge(x, y);
    }
  }
  return out;
}

SimpleGraph generalized_join(const SimpleGraph& frame, const std::vector<SimpleGraph>& parts) {
  if (parts.size() != frame.n())
    throw ArityMismatch("frame has " + std::to_string(frame.n()) + " vertices but " +
                        std::to_string(parts.size()) + " parts were given");
  std::vector<std::size_t> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + parts[i].n();
  SimpleGraph out(offset.back());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& [u, v] : parts[i].edges()) out.add_edge(offset[i] + u, offset[i] + v);
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!frame.has_edge(i, j)) continue;
      for (std::size_t u = offset[i]; u < offset[i + 1]; ++u)
        for (std::size_t v = offset[j]; v < offset[j + 1]; ++v) out.add_edge(u, v);
    }
  }
  return out;
}

SimpleGraph clique_join(const SimpleGraph& frame, const std::vector<std::size_t>& sizes) {
  std::vector<SimpleGraph> parts;
  parts.reserve(sizes.size());
  for (std::size_t s : sizes) parts.push_back(complete_graph(s));
  return generalized_join(frame, parts);
}

std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& graph) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(graph.n());
  for (std::size_t root = 0; root < graph.n(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t v : graph.neighbors(comp[head])) {
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SimpleGraph& graph) {
  if (graph.n() == 0) throw InvalidParameter("connectivity of the empty graph is undefined");
  return connected_components(graph).size() == 1;
}

bool is_spanning_subgraph(const SimpleGraph& sub, const SimpleGraph& super) {
  if (sub.n() != super.n())
    throw SizeMismatch("graphs on " + std::to_string(sub.n()) + " and " + std::to_string(super.n()) + " vertices");
  for (const auto& [i, j] : sub.edges())
    if (!super.has_edge(i, j)) return false;
  return true;
}

std::vector<std::size_t> block_concatenation_order(const Partition& partition) {
  std::vector<std::size_t> order;
  order.reserve(partition.ground_size());
  for (const auto& b : partition.blocks()) order.insert(order.end(), b.begin(), b.end());
  return order;
}

namespace {

// Colour refinement on the weighted quotient, seeded by (degree, size).
// Colours are ranks of invariant signatures, so they do not depend on the
// input labelling.
std::vector<std::size_t> refine_colors(const SimpleGraph& q, const std::vector<std::size_t>& sizes) {
  const std::size_t k = q.n();
  using Signature = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
  std::vector<std::size_t> color(k, 0);
  std::size_t distinct = 0;
  for (std::size_t round = 0; round <= k; ++round) {
    std::vector<Signature> sig(k);
    for (std::size_t v = 0; v < k; ++v) {
      std::vector<std::size_t> nbr;
      for (std::size_t u : q.neighbors(v)) nbr.push_back(color[u]);
      std::sort(nbr.begin(), nbr.end());
      // The previous colour leads so refinement never reorders earlier classes.
      sig[v] = {color[v], 0, std::move(nbr)};
      if (round == 0) sig[v] = {q.degree(v), sizes[v], {}};
    }
    std::vector<Signature> ranked = sig;
    std::sort(ranked.begin(), ranked.end());
    ranked.erase(std::unique(ranked.begin(), ranked.end()), ranked.end());
    for (std::size_t v = 0; v < k; ++v)
      color[v] = static_cast<std::size_t>(std::lower_bound(ranked.begin(), ranked.end(), sig[v]) - ranked.begin());
    if (ranked.size() == distinct) break;
    distinct = ranked.size();
  }
  return color;
}

}  // namespace

CliqueJoinForm twin_canonical_form(const SimpleGraph& graph, std::size_t max_labelings) {
  std::map<std::vector<std::uint64_t>, std::size_t> class_of_key;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < graph.n(); ++v) {
    auto [it, fresh] = class_of_key.try_emplace(graph.closed_neighborhood(v), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  const std::size_t k = classes.size();
  SimpleGraph quotient(k);
  std::vector<std::size_t> sizes(k);
  for (std::size_t i = 0; i < k; ++i) {
    sizes[i] = classes[i].size();
    for (std::size_t j = i + 1; j < k; ++j)
      if (graph.has_edge(classes[i].front(), classes[j].front())) quotient.add_edge(i, j);
  }

  const std::vector<std::size_t> color = refine_colors(quotient, sizes);
  std::vector<std::vector<std::size_t>> cells;
  {
    std::size_t ncolors = k == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    cells.resize(ncolors);
    for (std::size_t v = 0; v < k; ++v) cells[color[v]].push_back(v);
  }

  double labelings = 1.0;
  for (const auto& c : cells)
    for (std::size_t f = 2; f <= c.size(); ++f) labelings *= static_cast<double>(f);
  if (labelings > static_cast<double>(max_labelings))
    throw CanonicalAmbiguity("resolving the quotient needs " + std::to_string(labelings) + " labelings");

  // Pick the cell-respecting labelling with lexicographically smallest
  // upper-triangular adjacency string.
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  std::vector<char> best_key;
  auto key_of = [&](const std::vector<std::size_t>& order) {
    std::vector<char> key;
    key.reserve(k * (k - 1) / 2);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) key.push_back(quotient.has_edge(order[i], order[j]) ? 1 : 0);
    return key;
  };
  auto search = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      auto key = key_of(current);
      if (best.empty() || key < best_key) {
        best = current;
        best_key = std::move(key);
      }
      return;
    }
    std::vector<std::size_t> members = cells[cell];
    do {
      current.insert(current.end(), members.begin(), members.end());
      self(self, cell + 1);
      current.resize(current.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  };
  search(search, 0);

  CliqueJoinForm form{quotient.permuted(best), {}, {}};
  for (std::size_t v : best) {
    form.sizes.push_back(sizes[v]);
    form.classes.push_back(classes[v]);
  }
  return form;
}

std::optional<std::vector<std::size_t>> star_frame_sizes(const CliqueJoinForm& form) {
  const std::size_t k = form.quotient.n();
  if (k < 2 || form.quotient.edge_count() != k - 1) return std::nullopt;
  for (std::size_t c = 0; c < k; ++c) {
    if (form.quotient.degree(c) != k - 1) continue;
    std::vector<std::size_t> out{form.sizes[c]};
    for (std::size_t v = 0; v < k; ++v)
      if (v != c) out.push_back(form.sizes[v]);
    return out;
  }
  return std::nullopt;
}

std::string describe(const CliqueJoinForm& form) {
  const std::size_t k = form.quotient.n();
  if (k == 0) return "K_0";
  if (k == 1) return "K_" + std::to_string(form.sizes[0]);
  auto cliques = [&](const std::vector<std::size_t>& order) {
    std::string out = "[";
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) out += ",";
      out += "K_" + std::to_string(form.sizes[order[i]]);
    }
    return out + "]";
  };
  for (std::size_t c = 0; c < k; ++c) {
    if (form.quotient.degree(c) != k - 1 || form.quotient.edge_count() != k - 1) continue;
    std::vector<std::size_t> order{c};
    std::vector<std::size_t> leaves;
    for (std::size_t v = 0; v < k; ++v)
      if (v != c) leaves.push_back(v);
    std::stable_sort(leaves.begin(), leaves.end(),
                     [&](std::size_t a, std::size_t b) { return form.sizes[a] < form.sizes[b]; });
    order.insert(order.end(), leaves.begin(), leaves.end());
    return "K_{1," + std::to_string(k - 1) + "}" + cliques(order);
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::string frame = "G" + std::to_string(k) + "{";
  bool first = true;
  for (const auto& [i, j] : form.quotient.edges()) {
    if (!first) frame += ",";
    first = false;
    frame += std::to_string(i) + "-" + std::to_string(j);
  }
  return frame + "}" + cliques(order);
}

}  // namespace supergraph
