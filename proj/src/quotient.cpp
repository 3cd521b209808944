#include "supergraph/quotient.hpp"

#include <cmath>
#include <numeric>

#include "supergraph/eigen.hpp"
#include "supergraph/error.hpp"
#include "supergraph/partition.hpp"

namespace supergraph {

QuotientMatrix quotient_matrix(const SimpleGraph& frame, const std::vector<std::size_t>& sizes, int t) {
  if (sizes.size() != frame.n())
    throw ArityMismatch("frame has " + std::to_string(frame.n()) + " vertices, got " +
                        std::to_string(sizes.size()) + " block sizes");
  if (t != 0 && t != 1) throw InvalidParameter("quotient parameter t must be 0 or 1");
  const std::size_t k = sizes.size();
  for (std::size_t s : sizes)
    if (s == 0) throw InvalidParameter("block sizes must be positive");

  QuotientMatrix q{t, sizes, std::vector<std::int64_t>(k, 0), frame, RealMatrix(k), IntMatrix(k)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j : frame.neighbors(i)) q.neighbor_sums[i] += static_cast<std::int64_t>(sizes[j]);

  for (std::size_t i = 0; i < k; ++i) {
    const auto r = static_cast<std::int64_t>(sizes[i]) - 1;
    const std::int64_t diag = r - t * (r + q.neighbor_sums[i]);
    q.symmetric(i, i) = static_cast<double>(diag);
    q.integer_similar(i, i) = diag;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !frame.has_edge(i, j)) continue;
      q.symmetric(i, j) = std::sqrt(static_cast<double>(sizes[i]) * static_cast<double>(sizes[j]));
      q.integer_similar(i, j) = static_cast<std::int64_t>(sizes[j]);
    }
  }
  return q;
}

namespace {

template <class T>
SquareMatrix<T> negated(const SquareMatrix<T>& m) {
  SquareMatrix<T> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = -m(i, j);
  return out;
}

struct Split {
  SimpleGraph frame;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::size_t>> components;
  std::size_t n = 0;
  bool complete_shortcut = false;
};

Split split(const SimpleGraph& graph, const Partition& partition) {
  Split s{compressed_graph(graph, partition), partition.sizes(), {}, graph.n(), false};
  s.components = connected_components(s.frame);
  s.complete_shortcut = s.components.size() == 1 && s.sizes.size() <= 2;
  return s;
}

std::vector<std::size_t> pick(const std::vector<std::size_t>& v, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  for (std::size_t i : idx) out.push_back(v[i]);
  return out;
}

}  // namespace

SuperCharPoly super_adjacency_charpoly_detailed(const SimpleGraph& graph, const Partition& partition) {
  const Split s = split(graph, partition);
  const BigInt n = static_cast<long long>(s.n);
  if (s.complete_shortcut)
    return {PolynomialZ::linear_power(BigInt(-1), s.n - 1) * PolynomialZ::linear_power(n - 1, 1), 1, true};
  PolynomialZ poly = PolynomialZ::linear_power(BigInt(-1), s.n - s.sizes.size());
  for (const auto& comp : s.components) {
    const auto q = quotient_matrix(s.frame.induced(comp), pick(s.sizes, comp), 0);
    poly *= char_poly_integer(q.integer_similar);
  }
  return {poly, s.components.size(), false};
}

SuperCharPoly super_laplacian_charpoly_detailed(const SimpleGraph& graph, const Partition& partition) {
  const Split s = split(graph, partition);
  const BigInt n = static_cast<long long>(s.n);
  if (s.complete_shortcut)
    return {PolynomialZ::x() * PolynomialZ::linear_power(n, s.n - 1), 1, true};
  PolynomialZ poly = PolynomialZ::constant(1);
  for (const auto& comp : s.components) {
    const auto q = quotient_matrix(s.frame.induced(comp), pick(s.sizes, comp), 1);
    poly *= char_poly_integer(negated(q.integer_similar));
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const BigInt root = BigInt(q.neighbor_sums[i]) + static_cast<long long>(q.sizes[i]);
      poly *= PolynomialZ::linear_power(root, q.sizes[i] - 1);
    }
  }
  return {poly, s.components.size(), false};
}

PolynomialZ super_adjacency_charpoly(const SimpleGraph& graph, const Partition& partition) {
  return super_adjacency_charpoly_detailed(graph, partition).poly;
}

PolynomialZ super_laplacian_charpoly(const SimpleGraph& graph, const Partition& partition) {
  return super_laplacian_charpoly_detailed(graph, partition).poly;
}

Spectrum super_adjacency_spectrum(const SimpleGraph& graph, const Partition& partition) {
  const auto q = quotient_matrix(compressed_graph(graph, partition), partition.sizes(), 0);
  std::vector<double> values = jacobi_eigenvalues_sorted(q.symmetric);
  values.insert(values.end(), graph.n() - partition.block_count(), -1.0);
  return Spectrum::group(std::move(values), 1e-8 * std::max(1.0, static_cast<double>(graph.n())));
}

Spectrum super_laplacian_spectrum(const SimpleGraph& graph, const Partition& partition) {
  const auto q = quotient_matrix(compressed_graph(graph, partition), partition.sizes(), 1);
  std::vector<double> values = jacobi_eigenvalues_sorted(negated(q.symmetric));
  for (std::size_t i = 0; i < q.sizes.size(); ++i)
    values.insert(values.end(), q.sizes[i] - 1,
                  static_cast<double>(q.neighbor_sums[i] + static_cast<std::int64_t>(q.sizes[i])));
  return Spectrum::group(std::move(values), 1e-8 * std::max(1.0, static_cast<double>(graph.n())));
}

namespace {

void require_star_sizes(const std::vector<std::size_t>& sizes) {
  if (sizes.size() < 2) throw InvalidParameter("star join needs at least 2 blocks");
  for (std::size_t s : sizes)
    if (s == 0) throw InvalidParameter("block sizes must be positive");
}

}  // namespace

PolynomialZ star_join_adjacency_charpoly(const std::vector<std::size_t>& sizes) {
  require_star_sizes(sizes);
  const std::size_t k = sizes.size();
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  auto shifted = [&](std::size_t i) {  // x - n_i + 1
    return PolynomialZ::linear_power(BigInt(static_cast<long long>(sizes[i])) - 1, 1);
  };
  PolynomialZ all = PolynomialZ::constant(1);
  for (std::size_t i = 0; i < k; ++i) all *= shifted(i);
  PolynomialZ correction;
  for (std::size_t l = 1; l < k; ++l) {
    PolynomialZ term = PolynomialZ::constant(BigInt(static_cast<long long>(sizes[0] * sizes[l])));
    for (std::size_t i = 1; i < k; ++i)
      if (i != l) term *= shifted(i);
    correction += term;
  }
  return PolynomialZ::linear_power(BigInt(-1), n - k) * (all - correction);
}

Spectrum uniform_star_join_adjacency_spectrum(std::int64_t l, std::int64_t m, std::int64_t k) {
  if (l < 1 || m < 1 || k < 2) throw InvalidParameter("uniform star join needs l, m >= 1 and k >= 2");
  const std::int64_t r = m + l - 2;
  const std::int64_t d = m * m + l * l + (4 * k - 6) * m * l;
  std::vector<SpectrumEntry> entries;
  const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
  for (int sign : {-1, 1}) {
    if (root * root == d && (r + sign * root) % 2 == 0)
      entries.push_back({(r + sign * root) / 2, 1});
    else
      entries.push_back({Surd{r, d, sign}, 1});
  }
  entries.push_back({std::int64_t{-1}, static_cast<std::size_t>(m * (k - 1) + l - k)});
  entries.push_back({m - 1, static_cast<std::size_t>(k - 2)});
  return Spectrum(std::move(entries));
}

Spectrum star_join_laplacian_spectrum(const std::vector<std::size_t>& sizes) {
  require_star_sizes(sizes);
  const std::size_t k = sizes.size();
  const auto n = static_cast<std::int64_t>(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}));
  const auto n1 = static_cast<std::int64_t>(sizes[0]);
  std::vector<std::pair<std::int64_t, std::size_t>> values{
      {0, 1}, {n, 1}, {n1, k - 2}, {n, sizes[0] - 1}};
  for (std::size_t i = 1; i < k; ++i) values.emplace_back(n1 + static_cast<std::int64_t>(sizes[i]), sizes[i] - 1);
  return Spectrum::integers(values);
}

}  // namespace supergraph
