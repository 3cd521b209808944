#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "supergraph/graph.hpp"
#include "supergraph/group.hpp"
#include "supergraph/partition.hpp"
#include "supergraph/polynomial.hpp"
#include "supergraph/spectrum.hpp"

namespace supergraph {

using Json = nlohmann::ordered_json;

// {"n": int, "edges": [[i,j],...], "labels": [...]}, edges i<j sorted.
Json graph_to_json(const SimpleGraph& graph);
SimpleGraph graph_from_json(const Json& j);
std::string graph_to_dot(const SimpleGraph& graph, const std::string& name = "G");

// {"n": int, "blocks": [[int,...],...]}
Json partition_to_json(const Partition& partition);
Partition partition_from_json(const Json& j);

// {"eigenvalues": [{"value": number | {"r","d","sign"}, "multiplicity": int}]}
Json spectrum_to_json(const Spectrum& spectrum);
Spectrum spectrum_from_json(const Json& j);
// Two columns value,multiplicity; integers verbatim, others with 12
// significant digits.
std::string spectrum_to_csv(const Spectrum& spectrum);

// {"coeffs": ["...", ...]} ascending, decimal strings.
Json polynomial_to_json(const PolynomialZ& p);
PolynomialZ polynomial_from_json(const Json& j);

// First line n, then n rows of n indices; an optional "#labels:" line
// carries space-separated element names. Errors report the 1-based line.
FiniteGroup parse_cayley_table(std::istream& in);
FiniteGroup read_cayley_file(const std::string& path);

Json read_json_file(const std::string& path);

}  // namespace supergraph
