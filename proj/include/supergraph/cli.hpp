#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "supergraph/group.hpp"

namespace supergraph {

// D:n | Q:n | PQ:p,q | cayley:path
struct GroupSpec {
  std::string family;
  std::vector<std::size_t> params;
  std::string path;

  FiniteGroup build() const;
  std::string to_string() const;
};

GroupSpec parse_group_spec(const std::string& text);

// "a..b" or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);

// Entry point behind the `supergraph` executable; args exclude argv[0].
// Returns the process exit code: 0 ok, 1 usage or IO, 2 mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supergraph
