#include "supergraph/io.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "supergraph/error.hpp"

namespace supergraph {

Json graph_to_json(const SimpleGraph& graph) {
  Json j;
  j["n"] = graph.n();
  Json edges = Json::array();
  for (const auto& [a, b] : graph.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  j["labels"] = graph.labels();
  return j;
}

SimpleGraph graph_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    SimpleGraph g(n, std::move(labels));
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) throw InvalidParameter("edge entries must be pairs");
      g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("bad graph JSON: ") + e.what());
  }
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const SimpleGraph& graph, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << dot_escape(name) << "\" {\n";
  for (std::size_t v = 0; v < graph.n(); ++v) {
    out << "  " << v;
    if (!graph.labels().empty()) out << " [label=\"" << dot_escape(graph.labels()[v]) << "\"]";
    out << ";\n";
  }
  for (const auto& [a, b] : graph.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

Json partition_to_json(const Partition& partition) {
  Json j;
  j["n"] = partition.ground_size();
  j["blocks"] = partition.blocks();
  return j;
}

Partition partition_from_json(const Json& j) {
  try {
    return Partition(j.at("n").get<std::size_t>(), j.at("blocks").get<std::vector<std::vector<std::size_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("bad partition JSON: ") + e.what());
  }
}

Json spectrum_to_json(const Spectrum& spectrum) {
  Json list = Json::array();
  for (const auto& e : spectrum.entries()) {
    Json entry;
    if (auto p = std::get_if<std::int64_t>(&e.value)) {
      entry["value"] = *p;
    } else if (auto s = std::get_if<Surd>(&e.value)) {
      entry["value"] = Json{{"r", s->r}, {"d", s->d}, {"sign", s->sign}};
    } else {
      entry["value"] = std::get<double>(e.value);
    }
    entry["multiplicity"] = e.multiplicity;
    list.push_back(std::move(entry));
  }
  return Json{{"eigenvalues", std::move(list)}};
}

Spectrum spectrum_from_json(const Json& j) {
  try {
    std::vector<SpectrumEntry> entries;
    for (const auto& e : j.at("eigenvalues")) {
      const auto& v = e.at("value");
      const auto mult = e.at("multiplicity").get<std::size_t>();
      if (v.is_object())
        entries.push_back({Surd{v.at("r").get<std::int64_t>(), v.at("d").get<std::int64_t>(), v.at("sign").get<int>()}, mult});
      else if (v.is_number_integer())
        entries.push_back({v.get<std::int64_t>(), mult});
      else
        entries.push_back({v.get<double>(), mult});
    }
    return Spectrum(std::move(entries), 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("bad spectrum JSON: ") + e.what());
  }
}

std::string spectrum_to_csv(const Spectrum& spectrum) {
  std::ostringstream out;
  out << "value,multiplicity\n";
  for (const auto& e : spectrum.entries()) {
    if (auto p = std::get_if<std::int64_t>(&e.value)) {
      out << *p;
    } else {
      out << std::setprecision(12) << e.numeric();
    }
    out << "," << e.multiplicity << "\n";
  }
  return out.str();
}

Json polynomial_to_json(const PolynomialZ& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return Json{{"coeffs", std::move(coeffs)}};
}

PolynomialZ polynomial_from_json(const Json& j) {
  try {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return PolynomialZ(std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw InvalidParameter(std::string("bad polynomial coefficient: ") + e.what());
  }
}

FiniteGroup parse_cayley_table(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("#labels:", 0) == 0) {
      std::istringstream ls(line.substr(8));
      std::string name;
      while (ls >> name) labels.push_back(name);
      continue;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!n) {
      long long value = 0;
      std::string rest;
      if (!(ls >> value) || value <= 0 || (ls >> rest)) throw ParseError("expected a positive group order", lineno);
      n = static_cast<std::size_t>(value);
      continue;
    }
    std::vector<std::size_t> row;
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || token[0] == '-') throw ParseError("bad table entry '" + token + "'", lineno);
      if (v >= *n) throw ParseError("table entry " + token + " out of range", lineno);
      row.push_back(static_cast<std::size_t>(v));
    }
    if (row.size() != *n)
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(*n), lineno);
    if (rows.size() == *n) throw ParseError("more than " + std::to_string(*n) + " rows", lineno);
    rows.push_back(std::move(row));
  }
  if (!n) throw ParseError("missing group order", lineno + 1);
  if (rows.size() != *n)
    throw ParseError("expected " + std::to_string(*n) + " rows, got " + std::to_string(rows.size()), lineno + 1);
  if (!labels.empty() && labels.size() != *n)
    throw ParseError("expected " + std::to_string(*n) + " labels, got " + std::to_string(labels.size()), lineno);
  return FiniteGroup::from_cayley_table(std::move(rows), std::move(labels));
}

FiniteGroup read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_cayley_table(in);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

}  // namespace supergraph
