#include "supergraph/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "supergraph/eigen.hpp"
#include "supergraph/error.hpp"
#include "supergraph/graph.hpp"
#include "supergraph/io.hpp"
#include "supergraph/partition.hpp"
#include "supergraph/quotient.hpp"
#include "supergraph/theorems.hpp"

namespace supergraph {

namespace {

std::size_t parse_count(const std::string& text, std::size_t offset) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("expected a positive integer, got '" + text + "'", offset);
  return std::stoull(text);
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("group spec needs FAMILY:PARAMS", text.size());
  GroupSpec spec;
  spec.family = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (spec.family == "cayley") {
    if (rest.empty()) throw ParseError("cayley spec needs a file path", colon + 1);
    spec.path = rest;
    return spec;
  }
  if (spec.family != "D" && spec.family != "Q" && spec.family != "PQ")
    throw ParseError("unknown group family '" + spec.family + "'", 0);
  std::size_t start = 0;
  for (;;) {
    const auto comma = rest.find(',', start);
    const std::string piece = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    spec.params.push_back(parse_count(piece, colon + 1 + start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const std::size_t want = spec.family == "PQ" ? 2 : 1;
  if (spec.params.size() != want)
    throw ParseError(spec.family + " takes " + std::to_string(want) + " parameter(s)", colon + 1);
  return spec;
}

FiniteGroup GroupSpec::build() const {
  if (family == "D") return dihedral(params.at(0));
  if (family == "Q") return generalized_quaternion(params.at(0));
  if (family == "PQ") return semidirect_pq(params.at(0), params.at(1));
  if (family == "cayley") return read_cayley_file(path);
  throw InvalidParameter("unknown group family '" + family + "'");
}

std::string GroupSpec::to_string() const {
  if (family == "cayley") return "cayley:" + path;
  std::string out = family + ":";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto number = [&](const std::string& s, std::size_t offset) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer in range '" + text + "'", offset);
    }
    if (used != s.size()) throw ParseError("trailing characters in range '" + text + "'", offset + used);
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = number(text, 0);
    return {v, v};
  }
  const auto lo = number(text.substr(0, dots), 0);
  const auto hi = number(text.substr(dots + 2), dots + 2);
  if (lo > hi) throw ParseError("empty range '" + text + "'", 0);
  return {lo, hi};
}

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
};

struct GroupOptions {
  std::string group;
  std::string relation = "conjugacy";
  std::string partition_file;
};

struct Built {
  GroupSpec spec;
  FiniteGroup group;
  SimpleGraph commuting;
  Partition partition;
  SimpleGraph graph;
};

Built build(const GroupOptions& o) {
  GroupSpec spec = parse_group_spec(o.group);
  FiniteGroup g = spec.build();
  SimpleGraph c = commuting_graph(g);
  Partition p;
  if (o.relation == "conjugacy")
    p = conjugacy_partition(g);
  else if (o.relation == "order")
    p = order_partition(g);
  else if (o.relation == "none")
    p = least_partition(g.order());
  else if (o.relation == "file") {
    if (o.partition_file.empty()) throw InvalidParameter("--relation file needs --partition");
    p = partition_from_json(read_json_file(o.partition_file));
    if (p.ground_size() != g.order())
      throw SizeMismatch("partition covers " + std::to_string(p.ground_size()) + " elements, group has " +
                         std::to_string(g.order()));
  } else {
    throw InvalidParameter("unknown relation '" + o.relation + "'");
  }
  SimpleGraph s = super_graph(c, p);
  return Built{std::move(spec), std::move(g), std::move(c), std::move(p), std::move(s)};
}

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out;
}

std::string frame_name(const SimpleGraph& frame) {
  const std::size_t k = frame.n();
  if (frame.edge_count() == k * (k - 1) / 2) return "K_" + std::to_string(k);
  if (k >= 3 && frame.edge_count() == k - 1)
    for (std::size_t c = 0; c < k; ++c)
      if (frame.degree(c) == k - 1) return "K_{1," + std::to_string(k - 1) + "}";
  std::string out = "G" + std::to_string(k) + "{";
  bool first = true;
  for (const auto& [i, j] : frame.edges()) {
    out += (first ? "" : ",") + std::to_string(i) + "-" + std::to_string(j);
    first = false;
  }
  return out + "}";
}

void write_artifact(const std::string& text, const std::string& path, Context& ctx) {
  if (path.empty()) {
    ctx.out << text;
    if (!text.empty() && text.back() != '\n') ctx.out << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << "\n";
}

int cmd_graph(const GroupOptions& go, const std::string& format, const std::string& output, Context& ctx) {
  Built b = build(go);
  b.graph.set_labels(b.group.labels());
  const SimpleGraph compressed = compressed_graph(b.commuting, b.partition);
  const CliqueJoinForm form = twin_canonical_form(b.graph);

  std::ostream& info = output.empty() ? ctx.err : ctx.out;
  info << "group: " << b.spec.to_string() << " (order " << b.group.order() << ")\n"
       << "relation: " << go.relation << "\n"
       << "vertices: " << b.graph.n() << "\n"
       << "edges: " << b.graph.edge_count() << "\n"
       << "class sizes: " << join_sizes(b.partition.sizes()) << "\n"
       << "compressed: " << frame_name(compressed) << " (" << compressed.n() << " vertices, "
       << compressed.edge_count() << " edges)\n"
       << "twin classes: " << join_sizes(form.sizes) << "\n"
       << "structure: " << describe(form) << "\n";

  const std::string name = go.relation == "none" ? "commuting" : "super_" + go.relation;
  if (format == "dot") {
    write_artifact(graph_to_dot(b.graph, name), output, ctx);
  } else {
    Json j = graph_to_json(b.graph);
    j["group"] = b.spec.to_string();
    j["relation"] = go.relation;
    j["partition"] = partition_to_json(b.partition);
    j["compressed"] = graph_to_json(compressed);
    j["structure"] = describe(form);
    write_artifact(j.dump(2), output, ctx);
  }
  return 0;
}

// Claim whose displayed formula covers this (group, relation, matrix), with
// the matching parameters.
struct ClosedClaim {
  std::string claim;
  Json params;
};

std::optional<ClosedClaim> recognize(const GroupSpec& spec, const std::string& relation, bool laplacian) {
  const bool order = relation == "order";
  const bool conj = relation == "conjugacy";
  if (!order && !conj) return std::nullopt;
  const std::string base = laplacian ? "Thm4.2" : "Thm4.1";
  if (spec.family == "D") {
    const auto n = static_cast<std::int64_t>(spec.params[0]);
    if (n % 2 == 1) return ClosedClaim{base + "(i)", Json{{"n", n}}};
    if (conj) return ClosedClaim{laplacian ? "S4.2-lap" : "S4.2-adj", Json{{"family", "Dc"}, {"m", n / 2}}};
  }
  if (spec.family == "Q") {
    const auto n = static_cast<std::int64_t>(spec.params[0]);
    if (order && n % 2 == 1) return ClosedClaim{base + "(ii)", Json{{"n", n}}};
    if (conj && n >= 2) return ClosedClaim{laplacian ? "S4.2-lap" : "S4.2-adj", Json{{"family", "Qc"}, {"m", n}}};
  }
  if (spec.family == "PQ")
    return ClosedClaim{base + "(iii)",
                       Json{{"p", static_cast<std::int64_t>(spec.params[0])}, {"q", static_cast<std::int64_t>(spec.params[1])}}};
  return std::nullopt;
}

// Closed-form spectrum for the group's super graph. Complete graphs and
// the conjugacy Laplacian of D_4m / Q_4m go through the clique-join
// formulas; everything else is a displayed formula.
std::optional<Spectrum> closed_spectrum(const Built& b, const std::string& relation, bool laplacian, Json& source) {
  const GroupSpec& spec = b.spec;
  const std::int64_t n = static_cast<std::int64_t>(b.graph.n());
  const bool even_order_family = (spec.family == "D" && spec.params[0] % 2 == 0 && spec.params[0] >= 4) ||
                                 (spec.family == "Q" && spec.params[0] % 2 == 0);
  if (relation == "order" && even_order_family) {
    source = "complete graph K_" + std::to_string(n);
    return laplacian ? Spectrum::integers({{0, 1}, {n, static_cast<std::size_t>(n - 1)}})
                     : Spectrum::integers({{-1, static_cast<std::size_t>(n - 1)}, {n - 1, 1}});
  }
  const auto claim = recognize(spec, relation, laplacian);
  if (!claim) return std::nullopt;
  if (claim->claim == "S4.2-lap") {
    const auto m = static_cast<std::size_t>(claim->params["m"].get<std::int64_t>());
    source = "star join K_{1,3}[K_2,K_" + std::to_string(m) + ",K_" + std::to_string(m) + ",K_" +
             std::to_string(2 * m - 2) + "]";
    return star_join_laplacian_spectrum({2, m, m, 2 * m - 2});
  }
  source = Json{{"claim", claim->claim}, {"params", claim->params}};
  const ClosedForm form = closed_form(claim->claim, claim->params);
  if (const auto* f = std::get_if<FactoredPolynomial>(&form)) return f->spectrum();
  return std::get<Spectrum>(form);
}

struct SpectrumOptions {
  std::string matrix = "adjacency";
  std::string method = "jacobi";
  std::string format = "json";
  std::string output;
  bool compare = false;
  std::size_t exact_limit = 64;
  double tol = 1e-8;
};

std::string polynomial_csv(const PolynomialZ& p) {
  std::ostringstream out;
  out << "degree,coefficient\n";
  for (long k = p.degree(); k >= 0; --k) out << k << "," << p.coeff(static_cast<std::size_t>(k)) << "\n";
  return out.str();
}

int cmd_spectrum_compare(const Built& b, const GroupOptions& go, const SpectrumOptions& so, Context& ctx) {
  const bool laplacian = so.matrix == "laplacian";
  const IntMatrix m = laplacian ? b.graph.laplacian() : b.graph.adjacency();
  const std::size_t n = m.size();
  const double tol = so.tol;

  const Spectrum jac = jacobi_eigenvalues(m.cast<double>());
  const PolynomialZ quotient = laplacian ? super_laplacian_charpoly(b.commuting, b.partition)
                                         : super_adjacency_charpoly(b.commuting, b.partition);
  const Spectrum quotient_spec = laplacian ? super_laplacian_spectrum(b.commuting, b.partition)
                                           : super_adjacency_spectrum(b.commuting, b.partition);
  Json source;
  const auto closed = closed_spectrum(b, go.relation, laplacian, source);

  struct Row {
    std::string left, right;
    bool ok;
  };
  std::vector<Row> rows;
  auto same = [&](const Spectrum& a, const Spectrum& c) { return a.dimension() == c.dimension() && multiset_match(a, c, tol); };
  rows.push_back({"jacobi", "quotient spectrum", same(jac, quotient_spec)});
  if (n <= so.exact_limit) rows.push_back({"exact charpoly", "quotient charpoly", char_poly_integer(m) == quotient});
  if (closed) {
    rows.push_back({"closed", "jacobi", same(*closed, jac)});
    if (closed->all_integer() && closed->dimension() == n)
      rows.push_back({"closed charpoly", "quotient charpoly", closed->integer_char_poly() == quotient});
  }

  bool all_ok = true;
  Json j{{"group", b.spec.to_string()}, {"relation", go.relation}, {"matrix", so.matrix}, {"vertices", n}};
  Json checks = Json::array();
  for (const auto& r : rows) {
    all_ok = all_ok && r.ok;
    checks.push_back(Json{{"lhs", r.left}, {"rhs", r.right}, {"agree", r.ok}});
  }
  j["jacobi"] = spectrum_to_json(jac);
  j["quotient"] = factor_integer_roots(quotient).to_string();
  if (closed) {
    j["closed"] = spectrum_to_json(*closed);
    j["closed_source"] = source;
  }
  j["checks"] = checks;
  j["verdict"] = all_ok ? "agree" : "disagree";

  std::ostream& info = so.output.empty() ? ctx.err : ctx.out;
  for (const auto& r : rows) info << (r.ok ? "agree     " : "DISAGREE  ") << r.left << " vs " << r.right << "\n";
  if (!closed) info << "closed form: not available for this input\n";
  if (n > so.exact_limit) info << "exact charpoly: skipped (n > " << so.exact_limit << ")\n";
  info << "verdict: " << (all_ok ? "agree" : "disagree") << "\n";
  write_artifact(j.dump(2), so.output, ctx);
  return all_ok ? 0 : 2;
}

int cmd_spectrum(const GroupOptions& go, const SpectrumOptions& so, Context& ctx) {
  const Built b = build(go);
  if (so.compare) return cmd_spectrum_compare(b, go, so, ctx);
  const bool laplacian = so.matrix == "laplacian";
  const IntMatrix m = laplacian ? b.graph.laplacian() : b.graph.adjacency();

  std::optional<Spectrum> spectrum;
  std::optional<PolynomialZ> poly;
  Json source;
  if (so.method == "jacobi") {
    spectrum = jacobi_eigenvalues(m.cast<double>());
  } else if (so.method == "closed") {
    spectrum = closed_spectrum(b, go.relation, laplacian, source);
    if (!spectrum)
      throw UnsupportedClosedForm("no closed form for " + b.spec.to_string() + " with relation " + go.relation);
  } else if (so.method == "exact") {
    poly = char_poly_integer(m);
  } else {
    poly = laplacian ? super_laplacian_charpoly(b.commuting, b.partition)
                     : super_adjacency_charpoly(b.commuting, b.partition);
  }

  Json j{{"group", b.spec.to_string()}, {"relation", go.relation}, {"matrix", so.matrix}, {"method", so.method},
         {"vertices", m.size()}};
  std::string text;
  std::string summary;
  if (spectrum) {
    if (so.method == "closed") j["source"] = source;
    j["spectrum"] = spectrum_to_json(*spectrum);
    text = so.format == "csv" ? spectrum_to_csv(*spectrum) : j.dump(2);
    summary = spectrum->to_string();
  } else {
    const std::string factored = factor_integer_roots(*poly).to_string();
    j["charpoly"] = polynomial_to_json(*poly);
    j["factored"] = factored;
    text = so.format == "csv" ? polynomial_csv(*poly) : j.dump(2);
    summary = factored;
  }
  (so.output.empty() ? ctx.err : ctx.out) << summary << "\n";
  write_artifact(text, so.output, ctx);
  return 0;
}

struct VerifyOptions {
  std::string suite = "all";
  std::string odd_n;
  std::string m;
  std::vector<std::string> families;
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  std::size_t jobs = 0;
  bool strict = false;
  bool timing = false;
  std::string output = "report.json";
};

int cmd_verify(const VerifyOptions& vo, Context& ctx) {
  SuiteOptions opts;
  if (!vo.odd_n.empty()) {
    const auto [lo, hi] = parse_range(vo.odd_n);
    opts.d_odd_n = {lo, hi};
    opts.q_odd_n = {lo, hi};
  }
  if (!vo.m.empty()) {
    const auto [lo, hi] = parse_range(vo.m);
    opts.cross_m = {lo, hi};
    opts.iso_m = {lo, hi};
  }
  for (const auto& f : vo.families) {
    static const std::vector<std::string> known{"D", "Q", "PQ", "Dc", "Qc"};
    if (std::find(known.begin(), known.end(), f) == known.end()) throw InvalidParameter("unknown family '" + f + "'");
    opts.families.push_back(f);
  }
  opts.trials = vo.trials;
  opts.seed = vo.seed;
  opts.jobs = vo.jobs != 0 ? vo.jobs : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SUPERGRAPH_JOBS"); env && *env) {
    const auto [lo, hi] = parse_range(env);
    if (lo < 1 || lo != hi) throw InvalidParameter("SUPERGRAPH_JOBS must be a positive integer");
    opts.jobs = static_cast<std::size_t>(lo);
  }

  const auto reports = run_suite(vo.suite, opts);
  std::size_t matched = 0, table_only = 0, genuine = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Match)
      ++matched;
    else if (r.paper_table)
      ++table_only;
    else
      ++genuine;
    list.push_back(report_to_json(r, vo.timing));
  }
  Json doc{{"suite", vo.suite},
           {"seed", vo.seed},
           {"trials", vo.trials},
           {"summary", {{"claims", reports.size()}, {"match", matched}, {"mismatch_paper_table", table_only}, {"mismatch", genuine}}},
           {"reports", list}};
  if (!vo.output.empty()) {
    std::ofstream f(vo.output);
    if (!f) throw Error("cannot write '" + vo.output + "'");
    f << doc.dump(2) << "\n";
  }
  ctx.out << render_table(reports);
  ctx.out << reports.size() << " claims: " << matched << " Match, " << table_only << " Mismatch(paper-table), " << genuine
          << " Mismatch\n";
  if (genuine > 0) return 2;
  if (vo.strict && table_only > 0) return 2;
  return 0;
}

void add_group_options(CLI::App* cmd, GroupOptions& go) {
  cmd->add_option("--group", go.group, "D:n | Q:n | PQ:p,q | cayley:path")->required();
  cmd->add_option("--relation", go.relation, "conjugacy | order | none | file")
      ->check(CLI::IsMember({"conjugacy", "order", "none", "file"}));
  cmd->add_option("--partition", go.partition_file, "partition JSON for --relation file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"R-super commuting graphs of finite groups and their spectra", "supergraph"};
  app.require_subcommand(1);

  GroupOptions graph_group;
  std::string graph_format = "json";
  std::string graph_output;
  auto* graph = app.add_subcommand("graph", "Build a commuting or super commuting graph");
  add_group_options(graph, graph_group);
  graph->add_option("--out", graph_format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--output", graph_output, "write the graph here instead of standard output");

  GroupOptions spec_group;
  spec_group.relation = "order";
  SpectrumOptions so;
  auto* spectrum = app.add_subcommand("spectrum", "Adjacency or Laplacian spectrum by a chosen method");
  add_group_options(spectrum, spec_group);
  spectrum->add_option("--matrix", so.matrix, "adjacency | laplacian")->check(CLI::IsMember({"adjacency", "laplacian"}));
  spectrum->add_option("--method", so.method, "jacobi | exact | quotient | closed")
      ->check(CLI::IsMember({"jacobi", "exact", "quotient", "closed"}));
  spectrum->add_option("--out", so.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  spectrum->add_option("--output", so.output, "write the result here instead of standard output");
  spectrum->add_flag("--compare", so.compare, "run every applicable method and report agreement");
  spectrum->add_option("--exact-limit", so.exact_limit, "largest graph for the exact char poly under --compare");
  spectrum->add_option("--tol", so.tol, "tolerance for spectrum comparisons");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Check the claims against computation");
  verify->add_option("--suite", vo.suite, "all | 4.1 | 4.2 | 4.3 | 4.4 | 4.5 | generic")
      ->check(CLI::IsMember({"all", "4.1", "4.2", "4.3", "4.4", "4.5", "generic"}));
  verify->add_option("--odd-n", vo.odd_n, "range a..b for the dihedral and quaternion spectral claims");
  verify->add_option("--m", vo.m, "range a..b for the D_4m / Q_4m claims");
  verify->add_option("--family", vo.families, "restrict spectral claims to D, Q, PQ, Dc, Qc")->delimiter(',');
  verify->add_option("--trials", vo.trials, "random instances per generic property");
  verify->add_option("--seed", vo.seed, "seed for the generic properties");
  verify->add_option("--jobs", vo.jobs, "worker threads (default: all processors)");
  verify->add_flag("--strict", vo.strict, "exit 2 on paper-table mismatches too");
  verify->add_flag("--timing", vo.timing, "include per-claim milliseconds in the report");
  verify->add_option("--output", vo.output, "report file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*graph) return cmd_graph(graph_group, graph_format, graph_output, ctx);
    if (*spectrum) return cmd_spectrum(spec_group, so, ctx);
    return cmd_verify(vo, ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace supergraph
