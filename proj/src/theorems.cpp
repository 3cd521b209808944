#include "supergraph/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "supergraph/eigen.hpp"
#include "supergraph/error.hpp"
#include "supergraph/graph.hpp"
#include "supergraph/group.hpp"
#include "supergraph/partition.hpp"
#include "supergraph/quotient.hpp"

namespace supergraph {

PolynomialZ FactoredPolynomial::expand() const {
  PolynomialZ out = PolynomialZ::constant(1);
  for (const auto& [f, e] : factors) out *= f.pow(e);
  return out;
}

Spectrum FactoredPolynomial::spectrum() const {
  std::vector<SpectrumEntry> entries;
  for (const auto& [f, e] : factors) {
    if (f.degree() == 1 && f.is_monic()) {
      entries.push_back({static_cast<std::int64_t>(-f.coeff(0)), e});
      continue;
    }
    for (double r : real_roots(f)) entries.push_back({r, e});
  }
  return Spectrum(std::move(entries));
}

std::string FactoredPolynomial::to_string() const {
  std::string out;
  for (const auto& [f, e] : factors) {
    if (!out.empty()) out += " ";
    out += f == PolynomialZ::x() ? "x" : "(" + f.to_string() + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

FactoredPolynomial factor_integer_roots(const PolynomialZ& p) {
  if (p.is_zero()) throw InvalidParameter("cannot factor the zero polynomial");
  FactoredPolynomial out;
  PolynomialZ rest = p;
  for (double approx : real_roots(p)) {
    const BigInt r = static_cast<long long>(std::llround(approx));
    std::size_t mult = 0;
    while (rest.degree() > 0 && rest.evaluate(r) == 0) {
      // synthetic division by (x - r)
      const auto& a = rest.coeffs();
      std::vector<BigInt> q(a.size() - 1);
      BigInt carry = 0;
      for (std::size_t k = a.size(); k-- > 1;) {
        carry = a[k] + carry * r;
        q[k - 1] = carry;
      }
      rest = PolynomialZ(std::move(q));
      ++mult;
    }
    if (mult > 0) out.factors.push_back({PolynomialZ(std::vector<BigInt>{-r, BigInt(1)}), mult});
  }
  if (rest.degree() > 0 || rest.coeff(0) != 1) out.factors.push_back({rest, 1});
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t get_int(const Json& params, const char* key) {
  if (!params.contains(key) || !params.at(key).is_number_integer())
    throw InvalidParameter(std::string("missing integer parameter '") + key + "'");
  return params.at(key).get<std::int64_t>();
}

std::string get_family(const Json& params) {
  if (!params.contains("family") || !params.at("family").is_string())
    throw InvalidParameter("missing parameter 'family'");
  return params.at("family").get<std::string>();
}

std::int64_t odd_n(const Json& params) {
  const auto n = get_int(params, "n");
  if (n < 3 || n % 2 == 0) throw OutOfRange("claim needs odd n >= 3, got n = " + std::to_string(n));
  return n;
}

std::pair<std::int64_t, std::int64_t> pq_params(const Json& params) {
  const auto p = get_int(params, "p");
  const auto q = get_int(params, "q");
  if (p < 2 || q < 2 || !is_prime(static_cast<std::size_t>(p)) || !is_prime(static_cast<std::size_t>(q)) || p == q ||
      (p - 1) % q != 0)
    throw OutOfRange("claim needs distinct primes with q | p-1, got (" + std::to_string(p) + "," + std::to_string(q) + ")");
  return {p, q};
}

std::int64_t m_param(const Json& params) {
  const auto m = get_int(params, "m");
  if (m < 2) throw OutOfRange("claim needs m >= 2, got m = " + std::to_string(m));
  return m;
}

// x^3 + c2 x^2 + c1 x + c0
PolynomialZ cubic(std::int64_t c2, std::int64_t c1, std::int64_t c0) {
  return PolynomialZ{c0, c1, c2, 1};
}

PolynomialZ x_minus(std::int64_t root) { return PolynomialZ{-root, 1}; }

FactoredPolynomial three_block_adjacency(std::size_t minus_one_mult, PolynomialZ cub) {
  return FactoredPolynomial{{{x_minus(-1), minus_one_mult}, {std::move(cub), 1}}};
}

bool is_spectral_claim(const std::string& claim) {
  return claim.rfind("Thm4.1", 0) == 0 || claim.rfind("Thm4.2", 0) == 0 || claim == "S4.2-adj" || claim == "S4.2-lap";
}

}  // namespace

ClosedForm closed_form(const std::string& claim, const Json& params) {
  if (claim == "Thm4.1(i)") {
    const auto n = odd_n(params);
    return three_block_adjacency(2 * n - 3, cubic(-(2 * n - 3), n * n - 5 * n + 3, 2 * n * n - 4 * n + 1));
  }
  if (claim == "Thm4.1(ii)") {
    const auto n = odd_n(params);
    return three_block_adjacency(4 * n - 3, cubic(-(4 * n - 3), 4 * n * n - 12 * n + 3, 12 * n * n - 16 * n + 1));
  }
  if (claim == "Thm4.1(iii)") {
    const auto [p, q] = pq_params(params);
    const auto pq = p * q;
    return three_block_adjacency(
        pq - 3, cubic(-(pq - 3), p * p * q - 3 * pq - p * p + p + 3, 2 * p * p * q - 3 * pq - 2 * p * p + 2 * p + 1));
  }
  if (claim == "Thm4.2(i)") {
    const auto n = odd_n(params);
    return Spectrum::integers({{0, 1}, {1, 1}, {n, n - 2}, {n + 1, n - 1}, {2 * n, 1}});
  }
  if (claim == "Thm4.2(ii)") {
    const auto n = odd_n(params);
    return Spectrum::integers({{0, 1}, {2, 1}, {2 * n, 2 * n - 3}, {2 * n + 2, 2 * n - 1}, {4 * n, 2}});
  }
  if (claim == "Thm4.2(iii)") {
    const auto [p, q] = pq_params(params);
    const auto pq = p * q;
    return Spectrum::integers({{0, 1}, {1, 1}, {p, p - 2}, {pq - p + 1, pq - p - 1}, {pq, 1}});
  }
  if (claim == "S4.2-adj") {
    const auto m = m_param(params);
    return FactoredPolynomial{{{x_minus(-1), 4 * m - 4},
                               {x_minus(m - 1), 1},
                               {cubic(-(3 * m - 3), 2 * m * m - 10 * m + 3, 10 * m * m - 15 * m + 1), 1}}};
  }
  if (claim == "S4.2-lap") {
    const auto m = m_param(params);
    return Spectrum::integers({{0, 1}, {2, 1}, {m + 2, 2 * m - 2}, {2 * m, 2 * m - 3}, {4 * m, 2}});
  }
  throw UnsupportedClosedForm("no closed form for claim '" + claim + "'");
}

std::vector<IntegerBracket> claimed_root_brackets(const std::string& claim, const Json& params) {
  if (claim == "Thm4.1(i)") {
    const auto n = odd_n(params);
    return {{-2, -1}, {n - 2, n - 1}, {n, n + 1}};
  }
  if (claim == "Thm4.1(ii)") {
    const auto n = odd_n(params);
    if (n <= 13) return {{-3, -2}, {2 * n - 3, 2 * n - 2}, {2 * n + 1, 2 * n + 2}};
    return {{-3, -2}, {2 * n - 3, 2 * n - 2}, {2 * n + 2, 2 * n + 3}};
  }
  if (claim == "Thm4.1(iii)") {
    const auto [p, q] = pq_params(params);
    return {{-2, -1}, {p - 2, p - 1}, {p * q - p, p * q - p + 1}};
  }
  return {};
}

Json report_to_json(const ClaimReport& report, bool include_timing) {
  Json j;
  j["claim"] = report.claim;
  j["params"] = report.params;
  j["verdict"] = report.verdict == Verdict::Match ? "Match" : "Mismatch";
  if (report.verdict == Verdict::Mismatch) j["kind"] = report.paper_table ? "paper-table" : "computation";
  j["diff"] = report.diff;
  j["artifacts"] = report.artifacts;
  if (!report.notes.empty()) j["notes"] = report.notes;
  if (include_timing) j["ms"] = report.ms;
  return j;
}

std::string render_table(const std::vector<ClaimReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "claim" << std::setw(34) << "params" << std::setw(24) << "verdict" << "ms\n";
  for (const auto& r : reports) {
    std::string verdict = r.verdict == Verdict::Match ? "Match" : (r.paper_table ? "Mismatch(paper-table)" : "Mismatch");
    out << std::left << std::setw(14) << r.claim << std::setw(34) << r.params.dump() << std::setw(24) << verdict
        << r.ms << "\n";
  }
  return out.str();
}

namespace {

struct Check {
  std::string name;
  bool ok = true;
  bool against_display = false;  // compares with the displayed formula rather than another computation
  Json detail;
};

void finalize(ClaimReport& report, const std::vector<Check>& checks) {
  bool internal_fail = false;
  bool display_fail = false;
  Json failures = Json::array();
  Json passed = Json::array();
  for (const auto& c : checks) {
    if (c.ok) {
      passed.push_back(c.name);
      continue;
    }
    (c.against_display ? display_fail : internal_fail) = true;
    Json f{{"check", c.name}};
    if (!c.detail.is_null()) f["detail"] = c.detail;
    failures.push_back(std::move(f));
  }
  report.artifacts["checks_passed"] = std::move(passed);
  if (!internal_fail && !display_fail) {
    report.verdict = Verdict::Match;
    report.diff = nullptr;
    return;
  }
  report.verdict = Verdict::Mismatch;
  report.paper_table = !internal_fail;
  report.diff = std::move(failures);
}

// Group and relation behind a spectral claim.
struct Instance {
  FiniteGroup group;
  Partition partition;
  SimpleGraph commuting;
  SimpleGraph super;
};

Instance make_instance(FiniteGroup g, bool conjugacy) {
  Partition p = conjugacy ? conjugacy_partition(g) : order_partition(g);
  SimpleGraph c = commuting_graph(g);
  SimpleGraph s = super_graph(c, p);
  return Instance{std::move(g), std::move(p), std::move(c), std::move(s)};
}

Instance spectral_instance(const std::string& claim, const Json& params) {
  if (claim == "Thm4.1(i)" || claim == "Thm4.2(i)")
    return make_instance(dihedral(static_cast<std::size_t>(odd_n(params))), false);
  if (claim == "Thm4.1(ii)" || claim == "Thm4.2(ii)")
    return make_instance(generalized_quaternion(static_cast<std::size_t>(odd_n(params))), false);
  if (claim == "Thm4.1(iii)" || claim == "Thm4.2(iii)") {
    const auto [p, q] = pq_params(params);
    return make_instance(semidirect_pq(static_cast<std::size_t>(p), static_cast<std::size_t>(q)), false);
  }
  if (claim == "S4.2-adj" || claim == "S4.2-lap") {
    const auto m = static_cast<std::size_t>(m_param(params));
    const auto family = get_family(params);
    if (family == "Dc") return make_instance(dihedral(2 * m), true);
    if (family == "Qc") return make_instance(generalized_quaternion(m), true);
    throw InvalidParameter("family must be Dc or Qc for " + claim + ", got " + family);
  }
  throw UnsupportedClosedForm("'" + claim + "' is not a spectral claim");
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
  return a.dimension() == b.dimension() && multiset_match(a, b, tol);
}

// Per-value multiplicities that differ between a claimed integer spectrum
// and a computed one (computed values rounded when within tol).
Json multiplicity_diff(const Spectrum& claimed, const Spectrum& computed, double tol) {
  std::map<std::int64_t, std::pair<std::size_t, std::size_t>> rows;
  Json stray = Json::array();
  for (const auto& e : claimed.entries()) rows[static_cast<std::int64_t>(std::llround(e.numeric()))].first += e.multiplicity;
  for (const auto& e : computed.entries()) {
    const double v = e.numeric();
    const auto r = static_cast<std::int64_t>(std::llround(v));
    if (std::abs(v - static_cast<double>(r)) <= tol)
      rows[r].second += e.multiplicity;
    else
      stray.push_back(v);
  }
  Json out = Json::array();
  for (const auto& [value, mult] : rows)
    if (mult.first != mult.second)
      out.push_back(Json{{"value", value}, {"displayed", mult.first}, {"computed", mult.second}});
  if (!stray.empty()) out.push_back(Json{{"non_integer_computed", stray}});
  return out;
}

std::vector<double> sorted_eigenvalues(const IntMatrix& m) { return jacobi_eigenvalues_sorted(m.cast<double>()); }

Check interlacing(const IntMatrix& full_matrix, const std::vector<double>& full, const std::vector<std::size_t>& removed,
                  double slack) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < full_matrix.size(); ++v)
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) keep.push_back(v);
  const auto sub = sorted_eigenvalues(full_matrix.principal(keep));
  Check c{"interlacing with central rows removed", interlacing_check(full, sub, slack), false, nullptr};
  if (!c.ok) c.detail = Json{{"removed", removed}};
  return c;
}

void verify_adjacency(ClaimReport& report, const Instance& inst, const SpectralOptions& opts) {
  const auto closed = std::get<FactoredPolynomial>(closed_form(report.claim, report.params));
  const PolynomialZ closed_poly = closed.expand();
  const Spectrum closed_spec = closed.spectrum();
  const IntMatrix a = inst.super.adjacency();
  const std::size_t n = a.size();
  std::vector<Check> checks;

  const auto quotient = super_adjacency_charpoly_detailed(inst.commuting, inst.partition);
  checks.push_back({"quotient charpoly equals displayed charpoly", quotient.poly == closed_poly, true,
                    Json{{"quotient", quotient.poly.to_string()}, {"displayed", closed_poly.to_string()}}});

  report.artifacts["vertices"] = n;
  report.artifacts["closed_form"] = closed.to_string();
  report.artifacts["quotient"] = quotient.poly.to_string();
  if (quotient.quotient_components > 1) report.notes.push_back("compressed graph disconnected; per-component product used");

  if (n <= opts.exact_limit) {
    const PolynomialZ exact = char_poly_integer(a);
    report.artifacts["exact"] = exact.to_string();
    checks.push_back({"exact charpoly equals quotient charpoly", exact == quotient.poly, false, nullptr});
  } else {
    report.artifacts["exact"] = "skipped (n > " + std::to_string(opts.exact_limit) + ")";
  }

  const auto eigs = sorted_eigenvalues(a);
  const double group_tol = opts.tol * std::max(1.0, frobenius_norm(a.cast<double>()));
  const Spectrum jac = snap_to_integers(Spectrum::group(eigs, group_tol), group_tol);
  report.artifacts["brute_force"] = jac.to_string();
  checks.push_back({"jacobi spectrum matches displayed roots", spectra_match(jac, closed_spec, opts.tol), true,
                    Json{{"jacobi", jac.to_string()}, {"displayed", closed_spec.to_string()}}});
  const Spectrum quotient_spec = super_adjacency_spectrum(inst.commuting, inst.partition);
  checks.push_back({"jacobi spectrum matches quotient spectrum", spectra_match(jac, quotient_spec, opts.tol), false,
                    Json{{"quotient", quotient_spec.to_string()}}});
  double trace = 0;
  for (double v : eigs) trace += v;
  checks.push_back({"adjacency eigenvalues sum to zero", std::abs(trace) <= opts.tol * static_cast<double>(n), false,
                    Json{{"sum", trace}}});

  const auto brackets = claimed_root_brackets(report.claim, report.params);
  if (!brackets.empty()) {
    const PolynomialZ& cub = closed.factors.back().first;
    Json rows = Json::array();
    bool ok = true;
    std::vector<double> roots;
    for (const auto& b : brackets) {
      const int slo = sign_at(cub, b.lo);
      const int shi = sign_at(cub, b.hi);
      const bool change = slo != 0 && shi != 0 && slo != shi;
      ok = ok && change;
      rows.push_back(Json{{"interval", {b.lo, b.hi}}, {"sign_lo", slo}, {"sign_hi", shi}});
    }
    if (ok) {
      roots = real_root_isolate(cub, brackets);
      const auto cubic_roots = real_roots(cub);
      ok = cubic_roots.size() == roots.size();
      for (std::size_t i = 0; ok && i < roots.size(); ++i) ok = std::abs(roots[i] - cubic_roots[i]) <= opts.tol;
    }
    report.artifacts["root_brackets"] = rows;
    report.artifacts["roots"] = roots;
    checks.push_back({"cubic roots lie in the displayed brackets", ok, true, rows});
  }

  checks.push_back(interlacing(a, eigs, center(inst.group), opts.interlace_slack));
  finalize(report, checks);
}

void verify_laplacian(ClaimReport& report, const Instance& inst, const SpectralOptions& opts) {
  const auto closed = std::get<Spectrum>(closed_form(report.claim, report.params));
  const IntMatrix l = inst.super.laplacian();
  const std::size_t n = l.size();
  std::vector<Check> checks;

  report.artifacts["vertices"] = n;
  report.artifacts["closed_form"] = closed.to_string();
  const auto quotient = super_laplacian_charpoly_detailed(inst.commuting, inst.partition);
  report.artifacts["quotient"] = quotient.poly.to_string();
  if (quotient.quotient_components > 1) report.notes.push_back("compressed graph disconnected; per-component product used");

  const bool closed_dim_ok = closed.dimension() == n;
  if (!closed_dim_ok)
    report.notes.push_back("displayed multiplicities sum to " + std::to_string(closed.dimension()) + ", graph has " +
                           std::to_string(n) + " vertices");
  checks.push_back({"displayed multiplicities sum to the vertex count", closed_dim_ok, true,
                    Json{{"sum", closed.dimension()}, {"vertices", n}}});
  checks.push_back({"quotient charpoly equals displayed spectrum",
                    closed_dim_ok && closed.integer_char_poly() == quotient.poly, true, nullptr});

  if (n <= opts.exact_limit) {
    const PolynomialZ exact = char_poly_integer(l);
    report.artifacts["exact"] = exact.to_string();
    checks.push_back({"exact charpoly equals quotient charpoly", exact == quotient.poly, false, nullptr});
  } else {
    report.artifacts["exact"] = "skipped (n > " + std::to_string(opts.exact_limit) + ")";
  }

  const auto eigs = sorted_eigenvalues(l);
  const double group_tol = opts.tol * std::max(1.0, frobenius_norm(l.cast<double>()));
  const Spectrum jac = snap_to_integers(Spectrum::group(eigs, group_tol), group_tol);
  report.artifacts["brute_force"] = jac.to_string();
  Check vs_display{"jacobi spectrum matches displayed spectrum", spectra_match(jac, closed, opts.tol), true, nullptr};
  if (!vs_display.ok) vs_display.detail = multiplicity_diff(closed, jac, opts.tol);
  checks.push_back(std::move(vs_display));

  const Spectrum quotient_spec = super_laplacian_spectrum(inst.commuting, inst.partition);
  checks.push_back({"jacobi spectrum matches quotient spectrum", spectra_match(jac, quotient_spec, opts.tol), false,
                    Json{{"quotient", quotient_spec.to_string()}}});

  const auto form = twin_canonical_form(inst.super);
  report.artifacts["structure"] = describe(form);
  if (const auto sizes = star_frame_sizes(form)) {
    const Spectrum star = star_join_laplacian_spectrum(*sizes);
    report.artifacts["star_join"] = star.to_string();
    checks.push_back({"star-join spectrum equals quotient charpoly", star.integer_char_poly() == quotient.poly, false,
                      Json{{"star_join", star.to_string()}}});
    checks.push_back({"jacobi spectrum matches star-join spectrum", spectra_match(jac, star, opts.tol), false, nullptr});
  }

  const bool psd = eigs.front() >= -opts.tol && std::abs(eigs.front()) <= opts.tol;
  const bool simple_zero = eigs.size() < 2 || eigs[1] > opts.tol;
  checks.push_back({"laplacian is PSD with a simple zero eigenvalue", psd && simple_zero, false,
                    Json{{"smallest", eigs.front()}}});
  checks.push_back(interlacing(l, eigs, center(inst.group), opts.interlace_slack));
  finalize(report, checks);
}

}  // namespace

ClaimReport verify_spectral(const std::string& claim, const Json& params, const SpectralOptions& opts) {
  const auto start = Clock::now();
  ClaimReport report;
  report.claim = claim;
  report.params = params;
  if (!is_spectral_claim(claim)) throw UnsupportedClosedForm("'" + claim + "' is not a spectral claim");
  const Instance inst = spectral_instance(claim, params);
  if (claim.rfind("Thm4.1", 0) == 0 || claim == "S4.2-adj")
    verify_adjacency(report, inst, opts);
  else
    verify_laplacian(report, inst, opts);
  if (claim == "Thm4.1(iii)") {
    const auto [p, q] = pq_params(params);
    report.notes.push_back("displayed multiplicity of -1 reads 2n-3; the factorization gives pq-3 = " +
                           std::to_string(p * q - 3));
  }
  report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return report;
}

namespace {

SimpleGraph conjugacy_super(const FiniteGroup& g) { return super_graph(commuting_graph(g), conjugacy_partition(g)); }
SimpleGraph order_super(const FiniteGroup& g) { return super_graph(commuting_graph(g), order_partition(g)); }

Check spanning_check(const FiniteGroup& g) {
  const bool ok = refines(conjugacy_partition(g), order_partition(g)) &&
                  is_spanning_subgraph(conjugacy_super(g), order_super(g));
  return {"conjugacy super graph spans into order super graph", ok, false, nullptr};
}

Check isomorphism_check(const std::string& name, const SimpleGraph& lhs, const SimpleGraph& rhs, Json& artifacts) {
  const auto fl = twin_canonical_form(lhs);
  const auto fr = twin_canonical_form(rhs);
  artifacts["graph"] = describe(fl);
  artifacts["expected"] = describe(fr);
  Check c{name, fl == fr, true, nullptr};
  if (!c.ok) c.detail = Json{{"graph", describe(fl)}, {"expected", describe(fr)}};
  return c;
}

}  // namespace

ClaimReport verify_structure(const std::string& claim, const Json& params) {
  const auto start = Clock::now();
  ClaimReport report;
  report.claim = claim;
  report.params = params;
  std::vector<Check> checks;

  if (claim == "Thm4.3") {
    const auto n = get_int(params, "n");
    if (n < 3) throw OutOfRange("claim needs n >= 3");
    const auto g = dihedral(static_cast<std::size_t>(n));
    const auto un = static_cast<std::size_t>(n);
    const SimpleGraph expected = n % 2 == 0 ? clique_join(star_graph(4), {2, un / 2, un / 2, un - 2})
                                            : clique_join(star_graph(3), {1, un - 1, un});
    checks.push_back(isomorphism_check("conjugacy super graph has the displayed clique-join form", conjugacy_super(g),
                                       expected, report.artifacts));
    checks.push_back(spanning_check(g));
  } else if (claim == "Thm4.4") {
    const auto n = get_int(params, "n");
    if (n < 2) throw OutOfRange("claim needs n >= 2");
    const auto un = static_cast<std::size_t>(n);
    const auto g = generalized_quaternion(un);
    checks.push_back(isomorphism_check("conjugacy super graph has the displayed clique-join form", conjugacy_super(g),
                                       clique_join(star_graph(4), {2, un, un, 2 * un - 2}), report.artifacts));
    checks.push_back(spanning_check(g));
  } else if (claim == "Thm4.5") {
    const auto [p, q] = pq_params(params);
    const auto g = semidirect_pq(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
    const auto up = static_cast<std::size_t>(p);
    checks.push_back(isomorphism_check("conjugacy super graph has the displayed clique-join form", conjugacy_super(g),
                                       clique_join(star_graph(3), {1, up - 1, up * static_cast<std::size_t>(q) - up}),
                                       report.artifacts));
    checks.push_back(spanning_check(g));
  } else if (claim == "S4.1-complete") {
    const auto family = get_family(params);
    const auto n = get_int(params, "n");
    if (n % 2 != 0) throw OutOfRange("completeness claim needs even n");
    std::optional<FiniteGroup> g;
    if (family == "D") {
      if (n < 4) throw OutOfRange("dihedral completeness needs even n >= 4");
      g = dihedral(static_cast<std::size_t>(n));
    } else if (family == "Q") {
      if (n < 2) throw OutOfRange("quaternion completeness needs even n >= 2");
      g = generalized_quaternion(static_cast<std::size_t>(n));
    } else {
      throw InvalidParameter("family must be D or Q, got " + family);
    }
    checks.push_back(isomorphism_check("order super graph is complete", order_super(*g), complete_graph(g->order()),
                                       report.artifacts));
    checks.push_back(spanning_check(*g));
  } else if (claim == "S4.2-iso") {
    const auto m = static_cast<std::size_t>(m_param(params));
    const auto d = dihedral(2 * m);
    const auto q = generalized_quaternion(m);
    checks.push_back(isomorphism_check("dihedral and quaternion conjugacy super graphs are isomorphic",
                                       conjugacy_super(d), conjugacy_super(q), report.artifacts));
    checks.push_back(spanning_check(d));
    checks.push_back(spanning_check(q));
  } else if (claim == "S4.2-equal") {
    const auto family = get_family(params);
    std::optional<FiniteGroup> g;
    if (family == "D")
      g = dihedral(static_cast<std::size_t>(odd_n(params)));
    else if (family == "PQ") {
      const auto [p, q] = pq_params(params);
      g = semidirect_pq(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
    } else {
      throw InvalidParameter("family must be D or PQ, got " + family);
    }
    const bool equal = conjugacy_super(*g) == order_super(*g);
    report.artifacts["graph"] = describe(twin_canonical_form(conjugacy_super(*g)));
    checks.push_back({"conjugacy and order super graphs coincide as labelled graphs", equal, true, nullptr});
    checks.push_back(spanning_check(*g));
  } else {
    throw InvalidParameter("'" + claim + "' is not a structure claim");
  }
  finalize(report, checks);
  report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return report;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

SimpleGraph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  for (;;) {
    SimpleGraph g = random_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Partition random_partition(std::mt19937_64& rng, std::size_t n) {
  const std::size_t k = uniform(rng, 1, n);
  std::vector<std::size_t> key(n);
  for (auto& v : key) v = uniform(rng, 0, k - 1);
  return Partition::from_keys(key);
}

// Splits each block of `coarse` at random.
Partition random_refinement(std::mt19937_64& rng, const Partition& coarse) {
  std::vector<std::pair<std::size_t, std::size_t>> key(coarse.ground_size());
  for (std::size_t x = 0; x < key.size(); ++x) key[x] = {coarse.block_of(x), uniform(rng, 0, 2)};
  return Partition::from_keys(key);
}

constexpr std::size_t kMaxVertices = 9;
constexpr double kEdgeProbability = 0.4;

struct GenericCase {
  bool ok = true;
  bool hypothesis = true;
  Json witness;
};

GenericCase prop_spanning(std::mt19937_64& rng) {
  const std::size_t n = uniform(rng, 1, kMaxVertices);
  const SimpleGraph g = random_graph(rng, n, kEdgeProbability);
  const Partition coarse = random_partition(rng, n);
  const Partition fine = random_refinement(rng, coarse);
  GenericCase c;
  c.ok = refines(fine, coarse) && is_spanning_subgraph(super_graph(g, fine), super_graph(g, coarse)) &&
         super_graph(g, least_partition(n)) == g && super_graph(g, greatest_partition(n)) == complete_graph(n) &&
         is_spanning_subgraph(super_graph(g, least_partition(n)), super_graph(g, coarse));
  if (!c.ok)
    c.witness = Json{{"graph", graph_to_json(g)}, {"fine", partition_to_json(fine)}, {"coarse", partition_to_json(coarse)}};
  return c;
}

GenericCase thm_clique_join(std::mt19937_64& rng) {
  const std::size_t n = uniform(rng, 1, kMaxVertices);
  const SimpleGraph g = random_graph(rng, n, kEdgeProbability);
  const Partition p = random_partition(rng, n);
  const SimpleGraph s = super_graph(g, p);
  bool blocks_complete = true;
  for (const auto& b : p.blocks()) blocks_complete = blocks_complete && s.induced(b) == complete_graph(b.size());
  GenericCase c;
  c.ok = blocks_complete && is_spanning_subgraph(g, s) &&
         s.permuted(block_concatenation_order(p)) == clique_join(compressed_graph(g, p), p.sizes());
  if (!c.ok) c.witness = Json{{"graph", graph_to_json(g)}, {"partition", partition_to_json(p)}};
  return c;
}

GenericCase thm_connectivity(std::mt19937_64& rng) {
  const std::size_t n = uniform(rng, 1, kMaxVertices);
  const SimpleGraph g = random_graph(rng, n, kEdgeProbability);
  const Partition p = random_partition(rng, n);
  const bool connected = is_connected(g);
  const bool compressed_connected = is_connected(compressed_graph(g, p));
  bool blocks_connected = true;
  for (const auto& b : p.blocks()) blocks_connected = blocks_connected && is_connected(g.induced(b));
  GenericCase c;
  c.hypothesis = connected || (compressed_connected && blocks_connected);
  c.ok = (!connected || compressed_connected) && (!(compressed_connected && blocks_connected) || connected);
  if (!c.ok) c.witness = Json{{"graph", graph_to_json(g)}, {"partition", partition_to_json(p)}};
  return c;
}

GenericCase lemma_join_connectivity(std::mt19937_64& rng) {
  const std::size_t k = uniform(rng, 2, 5);
  const SimpleGraph frame = random_graph(rng, k, 0.5);
  std::vector<SimpleGraph> parts;
  for (std::size_t i = 0; i < k; ++i) parts.push_back(random_graph(rng, uniform(rng, 1, 3), 0.5));
  const bool joined = is_connected(generalized_join(frame, parts));
  const bool frame_connected = is_connected(frame);
  GenericCase c;
  c.ok = joined == frame_connected;
  if (!c.ok) {
    Json js = Json::array();
    for (const auto& part : parts) js.push_back(graph_to_json(part));
    c.witness = Json{{"frame", graph_to_json(frame)}, {"parts", js}};
  }
  return c;
}

GenericCase thm_charpolys(std::mt19937_64& rng) {
  const std::size_t n = uniform(rng, 1, kMaxVertices);
  const SimpleGraph g = random_connected_graph(rng, n, kEdgeProbability);
  const Partition p = random_partition(rng, n);
  const SimpleGraph s = super_graph(g, p);
  const PolynomialZ adj = super_adjacency_charpoly(g, p);
  const PolynomialZ lap = super_laplacian_charpoly(g, p);
  GenericCase c;
  c.ok = adj == char_poly_integer(s.adjacency()) && lap == char_poly_integer(s.laplacian()) && adj.is_monic() &&
         lap.is_monic() && adj.degree() == static_cast<long>(n) && lap.coeff(0) == 0;
  if (!c.ok)
    c.witness = Json{{"graph", graph_to_json(g)}, {"partition", partition_to_json(p)}, {"adjacency", adj.to_string()},
                     {"laplacian", lap.to_string()}};
  return c;
}

const std::vector<std::pair<std::string, GenericCase (*)(std::mt19937_64&)>>& generic_claims() {
  static const std::vector<std::pair<std::string, GenericCase (*)(std::mt19937_64&)>> claims{
      {"Prop3.2", prop_spanning},
      {"Thm3.3", thm_clique_join},
      {"Thm3.4", thm_connectivity},
      {"Lemma1.2", lemma_join_connectivity},
      {"Thm3.5", thm_charpolys},
  };
  return claims;
}

}  // namespace

ClaimReport verify_generic_claim(const std::string& claim, std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw InvalidParameter("trials must be >= 1");
  const auto& claims = generic_claims();
  auto it = std::find_if(claims.begin(), claims.end(), [&](const auto& c) { return c.first == claim; });
  if (it == claims.end()) throw InvalidParameter("'" + claim + "' is not a generic claim");
  const auto stream = static_cast<std::uint64_t>(it - claims.begin());

  const auto start = Clock::now();
  ClaimReport report;
  report.claim = claim;
  report.params = Json{{"seed", seed}, {"trials", trials}};
  std::size_t hypothesis_met = 0;
  std::optional<Json> counterexample;
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(mix_seed(mix_seed(seed, stream), t));
    const GenericCase c = it->second(rng);
    hypothesis_met += c.hypothesis ? 1 : 0;
    if (!c.ok && !counterexample) counterexample = Json{{"trial", t}, {"case", c.witness}};
  }
  report.artifacts["trials"] = trials;
  report.artifacts["hypothesis_met"] = hypothesis_met;
  if (counterexample) {
    report.verdict = Verdict::Mismatch;
    report.diff = *counterexample;
  }
  report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return report;
}

std::vector<ClaimReport> verify_generic(std::uint64_t seed, std::size_t trials) {
  std::vector<ClaimReport> out;
  for (const auto& [name, fn] : generic_claims()) out.push_back(verify_generic_claim(name, seed, trials));
  return out;
}

std::vector<ClaimReport> run_tasks(const std::vector<std::function<ClaimReport()>>& tasks, std::size_t jobs) {
  std::vector<ClaimReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

namespace {

std::vector<std::int64_t> values_in(const IntRange& r, int step = 1, int parity = -1) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = r.lo; v <= r.hi; v += step)
    if (parity < 0 || ((v % 2) + 2) % 2 == parity) out.push_back(v);
  return out;
}

bool wants(const SuiteOptions& opts, const std::vector<std::string>& defaults, const std::string& family) {
  const auto& list = opts.families.empty() ? defaults : opts.families;
  return std::find(list.begin(), list.end(), family) != list.end();
}

}  // namespace

std::vector<ClaimReport> run_suite(const std::string& suite, const SuiteOptions& opts) {
  static const std::vector<std::string> kKnown{"all", "4.1", "4.2", "4.3", "4.4", "4.5", "generic"};
  if (std::find(kKnown.begin(), kKnown.end(), suite) == kKnown.end())
    throw InvalidParameter("unknown suite '" + suite + "'");
  const bool all = suite == "all";
  const std::vector<std::string> spectral_defaults =
      all ? std::vector<std::string>{"D", "Q", "PQ", "Dc", "Qc"} : std::vector<std::string>{"D", "Q", "PQ"};

  std::vector<std::function<ClaimReport()>> tasks;
  auto spectral = [&](const std::string& claim, Json params) {
    tasks.push_back([claim, params, &opts] { return verify_spectral(claim, params, opts.spectral); });
  };
  auto structure = [&](const std::string& claim, Json params) {
    tasks.push_back([claim, params] { return verify_structure(claim, params); });
  };

  for (const std::string part : {"4.1", "4.2"}) {
    if (!all && suite != part) continue;
    const std::string base = part == "4.1" ? "Thm4.1" : "Thm4.2";
    if (wants(opts, spectral_defaults, "D"))
      for (auto n : values_in(opts.d_odd_n, 1, 1))
        if (n >= 3) spectral(base + "(i)", Json{{"n", n}});
    if (wants(opts, spectral_defaults, "Q"))
      for (auto n : values_in(opts.q_odd_n, 1, 1))
        if (n >= 3) spectral(base + "(ii)", Json{{"n", n}});
    if (wants(opts, spectral_defaults, "PQ"))
      for (const auto& [p, q] : opts.pq_pairs) spectral(base + "(iii)", Json{{"p", p}, {"q", q}});
    const std::string cross = part == "4.1" ? "S4.2-adj" : "S4.2-lap";
    for (const std::string family : {"Dc", "Qc"})
      if (wants(opts, spectral_defaults, family))
        for (auto m : values_in(opts.cross_m)) spectral(cross, Json{{"family", family}, {"m", m}});
  }
  if (all || suite == "4.3") {
    for (auto n : values_in(opts.dihedral_n)) structure("Thm4.3", Json{{"n", n}});
    for (auto n : values_in(opts.even_n, 1, 0))
      if (n >= 4) structure("S4.1-complete", Json{{"family", "D"}, {"n", n}});
    for (auto n : values_in(opts.dihedral_n, 1, 1)) structure("S4.2-equal", Json{{"family", "D"}, {"n", n}});
  }
  if (all || suite == "4.4") {
    for (auto n : values_in(opts.quaternion_n)) structure("Thm4.4", Json{{"n", n}});
    for (auto n : values_in(opts.even_n, 1, 0))
      if (n >= 2) structure("S4.1-complete", Json{{"family", "Q"}, {"n", n}});
    for (auto m : values_in(opts.iso_m)) structure("S4.2-iso", Json{{"m", m}});
  }
  if (all || suite == "4.5") {
    for (const auto& [p, q] : opts.pq_pairs) structure("Thm4.5", Json{{"p", p}, {"q", q}});
    for (const auto& [p, q] : opts.pq_pairs) structure("S4.2-equal", Json{{"family", "PQ"}, {"p", p}, {"q", q}});
  }
  if (all || suite == "generic") {
    for (const auto& [name, fn] : generic_claims()) {
      const std::string claim = name;
      tasks.push_back([claim, &opts] { return verify_generic_claim(claim, opts.seed, opts.trials); });
    }
  }
  return run_tasks(tasks, opts.jobs);
}

}  // namespace supergraph
