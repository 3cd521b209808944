#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "supergraph/io.hpp"
#include "supergraph/polynomial.hpp"
#include "supergraph/roots.hpp"
#include "supergraph/spectrum.hpp"

namespace supergraph {

// Product of integer polynomial factors with exponents, kept unexpanded so
// roots can be read off factor by factor.
struct FactoredPolynomial {
  std::vector<std::pair<PolynomialZ, std::size_t>> factors;

  PolynomialZ expand() const;
  // Roots factor by factor; each factor is assumed squarefree.
  Spectrum spectrum() const;
  std::string to_string() const;
};

// Splits off every integer root with its multiplicity; whatever is left
// (no integer roots) becomes the last factor.
FactoredPolynomial factor_integer_roots(const PolynomialZ& p);

using ClosedForm = std::variant<FactoredPolynomial, Spectrum>;

// Claim identifiers:
//   spectral:  Thm4.1(i) Thm4.1(ii) Thm4.1(iii) Thm4.2(i) Thm4.2(ii) Thm4.2(iii)
//              S4.2-adj S4.2-lap
//   structure: Thm4.3 Thm4.4 Thm4.5 S4.1-complete S4.2-iso S4.2-equal
//   generic:   Prop3.2 Thm3.3 Thm3.4 Lemma1.2 Thm3.5
// Parameters are JSON objects: {"n"}, {"p","q"}, {"family","m"}, ...

// The displayed formula instantiated exactly. Throws OutOfRange outside the
// claim's validity range and UnsupportedClosedForm for unknown claims.
ClosedForm closed_form(const std::string& claim, const Json& params);

// Integer intervals each claimed to hold one root of the cubic factor.
std::vector<IntegerBracket> claimed_root_brackets(const std::string& claim, const Json& params);

enum class Verdict { Match, Mismatch };

struct ClaimReport {
  std::string claim;
  Json params = Json::object();
  Json artifacts = Json::object();
  Verdict verdict = Verdict::Match;
  // Only the displayed formula/table disagreed; every computed pipeline
  // agreed with the others.
  bool paper_table = false;
  Json diff;  // null when Match
  std::vector<std::string> notes;
  std::int64_t ms = 0;
};

// "ms" is emitted only when include_timing is set, so reports are
// byte-stable across runs by default.
Json report_to_json(const ClaimReport& report, bool include_timing = false);
std::string render_table(const std::vector<ClaimReport>& reports);

struct SpectralOptions {
  std::size_t exact_limit = 64;  // largest graph for the brute-force exact char poly
  double tol = 1e-8;
  double interlace_slack = 1e-9;
};

ClaimReport verify_spectral(const std::string& claim, const Json& params, const SpectralOptions& opts = {});
ClaimReport verify_structure(const std::string& claim, const Json& params);
// One report per generic property, each aggregating `trials` seeded cases.
std::vector<ClaimReport> verify_generic(std::uint64_t seed, std::size_t trials);
ClaimReport verify_generic_claim(const std::string& claim, std::uint64_t seed, std::size_t trials);

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
};

struct SuiteOptions {
  IntRange d_odd_n{3, 25};
  IntRange q_odd_n{3, 15};
  std::vector<std::pair<std::size_t, std::size_t>> pq_pairs{{3, 2}, {5, 2}, {7, 3}, {7, 2}, {13, 3}};
  IntRange cross_m{2, 6};      // S4.2-adj / S4.2-lap
  IntRange iso_m{2, 8};        // S4.2-iso
  IntRange dihedral_n{3, 12};  // Thm4.3
  IntRange quaternion_n{2, 8}; // Thm4.4
  IntRange even_n{2, 12};      // S4.1-complete
  std::vector<std::string> families;  // empty: suite default
  std::uint64_t seed = 42;
  std::size_t trials = 200;
  std::size_t jobs = 1;
  SpectralOptions spectral;
};

// suite: all | 4.1 | 4.2 | 4.3 | 4.4 | 4.5 | generic. Reports come back in
// task order regardless of `jobs`.
std::vector<ClaimReport> run_suite(const std::string& suite, const SuiteOptions& opts);

// Runs tasks on up to `jobs` threads; results keep task order.
std::vector<ClaimReport> run_tasks(const std::vector<std::function<ClaimReport()>>& tasks, std::size_t jobs);

}  // namespace supergraph
