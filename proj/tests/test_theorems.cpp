#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supergraph/error.hpp"
#include "supergraph/theorems.hpp"

using namespace supergraph;

namespace {

PolynomialZ lin(std::int64_t root, std::size_t mult = 1) { return PolynomialZ::linear_power(BigInt(root), mult); }

const Json& find_check(const ClaimReport& r, const std::string& name) {
  for (const auto& f : r.diff)
    if (f.at("check") == name) return f;
  static const Json missing;
  return missing;
}

}  // namespace

TEST_CASE("closed forms instantiate the displayed formulas") {
  CHECK(std::get<Spectrum>(closed_form("Thm4.2(i)", {{"n", 5}})) ==
        Spectrum::integers({{0, 1}, {1, 1}, {5, 3}, {6, 4}, {10, 1}}));
  CHECK(std::get<Spectrum>(closed_form("Thm4.2(iii)", {{"p", 7}, {"q", 3}})) ==
        Spectrum::integers({{0, 1}, {1, 1}, {7, 5}, {15, 13}, {21, 1}}));
  CHECK(std::get<Spectrum>(closed_form("Thm4.2(ii)", {{"n", 3}})) ==
        Spectrum::integers({{0, 1}, {2, 1}, {6, 3}, {8, 5}, {12, 2}}));

  // 4n^2 - 12n + 3 = 3 at n = 3
  const auto q = std::get<FactoredPolynomial>(closed_form("Thm4.1(ii)", {{"n", 3}}));
  CHECK(q.expand() == lin(-1, 9) * PolynomialZ{61, 3, -9, 1});
  CHECK(q.to_string() == "(x + 1)^9 (x^3 - 9x^2 + 3x + 61)");

  const auto d = std::get<FactoredPolynomial>(closed_form("Thm4.1(i)", {{"n", 3}}));
  CHECK(d.expand() == lin(-1, 3) * PolynomialZ{7, -3, -3, 1});
  CHECK(d.spectrum().dimension() == 6);

  const auto pq = std::get<FactoredPolynomial>(closed_form("Thm4.1(iii)", {{"p", 7}, {"q", 3}}));
  CHECK(pq.factors[0].second == 18);
  CHECK(pq.expand().degree() == 21);

  const auto adj = std::get<FactoredPolynomial>(closed_form("S4.2-adj", {{"family", "Dc"}, {"m", 2}}));
  CHECK(adj.expand().degree() == 8);
  CHECK(std::get<Spectrum>(closed_form("S4.2-lap", {{"family", "Dc"}, {"m", 4}})).dimension() == 15);

  for (std::int64_t n = 3; n <= 25; n += 2) {
    CHECK(std::get<Spectrum>(closed_form("Thm4.2(i)", {{"n", n}})).dimension() == static_cast<std::size_t>(2 * n));
    CHECK(std::get<Spectrum>(closed_form("Thm4.2(ii)", {{"n", n}})).dimension() == static_cast<std::size_t>(4 * n));
  }

  CHECK_THROWS_AS(closed_form("Thm4.2(i)", {{"n", 4}}), OutOfRange);
  CHECK_THROWS_AS(closed_form("Thm4.1(ii)", {{"n", 1}}), OutOfRange);
  CHECK_THROWS_AS(closed_form("Thm4.2(iii)", {{"p", 5}, {"q", 3}}), OutOfRange);
  CHECK_THROWS_AS(closed_form("S4.2-lap", {{"family", "Dc"}, {"m", 1}}), OutOfRange);
  CHECK_THROWS_AS(closed_form("Thm9.9", {{"n", 3}}), UnsupportedClosedForm);
  CHECK_THROWS_AS(closed_form("Thm4.2(i)", Json::object()), InvalidParameter);
}

TEST_CASE("root brackets, including the quaternion switchover") {
  const auto b13 = claimed_root_brackets("Thm4.1(ii)", {{"n", 13}});
  CHECK(b13.back().lo == 27);
  const auto b15 = claimed_root_brackets("Thm4.1(ii)", {{"n", 15}});
  CHECK(b15.back().lo == 32);
  CHECK(claimed_root_brackets("Thm4.2(i)", {{"n", 3}}).empty());

  const auto d3 = verify_spectral("Thm4.1(i)", {{"n", 3}});
  CHECK(d3.verdict == Verdict::Match);
  const auto roots = d3.artifacts.at("roots").get<std::vector<double>>();
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(-1.60168).epsilon(1e-4));
  CHECK((roots[1] > 1 && roots[1] < 2));
  CHECK((roots[2] > 3 && roots[2] < 4));

  for (std::int64_t n : {13, 15}) CHECK(verify_spectral("Thm4.1(ii)", {{"n", n}}).verdict == Verdict::Match);
}

TEST_CASE("spectral claims match for the family parameters") {
  for (std::int64_t n = 3; n <= 15; n += 2) {
    CHECK(verify_spectral("Thm4.2(i)", {{"n", n}}).verdict == Verdict::Match);
    CHECK(verify_spectral("Thm4.1(i)", {{"n", n}}).verdict == Verdict::Match);
  }
  for (std::int64_t n : {3, 5, 7}) {
    CHECK(verify_spectral("Thm4.2(ii)", {{"n", n}}).verdict == Verdict::Match);
    CHECK(verify_spectral("Thm4.1(ii)", {{"n", n}}).verdict == Verdict::Match);
  }
  const auto pq = verify_spectral("Thm4.1(iii)", {{"p", 7}, {"q", 3}});
  CHECK(pq.verdict == Verdict::Match);
  REQUIRE(pq.notes.size() == 1);
  CHECK(pq.notes[0].find("pq-3 = 18") != std::string::npos);
  CHECK(verify_spectral("Thm4.2(iii)", {{"p", 13}, {"q", 3}}).verdict == Verdict::Match);
}

TEST_CASE("the D_4m / Q_4m Laplacian table is flagged as a paper-table mismatch") {
  // Q_8: brute force {0, 2^2, 4^3, 8^2}; the table has eigenvalue 2 once.
  const auto r = verify_spectral("S4.2-lap", {{"family", "Qc"}, {"m", 2}});
  CHECK(r.verdict == Verdict::Mismatch);
  CHECK(r.paper_table);
  CHECK(r.artifacts.at("brute_force") == "0, 2 (x2), 4 (x3), 8 (x2)");
  const auto& diff = find_check(r, "jacobi spectrum matches displayed spectrum");
  REQUIRE(diff.is_object());
  CHECK(diff.at("detail")[0] == Json{{"value", 2}, {"displayed", 1}, {"computed", 2}});

  for (std::int64_t m : {2, 4, 6}) {
    const auto d = verify_spectral("S4.2-lap", {{"family", "Dc"}, {"m", m}});
    CHECK(d.paper_table);
    CHECK(find_check(d, "jacobi spectrum matches displayed spectrum").at("detail")[0].at("computed") == 2);
    CHECK(verify_spectral("S4.2-adj", {{"family", "Dc"}, {"m", m}}).verdict == Verdict::Match);
  }
  // Odd m: the two b-type classes are twins, the graph is K_{1,2}[K_2,K_{2m-2},K_{2m}],
  // and eigenvalue 2 is simple.
  const auto odd = verify_spectral("S4.2-lap", {{"family", "Dc"}, {"m", 3}});
  CHECK(odd.paper_table);
  CHECK(odd.artifacts.at("brute_force") == "0, 2, 6 (x3), 8 (x5), 12 (x2)");
  CHECK(odd.artifacts.at("structure") == "K_{1,2}[K_2,K_4,K_6]");
  const auto adj = verify_spectral("S4.2-adj", {{"family", "Qc"}, {"m", 3}});
  CHECK(adj.verdict == Verdict::Mismatch);
  CHECK(adj.paper_table);
}

TEST_CASE("report JSON") {
  const auto r = verify_spectral("Thm4.2(i)", {{"n", 3}});
  const Json j = report_to_json(r);
  CHECK(j.at("claim") == "Thm4.2(i)");
  CHECK(j.at("params") == Json{{"n", 3}});
  CHECK(j.at("verdict") == "Match");
  CHECK(j.at("diff").is_null());
  CHECK_FALSE(j.contains("ms"));
  CHECK(report_to_json(r, true).contains("ms"));
  CHECK(j.at("artifacts").at("closed_form") == "0, 1, 3, 4 (x2), 6");
  CHECK(j.at("artifacts").at("quotient") == "x^6 - 18x^5 + 123x^4 - 394x^3 + 576x^2 - 288x");

  const auto bad = report_to_json(verify_spectral("S4.2-lap", {{"family", "Dc"}, {"m", 2}}));
  CHECK(bad.at("verdict") == "Mismatch");
  CHECK(bad.at("kind") == "paper-table");
  CHECK(render_table({r}).find("Thm4.2(i)") != std::string::npos);
}

TEST_CASE("structure claims") {
  CHECK(verify_structure("S4.1-complete", {{"family", "D"}, {"n", 4}}).verdict == Verdict::Match);
  CHECK(verify_structure("S4.1-complete", {{"family", "Q"}, {"n", 2}}).verdict == Verdict::Match);
  CHECK(verify_structure("S4.2-iso", {{"m", 4}}).verdict == Verdict::Match);
  CHECK(verify_structure("S4.2-iso", {{"m", 3}}).verdict == Verdict::Match);
  CHECK(verify_structure("Thm4.5", {{"p", 7}, {"q", 3}}).verdict == Verdict::Match);
  CHECK(verify_structure("S4.2-equal", {{"family", "PQ"}, {"p", 13}, {"q", 3}}).verdict == Verdict::Match);
  CHECK(verify_structure("S4.2-equal", {{"family", "D"}, {"n", 9}}).verdict == Verdict::Match);
  CHECK(verify_structure("Thm4.4", {{"n", 2}}).verdict == Verdict::Match);
  CHECK(verify_structure("Thm4.4", {{"n", 4}}).verdict == Verdict::Match);
  for (std::int64_t n : {3, 4, 5, 7, 8, 9, 11, 12}) CHECK(verify_structure("Thm4.3", {{"n", n}}).verdict == Verdict::Match);

  // D_12 / Q_12: the displayed K_{1,3} join does not hold.
  const auto d12 = verify_structure("Thm4.3", {{"n", 6}});
  CHECK(d12.verdict == Verdict::Mismatch);
  CHECK(d12.paper_table);
  CHECK(d12.artifacts.at("graph") == "K_{1,2}[K_2,K_4,K_6]");
  CHECK(d12.artifacts.at("expected") == "K_{1,3}[K_2,K_3,K_3,K_4]");
  const auto q12 = verify_structure("Thm4.4", {{"n", 3}});
  CHECK(q12.paper_table);
  CHECK(q12.artifacts.at("graph") == "K_{1,2}[K_2,K_4,K_6]");

  CHECK_THROWS_AS(verify_structure("S4.1-complete", {{"family", "D"}, {"n", 5}}), OutOfRange);
  CHECK_THROWS_AS(verify_structure("Thm4.7", Json::object()), InvalidParameter);
}

TEST_CASE("generic properties are deterministic and hold") {
  const auto a = verify_generic(42, 200);
  REQUIRE(a.size() == 5);
  for (const auto& r : a) {
    CHECK_MESSAGE(r.verdict == Verdict::Match, r.claim);
    CHECK(r.artifacts.at("trials") == 200);
  }
  const auto b = verify_generic(42, 200);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(report_to_json(a[i]) == report_to_json(b[i]));
  // The converse direction of the connectivity claim only applies to some instances.
  const auto conn = verify_generic_claim("Thm3.4", 42, 200);
  CHECK(conn.artifacts.at("hypothesis_met").get<std::size_t>() < 200);
  CHECK_THROWS_AS(verify_generic_claim("Thm3.3", 1, 0), InvalidParameter);
}

TEST_CASE("suite output is independent of the worker count") {
  SuiteOptions opts;
  opts.d_odd_n = {3, 9};
  opts.q_odd_n = {3, 5};
  opts.trials = 20;
  opts.jobs = 1;
  const auto serial = run_suite("all", opts);
  opts.jobs = 4;
  const auto parallel = run_suite("all", opts);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(report_to_json(serial[i]) == report_to_json(parallel[i]));
  CHECK_THROWS_AS(run_suite("9.9", opts), InvalidParameter);

  SuiteOptions only_dc;
  only_dc.families = {"Dc"};
  const auto lap = run_suite("4.2", only_dc);
  CHECK(lap.size() == 5);
  for (const auto& r : lap) CHECK(r.paper_table);
}

TEST_CASE("integer root factoring") {
  const auto f = factor_integer_roots(lin(0) * lin(6) * lin(1) * lin(4, 2) * lin(3));
  CHECK(f.to_string() == "x (x - 1) (x - 3) (x - 4)^2 (x - 6)");
  const auto g = factor_integer_roots(lin(-1, 3) * PolynomialZ{7, -3, -3, 1});
  CHECK(g.to_string() == "(x + 1)^3 (x^3 - 3x^2 - 3x + 7)");
  CHECK(factor_integer_roots(PolynomialZ{1, 0, 1}).to_string() == "(x^2 + 1)");
}
