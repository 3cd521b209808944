#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "supergraph/cli.hpp"
#include "supergraph/error.hpp"
#include "supergraph/io.hpp"

using namespace supergraph;

namespace {

const std::string data_dir = SUPERGRAPH_EXAMPLE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("supergraph_test_" + name)).string();
}

}  // namespace

TEST_CASE("group specs") {
  const auto d = parse_group_spec("D:7");
  CHECK(d.family == "D");
  CHECK(d.params == std::vector<std::size_t>{7});
  CHECK(d.build().order() == 14);
  CHECK(parse_group_spec("PQ:7,3").build().order() == 21);
  CHECK(parse_group_spec("Q:3").to_string() == "Q:3");
  CHECK(parse_group_spec("cayley:" + data_dir + "/z4.txt").build().order() == 4);

  try {
    parse_group_spec("D:x");
    FAIL("accepted D:x");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_group_spec("X:3"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("PQ:7"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("D:"), ParseError);

  CHECK(parse_range("3..9") == std::pair<std::int64_t, std::int64_t>{3, 9});
  CHECK(parse_range("5") == std::pair<std::int64_t, std::int64_t>{5, 5});
  CHECK_THROWS(parse_range("9..3"));
  CHECK_THROWS(parse_range("a..b"));
}

TEST_CASE("cayley files") {
  const auto z4 = read_cayley_file(data_dir + "/z4.txt");
  CHECK(z4.labels() == std::vector<std::string>{"e", "r", "r2", "r3"});
  CHECK(z4.multiply(z4.index_of("r"), z4.index_of("r3")) == z4.identity());

  try {
    read_cayley_file(data_dir + "/bad_entry.txt");
    FAIL("accepted a bad table");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
  }

  std::istringstream short_rows("3\n0 1 2\n1 2\n");
  CHECK_THROWS_AS(parse_cayley_table(short_rows), ParseError);
  std::istringstream not_group("2\n0 0\n0 0\n");
  CHECK_THROWS_AS(parse_cayley_table(not_group), NotAGroup);
  CHECK_THROWS(read_cayley_file(data_dir + "/missing.txt"));
}

TEST_CASE("spectrum serialization") {
  const auto s = Spectrum::integers({{0, 1}, {4, 2}});
  CHECK(spectrum_to_csv(s) == "value,multiplicity\n0,1\n4,2\n");
  CHECK(spectrum_from_json(spectrum_to_json(s)) == s);
  const Spectrum surd({{Surd{2, 28, 1}, 1}});
  CHECK(spectrum_from_json(spectrum_to_json(surd)) == surd);
  const PolynomialZ p{-288, 576};
  CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
}

TEST_CASE("graph subcommand") {
  const auto r = run({"graph", "--group", "D:3", "--relation", "order", "--out", "json"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.at("n") == 6);
  CHECK(j.at("edges").size() == 9);
  CHECK(j.at("structure") == "K_{1,2}[K_1,K_2,K_3]");
  CHECK(r.err.find("vertices: 6") != std::string::npos);

  const auto q8 = run({"graph", "--group", "Q:2", "--relation", "conjugacy", "--out", "json"});
  CHECK(Json::parse(q8.out).at("structure") == "K_{1,3}[K_2,K_2,K_2,K_2]");
  CHECK(Json::parse(run({"graph", "--group", "D:4", "--relation", "order", "--out", "json"}).out).at("structure") == "K_8");

  const auto file = run({"graph", "--group", "D:3", "--relation", "file", "--partition",
                         data_dir + "/d6_order_partition.json", "--out", "json"});
  CHECK(file.code == 0);
  CHECK(Json::parse(file.out).at("edges") == j.at("edges"));

  const auto dot = run({"graph", "--group", "cayley:" + data_dir + "/z4.txt", "--relation", "none", "--out", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph ", 0) == 0);
  CHECK(dot.out.find("[label=\"r2\"]") != std::string::npos);

  const auto out_path = temp_path("graph.json");
  const auto to_file = run({"graph", "--group", "D:3", "--out", "json", "--output", out_path});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.find("structure: K_{1,2}[K_1,K_2,K_3]") != std::string::npos);
  CHECK(Json::parse(slurp(out_path)).at("n") == 6);
  std::remove(out_path.c_str());
}

TEST_CASE("spectrum subcommand") {
  const auto csv = run({"spectrum", "--group", "D:3", "--matrix", "laplacian", "--method", "jacobi", "--out", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "value,multiplicity\n0,1\n1,1\n3,1\n4,2\n6,1\n");

  const auto exact = run({"spectrum", "--group", "D:3", "--matrix", "laplacian", "--method", "exact", "--out", "csv"});
  CHECK(exact.out == "degree,coefficient\n6,1\n5,-18\n4,123\n3,-394\n2,576\n1,-288\n0,0\n");
  CHECK(exact.err.find("x (x - 1) (x - 3) (x - 4)^2 (x - 6)") != std::string::npos);

  const auto closed = run({"spectrum", "--group", "PQ:7,3", "--matrix", "laplacian", "--method", "closed", "--out", "json"});
  CHECK(closed.code == 0);
  const auto j = Json::parse(closed.out);
  CHECK(j.at("source").at("claim") == "Thm4.2(iii)");
  CHECK(spectrum_from_json(j.at("spectrum")) == Spectrum::integers({{0, 1}, {1, 1}, {7, 5}, {15, 13}, {21, 1}}));

  const auto agree = run({"spectrum", "--group", "D:12", "--relation", "conjugacy", "--matrix", "laplacian", "--compare"});
  CHECK(agree.code == 0);
  CHECK(Json::parse(agree.out).at("verdict") == "agree");

  // The displayed D_12 adjacency formula does not fit the actual graph.
  const auto disagree = run({"spectrum", "--group", "D:6", "--relation", "conjugacy", "--matrix", "adjacency", "--compare"});
  CHECK(disagree.code == 2);
  const auto dj = Json::parse(disagree.out);
  CHECK(dj.at("verdict") == "disagree");
  CHECK(dj.at("quotient") == "(x + 1)^9 (x^3 - 9x^2 + 3x + 61)");
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({"graph", "--group", "X:3"}).code == 1);
  CHECK(run({"graph", "--group", "D:3", "--relation", "file"}).code == 1);
  CHECK(run({"spectrum", "--group", "D:3", "--method", "bogus"}).code == 1);
  CHECK(run({"graph", "--group", "cayley:" + data_dir + "/bad_entry.txt"}).code == 1);
  CHECK(run({"verify", "--suite", "9.9"}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  const auto e = run({"graph", "--group", "D:x"});
  CHECK(e.err.find("position 2") != std::string::npos);
}

TEST_CASE("verify reports are byte-identical across runs and worker counts") {
  const auto a = temp_path("a.json"), b = temp_path("b.json");
  const auto ra = run({"verify", "--suite", "4.1", "--odd-n", "3..7", "--jobs", "1", "--output", a});
  const auto rb = run({"verify", "--suite", "4.1", "--odd-n", "3..7", "--jobs", "3", "--output", b});
  CHECK(ra.code == 0);
  CHECK(rb.code == 0);
  CHECK(slurp(a) == slurp(b));
  const auto report = Json::parse(slurp(a));
  CHECK(report.at("summary").at("mismatch") == 0);
  CHECK(report.at("summary").at("claims") == report.at("reports").size());

  // D_4m Laplacian table: paper-table mismatch, exit 0 unless --strict.
  const auto lap = run({"verify", "--suite", "4.2", "--family", "Dc", "--m", "2..2", "--output", a});
  CHECK(lap.code == 0);
  CHECK(Json::parse(slurp(a)).at("summary").at("mismatch_paper_table") == 1);
  CHECK(run({"verify", "--suite", "4.2", "--family", "Dc", "--m", "2..2", "--strict", "--output", a}).code == 2);

  const auto gen = run({"verify", "--suite", "generic", "--trials", "30", "--seed", "5", "--output", a});
  const auto gen2 = run({"verify", "--suite", "generic", "--trials", "30", "--seed", "5", "--output", b});
  CHECK(gen.code == 0);
  CHECK(slurp(a) == slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}
