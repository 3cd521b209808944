#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "supergraph/error.hpp"
#include "supergraph/group.hpp"
#include "supergraph/partition.hpp"

using namespace supergraph;

namespace {

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

// S_3 as permutations of {0,1,2} in lexicographic order; product is
// composition (p*q)(x) = p(q(x)).
std::vector<std::vector<std::size_t>> s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

std::multiset<std::size_t> order_multiset(const FiniteGroup& g) {
  auto o = element_orders(g);
  return {o.begin(), o.end()};
}

}  // namespace

TEST_CASE("from_cayley_table accepts the trivial group and Z_4") {
  const auto trivial = FiniteGroup::from_cayley_table({{0}});
  CHECK(trivial.order() == 1);
  CHECK(trivial.identity() == 0);
  CHECK(is_abelian(trivial));
  CHECK(trivial.label(0) == "e");

  const auto z4 = FiniteGroup::from_cayley_table(cyclic_table(4));
  CHECK(z4.order() == 4);
  CHECK(is_abelian(z4));
  CHECK(z4.inverse(1) == 3);
  CHECK(center(z4).size() == 4);
  CHECK(z4.label(2) == "g2");
}

TEST_CASE("a corrupted S_3 table is rejected with a genuine witness") {
  auto table = s3_table();
  REQUIRE_NOTHROW(FiniteGroup::from_cayley_table(table));
  table[1][2] = table[1][3];
  try {
    FiniteGroup::from_cayley_table(table);
    FAIL("corrupted table accepted");
  } catch (const NotAGroup& e) {
    REQUIRE(e.witness().has_value());
    const auto [x, y, z] = *e.witness();
    CHECK(table[table[x][y]][z] != table[x][table[y][z]]);
  }
}

TEST_CASE("from_cayley_table rejects malformed tables") {
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({}), NotAGroup);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1}}), NotAGroup);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 2}, {1, 0}}), NotAGroup);
  // associative (constant) but no identity
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 0}, {0, 0}}), NotAGroup);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table(cyclic_table(3), {"e", "x"}), NotAGroup);
}

TEST_CASE("dihedral enumeration and relations") {
  const auto d6 = dihedral(3);
  CHECK(d6.order() == 6);
  CHECK(d6.labels() == std::vector<std::string>{"e", "a", "a^2", "b", "ba", "ba^2"});
  const auto a = d6.index_of("a");
  const auto b = d6.index_of("b");
  CHECK(d6.multiply(a, b) != d6.multiply(b, a));
  CHECK(d6.multiply(a, b) == d6.multiply(b, d6.inverse(a)));
  CHECK_FALSE(is_abelian(d6));

  const auto d8 = dihedral(4);
  const auto a2 = d8.index_of("a^2");
  CHECK(d8.multiply(a2, a2) == d8.identity());

  CHECK_THROWS_AS(dihedral(2), InvalidParameter);
}

TEST_CASE("dihedral element orders follow n/gcd(i,n) and 2^n") {
  for (std::size_t n = 3; n <= 12; ++n) {
    std::multiset<std::size_t> expected{1};
    for (std::size_t i = 1; i < n; ++i) expected.insert(n / std::gcd(i, n));
    for (std::size_t i = 0; i < n; ++i) expected.insert(2);
    CHECK(order_multiset(dihedral(n)) == expected);
  }
}

TEST_CASE("generalized quaternion groups") {
  const auto q8 = generalized_quaternion(2);
  CHECK(q8.order() == 8);
  const auto b = q8.index_of("b");
  CHECK(q8.multiply(b, b) == q8.index_of("a^2"));
  const auto orders = element_orders(q8);
  CHECK(std::count(orders.begin(), orders.end(), 2) == 1);
  CHECK(orders[q8.index_of("a^2")] == 2);

  const auto q12 = generalized_quaternion(3);
  CHECK(element_order(q12, q12.index_of("b")) == 4);
  CHECK(element_order(q12, q12.index_of("ba^5")) == 4);
  CHECK(element_order(q12, q12.identity()) == 1);

  CHECK_THROWS_AS(generalized_quaternion(1), InvalidParameter);
}

TEST_CASE("semidirect products of order pq") {
  CHECK(semidirect_twist(7, 3) == 2);
  CHECK(semidirect_twist(3, 2) == 2);
  CHECK(semidirect_twist(13, 3) == 3);
  const auto g = semidirect_pq(7, 3);
  CHECK(g.order() == 21);
  CHECK(g.label(1) == "b");
  CHECK(g.label(7) == "a");
  CHECK(g.label(7 * 2 + 3) == "b^3a^2");
  // a b a^-1 = b^m
  const auto a = g.index_of("a");
  CHECK(g.conjugate(a, g.index_of("b")) == g.index_of("b^2"));

  for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {5, 2}, {7, 3}, {7, 2}, {13, 3}}) {
    const auto o = element_orders(semidirect_pq(p, q));
    CHECK(static_cast<std::size_t>(std::count(o.begin(), o.end(), p)) == p - 1);
    CHECK(static_cast<std::size_t>(std::count(o.begin(), o.end(), q)) == p * (q - 1));
  }

  CHECK_THROWS_AS(semidirect_pq(5, 3), InvalidParameter);
  CHECK_THROWS_AS(semidirect_pq(9, 2), InvalidParameter);
  CHECK_THROWS_AS(semidirect_pq(3, 3), InvalidParameter);
}

TEST_CASE("semidirect_pq(3,2) is isomorphic to D_6 (exhaustive over all bijections)") {
  const auto pq = semidirect_pq(3, 2);
  const auto d6 = dihedral(3);
  std::vector<std::size_t> phi(6);
  std::iota(phi.begin(), phi.end(), 0);
  bool found = false;
  do {
    bool hom = true;
    for (std::size_t x = 0; x < 6 && hom; ++x)
      for (std::size_t y = 0; y < 6 && hom; ++y) hom = phi[pq.multiply(x, y)] == d6.multiply(phi[x], phi[y]);
    found = found || hom;
  } while (!found && std::next_permutation(phi.begin(), phi.end()));
  CHECK(found);
  CHECK_FALSE(is_abelian(pq));
}

TEST_CASE("conjugacy classes") {
  const auto d8 = dihedral(4);
  const auto& l = d8.labels();
  std::vector<std::vector<std::string>> named;
  const auto classes = conjugacy_classes(d8);
  for (const auto& block : classes.blocks()) {
    named.emplace_back();
    for (auto x : block) named.back().push_back(l[x]);
  }
  CHECK(named == std::vector<std::vector<std::string>>{{"e"}, {"a", "a^3"}, {"a^2"}, {"b", "ba^2"}, {"ba", "ba^3"}});

  const auto g = semidirect_pq(7, 3);
  const auto cls = conjugacy_classes(g);
  CHECK(cls.block(cls.block_of(g.index_of("a"))).size() == 7);
  CHECK(cls.block(cls.block_of(g.index_of("a^2"))).size() == 7);
  CHECK(cls.block_count() == 5);

  CHECK(conjugacy_classes(FiniteGroup::from_cayley_table(cyclic_table(5))).block_count() == 5);
}

TEST_CASE("conjugacy classes are closed and share element orders; centre is the singleton classes") {
  for (const auto& g : {dihedral(6), dihedral(7), generalized_quaternion(3), generalized_quaternion(4),
                        semidirect_pq(13, 3)}) {
    const auto cls = conjugacy_classes(g);
    const auto orders = element_orders(g);
    std::vector<std::size_t> singletons;
    for (const auto& block : cls.blocks()) {
      if (block.size() == 1) singletons.push_back(block[0]);
      for (auto x : block) {
        CHECK(orders[x] == orders[block[0]]);
        for (std::size_t h = 0; h < g.order(); ++h) CHECK(cls.block_of(g.conjugate(h, x)) == cls.block_of(x));
      }
    }
    CHECK(center(g) == singletons);
  }
}

TEST_CASE("centres") {
  CHECK(center(dihedral(3)) == std::vector<std::size_t>{0});
  const auto q8 = generalized_quaternion(2);
  CHECK(center(q8) == std::vector<std::size_t>{q8.identity(), q8.index_of("a^2")});
  const auto d8 = dihedral(4);
  CHECK(center(d8) == std::vector<std::size_t>{0, d8.index_of("a^2")});
}

TEST_CASE("large tables use sampled associativity and still validate") {
  const auto g = generalized_quaternion(70);  // order 280 > 256
  CHECK(g.order() == 280);
  CHECK(is_abelian(cyclic(300)));
}
