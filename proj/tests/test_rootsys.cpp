#include "doctest.h"
#include "oracles.hpp"
#include "satake/rootsys.hpp"

#include <random>

using namespace satake;

namespace {

RootVector rv(std::vector<int> c) { return RootVector(std::move(c)); }

std::vector<SimpleType> all_simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

std::size_t standard_positive_count(const SimpleType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

// Leading principal minors by fraction-free elimination.
bool positive_definite(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  long long prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return true;
}

NodeSet random_subset(std::mt19937& rng, int n) {
  NodeSet s;
  for (int i = 0; i < n; ++i)
    if (rng() % 2) s.insert(i);
  return s;
}

}  // namespace

TEST_CASE("build_root_system examples") {
  SUBCASE("A1") {
    const RootSystem rs = build_root_system({{Family::A, 1}});
    CHECK(rs.positive_roots().size() == 1);
    CHECK(rs.cartan(0, 0) == 2);
  }
  SUBCASE("A2") {
    const RootSystem rs = build_root_system({{Family::A, 2}});
    const std::set<RootVector> got(rs.positive_roots().begin(), rs.positive_roots().end());
    CHECK(got == std::set<RootVector>{rv({1, 0}), rv({0, 1}), rv({1, 1})});
  }
  SUBCASE("G2 highest root") {
    const RootSystem rs = build_root_system({{Family::G, 2}});
    CHECK(rs.positive_roots().size() == 6);
    CHECK(rs.positive_roots().back() == rv({3, 2}));
  }
  SUBCASE("A1 x A1 is block diagonal") {
    const RootSystem rs = build_root_system({{Family::A, 1}, {Family::A, 1}});
    IntMatrix expected(2);
    expected(0, 0) = expected(1, 1) = 2;
    CHECK(rs.cartan_matrix() == expected);
    CHECK(rs.positive_roots().size() == 2);
    CHECK(rs.label() == "A1xA1");
  }
}

TEST_CASE("invalid types are rejected with the type named") {
  for (SimpleType t : {SimpleType{Family::A, 0}, SimpleType{Family::B, 1}, SimpleType{Family::C, 1},
                       SimpleType{Family::D, 2}, SimpleType{Family::E, 5}, SimpleType{Family::E, 9},
                       SimpleType{Family::F, 3}, SimpleType{Family::G, 3}}) {
    CAPTURE(t.label());
    try {
      build_root_system({t});
      FAIL("accepted " << t.label());
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(t.label()) != std::string::npos);
    }
  }
  CHECK_THROWS_AS(build_root_system({}), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system({{Family::A, 1}, {Family::A, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system({{Family::A, 1}, {Family::A, 1}, {Family::A, 1}}), std::invalid_argument);
  CHECK_NOTHROW(build_root_system({{Family::D, 3}}));
}

TEST_CASE("Cartan data invariants for every type up to rank 8") {
  for (const SimpleType& t : all_simple_types(8)) {
    CAPTURE(t.label());
    const RootSystem rs = build_root_system({t});
    const int n = rs.rank();
    std::vector<std::vector<long long>> sym(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) CHECK(rs.cartan(i, j) == 2);
        else CHECK(rs.cartan(i, j) <= 0);
        CHECK((rs.cartan(i, j) == 0) == (rs.cartan(j, i) == 0));
        const int di = rs.symmetrizer()[static_cast<std::size_t>(i)];
        const int dj = rs.symmetrizer()[static_cast<std::size_t>(j)];
        CHECK(di * rs.cartan(i, j) == dj * rs.cartan(j, i));
        sym[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long long>(di) * rs.cartan(i, j);
      }
    CHECK(positive_definite(sym));
  }
}

TEST_CASE("positive roots agree with two independent orbit closures and the standard counts") {
  for (const SimpleType& t : all_simple_types(8)) {
    CAPTURE(t.label());
    const RootSystem rs = build_root_system({t});
    const std::set<RootVector> mine(rs.positive_roots().begin(), rs.positive_roots().end());
    const auto forward = oracle::positive_part(oracle::roots_by_orbit(rs, false));
    const auto backward = oracle::positive_part(oracle::roots_by_orbit(rs, true));
    CHECK(mine.size() == rs.positive_roots().size());
    CHECK(mine == forward);
    CHECK(forward == backward);
    CHECK(mine.size() == standard_positive_count(t));
    for (int i = 0; i < rs.rank(); ++i)
      CHECK(std::count(rs.positive_roots().begin(), rs.positive_roots().end(), rs.simple_root(i)) == 1);
    for (const RootVector& r : rs.positive_roots())
      for (int c : r.coords) CHECK(c >= 0);
  }
}

TEST_CASE("reflect_simple examples") {
  const RootSystem a2 = build_root_system({{Family::A, 2}});
  CHECK(reflect_simple(a2, 0, rv({1, 0})) == rv({-1, 0}));
  CHECK(reflect_simple(a2, 0, rv({0, 1})) == rv({1, 1}));
  const RootSystem b2 = build_root_system({{Family::B, 2}});
  CHECK(reflect_simple(b2, 1, rv({1, 0})) == rv({1, 2}));
  CHECK_THROWS_AS(reflect_simple(a2, 2, rv({1, 0})), std::out_of_range);
  CHECK_THROWS_AS(reflect_simple(a2, -1, rv({1, 0})), std::out_of_range);
}

TEST_CASE("reflections are involutions and preserve the root set") {
  for (const SimpleType& t : all_simple_types(8)) {
    CAPTURE(t.label());
    const RootSystem rs = build_root_system({t});
    for (int i = 0; i < rs.rank(); ++i)
      for (const RootVector& r : rs.positive_roots()) {
        const RootVector s = reflect_simple(rs, i, r);
        CHECK(rs.is_root(s));
        CHECK(reflect_simple(rs, i, s) == r);
      }
  }
}

TEST_CASE("apply_word examples") {
  const RootSystem a2 = build_root_system({{Family::A, 2}});
  const RootVector v = rv({2, -5});
  CHECK(apply_word(a2, WeylWord{}, v) == v);
  CHECK(apply_word(a2, WeylWord{{0, 0}}, v) == v);
  CHECK(apply_word(a2, WeylWord{{0, 1, 0}}, rv({1, 0})) == rv({0, -1}));
  CHECK_THROWS_AS(apply_word(a2, WeylWord{{0, 3}}, v), std::out_of_range);
}

TEST_CASE("apply_word keeps roots inside the root system") {
  std::mt19937 rng(7);
  for (const SimpleType& t : all_simple_types(8)) {
    const RootSystem rs = build_root_system({t});
    for (int trial = 0; trial < 20; ++trial) {
      WeylWord w;
      for (int k = 0; k < 12; ++k) w.letters.push_back(static_cast<int>(rng() % static_cast<unsigned>(rs.rank())));
      const RootVector& r = rs.positive_roots()[rng() % rs.positive_roots().size()];
      const RootVector image = apply_word(rs, w, r);
      CHECK(rs.is_root(image));
      CHECK(word_matrix(rs, w).apply(r) == image);
    }
  }
}

TEST_CASE("longest_element examples") {
  const RootSystem a2 = build_root_system({{Family::A, 2}});
  CHECK(longest_element(a2, {}).letters.empty());
  const WeylWord w = longest_element(a2, {0, 1});
  CHECK(w.length() == 3);
  CHECK(w == WeylWord{{0, 1, 0}});
  CHECK(apply_word(a2, w, rv({1, 0})) == rv({0, -1}));

  const RootSystem a3 = build_root_system({{Family::A, 3}});
  const WeylWord w13 = longest_element(a3, {0, 2});
  CHECK(w13 == WeylWord{{0, 2}});
  CHECK(apply_word(a3, w13, rv({1, 0, 0})) == rv({-1, 0, 0}));
  CHECK(apply_word(a3, w13, rv({0, 0, 1})) == rv({0, 0, -1}));
  CHECK_THROWS_AS(longest_element(a3, {5}), std::out_of_range);
}

TEST_CASE("longest_element properties on random parabolic subsets") {
  std::mt19937 rng(11);
  for (const SimpleType& t : all_simple_types(8)) {
    const RootSystem rs = build_root_system({t});
    for (int trial = 0; trial < 6; ++trial) {
      const NodeSet s = random_subset(rng, rs.rank());
      CAPTURE(t.label());
      const WeylWord w = longest_element(rs, s);
      std::size_t supported = 0;
      for (const RootVector& r : rs.positive_roots()) {
        const RootVector image = apply_word(rs, w, r);
        if (supported_on(r, s)) {
          ++supported;
          CHECK(rs.is_positive_root(-image));
        } else {
          CHECK(rs.is_positive_root(image));
        }
        CHECK(apply_word(rs, w, image) == r);
      }
      CHECK(w.length() == supported);
    }
  }
}

TEST_CASE("induced_node_permutation examples") {
  const RootSystem a3 = build_root_system({{Family::A, 3}});
  CHECK(induced_node_permutation(a3, {1}) == std::map<int, int>{{1, 1}});
  const RootSystem a2 = build_root_system({{Family::A, 2}});
  CHECK(induced_node_permutation(a2, {0, 1}) == std::map<int, int>{{0, 1}, {1, 0}});
  const RootSystem b2 = build_root_system({{Family::B, 2}});
  CHECK(induced_node_permutation(b2, {0, 1}) == std::map<int, int>{{0, 0}, {1, 1}});
}

TEST_CASE("induced_node_permutation is an involutive automorphism of the subdiagram") {
  std::mt19937 rng(13);
  for (const SimpleType& t : all_simple_types(8)) {
    const RootSystem rs = build_root_system({t});
    for (int trial = 0; trial < 6; ++trial) {
      const NodeSet s = random_subset(rng, rs.rank());
      const auto p = induced_node_permutation(rs, s);
      CHECK(p.size() == s.size());
      for (auto [i, j] : p) {
        CHECK(s.count(j) == 1);
        CHECK(p.at(j) == i);
        for (auto [k, l] : p) CHECK(rs.cartan(j, l) == rs.cartan(i, k));
      }
    }
  }
}

TEST_CASE("is_diagram_automorphism examples") {
  const RootSystem a2 = build_root_system({{Family::A, 2}});
  const RootSystem b2 = build_root_system({{Family::B, 2}});
  CHECK(is_diagram_automorphism(a2, NodePermutation::identity(2)));
  CHECK(is_diagram_automorphism(a2, NodePermutation{{1, 0}}));
  CHECK_FALSE(is_diagram_automorphism(b2, NodePermutation{{1, 0}}));
  CHECK_FALSE(is_diagram_automorphism(a2, NodePermutation{{0, 0}}));
  CHECK_FALSE(is_diagram_automorphism(a2, NodePermutation{{0}}));
}

TEST_CASE("diagram automorphism groups have the expected orders") {
  auto order = [](std::vector<SimpleType> t) { return oracle::diagram_automorphisms(build_root_system(t)).size(); };
  CHECK(order({{Family::A, 1}}) == 1);
  CHECK(order({{Family::A, 5}}) == 2);
  CHECK(order({{Family::D, 4}}) == 6);
  CHECK(order({{Family::D, 5}}) == 2);
  CHECK(order({{Family::E, 6}}) == 2);
  CHECK(order({{Family::E, 7}}) == 1);
  CHECK(order({{Family::B, 3}}) == 1);
  CHECK(order({{Family::A, 2}, {Family::A, 2}}) == 8);
  // every automorphism found passes the library check
  const RootSystem d4 = build_root_system({{Family::D, 4}});
  for (const auto& p : oracle::diagram_automorphisms(d4)) CHECK(is_diagram_automorphism(d4, p));
}
