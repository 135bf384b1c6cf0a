#include <doctest.h>

#include <random>

#include "borelab/roots.hpp"
#include "oracles.hpp"

using namespace borelab;

TEST_CASE("pairings") {
  RootSystem rs(load_diagram("A2~1"));
  for (int i = 0; i < 3; ++i) {
    CHECK(rs.pair(rs.simple(i), i) == 2);
    CHECK(rs.pair(rs.delta(), i) == 0);
  }
  CHECK(rs.pair(rs.simple(1), 0) == -1);
}

TEST_CASE("bilinear form") {
  for (const auto& label : {"A2~1", "G2~1", "D5~2", "A4~2", "F4~1"}) {
    RootSystem rs(load_diagram(label));
    const int n = rs.nodes();
    CHECK(rs.bilinear(rs.delta(), rs.delta()) == Rational(0));
    Rational longest(0);
    for (int i = 0; i < n; ++i) {
      CHECK(rs.bilinear(rs.delta(), rs.simple(i)) == Rational(0));
      longest = std::max(longest, rs.bilinear(rs.simple(i), rs.simple(i)));
      for (int j = 0; j < n; ++j) CHECK(rs.bilinear(rs.simple(i), rs.simple(j)) == rs.bilinear(rs.simple(j), rs.simple(i)));
    }
    CHECK(longest == Rational(2));
  }
  // (theta_S, alpha) for alpha with <alpha, theta^vee> = 1 is half the long norm
  RootSystem e8(load_diagram("E8~1"));
  NodeSet e7{2, 3, 4, 5, 6, 7, 8};
  RootVector theta = e8.highest_root(e7);
  int ones = 0;
  for (int a : e7.nodes())
    if (e8.coroot_pair(e8.simple(a), theta) == 1) {
      ++ones;
      CHECK(e8.bilinear(theta, e8.simple(a)) == Rational(1));
    }
  CHECK(ones == 1);
}

TEST_CASE("root classification") {
  RootSystem rs(load_diagram("A2~1"));
  CHECK(rs.classify(RootVector{1, 1, 0}) == RootKind::real);
  CHECK(rs.classify(2 * rs.delta()) == RootKind::imaginary);
  CHECK(rs.classify(RootVector{0, 2, 0}) == RootKind::not_a_root);
  CHECK(rs.classify(RootVector{1, -1, 0}) == RootKind::not_a_root);
  CHECK(rs.classify(RootVector{0, 0, 0}) == RootKind::not_a_root);
  CHECK(rs.classify(-rs.delta() - rs.simple(1)) == RootKind::real);
  CHECK(rs.classify(RootVector{2, 1, 1}) == RootKind::real);
}

TEST_CASE("root classification is reflection invariant") {
  std::mt19937 gen(20261016);
  for (const auto& label : {"A3~1", "C3~1", "G2~1", "A4~2", "D4~2", "F4~1", "E6~2"}) {
    RootSystem rs(load_diagram(label));
    std::uniform_int_distribution<int> coord(-1, 4);
    for (int trial = 0; trial < 400; ++trial) {
      RootVector g(rs.nodes());
      for (int i = 0; i < rs.nodes(); ++i) g.set(i, coord(gen));
      for (int i = 0; i < rs.nodes(); ++i) {
        CAPTURE(g.to_string());
        CHECK(rs.classify(g) == rs.classify(rs.reflect(g, i)));
      }
    }
  }
}

TEST_CASE("real roots have positive norm and imaginary ones zero") {
  for (const auto& label : {"B3~1", "D5~2", "A5~2"}) {
    RootSystem rs(load_diagram(label));
    // translations by twist * delta preserve every real root
    const int step = rs.diagram().twist;
    for (int i = 0; i < rs.nodes(); ++i)
      for (int m = 0; m < 3; ++m) {
        RootVector g = rs.simple(i) + (m * step) * rs.delta();
        CHECK(rs.norm_scaled(g) > 0);
        CHECK(rs.is_real_root(g));
      }
    CHECK(rs.norm_scaled(3 * rs.delta()) == 0);
  }
}

TEST_CASE("finite positive roots agree with the root-string closure") {
  for (const auto& label : {"E8~1", "F4~1", "G2~1", "C4~1", "B4~1", "D5~2", "A4~2", "E6~2"}) {
    AffineDiagram d = load_diagram(label);
    RootSystem rs(d);
    for (std::uint32_t bits = 1; bits < (1u << d.nodes) - 1; bits += (d.nodes > 7 ? 7 : 1)) {
      NodeSet s(bits);
      std::vector<std::vector<int>> got;
      for (const auto& r : rs.positive_roots(s)) got.push_back(r.to_vector());
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::finite_positive_roots(d, s.nodes()));
    }
  }
  RootSystem e8(load_diagram("E8~1"));
  CHECK(e8.positive_roots(NodeSet{2, 3, 4, 5, 6, 7, 8}).size() == 63);
  RootSystem d5(load_diagram("D5~2"));
  CHECK(d5.positive_roots(NodeSet{2, 3, 4}).size() == 9);
  CHECK(e8.positive_roots(NodeSet{2, 3}).size() == 3);
}

TEST_CASE("positive roots of a subsystem are closed under its reflections and under sums") {
  RootSystem rs(load_diagram("F4~1"));
  NodeSet s{1, 2, 3, 4};
  const auto& roots = rs.positive_roots(s);
  std::set<RootVector> set(roots.begin(), roots.end());
  for (const auto& r : roots) {
    for (int i : s.nodes()) {
      RootVector x = rs.reflect(r, i);
      CHECK(set.count(x.is_positive() ? x : -x) == 1);
    }
    for (const auto& q : roots)
      if (rs.is_root(r + q)) CHECK(set.count(r + q) == 1);
  }
}

TEST_CASE("highest roots") {
  RootSystem e8(load_diagram("E8~1"));
  CHECK(e8.highest_root(NodeSet{4}) == e8.simple(4));
  NodeSet e7{2, 3, 4, 5, 6, 7, 8};
  RootVector theta = e8.highest_root(e7);
  for (int a : e7.nodes()) CHECK(e8.coroot_pair(e8.simple(a), theta) >= 0);
  // sum of the coroot coefficients of theta^vee is g - 1
  auto coroot_height = [](const RootSystem& rs, const RootVector& t) {
    long long norm = rs.norm_scaled(t);
    int h = 0;
    for (int i = 0; i < rs.nodes(); ++i) h += static_cast<int>(t[i] * rs.norm_scaled(rs.simple(i)) / norm);
    return h;
  };
  CHECK(coroot_height(e8, theta) == 17);
  RootSystem d5(load_diagram("D5~2"));
  CHECK(coroot_height(d5, d5.highest_root(NodeSet{2, 3, 4})) == 4);

  for (const auto& label : {"F4~1", "G2~1", "C4~1", "E6~2", "A5~2"}) {
    AffineDiagram d = load_diagram(label);
    RootSystem rs(d);
    for (std::uint32_t bits = 1; bits < (1u << d.nodes) - 1; ++bits) {
      NodeSet s(bits);
      if (!is_connected(d, s)) continue;
      RootVector t = rs.highest_root(s);
      for (const auto& r : rs.positive_roots(s)) CHECK(r.leq(t));
      for (int a : s.nodes()) {
        int p = rs.coroot_pair(rs.simple(a), t);
        CHECK(p >= 0);
        CHECK(p <= 2);
        if (p == 2) CHECK(s.size() == 1);
      }
    }
  }
}

TEST_CASE("root lengths") {
  RootSystem d5(load_diagram("D5~2"));
  CHECK_FALSE(d5.is_long(d5.simple(0)));
  CHECK(d5.is_long(d5.simple(2)));
  RootSystem e8(load_diagram("E8~1"));
  for (int i = 0; i < 9; ++i) CHECK(e8.is_long(e8.simple(i)));
  CHECK(e8.is_long(e8.highest_root(NodeSet{1, 2, 3})));
}

TEST_CASE("decompositions of a root") {
  RootSystem rs(load_diagram("A2~1"));
  const auto& parts = rs.decompositions(RootVector{1, 1, 0});
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].first + parts[0].second == RootVector{1, 1, 0});
  // delta + alpha_1 splits as delta + alpha_1 among others
  bool imaginary = false;
  for (const auto& [e, f] : rs.decompositions(rs.delta() + rs.simple(1)))
    imaginary = imaginary || e == rs.delta() || f == rs.delta();
  CHECK(imaginary);
}

TEST_CASE("Weyl group orders match brute-force closure") {
  for (const auto& label : {"G2~1", "C3~1", "B3~1", "A4~1", "D4~1", "D5~2"}) {
    AffineDiagram d = load_diagram(label);
    RootSystem rs(d);
    for (std::uint32_t bits = 1; bits < (1u << d.nodes) - 1; ++bits) {
      NodeSet s(bits);
      if (s.size() > 4) continue;
      CHECK(rs.weyl_group_order(s) == oracle::finite_weyl_group(d, s.nodes()).size());
    }
    CHECK(rs.weyl_group_order(NodeSet{}) == 1);
  }
}
