#include <json.hpp>
#include <queue>

#include "gassoc/quiver_io.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Positive roots of a simply-laced diagram are exactly the nonnegative
// integer vectors with Tits form 1. Box search up to the largest coefficient
// of the highest root (3 suffices through E6).
std::set<RootVector> tits_roots(const TreeGraph& g, int box) {
  const std::size_t n = g.size();
  std::set<RootVector> out;
  std::vector<int> v(n, 0);
  while (true) {
    std::size_t k = 0;
    while (k < n && v[k] == box) v[k++] = 0;
    if (k == n) break;
    ++v[k];
    long q = 0;
    for (std::size_t i = 0; i < n; ++i) q += static_cast<long>(v[i]) * v[i];
    for (const auto& e : g.edges()) q -= static_cast<long>(v[g.index_of(e.first)]) * v[g.index_of(e.second)];
    if (q == 1) out.insert(RootVector(v));
  }
  return out;
}

bool support_connected(const TreeGraph& g, const RootVector& r) {
  std::vector<Vertex> supp;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) supp.push_back(g.vertex_at(i));
  return g.induced(supp).components().size() == 1;
}

}  // namespace

TEST_SUITE("quiver-core") {
  TEST_CASE("dynkin_graph builds the canonical diagrams") {
    const auto a3 = dynkin_graph(DynkinType::A, 3);
    CHECK(a3.underlying().edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(a3.components()[0].exponents == std::vector<int>{1, 2, 3});
    CHECK(a3.components()[0].coxeter_number == 4);

    const auto a1 = dynkin_graph(DynkinType::A, 1);
    CHECK(a1.rank() == 1);
    CHECK(a1.components()[0].exponents == std::vector<int>{1});
    CHECK(a1.components()[0].coxeter_number == 2);

    const auto d4 = dynkin_graph(DynkinType::D, 4);
    CHECK(d4.underlying().edges() == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}});
    CHECK(d4.components()[0].exponents == std::vector<int>{1, 3, 3, 5});
    CHECK(d4.components()[0].coxeter_number == 6);

    const auto e6 = dynkin_graph(DynkinType::E, 6);
    CHECK(e6.underlying().degree(3) == 3);
    CHECK(e6.underlying().linked(3, 6));

    CHECK_THROWS_AS(dynkin_graph(DynkinType::D, 3), ClassificationError);
    CHECK_THROWS_AS(dynkin_graph(DynkinType::E, 9), ClassificationError);
    CHECK_THROWS_AS(dynkin_graph(DynkinType::A, 0), ClassificationError);
  }

  TEST_CASE("names and forests") {
    const auto g = dynkin_graph("A1+A2");
    CHECK(g.components().size() == 2);
    CHECK_FALSE(g.irreducible());
    CHECK(g.underlying().components() == std::vector<std::vector<Vertex>>{{1}, {2, 3}});
    CHECK(dynkin_graph("d5").name() == "D5");
    CHECK_THROWS(dynkin_graph("Q7"));
  }

  TEST_CASE("classify recognises relabelled diagrams and rejects others") {
    // D4 drawn with a different centre label.
    const TreeGraph star({10, 20, 30, 40}, {{10, 30}, {20, 30}, {40, 30}});
    CHECK(classify(star).name() == "D4");
    const TreeGraph e6_like({1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
    CHECK(classify(e6_like).name() == "E6");
    // Star with four leaves: affine D4, not Dynkin.
    const TreeGraph d4_affine({1, 2, 3, 4, 5}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    CHECK_THROWS_AS(classify(d4_affine), UnsupportedGraphError);
    CHECK_THROWS_AS(positive_roots(d4_affine), UnsupportedGraphError);
  }

  TEST_CASE("tree validation") {
    CHECK_THROWS_AS(TreeGraph({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}}), DomainError);
    CHECK_THROWS_AS(TreeGraph({1, 2}, {{1, 5}}), DomainError);
    CHECK_THROWS_AS(TreeGraph({1, 1}, {}), DomainError);
    CHECK_THROWS_AS(TreeGraph({1}, {{1, 1}}), DomainError);
  }

  TEST_CASE("positive roots agree with the Tits form oracle") {
    for (const std::string name : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "A2+A1"}) {
      CAPTURE(name);
      const auto g = dynkin_graph(name).underlying();
      const auto roots = positive_roots(g);
      CHECK(std::set<RootVector>(roots.begin(), roots.end()) == tits_roots(g, 3));
      for (const auto& r : roots) CHECK(support_connected(g, r));
    }
    CHECK(positive_roots(dynkin_graph("A2").underlying()) == std::vector<RootVector>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(positive_roots(dynkin_graph("A1").underlying()) == std::vector<RootVector>{{1}});
  }

  TEST_CASE("standard root counts") {
    for (int n = 1; n <= 7; ++n) CHECK(positive_roots(dynkin_graph(DynkinType::A, n).underlying()).size() == n * (n + 1) / 2);
    for (int n = 4; n <= 7; ++n) CHECK(positive_roots(dynkin_graph(DynkinType::D, n).underlying()).size() == n * (n - 1));
    CHECK(positive_roots(dynkin_graph(DynkinType::E, 6).underlying()).size() == 36);
    CHECK(positive_roots(dynkin_graph(DynkinType::E, 7).underlying()).size() == 63);
    CHECK(positive_roots(dynkin_graph(DynkinType::E, 8).underlying()).size() == 120);
  }

  TEST_CASE("exponent sums equal positive root counts") {
    for (const std::string name : {"A1", "A4", "D4", "D7", "E6", "E7", "E8"}) {
      const auto g = dynkin_graph(name);
      int sum = 0;
      for (int e : g.components()[0].exponents) sum += e;
      CHECK(sum == static_cast<int>(positive_roots(g.underlying()).size()));
      // h = 2 |Phi+| / n for irreducible root systems.
      CHECK(g.components()[0].coxeter_number * static_cast<int>(g.rank()) == 2 * sum);
    }
    auto g = dynkin_graph("A3");
    CHECK_THROWS_AS(g.override_exponents(0, {1, 1, 1}), ClassificationError);
    CHECK_NOTHROW(g.override_exponents(0, {1, 1, 4}));
  }

  TEST_CASE("root order is by height, then descending coordinates") {
    const auto roots = almost_positive_roots(dynkin_graph("A3").underlying());
    const std::vector<RootVector> expected{{1, 0, 0},  {0, 1, 0},  {0, 0, 1},  {1, 1, 0},  {0, 1, 1},
                                           {1, 1, 1},  {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    CHECK(roots == expected);
    const RootSystem rs(dynkin_graph("D4").underlying());
    for (std::size_t k = 0; k < rs.almost_positive().size(); ++k) CHECK(rs.index_of(rs.almost_positive()[k]) == k);
    CHECK_FALSE(rs.index_of(RootVector{1, 0, 0, 1}).has_value());
  }

  TEST_CASE("euler form") {
    const Quiver& q = a2();
    CHECK(euler_form(q, {1, 0}, {0, 1}) == -1);
    CHECK(euler_form(q, {0, 1}, {1, 0}) == 0);
    for (const auto& o : orientations("D4"))
      for (std::size_t i = 0; i < 4; ++i) {
        const auto s = RootVector::simple(4, i);
        CHECK(euler_form(o, s, s) == 1);
        for (const auto& r : positive_roots(o.graph())) CHECK(euler_form(o, r, r) >= 1);
      }
    CHECK_THROWS_AS(euler_form(q, {1, 0, 0}, {1, 0}), DomainError);
  }

  TEST_CASE("euler form is bilinear") {
    const Quiver q = alt("D4");
    const RootVector a{1, 2, 0, 1}, b{0, 1, 1, 3}, c{2, 0, 1, 1};
    CHECK(euler_form(q, a + b, c) == euler_form(q, a, c) + euler_form(q, b, c));
    CHECK(euler_form(q, c, a * 3) == 3 * euler_form(q, c, a));
  }

  TEST_CASE("reflect_orientation") {
    CHECK(reflect_orientation(a2(), 1) == path_quiver({{2, 1}}, 2));
    const Quiver in = path_quiver({{1, 2}, {3, 2}}, 3);
    CHECK(reflect_orientation(in, 2) == path_quiver({{2, 1}, {2, 3}}, 3));
    CHECK_THROWS_AS(reflect_orientation(path_quiver({{1, 2}, {2, 3}}, 3), 2), AdmissibilityError);
    for (const auto& q : orientations("D5"))
      for (auto v : q.graph().vertices())
        if (q.is_admissible(v)) CHECK(reflect_orientation(reflect_orientation(q, v), v) == q);
  }

  TEST_CASE("alternating orientation") {
    const auto a3 = alternating_orientation(dynkin_graph("A3").underlying());
    CHECK(a3.quiver == path_quiver({{1, 2}, {3, 2}}, 3));
    CHECK(a3.plus == std::vector<Vertex>{1, 3});
    CHECK(a3.minus == std::vector<Vertex>{2});
    const auto a1 = alternating_orientation(dynkin_graph("A1").underlying());
    CHECK(a1.plus == std::vector<Vertex>{1});
    CHECK(a1.minus.empty());
    const auto a2o = alternating_orientation(dynkin_graph("A2").underlying());
    CHECK(a2o.quiver == a2());
    CHECK(alternating_orientation(star3()).quiver.is_alternating());
  }

  TEST_CASE("orientations are enumerated and connected by reflections") {
    CHECK(orientations("A2").size() == 2);
    CHECK(orientations("A3").size() == 4);
    CHECK(orientations("D4").size() == 8);
    CHECK(orientations("A3").front() == path_quiver({{1, 2}, {2, 3}}, 3));

    for (const std::string name : {"A4", "A5", "D4", "D5"}) {
      CAPTURE(name);
      const auto all = orientations(name);
      std::set<std::uint64_t> seen{all.front().mask()};
      std::queue<Quiver> todo;
      todo.push(all.front());
      while (!todo.empty()) {
        const Quiver q = todo.front();
        todo.pop();
        for (auto v : q.graph().vertices())
          if (q.is_admissible(v)) {
            const Quiver r = reflect_orientation(q, v);
            if (seen.insert(r.mask()).second) todo.push(r);
          }
      }
      CHECK(seen.size() == all.size());
    }
  }

  TEST_CASE("masks round-trip") {
    const auto g = dynkin_graph("D5").underlying();
    for (std::uint64_t m = 0; m < 16; ++m) CHECK(Quiver::from_mask(g, m).mask() == m);
    CHECK(Quiver::from_mask(g, 0).opposite().mask() == 15);
  }

  TEST_CASE("quiver JSON") {
    using nlohmann::json;
    const auto j = json::parse(R"({"vertices":[1,2,3],"edges":[{"from":1,"to":2},{"from":3,"to":2}],"dynkin":"A3"})");
    const Quiver q = quiver_from_json(j);
    CHECK(q == alt("A3"));
    CHECK(quiver_from_json(quiver_to_json(q)) == q);

    CHECK_THROWS_AS(quiver_from_json(json::parse(
                        R"({"vertices":[1,2,3],"edges":[{"from":1,"to":2},{"from":2,"to":3},{"from":3,"to":1}]})")),
                    ParseError);
    CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices":[1,2],"edges":[{"from":1,"to":7}]})")), ParseError);
    CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices":[1,2],"edges":[{"from":1}]})")), ParseError);
    CHECK_THROWS_AS(
        quiver_from_json(json::parse(R"({"vertices":[1,2],"edges":[{"from":1,"to":2}],"dynkin":"A3"})")),
        ParseError);
  }
}
