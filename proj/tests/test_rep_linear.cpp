#include <json.hpp>
#include <random>

#include "gassoc/quiver_io.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Linear orientation 1 -> 2 -> ... -> n. The indecomposable with support
// [a, b] has submodules [x, b] and quotients [a, y], so a nonzero map
// [a, b] -> [c, d] exists iff c <= a <= d <= b, and then Hom is 1-dimensional.
std::size_t interval_hom(int a, int b, int c, int d) { return (c <= a && a <= d && d <= b) ? 1 : 0; }

std::pair<int, int> interval_of(const RootVector& r) {
  int lo = 0, hi = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) {
      if (!lo) lo = static_cast<int>(i) + 1;
      hi = static_cast<int>(i) + 1;
    }
  return {lo, hi};
}

Quiver linear(int n) { return orientations("A" + std::to_string(n)).front(); }

}  // namespace

TEST_SUITE("rep-linear") {
  TEST_CASE("matrix kernels and solves") {
    Matrix m = Matrix::from_ints(2, 3, {1, 2, 3, 2, 4, 6});
    CHECK(rank(m) == 1);
    const Matrix k = nullspace(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
    CHECK(left_nullspace(m).rows() == 1);
    CHECK(determinant(Matrix::from_ints(2, 2, {2, 1, 1, 1})) == 1);
    const auto x = solve(Matrix::from_ints(2, 2, {2, 1, 1, 1}), {Rational(3), Rational(2)});
    CHECK(x[0] == 1);
    CHECK(x[1] == 1);
    CHECK_THROWS_AS(solve(Matrix::from_ints(2, 2, {1, 1, 1, 1}), {Rational(1), Rational(1)}), DomainError);
  }

  TEST_CASE("hom and ext on A2") {
    const Quiver& q = a2();
    const auto e1 = Representation::simple(q, 1), e2 = Representation::simple(q, 2);
    const auto m12 = indecomposable_rep(q, {1, 1});
    CHECK(hom_dim(e1, e1) == 1);
    CHECK(hom_dim(e2, m12) == 1);
    CHECK(hom_dim(m12, e2) == 0);
    CHECK(hom_dim(m12, e1) == 1);
    CHECK(ext_dim(e1, e2) == 1);
    CHECK(ext_dim(e2, e1) == 0);
    CHECK(ext_dim(e1, e1) == 0);
    CHECK_THROWS_AS(hom_dim(e1, Representation::simple(alt("A3"), 1)), DomainError);
  }

  TEST_CASE("hom between interval modules matches the interval rule") {
    for (int n = 2; n <= 5; ++n) {
      const Quiver q = linear(n);
      const IndecomposableCatalog cat(q);
      const auto& roots = cat.roots().positive();
      for (std::size_t x = 0; x < roots.size(); ++x)
        for (std::size_t y = 0; y < roots.size(); ++y) {
          const auto [a, b] = interval_of(roots[x]);
          const auto [c, d] = interval_of(roots[y]);
          CAPTURE(roots[x].to_string());
          CAPTURE(roots[y].to_string());
          CHECK(hom_dim(cat.reps()[x], cat.reps()[y]) == interval_hom(a, b, c, d));
        }
    }
  }

  TEST_CASE("indecomposables have the right dimension vector and trivial endomorphisms") {
    for (const std::string name : {"A1", "A2", "A3", "A4", "D4"})
      for (const auto& q : orientations(name))
        for (const auto& r : positive_roots(q.graph())) {
          const auto m = indecomposable_rep(q, r);
          CHECK(m.dims() == r);
          CHECK(hom_dim(m, m) == 1);
          CHECK(ext_dim(m, m) == 0);
        }
    CHECK(indecomposable_rep(a2(), {0, 1}).dims() == RootVector{0, 1});
    const auto m12 = indecomposable_rep(a2(), {1, 1});
    CHECK(m12.map(0).rows() == 1);
    CHECK(m12.map(0)(0, 0) != 0);
    CHECK_THROWS_AS(indecomposable_rep(a2(), {2, 1}), DomainError);
  }

  TEST_CASE("construction is deterministic") {
    const Quiver q = alt("D4");
    const RootVector top{1, 2, 1, 1};
    const auto a = indecomposable_rep(q, top), b = indecomposable_rep(q, top);
    for (std::size_t k = 0; k < q.arrows().size(); ++k) CHECK(a.map(k) == b.map(k));
  }

  TEST_CASE("classical reflection functors") {
    const Quiver& q = a2();
    const auto s = classical_reflect(indecomposable_rep(q, {1, 1}), 1);
    CHECK(s.quiver() == path_quiver({{2, 1}}, 2));
    CHECK(s.dims() == RootVector{0, 1});
    CHECK(classical_reflect(Representation::simple(q, 1), 1).is_zero());

    const Quiver a3 = alt("A3");
    const auto e3 = Representation::simple(a3, 3);
    CHECK(classical_reflect(e3, 1).dims() == e3.dims());
    CHECK_THROWS_AS(classical_reflect(Representation::simple(linear(3), 1), 2), AdmissibilityError);
  }

  TEST_CASE("reflection acts on dimension vectors by s_i and squares to the identity class") {
    for (const std::string name : {"A3", "A4", "D4"})
      for (const auto& q : orientations(name)) {
        const IndecomposableCatalog cat(q);
        for (auto i : q.graph().vertices()) {
          if (!q.is_admissible(i)) continue;
          const Quiver back = reflect_orientation(q, i);
          const IndecomposableCatalog cat_back(back);
          for (std::size_t a = 0; a < cat.reps().size(); ++a) {
            const auto& m = cat.reps()[a];
            if (m.dims() == RootVector::simple(q.rank(), q.graph().index_of(i))) continue;
            const auto s = classical_reflect(m, i);
            CHECK(s.dims() == weyl_reflect(q.graph(), i, m.dims()));
            CHECK(cat.decompose(classical_reflect(s, i)) == RootMultiset{{m.dims(), 1}});
            CHECK(cat_back.decompose(s) == RootMultiset{{s.dims(), 1}});
          }
        }
      }
  }

  TEST_CASE("four-term identity at sources and sinks") {
    for (const auto& q : orientations("D4")) {
      const IndecomposableCatalog cat(q);
      for (auto i : q.graph().vertices()) {
        if (!q.is_admissible(i)) continue;
        const auto ei = Representation::simple(q, i);
        for (const auto& m : cat.reps()) {
          const Matrix st = stacked_map_at(m, i);
          const std::size_t r = rank(st);
          if (q.is_source(i)) {
            // Hom(E_i, M) = Ker, Ext(E_i, M) = Coker of M_i -> sum M_j.
            CHECK(hom_dim(ei, m) == static_cast<std::size_t>(m.dim_at(i)) - r);
            CHECK(ext_dim(ei, m) == st.rows() - r);
          } else {
            // Hom(M, E_i) = Coker, Ext(M, E_i) = Ker of sum M_j -> M_i.
            CHECK(hom_dim(m, ei) == static_cast<std::size_t>(m.dim_at(i)) - r);
            CHECK(ext_dim(m, ei) == st.cols() - r);
          }
        }
      }
    }
  }

  TEST_CASE("hom and ext are additive over direct sums") {
    const Quiver q = alt("A4");
    const IndecomposableCatalog cat(q);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, cat.reps().size() - 1);
    for (int t = 0; t < 60; ++t) {
      const auto& a = cat.reps()[pick(rng)];
      const auto& b = cat.reps()[pick(rng)];
      const auto& c = cat.reps()[pick(rng)];
      const auto ab = direct_sum(a, b);
      CHECK(hom_dim(ab, c) == hom_dim(a, c) + hom_dim(b, c));
      CHECK(hom_dim(c, ab) == hom_dim(c, a) + hom_dim(c, b));
      CHECK(ext_dim(ab, c) == ext_dim(a, c) + ext_dim(b, c));
    }
  }

  TEST_CASE("Krull-Schmidt decomposition") {
    const Quiver& q = a2();
    CHECK(decompose(indecomposable_rep(q, {1, 1})) == RootMultiset{{{1, 1}, 1}});
    const auto sum = direct_sum(Representation::simple(q, 1), indecomposable_rep(q, {1, 1}));
    CHECK(decompose(sum) == RootMultiset{{{1, 0}, 1}, {{1, 1}, 1}});
    CHECK(decompose(Representation::zero(q)).empty());

    const Quiver d4 = alt("D4");
    const IndecomposableCatalog cat(d4);
    const auto& top = cat.rep({1, 2, 1, 1});
    const auto m = direct_sum(direct_sum(top, top), cat.rep({0, 1, 0, 0}));
    CHECK(cat.decompose(m) == RootMultiset{{{1, 2, 1, 1}, 2}, {{0, 1, 0, 0}, 1}});
  }

  TEST_CASE("hom order is triangular") {
    const IndecomposableCatalog cat(alt("D4"));
    const auto& order = cat.hom_order();
    for (std::size_t x = 0; x < order.size(); ++x)
      for (std::size_t y = 0; y < x; ++y) CHECK(cat.hom(order[x], order[y]) == 0);
  }

  TEST_CASE("representation dump uses rational strings") {
    const auto j = representation_to_json(indecomposable_rep(alt("A3"), {1, 1, 1}));
    CHECK(j.at("dims").at("2") == 1);
    CHECK(j.at("maps").size() == 2);
    CHECK(j.at("maps")[0].at("matrix")[0][0].get<std::string>().find('/') != std::string::npos);
  }
}
