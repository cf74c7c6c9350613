#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "plm/errors.hpp"
#include "plm/plm.hpp"
#include "plm/verify.hpp"

using namespace plm;

namespace {

Plm P(std::initializer_list<int> c) { return Plm::from_one_based(c); }
Plm P(const std::vector<int>& c) { return Plm::from_one_based(c); }
Permutation perm(std::initializer_list<int> c) {
  return Permutation::from_one_based(std::span<const int>(c.begin(), c.size()));
}
Permutation perm(const std::vector<int>& c) { return Permutation::from_one_based(c); }
IntMatrix M(const std::vector<std::vector<long long>>& rows) { return IntMatrix::from_rows(rows); }

const Plm kP2 = P({2, 1});
const Plm kR1 = P({1, 1});
const Plm kR2 = P({2, 2});

}  // namespace

TEST_CASE("permutation basics") {
  const auto s = perm({2, 3, 1});
  CHECK(s(0) == 1);
  CHECK((s * s.inverse()).is_identity());
  CHECK((s.inverse() * s).is_identity());
  CHECK(Permutation::transposition(3, 0, 2).one_based() == std::vector<int>{3, 2, 1});
  CHECK(Permutation::transposition(3, 1, 1).is_identity());
  // s ∘ t: apply t first
  const auto t = perm({2, 1, 3});
  CHECK((s * t).one_based() == std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(perm({1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(perm({0, 1}), InvalidArgument);
}

TEST_CASE("plm construction rejects bad colmaps") {
  CHECK_THROWS_AS(Plm(std::vector<Index>{}), InvalidArgument);
  CHECK_THROWS_AS(Plm(std::vector<Index>{0, 2}), InvalidArgument);
  CHECK_THROWS_AS(P({0, 1}), InvalidArgument);
}

TEST_CASE("from_dense") {
  CHECK(from_dense(M({{0, 1}, {1, 0}})) == kP2);
  CHECK(from_dense(M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == identity(3));
  try {
    from_dense(M({{1, 0}, {1, 0}}));
    FAIL("expected NotPlm");
  } catch (const NotPlm& e) {
    CHECK(e.column() == 1);
    CHECK(e.count() == 2);
  }
  CHECK_THROWS_AS(from_dense(M({{0, 0}, {0, 1}})), NotPlm);
  CHECK_THROWS_AS(from_dense(M({{2, 0}, {0, 1}})), NotPlm);
  CHECK_THROWS_AS(from_dense(IntMatrix(2, 3)), InvalidArgument);
}

TEST_CASE("to_dense") {
  CHECK(to_dense(kR1) == M({{1, 1}, {0, 0}}));
  CHECK(to_dense(kR2) == M({{0, 0}, {1, 1}}));
  CHECK(to_dense(identity(3)) == M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  for (const auto& a : enumerate(3)) CHECK(from_dense(to_dense(a)) == a);
}

TEST_CASE("identity and row_plm") {
  CHECK(identity(1).one_based() == std::vector<int>{1});
  CHECK(identity(2).one_based() == std::vector<int>{1, 2});
  for (const auto& a : enumerate(3)) {
    CHECK(multiply(identity(3), a) == a);
    CHECK(multiply(a, identity(3)) == a);
  }
  CHECK(to_dense(row_plm(2, 0)) == M({{1, 1}, {0, 0}}));
  CHECK(to_dense(row_plm(3, 2)) == M({{0, 0, 0}, {0, 0, 0}, {1, 1, 1}}));
  CHECK(to_dense(row_plm(1, 0)) == M({{1}}));
  CHECK_THROWS_AS(row_plm(3, 3), InvalidArgument);
}

TEST_CASE("multiply") {
  CHECK(kP2 * kP2 == identity(2));
  CHECK(kP2 * kR1 == kR2);
  const Plm a = P({2, 3, 3});
  CHECK(a * a == row_plm(3, 2));
  CHECK_THROWS_AS(multiply(identity(2), identity(3)), DimensionMismatch);
}

TEST_CASE("multiply matches the dense product and is closed, d <= 4") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto all = enumerate(d);
    std::vector<IntMatrix> dense;
    for (const auto& a : all) dense.push_back(to_dense(a));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        const IntMatrix product = oracle::dense_mul(dense[i], dense[j]);
        const Plm c = multiply(all[i], all[j]);
        REQUIRE(to_dense(c) == product);
        REQUIRE(c.dim() == d);
      }
  }
}

TEST_CASE("random closure, associativity and identity, d <= 10") {
  std::mt19937_64 rng(20241);
  for (std::size_t d = 1; d <= 10; ++d)
    for (int rep = 0; rep < 200; ++rep) {
      const Plm a = P(oracle::random_colmap(rng, d));
      const Plm b = P(oracle::random_colmap(rng, d));
      const Plm c = P(oracle::random_colmap(rng, d));
      CHECK(to_dense(a * b) == oracle::dense_mul(to_dense(a), to_dense(b)));
      CHECK((a * b) * c == a * (b * c));
      CHECK(identity(d) * a == a);
      CHECK(a * identity(d) == a);
    }
}

TEST_CASE("row_act") {
  CHECK(row_act(perm({2, 1, 3}), row_plm(3, 0)) == row_plm(3, 1));
  const Plm a = P({2, 3, 3});
  CHECK(row_act(Permutation::identity(3), a) == a);
  const auto s = perm({3, 2, 1});
  CHECK(row_act(s, a) == from_dense(oracle::permute_rows(s.one_based(), to_dense(a))));
  CHECK(row_act(s, a) == P({2, 1, 1}));
  CHECK_THROWS_AS(row_act(Permutation::identity(2), a), DimensionMismatch);
}

TEST_CASE("col_act") {
  const Plm a = P({2, 3, 3});
  CHECK(col_act(Permutation::identity(3), a) == a);
  const auto swap = perm({2, 1});
  CHECK(from_dense(oracle::permute_cols_by_inverse(swap.one_based(), to_dense(kP2))) == identity(2));
  CHECK(col_act(swap, kP2) == identity(2));
  CHECK_THROWS_AS(col_act(Permutation::identity(2), a), DimensionMismatch);
}

TEST_CASE("actions agree with dense oracles and commute with products") {
  std::mt19937_64 rng(77);
  for (std::size_t d = 1; d <= 8; ++d)
    for (int rep = 0; rep < 200; ++rep) {
      const auto s = perm(oracle::random_perm(rng, d));
      const auto t = perm(oracle::random_perm(rng, d));
      const Plm a = P(oracle::random_colmap(rng, d));
      const Plm b = P(oracle::random_colmap(rng, d));
      CHECK(row_act(s, a) == from_dense(oracle::permute_rows(s.one_based(), to_dense(a))));
      CHECK(col_act(t, a) == from_dense(oracle::permute_cols_by_inverse(t.one_based(), to_dense(a))));
      CHECK(row_act(s, a * b) == row_act(s, a) * b);
      CHECK(col_act(t, a * b) == a * col_act(t, b));
      // left actions
      CHECK(col_act(s * t, a) == col_act(s, col_act(t, a)));
      CHECK(row_act(s * t, a) == row_act(s, row_act(t, a)));
    }
}

TEST_CASE("row PLM absorption, right-row form and idempotence") {
  for (std::size_t d = 1; d <= 4; ++d)
    for (Index m = 0; m < d; ++m) {
      const Plm r = row_plm(d, m);
      CHECK(r * r == r);
      for (const auto& a : enumerate(d)) {
        CHECK(r * a == r);
        const Plm c = a * r;
        for (std::size_t j = 0; j < d; ++j) CHECK(c.row_of(j) == a.row_of(m));
      }
    }
}

TEST_CASE("zeta") {
  CHECK(zeta(row_plm(3, 0)) == 3);
  CHECK(zeta(P({2, 3, 3})) == 0);
  CHECK(zeta(P({1, 1, 2})) == 2);
}

TEST_CASE("classify examples") {
  CHECK(classify(P({2, 3, 3})) == PlmClass{CplmClass{false}});
  CHECK(classify(from_dense(M({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}))) == PlmClass{PcplmClass{perm({2, 1, 3})}});
  CHECK(classify(P({1, 1, 2})) == PlmClass{IplmClass{}});
  CHECK(classify(row_plm(3, 0)) == PlmClass{RowPlmClass{0}});
  CHECK(classify(row_plm(3, 2)) == PlmClass{RowPlmClass{2}});
  CHECK(classify(identity(3)) == PlmClass{CplmClass{true}});
  CHECK(classify(identity(1)) == PlmClass{RowPlmClass{0}});
  CHECK(class_name(classify(P({1, 1, 2}))) == "iplm");
}

TEST_CASE("classify partitions PL_d by the decision rule, d <= 5") {
  for (std::size_t d = 2; d <= 5; ++d) {
    std::size_t counts[4] = {0, 0, 0, 0};
    for_each_plm(d, [&](const Plm& a) {
      const auto dense = to_dense(a);
      std::size_t ones = 0;
      for (std::size_t j = 0; j < d; ++j) ones += dense(0, j);
      bool constant = true;
      for (std::size_t j = 1; j < d; ++j) constant = constant && a.row_of(j) == a.row_of(0);
      bool first_row_zero_after_1 = true;
      for (std::size_t j = 1; j < d; ++j) first_row_zero_after_1 = first_row_zero_after_1 && dense(0, j) == 0;

      const auto c = classify(a);
      ++counts[c.index()];
      if (constant) {
        REQUIRE(std::holds_alternative<RowPlmClass>(c));
        CHECK(std::get<RowPlmClass>(c).m == a.row_of(0));
      } else if (first_row_zero_after_1) {
        REQUIRE(std::holds_alternative<CplmClass>(c));
        CHECK(std::get<CplmClass>(c).leading == (dense(0, 0) == 1));
      } else if (ones == 1) {
        REQUIRE(std::holds_alternative<PcplmClass>(c));
        const auto& tau = std::get<PcplmClass>(c).tau;
        CHECK_FALSE(tau.is_identity());
        CHECK(is_cplm(col_act(tau, a)));
      } else {
        REQUIRE(std::holds_alternative<IplmClass>(c));
        CHECK(ones > 1);
        CHECK(ones < d);
      }
    });
    CHECK(counts[0] + counts[1] + counts[2] + counts[3] == plm_count(d));
    CHECK(counts[0] == d);
  }
}

TEST_CASE("canonicalize") {
  const auto r = canonicalize(row_plm(3, 0));
  CHECK(r.sigma == perm({2, 1, 3}));
  CHECK(r.cplm == row_plm(3, 1));

  const Plm cp = P({2, 3, 3});
  const auto same = canonicalize(cp);
  CHECK(same.sigma.is_identity());
  CHECK(same.cplm == cp);

  const auto c = canonicalize(P({3, 1, 1}));
  CHECK(c.sigma == perm({2, 1, 3}));
  CHECK(to_dense(c.cplm) == M({{0, 0, 0}, {0, 1, 1}, {1, 0, 0}}));
}

TEST_CASE("canonicalize always yields a CPLM through a row action, d <= 5") {
  for (std::size_t d = 2; d <= 5; ++d)
    for_each_plm(d, [&](const Plm& a) {
      const auto c = canonicalize(a);
      REQUIRE(c.cplm == row_act(c.sigma, a));
      const auto k = classify(c.cplm);
      const bool ok = std::holds_alternative<CplmClass>(k) ||
                      (std::holds_alternative<RowPlmClass>(k) && std::get<RowPlmClass>(k).m > 0);
      REQUIRE(ok);
      REQUIRE(is_cplm(c.cplm));
      if (is_cplm(a)) CHECK(c.sigma.is_identity());
    });
}

TEST_CASE("cplm_parts and assemble") {
  const auto p = cplm_parts(P({2, 3, 3}));
  CHECK_FALSE(p.leading);
  CHECK(p.v == std::vector<int>{1, 0});
  CHECK(p.plc == row_plm(2, 1));

  const auto q = cplm_parts(row_plm(3, 2));
  CHECK_FALSE(q.leading);
  CHECK(q.v == std::vector<int>{0, 1});
  CHECK(q.plc == row_plm(2, 1));

  const auto i = cplm_parts(identity(3));
  CHECK(i.leading);
  CHECK(i.v == std::vector<int>{0, 0});
  CHECK(i.plc == identity(2));

  CHECK_THROWS_AS(cplm_parts(P({1, 1, 2})), NotCplm);
  CHECK_THROWS_AS(cplm_parts(row_plm(3, 0)), NotCplm);

  for (std::size_t d = 2; d <= 5; ++d)
    for_each_plm(d, [](const Plm& a) {
      if (is_cplm(a)) REQUIRE(assemble(cplm_parts(a)) == a);
    });
  CHECK_THROWS_AS(assemble(CplmParts{true, {1, 0}, identity(2)}), NotPlm);
}

TEST_CASE("x_matrix") {
  const Plm a3 = P({2, 3, 3});
  CHECK(x_matrix(a3, 0) == IntMatrix(2, 2));
  CHECK(x_matrix(a3, 1) == M({{1, 0}, {0, 0}}));
  const Plm a4 = P({3, 2, 2, 2});  // v = [0, 1, 0]
  CHECK(cplm_parts(a4).v == std::vector<int>{0, 1, 0});
  CHECK(x_matrix(a4, 2) == M({{0, 0, 0}, {1, 1, 0}, {0, 0, 0}}));
  CHECK_THROWS_AS(x_matrix(a4, 4), InvalidArgument);
  CHECK_THROWS_AS(x_matrix(P({1, 1, 2}), 1), NotCplm);
}

TEST_CASE("is_permutation") {
  CHECK(is_permutation(kP2));
  CHECK_FALSE(is_permutation(kR1));
  CHECK_FALSE(is_permutation(P({2, 3, 3})));
  for (std::size_t d = 1; d <= 5; ++d)
    for_each_plm(d, [d](const Plm& a) {
      const std::set<Index> values(a.colmap().begin(), a.colmap().end());
      const auto dense = to_dense(a);
      bool zero_row = false;
      for (std::size_t i = 0; i < d; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < d; ++j) s += dense(i, j);
        zero_row = zero_row || s == 0;
      }
      REQUIRE(is_permutation(a) == (values.size() == d));
      REQUIRE(is_permutation(a) == !zero_row);
    });
}
