#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <numeric>
#include <random>

#include "braidwire/boundary.hpp"
#include "braidwire/error.hpp"
#include "braidwire/homology.hpp"
#include "support/random_diagrams.hpp"

using namespace braidwire;

namespace {

const char* kExample31 = "strands 4; comps A:1,4 B:2,3; TN[1,4]; (I[3,4])^3; I[1,4]";

IntMatrix to_mpz(const std::vector<std::vector<long>>& m) {
  IntMatrix out;
  for (const auto& r : m) {
    out.emplace_back();
    for (long x : r) out.back().emplace_back(x);
  }
  return out;
}

// Cofactor expansion; fine for the small minors used here.
long det_small(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      sub.emplace_back();
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) sub.back().push_back(m[r][j]);
    }
    s += (c % 2 ? -1 : 1) * m[0][c] * det_small(sub);
  }
  return s;
}

void choose(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// k-th determinantal divisor: gcd of all k x k minors.
long det_divisor(const std::vector<std::vector<long>>& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> tmp;
  choose(m.size(), k, 0, tmp, rs);
  choose(m[0].size(), k, 0, tmp, cs);
  long g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<long>> sub(k, std::vector<long>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
      g = std::gcd(g, std::labs(det_small(sub)));
    }
  return g;
}

}  // namespace

TEST(Smith, Identity) {
  auto s = smith_normal_form(to_mpz({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(s.rank, 3u);
  EXPECT_EQ(s.D, to_mpz({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(Smith, TwoByTwo) {
  auto m = to_mpz({{2, 4}, {6, 8}});
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.D, to_mpz({{2, 0}, {0, 4}}));
  EXPECT_EQ(multiply(multiply(s.U, m), s.V), s.D);
}

TEST(Smith, EmptyAndZero) {
  EXPECT_EQ(smith_normal_form({}).rank, 0u);
  auto s = smith_normal_form(to_mpz({{0, 0}, {0, 0}}));
  EXPECT_EQ(s.rank, 0u);
}

TEST(Smith, RandomMatchesDeterminantalDivisors) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-9, 9);
  for (int t = 0; t < 60; ++t) {
    std::vector<std::vector<long>> m(4, std::vector<long>(6));
    for (auto& r : m)
      for (auto& x : r) x = e(rng);
    if (t % 5 == 0) m[3] = m[1];  // force some rank loss
    auto s = smith_normal_form(to_mpz(m));
    EXPECT_EQ(multiply(multiply(s.U, to_mpz(m)), s.V), s.D);
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
    long prev = 1;
    for (std::size_t k = 1; k <= 4; ++k) {
      const long dk = det_divisor(m, k);
      if (dk == 0) {
        EXPECT_EQ(s.rank, k - 1);
        break;
      }
      ASSERT_GE(s.rank, k);
      EXPECT_EQ(s.D[k - 1][k - 1], dk / prev) << "t=" << t << " k=" << k;
      prev = dk;
    }
  }
}

TEST(Smith, WideEntriesStayExact) {
  mpz_class big("123456789012345678901234567890");
  IntMatrix m{{big, big * 2}, {big * 3, big * 5}};
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.D[0][0], big);
  EXPECT_EQ(s.D[1][1], big);
}

TEST(Smith, DeterminantBareiss) {
  EXPECT_EQ(determinant(to_mpz({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(to_mpz({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}})), det_small({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}));
  EXPECT_EQ(determinant(to_mpz({{1, 2}, {2, 4}})), 0);
}

TEST(Homology, WarmUpArtinArrangement) {
  Arrangement a{parse_diagram(kExample31), {{"A", 2}, {"B", 2}}};
  auto m = incidence(a);
  ASSERT_EQ(m.rows, (std::vector<std::string>{"A", "B"}));
  ASSERT_EQ(m.columns.size(), 8u);
  EXPECT_EQ(m.intersection_columns, 4u);
  // Intersection columns follow element order: three doubles, then the
  // full multipoint.
  EXPECT_EQ(m.entries[0], (std::vector<int>{1, 1, 1, 2, 1, 1, 0, 0}));
  EXPECT_EQ(m.entries[1], (std::vector<int>{1, 1, 1, 2, 0, 0, 1, 1}));
  // TN[1,4] expands to four elements, so the multipoint sits at index 7.
  EXPECT_EQ(m.columns[3], "I[1,4]@7");
  EXPECT_EQ(m.columns[4], "free:A");
  auto w = weights(a);
  EXPECT_EQ(w["A"], 7);
  EXPECT_EQ(w["B"], 7);
  auto r = homology(a);
  EXPECT_EQ(r.b2, 6u);
  EXPECT_TRUE(r.h1_torsion.empty());
  EXPECT_EQ(r.h1_free_rank, 0u);
  EXPECT_EQ(r.b1, 0);
}

TEST(Homology, SingleFreePoint) {
  Arrangement a{parse_diagram("strands 2; comps A:1,2"), {{"A", 1}}};
  auto m = incidence(a);
  EXPECT_EQ(m.entries, (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(weights(a)["A"], 1);
  EXPECT_EQ(homology(a).b2, 0u);
}

TEST(Homology, BadFreePoints) {
  Arrangement neg{parse_diagram("strands 2; comps A:1,2"), {{"A", -1}}};
  EXPECT_THROW(incidence(neg), Error);
  Arrangement unknown{parse_diagram("strands 2; comps A:1,2"), {{"Z", 1}}};
  EXPECT_THROW(incidence(unknown), Error);
  Arrangement invalid{parse_diagram("strands 2; comps A:1 B:2; T[1]"), {}};
  EXPECT_THROW(incidence(invalid), ValidationError);
}

TEST(Homology, TorsionFromCokernel) {
  // One disk through its own node: the matrix is [2], so H1 = Z/2.
  Arrangement a{parse_diagram("strands 2; comps A:1,2; I[1,2]"), {}};
  auto r = homology(a);
  EXPECT_EQ(r.b2, 0u);
  ASSERT_EQ(r.h1_torsion.size(), 1u);
  EXPECT_EQ(r.h1_torsion[0], 2);
  auto j = homology_to_json(r);
  EXPECT_EQ(j["torsion"], nlohmann::json::parse("[2]"));
  EXPECT_EQ(j["b1"], 0);
}

// Double counting, rank bounds, and the linking number of two components
// equal to the sum over intersection points of their multiplicity product.
TEST(Homology, RandomArrangementProperties) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 150; ++t) {
    const int n = 4 + static_cast<int>(rng() % 8);
    auto d = braidwire::testing::random_diagram(rng, n, 8);
    Arrangement a{d, {}};
    for (const auto& c : component_names(d)) a.free_points[c] = static_cast<int>(rng() % 3);
    auto m = incidence(a);
    auto r = homology(a);
    long total_w = 0, total_cols = 0;
    for (const auto& [c, w] : r.weights) total_w += w;
    for (std::size_t j = 0; j < m.columns.size(); ++j) {
      int col = 0;
      for (std::size_t i = 0; i < m.rows.size(); ++i) col += m.entries[i][j];
      total_cols += col;
      if (j < m.intersection_columns)
        EXPECT_GE(col, 2);
      else
        EXPECT_EQ(col, 1);
    }
    EXPECT_EQ(total_w, total_cols);
    EXPECT_EQ(r.b2 + r.rank, r.points);
    EXPECT_LE(r.rank, r.disks);

    auto lm = linking_matrix(boundary_braid(d), right_chart(d));
    for (std::size_t i = 0; i < m.rows.size(); ++i)
      for (std::size_t k = i + 1; k < m.rows.size(); ++k) {
        long expect = 0;
        for (std::size_t j = 0; j < m.intersection_columns; ++j)
          expect += static_cast<long>(m.entries[i][j]) * m.entries[k][j];
        EXPECT_EQ(lm.lk(m.rows[i], m.rows[k]), expect) << print_diagram(d);
      }
  }
}

TEST(Homology, QhdCheckReasons) {
  // Example 3.1 is not a germ of this family: names are checked first.
  Arrangement a{parse_diagram(kExample31), {{"A", 2}, {"B", 2}}};
  EXPECT_THROW(qhd_check(a, germ_data(-1, 1)), Error);
}
