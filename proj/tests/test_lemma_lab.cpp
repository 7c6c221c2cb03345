#include <gtest/gtest.h>

#include <numeric>

#include "texp/enumerate.hpp"
#include "texp/json_io.hpp"
#include "texp/lemma_lab.hpp"

using namespace texp;

namespace {

using CSols = std::vector<CanonicalSolution>;

// Synthetic form with three congruence-consistent triples, values checked by hand:
// 2 + 3 = 5, 16 + 9 = 25, and 2^5 + 3^5 = 275 = 0 (mod 25).
const CanonicalForm kSynthetic{2, 3, 5, 1, Perm::abc};
const OrderData kSyntheticOrder{1, 2, -1, Int(1)};

std::string value(const LemmaCertificate& c, const std::string& k) { return c.value(k).value_or("<missing>"); }

}  // namespace

TEST(Canonical, Examples) {
  const CanonicalForm f = canonicalize(Instance(3, 5, 2));
  EXPECT_EQ(f.A, 2);
  EXPECT_EQ(f.B, 3);
  EXPECT_EQ(f.C, 5);
  EXPECT_EQ(f.lambda, -1);
  EXPECT_EQ(f.perm, Perm::cab);
  const CanonicalForm g = canonicalize(Instance(2, 3, 5));
  EXPECT_EQ(g.A, 2);
  EXPECT_EQ(g.C, 5);
  EXPECT_EQ(g.lambda, 1);
  EXPECT_EQ(g.perm, Perm::abc);
  const CanonicalForm h = canonicalize(Instance(5, 3, 2));
  EXPECT_EQ(h.perm, Perm::cba);
  EXPECT_EQ(h.C, 5);
  EXPECT_EQ(h.A, 2);
  EXPECT_EQ(h.B, 3);
  EXPECT_EQ(canonicalize(Instance(3, 4, 5)).perm, Perm::abc);
}

TEST(Canonical, ShowcaseMapping) {
  const Instance inst(3, 5, 2);
  const CanonicalForm f = canonicalize(inst);
  EXPECT_EQ(to_canonical_solution(f, {1, 1, 3}), (CanonicalSolution{3, 1, 1}));
  EXPECT_EQ(to_canonical_solution(f, {3, 1, 5}), (CanonicalSolution{5, 3, 1}));
  EXPECT_EQ(to_canonical_solution(f, {1, 3, 7}), (CanonicalSolution{7, 1, 3}));
  EXPECT_THROW(to_canonical_solution(f, {1, 1, 1}), precondition_error);
}

TEST(Canonical, RoundTripAndCountOverRange) {
  for (long a = 2; a <= 20; ++a) {
    for (long b = 2; b <= 20; ++b) {
      for (long c = 2; c <= 20; ++c) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        const Instance inst(a, b, c);
        const CanonicalForm f = canonicalize(inst);
        EXPECT_EQ(f.C, inst.max_base());
        const auto sols = enumerate_solutions(inst, 60).solutions;
        std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> seen;
        for (const auto& s : sols) {
          const CanonicalSolution cs = to_canonical_solution(f, s);
          EXPECT_TRUE(satisfies(f, cs));
          EXPECT_EQ(from_canonical_solution(f, cs), s);
          seen.emplace(cs.X, cs.Y, cs.Z);
        }
        EXPECT_EQ(seen.size(), sols.size());
      }
    }
  }
}

TEST(PmOrder, Examples) {
  PmOrder o = least_pm_order(2, 5);
  EXPECT_EQ(o.n1, 2u);
  EXPECT_EQ(o.delta1, -1);
  o = least_pm_order(3, 8);
  EXPECT_EQ(o.n1, 2u);
  EXPECT_EQ(o.delta1, 1);
  o = least_pm_order(1, 7);
  EXPECT_EQ(o.n1, 1u);
  EXPECT_EQ(o.delta1, 1);
  o = least_pm_order(-1, 7);
  EXPECT_EQ(o.n1, 1u);
  EXPECT_EQ(o.delta1, -1);
  EXPECT_THROW(least_pm_order(2, 4), invalid_input);
  EXPECT_THROW(least_pm_order(2, 1), invalid_input);
}

TEST(PmOrder, MinimalAgainstScan) {
  for (long m = 2; m <= 150; ++m) {
    for (long r = 1; r < m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      const PmOrder o = least_pm_order(r, m);
      long t = 1;
      for (std::uint64_t n = 1; n < o.n1; ++n) {
        t = t * r % m;
        ASSERT_TRUE(t != 1 % m && t != m - 1) << r << " mod " << m;
      }
      t = t * r % m;
      EXPECT_EQ(t, o.delta1 > 0 ? 1 % m : m - 1);
    }
  }
}

TEST(OrderDivisibility, Examples) {
  auto c = check_order_divisibility(2, 5, 6);
  EXPECT_TRUE(c.n1_divides_n);
  EXPECT_EQ(c.delta, -1);
  EXPECT_TRUE(c.divisibility_applicable);
  EXPECT_TRUE(c.holds());
  EXPECT_TRUE(divides(Int(5), Int(65)));
  c = check_order_divisibility(2, 5, 3);
  EXPECT_FALSE(c.n1_divides_n);
  EXPECT_EQ(c.delta, 0);
  EXPECT_TRUE(c.holds());
  for (std::uint64_t n = 1; n <= 20; ++n) {
    c = check_order_divisibility(1, 7, n);
    EXPECT_TRUE(c.holds());
    EXPECT_FALSE(c.divisibility_applicable);  // 1^1 - 1 = 0
  }
  EXPECT_THROW(check_order_divisibility(3, 6, 2), invalid_input);
}

TEST(OrderDivisibility, SmallRangeExhaustive) {
  for (long m = 2; m <= 60; ++m) {
    for (long r = 1; r < 2 * m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      const PmOrder o = least_pm_order(r, m);
      for (std::uint64_t n = 1; n <= 120; ++n) ASSERT_TRUE(check_order_divisibility(r, m, n, o).holds()) << r << m << n;
    }
  }
}

TEST(OrderData, Examples) {
  const Instance inst(3, 5, 2);
  const CanonicalForm f = canonicalize(inst);
  const OrderData od = order_data(f, {{3, 1, 1}, {5, 3, 1}, {7, 1, 3}});
  EXPECT_EQ(od.Z1, 1u);
  EXPECT_EQ(od.n1, 2u);
  EXPECT_EQ(od.delta1, -1);
  EXPECT_EQ(od.f, 1);

  const OrderData od2 = order_data(canonicalize(Instance(2, 3, 5)), {{1, 1, 1}, {4, 2, 2}});
  EXPECT_EQ(std::tie(od2.Z1, od2.n1, od2.delta1), std::make_tuple(1u, 2u, -1));
  EXPECT_EQ(od2.f, 1);

  const OrderData syn = order_data({7, 3, 10, 1, Perm::abc}, {{1, 1, 1}});
  EXPECT_EQ(syn.n1, 2u);
  EXPECT_EQ(syn.delta1, -1);
  EXPECT_EQ(syn.f, 5);
  EXPECT_THROW(order_data(f, {}), precondition_error);
}

TEST(Lemma35, Examples) {
  const CanonicalForm f = canonicalize(Instance(3, 5, 2));
  auto c = verify_lemma_3_5(f, {3, 1, 1}, {7, 1, 3});
  EXPECT_TRUE(c.verdict());
  EXPECT_EQ(value(c, "|XY'-X'Y|"), "4");
  EXPECT_EQ(value(c, "A^|XY'-X'Y| mod C^Z"), "1");
  EXPECT_EQ(value(c, "(-lambda)^(Y+Y') mod C^Z"), "1");
  c = verify_lemma_3_5(f, {3, 1, 1}, {5, 3, 1});
  EXPECT_TRUE(c.verdict());
  EXPECT_EQ(value(c, "|XY'-X'Y|"), "4");
  c = verify_lemma_3_5(canonicalize(Instance(2, 3, 5)), {1, 1, 1}, {4, 2, 2});
  EXPECT_TRUE(c.verdict());
  EXPECT_EQ(value(c, "|XY'-X'Y|"), "2");
  EXPECT_EQ(value(c, "A^|XY'-X'Y| mod C^Z"), "4");
  EXPECT_EQ(value(c, "(-lambda)^(Y+Y') mod C^Z"), "4");
  EXPECT_THROW(verify_lemma_3_5(f, {7, 1, 3}, {3, 1, 1}), precondition_error);
}

TEST(Lemma35, FailingClauseIsData) {
  // not a solution pair: the congruence fails and is reported, not thrown
  const auto c = verify_lemma_3_5(kSynthetic, {1, 1, 1}, {2, 1, 2});
  EXPECT_FALSE(c.verdict());
  EXPECT_FALSE(c.clause("congruence")->holds);
}

TEST(Lemma36, Examples) {
  const CanonicalForm f = canonicalize(Instance(3, 5, 2));
  auto c = verify_lemma_3_6(f, {{3, 1, 1}, {5, 3, 1}, {7, 1, 3}});
  EXPECT_TRUE(c.verdict());
  EXPECT_EQ(value(c, "count_at_Z1"), "2");
  c = verify_lemma_3_6(canonicalize(Instance(2, 3, 5)), {{1, 1, 1}, {4, 2, 2}});
  EXPECT_EQ(value(c, "count_at_Z1"), "1");
  EXPECT_TRUE(verify_lemma_3_6(f, {}).verdict());
  EXPECT_FALSE(verify_lemma_3_6(f, {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}).verdict());
}

TEST(Lemma37, ShowcaseChain) {
  const CanonicalForm f = canonicalize(Instance(3, 5, 2));
  const OrderData od{1, 2, -1, Int(1)};
  auto c = verify_lemma_3_7(f, od, {3, 1, 1}, {7, 1, 3});
  EXPECT_TRUE(c.verdict());
  EXPECT_EQ(value(c, "|X1Y2-X2Y1|"), "4");
  EXPECT_EQ(value(c, "g"), "3");
  EXPECT_EQ(value(c, "lambda'"), "-1");
  EXPECT_EQ(value(c, "Abar"), "13");
  EXPECT_EQ(value(c, "gcd(C,g)"), "1");
  EXPECT_EQ(value(c, "gcd(C,Y2)"), "1");
  EXPECT_EQ(value(c, "gcd(C,f)"), "1");

  c = verify_lemma_3_7(f, od, {5, 3, 1}, {7, 1, 3});
  EXPECT_TRUE(c.verdict());
  EXPECT_EQ(value(c, "|X1Y2-X2Y1|"), "16");
  EXPECT_EQ(value(c, "g"), "13107");
}

TEST(Lemma37, TwoThreeFive) {
  const auto c = verify_lemma_3_7(kSynthetic, kSyntheticOrder, {1, 1, 1}, {4, 2, 2});
  EXPECT_TRUE(c.verdict());
  EXPECT_EQ(value(c, "|X1Y2-X2Y1|"), "2");
  EXPECT_EQ(value(c, "g"), "1");
  EXPECT_EQ(value(c, "gcd(C,Y2)"), "1");
  EXPECT_EQ(value(c, "lambda'"), "-1");  // X1Y2 = 2 < X2Y1 = 4
}

TEST(Lemma37, Preconditions) {
  const CanonicalForm f = canonicalize(Instance(3, 5, 2));
  const OrderData od{1, 2, -1, Int(1)};
  EXPECT_THROW(verify_lemma_3_7(f, od, {3, 1, 1}, {5, 3, 1}), precondition_error);
  EXPECT_THROW(verify_lemma_3_7(f, od, {7, 1, 3}, {3, 1, 1}), precondition_error);
}

TEST(Lemma38, SyntheticFixture) {
  const auto c = verify_lemma_3_8(kSynthetic, kSyntheticOrder, {1, 1, 1}, {4, 2, 2}, {5, 5, 2});
  for (const auto& cl : c.clauses) EXPECT_TRUE(cl.holds) << cl.name;
  EXPECT_TRUE(c.verdict());
  EXPECT_EQ(value(c, "|X2Y3-X3Y2|"), "10");
  EXPECT_EQ(value(c, "h"), "41");  // (2^10 + 1) / 25
  EXPECT_EQ(value(c, "n2"), "5");
  EXPECT_EQ(value(c, "delta1^n2"), "-1");
  EXPECT_EQ(value(c, "(-lambda)^(Y2+Y3)"), "-1");
  EXPECT_EQ(value(c, "C h"), "205");
  EXPECT_EQ(value(c, "f sum"), "205");  // 5 - 50 + 250 - 625 + 625
  EXPECT_EQ(value(c, "f n2 mod C"), "0");
  EXPECT_EQ(value(c, "gcd(C,f)"), "1");
  EXPECT_EQ(value(c, "Y2 max{X2Y3,X3Y2}"), "40");
  EXPECT_EQ(value(c, "max{X2,Y3,X3,Y2}^3"), "125");
}

TEST(Lemma38, SecondSyntheticFixture) {
  // 2 + 3^13 = 1594325 = 25 * 63773
  const auto c = verify_lemma_3_8(kSynthetic, kSyntheticOrder, {1, 1, 1}, {4, 2, 2}, {1, 13, 2});
  EXPECT_TRUE(c.verdict());
  EXPECT_EQ(value(c, "|X2Y3-X3Y2|"), "50");
  EXPECT_EQ(value(c, "h"), "45035996273705");
  EXPECT_EQ(value(c, "n2"), "25");
  EXPECT_EQ(value(c, "C h"), "225179981368525");
  EXPECT_EQ(value(c, "Y2 max{X2Y3,X3Y2}"), "104");
}

TEST(Lemma38, InconsistentTripleFailsClauses) {
  // 2^5 + 3^4 = 113 is not 0 mod 25
  const auto c = verify_lemma_3_8(kSynthetic, kSyntheticOrder, {1, 1, 1}, {4, 2, 2}, {5, 4, 2});
  EXPECT_FALSE(c.verdict());
  EXPECT_FALSE(c.clause("congruence")->holds);
  EXPECT_FALSE(c.clause("h_exact")->holds);
}

TEST(Lemma38, Preconditions) {
  const CanonicalForm f = canonicalize(Instance(3, 5, 2));
  const OrderData od{1, 2, -1, Int(1)};
  EXPECT_THROW(verify_lemma_3_8(f, od, {3, 1, 1}, {5, 3, 1}, {7, 1, 3}), precondition_error);
  EXPECT_THROW(verify_lemma_3_8(kSynthetic, kSyntheticOrder, {1, 1, 1}, {4, 2, 2}, {4, 2, 2}), precondition_error);
  EXPECT_THROW(verify_lemma_3_8(kSynthetic, kSyntheticOrder, {1, 1, 1}, {4, 2, 2}, {2, 1, 1}), precondition_error);
}

TEST(Certify, ShowcaseReport) {
  const Instance inst(3, 5, 2);
  const auto rep = certify(inst, enumerate_solutions(inst, 100).solutions);
  ASSERT_TRUE(rep.order);
  EXPECT_EQ(std::tie(rep.order->Z1, rep.order->n1, rep.order->delta1), std::make_tuple(1u, 2u, -1));
  EXPECT_EQ(rep.order->f, 1);
  EXPECT_TRUE(rep.all_pass());
  std::map<std::string, int> per;
  for (const auto& c : rep.certificates) ++per[c.lemma];
  EXPECT_EQ(per["3.5"], 3);
  EXPECT_EQ(per["3.6"], 1);
  EXPECT_EQ(per["3.7"], 2);
  EXPECT_EQ(per.count("3.8"), 0u);
}

TEST(Certify, JsonCarriesDecimalStrings) {
  const auto c = verify_lemma_3_7(canonicalize(Instance(3, 5, 2)), {1, 2, -1, Int(1)}, {5, 3, 1}, {7, 1, 3});
  const Json j = to_json(c);
  EXPECT_EQ(j["lemma"], "3.7");
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["recomputed"]["g"], "13107");
  EXPECT_TRUE(j["inputs"]["C"].is_string());
  EXPECT_EQ(j["clauses"].size(), c.clauses.size());
  EXPECT_EQ(Json::parse(j.dump()), j);
}

TEST(Pillai, Examples) {
  auto r = pillai_count(3, 2, 1, -1, 40);
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.solutions, (std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {2, 3}}));
  r = pillai_count(2, 3, 11, 1, 40);
  EXPECT_EQ(r.solutions, (std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 2}, {3, 1}}));
  r = pillai_count(2, 3, 7, 1, 40);
  EXPECT_EQ(r.solutions, (std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 1}}));
  EXPECT_THROW(pillai_count(4, 6, 2, 1, 40), invalid_input);
  EXPECT_THROW(pillai_count(1, 3, 2, 1, 40), invalid_input);
  EXPECT_THROW(pillai_count(2, 3, 0, 1, 40), invalid_input);
  EXPECT_THROW(pillai_count(2, 3, 5, 0, 40), invalid_input);
}

TEST(Pillai, ScanMatchesCount) {
  for (long A = 2; A <= 7; ++A) {
    for (long B = 2; B <= 7; ++B) {
      if (std::gcd(A, B) != 1) continue;
      for (int sign : {1, -1}) {
        const auto scan = pillai_scan(A, B, sign, 20, 1, 3000);
        for (std::uint64_t k = 1; k <= 3000; ++k) {
          const auto r = pillai_count(A, B, Int(static_cast<unsigned long>(k)), sign, 20);
          const auto it = scan.find(k);
          const std::size_t n = it == scan.end() ? 0 : it->second.size();
          ASSERT_EQ(r.count, n) << A << ' ' << B << ' ' << k << ' ' << sign;
        }
      }
    }
  }
}
