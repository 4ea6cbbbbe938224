#include <gtest/gtest.h>

#include <sstream>

#include "modpart/oeis.hpp"
#include "modpart/verify.hpp"

using namespace modpart;

namespace {

std::vector<Term> brute_force_fixture(u64 k, i64 s, u64 n_end, i64 offset) {
  std::vector<Term> out;
  for (u64 n = k; n <= n_end; ++n)
    out.push_back({offset + static_cast<i64>(n - k), Int(brute_force_count({n, k, s}))});
  return out;
}

std::vector<Term> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in);
}

} // namespace

TEST(Sequence, Examples) {
  std::ostringstream os;
  write_bfile(os, generate_terms({3, 0, 3, 8, 3}));
  EXPECT_EQ(os.str(), "3 1\n4 1\n5 2\n6 4\n7 5\n8 7\n");
  for (const auto& t : generate_terms({1, 0, 1, 5, 1})) EXPECT_EQ(t.value, 1);
  EXPECT_THROW(generate_terms({3, 0, 5, 4, 3}), std::invalid_argument);
  EXPECT_THROW(generate_terms({3, 0, 2, 4, 3}), std::invalid_argument);
}

TEST(Sequence, JsonShape) {
  const SequenceSpec spec{3, 0, 3, 6, 3};
  const auto j = sequence_json(spec, generate_terms(spec));
  EXPECT_EQ(j.dump(), R"({"k":3,"offset":3,"s":0,"terms":["1","1","2","4"]})");
}

TEST(Sequence, ParallelMatchesSerial) {
  const SequenceSpec spec{6, 2, 6, 120, 6};
  EXPECT_EQ(generate_terms(spec, 1), generate_terms(spec, 4));
}

TEST(BFile, RoundTrip) {
  const auto terms = generate_terms({5, 1, 5, 200, 0});
  std::ostringstream os;
  write_bfile(os, terms);
  EXPECT_EQ(parse(os.str()), terms);
}

TEST(BFile, ParsingRules) {
  EXPECT_EQ(parse("# header\n\n1 5\n2 7\r\n").size(), 2u);
  EXPECT_THROW(parse("1 5\n1 6\n"), std::invalid_argument);
  EXPECT_THROW(parse("1 -5\n"), std::invalid_argument);
  EXPECT_THROW(parse("1\n"), std::invalid_argument);
  EXPECT_THROW(parse("1 5 6\n"), std::invalid_argument);
  EXPECT_THROW(parse("1 x5\n"), std::invalid_argument);
  EXPECT_EQ(parse("-2 123456789012345678901234567890\n")[0].value.str(), "123456789012345678901234567890");
}

TEST(Fixture, PairTable) {
  EXPECT_EQ(oeis_pairs().size(), 20u);
  const auto p = find_oeis_pair("A011796");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->k, 6u);
  EXPECT_EQ(p->s, 2);
  EXPECT_FALSE(find_oeis_pair("A000045"));
}

TEST(Fixture, BruteForceFixturesAgree) {
  const std::pair<u64, i64> pairs[] = {{3, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}, {5, 0},
                                       {5, 1}, {6, 0}, {6, 1}, {6, 2}, {6, 3}};
  for (auto [k, s] : pairs) {
    const auto fixture = brute_force_fixture(k, s, k + 19, static_cast<i64>(k));
    const auto res = check_fixture(fixture, k, s, static_cast<i64>(k));
    EXPECT_TRUE(res.agree) << k << "," << s;
    EXPECT_EQ(res.shift, 0);
    EXPECT_EQ(res.compared, 20u);
  }
}

TEST(Fixture, ShiftSearch) {
  const auto fixture = brute_force_fixture(6, 2, 26, 0); // index 0 is n = 6
  EXPECT_EQ(check_fixture(fixture, 6, 2, 0).shift, 0);
  const auto res = check_fixture(fixture, 6, 2, 2);
  EXPECT_TRUE(res.agree);
  EXPECT_EQ(res.shift, 2);
  // Out of the +-3 window.
  EXPECT_FALSE(check_fixture(fixture, 6, 2, 10).agree);
  // Leading terms with n < k are zero in the computed sequence.
  std::vector<Term> padded{{1, 0}, {2, 0}};
  for (auto t : brute_force_fixture(3, 0, 20, 3)) padded.push_back(t);
  const auto r2 = check_fixture(padded, 3, 0, 3);
  EXPECT_TRUE(r2.agree);
  EXPECT_EQ(r2.compared, padded.size());
}

TEST(Fixture, CorruptedTermIsReported) {
  auto fixture = brute_force_fixture(4, 1, 40, 4);
  fixture[17].value += 1;
  const auto res = check_fixture(fixture, 4, 1, 4);
  EXPECT_FALSE(res.agree);
  ASSERT_TRUE(res.first_mismatch);
  EXPECT_EQ(res.first_mismatch->index, fixture[17].index);
  EXPECT_EQ(res.first_mismatch->n, 4u + 17u);
  EXPECT_EQ(res.first_mismatch->expected, fixture[17].value);
}

TEST(VerifyReport, JsonSchema) {
  Report r{"demo", 0, {}};
  r.expect("a", "1", "1");
  r.expect("b", "1", "2");
  const auto j = to_json(r);
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["cases"], 2);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["failures"][0]["id"], "b");
  EXPECT_EQ(j["failures"][0]["expected"], "1");
  EXPECT_EQ(j["failures"][0]["got"], "2");
}

TEST(VerifyReport, QuickSuitesPass) {
  VerifyDepths d = VerifyDepths::quick();
  d.threads = 2;
  for (const char* s : {"matrices", "counts", "series", "abelian"}) {
    const Report r = verify_suite(s, d);
    EXPECT_TRUE(r.passed()) << s << ": " << to_json(r).dump();
    EXPECT_GT(r.cases, 0u);
  }
  EXPECT_THROW(verify_suite("nope", d), std::invalid_argument);
}
