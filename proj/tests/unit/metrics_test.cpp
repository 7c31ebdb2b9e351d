#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "slogan/annotate.hpp"
#include "slogan/error.hpp"
#include "slogan/metrics.hpp"

using namespace slogan;
using namespace slogan::metrics;

namespace {

const char* kRef = "Digital Marketing Firm in New Zealand";
const char* kHyp = "Digital Marketing Firm in New Columbia";

CandidateSet set_of(std::vector<std::string> slogans, std::string description = "",
                    ControlCode code = ControlCode::NN) {
  CandidateSet s;
  s.pair_id = "p";
  s.description = std::move(description);
  for (auto& slogan : slogans) s.candidates.push_back({std::move(slogan), code});
  return s;
}

std::string random_text(std::mt19937& rng, std::size_t max_len) {
  static const char* vocab[] = {"a", "b", "c", "d", "e", "Best", "coffee,", "(tea)"};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(vocab) - 1);
  std::string out;
  for (std::size_t i = len(rng); i > 0; --i) {
    if (!out.empty()) out += ' ';
    out += vocab[pick(rng)];
  }
  return out;
}

}  // namespace

TEST(Rouge, WorkedExample) {
  EXPECT_NEAR(rouge_n(kRef, kHyp, 1).f1 * 100, 83.3, 0.05);
  EXPECT_NEAR(rouge_n(kRef, kHyp, 2).f1 * 100, 80.0, 0.05);
  EXPECT_NEAR(rouge_l(kRef, kHyp).f1 * 100, 83.3, 0.05);
}

TEST(Rouge, IdentityAndDisjoint) {
  EXPECT_DOUBLE_EQ(rouge_n("Best coffee in town", "best coffee in town!", 1).f1, 1.0);
  EXPECT_DOUBLE_EQ(rouge_l("Best coffee in town", "Best coffee in town").f1, 1.0);
  EXPECT_DOUBLE_EQ(rouge_l("alpha beta", "gamma delta").f1, 0.0);
  EXPECT_DOUBLE_EQ(rouge_n("", "something", 1).f1, 0.0);
  EXPECT_DOUBLE_EQ(rouge_n("one", "one", 2).f1, 0.0);
}

TEST(Rouge, LcsByHand) {
  const RougeScore s = rouge_l("a b c", "a c");
  EXPECT_DOUBLE_EQ(s.precision, 1.0);
  EXPECT_DOUBLE_EQ(s.recall, 2.0 / 3.0);
  EXPECT_NEAR(s.f1, 0.8, 1e-12);
}

TEST(Rouge, ClipsRepeatedGrams) {
  const RougeScore s = rouge_n("the cat", "the the the", 1);
  EXPECT_DOUBLE_EQ(s.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.recall, 0.5);
}

TEST(Rouge, ZeroOrderIsRejected) { EXPECT_THROW(rouge_n("a", "a", 0), ValidationError); }

TEST(Rouge, SwapExchangesPrecisionAndRecall) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::string a = random_text(rng, 7);
    const std::string b = random_text(rng, 7);
    for (std::size_t n = 1; n <= 2; ++n) {
      const RougeScore ab = rouge_n(a, b, n);
      const RougeScore ba = rouge_n(b, a, n);
      EXPECT_DOUBLE_EQ(ab.precision, ba.recall);
      EXPECT_DOUBLE_EQ(ab.f1, ba.f1);
    }
    EXPECT_DOUBLE_EQ(rouge_l(a, b).f1, rouge_l(b, a).f1);
  }
}

TEST(Rouge, MatchesBruteForceOracle) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::string ref = random_text(rng, 8);
    const std::string hyp = random_text(rng, 8);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto expect = oracle::rouge_n(ref, hyp, n);
      const RougeScore got = rouge_n(ref, hyp, n);
      EXPECT_NEAR(got.precision, expect.p, 1e-12) << ref << " | " << hyp;
      EXPECT_NEAR(got.recall, expect.r, 1e-12);
      EXPECT_NEAR(got.f1, expect.f, 1e-12);
    }
    const auto expect = oracle::rouge_l(ref, hyp);
    EXPECT_NEAR(rouge_l(ref, hyp).f1, expect.f, 1e-12) << ref << " | " << hyp;
  }
}

TEST(Diversity, BoundsAndHandCount) {
  const std::vector<CandidateSet> same{set_of(std::vector<std::string>(6, "Best Coffee In Town"))};
  EXPECT_NEAR(diversity_score(same), 1.0 / 6.0, 1e-4);
  const std::vector<CandidateSet> disjoint{
      set_of({"alpha beta", "gamma delta", "epsilon zeta", "eta theta", "iota kappa", "lambda mu"})};
  EXPECT_DOUBLE_EQ(diversity_score(disjoint), 1.0);
  const std::vector<CandidateSet> mixed{set_of({"best coffee", "best tea"})};
  EXPECT_DOUBLE_EQ(diversity_score(mixed), 0.75);
}

TEST(Abstractiveness, NovelTokenShare) {
  const std::vector<CandidateSet> copied{set_of({"fresh tacos daily"}, "We sell fresh tacos daily.")};
  EXPECT_DOUBLE_EQ(abstractiveness(copied), 0.0);
  const std::vector<CandidateSet> novel{set_of({"quick bright lights"}, "We sell fresh tacos daily.")};
  EXPECT_DOUBLE_EQ(abstractiveness(novel), 1.0);
  const std::vector<CandidateSet> partial{set_of({"fresh fast tacos"}, "Only tacos here")};
  EXPECT_NEAR(abstractiveness(partial), 2.0 / 3.0, 1e-12);
}

TEST(CtrlAccuracy, CountsMatchesPerCode) {
  const annotate::LexiconPosTagger tagger;
  const std::vector<CandidateSet> pronouns{
      set_of({"Your home, our passion", "We build boats", "Our coffee rocks"}, "", ControlCode::PR)};
  EXPECT_DOUBLE_EQ(ctrl_accuracy(pronouns, tagger).at(ControlCode::PR), 1.0);
  const std::vector<CandidateSet> none{set_of({"The best boats", "Build with us"}, "", ControlCode::PR)};
  EXPECT_DOUBLE_EQ(ctrl_accuracy(none, tagger).at(ControlCode::PR), 0.0);
  const std::vector<CandidateSet> mixed{set_of(
      {"Coffee for everyone", "Software that works", "Office space made simple", "The best office"}, "",
      ControlCode::NN)};
  EXPECT_DOUBLE_EQ(ctrl_accuracy(mixed, tagger).at(ControlCode::NN), 0.75);
}

TEST(Kappa, Examples) {
  const std::vector<std::string> a{"x", "y", "x", "z"};
  EXPECT_DOUBLE_EQ(cohen_kappa(a, a), 1.0);

  std::vector<std::string> r1;
  std::vector<std::string> r2;
  const auto add = [&](const char* x, const char* y, int n) {
    for (int i = 0; i < n; ++i) {
      r1.emplace_back(x);
      r2.emplace_back(y);
    }
  };
  add("yes", "yes", 20);
  add("yes", "no", 5);
  add("no", "yes", 10);
  add("no", "no", 15);
  // p_o = 35/50, p_e = (25*30 + 25*20) / 2500 = 0.5
  EXPECT_NEAR(cohen_kappa(r1, r2), 0.4, 1e-12);

  const std::vector<std::string> p{"a", "a", "b", "b"};
  const std::vector<std::string> q{"a", "b", "a", "b"};
  EXPECT_NEAR(cohen_kappa(p, q), 0.0, 1e-12);
}

TEST(Kappa, InvariantUnderRelabeling) {
  const std::vector<std::string> a{"1", "2", "3", "1", "2", "2"};
  const std::vector<std::string> b{"1", "3", "3", "2", "2", "1"};
  const std::vector<std::string> a2{"c", "a", "b", "c", "a", "a"};
  const std::vector<std::string> b2{"c", "b", "b", "a", "a", "c"};
  EXPECT_DOUBLE_EQ(cohen_kappa(a, b), cohen_kappa(a2, b2));
}

TEST(Kappa, RejectsMismatchedInput) {
  const std::vector<std::string> a{"x"};
  const std::vector<std::string> b{"x", "y"};
  EXPECT_THROW(cohen_kappa(a, b), ValidationError);
  EXPECT_THROW(cohen_kappa({}, {}), ValidationError);
}

TEST(Kappa, MatchesFormulaOracle) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> label(0, 3);
  std::uniform_int_distribution<int> size(1, 30);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> a;
    std::vector<std::string> b;
    for (int n = size(rng); n > 0; --n) {
      a.push_back(std::to_string(label(rng)));
      b.push_back(std::to_string(label(rng)));
    }
    EXPECT_NEAR(cohen_kappa(a, b), oracle::kappa(a, b), 1e-12);
  }
}

TEST(Significance, IdenticalScoresGiveOne) {
  const std::vector<double> a{0.1, 0.5, 0.3, 0.9};
  EXPECT_DOUBLE_EQ(paired_t_test(a, a), 1.0);
  EXPECT_DOUBLE_EQ(wilcoxon_signed_rank(a, a), 1.0);
}

TEST(Significance, ConstantShiftIsSignificant) {
  std::mt19937 rng(3);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> a(30);
  std::vector<double> b(30);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = 50 + noise(rng);
    b[i] = a[i] + 10 + 0.1 * noise(rng);
  }
  EXPECT_LT(paired_t_test(a, b), 0.001);
  EXPECT_LT(wilcoxon_signed_rank(a, b), 0.001);
}

TEST(Significance, SmallWilcoxonTable) {
  // Both differences positive: 1 of 4 sign patterns is as extreme on each side.
  const std::vector<double> a{0.0, 0.0};
  const std::vector<double> b{1.0, 2.0};
  EXPECT_DOUBLE_EQ(wilcoxon_signed_rank(a, b), 0.5);
  const std::vector<double> c{1.0, -2.0};
  EXPECT_DOUBLE_EQ(wilcoxon_signed_rank(a, c), 1.0);
}

TEST(Significance, TTestMatchesTextbookValue) {
  // d = {1,2,3,4,5}: t = 3 / (sqrt(2.5)/sqrt(5)) = 4.2426, df 4, p = 0.01324
  const std::vector<double> a{0, 0, 0, 0, 0};
  const std::vector<double> b{1, 2, 3, 4, 5};
  EXPECT_NEAR(paired_t_test(a, b), 0.013236, 1e-5);
}

TEST(Significance, LargeSampleUsesNormalApproximation) {
  std::vector<double> a(40, 0.0);
  std::vector<double> b(40);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = (i % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(i + 1);
  const double p = wilcoxon_signed_rank(a, b);
  EXPECT_GT(p, 0.5);
  EXPECT_LE(p, 1.0);
}

TEST(Significance, WilcoxonMatchesEnumerationOracle) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> diff(-3, 3);
  std::uniform_int_distribution<int> size(2, 5);
  for (int i = 0; i < 200; ++i) {
    const int n = size(rng);
    std::vector<double> a(static_cast<std::size_t>(n), 0.0);
    std::vector<double> b;
    for (int k = 0; k < n; ++k) b.push_back(diff(rng));
    EXPECT_NEAR(wilcoxon_signed_rank(a, b), oracle::wilcoxon(a, b), 1e-12);
  }
}

TEST(Significance, Errors) {
  const std::vector<double> one{1.0};
  const std::vector<double> two{1.0, 2.0};
  EXPECT_THROW(paired_t_test(one, one), ValidationError);
  EXPECT_THROW(wilcoxon_signed_rank(one, two), ValidationError);
}

TEST(Report, JsonAndTable) {
  EvalReport r;
  r.system = "first-k";
  r.num_pairs = 2;
  r.rouge["rouge1"] = {0.5, 0.25, 1.0 / 3.0};
  r.diversity = 0.75;
  r.ctrl_accuracy[ControlCode::VB] = 0.5;
  const io::Json j = to_json(r);
  EXPECT_EQ(j["system"], "first-k");
  EXPECT_DOUBLE_EQ(j["rouge"]["rouge1"]["recall"].get<double>(), 0.25);
  EXPECT_DOUBLE_EQ(j["ctrl_accuracy"]["VB"].get<double>(), 0.5);
  const std::vector<EvalReport> reports{r};
  const std::string table = format_results_table(reports);
  EXPECT_NE(table.find("first-k"), std::string::npos);
  EXPECT_NE(table.find("33.33"), std::string::npos);
  EXPECT_NE(table.find("75.00"), std::string::npos);
}
