#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "slogan/baselines.hpp"
#include "slogan/error.hpp"
#include "slogan/text.hpp"

using namespace slogan;
using namespace slogan::baselines;

namespace {

const char* kBurrito =
    "We may not be the only burrito in town, but we've got the freshest ingredients and the fastest "
    "counter service around.";

const annotate::LexiconPosTagger& tagger() {
  static const annotate::LexiconPosTagger t;
  return t;
}

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  for (auto w : text::split_whitespace(s)) out.emplace_back(w);
  return out;
}

std::string lower_join(const std::vector<std::string>& v) { return text::to_lower(text::join(v, " ")); }

std::vector<std::string> tags(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& t : tagger().tag(s)) out.push_back(t.tag.str());
  return out;
}

const std::vector<std::string> kSlogans{
    "Flexible Office Space",   "Affordable Office Furniture", "Creative Design Studio",
    "Boost Your Business",     "Grow Your Brand",             "The Best Burrito in Town",
    "Fresh Coffee Every Day",  "Smart Energy Solutions",      "Your Trusted Energy Partner",
    "Simply the Best Coffee",  "Quality Printing Services",   "Modern Dental Care"};

}  // namespace

TEST(FirstSentence, Examples) {
  EXPECT_EQ(first_sentence("We build boats. Fast ones."), "We build boats.");
  EXPECT_EQ(first_sentence("Welcome to Powershop, a better gas and energy supplier. We offer great deals."),
            "Welcome to Powershop, a better gas and energy supplier.");
  EXPECT_EQ(first_sentence("No terminator here"), "No terminator here");
  EXPECT_EQ(first_sentence("Founded by Dr. Smith in the U.S. in 1990. Now global."),
            "Founded by Dr. Smith in the U.S. in 1990.");
  EXPECT_EQ(first_sentence("Version 2.5 is out! Try it."), "Version 2.5 is out!");
}

TEST(FirstK, Examples) {
  EXPECT_EQ(first_k_words(kBurrito, 11), "We may not be the only burrito in town, but we've");
  EXPECT_EQ(first_k_words("Welcome to Powershop, a better gas and energy supplier. We offer great deals.", 11),
            "Welcome to Powershop, a better gas and energy supplier. We offer");
  EXPECT_EQ(first_k_words("one two three four five", 11), "one two three four five");
  EXPECT_EQ(first_k_words("  spaced\tout   words ", 2), "spaced\tout");
}

TEST(SweepK, ConstructedOptimum) {
  std::vector<ReferencePair> pairs;
  for (const char* d : {"alpha beta gamma delta epsilon zeta eta theta", "one two three four five six seven",
                        "red green blue yellow cyan magenta black white"}) {
    const auto w = split(d);
    pairs.push_back({d, text::join(std::vector<std::string>(w.begin(), w.begin() + 4), " ")});
  }
  const SweepResult r = sweep_k(pairs, 1, 8);
  EXPECT_EQ(r.best_k, 4u);
  ASSERT_EQ(r.curve.size(), 8u);
  EXPECT_DOUBLE_EQ(r.curve[3].rouge1, 1.0);
  EXPECT_EQ(sweep_k(pairs, 6, 6).best_k, 6u);
  EXPECT_THROW(sweep_k(pairs, 5, 4), ValidationError);
  EXPECT_THROW(sweep_k({}, 1, 4), ValidationError);
}

TEST(Skeletons, Mining) {
  const std::vector<std::string> one{"Flexible Office Space"};
  const auto single = mine_skeletons(one, tagger());
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].key(), "JJ NN NN");
  EXPECT_EQ(single[0].frequency, 1u);
  EXPECT_EQ(single[0].example, "Flexible Office Space");

  const auto mined = mine_skeletons(kSlogans, tagger());
  ASSERT_FALSE(mined.empty());
  EXPECT_EQ(mined[0].key(), "JJ NN NN");
  EXPECT_GE(mined[0].frequency, 3u);
  for (std::size_t i = 1; i < mined.size(); ++i) EXPECT_GE(mined[i - 1].frequency, mined[i].frequency);

  const std::vector<std::string> short_ones{"Hi", "Two words"};
  EXPECT_TRUE(mine_skeletons(short_ones, tagger()).empty());
}

TEST(Keywords, Ranking) {
  const auto kws = extract_keywords(
      "Powerful lead generation software that converts abandoning visitors into subscribers. Our software "
      "makes lead generation simple.",
      tagger());
  std::vector<std::string> top;
  for (std::size_t i = 0; i < std::min<std::size_t>(3, kws.size()); ++i) top.push_back(text::to_lower(kws[i].word));
  std::sort(top.begin(), top.end());
  EXPECT_EQ(top, (std::vector<std::string>{"generation", "lead", "software"}));
  EXPECT_TRUE(extract_keywords("the of and to in", tagger()).empty());
  const auto single = extract_keywords("coffee", tagger());
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].word, "coffee");
}

TEST(Operators, CrossoverSwapsTails) {
  const auto [a, b] = crossover(split("Just do it"), split("Drink more milk"), 1, 0);
  EXPECT_EQ(text::join(a, " "), "Just drink it");
  EXPECT_EQ(text::join(b, " "), "Do more milk");
}

TEST(Operators, Mutation) {
  EXPECT_EQ(text::join(mutate(split("Fast Boats Here"), 0, "quick"), " "), "Quick Boats Here");
  EXPECT_EQ(match_case("coffee", "BEST"), "COFFEE");
  EXPECT_EQ(match_case("Coffee", "best"), "coffee");
  EXPECT_EQ(match_case("iPhone", "Best"), "IPhone");
}

TEST(Operators, Detokenize) {
  const std::vector<std::string> t{"World", "'s", "best", ",", "(", "really", ")", "coffee", "!"};
  EXPECT_EQ(detokenize(t), "World's best, (really) coffee!");
}

TEST(Operators, RandomisedInvariants) {
  std::mt19937 rng(99);
  const std::vector<std::string> pool{"fast", "Boats", "HERE", "milk", "Drink", "it", "ocean", "Blue"};
  std::uniform_int_distribution<std::size_t> len(1, 6);
  std::uniform_int_distribution<std::size_t> word(0, pool.size() - 1);
  for (int n = 0; n < 1000; ++n) {
    std::vector<std::string> a(len(rng));
    std::vector<std::string> b(len(rng));
    for (auto& w : a) w = pool[word(rng)];
    for (auto& w : b) w = pool[word(rng)];
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng);
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng);
    const auto [ca, cb] = crossover(a, b, i, j);
    ASSERT_EQ(ca.size(), a.size());
    ASSERT_EQ(cb.size(), b.size());
    EXPECT_TRUE(text::iequals(ca[i], b[j]));
    EXPECT_TRUE(text::iequals(cb[j], a[i]));
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k != i) {
        EXPECT_EQ(ca[k], a[k]);
      }
    }

    const std::string replacement = pool[word(rng)];
    const auto m = mutate(a, i, replacement);
    ASSERT_EQ(m.size(), a.size());
    EXPECT_TRUE(text::iequals(m[i], replacement));
  }
}

TEST(Ga, CandidatesFollowMinedSkeletons) {
  const auto skeletons = mine_skeletons(kSlogans, tagger());
  GaConfig config;
  config.seed = 4;
  const auto candidates = generate_skeleton_slogans(
      "We serve fresh coffee and flexible office space for creative teams in a modern building.", skeletons,
      config, tagger());
  ASSERT_FALSE(candidates.empty());
  EXPECT_LE(candidates.size(), config.num_candidates);
  std::set<std::string> texts;
  for (const auto& c : candidates) {
    EXPECT_TRUE(texts.insert(text::to_lower(c.text())).second);
    std::vector<std::string> want;
    for (const auto& t : skeletons[c.skeleton].pos_sequence) want.push_back(t.str());
    EXPECT_EQ(tags(c.text()), want) << c.text();
  }
  for (std::size_t i = 1; i < candidates.size(); ++i) EXPECT_GE(candidates[i - 1].score, candidates[i].score);
  EXPECT_NE(lower_join(candidates[0].tokens).find_first_of("abcdefghijklmnopqrstuvwxyz"), std::string::npos);
}

TEST(Ga, DeterministicUnderSeed) {
  const auto skeletons = mine_skeletons(kSlogans, tagger());
  GaConfig config;
  config.seed = 11;
  const char* desc = "Affordable energy plans and smart solutions for your home and business.";
  const auto a = generate_skeleton_slogans(desc, skeletons, config, tagger());
  const auto b = generate_skeleton_slogans(desc, skeletons, config, tagger());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].text(), b[i].text());
    EXPECT_DOUBLE_EQ(a[i].score, b[i].score);
  }
}

TEST(Ga, Errors) {
  GaConfig config;
  EXPECT_THROW(generate_skeleton_slogans("anything at all", {}, config, tagger()), ValidationError);
  config.mutation_rate = 1.5;
  const auto skeletons = mine_skeletons(kSlogans, tagger());
  EXPECT_THROW(generate_skeleton_slogans("coffee", skeletons, config, tagger()), ValidationError);
  config = GaConfig{};
  config.population_size = 1;
  EXPECT_THROW(config.validate(), ValidationError);
}
