#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "eureka/cascade.hpp"
#include "oracles.hpp"

using namespace eureka;

namespace {

Lexicon root() { return parse_lexicon(oracle::read_file(std::string(EUREKA_DATA_DIR) + "/demo.lex")); }

std::vector<Line> quoted() {
  return parse_corpus(oracle::read_file(std::string(EUREKA_DATA_DIR) + "/quoted-lines.txt"));
}

std::set<std::string> words_on(const Lexicon& lex, int drum) {
  std::set<std::string> out;
  for (const auto& e : lex.drum(drum)) out.insert(e.word.str());
  return out;
}

}  // namespace

TEST(Cascade, CorpusParsing) {
  const auto corpus = quoted();
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus[0][3], "CONJUNGUNT");
  EXPECT_THROW(parse_corpus("IMPIA VERBA DOMI\n"), CascadeError);
  EXPECT_TRUE(parse_corpus("# nothing\n\n").empty());
}

TEST(Cascade, QuotedLinesRebuildTheDemoDrums) {
  const auto run = run_cascade(root(), {quoted(), 1}, {7, 64, 100});
  ASSERT_EQ(run.generations.size(), 1u);
  const Lexicon& gen = run.generations[0];
  for (int d = 1; d <= drum_count; ++d) EXPECT_EQ(gen.drum(d).size(), 2u) << d;
  const auto program = compile_program(gen);
  EXPECT_EQ(count_program_lines(program), 64u);
  std::set<std::string> all;
  for (const auto& v : enumerate_lines(program)) all.insert(v.text());
  ASSERT_EQ(run.verses.size(), 64u);
  for (const auto& r : run.verses) EXPECT_TRUE(all.count(r.verse)) << r.verse;
}

TEST(Cascade, QuantitiesComeFromTheRoot) {
  const auto gen = lexicon_from_corpus(root(), quoted());
  EXPECT_EQ(quantity_string(gen.drum(4).front().quantities), "---");
  EXPECT_EQ(quantity_string(gen.drum(3).front().quantities), "u-");
}

TEST(Cascade, SingleLineCorpusRepeatsIt) {
  const std::vector<Line> corpus{quoted()[0]};
  const auto run = run_cascade(root(), {corpus, 1}, {3, 10, 100});
  for (const auto& r : run.verses) EXPECT_EQ(r.verse, "IMPIA VERBA DOMI CONJUNGUNT CRIMINA MALA");
}

TEST(Cascade, UnknownWordIsNamed) {
  std::vector<Line> corpus = quoted();
  corpus[1][2] = "NUMQUAM";
  try {
    lexicon_from_corpus(root(), corpus);
    FAIL() << "expected CascadeError";
  } catch (const CascadeError& e) {
    EXPECT_NE(std::string(e.what()).find("NUMQUAM"), std::string::npos);
  }
  corpus[1][2] = "FORIS!";
  EXPECT_THROW(lexicon_from_corpus(root(), corpus), CascadeError);
  EXPECT_THROW(lexicon_from_corpus(root(), std::vector<Line>{}), CascadeError);
}

TEST(Cascade, DeeperGenerationsOnlyShrink) {
  const auto run = run_cascade(root(), {quoted(), 4}, {11, 5, 3});
  ASSERT_EQ(run.generations.size(), 4u);
  for (std::size_t g = 1; g < run.generations.size(); ++g)
    for (int d = 1; d <= drum_count; ++d) {
      const auto before = words_on(run.generations[g - 1], d);
      for (const auto& w : words_on(run.generations[g], d)) EXPECT_TRUE(before.count(w)) << w;
    }
  EXPECT_EQ(run.verses.size(), 5u);
  EXPECT_THROW(run_cascade(root(), {quoted(), 0}, {}), CascadeError);
}

TEST(Cascade, Deterministic) {
  const auto a = run_cascade(root(), {quoted(), 3}, {42, 20, 10});
  const auto b = run_cascade(root(), {quoted(), 3}, {42, 20, 10});
  EXPECT_EQ(a.verses, b.verses);
}
