#include <string>

#include <gtest/gtest.h>

#include "eureka/lexicon.hpp"
#include "oracles.hpp"

using namespace eureka;

namespace {

const std::string demo_path = std::string(EUREKA_DATA_DIR) + "/demo.lex";

std::string six_drums(const std::string& first_line) {
  return first_line +
         "\n2 CASTRA -u noun\n3 FORIS u- adv\n4 PRAENARRANT --- verb\n5 PROELIA -uu noun\n6 MULTA -u adj\n";
}

LexiconError::Kind error_kind(const std::string& text) {
  try {
    parse_lexicon(text);
  } catch (const LexiconError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return LexiconError::Kind::syntax;
}

}  // namespace

TEST(ParseLexicon, ReadsAnEntry) {
  const auto lex = parse_lexicon(six_drums("1 MARTIA -uu adj"));
  const LexiconEntry& e = lex.drum(1).at(0);
  EXPECT_EQ(e.drum, 1);
  EXPECT_EQ(e.word.str(), "MARTIA");
  EXPECT_EQ(e.quantities, (QuantitySeq{Quantity::long_, Quantity::short_, Quantity::short_}));
  EXPECT_EQ(e.category, Slot::adj1);
  EXPECT_EQ(lex.drum(4).at(0).word.str(), "PRÆNARRANT");
}

TEST(ParseLexicon, CommentsBlankLinesAndCase) {
  const auto lex = parse_lexicon("# header\n\n" + six_drums("1 martia -UU ADJ   # trailing"));
  EXPECT_EQ(lex.drum(1).at(0).word.str(), "MARTIA");
  EXPECT_EQ(lex.size(), 6u);
}

TEST(ParseLexicon, EmptyDocumentReportsDrumOne) {
  try {
    parse_lexicon("");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.kind(), LexiconError::Kind::empty_drum);
    EXPECT_NE(std::string(e.what()).find("empty drum 1"), std::string::npos);
  }
}

TEST(ParseLexicon, MissingDrumIsReported) {
  try {
    parse_lexicon("1 MARTIA -uu adj\n2 CASTRA -u noun\n");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.kind(), LexiconError::Kind::empty_drum);
    EXPECT_NE(std::string(e.what()).find("empty drum 3"), std::string::npos);
  }
}

TEST(ParseLexicon, AlphabetViolationHasLineAndColumn) {
  try {
    parse_lexicon("# x\n1 WALDO -uu adj\n");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.kind(), LexiconError::Kind::alphabet);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_EQ(error_kind(six_drums("1 MART1A -uu adj")), LexiconError::Kind::alphabet);
}

TEST(ParseLexicon, ErrorKinds) {
  using K = LexiconError::Kind;
  EXPECT_EQ(error_kind(six_drums("7 MARTIA -uu adj")), K::drum_range);
  EXPECT_EQ(error_kind(six_drums("0 MARTIA -uu adj")), K::drum_range);
  EXPECT_EQ(error_kind(six_drums("x MARTIA -uu adj")), K::syntax);
  EXPECT_EQ(error_kind(six_drums("1 MARTIA -uu")), K::syntax);
  EXPECT_EQ(error_kind(six_drums("1 MARTIA -uu adj extra")), K::syntax);
  EXPECT_EQ(error_kind(six_drums("1 MARTIA -ux adj")), K::syntax);
  EXPECT_EQ(error_kind(six_drums("1 MARTIA -uu pronoun")), K::syntax);
  EXPECT_EQ(error_kind(six_drums("1 MARTIA -uu noun")), K::category);
  EXPECT_EQ(error_kind(six_drums("1 MARS ----- adj")), K::quantity);
}

TEST(ParseLexicon, ColumnOfBadQuantitySymbol) {
  try {
    parse_lexicon(six_drums("1 MARTIA -ux adj"));
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 12u);
  }
}

TEST(ParseLexicon, RenderRoundTrip) {
  const auto lex = parse_lexicon(oracle::read_file(demo_path));
  EXPECT_EQ(parse_lexicon(render_lexicon(lex)), lex);
  const auto big = parse_lexicon(oracle::read_file(std::string(EUREKA_DATA_DIR) + "/eureka-placeholder.lex"));
  EXPECT_EQ(parse_lexicon(render_lexicon(big)), big);
  EXPECT_NE(render_lexicon(lex).find("PRÆNARRANT"), std::string::npos);
}

// Property: render/parse is the identity on generated lexicons.
TEST(ParseLexicon, RenderRoundTripGenerated) {
  std::uint64_t state = 12345;
  const auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  const char* categories[] = {"adj", "noun", "adv", "verb", "noun", "adj"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    for (int d = 1; d <= 6; ++d) {
      const int rows = 1 + static_cast<int>(next() % 4);
      for (int r = 0; r < rows; ++r) {
        std::string word;
        const int len = 1 + static_cast<int>(next() % 9);
        for (int i = 0; i < len; ++i) {
          std::string_view letter = letter_at(1 + static_cast<int>(next() % 27));
          // A or O followed by E would fold into a ligature.
          if (letter == "E" && !word.empty() && (word.back() == 'A' || word.back() == 'O')) letter = "F";
          word += letter;
        }
        std::string q;
        const int syllables = 1 + static_cast<int>(next() % static_cast<std::uint64_t>(len));
        for (int i = 0; i < syllables; ++i) q += next() % 2 ? '-' : 'u';
        text += std::to_string(d) + " " + word + " " + q + " " + categories[d - 1] + "\n";
      }
    }
    const auto lex = parse_lexicon(text);
    ASSERT_EQ(parse_lexicon(render_lexicon(lex)), lex) << text;
  }
}

TEST(CountDistinctLines, HistoricalCardinalities) {
  // 16 rows on drum 1 with IMPIA twice: 15*16*16*18*19*20.
  const auto lex = parse_lexicon(oracle::read_file(std::string(EUREKA_DATA_DIR) + "/eureka-placeholder.lex"));
  EXPECT_EQ(lex.drum(1).size(), 16u);
  EXPECT_EQ(lex.distinct_words(1).size(), 15u);
  EXPECT_EQ(count_distinct_lines(lex), 26'265'600u);
  EXPECT_EQ(15ULL * 16 * 16 * 18 * 19 * 20, 26'265'600ULL);
}

TEST(CountDistinctLines, SmallCases) {
  EXPECT_EQ(count_distinct_lines(parse_lexicon(six_drums("1 MARTIA -uu adj"))), 1u);
  EXPECT_EQ(count_distinct_lines(parse_lexicon(oracle::read_file(demo_path))), 64u);
}

// Property: the count equals the size of the brute-force line set for
// lexicons with up to three words per drum, duplicates included.
TEST(CountDistinctLines, MatchesEnumeration) {
  std::uint64_t state = 99;
  const auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  const char* pool[] = {"A", "BE", "CI", "DO"};
  for (int trial = 0; trial < 100; ++trial) {
    oracle::SmallLexicon small;
    for (auto& drum : small) {
      const int rows = 1 + static_cast<int>(next() % 3);
      for (int r = 0; r < rows; ++r) drum.push_back({pool[next() % 4], "-"});
    }
    const auto lex = parse_lexicon(oracle::render(small));
    EXPECT_EQ(count_distinct_lines(lex), oracle::enumerate_distinct(small).size());
  }
}
