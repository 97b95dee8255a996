#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "eureka/lexicon.hpp"
#include "eureka/meter.hpp"
#include "oracles.hpp"

using namespace eureka;

namespace {

// MĀRTĬĂ CĀSTRĂ FǑRĪS PRǢNĀRRĀNT PRŌELĬĂ MŪLTĂ, word by word.
const std::string martia_line = "-uu" "-u" "u-" "---" "-uu" "-u";

std::string letters_of(const std::string& tiling) {
  std::string out;
  for (std::size_t i = 0; i < tiling.size(); ++i) {
    if (i) out += ' ';
    out += tiling[i];
  }
  return out;
}

std::string expand(const FootParse& parse, const QuantitySeq& q) {
  std::string out;
  for (const Foot& f : parse.feet)
    for (std::size_t i = f.begin; i < f.end; ++i) out += quantity_symbol(q[i]);
  return out;
}

}  // namespace

TEST(Scan, MartiaLine) {
  // The only tiling that fits, per the brute-force oracle.
  ASSERT_EQ(oracle::matching_tilings(martia_line, false), std::vector<std::string>{"DDSSDX"});
  const auto parse = scan(parse_quantities(martia_line));
  EXPECT_EQ(parse.letters(), "D D S S D X");
  EXPECT_EQ(parse.feet[5].begin, 13u);
  EXPECT_EQ(parse.feet[5].end, 15u);
}

TEST(Scan, FullyDactylicLine) {
  EXPECT_EQ(scan(parse_quantities("-uu -uu -uu -uu -uu --")).letters(), "D D D D D X");
  EXPECT_EQ(scan(parse_quantities("-uu -uu -uu -uu -uu -u")).letters(), "D D D D D X");
}

TEST(Scan, AllShortFailsAtZero) {
  const auto outcome = try_scan(parse_quantities(std::string(17, 'u')));
  EXPECT_FALSE(outcome.parse);
  EXPECT_EQ(outcome.furthest_failure, 0u);
  try {
    scan(parse_quantities(std::string(17, 'u')));
    FAIL();
  } catch (const ScanError& e) {
    EXPECT_EQ(e.furthest(), 0u);
  }
}

TEST(Scan, FurthestFailure) {
  // Five good feet, then a short where the final foot needs its long.
  EXPECT_EQ(try_scan(parse_quantities("-uu-uu-uu-uu-uuuu")).furthest_failure, 15u);
  // Runs out of syllables.
  EXPECT_EQ(try_scan(parse_quantities("-uu")).furthest_failure, 3u);
  // One syllable too many.
  EXPECT_EQ(try_scan(parse_quantities("-uu-uu-uu-uu-uu---")).furthest_failure, 17u);
  EXPECT_THROW(scan(QuantitySeq{}), ScanError);
}

TEST(Scan, SpondaicFifthNeedsFlag) {
  const auto q = parse_quantities("-uu -uu -uu -uu -- --");
  EXPECT_FALSE(try_scan(q).parse);
  EXPECT_EQ(try_scan(q, {true}).parse->letters(), "D D D D S X");
}

TEST(Scan, PrefersDactylFirst) {
  // "-uu" + "--" twice can tile in more ways under the spondaic flag; the
  // earliest dactyl-first tiling wins.
  for (const auto& q : oracle::all_quantity_strings(13)) {
    const auto tilings = oracle::matching_tilings(q, true);
    if (tilings.size() < 2) continue;
    EXPECT_EQ(try_scan(parse_quantities(q), {true}).parse->letters(), letters_of(tilings.front())) << q;
  }
}

// Completeness: agreement with the tiling oracle on every sequence up to
// length 14, with and without spondaic fifth feet, plus parse soundness.
TEST(Scan, AgreesWithTilingOracle) {
  for (bool spondaic : {false, true}) {
    for (std::size_t len = 1; len <= 14; ++len) {
      for (const auto& s : oracle::all_quantity_strings(len)) {
        const auto q = parse_quantities(s);
        const auto expected = oracle::matching_tilings(s, spondaic);
        const auto outcome = try_scan(q, {spondaic});
        ASSERT_EQ(outcome.parse.has_value(), !expected.empty()) << s;
        if (!outcome.parse) continue;
        const FootParse& p = *outcome.parse;
        EXPECT_EQ(p.letters(), letters_of(expected.front())) << s;
        // Tiling: ranges cover [0, len) without gaps or overlaps.
        std::size_t pos = 0;
        for (const Foot& f : p.feet) {
          EXPECT_EQ(f.begin, pos);
          EXPECT_EQ(f.end - f.begin, foot_length(f.kind));
          pos = f.end;
        }
        EXPECT_EQ(pos, len);
        // Soundness: re-expanding gives back the input with anceps at the end.
        EXPECT_TRUE(oracle::matches(expand(p, q), oracle::tiling_template(expected.front())));
        EXPECT_EQ(expand(p, q), s);
      }
    }
  }
}

TEST(Scan, LengthsOutsideTwelveToSeventeenNeverParse) {
  for (std::size_t len : {10u, 11u, 18u})
    for (const auto& s : oracle::all_quantity_strings(len))
      ASSERT_FALSE(try_scan(parse_quantities(s), {true}).parse) << s;
}

TEST(Automaton, AgreesWithScanner) {
  for (bool spondaic : {false, true}) {
    const HexameterAutomaton a({spondaic});
    for (std::size_t len = 1; len <= 14; ++len)
      for (const auto& s : oracle::all_quantity_strings(len)) {
        const auto q = parse_quantities(s);
        ASSERT_EQ(HexameterAutomaton::accepts(a.run(HexameterAutomaton::initial(), q)),
                  try_scan(q, {spondaic}).parse.has_value())
            << s;
      }
  }
}

TEST(ScanLine, MartiaLineFromLexicon) {
  const auto lex = parse_lexicon(oracle::read_file(std::string(EUREKA_DATA_DIR) + "/demo.lex"));
  const std::vector<std::string> words = {"MARTIA", "CASTRA", "FORIS", "PRAENARRANT", "PROELIA", "MULTA"};
  EXPECT_EQ(scan_line(lex, words).letters(), "D D S S D X");
  const std::vector<std::string> ligatures = {"martia", "castra", "foris", "prænarrant", "prœlia", "multa"};
  EXPECT_EQ(scan_line(lex, ligatures).letters(), "D D S S D X");
}

TEST(ScanLine, UnknownWord) {
  const auto lex = parse_lexicon(oracle::read_file(std::string(EUREKA_DATA_DIR) + "/demo.lex"));
  const std::vector<std::string> words = {"MARTIA", "CASTRA", "FORIS", "PRAENARRANT", "PROELIA", "BONA"};
  EXPECT_THROW(scan_line(lex, words), UnknownWordError);
  // Right word, wrong drum.
  const std::vector<std::string> swapped = {"CASTRA", "MARTIA", "FORIS", "PRAENARRANT", "PROELIA", "MULTA"};
  EXPECT_THROW(scan_line(lex, swapped), UnknownWordError);
  const std::vector<std::string> five = {"MARTIA", "CASTRA", "FORIS", "PRAENARRANT", "PROELIA"};
  EXPECT_THROW(scan_line(lex, five), Error);
}
