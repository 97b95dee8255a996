// Builds the demo machine in memory, pulls the lever five times and scans
// each verse. Also decodes one line from a set of Peter tables.

#include <iostream>
#include <string>
#include <vector>

#include "eureka/eureka.hpp"

namespace {

constexpr const char* lexicon_text = R"(
1 IMPIA -uu adj
1 MARTIA -uu adj
2 VERBA -u noun
2 CASTRA -u noun
3 DOMI u- adv
3 FORIS u- adv
4 CONJUNGUNT --- verb
4 PRAENARRANT --- verb
5 CRIMINA -uu noun
5 PROELIA -uu noun
6 MALA -u adj
6 MULTA -u adj
)";

}  // namespace

int main() {
  const auto lexicon = eureka::parse_lexicon(lexicon_text);
  eureka::require_strict(lexicon);

  const auto program = eureka::compile_program(lexicon);
  std::cout << "staves: " << program.stave_count() << ", distinct lines: " << eureka::count_distinct_lines(lexicon)
            << "\n\n";

  eureka::Machine machine(program, 1845);
  machine.wind();
  for (int i = 0; i < eureka::cycles_per_wind; ++i) {
    const auto result = machine.pull_lever();
    const std::vector<std::string> words(result.words.begin(), result.words.end());
    std::cout << result.verse << "    " << eureka::scan_line(lexicon, words).letters() << '\n';
  }

  const std::vector<std::vector<std::string>> table_words = {
      {"perfida", "horrida", "impia", "tristia", "aspera", "turbida", "martia", "squalida", "sordida"},
      {"dicta", "verba", "castra", "bella", "tela", "fata", "regna", "monstra", "signa"},
      {"mihi", "domi", "foris", "cito", "ibi", "ubi", "tibi", "heri", "modo"},
      {"producunt", "confirmant", "conjungunt", "portendunt", "praedicunt", "conturbant", "deformant", "extendunt",
       "praenarrant"},
      {"somnia", "crimina", "proelia", "vulnera", "funera", "fulmina", "tempora", "sidera", "pectora"},
      {"multa", "prava", "mala", "dira", "saeva", "dura", "maesta", "foeda", "cruda"},
  };
  std::vector<eureka::peter::Table> tables;
  for (const auto& words : table_words) tables.push_back(eureka::peter::encode_table(words));

  std::cout << "\nPeter key 467182:";
  for (const auto& w : eureka::peter::decode_line(tables, eureka::peter::Key::parse("467182"))) std::cout << ' ' << w;
  std::cout << '\n';
}
