// eureka: command-line front end for the verse machine simulator.
//
// Exit codes:
//   0  success
//   1  bad input (unreadable or invalid lexicon, table or corpus file; a
//      line that does not scan; strict validation failure)
//   2  usage or configuration error
//   3  enumeration cap exceeded
//   4  machine needs winding (more than five pulls without auto-wind)

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eureka/eureka.hpp"

namespace {

constexpr int exit_input = 1;
constexpr int exit_config = 2;
constexpr int exit_cap = 3;
constexpr int exit_winding = 4;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw eureka::Error(std::string("cannot read ") + what + " file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

eureka::Lexicon load_lexicon(const std::string& path) {
  const std::string text = read_file(path, "lexicon");
  try {
    return eureka::parse_lexicon(text);
  } catch (const eureka::Error& e) {
    throw eureka::Error(path + ": " + e.what());
  }
}

struct SessionConfig {
  std::optional<std::uint64_t> seed_flag;
  std::string lexicon_path;
  std::size_t pulls = 1;
  bool auto_wind = true;
  std::string output_format = "text";
  bool allow_spondaic_fifth = false;
  std::optional<std::size_t> expected_stave_count;
  bool strict = false;
  bool report_repeats = false;

  // --seed wins over EUREKA_SEED; default 0.
  std::uint64_t seed() const {
    if (seed_flag) return *seed_flag;
    if (const char* env = std::getenv("EUREKA_SEED")) {
      try {
        std::size_t used = 0;
        const std::uint64_t value = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
        return value;
      } catch (const std::exception&) {
        throw ConfigError(std::string("EUREKA_SEED is not an unsigned integer: '") + env + "'");
      }
    }
    return 0;
  }
};

void add_session_options(CLI::App& cmd, SessionConfig& cfg) {
  cmd.add_option("-l,--lexicon", cfg.lexicon_path, "Lexicon file")->required();
  cmd.add_option("-n,--pulls", cfg.pulls, "Number of lever pulls");
  cmd.add_option("-s,--seed", cfg.seed_flag, "RNG seed (overrides EUREKA_SEED)");
  cmd.add_option("-f,--format", cfg.output_format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));
  cmd.add_flag("--allow-spondaic-fifth", cfg.allow_spondaic_fifth, "Accept a spondee in the fifth foot");
  cmd.add_option("--expected-stave-count", cfg.expected_stave_count, "Fail unless the program has this many staves");
  cmd.add_flag("--strict", cfg.strict, "Reject lexicons that fail strict metrical validation");
}

eureka::MachineProgram prepare_program(const SessionConfig& cfg, const eureka::Lexicon& lexicon) {
  if (cfg.strict) eureka::require_strict(lexicon, {cfg.allow_spondaic_fifth});
  auto program = eureka::compile_program(lexicon);
  if (cfg.expected_stave_count && program.stave_count() != *cfg.expected_stave_count)
    throw eureka::Error("program has " + std::to_string(program.stave_count()) + " staves, expected " +
                        std::to_string(*cfg.expected_stave_count));
  return program;
}

// Shared by compose and trace; `frames` selects the per-tick text trace.
int run_machine(const SessionConfig& cfg, bool text_frames) {
  const std::uint64_t seed = cfg.seed();
  const auto lexicon = load_lexicon(cfg.lexicon_path);
  eureka::Machine machine(prepare_program(cfg, lexicon), seed, {cfg.auto_wind});

  // The operator winds once before the first pull; after that the weight
  // runs down unless auto-wind is on.
  machine.wind();
  std::vector<std::string> verses;
  for (std::size_t i = 0; i < cfg.pulls; ++i) {
    if (machine.energy() == 0 && cfg.auto_wind) machine.wind();
    eureka::CycleResult result;
    try {
      result = machine.pull_lever();
    } catch (const eureka::NeedsWinding& e) {
      std::cout.flush();
      std::cerr << "error: " << e.what() << " after " << i << " pull(s)\n";
      return exit_winding;
    }
    if (cfg.output_format == "jsonl") {
      eureka::write_jsonl(std::cout, result, seed);
    } else if (text_frames) {
      eureka::write_text_trace(std::cout, result);
    } else {
      std::cout << result.verse << '\n';
    }
    if (cfg.report_repeats) verses.push_back(result.verse);
  }
  if (cfg.report_repeats) {
    std::set<std::string> seen;
    std::size_t repeats = 0;
    for (const auto& v : verses)
      if (!seen.insert(v).second) ++repeats;
    std::cerr << "repeats: " << repeats << '\n';
  }
  return 0;
}

int run_scan(const std::vector<std::string>& args, const std::string& lexicon_path, bool spondaic) {
  const eureka::ScanOptions options{spondaic};
  eureka::QuantitySeq q;
  if (!lexicon_path.empty()) {
    if (args.size() != 6) throw ConfigError("scan with --lexicon needs exactly six words");
    q = eureka::line_quantities(load_lexicon(lexicon_path), args);
  } else {
    std::string joined;
    for (const auto& a : args) joined += a;
    try {
      q = eureka::parse_quantities(joined);
    } catch (const eureka::Error& e) {
      throw ConfigError(e.what());
    }
    if (q.empty()) throw ConfigError("scan needs a quantity string such as '-uu-uu-----uu-u' or six words");
  }
  const auto outcome = eureka::try_scan(q, options);
  if (!outcome.parse) {
    std::cout << "no valid parse at syllable " << outcome.furthest_failure << '\n';
    return exit_input;
  }
  std::cout << outcome.parse->letters() << '\n';
  return 0;
}

int run_validate(const std::string& path, bool strict, bool spondaic) {
  const auto lexicon = load_lexicon(path);
  const auto mode = strict ? eureka::ValidationMode::strict : eureka::ValidationMode::historical;
  const auto diagnostics = eureka::validate_historical(lexicon, mode, {spondaic});
  for (const auto& d : diagnostics) std::cout << d.str() << '\n';
  if (diagnostics.empty()) std::cout << "ok\n";
  return strict && !diagnostics.empty() ? exit_input : 0;
}

std::vector<eureka::peter::Table> load_tables(const std::string& path) {
  const auto tables = eureka::peter::parse_tables(read_file(path, "table"));
  return tables;
}

std::vector<std::vector<std::string>> load_table_words(const std::string& path) {
  std::istringstream in(read_file(path, "word list"));
  std::vector<std::vector<std::string>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() != 9)
      throw eureka::PeterError(path + ": line " + std::to_string(line_no) + " has " + std::to_string(words.size()) +
                               " words, expected nine (digits 1..9)");
    out.push_back(std::move(words));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator of Clark's Eureka Latin verse machine and Peter's versifying tables"};
  app.require_subcommand(1);

  SessionConfig compose_cfg;
  auto* compose = app.add_subcommand("compose", "Pull the lever and print verses");
  add_session_options(*compose, compose_cfg);
  compose->add_flag("!--no-auto-wind", compose_cfg.auto_wind, "Do not rewind automatically");
  compose->add_flag("--report-repeats", compose_cfg.report_repeats, "Report repeated lines on stderr");

  SessionConfig trace_cfg;
  trace_cfg.auto_wind = false;
  auto* trace = app.add_subcommand("trace", "Show the staves falling, tick by tick");
  add_session_options(*trace, trace_cfg);
  trace->add_flag("--auto-wind", trace_cfg.auto_wind, "Rewind automatically");

  std::vector<std::string> scan_args;
  std::string scan_lexicon;
  bool scan_spondaic = false;
  auto* scan = app.add_subcommand("scan", "Scan a quantity string, or six words from a lexicon");
  scan->add_option("input", scan_args, "Quantities ('-' long, 'u' short) or six words")->required();
  scan->add_option("-l,--lexicon", scan_lexicon, "Look the words up in this lexicon");
  scan->add_flag("--allow-spondaic-fifth", scan_spondaic, "Accept a spondee in the fifth foot");

  std::string count_lexicon;
  auto* count = app.add_subcommand("count", "Number of distinct lines a lexicon can produce");
  count->add_option("-l,--lexicon", count_lexicon, "Lexicon file")->required();

  std::string enum_lexicon;
  std::uint64_t enum_cap = eureka::default_enumeration_cap;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every distinct line");
  enumerate->add_option("-l,--lexicon", enum_lexicon, "Lexicon file")->required();
  enumerate->add_option("--cap", enum_cap, "Refuse to enumerate more lines than this");

  std::string validate_lexicon;
  bool validate_strict = false;
  bool validate_spondaic = false;
  auto* validate = app.add_subcommand("validate", "Check a lexicon's quantities against the hexameter");
  validate->add_option("-l,--lexicon", validate_lexicon, "Lexicon file")->required();
  validate->add_flag("--strict", validate_strict, "Findings are errors (exit 1)");
  validate->add_flag("--allow-spondaic-fifth", validate_spondaic, "Accept a spondee in the fifth foot");

  std::string dump_lexicon;
  auto* dump = app.add_subcommand("dump", "Print the compiled wire-length program");
  dump->add_option("-l,--lexicon", dump_lexicon, "Lexicon file")->required();

  auto* peter = app.add_subcommand("peter", "Peter's 1677 versifying tables");
  auto* peter_count = peter->add_subcommand("count", "Number of keys (9^6)");
  std::string peter_key;
  std::string peter_decode_file;
  auto* peter_decode = peter->add_subcommand("decode", "Decode a six-digit key against six tables");
  peter_decode->add_option("--key", peter_key, "Six digits 1..9")->required();
  peter_decode->add_option("tables", peter_decode_file, "Table file")->required();
  std::string peter_encode_file;
  std::size_t peter_width = 9;
  auto* peter_encode = peter->add_subcommand("encode", "Build tables from lines of nine words");
  peter_encode->add_option("words", peter_encode_file, "Word file, nine words per line")->required();
  peter_encode->add_option("--width", peter_width, "Row width")->check(CLI::PositiveNumber);
  std::string peter_render_file;
  auto* peter_render = peter->add_subcommand("render", "Print tables as grids");
  peter_render->add_option("tables", peter_render_file, "Table file")->required();

  SessionConfig cascade_cfg;
  std::string cascade_corpus;
  int cascade_depth = 1;
  std::size_t cascade_per_generation = 100;
  auto* cascade = app.add_subcommand("cascade", "Build a machine from another machine's lines");
  add_session_options(*cascade, cascade_cfg);
  cascade->add_option("-c,--corpus", cascade_corpus, "Six words per line")->required();
  cascade->add_option("--depth", cascade_depth, "Machine generations")->check(CLI::PositiveNumber);
  cascade->add_option("--per-generation", cascade_per_generation, "Lines handed to the next generation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_config;
  }

  try {
    if (compose->parsed()) return run_machine(compose_cfg, false);
    if (trace->parsed()) return run_machine(trace_cfg, trace_cfg.output_format == "text");
    if (scan->parsed()) return run_scan(scan_args, scan_lexicon, scan_spondaic);
    if (count->parsed()) {
      std::cout << eureka::count_distinct_lines(load_lexicon(count_lexicon)) << '\n';
      return 0;
    }
    if (enumerate->parsed()) {
      const auto program = eureka::compile_program(load_lexicon(enum_lexicon));
      eureka::for_each_line(program, enum_cap, [](const eureka::Verse& v) { std::cout << v.text() << '\n'; });
      return 0;
    }
    if (validate->parsed()) return run_validate(validate_lexicon, validate_strict, validate_spondaic);
    if (dump->parsed()) {
      std::cout << eureka::dump_program(eureka::compile_program(load_lexicon(dump_lexicon)));
      return 0;
    }
    if (peter->parsed()) {
      if (peter_decode->parsed()) {
        const auto key = eureka::peter::Key::parse(peter_key);
        const auto words = eureka::peter::decode_line(load_tables(peter_decode_file), key);
        for (std::size_t i = 0; i < words.size(); ++i) std::cout << (i ? " " : "") << words[i];
        std::cout << '\n';
      } else if (peter_encode->parsed()) {
        std::vector<eureka::peter::Table> tables;
        for (const auto& words : load_table_words(peter_encode_file))
          tables.push_back(eureka::peter::encode_table(words, peter_width));
        std::cout << eureka::peter::write_tables(tables);
      } else if (peter_render->parsed()) {
        const auto tables = load_tables(peter_render_file);
        for (std::size_t i = 0; i < tables.size(); ++i)
          std::cout << (i ? "\n" : "") << "Table " << i + 1 << "\n" << eureka::peter::render_table(tables[i]);
      } else {
        (void)peter_count;
        std::cout << eureka::peter::count_peter_lines() << '\n';
      }
      return 0;
    }
    if (cascade->parsed()) {
      const std::uint64_t seed = cascade_cfg.seed();
      const auto root = load_lexicon(cascade_cfg.lexicon_path);
      if (cascade_cfg.strict) eureka::require_strict(root, {cascade_cfg.allow_spondaic_fifth});
      eureka::CascadeSpec spec{eureka::parse_corpus(read_file(cascade_corpus, "corpus")), cascade_depth};
      const auto run = eureka::run_cascade(root, spec, {seed, cascade_cfg.pulls, cascade_per_generation});
      for (const auto& r : run.verses) {
        if (cascade_cfg.output_format == "jsonl") {
          eureka::write_jsonl(std::cout, r, seed, false);
        } else {
          std::cout << r.verse << '\n';
        }
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const eureka::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_cap;
  } catch (const eureka::NeedsWinding& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_winding;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return 0;
}
