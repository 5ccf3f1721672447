// Command line front end: word analysis, k-root searches, code checks,
// decisions on regular languages, and contextual grammar generation.
//
// Exit codes: 0 success (affirmative answer where the command is a
// predicate); 1 negative answer (and 1/2 for the non-regular square
// verdicts); 3 search exhausted without witness; 64 usage errors; 65 bad
// input data (parse errors carry the line number).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordroots/automata.hpp"
#include "wordroots/codes.hpp"
#include "wordroots/contextual.hpp"
#include "wordroots/formats.hpp"
#include "wordroots/kroot.hpp"
#include "wordroots/lang.hpp"
#include "wordroots/oracle.hpp"
#include "wordroots/periodicity.hpp"
#include "wordroots/words.hpp"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitExhausted = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

using namespace wordroots;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonOpts {
  std::string format = "human";
  std::string alphabet_file;
  bool spaced = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_word_opts = true) {
  cmd->add_option("--format", o.format, "Output format: human, structured or json")
      ->check(CLI::IsMember({"human", "structured", "json"}));
  if (with_word_opts) {
    cmd->add_option("--alphabet", o.alphabet_file,
                    "Alphabet file (one symbol per line); inferred when absent");
    cmd->add_flag("--spaced", o.spaced,
                  "Words are whitespace-separated symbol names (needs --alphabet)");
  }
}

// Alphabet from --alphabet, or the distinct characters of the given surface
// words.
Alphabet resolve_alphabet(const CommonOpts& o, const std::vector<std::string>& words) {
  if (!o.alphabet_file.empty()) return parse_alphabet(read_file(o.alphabet_file));
  if (o.spaced)
    throw CLI::ValidationError("--spaced", "--spaced requires --alphabet");
  return infer_alphabet(words);
}

// Language input files: an automaton if the first meaningful line says so,
// otherwise a right-linear grammar.
bool looks_like_automaton(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    return line.compare(b, 9, "alphabet:") == 0;
  }
  return false;
}

Dfa load_language_dfa(const std::string& text) {
  if (looks_like_automaton(text)) return determinize(parse_automaton(text));
  return determinize(grammar_to_nfa(parse_grammar(text)));
}

std::vector<Word> shortlex_sorted(const WordSet& ws) {
  std::vector<Word> v(ws.begin(), ws.end());
  std::stable_sort(v.begin(), v.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return v;
}

int run_analyze(const std::string& word_arg, const CommonOpts& o, bool oracle_check) {
  if (word_arg.empty()) {
    std::cerr << "error: the word must be nonempty\n";
    return kExitUsage;
  }
  Alphabet a = resolve_alphabet(o, {word_arg});
  Word w = a.encode(word_arg, o.spaced);
  PeriodicityProfile p = profile(w);
  std::cout << render_profile(p, output_format_from_string(o.format), a, o.spaced);
  if (oracle_check) {
    oracle::ClosureCache cache;
    std::size_t bad = 0;
    for (PeriodicityClass c : kAllClasses)
      if (oracle::naive_class_membership(w, c, &cache) != p.member(c)) {
        std::cerr << "oracle mismatch: class " << to_string(c) << "\n";
        ++bad;
      }
    for (RootKind k : kAllRootKinds)
      if (oracle::naive_root(w, k, &cache) != p.root(k)) {
        std::cerr << "oracle mismatch: " << to_string(k) << "\n";
        ++bad;
      }
    std::cerr << (bad ? "oracle check failed\n" : "oracle check ok\n");
    if (bad) return kExitNegative;
  }
  return 0;
}

int run_search(std::size_t k, std::size_t bound, bool strong, const CommonOpts& o) {
  Alphabet a = Alphabet::binary();
  SearchReport rep = smallest_k_root(
      k, bound, strong, a, [](std::size_t len, std::uint64_t examined) {
        if (len >= 16)
          std::cerr << "progress: length " << len << ", examined " << examined
                    << "\n";
      });
  std::cout << render_search_report(rep, output_format_from_string(o.format), a);
  return rep.witness ? 0 : kExitExhausted;
}

int run_code(const std::string& sub, const std::string& file, std::size_t n,
             std::size_t m, const CommonOpts& o) {
  std::vector<std::string> surface = parse_word_lines(read_file(file));
  Alphabet a = resolve_alphabet(o, surface);
  WordSet C;
  for (const std::string& s : surface)
    C.insert(s.empty() ? Word() : a.encode(s, o.spaced));
  OutputFormat f = output_format_from_string(o.format);

  if (sub == "code") {
    CodeCheck r = check_code(C);
    std::cout << render_code_check(r, f, a, o.spaced);
    return r.is_code ? 0 : kExitNegative;
  }
  bool ok = sub == "ncode" ? is_n_code(C, n) : is_intercode_for(C, a, m);
  const char* name = sub == "ncode" ? "ncode" : "intercode";
  switch (f) {
    case OutputFormat::Human:
      std::cout << (ok ? "yes" : "no") << "\n";
      break;
    case OutputFormat::Structured:
      std::cout << name << " " << (ok ? "true" : "false") << "\n";
      break;
    case OutputFormat::Json:
      std::cout << "{\"" << name << "\": " << (ok ? "true" : "false") << "}\n";
      break;
  }
  return ok ? 0 : kExitNegative;
}

int run_lang(const std::string& sub, const std::string& file,
             const std::vector<std::uint64_t>& H, std::size_t root_bound,
             std::size_t maxlen, const CommonOpts& o) {
  std::string text = read_file(file);
  OutputFormat f = output_format_from_string(o.format);

  if (sub == "square-class") {
    SquareClass r = looks_like_automaton(text)
                        ? square_classification(determinize(parse_automaton(text)))
                        : square_classification(parse_grammar(text));
    Alphabet a = looks_like_automaton(text) ? parse_automaton(text).alphabet
                                            : parse_grammar(text).alphabet;
    std::cout << render_square_class(r, f, a);
    switch (r.verdict) {
      case SquareVerdict::Regular: return 0;
      case SquareVerdict::ContextFreeNotRegular: return 1;
      case SquareVerdict::NotContextFree: return 2;
    }
  }

  Dfa d = load_language_dfa(text);
  if (sub == "root-finite") {
    std::optional<WordSet> roots = root_finite(d, root_bound);
    switch (f) {
      case OutputFormat::Human:
        if (roots) {
          std::cout << "finite root set (" << roots->size() << " words)\n";
          for (const Word& r : shortlex_sorted(*roots))
            std::cout << "  " << d.alphabet.decode(r) << "\n";
        } else {
          std::cout << "infinite root set\n";
        }
        break;
      case OutputFormat::Structured:
        std::cout << "finite " << (roots ? "true" : "false") << "\n";
        if (roots)
          for (const Word& r : shortlex_sorted(*roots))
            std::cout << "root " << d.alphabet.decode(r) << "\n";
        break;
      case OutputFormat::Json: {
        std::cout << "{\"finite\": " << (roots ? "true" : "false");
        if (roots) {
          std::cout << ", \"roots\": [";
          bool first = true;
          for (const Word& r : shortlex_sorted(*roots)) {
            std::cout << (first ? "" : ", ") << "\"" << d.alphabet.decode(r) << "\"";
            first = false;
          }
          std::cout << "]";
        }
        std::cout << "}\n";
        break;
      }
    }
    return roots ? 0 : kExitNegative;
  }

  // pow: automaton for { p^k : p in L, k in H }, printed in the input format.
  std::set<std::uint64_t> Hs(H.begin(), H.end());
  Dfa out = minimize(pow_finite_H(d, Hs));
  std::cout << render_automaton(out);
  if (f != OutputFormat::Human) {
    // Sample of the language as comment lines; the automaton stays parseable.
    for (const Word& w : shortlex_sorted(enumerate_language(out, maxlen)))
      std::cout << "# " << (w.empty() ? "-" : out.alphabet.decode(w)) << "\n";
  }
  return 0;
}

int run_contextual(const std::string& file, const std::string& mode,
                   std::size_t maxlen, const CommonOpts& o) {
  ContextualGrammar g = parse_contextual(read_file(file));
  DeriveMode m = mode == "in" ? DeriveMode::Internal : DeriveMode::External;
  WordSet lang = language_up_to(g, m, maxlen);
  OutputFormat f = output_format_from_string(o.format);
  std::vector<Word> words = shortlex_sorted(lang);
  if (f == OutputFormat::Json) {
    std::cout << "[";
    for (std::size_t i = 0; i < words.size(); ++i)
      std::cout << (i ? ", " : "") << "\""
                << (words[i].empty() ? "" : g.alphabet().decode(words[i])) << "\"";
    std::cout << "]\n";
  } else {
    for (const Word& w : words)
      std::cout << (w.empty() ? "-" : g.alphabet().decode(w)) << "\n";
  }
  return 0;
}

// Randomized spot checks of the optimized paths against the brute-force
// reference, for quick reassurance outside the test suite.
int run_verify(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  Alphabet a = Alphabet::binary();
  oracle::ClosureCache cache;
  std::size_t checks = 0, bad = 0;

  auto random_word = [&](std::size_t maxlen, std::size_t minlen = 1) {
    std::uniform_int_distribution<std::size_t> len(minlen, maxlen);
    std::uniform_int_distribution<int> bit(0, 1);
    Word w;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w += a.code(bit(rng));
    return w;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    Word w = random_word(12);
    PeriodicityProfile p = profile(w);
    for (PeriodicityClass c : kAllClasses) {
      ++checks;
      if (oracle::naive_class_membership(w, c, &cache) != p.member(c)) {
        ++bad;
        std::cerr << "mismatch: class " << to_string(c) << " of " << a.decode(w)
                  << "\n";
      }
    }
    for (RootKind k : kAllRootKinds) {
      ++checks;
      if (oracle::naive_root(w, k, &cache) != p.root(k)) {
        ++bad;
        std::cerr << "mismatch: " << to_string(k) << " of " << a.decode(w) << "\n";
      }
    }
  }

  std::uniform_int_distribution<std::size_t> nwords(1, 4);
  std::uniform_int_distribution<int> expo(0, 6);
  for (std::size_t t = 0; t < trials; ++t) {
    WordSet L;
    std::size_t n = nwords(rng);
    for (std::size_t i = 0; i < n; ++i) L.insert(random_word(4));
    std::set<std::uint64_t> H;
    std::size_t hn = nwords(rng);
    for (std::size_t i = 0; i < hn; ++i) H.insert(expo(rng));
    Word u = random_word(8, 0);
    ++checks;
    bool fast = power_membership(u, LanguageRef::from_set(L),
                                 ExponentSet::finite(H));
    bool slow = oracle::naive_pow(L, H, u.size()).count(u) > 0;
    if (fast != slow) {
      ++bad;
      std::cerr << "mismatch: power membership of '" << a.decode(u) << "'\n";
    }
  }

  std::cout << (bad ? "FAIL" : "ok") << ": " << checks << " checks, " << bad
            << " mismatches (seed " << seed << ")\n";
  return bad ? kExitNegative : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitive words, periodicity classes, six root functions, and "
               "decision procedures on regular languages"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "wordroots 0.1.0");

  CommonOpts analyze_o, search_o, code_o, lang_o, ctx_o;

  std::string word_arg;
  bool oracle_check = false;
  CLI::App* analyze = app.add_subcommand("analyze", "Six roots and class profile of a word");
  analyze->add_option("word", word_arg, "The word to analyze")->required();
  add_common(analyze, analyze_o);
  analyze->add_flag("--oracle", oracle_check, "Cross-check against the brute-force reference")
      ->group("");  // hidden

  std::size_t k = 1, bound = 10;
  bool strong = false;
  CLI::App* search = app.add_subcommand("search", "Shortlex-first search for k-root words");
  search->add_option("--k", k, "Number of distinct roots (1..6)")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{6}));
  search->add_option("--bound", bound, "Maximum word length")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_flag("--strong", strong, "Only periodic witnesses");
  add_common(search, search_o, false);

  std::string code_sub, code_file;
  std::size_t ncode_n = 2, intercode_m = 1;
  CLI::App* code = app.add_subcommand("code", "Code predicates on a word list file");
  code->add_option("predicate", code_sub, "code, ncode or intercode")
      ->required()
      ->check(CLI::IsMember({"code", "ncode", "intercode"}));
  code->add_option("file", code_file, "Word list, one word per line")->required();
  code->add_option("--n", ncode_n, "Subset size bound for ncode")->check(CLI::PositiveNumber);
  code->add_option("--m", intercode_m, "Intercode index m")->check(CLI::PositiveNumber);
  add_common(code, code_o);

  std::string lang_sub, lang_file;
  std::vector<std::uint64_t> H;
  std::size_t root_bound = 0, lang_maxlen = 10;
  CLI::App* lang = app.add_subcommand("lang", "Decisions on a regular language (automaton or grammar file)");
  lang->add_option("decision", lang_sub, "root-finite, square-class or pow")
      ->required()
      ->check(CLI::IsMember({"root-finite", "square-class", "pow"}));
  lang->add_option("file", lang_file, "Automaton or right-linear grammar file")->required();
  lang->add_option("--H", H, "Finite exponent set for pow")->delimiter(',');
  lang->add_option("--root-bound", root_bound,
                   "Override the root length bound for root-finite (0 = derive)");
  lang->add_option("--maxlen", lang_maxlen, "Length bound for the language sample");
  add_common(lang, lang_o, false);

  std::string ctx_file, ctx_mode = "ex";
  std::size_t ctx_maxlen = 8;
  CLI::App* ctx = app.add_subcommand("contextual", "Generate a contextual language up to a length");
  ctx->add_option("file", ctx_file, "Contextual grammar file")->required();
  ctx->add_option("--mode", ctx_mode, "Derivation mode: ex (external) or in (internal)")
      ->check(CLI::IsMember({"ex", "in"}));
  ctx->add_option("--maxlen", ctx_maxlen, "Generate words up to this length");
  add_common(ctx, ctx_o, false);

  std::uint64_t seed = 12345;
  std::size_t trials = 100;
  CLI::App* verify = app.add_subcommand("verify", "Randomized oracle spot checks");
  verify->group("");  // hidden
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--trials", trials, "Trials per suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(word_arg, analyze_o, oracle_check);
    if (*search) return run_search(k, bound, strong, search_o);
    if (*code) return run_code(code_sub, code_file, ncode_n, intercode_m, code_o);
    if (*lang) {
      if (lang_sub == "pow" && H.empty()) {
        std::cerr << "error: pow needs --H with at least one exponent\n";
        return kExitUsage;
      }
      return run_lang(lang_sub, lang_file, H, root_bound, lang_maxlen, lang_o);
    }
    if (*ctx) return run_contextual(ctx_file, ctx_mode, ctx_maxlen, ctx_o);
    if (*verify) return run_verify(seed, trials);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
