#include "wordroots/formats.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace wordroots {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

struct Line {
  std::size_t number;  // 1-based position in the original text
  std::string text;    // trimmed, nonempty, not a comment
};

// Keeps only meaningful lines; blank lines and lines starting with '#' are
// skipped so every format tolerates comments.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    out.push_back({number, std::move(t)});
  }
  return out;
}

std::size_t parse_count(const Line& ln, const std::string& token, const char* what) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError(ln.number, std::string("expected a number for ") + what +
                                    ", got '" + token + "'");
  }
}

// 'alphabet: ab' lists single-character symbols; with several tokens each
// token is one (possibly multi-character) symbol.
Alphabet alphabet_from_header(const Line& ln, const std::vector<std::string>& toks) {
  std::vector<std::string> symbols;
  if (toks.empty()) throw ParseError(ln.number, "alphabet header lists no symbols");
  if (toks.size() == 1) {
    for (char c : toks[0]) symbols.emplace_back(1, c);
  } else {
    symbols = toks;
  }
  try {
    return Alphabet(symbols);
  } catch (const std::exception& e) {
    throw ParseError(ln.number, std::string("bad alphabet: ") + e.what());
  }
}

std::string surface(const Word& w, const Alphabet& a, bool spaced) {
  return w.empty() ? "-" : a.decode(w, spaced);
}

Word encode_surface(const Line& ln, const std::string& s, const Alphabet& a,
                    bool spaced) {
  if (s == "-") return Word();
  try {
    return a.encode(s, spaced);
  } catch (const std::exception& e) {
    throw ParseError(ln.number, std::string("bad word '") + s + "': " + e.what());
  }
}

const char* verdict_name(SquareVerdict v) {
  switch (v) {
    case SquareVerdict::Regular: return "regular";
    case SquareVerdict::ContextFreeNotRegular: return "context-free-not-regular";
    case SquareVerdict::NotContextFree: return "not-context-free";
  }
  return "?";
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

Alphabet parse_alphabet(const std::string& text) {
  std::vector<std::string> symbols;
  std::size_t last_line = 1;
  for (const Line& ln : significant_lines(text)) {
    last_line = ln.number;
    if (tokens_of(ln.text).size() != 1)
      throw ParseError(ln.number, "expected exactly one symbol per line");
    symbols.push_back(ln.text);
  }
  try {
    return Alphabet(symbols);
  } catch (const std::exception& e) {
    throw ParseError(last_line, std::string("bad alphabet: ") + e.what());
  }
}

Alphabet infer_alphabet(const std::vector<std::string>& surface_words) {
  std::set<char> chars;
  for (const std::string& w : surface_words) {
    if (w == "-") continue;
    for (char c : w) chars.insert(c);
  }
  if (chars.empty())
    throw std::invalid_argument("cannot infer an alphabet: no symbols occur");
  std::vector<std::string> symbols;
  for (char c : chars) symbols.emplace_back(1, c);
  return Alphabet(symbols);
}

std::vector<std::string> parse_word_lines(const std::string& text) {
  std::vector<std::string> out;
  for (const Line& ln : significant_lines(text)) {
    if (tokens_of(ln.text).size() != 1)
      throw ParseError(ln.number, "expected exactly one word per line");
    out.push_back(ln.text == "-" ? std::string() : ln.text);
  }
  return out;
}

Nfa parse_automaton(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  std::size_t i = 0;
  auto expect_header = [&](const char* name) -> Line {
    if (i >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       std::string("missing '") + name + ":' line");
    Line ln = lines[i];
    std::string prefix = std::string(name) + ":";
    if (ln.text.rfind(prefix, 0) != 0)
      throw ParseError(ln.number, std::string("expected '") + name + ":', got '" +
                                      ln.text + "'");
    ln.text = trim(ln.text.substr(prefix.size()));
    ++i;
    return ln;
  };

  Line alpha_ln = expect_header("alphabet");
  Alphabet a = alphabet_from_header(alpha_ln, tokens_of(alpha_ln.text));
  std::map<std::string, std::size_t> symbol_index;
  for (std::size_t s = 0; s < a.size(); ++s) symbol_index[a.symbol(s)] = s;

  std::map<std::string, std::size_t> state_index;
  auto state_of = [&](const std::string& name) {
    auto it = state_index.find(name);
    if (it != state_index.end()) return it->second;
    std::size_t id = state_index.size();
    state_index.emplace(name, id);
    return id;
  };

  Line start_ln = expect_header("start");
  std::vector<std::string> start_toks = tokens_of(start_ln.text);
  if (start_toks.size() != 1)
    throw ParseError(start_ln.number, "expected exactly one start state");
  std::size_t start_state = state_of(start_toks[0]);

  Line accept_ln = expect_header("accept");
  std::vector<std::size_t> accept_states;
  for (const std::string& t : tokens_of(accept_ln.text))
    accept_states.push_back(state_of(t));

  struct Edge {
    std::size_t from, symbol, to;
  };
  std::vector<Edge> edges;
  for (; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    std::vector<std::string> toks = tokens_of(ln.text);
    if (toks.size() != 4 || toks[2] != "->")
      throw ParseError(ln.number, "expected a transition 'state symbol -> state'");
    auto sit = symbol_index.find(toks[1]);
    if (sit == symbol_index.end())
      throw ParseError(ln.number, "unknown symbol '" + toks[1] + "'");
    edges.push_back({state_of(toks[0]), sit->second, state_of(toks[3])});
  }

  Nfa n(a);
  for (std::size_t s = 0; s < state_index.size(); ++s) n.add_state(false);
  n.start.push_back(start_state);
  for (std::size_t s : accept_states) n.accept[s] = true;
  for (const Edge& e : edges) n.add_edge(e.from, e.symbol, e.to);
  return n;
}

std::string render_automaton(const Dfa& d) {
  std::ostringstream out;
  bool single = true;
  for (std::size_t s = 0; s < d.alphabet.size(); ++s)
    single = single && d.alphabet.symbol(s).size() == 1;
  out << "alphabet:";
  if (single) {
    out << " ";
    for (std::size_t s = 0; s < d.alphabet.size(); ++s) out << d.alphabet.symbol(s);
  } else {
    for (std::size_t s = 0; s < d.alphabet.size(); ++s)
      out << " " << d.alphabet.symbol(s);
  }
  out << "\n";
  out << "start: q" << d.start << "\n";
  out << "accept:";
  for (std::size_t q = 0; q < d.num_states; ++q)
    if (d.accept[q]) out << " q" << q;
  out << "\n";
  for (std::size_t q = 0; q < d.num_states; ++q)
    for (std::size_t s = 0; s < d.alphabet.size(); ++s)
      out << "q" << q << " " << d.alphabet.symbol(s) << " -> q" << d.next[q][s]
          << "\n";
  return out.str();
}

RightLinearGrammar parse_grammar(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty grammar");

  // First pass: left-hand sides define the nonterminals; the first one is the
  // start symbol.
  std::vector<std::string> lhs_order;
  std::map<std::string, std::size_t> nonterminal;
  for (const Line& ln : lines) {
    std::vector<std::string> toks = tokens_of(ln.text);
    if (toks.size() < 3 || toks[1] != "->")
      throw ParseError(ln.number, "expected a production 'A -> ...'");
    if (!nonterminal.count(toks[0])) {
      nonterminal.emplace(toks[0], lhs_order.size());
      lhs_order.push_back(toks[0]);
    }
  }

  struct Alt {
    std::size_t line;
    std::size_t lhs;
    std::string terminals;  // surface characters
    std::optional<std::size_t> continuation;
    bool epsilon = false;
  };
  std::vector<Alt> alts;
  std::set<char> chars;
  for (const Line& ln : lines) {
    std::vector<std::string> toks = tokens_of(ln.text);
    std::size_t lhs = nonterminal.at(toks[0]);
    std::vector<std::vector<std::string>> groups(1);
    for (std::size_t t = 2; t < toks.size(); ++t) {
      if (toks[t] == "|")
        groups.emplace_back();
      else
        groups.back().push_back(toks[t]);
    }
    for (const auto& g : groups) {
      if (g.empty()) throw ParseError(ln.number, "empty alternative");
      Alt alt;
      alt.line = ln.number;
      alt.lhs = lhs;
      if (g.size() == 1 && g[0] == "EPSILON") {
        alt.epsilon = true;
        alts.push_back(alt);
        continue;
      }
      for (std::size_t t = 0; t < g.size(); ++t) {
        bool is_nt = nonterminal.count(g[t]) > 0;
        if (is_nt) {
          if (t + 1 != g.size())
            throw ParseError(ln.number, "nonterminal '" + g[t] +
                                            "' may only end an alternative");
          alt.continuation = nonterminal.at(g[t]);
        } else {
          if (g[t] == "EPSILON")
            throw ParseError(ln.number, "EPSILON must stand alone");
          alt.terminals += g[t];
        }
      }
      if (alt.terminals.empty())
        throw ParseError(ln.number, "expected a terminal before '" + g.back() + "'");
      for (char c : alt.terminals) chars.insert(c);
      alts.push_back(alt);
    }
  }

  for (const Alt& alt : alts) {
    if (alt.epsilon) {
      if (alt.lhs != 0)
        throw ParseError(alt.line, "EPSILON is allowed only for the start symbol");
      for (const Alt& other : alts)
        if (other.continuation && *other.continuation == 0)
          throw ParseError(alt.line,
                           "EPSILON for a start symbol that occurs on a "
                           "right-hand side");
    }
  }

  std::vector<std::string> symbols;
  for (char c : chars) symbols.emplace_back(1, c);
  Alphabet a = symbols.empty() ? Alphabet::binary() : Alphabet(symbols);

  RightLinearGrammar g(a);
  for (const std::string& name : lhs_order) g.add_nonterminal(name);
  g.start_symbol = 0;
  for (const Alt& alt : alts) {
    RightLinearGrammar::Production p;
    p.lhs = alt.lhs;
    p.continuation = alt.continuation;
    if (!alt.epsilon) {
      Line fake{alt.line, ""};
      p.terminals = encode_surface(fake, alt.terminals, a, false);
    }
    g.productions.push_back(std::move(p));
  }
  return g;
}

ContextualGrammar parse_contextual(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  std::size_t eof_line = lines.empty() ? 1 : lines.back().number;

  std::optional<Alphabet> fixed;
  std::vector<std::pair<Line, std::string>> axiom_lines;          // surface
  std::vector<std::pair<Line, std::pair<std::string, std::string>>> context_lines;
  bool builtin_primitive = false;
  std::vector<std::pair<Line, std::pair<std::string, std::vector<std::size_t>>>>
      table_rows;  // key surface ('-' kept literal) -> indices; "default" key
  bool saw_axioms = false, saw_contexts = false, saw_choice = false;

  enum class Section { None, Axioms, Contexts, ChoiceHead, ChoiceTable };
  Section sec = Section::None;
  for (const Line& ln : lines) {
    if (ln.text.rfind("alphabet:", 0) == 0) {
      if (sec != Section::None || fixed)
        throw ParseError(ln.number, "alphabet line must come first");
      Line hdr{ln.number, trim(ln.text.substr(9))};
      fixed = alphabet_from_header(hdr, tokens_of(hdr.text));
      continue;
    }
    if (ln.text == "axioms:") {
      sec = Section::Axioms;
      saw_axioms = true;
      continue;
    }
    if (ln.text == "contexts:") {
      sec = Section::Contexts;
      saw_contexts = true;
      continue;
    }
    if (ln.text == "choice:") {
      sec = Section::ChoiceHead;
      saw_choice = true;
      continue;
    }
    switch (sec) {
      case Section::None:
        throw ParseError(ln.number, "expected a section header 'axioms:'");
      case Section::Axioms: {
        if (tokens_of(ln.text).size() != 1)
          throw ParseError(ln.number, "expected one axiom per line");
        axiom_lines.emplace_back(ln, ln.text);
        break;
      }
      case Section::Contexts: {
        std::size_t comma = ln.text.find(',');
        if (comma == std::string::npos)
          throw ParseError(ln.number, "expected a context 'left , right'");
        std::string left = trim(ln.text.substr(0, comma));
        std::string right = trim(ln.text.substr(comma + 1));
        if (left.empty() || right.empty() || right.find(',') != std::string::npos)
          throw ParseError(ln.number, "expected a context 'left , right'");
        context_lines.emplace_back(ln, std::make_pair(left, right));
        break;
      }
      case Section::ChoiceHead: {
        std::vector<std::string> toks = tokens_of(ln.text);
        if (toks.size() == 2 && toks[0] == "builtin") {
          if (toks[1] != "primitive-preserving")
            throw ParseError(ln.number, "unknown builtin choice '" + toks[1] +
                                            "' (known: primitive-preserving)");
          builtin_primitive = true;
          sec = Section::None;  // nothing may follow
        } else if (toks.size() == 1 && toks[0] == "table") {
          sec = Section::ChoiceTable;
        } else {
          throw ParseError(ln.number,
                           "expected 'table' or 'builtin primitive-preserving'");
        }
        break;
      }
      case Section::ChoiceTable: {
        std::vector<std::string> toks = tokens_of(ln.text);
        if (toks.size() < 3 || toks[1] != "->")
          throw ParseError(ln.number, "expected a row 'word -> {indices}'");
        std::string braces;
        for (std::size_t t = 2; t < toks.size(); ++t) braces += toks[t];
        if (braces.size() < 2 || braces.front() != '{' || braces.back() != '}')
          throw ParseError(ln.number, "expected indices in braces, e.g. {0,2}");
        std::string inner = braces.substr(1, braces.size() - 2);
        std::replace(inner.begin(), inner.end(), ',', ' ');
        std::vector<std::size_t> idx;
        for (const std::string& t : tokens_of(inner))
          idx.push_back(parse_count(ln, t, "a context index"));
        table_rows.emplace_back(ln, std::make_pair(toks[0], std::move(idx)));
        break;
      }
    }
  }

  if (!saw_axioms) throw ParseError(eof_line, "missing 'axioms:' section");
  if (!saw_contexts) throw ParseError(eof_line, "missing 'contexts:' section");
  if (!saw_choice) throw ParseError(eof_line, "missing 'choice:' section");
  if (!builtin_primitive && sec == Section::ChoiceHead)
    throw ParseError(eof_line, "empty 'choice:' section");

  Alphabet a = [&] {
    if (fixed) return *fixed;
    std::vector<std::string> words;
    for (const auto& [ln, w] : axiom_lines) words.push_back(w);
    for (const auto& [ln, lr] : context_lines) {
      words.push_back(lr.first);
      words.push_back(lr.second);
    }
    for (const auto& [ln, row] : table_rows)
      if (row.first != "default") words.push_back(row.first);
    try {
      return infer_alphabet(words);
    } catch (const std::exception& e) {
      throw ParseError(eof_line, e.what());
    }
  }();

  WordSet axioms;
  for (const auto& [ln, w] : axiom_lines) axioms.insert(encode_surface(ln, w, a, false));
  std::vector<Context> contexts;
  for (const auto& [ln, lr] : context_lines)
    contexts.push_back({encode_surface(ln, lr.first, a, false),
                        encode_surface(ln, lr.second, a, false)});

  if (builtin_primitive) {
    return ContextualGrammar(a, std::move(axioms), contexts,
                             primitive_preserving_choice(a, contexts));
  }
  ContextualGrammar::ChoiceTable table;
  for (const auto& [ln, row] : table_rows) {
    for (std::size_t i : row.second)
      if (i >= contexts.size())
        throw ParseError(ln.number, "context index " + std::to_string(i) +
                                        " out of range (have " +
                                        std::to_string(contexts.size()) + ")");
    if (row.first == "default")
      table.fallback = row.second;
    else
      table.rows[encode_surface(ln, row.first, a, false)] = row.second;
  }
  return ContextualGrammar(a, std::move(axioms), std::move(contexts), std::move(table));
}

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "structured") return OutputFormat::Structured;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected human, structured or json)");
}

std::string render_profile(const PeriodicityProfile& p, OutputFormat f,
                           const Alphabet& a, bool spaced) {
  std::ostringstream out;
  switch (f) {
    case OutputFormat::Human: {
      out << "word: " << surface(p.word, a, spaced) << "\n";
      out << "length: " << p.word.size() << "\n";
      out << "primitive: " << (p.degree == 1 ? "yes" : "no") << " (degree "
          << p.degree << ")\n";
      out << "distinct roots: " << p.distinct_roots << "\n";
      for (RootKind k : kAllRootKinds) {
        std::string name = to_string(k);
        out << "  " << name << std::string(8 - name.size(), ' ')
            << surface(p.root(k), a, spaced) << "\n";
      }
      out << "classes:";
      bool any = false;
      for (PeriodicityClass c : kAllClasses)
        if (p.member(c)) {
          out << " " << to_string(c);
          any = true;
        }
      if (!any) out << " none";
      out << "\n";
      break;
    }
    case OutputFormat::Structured: {
      out << "word " << surface(p.word, a, spaced) << "\n";
      out << "length " << p.word.size() << "\n";
      out << "degree " << p.degree << "\n";
      out << "distinct-roots " << p.distinct_roots << "\n";
      for (RootKind k : kAllRootKinds)
        out << "root " << to_string(k) << " " << surface(p.root(k), a, spaced) << "\n";
      for (PeriodicityClass c : kAllClasses)
        out << "class " << to_string(c) << " " << (p.member(c) ? "true" : "false")
            << "\n";
      break;
    }
    case OutputFormat::Json: {
      json j;
      j["word"] = surface(p.word, a, spaced);
      j["length"] = p.word.size();
      j["degree"] = p.degree;
      j["distinct_roots"] = p.distinct_roots;
      json roots = json::object();
      for (RootKind k : kAllRootKinds)
        roots[to_string(k)] = surface(p.root(k), a, spaced);
      j["roots"] = roots;
      json classes = json::object();
      for (PeriodicityClass c : kAllClasses) classes[to_string(c)] = p.member(c);
      j["classes"] = classes;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

PeriodicityProfile parse_profile_structured(const std::string& text, const Alphabet& a,
                                            bool spaced) {
  PeriodicityProfile p;
  std::set<std::string> seen;
  std::optional<std::size_t> stated_length;
  for (const Line& ln : significant_lines(text)) {
    std::istringstream in(ln.text);
    std::string key;
    in >> key;
    auto rest = [&] {
      std::string r;
      std::getline(in, r);
      return trim(r);
    };
    if (key == "word") {
      p.word = encode_surface(ln, rest(), a, spaced);
      seen.insert("word");
    } else if (key == "length") {
      stated_length = parse_count(ln, rest(), "length");
      seen.insert("length");
    } else if (key == "degree") {
      p.degree = parse_count(ln, rest(), "degree");
      seen.insert("degree");
    } else if (key == "distinct-roots") {
      p.distinct_roots = parse_count(ln, rest(), "distinct-roots");
      seen.insert("distinct-roots");
    } else if (key == "root") {
      std::string kind;
      in >> kind;
      RootKind k;
      try {
        k = root_kind_from_string(kind);
      } catch (const std::exception& e) {
        throw ParseError(ln.number, e.what());
      }
      p.roots[static_cast<std::size_t>(k)] = encode_surface(ln, rest(), a, spaced);
      seen.insert("root " + kind);
    } else if (key == "class") {
      std::string name, value;
      in >> name >> value;
      PeriodicityClass c;
      try {
        c = class_from_string(name);
      } catch (const std::exception& e) {
        throw ParseError(ln.number, e.what());
      }
      if (value != "true" && value != "false")
        throw ParseError(ln.number, "expected true or false, got '" + value + "'");
      p.in_class[static_cast<std::size_t>(c)] = value == "true";
      seen.insert("class " + name);
    } else {
      throw ParseError(ln.number, "unknown field '" + key + "'");
    }
  }
  std::vector<std::string> required = {"word", "length", "degree", "distinct-roots"};
  for (RootKind k : kAllRootKinds) required.push_back(std::string("root ") + to_string(k));
  for (PeriodicityClass c : kAllClasses)
    required.push_back(std::string("class ") + to_string(c));
  for (const std::string& r : required)
    if (!seen.count(r))
      throw ParseError(1, "missing field '" + r + "'");
  if (*stated_length != p.word.size())
    throw ParseError(1, "length " + std::to_string(*stated_length) +
                            " does not match the word (" +
                            std::to_string(p.word.size()) + " symbols)");
  return p;
}

std::string render_search_report(const SearchReport& r, OutputFormat f,
                                 const Alphabet& a, bool spaced) {
  std::ostringstream out;
  switch (f) {
    case OutputFormat::Human: {
      out << "search: k=" << r.k << (r.strong ? " strong" : "") << " up to length "
          << r.length_bound << "\n";
      if (r.witness)
        out << "witness: " << surface(*r.witness, a, spaced) << " (length "
            << r.witness->size() << ")\n";
      else
        out << "no witness; range exhausted\n";
      out << "words examined: " << r.words_examined << "\n";
      out << "elapsed: " << r.elapsed_seconds << "s\n";
      break;
    }
    case OutputFormat::Structured: {
      out << "k " << r.k << "\n";
      out << "strong " << (r.strong ? "true" : "false") << "\n";
      out << "length-bound " << r.length_bound << "\n";
      if (r.witness) out << "witness " << surface(*r.witness, a, spaced) << "\n";
      out << "exhausted " << (r.exhausted ? "true" : "false") << "\n";
      out << "words-examined " << r.words_examined << "\n";
      out << "elapsed-seconds " << r.elapsed_seconds << "\n";
      break;
    }
    case OutputFormat::Json: {
      json j;
      j["k"] = r.k;
      j["strong"] = r.strong;
      j["length_bound"] = r.length_bound;
      if (r.witness)
        j["witness"] = surface(*r.witness, a, spaced);
      else
        j["witness"] = nullptr;
      j["exhausted"] = r.exhausted;
      j["words_examined"] = r.words_examined;
      j["elapsed_seconds"] = r.elapsed_seconds;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string render_square_class(const SquareClass& s, OutputFormat f,
                                const Alphabet& a, bool spaced) {
  std::ostringstream out;
  auto component_text = [&](const FipComponent& c) {
    std::ostringstream o;
    o << (c.kind == FipKind::WPW ? "wpw" : "pwp") << " p=" << surface(c.p, a, spaced)
      << " w=" << surface(c.w, a, spaced);
    if (c.kind == FipKind::WPW) o << " w2=" << surface(c.w2, a, spaced);
    return o.str();
  };
  switch (f) {
    case OutputFormat::Human: {
      out << "verdict: " << verdict_name(s.verdict) << "\n";
      if (s.roots) {
        out << "roots:";
        for (const Word& r : *s.roots) out << " " << surface(r, a, spaced);
        out << "\n";
      }
      if (s.cover) {
        out << "cover:\n";
        for (const FipComponent& c : *s.cover) out << "  " << component_text(c) << "\n";
      }
      break;
    }
    case OutputFormat::Structured: {
      out << "verdict " << verdict_name(s.verdict) << "\n";
      if (s.roots)
        for (const Word& r : *s.roots) out << "root " << surface(r, a, spaced) << "\n";
      if (s.cover)
        for (const FipComponent& c : *s.cover)
          out << "component " << component_text(c) << "\n";
      break;
    }
    case OutputFormat::Json: {
      json j;
      j["verdict"] = verdict_name(s.verdict);
      if (s.roots) {
        json roots = json::array();
        for (const Word& r : *s.roots) roots.push_back(surface(r, a, spaced));
        j["roots"] = roots;
      }
      if (s.cover) {
        json cover = json::array();
        for (const FipComponent& c : *s.cover) {
          json jc;
          jc["kind"] = c.kind == FipKind::WPW ? "wpw" : "pwp";
          jc["p"] = surface(c.p, a, spaced);
          jc["w"] = surface(c.w, a, spaced);
          if (c.kind == FipKind::WPW) jc["w2"] = surface(c.w2, a, spaced);
          cover.push_back(jc);
        }
        j["cover"] = cover;
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string render_code_check(const CodeCheck& c, OutputFormat f, const Alphabet& a,
                              bool spaced) {
  std::ostringstream out;
  switch (f) {
    case OutputFormat::Human: {
      if (c.is_code)
        out << "code\n";
      else if (c.ambiguous_word)
        out << "not a code; ambiguous word: " << surface(*c.ambiguous_word, a, spaced)
            << "\n";
      else
        out << "not a code\n";
      break;
    }
    case OutputFormat::Structured: {
      out << "code " << (c.is_code ? "true" : "false") << "\n";
      if (c.ambiguous_word)
        out << "ambiguous-word " << surface(*c.ambiguous_word, a, spaced) << "\n";
      break;
    }
    case OutputFormat::Json: {
      json j;
      j["is_code"] = c.is_code;
      if (c.ambiguous_word)
        j["ambiguous_word"] = surface(*c.ambiguous_word, a, spaced);
      else
        j["ambiguous_word"] = nullptr;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace wordroots
