#include "wordroots/contextual.hpp"

#include <deque>
#include <stdexcept>

#include "wordroots/words.hpp"

namespace wordroots {

ContextualGrammar::ContextualGrammar(Alphabet alphabet, WordSet axioms,
                                     std::vector<Context> contexts,
                                     std::variant<ChoiceTable, ChoicePredicate> choice)
    : alphabet_(std::move(alphabet)),
      axioms_(std::move(axioms)),
      contexts_(std::move(contexts)),
      choice_(std::move(choice)) {
  if (auto* table = std::get_if<ChoiceTable>(&choice_)) {
    auto check = [&](const std::vector<std::size_t>& row) {
      for (std::size_t i : row)
        if (i >= contexts_.size())
          throw std::invalid_argument("choice table refers to context " +
                                      std::to_string(i) + " but only " +
                                      std::to_string(contexts_.size()) + " exist");
    };
    for (const auto& [w, row] : table->rows) check(row);
    check(table->fallback);
  }
}

std::vector<std::size_t> ContextualGrammar::select(const Word& w) const {
  if (const auto* table = std::get_if<ChoiceTable>(&choice_)) {
    auto it = table->rows.find(w);
    return it != table->rows.end() ? it->second : table->fallback;
  }
  return std::get<ChoicePredicate>(choice_).select(w);
}

WordSet derive_ex_step(const ContextualGrammar& g, const Word& w) {
  WordSet out;
  for (std::size_t i : g.select(w)) {
    const Context& c = g.contexts()[i];
    out.insert(c.left + w + c.right);
  }
  return out;
}

WordSet derive_in_step(const ContextualGrammar& g, const Word& w) {
  WordSet out;
  for (std::size_t b = 0; b <= w.size(); ++b) {
    for (std::size_t e = b; e <= w.size(); ++e) {
      const Word mid = w.substr(b, e - b);
      for (std::size_t i : g.select(mid)) {
        const Context& c = g.contexts()[i];
        out.insert(w.substr(0, b) + c.left + mid + c.right + w.substr(e));
      }
    }
  }
  return out;
}

WordSet language_up_to(const ContextualGrammar& g, DeriveMode mode, std::size_t maxlen) {
  WordSet lang;
  std::deque<Word> work;
  for (const Word& ax : g.axioms())
    if (ax.size() <= maxlen && lang.insert(ax).second) work.push_back(ax);
  while (!work.empty()) {
    const Word w = std::move(work.front());
    work.pop_front();
    const WordSet step =
        mode == DeriveMode::External ? derive_ex_step(g, w) : derive_in_step(g, w);
    for (const Word& nxt : step)
      if (nxt.size() <= maxlen && lang.insert(nxt).second) work.push_back(nxt);
  }
  return lang;
}

ContextualGrammar::ChoicePredicate primitive_preserving_choice(
    const Alphabet& a, const std::vector<Context>& contexts) {
  (void)a;
  ContextualGrammar::ChoicePredicate p;
  p.name = "primitive-preserving";
  p.select = [contexts](const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < contexts.size(); ++i) {
      const Word uwv = contexts[i].left + w + contexts[i].right;
      if (!uwv.empty() && is_primitive(uwv)) out.push_back(i);
    }
    return out;
  };
  return p;
}

ContextualGrammar q_grammar(const Alphabet& a) {
  if (a.size() < 2)
    throw std::invalid_argument("q_grammar needs at least two letters");
  WordSet axioms;
  for (std::size_t i = 0; i < a.size(); ++i) axioms.insert(Word(1, a.code(i)));

  // All contexts [u, v] with |uv| <= 2, shortest first.
  std::vector<Context> contexts;
  auto words_of = [&](std::size_t len) {
    std::vector<Word> out;
    if (len == 0) out.push_back(Word());
    if (len == 1)
      for (std::size_t i = 0; i < a.size(); ++i) out.push_back(Word(1, a.code(i)));
    if (len == 2)
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
          out.push_back({a.code(i), a.code(j)});
    return out;
  };
  for (std::size_t total = 0; total <= 2; ++total)
    for (std::size_t lu = 0; lu <= total; ++lu)
      for (const Word& u : words_of(lu))
        for (const Word& v : words_of(total - lu)) contexts.push_back({u, v});

  return ContextualGrammar(a, axioms, contexts,
                           primitive_preserving_choice(a, contexts));
}

}  // namespace wordroots
