#include "sigtree/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "sigtree/errors.hpp"

namespace sigtree {

Dfa::Dfa(Alphabet alphabet, std::vector<std::string> state_names, State initial,
         std::vector<std::vector<Transition>> transitions)
    : alphabet_(std::move(alphabet)),
      names_(std::move(state_names)),
      initial_(initial),
      transitions_(std::move(transitions)) {
  if (names_.empty()) throw StructureError("automaton has no state");
  if (initial_ >= names_.size())
    throw StructureError("initial state out of range");
  if (transitions_.size() != names_.size())
    throw StructureError("transition table size differs from the state count");
  for (std::size_t q = 0; q < names_.size(); ++q) {
    if (names_[q].empty() || names_[q] == kSentinel ||
        names_[q].find_first_of(" \t\r\n,") != std::string::npos)
      throw StructureError("invalid state name '" + names_[q] + "'");
    if (std::find(names_.begin(), names_.begin() + q, names_[q]) !=
        names_.begin() + q)
      throw StructureError("duplicate state name '" + names_[q] + "'");
    auto& ts = transitions_[q];
    std::sort(ts.begin(), ts.end(), [](const Transition& a, const Transition& b) {
      return a.letter < b.letter;
    });
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (!alphabet_.contains(ts[i].letter))
        throw StructureError("transition letter outside the alphabet");
      if (ts[i].target >= names_.size())
        throw StructureError("transition target out of range");
      if (i > 0 && ts[i - 1].letter == ts[i].letter)
        throw StructureError("state '" + names_[q] +
                             "' has two transitions on '" +
                             alphabet_.symbol(ts[i].letter) + "'");
    }
  }
}

std::size_t Dfa::transition_count() const noexcept {
  std::size_t n = 0;
  for (const auto& ts : transitions_) n += ts.size();
  return n;
}

std::optional<State> Dfa::target(State q, Letter a) const {
  const auto& ts = transitions_.at(q);
  auto it = std::lower_bound(
      ts.begin(), ts.end(), a,
      [](const Transition& t, Letter l) { return t.letter < l; });
  if (it == ts.end() || it->letter != a) return std::nullopt;
  return it->target;
}

bool Dfa::accepts(std::span<const Letter> word) const {
  State q = initial_;
  for (Letter a : word) {
    auto next = target(q, a);
    if (!next) return false;
    q = *next;
  }
  return true;
}

namespace {

std::vector<bool> reachable_states(const Dfa& d) {
  std::vector<bool> seen(d.state_count(), false);
  std::deque<State> queue{d.initial()};
  seen[d.initial()] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (const auto& t : d.transitions(q))
      if (!seen[t.target]) {
        seen[t.target] = true;
        queue.push_back(t.target);
      }
  }
  return seen;
}

// Keeps the states flagged in `keep`, renumbered in their original order.
Dfa restrict_to(const Dfa& d, const std::vector<bool>& keep) {
  std::vector<State> index(d.state_count(), 0);
  std::vector<std::string> names;
  for (State q = 0; q < d.state_count(); ++q)
    if (keep[q]) {
      index[q] = static_cast<State>(names.size());
      names.push_back(d.state_name(q));
    }
  std::vector<std::vector<Transition>> table(names.size());
  for (State q = 0; q < d.state_count(); ++q) {
    if (!keep[q]) continue;
    for (const auto& t : d.transitions(q))
      table[index[q]].push_back({t.letter, index[t.target]});
  }
  return Dfa(d.alphabet(), std::move(names), index[d.initial()],
             std::move(table));
}

std::string fresh_name(const Dfa& d, std::string base) {
  const auto& names = d.state_names();
  while (std::find(names.begin(), names.end(), base) != names.end()) base += '_';
  return base;
}

}  // namespace

Dfa trim(const Dfa& d) { return restrict_to(d, reachable_states(d)); }

bool is_trim(const Dfa& d) {
  const auto seen = reachable_states(d);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool has_reachable_cycle(const Dfa& d) {
  enum Color : char { white, grey, black };
  std::vector<Color> color(d.state_count(), white);
  // Iterative DFS; a grey target closes a cycle.
  std::vector<std::pair<State, std::size_t>> stack{{d.initial(), 0}};
  color[d.initial()] = grey;
  while (!stack.empty()) {
    auto& [q, i] = stack.back();
    const auto ts = d.transitions(q);
    if (i == ts.size()) {
      color[q] = black;
      stack.pop_back();
      continue;
    }
    const State t = ts[i++].target;
    if (color[t] == grey) return true;
    if (color[t] == white) {
      color[t] = grey;
      stack.push_back({t, 0});
    }
  }
  return false;
}

Dfa minimize(const Dfa& d0) {
  const Dfa d = trim(d0);
  const std::size_t n = d.state_count();
  std::vector<std::size_t> cls(n, 0);
  std::size_t class_count = 1;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (State q = 0; q < n; ++q) {
      std::vector<std::size_t> key{cls[q]};
      for (const auto& t : d.transitions(q)) {
        key.push_back(t.letter);
        key.push_back(cls[t.target]);
      }
      auto [it, inserted] = ids.emplace(std::move(key), ids.size());
      next[q] = it->second;
    }
    cls = std::move(next);
    if (ids.size() == class_count) break;
    class_count = ids.size();
  }
  // Classes are numbered by first occurrence, so representatives keep order.
  std::vector<std::string> names(class_count);
  std::vector<std::vector<Transition>> table(class_count);
  std::vector<bool> done(class_count, false);
  for (State q = 0; q < n; ++q) {
    if (done[cls[q]]) continue;
    done[cls[q]] = true;
    names[cls[q]] = d.state_name(q);
    for (const auto& t : d.transitions(q))
      table[cls[q]].push_back({t.letter, static_cast<State>(cls[t.target])});
  }
  return Dfa(d.alphabet(), std::move(names),
             static_cast<State>(cls[d.initial()]), std::move(table));
}

WordList enumerate_radix(const Dfa& d, std::size_t n) {
  WordList words;
  if (n == 0) return words;
  std::deque<std::pair<State, std::size_t>> queue{{d.initial(), 0}};
  words.emplace_back();
  while (!queue.empty() && words.size() < n) {
    auto [q, w] = queue.front();
    queue.pop_front();
    for (const auto& t : d.transitions(q)) {
      if (words.size() == n) break;
      Word next = words[w];
      next.push_back(t.letter);
      words.push_back(std::move(next));
      queue.push_back({t.target, words.size() - 1});
    }
  }
  return words;
}

Dfa minimal_label_dfa(const Dfa& d) {
  std::size_t degree = 0;
  for (State q = 0; q < d.state_count(); ++q)
    degree = std::max(degree, d.out_degree(q));
  std::vector<std::vector<Transition>> table(d.state_count());
  for (State q = 0; q < d.state_count(); ++q) {
    const auto ts = d.transitions(q);
    for (std::size_t i = 0; i < ts.size(); ++i)
      table[q].push_back({static_cast<Letter>(i), ts[i].target});
  }
  return Dfa(Alphabet::digits(degree), d.state_names(), d.initial(),
             std::move(table));
}

SentinelDfa::SentinelDfa(const Dfa& d)
    : dfa_([&] {
        const Alphabet alphabet = Alphabet::with_sentinel(d.alphabet());
        std::vector<std::string> names = d.state_names();
        std::vector<std::vector<Transition>> table(d.state_count());
        bool initial_reentered = false;
        for (State q = 0; q < d.state_count(); ++q)
          for (const auto& t : d.transitions(q)) {
            table[q].push_back({t.letter + 1, t.target});
            initial_reentered = initial_reentered || t.target == d.initial();
          }
        State root = d.initial();
        if (initial_reentered) {
          // A loop on the original initial state would also fire after
          // re-entering it; a fresh root carries the loop instead.
          root = static_cast<State>(names.size());
          names.push_back(fresh_name(d, d.state_name(d.initial()) + "_root"));
          table.push_back(table[d.initial()]);
        }
        table[root].push_back({0, root});
        return trim(Dfa(alphabet, std::move(names), root, std::move(table)));
      }()) {}

SubstitutiveLabelledSignature dfa_to_signature(const Dfa& d0) {
  const Dfa d = trim(d0);
  if (d.alphabet().has_sentinel())
    throw AlphabetError("input automaton uses the reserved letter '#'");
  if (!has_reachable_cycle(d)) throw FiniteLanguage();
  const Dfa sentinel = SentinelDfa(d).dfa();
  const Alphabet states(sentinel.state_names());
  std::vector<Word> targets(sentinel.state_count());
  std::vector<Word> labels(sentinel.state_count());
  for (State p = 0; p < sentinel.state_count(); ++p)
    for (const auto& t : sentinel.transitions(p)) {
      targets[p].push_back(t.target);
      labels[p].push_back(t.letter);
    }
  return SubstitutiveLabelledSignature(
      Morphism::endomorphism(states, std::move(targets)), sentinel.initial(),
      Morphism(states, sentinel.alphabet(), std::move(labels)));
}

Dfa signature_to_dfa(const SubstitutiveLabelledSignature& sls) {
  const Morphism& sigma = sls.sigma();
  const Morphism& g = sls.labels();
  const std::size_t k = sigma.source().size();
  std::vector<std::vector<Transition>> table(k);
  bool start_reentered = false;
  for (Letter b = 0; b < k; ++b) {
    const Word& img = sigma.image(b);
    const Word& lab = g.image(b);
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (i > 0 && lab[i - 1] >= lab[i])
        throw NonIncreasingImage(sigma.source().symbol(b));
      table[b].push_back({lab[i], img[i]});
      if (img[i] == sls.start() && !(b == sls.start() && i == 0))
        start_reentered = true;
    }
  }
  std::vector<std::string> names = sigma.source().symbols();
  // sigma(start) begins with start: that first transition is the root loop.
  std::vector<Transition> root_transitions(table[sls.start()].begin() + 1,
                                           table[sls.start()].end());
  State root = sls.start();
  if (start_reentered) {
    Dfa plain(g.target(), names, sls.start(), table);
    root = static_cast<State>(names.size());
    names.push_back(fresh_name(plain, names[sls.start()] + "_root"));
    table.push_back(std::move(root_transitions));
  } else {
    table[root] = std::move(root_transitions);
  }
  Dfa result = trim(Dfa(g.target(), std::move(names), root, std::move(table)));
  if (!result.alphabet().has_sentinel()) return result;
  for (State q = 0; q < result.state_count(); ++q)
    for (const auto& t : result.transitions(q))
      if (t.letter == 0) return result;
  // The sentinel only labelled the removed root loop; drop it.
  std::vector<std::string> symbols(result.alphabet().symbols().begin() + 1,
                                   result.alphabet().symbols().end());
  std::vector<std::vector<Transition>> shifted(result.state_count());
  for (State q = 0; q < result.state_count(); ++q)
    for (const auto& t : result.transitions(q))
      shifted[q].push_back({t.letter - 1, t.target});
  return Dfa(Alphabet(std::move(symbols)), result.state_names(),
             result.initial(), std::move(shifted));
}

bool conversion_roundtrip(const Dfa& d, std::size_t n) {
  const Dfa back = signature_to_dfa(dfa_to_signature(d));
  const auto original = enumerate_radix(d, n);
  const auto converted = enumerate_radix(back, n);
  if (original.size() != converted.size()) return false;
  for (std::size_t i = 0; i < original.size(); ++i) {
    const auto spelled = back.alphabet().spell(converted[i]);
    if (std::find(spelled.begin(), spelled.end(), kSentinel) != spelled.end())
      return false;
    if (d.alphabet().spell(original[i]) != spelled) return false;
  }
  return true;
}

std::string to_dot(const Dfa& d) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n  start [shape=point];\n";
  for (State q = 0; q < d.state_count(); ++q)
    os << "  s" << q << " [label=\"" << d.state_name(q)
       << "\", shape=doublecircle];\n";
  os << "  start -> s" << d.initial() << ";\n";
  for (State q = 0; q < d.state_count(); ++q)
    for (const auto& t : d.transitions(q))
      os << "  s" << q << " -> s" << t.target << " [label=\""
         << d.alphabet().symbol(t.letter) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sigtree
