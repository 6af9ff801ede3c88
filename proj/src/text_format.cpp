#include "sigtree/text_format.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "sigtree/errors.hpp"
#include "sigtree/substitution.hpp"

namespace sigtree {
namespace {

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  for (;;) {
    const auto next = s.find(sep, pos);
    parts.push_back(strip(s.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = s.find_first_not_of(" \t\r\n", pos);
    if (pos == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r\n", pos);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

// Blank lines and comments ("#" alone or followed by a space) are skipped.
std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (line.empty()) continue;
    if (line[0] == '#' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t'))
      continue;
    out.push_back(line);
  }
  return out;
}

// "key: value" -> value, when the line starts with key.
std::optional<std::string_view> header(std::string_view line,
                                       std::string_view key) {
  if (line.size() <= key.size() || line.substr(0, key.size()) != key ||
      line[key.size()] != ':')
    return std::nullopt;
  return strip(line.substr(key.size() + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Alphabet alphabet_from(std::string_view text, bool allow_sentinel) {
  std::vector<std::string> symbols;
  for (auto part : split(text, ',')) {
    if (part.empty()) throw ParseError("empty symbol in alphabet list");
    if (part == kSentinel && !allow_sentinel)
      throw ParseError("'#' is reserved and cannot be used in an alphabet");
    symbols.emplace_back(part);
  }
  try {
    return Alphabet(std::move(symbols));
  } catch (const AlphabetError& e) {
    throw ParseError(e.what());
  }
}

Letter symbol_in(const Alphabet& a, std::string_view symbol) {
  if (auto l = a.find(symbol)) return *l;
  throw ParseError("unknown letter '" + std::string(symbol) + "'");
}

struct KeyValues {
  std::optional<std::string_view> u, v;
};

KeyValues periodic_parts(std::string_view body) {
  KeyValues kv;
  for (auto part : split(body, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected u=... or v=... in '" + std::string(part) + "'");
    const auto key = strip(part.substr(0, eq));
    const auto value = strip(part.substr(eq + 1));
    if (key == "u")
      kv.u = value;
    else if (key == "v")
      kv.v = value;
    else
      throw ParseError("unknown key '" + std::string(key) + "'");
  }
  if (!kv.v || kv.v->empty()) throw ParseError("periodic descriptor needs v=...");
  return kv;
}

void format_rules(std::ostream& os, const Morphism& m) {
  for (Letter c = 0; c < m.source().size(); ++c) {
    os << m.source().symbol(c) << " ->";
    for (Letter d : m.image(c)) os << ' ' << m.target().symbol(d);
    os << '\n';
  }
}

}  // namespace

IntWord parse_int_list(std::string_view text) {
  IntWord out;
  if (strip(text).empty()) return out;
  for (auto part : split(text, ',')) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw ParseError("expected a non-negative integer, got '" +
                       std::string(part) + "'");
    out.push_back(value);
  }
  return out;
}

Alphabet parse_alphabet(std::string_view text) {
  return alphabet_from(text, false);
}

MorphismFile parse_morphism_file(std::string_view text) {
  std::optional<Alphabet> alphabet, label_alphabet;
  std::optional<std::string> start;
  std::vector<std::pair<std::string_view, std::vector<std::string_view>>> rules,
      label_rules;
  bool in_labels = false;
  for (auto line : lines(text)) {
    if (auto value = header(line, "alphabet")) {
      alphabet = alphabet_from(*value, false);
    } else if (auto value = header(line, "start")) {
      start = std::string(*value);
    } else if (auto value = header(line, "label-alphabet")) {
      label_alphabet = alphabet_from(*value, true);
    } else if (header(line, "label-images")) {
      in_labels = true;
    } else if (auto arrow = line.find("->"); arrow != std::string_view::npos) {
      const auto lhs = strip(line.substr(0, arrow));
      if (lhs.empty() || tokens(lhs).size() != 1)
        throw ParseError("rule needs a single letter before '->': '" +
                         std::string(line) + "'");
      (in_labels ? label_rules : rules)
          .emplace_back(lhs, tokens(line.substr(arrow + 2)));
    } else {
      throw ParseError("unrecognised line '" + std::string(line) + "'");
    }
  }
  if (!alphabet) throw ParseError("morphism file needs an 'alphabet:' line");
  if (!start) throw ParseError("morphism file needs a 'start:' line");

  auto build = [](const Alphabet& source, const Alphabet& target,
                  const auto& section, const char* what) {
    std::vector<std::optional<Word>> images(source.size());
    for (const auto& [lhs, rhs] : section) {
      const Letter c = symbol_in(source, lhs);
      if (images[c])
        throw ParseError(std::string("two ") + what + " for '" +
                         std::string(lhs) + "'");
      Word w;
      for (auto sym : rhs) w.push_back(symbol_in(target, sym));
      images[c] = std::move(w);
    }
    std::vector<Word> out;
    for (Letter c = 0; c < source.size(); ++c) {
      if (!images[c])
        throw ParseError(std::string("missing ") + what + " for '" +
                         source.symbol(c) + "'");
      out.push_back(std::move(*images[c]));
    }
    return Morphism(source, target, std::move(out));
  };

  MorphismFile file{build(*alphabet, *alphabet, rules, "images"),
                    symbol_in(*alphabet, *start), std::nullopt};
  if (in_labels || label_alphabet)
    file.labels = build(*alphabet, label_alphabet.value_or(*alphabet),
                        label_rules, "label images");
  return file;
}

std::string format_morphism_file(const MorphismFile& file) {
  std::ostringstream os;
  const auto& symbols = file.sigma.source().symbols();
  os << "alphabet: ";
  for (std::size_t i = 0; i < symbols.size(); ++i) os << (i ? "," : "") << symbols[i];
  os << "\nstart: " << file.sigma.source().symbol(file.start) << '\n';
  format_rules(os, file.sigma);
  if (file.labels) {
    const auto& target = file.labels->target().symbols();
    os << "label-alphabet: ";
    for (std::size_t i = 0; i < target.size(); ++i) os << (i ? "," : "") << target[i];
    os << "\nlabel-images:\n";
    format_rules(os, *file.labels);
  }
  return os.str();
}

MorphismFile read_morphism_file(const std::string& path) {
  return parse_morphism_file(read_file(path));
}

IntSeq parse_signature(std::string_view text) {
  text = strip(text);
  if (auto body = header(text, "periodic")) {
    const auto kv = periodic_parts(*body);
    return IntSeq::periodic(kv.u ? parse_int_list(*kv.u) : IntWord{},
                            parse_int_list(*kv.v));
  }
  if (auto path = header(text, "morphism")) {
    const auto file = read_morphism_file(std::string(*path));
    return substitutive_signature(file.sigma, file.start);
  }
  throw ParseError("signature descriptor must start with 'periodic:' or "
                   "'morphism:', got '" + std::string(text) + "'");
}

LetterSeq parse_labelling(std::string_view text,
                          const std::optional<Alphabet>& alphabet) {
  text = strip(text);
  if (auto body = header(text, "periodic")) {
    if (!alphabet) throw ParseError("periodic labelling needs --alphabet");
    const auto kv = periodic_parts(*body);
    auto letters = [&](std::string_view list) {
      Word w;
      if (strip(list).empty()) return w;
      for (auto sym : split(list, ',')) w.push_back(alphabet->index(sym));
      return w;
    };
    return LetterSeq::periodic(*alphabet, kv.u ? letters(*kv.u) : Word{},
                               letters(*kv.v));
  }
  if (auto path = header(text, "morphism")) {
    auto file = read_morphism_file(std::string(*path));
    auto seq = file.labels
                   ? LetterSeq::morphic(file.sigma, file.start, *file.labels)
                   : fixed_point(file.sigma, file.start);
    if (alphabet && !(*alphabet == seq.alphabet()))
      throw AlphabetError("--alphabet differs from the morphism file's labels");
    return seq;
  }
  throw ParseError("labelling descriptor must start with 'periodic:' or "
                   "'morphism:', got '" + std::string(text) + "'");
}

Dfa parse_dfa(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<std::string> initial;
  std::vector<std::string_view> declared;
  std::vector<std::array<std::string_view, 3>> rows;
  for (auto line : lines(text)) {
    if (auto value = header(line, "alphabet")) {
      alphabet = parse_alphabet(*value);
    } else if (auto value = header(line, "states")) {
      declared = split(*value, ',');
    } else if (auto value = header(line, "initial")) {
      initial = std::string(*value);
    } else {
      const auto t = tokens(line);
      if (t.size() != 3)
        throw ParseError("expected 'state letter state', got '" +
                         std::string(line) + "'");
      rows.push_back({t[0], t[1], t[2]});
    }
  }
  if (!alphabet) throw ParseError("automaton file needs an 'alphabet:' line");
  if (!initial || initial->empty())
    throw ParseError("automaton file needs an 'initial:' line");

  std::vector<std::string> names{*initial};
  for (auto name : declared)
    if (name != *initial) names.emplace_back(name);
  auto state = [&](std::string_view name) {
    for (State q = 0; q < names.size(); ++q)
      if (names[q] == name) return q;
    names.emplace_back(name);
    return static_cast<State>(names.size() - 1);
  };
  std::vector<std::tuple<State, Letter, State>> edges;
  for (const auto& [from, letter, to] : rows) {
    const State p = state(from);
    const Letter a = symbol_in(*alphabet, letter);
    edges.emplace_back(p, a, state(to));
  }
  std::vector<std::vector<Transition>> table(names.size());
  for (const auto& [p, a, q] : edges) table[p].push_back({a, q});
  try {
    return Dfa(*alphabet, std::move(names), 0, std::move(table));
  } catch (const StructureError& e) {
    throw ParseError(e.what());
  }
}

std::string format_dfa(const Dfa& d) {
  std::ostringstream os;
  const auto& symbols = d.alphabet().symbols();
  os << "alphabet: ";
  for (std::size_t i = 0; i < symbols.size(); ++i) os << (i ? "," : "") << symbols[i];
  os << "\ninitial: " << d.state_name(d.initial());
  if (d.state_count() > 1) {
    os << "\nstates: ";
    for (State q = 0; q < d.state_count(); ++q) os << (q ? "," : "") << d.state_name(q);
  }
  os << '\n';
  for (State q = 0; q < d.state_count(); ++q)
    for (const auto& t : d.transitions(q))
      os << d.state_name(q) << ' ' << d.alphabet().symbol(t.letter) << ' '
         << d.state_name(t.target) << '\n';
  return os.str();
}

Dfa read_dfa(const std::string& path) { return parse_dfa(read_file(path)); }

}  // namespace sigtree
