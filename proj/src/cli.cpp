#include "sigtree/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sigtree/automata.hpp"
#include "sigtree/errors.hpp"
#include "sigtree/labelling.hpp"
#include "sigtree/signature.hpp"
#include "sigtree/substitution.hpp"
#include "sigtree/text_format.hpp"
#include "sigtree/tree.hpp"

namespace sigtree::cli {
namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

std::string show_word(const Alphabet& a, const Word& w) {
  return w.empty() ? std::string("ε") : a.render(w);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = "") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

// Zeckendorf representation of n, greedily taking the largest Fibonacci
// number 1, 2, 3, 5, ... that fits.
std::string zeckendorf(std::uint64_t n) {
  if (n == 0) return "";
  std::vector<std::uint64_t> fib{1, 2};
  while (fib.back() <= n) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  std::string digits;
  bool started = false;
  for (auto it = fib.rbegin(); it != fib.rend(); ++it) {
    if (*it <= n) {
      n -= *it;
      digits += '1';
      started = true;
    } else if (started) {
      digits += '0';
    }
  }
  return digits;
}

int demo_fibonacci(std::size_t count, std::ostream& out) {
  const Alphabet binary = Alphabet::digits(2);
  const Morphism sigma = Morphism::endomorphism(binary, {{0, 1}, {0}});
  const auto ls = substitutive_labelled_signature(
      SubstitutiveLabelledSignature(sigma, 0, sigma));
  out << "signature prefix: " << join(ls.signature.prefix(13)) << '\n';
  out << "labelling prefix: " << binary.render(ls.labelling.prefix(13)) << '\n';
  const auto words = generate_language(ls, count);
  bool pass = true;
  for (std::size_t n = 0; n < words.size(); ++n) {
    const std::string word = binary.render(words[n]);
    if (n < 8) out << n << ' ' << show_word(binary, words[n]) << '\n';
    if (word != zeckendorf(n)) {
      out << "mismatch at " << n << ": generated " << show_word(binary, words[n])
          << ", greedy " << zeckendorf(n) << '\n';
      pass = false;
    }
  }
  out << "compared " << words.size() << " words with greedy Zeckendorf: "
      << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Breadth-first signatures of trees and prefix-closed languages",
               "sigtree"};
  app.require_subcommand(1);

  std::string signature, labelling, alphabet, dot, file, output, u_list, v_list;
  std::size_t nodes = 0, count = 0, horizon = 0, words = 0;
  bool minimal = false;

  auto* gen_tree = app.add_subcommand("gen-tree", "Generate the i-tree of a signature");
  gen_tree->add_option("--signature", signature, "Signature descriptor")->required();
  gen_tree->add_option("--nodes", nodes, "Node budget")->required()->check(CLI::PositiveNumber);
  gen_tree->add_option("--dot", dot, "Write a Graphviz file");

  auto* gen_lang = app.add_subcommand("gen-lang", "List the first words of a labelled signature");
  gen_lang->add_option("--signature", signature, "Signature descriptor")->required();
  auto* lab_opt = gen_lang->add_option("--labelling", labelling, "Labelling descriptor");
  gen_lang->add_flag("--minimal", minimal, "Use the minimal labelling")->excludes(lab_opt);
  gen_lang->add_option("--alphabet", alphabet, "Ordered letters, e.g. a,b,c");
  gen_lang->add_option("--count", count, "Number of words")->required()->check(CLI::PositiveNumber);
  gen_lang->add_option("--dot", dot, "Write a Graphviz file");

  auto* check = app.add_subcommand("check-valid", "Check the partial-sum condition");
  check->add_option("--signature", signature, "Signature descriptor")->required();
  check->add_option("--horizon", horizon, "Number of terms to check")->required()->check(CLI::PositiveNumber);

  auto* minlabel = app.add_subcommand("minlabel", "Relabel an automaton minimally");
  minlabel->add_option("file", file, "Automaton file")->required();
  minlabel->add_option("--dot", dot, "Write a Graphviz file");

  auto* from_periodic = app.add_subcommand("sig-from-periodic", "Morphism for u.v^omega");
  from_periodic->add_option("--u", u_list, "Preperiod, comma separated");
  from_periodic->add_option("--v", v_list, "Period, comma separated")->required();
  from_periodic->add_option("-o,--output", output, "Write the morphism file");

  auto* from_dfa = app.add_subcommand("sig-from-dfa", "Substitutive labelled signature of an automaton");
  from_dfa->add_option("file", file, "Automaton file")->required();
  from_dfa->add_option("-o,--output", output, "Write the morphism file");

  auto* to_dfa = app.add_subcommand("dfa-from-sig", "Automaton of a substitutive labelled signature");
  to_dfa->add_option("file", file, "Morphism file with label-images")->required();
  to_dfa->add_option("--dot", dot, "Write a Graphviz file");

  auto* roundtrip = app.add_subcommand("roundtrip", "Automaton -> signature -> automaton");
  roundtrip->add_option("file", file, "Automaton file")->required();
  roundtrip->add_option("--words", words, "Number of words to compare")->required()->check(CLI::PositiveNumber);

  auto* demo = app.add_subcommand("demo-fibonacci", "Fibonacci signature and Zeckendorf words");
  count = 100;
  demo->add_option("--count", count, "Number of words to compare")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*gen_tree) {
      const auto tree = generate_tree(parse_signature(signature), nodes);
      for (Node n = 0; n < tree.expanded_count(); ++n) {
        const auto& r = tree.children(n);
        out << n << ':';
        for (Node c = r.begin; c < r.end; ++c) out << ' ' << c;
        out << '\n';
      }
      if (!dot.empty()) write_file(dot, to_dot(tree));
    } else if (*gen_lang) {
      if (!minimal && labelling.empty())
        throw ParseError("gen-lang needs --labelling or --minimal");
      const auto s = parse_signature(signature);
      std::optional<Alphabet> letters;
      if (!alphabet.empty()) letters = parse_alphabet(alphabet);
      const LabelledSignature ls =
          minimal ? minimal_labelling(s)
                  : LabelledSignature{s, parse_labelling(labelling, letters)};
      for (const auto& w : generate_language(ls, count))
        out << show_word(ls.alphabet(), w) << '\n';
      if (!dot.empty()) write_file(dot, to_dot(ls, count));
    } else if (*check) {
      const auto report = check_valid(parse_signature(signature), horizon);
      if (report.proven_forever) {
        out << "valid (proven forever)\n";
      } else if (report.valid_on_prefix) {
        out << "valid up to horizon " << horizon << '\n';
      } else {
        out << "invalid: partial sum condition fails at j="
            << *report.first_violation << '\n';
        return kDomainError;
      }
    } else if (*minlabel) {
      const auto d = minimal_label_dfa(trim(read_dfa(file)));
      out << format_dfa(d);
      if (!dot.empty()) write_file(dot, to_dot(d));
    } else if (*from_periodic) {
      const auto u = parse_int_list(u_list);
      const auto v = parse_int_list(v_list);
      auto sub = periodic_to_substitution(u, v);
      // Label images of the minimal labelling: c -> 0 1 ... |sigma(c)|-1.
      std::size_t degree = 0;
      for (const auto& img : sub.sigma.images()) degree = std::max(degree, img.size());
      std::vector<Word> labels;
      for (const auto& img : sub.sigma.images()) {
        Word w(img.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<Letter>(i);
        labels.push_back(std::move(w));
      }
      MorphismFile mf{sub.sigma, sub.start,
                      Morphism(sub.sigma.source(), Alphabet::digits(degree),
                               std::move(labels))};
      const auto text = format_morphism_file(mf);
      output.empty() ? void(out << text) : write_file(output, text);
    } else if (*from_dfa) {
      const auto sls = dfa_to_signature(read_dfa(file));
      const auto text =
          format_morphism_file({sls.sigma(), sls.start(), sls.labels()});
      output.empty() ? void(out << text) : write_file(output, text);
    } else if (*to_dfa) {
      const auto mf = read_morphism_file(file);
      if (!mf.labels) throw ParseError("morphism file has no label-images section");
      const auto d =
          signature_to_dfa(SubstitutiveLabelledSignature(mf.sigma, mf.start, *mf.labels));
      out << format_dfa(d);
      if (!dot.empty()) write_file(dot, to_dot(d));
    } else if (*roundtrip) {
      const bool same = conversion_roundtrip(read_dfa(file), words);
      out << (same ? "true" : "false") << '\n';
      return same ? 0 : kDomainError;
    } else if (*demo) {
      return demo_fibonacci(count, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return 0;
}

}  // namespace sigtree::cli
