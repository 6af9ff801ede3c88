#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "sigtree/automata.hpp"
#include "sigtree/errors.hpp"
#include "sigtree/labelling.hpp"
#include "sigtree/signature.hpp"
#include "sigtree/substitution.hpp"
#include "sigtree/text_format.hpp"
#include "sigtree/tree.hpp"

namespace py = pybind11;
using namespace sigtree;

namespace {

std::vector<std::vector<std::pair<Letter, State>>> table_of(const Dfa& d) {
  std::vector<std::vector<std::pair<Letter, State>>> out(d.state_count());
  for (State q = 0; q < d.state_count(); ++q)
    for (const auto& t : d.transitions(q)) out[q].emplace_back(t.letter, t.target);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Breadth-first signatures of trees and prefix-closed languages";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ArgumentError>(m, "ArgumentError", error);
  auto config = py::register_exception<ConfigError>(m, "ConfigError", error);
  py::register_exception<NotProlongable>(m, "NotProlongable", config);
  py::register_exception<InvalidSignature>(m, "InvalidSignature", error);
  py::register_exception<InvalidLabelling>(m, "InvalidLabelling", error);
  py::register_exception<StructureError>(m, "StructureError", error);
  py::register_exception<AlphabetError>(m, "AlphabetError", error);
  py::register_exception<LengthMismatch>(m, "LengthMismatch", error);
  py::register_exception<NonIntegerGrowthRatio>(m, "NonIntegerGrowthRatio", error);
  py::register_exception<NonIncreasingImage>(m, "NonIncreasingImage", error);
  py::register_exception<FiniteLanguage>(m, "FiniteLanguage", error);
  py::register_exception<ParseError>(m, "ParseError", error);

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::vector<std::string>>(), py::arg("symbols"))
      .def_static("digits", &Alphabet::digits, py::arg("k"))
      .def_property_readonly("symbols", &Alphabet::symbols)
      .def("__len__", &Alphabet::size)
      .def("index", &Alphabet::index, py::arg("symbol"))
      .def("render", [](const Alphabet& a, const Word& w) { return a.render(w); })
      .def("spell", [](const Alphabet& a, const Word& w) { return a.spell(w); })
      .def("parse_word", &Alphabet::parse_word, py::arg("text"))
      .def(py::self == py::self)
      .def("__repr__", [](const Alphabet& a) {
        std::string out = "Alphabet([";
        for (std::size_t i = 0; i < a.size(); ++i)
          out += (i ? ", '" : "'") + a.symbol(i) + "'";
        return out + "])";
      });

  py::class_<Morphism>(m, "Morphism")
      .def(py::init<Alphabet, Alphabet, std::vector<Word>>(), py::arg("source"),
           py::arg("target"), py::arg("images"))
      .def_static("endomorphism", &Morphism::endomorphism, py::arg("alphabet"),
                  py::arg("images"))
      .def_property_readonly("source", &Morphism::source)
      .def_property_readonly("target", &Morphism::target)
      .def_property_readonly("images", &Morphism::images)
      .def("image", &Morphism::image, py::arg("letter"))
      .def("apply", [](const Morphism& s, const Word& w) { return s.apply(w); })
      .def(py::self == py::self);
  m.def("is_prolongable", &is_prolongable, py::arg("sigma"), py::arg("letter"));
  m.def("length_coding", &length_coding, py::arg("sigma"));

  py::class_<IntSeq>(m, "IntSeq")
      .def_static("periodic", &IntSeq::periodic, py::arg("preperiod"), py::arg("period"))
      .def_static("substitutive", &IntSeq::substitutive, py::arg("sigma"),
                  py::arg("start"), py::arg("coding"))
      .def("prefix", &IntSeq::prefix, py::arg("n"))
      .def("__repr__", &IntSeq::describe);

  py::class_<LetterSeq>(m, "LetterSeq")
      .def_static("periodic", &LetterSeq::periodic, py::arg("alphabet"),
                  py::arg("preperiod"), py::arg("period"))
      .def_static("morphic", &LetterSeq::morphic, py::arg("sigma"), py::arg("start"),
                  py::arg("image"))
      .def_property_readonly("alphabet", &LetterSeq::alphabet)
      .def("prefix", &LetterSeq::prefix, py::arg("n"));

  py::class_<ValidityReport>(m, "ValidityReport")
      .def_readonly("valid_on_prefix", &ValidityReport::valid_on_prefix)
      .def_readonly("proven_forever", &ValidityReport::proven_forever)
      .def_readonly("first_violation", &ValidityReport::first_violation);
  m.def("check_valid", &check_valid, py::arg("signature"), py::arg("horizon"));
  m.def("growth_ratio", [](const IntWord& v) {
    const Rational r = growth_ratio(v);
    return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
  }, py::arg("period"));

  py::class_<TreePrefix>(m, "TreePrefix")
      .def_property_readonly("node_count", &TreePrefix::node_count)
      .def_property_readonly("expanded_count", &TreePrefix::expanded_count)
      .def_property_readonly("is_itree",
                             [](const TreePrefix& t) { return t.form() == TreeForm::itree; })
      .def("children", [](const TreePrefix& t, Node n) {
        const auto& r = t.children(n);
        return py::make_tuple(r.begin, r.end);
      }, py::arg("node"))
      .def("father", [](const TreePrefix& t, Node n) { return father(t, n); }, py::arg("node"))
      .def("signature", [](const TreePrefix& t) { return signature_of(t); })
      .def("to_tree_form", [](const TreePrefix& t) { return to_tree_form(t); })
      .def("to_itree_form", [](const TreePrefix& t) { return to_itree_form(t); })
      .def("to_dot", [](const TreePrefix& t) { return to_dot(t); });
  m.def("generate_tree", &generate_tree, py::arg("signature"), py::arg("node_budget"));

  py::class_<LabelledSignature>(m, "LabelledSignature")
      .def(py::init([](IntSeq s, LetterSeq l) {
             return LabelledSignature{std::move(s), std::move(l)};
           }),
           py::arg("signature"), py::arg("labelling"))
      .def_readonly("signature", &LabelledSignature::signature)
      .def_readonly("labelling", &LabelledSignature::labelling)
      .def_property_readonly("alphabet", &LabelledSignature::alphabet)
      .def("to_dot", [](const LabelledSignature& ls, std::size_t budget) {
        return to_dot(ls, budget);
      }, py::arg("node_budget"));
  m.def("check_labelling", &check_labelling, py::arg("ls"), py::arg("horizon"));
  m.def("generate_language", &generate_language, py::arg("ls"), py::arg("n_words"));
  m.def("word_of_node", &word_of_node, py::arg("ls"), py::arg("node"));
  m.def("node_of_word", [](const LabelledSignature& ls, const Word& w,
                           std::size_t horizon) -> std::optional<Node> {
    const auto r = node_of_word(ls, w, horizon);
    if (const Node* n = std::get_if<Node>(&r)) return *n;
    return std::nullopt;
  }, py::arg("ls"), py::arg("word"), py::arg("horizon") = 100000,
     "Node spelling `word` among the first `horizon` nodes, or None.");
  m.def("minimal_labelling", &minimal_labelling, py::arg("signature"));

  py::class_<SubstitutiveLabelledSignature>(m, "SubstitutiveLabelledSignature")
      .def(py::init<Morphism, Letter, Morphism>(), py::arg("sigma"), py::arg("start"),
           py::arg("labels"))
      .def_property_readonly("sigma", &SubstitutiveLabelledSignature::sigma)
      .def_property_readonly("start", &SubstitutiveLabelledSignature::start)
      .def_property_readonly("labels", &SubstitutiveLabelledSignature::labels)
      .def("labelled_signature", [](const SubstitutiveLabelledSignature& s) {
        return substitutive_labelled_signature(s);
      });
  m.def("fixed_point", &fixed_point, py::arg("sigma"), py::arg("start"));
  m.def("substitutive_signature", &substitutive_signature, py::arg("sigma"),
        py::arg("start"));
  m.def("periodic_to_substitution", [](const IntWord& u, const IntWord& v) {
    auto sub = periodic_to_substitution(u, v);
    return py::make_tuple(std::move(sub.sigma), sub.start);
  }, py::arg("preperiod"), py::arg("period"));

  py::class_<Dfa>(m, "Dfa")
      .def(py::init([](Alphabet alphabet, std::vector<std::string> names, State initial,
                       const std::vector<std::vector<std::pair<Letter, State>>>& table) {
             std::vector<std::vector<Transition>> rows;
             for (const auto& row : table) {
               auto& out = rows.emplace_back();
               for (const auto& [a, q] : row) out.push_back({a, q});
             }
             return Dfa(std::move(alphabet), std::move(names), initial, std::move(rows));
           }),
           py::arg("alphabet"), py::arg("state_names"), py::arg("initial"),
           py::arg("transitions"))
      .def_property_readonly("alphabet", &Dfa::alphabet)
      .def_property_readonly("state_names", &Dfa::state_names)
      .def_property_readonly("initial", &Dfa::initial)
      .def_property_readonly("transitions", &table_of)
      .def("__len__", &Dfa::state_count)
      .def("target", &Dfa::target, py::arg("state"), py::arg("letter"))
      .def("accepts", [](const Dfa& d, const Word& w) { return d.accepts(w); })
      .def("to_dot", [](const Dfa& d) { return to_dot(d); })
      .def(py::self == py::self);
  m.def("trim", &trim, py::arg("dfa"));
  m.def("minimize", &minimize, py::arg("dfa"));
  m.def("enumerate_radix", &enumerate_radix, py::arg("dfa"), py::arg("n"));
  m.def("minimal_label_dfa", &minimal_label_dfa, py::arg("dfa"));
  m.def("dfa_to_signature", &dfa_to_signature, py::arg("dfa"));
  m.def("signature_to_dfa", &signature_to_dfa, py::arg("sls"));
  m.def("conversion_roundtrip", &conversion_roundtrip, py::arg("dfa"), py::arg("n"));

  m.def("parse_signature", &parse_signature, py::arg("text"));
  m.def("parse_labelling", &parse_labelling, py::arg("text"),
        py::arg("alphabet") = std::nullopt);
  m.def("parse_dfa", &parse_dfa, py::arg("text"));
  m.def("format_dfa", &format_dfa, py::arg("dfa"));
}
