#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "crystals/character.hpp"
#include "crystals/cli.hpp"
#include "crystals/crystal.hpp"
#include "crystals/demazure.hpp"
#include "crystals/laurent.hpp"

namespace py = pybind11;
using namespace crystals;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(x.str())); }

py::dict character_dict(const FormalCharacter& chi) {
  py::dict d;
  for (const auto& [mu, c] : chi.terms()) d[py::tuple(py::cast(mu.coords))] = c;
  return d;
}

py::dict poly_dict(const LaurentPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

py::object opt_id(std::size_t b) {
  if (b == CrystalGraph::npos) return py::none();
  return py::int_(b);
}

// Python-side handle: the graph plus the datum it was built from.
class Crystal {
 public:
  Crystal(const std::string& type, const std::vector<int>& weight, std::size_t max_elements) {
    GenerateOptions opts;
    opts.max_elements = max_elements;
    graph_ = std::make_shared<CrystalGraph>(generate_crystal(CartanDatum::parse(type), Weight(weight), opts));
  }

  const CrystalGraph& graph() const { return *graph_; }

  std::size_t check(std::size_t b) const {
    if (b >= graph_->size()) throw py::index_error("element id out of range");
    return b;
  }

  DemazureCrystal demazure(const std::vector<int>& word) const {
    return demazure_crystal(*graph_, WeylWord(word));
  }

 private:
  std::shared_ptr<CrystalGraph> graph_;
};

std::vector<std::size_t> member_ids(const ElementSet& s) {
  std::vector<std::size_t> out;
  for (auto b = s.find_first(); b != ElementSet::npos; b = s.find_next(b)) out.push_back(b);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Crystal bases, Demazure crystals and characters for finite-type root data.";
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Crystal>(m, "Crystal")
      .def(py::init<const std::string&, const std::vector<int>&, std::size_t>(), py::arg("type"), py::arg("weight"),
           py::arg("max_elements") = GenerateOptions{}.max_elements)
      .def("__len__", [](const Crystal& c) { return c.graph().size(); })
      .def_property_readonly("type", [](const Crystal& c) { return c.graph().datum().name(); })
      .def_property_readonly("rank", [](const Crystal& c) { return c.graph().rank(); })
      .def_property_readonly("highest_weight", [](const Crystal& c) { return c.graph().highest_weight().coords; })
      .def("weight", [](const Crystal& c, std::size_t b) { return c.graph().element(c.check(b)).weight.coords; })
      .def("eps", [](const Crystal& c, std::size_t b, int i) { return c.graph().eps(c.check(b), i); })
      .def("phi", [](const Crystal& c, std::size_t b, int i) { return c.graph().phi(c.check(b), i); })
      .def("f", [](const Crystal& c, std::size_t b, int i) { return opt_id(c.graph().f(c.check(b), i)); })
      .def("e", [](const Crystal& c, std::size_t b, int i) { return opt_id(c.graph().e(c.check(b), i)); })
      .def("path", [](const Crystal& c, std::size_t b) { return c.graph().element(c.check(b)).path.encode(); })
      .def("edges",
           [](const Crystal& c) {
             std::vector<std::tuple<std::size_t, std::size_t, int>> out;
             const CrystalGraph& g = c.graph();
             for (std::size_t b = 0; b < g.size(); ++b)
               for (int i = 1; i <= g.rank(); ++i)
                 if (g.f(b, i) != CrystalGraph::npos) out.emplace_back(b, g.f(b, i), i);
             return out;
           })
      .def("character", [](const Crystal& c) { return character_dict(char_of(c.graph())); })
      .def("is_normal", [](const Crystal& c) { return verify_normal(c.graph()).ok; })
      .def(
          "demazure", [](const Crystal& c, const std::vector<int>& word) { return member_ids(c.demazure(word).members); },
          py::arg("word"), "Element ids of the Demazure crystal for a reduced word.")
      .def(
          "demazure_character",
          [](const Crystal& c, const std::vector<int>& word) {
            return character_dict(char_of(c.demazure(word).members, c.graph()));
          },
          py::arg("word"))
      .def(
          "to_json",
          [](const Crystal& c, std::optional<std::vector<int>> word) {
            if (!word) return cli::emit_json(c.graph());
            const DemazureCrystal dc = c.demazure(*word);
            return cli::emit_json(c.graph(), &dc);
          },
          py::arg("word") = py::none())
      .def(
          "to_dot",
          [](const Crystal& c, std::optional<std::vector<int>> word) {
            if (!word) return cli::emit_dot(c.graph());
            const DemazureCrystal dc = c.demazure(*word);
            return cli::emit_dot(c.graph(), &dc);
          },
          py::arg("word") = py::none());

  m.def(
      "weyl_group", [](const std::string& type) {
        std::vector<std::vector<int>> out;
        for (const WeylWord& w : weyl_group(CartanDatum::parse(type))) out.push_back(w.letters);
        return out;
      },
      "Canonical reduced words of every element, shortest first.");
  m.def("is_reduced", [](const std::string& type, const std::vector<int>& word) {
    return is_reduced(CartanDatum::parse(type), WeylWord(word));
  });
  m.def("cartan_matrix", [](const std::string& type) { return CartanDatum::parse(type).matrix(); });
  m.def("weyl_dimension", [](const std::string& type, const std::vector<int>& weight) {
    return to_py(weyl_dimension(CartanDatum::parse(type), Weight(weight)));
  });
  m.def("weyl_character", [](const std::string& type, const std::vector<int>& weight) {
    return character_dict(weyl_character(CartanDatum::parse(type), Weight(weight)));
  });
  m.def("demazure_character", [](const std::string& type, const std::vector<int>& weight, const std::vector<int>& word) {
    return character_dict(demazure_character(CartanDatum::parse(type), Weight(weight), WeylWord(word)));
  });

  m.def("qint", [](int n) { return poly_dict(qint(n)); }, "Balanced quantum integer as {exponent: coefficient}.");
  m.def("qbinom", [](int n, int k) { return poly_dict(qbinom(n, k)); });
  m.def("qbinom_str", [](int n, int k) { return qbinom(n, k).str(); });

  m.def(
      "verify",
      [](const std::string& type, const std::vector<int>& weight, std::size_t max_elements) {
        cli::JobSpec spec;
        spec.command = cli::Command::verify;
        spec.datum = CartanDatum::parse(type);
        spec.weight = Weight(weight);
        spec.max_elements = max_elements;
        if (spec.weight.rank() != spec.datum->rank()) throw py::value_error("weight length does not match rank");
        if (!spec.weight.is_dominant()) throw py::value_error("weight is not dominant");
        const cli::VerifyReport r = cli::run_verify(spec);
        py::list rows;
        for (const auto& row : r.rows)
          rows.append(py::dict(py::arg("name") = row.name, py::arg("cases") = row.cases,
                               py::arg("passed") = row.result.ok, py::arg("witness") = row.result.witness));
        return py::dict(py::arg("passed") = r.passed(), py::arg("checks") = rows);
      },
      py::arg("type"), py::arg("weight"), py::arg("max_elements") = GenerateOptions{}.max_elements,
      "Runs every crystal-level check for one highest weight.");
}
