#include "crystals/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crystals/character.hpp"
#include "crystals/rank_one.hpp"

namespace crystals::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + text + "' is not a comma-separated list of integers");
    }
  }
  if (!text.empty() && text.back() == ',') throw UsageError(flag + ": trailing comma in '" + text + "'");
  return out;
}

std::shared_ptr<spdlog::logger> logger() {
  static auto log = [] {
    auto l = std::make_shared<spdlog::logger>("crystals", std::make_shared<spdlog::sinks::stderr_sink_mt>());
    l->set_pattern("[%l] %v");
    l->set_level(spdlog::level::warn);
    return l;
  }();
  return log;
}

void set_log_level(LogLevel level) {
  switch (level) {
    case LogLevel::error: logger()->set_level(spdlog::level::warn); break;
    case LogLevel::info: logger()->set_level(spdlog::level::info); break;
    case LogLevel::debug: logger()->set_level(spdlog::level::debug); break;
  }
}

ordered_json coords(const std::vector<int>& v) { return ordered_json(v); }

}  // namespace

// ---------------------------------------------------------------------------
// Argument parsing

JobSpec parse_args(int argc, const char* const* argv, const char* log_env) {
  CLI::App app{"Crystals, Demazure crystals and characters of finite-type Lie algebras", "crystals"};
  app.require_subcommand(1);

  std::string type;
  std::string weight;
  std::string word;
  std::string format = "text";
  std::string out;
  std::size_t max_elements = GenerateOptions{}.max_elements;
  std::string inject;

  struct Sub {
    const char* name;
    const char* help;
    Command cmd;
  };
  const Sub subs[] = {
      {"crystal", "Generate B(lambda)", Command::crystal},
      {"demazure", "Generate the Demazure crystal B_w(lambda) for a reduced word", Command::demazure},
      {"character", "Print the character of B(lambda) or B_w(lambda)", Command::character},
      {"rank-one", "Print the action tables of the rank-one quantized Weyl module", Command::rank_one},
      {"verify", "Run the verification suite", Command::verify},
  };
  std::vector<std::pair<CLI::App*, Command>> registered;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--type", type, "Cartan type, e.g. A2, B2, G2")->required(s.cmd != Command::rank_one);
    sub->add_option("--weight", weight, "Highest weight in fundamental-weight coordinates, e.g. 1,1")->required();
    sub->add_option("--word", word, "Reduced word, e.g. 1,2,1")->required(s.cmd == Command::demazure);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--out", out, "Write output to PATH instead of stdout");
    sub->add_option("--max-elements", max_elements, "Refuse crystals larger than N")->check(CLI::PositiveNumber);
    if (s.cmd == Command::verify) sub->add_option("--inject-fault", inject)->group("");
    registered.emplace_back(sub, s.cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), true);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  JobSpec spec;
  for (const auto& [sub, cmd] : registered)
    if (sub->parsed()) spec.command = cmd;

  if (log_env != nullptr) {
    const std::string lv = log_env;
    if (lv == "error")
      spec.log = LogLevel::error;
    else if (lv == "info")
      spec.log = LogLevel::info;
    else if (lv == "debug")
      spec.log = LogLevel::debug;
    else
      throw UsageError("CRYSTAL_LOG must be one of error, info, debug (got '" + lv + "')");
  }

  if (type.empty()) type = "A1";
  try {
    spec.datum = CartanDatum::parse(type);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--type: ") + e.what());
  }
  if (spec.command == Command::rank_one && spec.datum->name() != "A1")
    throw UsageError("rank-one requires --type A1");

  spec.weight = Weight(parse_int_list(weight, "--weight"));
  if (spec.weight.rank() != spec.datum->rank())
    throw UsageError("--weight has " + std::to_string(spec.weight.rank()) + " coordinates but " + spec.datum->name() +
                     " has rank " + std::to_string(spec.datum->rank()));
  if (!spec.weight.is_dominant()) throw UsageError("--weight " + spec.weight.str() + " is not dominant");

  if (!word.empty() || spec.command == Command::demazure) {
    WeylWord w(parse_int_list(word, "--word"));
    for (int l : w.letters)
      if (l < 1 || l > spec.datum->rank())
        throw UsageError("--word letter " + std::to_string(l) + " outside [1," + std::to_string(spec.datum->rank()) + "]");
    if (!is_reduced(*spec.datum, w)) throw UsageError("--word " + w.str() + " is not reduced");
    spec.word = std::move(w);
  }

  spec.format = format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text;
  if (spec.format == Format::dot && spec.command != Command::crystal && spec.command != Command::demazure)
    throw UsageError("--format dot is only available for crystal and demazure");
  if (!out.empty()) spec.out = out;
  spec.max_elements = max_elements;
  if (!inject.empty()) {
    if (inject != "string-property") throw UsageError("unknown fault '" + inject + "'");
    spec.inject_fault = inject;
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Serialization

std::string emit_json(const CrystalGraph& graph, const DemazureCrystal* dc) {
  ordered_json j;
  j["family"] = std::string(1, graph.datum().family());
  j["rank"] = graph.rank();
  j["highest_weight"] = coords(graph.highest_weight().coords);
  ordered_json elements = ordered_json::array();
  ordered_json edges = ordered_json::array();
  for (std::size_t b = 0; b < graph.size(); ++b) {
    const auto& el = graph.element(b);
    ordered_json e;
    e["id"] = b;
    e["weight"] = coords(el.weight.coords);
    e["eps"] = coords(el.eps);
    e["phi"] = coords(el.phi);
    elements.push_back(std::move(e));
    for (int i = 1; i <= graph.rank(); ++i)
      if (const std::size_t c = graph.f(b, i); c != CrystalGraph::npos)
        edges.push_back(ordered_json{{"from", b}, {"to", c}, {"i", i}});
  }
  j["elements"] = std::move(elements);
  j["edges"] = std::move(edges);
  if (dc != nullptr) {
    ordered_json members = ordered_json::array();
    for (auto b = dc->members.find_first(); b != ElementSet::npos; b = dc->members.find_next(b)) members.push_back(b);
    j["members"] = std::move(members);
  }
  return j.dump() + "\n";
}

std::string emit_dot(const CrystalGraph& graph, const DemazureCrystal* dc) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  label=\"B" << graph.highest_weight().str() << " " << graph.datum().name();
  if (dc != nullptr) os << " w=" << dc->word.str();
  os << "\";\n";
  for (std::size_t b = 0; b < graph.size(); ++b) {
    os << "  n" << b << " [label=\"" << graph.element(b).weight.str() << "\"";
    if (dc != nullptr && dc->contains(b)) os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (std::size_t b = 0; b < graph.size(); ++b)
    for (int i = 1; i <= graph.rank(); ++i)
      if (const std::size_t c = graph.f(b, i); c != CrystalGraph::npos)
        os << "  n" << b << " -> n" << c << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string emit_text(const CrystalGraph& graph, const DemazureCrystal* dc) {
  std::ostringstream os;
  os << "# " << graph.datum().name() << " B" << graph.highest_weight().str() << ": " << graph.size() << " elements, "
     << graph.edge_count() << " edges";
  if (dc != nullptr) os << "; B_w for w=" << dc->word.str() << ": " << dc->size() << " elements";
  os << "\n";
  auto tuple = [](const std::vector<int>& v) { return Weight(v).str(); };
  for (std::size_t b = 0; b < graph.size(); ++b) {
    if (dc != nullptr && !dc->contains(b)) continue;
    const auto& el = graph.element(b);
    os << b << " " << el.weight.str() << " eps=" << tuple(el.eps) << " phi=" << tuple(el.phi);
    for (int i = 1; i <= graph.rank(); ++i)
      if (const std::size_t c = graph.f(b, i); c != CrystalGraph::npos) os << " f" << i << "->" << c;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Verification suite

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const CheckRow* VerifyReport::first_failure() const {
  for (const auto& r : rows)
    if (!r.result.ok) return &r;
  return nullptr;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << "# verify " << family << rank << " lambda=" << highest_weight.str() << "\n";
  for (const auto& r : rows) {
    std::string name = r.name;
    name.resize(std::max<std::size_t>(name.size(), 34), ' ');
    os << name << " " << r.cases << " cases  " << (r.result.ok ? "PASS" : "FAIL") << "\n";
  }
  os << (passed() ? "ALL PASS" : "FAILED") << "\n";
  return os.str();
}

std::string VerifyReport::json() const {
  ordered_json j;
  j["family"] = family;
  j["rank"] = rank;
  j["highest_weight"] = coords(highest_weight.coords);
  ordered_json checks = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json c;
    c["name"] = r.name;
    c["cases"] = r.cases;
    c["passed"] = r.result.ok;
    if (!r.result.ok) c["witness"] = r.result.witness;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["passed"] = passed();
  return j.dump() + "\n";
}

namespace {

// Accumulates a check over many cases, keeping the first failure.
struct Tally {
  CheckRow row;
  explicit Tally(std::string name) { row.name = std::move(name); }
  void add(const Check& c) {
    ++row.cases;
    if (row.result.ok && !c.ok) row.result = c;
  }
};

// Removes the top of the first non-trivial 1-string from a full crystal,
// which breaks the string property.
void inject_string_fault(DemazureCrystal& dc) {
  for (const IString& s : i_strings(*dc.graph, 1))
    if (s.length > 0) {
      dc.members.reset(s.top);
      return;
    }
  throw UsageError("cannot inject a string-property fault into a trivial crystal");
}

}  // namespace

VerifyReport run_verify(const JobSpec& spec) {
  const CartanDatum& datum = *spec.datum;
  const Weight& lam = spec.weight;
  VerifyReport report{std::string(1, datum.family()), datum.rank(), lam, {}};
  auto log = logger();

  const auto t0 = std::chrono::steady_clock::now();
  GenerateOptions opts;
  opts.max_elements = spec.max_elements;
  const CrystalGraph graph = generate_crystal(datum, lam, opts);
  log->info("generated B{} in {}: {} elements", lam.str(), datum.name(), graph.size());

  {
    Tally t("normality");
    t.add(verify_normal(graph));
    report.rows.push_back(t.row);
  }
  {
    Tally t("eps/phi by iteration");
    for (std::size_t b = 0; b < graph.size(); ++b)
      for (int i = 1; i <= datum.rank(); ++i) {
        const EpsPhi it = eps_phi_by_iteration(datum, i, graph.element(b).path);
        t.add(it == EpsPhi{graph.eps(b, i), graph.phi(b, i)}
                  ? Check::pass()
                  : Check::fail("element " + std::to_string(b) + ", i=" + std::to_string(i)));
      }
    report.rows.push_back(t.row);
  }
  {
    Tally t("size = Weyl dimension");
    const BigInt dim = weyl_dimension(datum, lam);
    t.add(dim == graph.size() ? Check::pass()
                              : Check::fail(std::to_string(graph.size()) + " elements, Weyl dimension " + dim.str()));
    report.rows.push_back(t.row);
  }
  {
    Tally t("weights below highest weight");
    for (const auto& el : graph.elements())
      t.add(dominance_leq(datum, el.weight, lam) ? Check::pass() : Check::fail(el.weight.str() + " not <= lambda"));
    report.rows.push_back(t.row);
  }

  const WeylGroup group(datum);
  const FormalCharacter full = char_of(graph);
  {
    Tally t("Weyl character (Freudenthal)");
    const FormalCharacter fr = weyl_character(datum, lam);
    t.add(full == fr ? Check::pass() : Check::fail("char B(lambda) != Freudenthal\n" + full.str() + "vs\n" + fr.str()));
    const FormalCharacter top = demazure_character(datum, lam, group.longest());
    t.add(full == top ? Check::pass() : Check::fail("char B(lambda) != w0 Demazure character"));
    t.add(is_weyl_invariant(datum, full) ? Check::pass() : Check::fail("char B(lambda) is not W-invariant"));
    report.rows.push_back(t.row);
  }

  Tally closed("e-closure of B_w");
  Tally strings("string property");
  Tally filtration("filtration structure");
  Tally independence("reduced-word independence");
  Tally demazure_char("Demazure character formula");
  Tally quotient("quotient strings");
  Tally monotone("monotonicity");
  Tally extremal("extremal vectors");

  std::map<WeylWord, ElementSet> computed;
  std::size_t sampled_count = 0;
  for (const WeylWord& w : group.elements()) {
    DemazureCrystal dc = demazure_crystal(graph, w);
    computed.emplace(w, dc.members);
    closed.add(verify_e_closed(dc));
    DemazureCrystal for_strings = dc;
    if (spec.inject_fault && w == group.longest()) inject_string_fault(for_strings);
    for (int i = 1; i <= datum.rank(); ++i) {
      strings.add(verify_string_property(for_strings, i));
      filtration.add(verify_filtration_structure(dc, i));
    }
    bool sampled = false;
    independence_words(group, w, &sampled);
    if (sampled) {
      ++sampled_count;
      log->debug("reduced words of {} sampled, not enumerated", w.str());
    }
    independence.add(reduced_word_independence(graph, group, w));
    demazure_char.add(verify_demazure_character(graph, w));

    const std::size_t ext = extremal_element(graph, w);
    const Weight wl = act(datum, w, lam);
    std::size_t same_weight = 0;
    for (auto b = dc.members.find_first(); b != ElementSet::npos; b = dc.members.find_next(b))
      same_weight += graph.element(b).weight == wl;
    extremal.add(dc.contains(ext) && graph.element(ext).weight == wl && same_weight == 1
                     ? Check::pass()
                     : Check::fail("extremal element of " + w.str() + " is not the unique element of weight " + wl.str()));

    if (!w.empty()) {
      const WeylWord sw = w.tail();
      const DemazureCrystal small{&graph, sw, computed.at(sw)};
      const QuotientStrings q = quotient_strings(dc, small, w.letters.front());
      quotient.add(q.check);
      monotone.add(small.members.is_subset_of(dc.members) && small.size() <= dc.size()
                       ? Check::pass()
                       : Check::fail("B_" + sw.str() + " not contained in B_" + w.str()));
    }
    if (w == group.longest())
      monotone.add(dc.members.count() == graph.size() ? Check::pass() : Check::fail("B_w0 != B(lambda)"));
  }
  for (Tally* t : {&closed, &strings, &filtration, &independence, &demazure_char, &quotient, &monotone, &extremal})
    report.rows.push_back(t->row);
  if (sampled_count)
    log->warn("reduced-word independence used sampled words for {} of {} Weyl group elements", sampled_count,
              group.size());

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  log->info("verification of {} elements over {} Weyl group elements took {} ms", graph.size(), group.size(), ms);
  return report;
}

// ---------------------------------------------------------------------------
// Driver

namespace {

std::string rank_one_report(int lam, Format format) {
  const RankOneModule mod(lam);
  auto image = [](const ModuleVector& v) -> std::pair<std::optional<int>, LaurentPoly> {
    if (v.coeffs.empty()) return {std::nullopt, LaurentPoly{}};
    return {v.coeffs.begin()->first, v.coeffs.begin()->second};
  };
  if (format == Format::json) {
    ordered_json j;
    j["highest_weight"] = lam;
    j["dimension"] = mod.dimension();
    ordered_json basis = ordered_json::array();
    for (int k = 0; k <= lam; ++k) {
      const ModuleVector b = ModuleVector::basis(k);
      ordered_json row;
      row["k"] = k;
      for (const auto& [name, v] : {std::pair{"f", mod.act_f(b)}, std::pair{"e", mod.act_e(b)},
                                    std::pair{"K", mod.act_K(b)}}) {
        const auto [idx, c] = image(v);
        row[name] = idx ? ordered_json{{"index", *idx}, {"coeff", c.str()}} : ordered_json(nullptr);
      }
      const auto ft = mod.crystal_f_tilde(k);
      row["f_tilde"] = ft ? ordered_json(*ft) : ordered_json(nullptr);
      basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    j["sl2_relation"] = mod.verify_sl2_relation();
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << "# rank-one Weyl module, highest weight " << lam << ", dimension " << mod.dimension() << "\n";
  for (int k = 0; k <= lam; ++k) {
    const ModuleVector b = ModuleVector::basis(k);
    for (const auto& [name, v] : {std::pair{"f", mod.act_f(b)}, std::pair{"e", mod.act_e(b)},
                                  std::pair{"K", mod.act_K(b)}}) {
      const auto [idx, c] = image(v);
      os << name << " f^(" << k << ")v = ";
      if (idx)
        os << "(" << c.str() << ") f^(" << *idx << ")v\n";
      else
        os << "0\n";
    }
  }
  os << "crystal:";
  for (int k = 0; k <= lam; ++k) os << (k ? " -> " : " ") << k;
  os << "\nsl2 relation: " << (mod.verify_sl2_relation() ? "holds" : "FAILS") << "\n";
  return os.str();
}

std::string character_report(const CrystalGraph& graph, const DemazureCrystal* dc, Format format) {
  const FormalCharacter chi = dc ? char_of(dc->members, graph) : char_of(graph);
  if (format == Format::json) {
    ordered_json j;
    j["family"] = std::string(1, graph.datum().family());
    j["rank"] = graph.rank();
    j["highest_weight"] = coords(graph.highest_weight().coords);
    if (dc) j["word"] = dc->word.letters;
    ordered_json terms = ordered_json::array();
    for (auto it = chi.terms().rbegin(); it != chi.terms().rend(); ++it)
      terms.push_back(ordered_json{{"weight", it->first.coords}, {"mult", it->second}});
    j["character"] = std::move(terms);
    return j.dump() + "\n";
  }
  return chi.str();
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  set_log_level(spec.log);
  std::string payload;
  int code = kOk;
  try {
    switch (spec.command) {
      case Command::rank_one:
        payload = rank_one_report(spec.weight.at(1), spec.format);
        break;
      case Command::verify: {
        const VerifyReport report = run_verify(spec);
        payload = spec.format == Format::json ? report.json() : report.text();
        if (const CheckRow* bad = report.first_failure()) {
          err << "verify: " << bad->name << " failed: " << bad->result.witness << "\n";
          code = kVerifyFailed;
        }
        break;
      }
      case Command::crystal:
      case Command::demazure:
      case Command::character: {
        GenerateOptions opts;
        opts.max_elements = spec.max_elements;
        const CrystalGraph graph = generate_crystal(*spec.datum, spec.weight, opts);
        logger()->info("generated {} elements", graph.size());
        std::optional<DemazureCrystal> dc;
        if (spec.word) dc = demazure_crystal(graph, *spec.word);
        const DemazureCrystal* dp = dc ? &*dc : nullptr;
        if (spec.command == Command::character)
          payload = character_report(graph, dp, spec.format);
        else if (spec.format == Format::json)
          payload = emit_json(graph, dp);
        else if (spec.format == Format::dot)
          payload = emit_dot(graph, dp);
        else
          payload = emit_text(graph, dp);
        break;
      }
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (spec.out) {
    std::ofstream f(*spec.out, std::ios::binary | std::ios::trunc);
    if (!f || !(f << payload) || !f.flush()) {
      err << "error: cannot write " << *spec.out << "\n";
      return kWriteFailed;
    }
  } else {
    out << payload;
    out.flush();
    if (!out) return kWriteFailed;
  }
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobSpec spec;
  try {
    spec = parse_args(argc, argv, std::getenv("CRYSTAL_LOG"));
  } catch (const UsageError& e) {
    if (e.help()) {
      out << e.what();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return run(spec, out, err);
}

}  // namespace crystals::cli
