#include "crystals/demazure.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace crystals {

namespace {

std::string ids(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

}  // namespace

DemazureCrystal demazure_crystal(const CrystalGraph& graph, const WeylWord& word) {
  if (!is_reduced(graph.datum(), word)) throw std::invalid_argument("word " + word.str() + " is not reduced");
  DemazureCrystal dc{&graph, word, ElementSet(graph.size())};
  dc.members.set(0);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    const int s = *it;
    ElementSet next = dc.members;
    for (auto b = dc.members.find_first(); b != ElementSet::npos; b = dc.members.find_next(b))
      for (std::size_t c = graph.f(b, s); c != CrystalGraph::npos && !next.test(c); c = graph.f(c, s)) next.set(c);
    dc.members = std::move(next);
  }
  return dc;
}

std::vector<ExtremalStep> extremal_weights(const CartanDatum& datum, const Weight& lam, const WeylWord& word) {
  if (!lam.is_dominant()) throw std::invalid_argument("highest weight must be dominant");
  std::vector<ExtremalStep> steps{{lam, std::nullopt, 0}};
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    const Weight& prev = steps.back().weight;
    const int m = prev.at(*it);
    if (m < 0)
      throw std::invalid_argument("negative extremal exponent along " + word.str() + ": word is not reduced");
    steps.push_back({reflect(datum, *it, prev), *it, m});
  }
  return steps;
}

std::size_t extremal_element(const CrystalGraph& graph, const WeylWord& word) {
  const auto steps = extremal_weights(graph.datum(), graph.highest_weight(), word);
  std::size_t b = 0;
  for (const auto& st : steps) {
    if (!st.letter) continue;
    for (int k = 0; k < st.m; ++k) {
      b = graph.f(b, *st.letter);
      if (b == CrystalGraph::npos) throw std::logic_error("extremal chain left the crystal");
    }
  }
  return b;
}

std::vector<IString> i_strings(const CrystalGraph& graph, int i) {
  graph.datum().check_index(i);
  std::vector<IString> out;
  for (std::size_t b = 0; b < graph.size(); ++b) {
    if (graph.e(b, i) != CrystalGraph::npos) continue;
    IString s{b, graph.phi(b, i), {}};
    for (std::size_t c = b; c != CrystalGraph::npos; c = graph.f(c, i)) s.members.push_back(c);
    out.push_back(std::move(s));
  }
  return out;
}

Check verify_string_property(const DemazureCrystal& dc, int i) {
  for (const IString& s : i_strings(*dc.graph, i)) {
    std::size_t hit = 0;
    for (std::size_t b : s.members) hit += dc.contains(b);
    if (hit == 0 || hit == s.members.size()) continue;
    if (hit == 1 && dc.contains(s.top)) continue;
    return Check::fail("word " + dc.word.str() + ", i=" + std::to_string(i) + ": string " + ids(s.members) +
                       " meets B_w in " + std::to_string(hit) + " elements");
  }
  return Check::pass();
}

Check verify_e_closed(const DemazureCrystal& dc) {
  const CrystalGraph& g = *dc.graph;
  for (auto b = dc.members.find_first(); b != ElementSet::npos; b = dc.members.find_next(b))
    for (int i = 1; i <= g.rank(); ++i)
      if (const std::size_t c = g.e(b, i); c != CrystalGraph::npos && !dc.contains(c))
        return Check::fail("word " + dc.word.str() + ": e_" + std::to_string(i) + " maps member " +
                           std::to_string(b) + " outside to " + std::to_string(c));
  return Check::pass();
}

std::map<int, ElementSet> filtration_layers(const DemazureCrystal& dc, int i) {
  const CrystalGraph& g = *dc.graph;
  g.datum().check_index(i);
  std::map<int, ElementSet> layers;
  for (auto b = dc.members.find_first(); b != ElementSet::npos; b = dc.members.find_next(b)) {
    auto [it, _] = layers.try_emplace(g.eps(b, i) + g.phi(b, i), g.size());
    it->second.set(b);
  }
  return layers;
}

Check verify_filtration_structure(const DemazureCrystal& dc, int i) {
  const CrystalGraph& g = *dc.graph;
  const auto layers = filtration_layers(dc, i);
  for (const IString& s : i_strings(g, i)) {
    const int l = g.eps(s.top, i) + g.phi(s.top, i);
    std::vector<std::size_t> hit;
    for (std::size_t b : s.members) {
      if (g.eps(b, i) + g.phi(b, i) != l)
        return Check::fail("eps_i + phi_i not constant on string " + ids(s.members));
      if (dc.contains(b)) {
        auto it = layers.find(l);
        if (it == layers.end() || !it->second.test(b))
          return Check::fail("member " + std::to_string(b) + " missing from layer " + std::to_string(l));
        hit.push_back(b);
      }
    }
    if (hit.empty() || hit.size() == s.members.size()) continue;
    const std::string at = "word " + dc.word.str() + ", i=" + std::to_string(i) + ", layer " + std::to_string(l) +
                           ", string " + ids(s.members) + ": ";
    if (hit.size() != 1 || hit.front() != s.top) return Check::fail(at + "partial intersection " + ids(hit));
    const int wi = g.element(s.top).weight.at(i);
    if (wi != l || l <= 0) return Check::fail(at + "singleton top has w_i=" + std::to_string(wi));
  }
  return Check::pass();
}

QuotientStrings quotient_strings(const DemazureCrystal& big, const DemazureCrystal& small, int i) {
  if (big.graph != small.graph) throw std::invalid_argument("Demazure crystals over different graphs");
  const CrystalGraph& g = *big.graph;
  g.datum().check_index(i);
  QuotientStrings out{ElementSet(g.size()), Check::pass()};
  if (big.word != small.word) {
    if (big.word.empty() || big.word.tail() != small.word || big.word.letters.front() != i)
      throw std::invalid_argument("quotient_strings needs big = s_i * small, got " + big.word.str() + " and " +
                                  small.word.str() + " with i=" + std::to_string(i));
  }
  if (!small.members.is_subset_of(big.members)) {
    out.check = Check::fail("B_sw is not contained in B_w");
    return out;
  }
  out.difference = big.members - small.members;
  for (const IString& s : i_strings(g, i)) {
    std::vector<std::size_t> hit;
    for (std::size_t b : s.members)
      if (out.difference.test(b)) hit.push_back(b);
    if (hit.empty()) continue;
    const std::vector<std::size_t> expect(s.members.begin() + 1, s.members.end());
    if (hit != expect || !small.contains(s.top)) {
      out.check = Check::fail("string " + ids(s.members) + " contributes " + ids(hit) +
                              " to B_w \\ B_sw instead of the string minus its top");
      return out;
    }
  }
  return out;
}

std::vector<WeylWord> independence_words(const WeylGroup& group, const WeylWord& w, bool* sampled) {
  if (sampled) *sampled = false;
  if (group.size() <= 48) return group.reduced_words(w);
  bool truncated = false;
  auto all = group.reduced_words(w, 64, &truncated);
  if (!truncated) return all;

  // Random walks down the weak order, peeling a random left descent each step.
  const CartanDatum& datum = group.datum();
  const Weight rho = datum.rho();
  std::mt19937 rng(0x5eedu);
  std::set<WeylWord> picked{group.canonical(w)};
  for (int attempt = 0; attempt < 256 && picked.size() < 8; ++attempt) {
    Weight image = act(datum, w, rho);
    std::vector<int> letters;
    while (image != rho) {
      std::vector<int> descents;
      for (int i = 1; i <= datum.rank(); ++i)
        if (image.at(i) < 0) descents.push_back(i);
      const int s = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
      letters.push_back(s);
      image = reflect(datum, s, image);
    }
    picked.insert(WeylWord(std::move(letters)));
  }
  if (sampled) *sampled = true;
  return {picked.begin(), picked.end()};
}

Check reduced_word_independence(const CrystalGraph& graph, const WeylGroup& group, const WeylWord& w) {
  const auto words = independence_words(group, w);
  if (words.empty()) return Check::fail("no reduced words for " + w.str());
  const DemazureCrystal ref = demazure_crystal(graph, words.front());
  for (std::size_t k = 1; k < words.size(); ++k) {
    const DemazureCrystal other = demazure_crystal(graph, words[k]);
    if (other.members != ref.members)
      return Check::fail("B_w differs between " + words.front().str() + " (" + std::to_string(ref.size()) +
                         " elements) and " + words[k].str() + " (" + std::to_string(other.size()) + " elements)");
  }
  return Check::pass();
}

}  // namespace crystals
