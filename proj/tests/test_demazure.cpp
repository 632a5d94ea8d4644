#include <doctest.h>

#include <set>

#include "crystals/demazure.hpp"

using namespace crystals;

namespace {

// Oracle: B_w(lam) is the set of paths whose first direction is tau lam for
// some tau <= w in Bruhat order, and [e, w] is the set of products of
// subwords of any reduced word for w.
ElementSet by_initial_direction(const CrystalGraph& g, const WeylWord& w) {
  std::set<Weight> dirs{g.highest_weight()};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    std::set<Weight> next = dirs;
    for (const Weight& mu : dirs) next.insert(reflect(g.datum(), *it, mu));
    dirs = std::move(next);
  }
  ElementSet out(g.size());
  for (std::size_t b = 0; b < g.size(); ++b)
    if (dirs.count(g.element(b).path.segments().front().direction)) out.set(b);
  return out;
}

struct Case {
  const char* type;
  Weight lam;
};

const Case kCases[] = {{"A1", {3}},       {"A2", {1, 0}}, {"A2", {1, 1}}, {"A2", {2, 1}}, {"B2", {1, 0}},
                       {"B2", {0, 1}},    {"B2", {1, 1}}, {"G2", {1, 0}}, {"G2", {0, 1}}, {"A3", {1, 0, 1}},
                       {"C3", {0, 1, 0}}, {"B3", {0, 0, 1}}};

}  // namespace

TEST_CASE("trivial and longest words") {
  const CartanDatum a2 = CartanDatum::make('A', 2);
  const CrystalGraph g = generate_crystal(a2, Weight{1, 1});
  const DemazureCrystal e = demazure_crystal(g, WeylWord{});
  CHECK(e.size() == 1);
  CHECK(e.contains(0));
  CHECK(demazure_crystal(g, WeylWord{1, 2, 1}).size() == g.size());
  CHECK(demazure_crystal(g, WeylWord{2, 1, 2}).size() == g.size());
  CHECK(demazure_crystal(g, WeylWord{1}).size() == 2);
  CHECK(demazure_crystal(g, WeylWord{2, 1}).size() == 5);
  CHECK_THROWS_AS(demazure_crystal(g, WeylWord{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(demazure_crystal(g, WeylWord{3}), std::out_of_range);
}

TEST_CASE("Demazure crystals match the initial-direction description") {
  for (const auto& [t, lam] : kCases) {
    const CartanDatum d = CartanDatum::parse(t);
    const CrystalGraph g = generate_crystal(d, lam);
    const WeylGroup group(d);
    for (const WeylWord& w : group.elements()) {
      CAPTURE(t);
      CAPTURE(lam.str());
      CAPTURE(w.str());
      CHECK(demazure_crystal(g, w).members == by_initial_direction(g, w));
    }
  }
}

TEST_CASE("minuscule A2 sizes") {
  const CrystalGraph g = generate_crystal(CartanDatum::make('A', 2), Weight{1, 0});
  CHECK(demazure_crystal(g, WeylWord{}).size() == 1);
  CHECK(demazure_crystal(g, WeylWord{2}).size() == 1);
  CHECK(demazure_crystal(g, WeylWord{1}).size() == 2);
  CHECK(demazure_crystal(g, WeylWord{2, 1}).size() == 3);
  CHECK(demazure_crystal(g, WeylWord{1, 2}).size() == 2);
}

TEST_CASE("extremal weights") {
  const CartanDatum a1 = CartanDatum::make('A', 1), a2 = CartanDatum::make('A', 2);
  const auto chain = extremal_weights(a1, Weight{3}, WeylWord{1});
  REQUIRE(chain.size() == 2);
  CHECK_FALSE(chain[0].letter.has_value());
  CHECK(chain[1].weight == Weight{-3});
  CHECK(chain[1].m == 3);
  const auto c2 = extremal_weights(a2, Weight{1, 1}, WeylWord{1, 2, 1});
  REQUIRE(c2.size() == 4);
  CHECK(c2[1].weight == Weight{-1, 2});
  CHECK(c2[2].weight == Weight{1, -2});
  CHECK(c2.back().weight == Weight{-1, -1});
  for (const auto& s : c2) CHECK(s.m >= 0);
  CHECK_THROWS_AS(extremal_weights(a2, Weight{1, 1}, WeylWord{1, 1}), std::invalid_argument);
}

TEST_CASE("extremal element has weight w lam and lies in B_w only from w upward") {
  for (const auto& [t, lam] : kCases) {
    const CartanDatum d = CartanDatum::parse(t);
    const CrystalGraph g = generate_crystal(d, lam);
    for (const WeylWord& w : weyl_group(d)) {
      CAPTURE(t);
      CAPTURE(w.str());
      const std::size_t b = extremal_element(g, w);
      REQUIRE(b != CrystalGraph::npos);
      CHECK(g.element(b).weight == act(d, w, lam));
      CHECK(demazure_crystal(g, w).contains(b));
      // The weight space of an extremal weight is one-dimensional.
      std::size_t same = 0;
      for (const auto& el : g.elements()) same += el.weight == g.element(b).weight;
      CHECK(same == 1);
    }
  }
}

TEST_CASE("i-strings partition the crystal") {
  const CrystalGraph g = generate_crystal(CartanDatum::make('A', 2), Weight{1, 0});
  const auto s1 = i_strings(g, 1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].members.size() == 2);
  CHECK(s1[1].members.size() == 1);
  for (const auto& [t, lam] : kCases) {
    const CrystalGraph h = generate_crystal(CartanDatum::parse(t), lam);
    for (int i = 1; i <= h.rank(); ++i) {
      std::size_t total = 0;
      ElementSet seen(h.size());
      for (const auto& s : i_strings(h, i)) {
        CHECK(h.eps(s.top, i) == 0);
        CHECK(static_cast<int>(s.members.size()) == s.length + 1);
        for (std::size_t b : s.members) {
          CHECK_FALSE(seen.test(b));
          seen.set(b);
        }
        total += s.members.size();
      }
      CHECK(total == h.size());
    }
  }
}

TEST_CASE("string property and e-closure for every w and i") {
  for (const auto& [t, lam] : kCases) {
    const CartanDatum d = CartanDatum::parse(t);
    const CrystalGraph g = generate_crystal(d, lam);
    for (const WeylWord& w : weyl_group(d)) {
      const DemazureCrystal dc = demazure_crystal(g, w);
      CAPTURE(t);
      CAPTURE(w.str());
      const Check closed = verify_e_closed(dc);
      CHECK_MESSAGE(closed.ok, closed.witness);
      for (int i = 1; i <= d.rank(); ++i) {
        const Check c = verify_string_property(dc, i);
        CHECK_MESSAGE(c.ok, c.witness);
      }
    }
  }
}

TEST_CASE("string property rejects a truncated string") {
  const CrystalGraph g = generate_crystal(CartanDatum::make('A', 1), Weight{3});
  DemazureCrystal dc = demazure_crystal(g, WeylWord{1});
  dc.members.reset(3);  // top and two more, but not the bottom
  const Check c = verify_string_property(dc, 1);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.witness.empty());
  // Dropping the top leaves a non-e-closed set as well.
  DemazureCrystal d2 = demazure_crystal(g, WeylWord{1});
  d2.members.reset(0);
  CHECK_FALSE(verify_string_property(d2, 1).ok);
  CHECK_FALSE(verify_e_closed(d2).ok);
}

TEST_CASE("filtration layers") {
  const CrystalGraph g = generate_crystal(CartanDatum::make('A', 2), Weight{1, 1});
  const DemazureCrystal full = demazure_crystal(g, WeylWord{1, 2, 1});
  const auto layers = filtration_layers(full, 1);
  REQUIRE(layers.size() == 3);
  CHECK(layers.at(2).count() == 3);
  CHECK(layers.at(1).count() == 4);
  CHECK(layers.at(0).count() == 1);

  const DemazureCrystal e = demazure_crystal(g, WeylWord{});
  const auto single = filtration_layers(e, 1);
  REQUIRE(single.size() == 1);
  CHECK(single.begin()->first == 1);
  CHECK(verify_filtration_structure(e, 1).ok);
}

TEST_CASE("filtration structure for every w and i") {
  for (const auto& [t, lam] : kCases) {
    const CartanDatum d = CartanDatum::parse(t);
    const CrystalGraph g = generate_crystal(d, lam);
    for (const WeylWord& w : weyl_group(d)) {
      const DemazureCrystal dc = demazure_crystal(g, w);
      for (int i = 1; i <= d.rank(); ++i) {
        const Check c = verify_filtration_structure(dc, i);
        CHECK_MESSAGE(c.ok, t << " " << w.str() << " i=" << i << ": " << c.witness);
      }
    }
  }
}

TEST_CASE("filtration structure rejects a partial string") {
  // B(2) for A1 is one string of length 2; {top, middle} is neither the
  // whole string nor its top alone.
  const CrystalGraph g = generate_crystal(CartanDatum::make('A', 1), Weight{2});
  DemazureCrystal dc{&g, WeylWord{}, ElementSet(g.size())};
  dc.members.set(0);
  CHECK(verify_filtration_structure(dc, 1).ok);
  dc.members.set(1);
  CHECK_FALSE(verify_filtration_structure(dc, 1).ok);
}

TEST_CASE("quotient strings") {
  const CartanDatum a2 = CartanDatum::make('A', 2);
  const CrystalGraph g = generate_crystal(a2, Weight{1, 1});
  const DemazureCrystal big = demazure_crystal(g, WeylWord{1, 2, 1});
  const DemazureCrystal small = demazure_crystal(g, WeylWord{2, 1});
  const QuotientStrings q = quotient_strings(big, small, 1);
  CHECK_MESSAGE(q.check.ok, q.check.witness);
  CHECK(q.difference.count() == g.size() - small.size());
  const QuotientStrings same = quotient_strings(small, small, 2);
  CHECK(same.difference.none());
  CHECK(same.check.ok);
  CHECK_THROWS_AS(quotient_strings(big, small, 2), std::invalid_argument);
  CHECK_THROWS_AS(quotient_strings(small, big, 1), std::invalid_argument);

  for (const auto& [t, lam] : kCases) {
    const CartanDatum d = CartanDatum::parse(t);
    const CrystalGraph h = generate_crystal(d, lam);
    for (const WeylWord& w : weyl_group(d)) {
      if (w.empty()) continue;
      const QuotientStrings r = quotient_strings(demazure_crystal(h, w), demazure_crystal(h, w.tail()), w.letters[0]);
      CHECK_MESSAGE(r.check.ok, t << " " << w.str() << ": " << r.check.witness);
    }
  }
}

TEST_CASE("monotone along the weak order") {
  for (const auto& [t, lam] : kCases) {
    const CartanDatum d = CartanDatum::parse(t);
    const CrystalGraph g = generate_crystal(d, lam);
    for (const WeylWord& w : weyl_group(d)) {
      if (w.empty()) continue;
      const ElementSet big = demazure_crystal(g, w).members;
      const ElementSet small = demazure_crystal(g, w.tail()).members;
      CHECK(small.is_subset_of(big));
    }
  }
}

TEST_CASE("reduced-word independence") {
  for (const auto& [t, lam] : kCases) {
    const CartanDatum d = CartanDatum::parse(t);
    const CrystalGraph g = generate_crystal(d, lam);
    const WeylGroup group(d);
    for (const WeylWord& w : group.elements()) {
      const Check c = reduced_word_independence(g, group, w);
      CHECK_MESSAGE(c.ok, t << " " << w.str() << ": " << c.witness);
    }
  }
}

TEST_CASE("independence words are sampled only for large groups") {
  const CartanDatum a3 = CartanDatum::make('A', 3);
  bool sampled = true;
  CHECK(independence_words(WeylGroup(a3), longest_word(a3), &sampled).size() == 16);
  CHECK_FALSE(sampled);

  const CartanDatum d4 = CartanDatum::make('D', 4);
  const WeylGroup wd4(d4);
  const auto words = independence_words(wd4, longest_word(d4), &sampled);
  CHECK(sampled);
  CHECK(words.size() == 8);
  CHECK(std::find(words.begin(), words.end(), wd4.canonical(longest_word(d4))) != words.end());
  for (const WeylWord& x : words) {
    CHECK(is_reduced(d4, x));
    CHECK(wd4.canonical(x) == wd4.canonical(longest_word(d4)));
  }
  CHECK(words == independence_words(wd4, longest_word(d4)));
}
