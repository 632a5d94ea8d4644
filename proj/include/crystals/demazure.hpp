#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "crystals/check.hpp"
#include "crystals/crystal.hpp"
#include "crystals/root_data.hpp"

namespace crystals {

/// The Demazure crystal B_w(lam) as a subset of B(lam).
struct DemazureCrystal {
  const CrystalGraph* graph = nullptr;  // not owned
  WeylWord word;
  ElementSet members;

  std::size_t size() const { return members.count(); }
  bool contains(std::size_t b) const { return members.test(b); }
};

/// Builds B_w(lam) for a reduced word [i1, ..., in] of w.
///
/// B_e = {b_lam} and B_w = U_k f_s^k B_{sw} for s = s_{i1}, sw < w. The
/// recursion bottoms out at the right end of the word, so the letters are
/// saturated right to left and i1 is applied last. Example in A2 with
/// word [1,2]: first {b} -> f_2-saturation, then f_1-saturation of that.
///
/// Throws std::invalid_argument if the word is not reduced.
DemazureCrystal demazure_crystal(const CrystalGraph& graph, const WeylWord& word);

/// Weights along the extremal-vector recursion v_{w lam} = f_s^(m) v_{sw lam}.
struct ExtremalStep {
  Weight weight;
  std::optional<int> letter;  // absent for the initial lam
  int m = 0;                  // <h_letter, previous weight>
};

/// The chain lam, s_{in} lam, s_{i(n-1)} s_{in} lam, ..., w lam. Throws
/// std::invalid_argument if some m is negative (word not reduced).
std::vector<ExtremalStep> extremal_weights(const CartanDatum& datum, const Weight& lam, const WeylWord& word);

/// The element reached from b_lam by f_{i}^{m} along the extremal chain.
std::size_t extremal_element(const CrystalGraph& graph, const WeylWord& word);

/// i-string: top, f_i top, ..., f_i^length top.
struct IString {
  std::size_t top = 0;
  int length = 0;  // phi_i(top)
  std::vector<std::size_t> members;
};

/// Partition of the whole crystal into i-strings, ordered by top id.
std::vector<IString> i_strings(const CrystalGraph& graph, int i);

/// B_w meets every i-string in the whole string, its top alone, or nothing.
Check verify_string_property(const DemazureCrystal& dc, int i);

/// e_i(B_w) is contained in B_w u {0} for every i.
Check verify_e_closed(const DemazureCrystal& dc);

/// Members grouped by l = eps_i + phi_i.
std::map<int, ElementSet> filtration_layers(const DemazureCrystal& dc, int i);

/// In every layer l, each i-string meets B_w in the full string, in its
/// top alone with w_i(top) = l > 0, or not at all.
Check verify_filtration_structure(const DemazureCrystal& dc, int i);

struct QuotientStrings {
  ElementSet difference;  // members(big) \ members(small)
  Check check;
};

/// For big = B_w and small = B_{sw} with s = s_i the leftmost letter of
/// big.word: the difference is a disjoint union of i-strings each missing
/// exactly its top. Also accepts big.word == small.word (empty difference).
/// Throws std::invalid_argument if the words are not in that relation.
QuotientStrings quotient_strings(const DemazureCrystal& big, const DemazureCrystal& small, int i);

/// Reduced words used to test independence for an element: all of them for
/// |W| <= 48 or when there are at most 64, otherwise a fixed-seed sample of
/// up to 8 that includes the canonical word.
std::vector<WeylWord> independence_words(const WeylGroup& group, const WeylWord& w, bool* sampled = nullptr);

/// B_w computed from every word in independence_words agrees.
Check reduced_word_independence(const CrystalGraph& graph, const WeylGroup& group, const WeylWord& w);

}  // namespace crystals
