#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crystals/rational.hpp"

namespace crystals {

/// Integral weight in fundamental-weight coordinates: coords[i] = <h_i, mu>.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}

  static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  /// 1-based coordinate access, matching simple-root labels.
  int at(int i) const { return coords.at(static_cast<std::size_t>(i - 1)); }
  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// `(1,-1)`
  std::string str() const;
};

/// Word in simple reflections, letters are 1-based indices.
///
/// The word [i1, ..., in] denotes s_{i1} s_{i2} ... s_{in}; acting on a
/// weight, s_{in} is applied first.
struct WeylWord {
  std::vector<int> letters;

  WeylWord() = default;
  explicit WeylWord(std::vector<int> l) : letters(std::move(l)) {}
  WeylWord(std::initializer_list<int> l) : letters(l) {}

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  /// Word with the leftmost letter removed.
  WeylWord tail() const;
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend auto operator<=>(const WeylWord&, const WeylWord&) = default;
  std::string str() const;
};

/// Finite-type Cartan datum.
///
/// Convention: cartan(i, j) = <h_i, alpha_j>, so the simple root alpha_j in
/// weight coordinates is column j. Symmetrizers satisfy
/// d_i a_ij = d_j a_ji with d_i = (alpha_i, alpha_i) / 2 scaled to integers.
/// Bourbaki labelling throughout:
///
///   B2: [[2,-1],[-2,2]]                  d = (2,1)   alpha_2 short
///   B3: [[2,-1,0],[-1,2,-1],[0,-2,2]]    d = (2,2,1) alpha_3 short
///   C3: [[2,-1,0],[-1,2,-2],[0,-1,2]]    d = (1,1,2) alpha_3 long
///   D4: node 2 is the branch node
///   G2: [[2,-3],[-1,2]]                  d = (1,3)   alpha_1 short
class CartanDatum {
 public:
  /// Supported: A1-A4, B2, B3, C3, D4, G2. Throws std::invalid_argument otherwise.
  static CartanDatum make(char family, int rank);
  /// Parses names like "A2" or "g2".
  static CartanDatum parse(const std::string& name);

  /// Builds from an explicit matrix and symmetrizer, validating the
  /// finite-type invariants.
  CartanDatum(char family, std::vector<std::vector<int>> cartan, std::vector<int> sym);

  char family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, family_) + std::to_string(rank_); }

  /// 1-based entries.
  int cartan(int i, int j) const { return a_[idx(i)][idx(j)]; }
  int sym(int i) const { return d_[idx(i)]; }
  const std::vector<std::vector<int>>& matrix() const { return a_; }

  /// Throws std::out_of_range unless 1 <= i <= rank.
  void check_index(int i) const;

  /// Positive roots in simple-root coordinates, sorted by height then lex.
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }

  /// rho = (1, ..., 1).
  Weight rho() const { return Weight(std::vector<int>(static_cast<std::size_t>(rank_), 1)); }

  /// Converts simple-root coordinates to weight coordinates.
  Weight root_to_weight(std::span<const int> root_coords) const;

  /// (beta, mu) where beta is in simple-root coordinates and mu in weight
  /// coordinates, in the normalization (alpha_i, alpha_i) = 2 d_i.
  long long pair_root(std::span<const int> root_coords, const Weight& mu) const;

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
    return a.family_ == b.family_ && a.a_ == b.a_;
  }

 private:
  std::size_t idx(int i) const {
    check_index(i);
    return static_cast<std::size_t>(i - 1);
  }
  void validate() const;
  void build_roots();

  char family_;
  int rank_;
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  std::vector<std::vector<int>> pos_roots_;
};

/// alpha_i in weight coordinates: coords[j] = a[j][i].
Weight simple_root(const CartanDatum& datum, int i);

/// s_i mu = mu - <h_i, mu> alpha_i.
Weight reflect(const CartanDatum& datum, int i, const Weight& mu);

/// Applies a word to a weight (rightmost letter first).
Weight act(const CartanDatum& datum, const WeylWord& word, const Weight& mu);

/// The finite Weyl group, one canonical reduced word per element.
///
/// Elements are identified by their action on rho, which is faithful in
/// finite type. The canonical word of an element is its lexicographically
/// smallest reduced word.
class WeylGroup {
 public:
  explicit WeylGroup(const CartanDatum& datum);

  std::size_t size() const { return words_.size(); }
  /// Canonical words, ordered by length then lexicographically; the
  /// identity (empty word) comes first.
  const std::vector<WeylWord>& elements() const { return words_; }
  const WeylWord& longest() const { return words_.back(); }

  /// Canonical reduced word of the element a word represents.
  const WeylWord& canonical(const WeylWord& word) const;
  std::size_t length(const WeylWord& word) const { return canonical(word).length(); }
  bool is_reduced(const WeylWord& word) const { return length(word) == word.length(); }

  /// All reduced words of the element, sorted. If there are more than
  /// `limit`, returns the first `limit` in lexicographic order and sets
  /// *truncated.
  std::vector<WeylWord> reduced_words(const WeylWord& word, std::size_t limit = SIZE_MAX,
                                      bool* truncated = nullptr) const;

  const CartanDatum& datum() const { return datum_; }

 private:
  CartanDatum datum_;
  std::vector<WeylWord> words_;
  std::map<Weight, std::size_t> by_image_;  // w(rho) -> index into words_
};

std::vector<WeylWord> weyl_group(const CartanDatum& datum);
WeylWord longest_word(const CartanDatum& datum);

/// True iff no shorter word represents the same element. Uses the descent
/// criterion l(s_i x) > l(x) iff <h_i, x rho> > 0 letter by letter.
bool is_reduced(const CartanDatum& datum, const WeylWord& word);

/// mu <= lam in dominance order: lam - mu is a nonnegative integer
/// combination of simple roots. Solved with exact rational elimination.
bool dominance_leq(const CartanDatum& datum, const Weight& mu, const Weight& lam);

/// Coefficients c with weight = sum_j c_j alpha_j, solved exactly.
std::vector<Rational> root_coordinates(const CartanDatum& datum, const Weight& weight);

/// Unique dominant weight in the W-orbit of mu.
Weight dominant_conjugate(const CartanDatum& datum, Weight mu);

}  // namespace crystals
