#pragma once

#include <map>
#include <string>

#include "crystals/check.hpp"
#include "crystals/crystal.hpp"
#include "crystals/laurent.hpp"
#include "crystals/root_data.hpp"

namespace crystals {

/// Element of the integral group algebra Z[P]: weight -> multiplicity.
///
/// Signed, since Demazure operators produce negative terms in the middle of
/// a computation. Zero entries are never stored.
class FormalCharacter {
 public:
  using Map = std::map<Weight, long long>;

  FormalCharacter() = default;
  static FormalCharacter monomial(const Weight& mu, long long c = 1);

  const Map& terms() const { return mult_; }
  long long mult(const Weight& mu) const;
  void add(const Weight& mu, long long c);
  bool is_zero() const { return mult_.empty(); }
  bool is_nonnegative() const;
  /// Sum of all multiplicities (the dimension, for a module character).
  long long total() const;

  FormalCharacter& operator+=(const FormalCharacter& o);
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

  /// One line per weight, `(<coords>) : <mult>`, weights in descending
  /// lexicographic order.
  std::string str() const;

 private:
  Map mult_;
};

/// Character of a whole crystal / of a subset of it.
FormalCharacter char_of(const CrystalGraph& graph);
FormalCharacter char_of(const ElementSet& subset, const CrystalGraph& graph);

/// Demazure operator D_i, linear, on e^mu with m = <h_i, mu>:
///   m >= 0:  e^mu + e^{mu - alpha_i} + ... + e^{mu - m alpha_i}
///   m = -1:  0
///   m <= -2: -(e^{mu + alpha_i} + ... + e^{mu + (-m-1) alpha_i})
FormalCharacter demazure_operator(const CartanDatum& datum, int i, const FormalCharacter& chi);

/// D_{i1} ... D_{in} (e^lam), with D_{in} applied first.
FormalCharacter demazure_character(const CartanDatum& datum, const Weight& lam, const WeylWord& word);

/// Compares char B_w(lam), read off the crystal, with D_word(e^lam).
/// On mismatch the witness contains both characters.
Check verify_demazure_character(const CrystalGraph& graph, const WeylWord& word);

/// Character of V(lam) by Freudenthal's multiplicity recursion, computed
/// without reference to any crystal.
FormalCharacter weyl_character(const CartanDatum& datum, const Weight& lam);

/// prod_{alpha > 0} (lam + rho, alpha) / (rho, alpha).
BigInt weyl_dimension(const CartanDatum& datum, const Weight& lam);

/// True iff chi is invariant under every simple reflection.
bool is_weyl_invariant(const CartanDatum& datum, const FormalCharacter& chi);

}  // namespace crystals
