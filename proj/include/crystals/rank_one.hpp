#pragma once

#include <map>
#include <optional>
#include <string>

#include "crystals/laurent.hpp"

namespace crystals {

/// Vector in the rank-one Weyl module: basis index k stands for f^(k) v_lam.
struct ModuleVector {
  std::map<int, LaurentPoly> coeffs;  // no zero entries

  static ModuleVector basis(int k) { return ModuleVector{{{k, LaurentPoly(1)}}}; }
  void add(int k, const LaurentPoly& c);
  LaurentPoly coeff(int k) const;
  ModuleVector scaled(const LaurentPoly& c) const;
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
  std::string str() const;
};

/// The quantized Weyl module of highest weight lam for U_q(sl2) over
/// Z[q, q^-1], with basis f^(k) v_lam, 0 <= k <= lam:
///
///   f f^(k) v   = [k+1]       f^(k+1) v
///   e f^(k) v   = [lam-k+1]   f^(k-1) v
///   K f^(k) v   = q^(lam-2k)  f^(k) v
///
/// with f^(-1) v = f^(lam+1) v = 0. Actions are computed on demand.
class RankOneModule {
 public:
  explicit RankOneModule(int lam);

  int highest_weight() const { return lam_; }
  int dimension() const { return lam_ + 1; }

  ModuleVector act_f(const ModuleVector& v) const;
  ModuleVector act_e(const ModuleVector& v) const;
  ModuleVector act_K(const ModuleVector& v) const;
  /// f^(p) f^(k) v = [p+k over k] f^(p+k) v.
  ModuleVector act_divided_f(int power, const ModuleVector& v) const;
  /// e^(p) f^(k) v = [lam-k+p over p] f^(k-p) v.
  ModuleVector act_divided_e(int power, const ModuleVector& v) const;

  /// Kashiwara lowering on the basis: k -> k+1, or nullopt at the bottom.
  std::optional<int> crystal_f_tilde(int k) const;
  std::optional<int> crystal_e_tilde(int k) const;

  /// Checks (ef - fe) = [lam - 2k] on every basis vector. Returns the
  /// failing basis index, or nullopt when the relation holds.
  std::optional<int> sl2_relation_witness() const;
  bool verify_sl2_relation() const { return !sl2_relation_witness().has_value(); }

 private:
  void check_support(const ModuleVector& v) const;

  int lam_;
};

}  // namespace crystals
