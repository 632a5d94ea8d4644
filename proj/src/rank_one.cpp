#include "crystals/rank_one.hpp"

#include <stdexcept>

namespace crystals {

void ModuleVector::add(int k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

LaurentPoly ModuleVector::coeff(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? LaurentPoly{} : it->second;
}

ModuleVector ModuleVector::scaled(const LaurentPoly& c) const {
  ModuleVector r;
  for (const auto& [k, p] : coeffs) r.add(k, p * c);
  return r;
}

std::string ModuleVector::str() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [k, p] : coeffs) {
    if (!s.empty()) s += " + ";
    s += "(" + p.str() + ")*f^(" + std::to_string(k) + ")v";
  }
  return s;
}

RankOneModule::RankOneModule(int lam) : lam_(lam) {
  if (lam < 0) throw std::invalid_argument("rank-one highest weight must be >= 0");
}

void RankOneModule::check_support(const ModuleVector& v) const {
  for (const auto& [k, p] : v.coeffs)
    if (k < 0 || k > lam_)
      throw std::out_of_range("basis index " + std::to_string(k) + " outside [0," + std::to_string(lam_) + "]");
}

ModuleVector RankOneModule::act_f(const ModuleVector& v) const {
  check_support(v);
  ModuleVector r;
  for (const auto& [k, p] : v.coeffs)
    if (k + 1 <= lam_) r.add(k + 1, qint(k + 1) * p);
  return r;
}

ModuleVector RankOneModule::act_e(const ModuleVector& v) const {
  check_support(v);
  ModuleVector r;
  for (const auto& [k, p] : v.coeffs)
    if (k >= 1) r.add(k - 1, qint(lam_ - k + 1) * p);
  return r;
}

ModuleVector RankOneModule::act_K(const ModuleVector& v) const {
  check_support(v);
  ModuleVector r;
  for (const auto& [k, p] : v.coeffs) r.add(k, p.shifted(lam_ - 2 * k));
  return r;
}

ModuleVector RankOneModule::act_divided_f(int power, const ModuleVector& v) const {
  if (power < 0) throw std::invalid_argument("negative divided power");
  check_support(v);
  ModuleVector r;
  for (const auto& [k, p] : v.coeffs)
    if (k + power <= lam_) r.add(k + power, qbinom(k + power, k) * p);
  return r;
}

ModuleVector RankOneModule::act_divided_e(int power, const ModuleVector& v) const {
  if (power < 0) throw std::invalid_argument("negative divided power");
  check_support(v);
  ModuleVector r;
  for (const auto& [k, p] : v.coeffs)
    if (k - power >= 0) r.add(k - power, qbinom(lam_ - k + power, power) * p);
  return r;
}

std::optional<int> RankOneModule::crystal_f_tilde(int k) const {
  if (k < 0 || k > lam_) throw std::out_of_range("basis index outside module");
  if (k == lam_) return std::nullopt;
  return k + 1;
}

std::optional<int> RankOneModule::crystal_e_tilde(int k) const {
  if (k < 0 || k > lam_) throw std::out_of_range("basis index outside module");
  if (k == 0) return std::nullopt;
  return k - 1;
}

std::optional<int> RankOneModule::sl2_relation_witness() const {
  for (int k = 0; k <= lam_; ++k) {
    const ModuleVector b = ModuleVector::basis(k);
    ModuleVector lhs = act_e(act_f(b));
    for (const auto& [j, p] : act_f(act_e(b)).coeffs) lhs.add(j, -p);
    if (lhs != b.scaled(qint(lam_ - 2 * k))) return k;
  }
  return std::nullopt;
}

}  // namespace crystals
