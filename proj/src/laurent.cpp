#include "crystals/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace crystals {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int e, const BigInt& c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

BigInt LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  // Long division from the top degree; exactness means the remainder must
  // vanish once the dividend drops below the divisor's span.
  LaurentPoly rem = a;
  LaurentPoly quot;
  const int bmax = b.max_degree();
  const int bmin = b.min_degree();
  const BigInt& lead = b.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    if (rem.max_degree() - rem.min_degree() < bmax - bmin)
      throw std::domain_error("polynomial division is not exact");
    const int e = rem.max_degree();
    const BigInt& c = rem.terms_.rbegin()->second;
    BigInt r;
    BigInt qc;
    boost::multiprecision::divide_qr(c, lead, qc, r);
    if (r != 0) throw std::domain_error("polynomial division is not exact over Z");
    const LaurentPoly step = monomial(e - bmax, qc);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    BigInt c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly qint(int n) {
  if (n < 0) return -qint(-n);
  LaurentPoly r;
  for (int e = n - 1; e >= 1 - n; e -= 2) r += LaurentPoly::monomial(e);
  return r;
}

LaurentPoly qfact(int n) {
  if (n < 0) throw std::domain_error("qfact of negative integer");
  LaurentPoly r = 1;
  for (int k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

LaurentPoly qbinom(int m, int k) {
  if (m < 0) throw std::domain_error("qbinom with negative m");
  if (k < 0 || k > m) return {};
  return LaurentPoly::exact_div(qfact(m), qfact(k) * qfact(m - k));
}

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r += LaurentPoly::monomial(-e, c);
  return r;
}

BigInt eval_at_one(const LaurentPoly& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

}  // namespace crystals
