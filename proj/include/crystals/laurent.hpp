#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <ostream>
#include <string>

namespace crystals {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// kept, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT(implicit): constant polynomial

  /// c * q^e
  static LaurentPoly monomial(int e, const BigInt& c = 1);
  static LaurentPoly q() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int e) const;
  int min_degree() const;  // requires non-zero
  int max_degree() const;  // requires non-zero

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;

  /// Exact quotient a / b. Throws std::domain_error if b does not divide a
  /// in Z[q, q^-1] or b is zero.
  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

  /// Canonical text form, decreasing exponents: `q^4 + q^2 + 2 + q^-2 + q^-4`.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  void add_term(int e, const BigInt& c);

  Terms terms_;
};

/// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].
LaurentPoly qint(int n);

/// [n]! = [1][2]...[n]; [0]! = 1. Requires n >= 0.
LaurentPoly qfact(int n);

/// Quantum binomial [m over k] = [m]! / ([k]! [m-k]!), computed by exact
/// division. Zero when k > m or k < 0. Requires m >= 0.
LaurentPoly qbinom(int m, int k);

/// Bar involution q -> q^-1.
LaurentPoly bar(const LaurentPoly& p);

/// Specialization q = 1 (sum of coefficients).
BigInt eval_at_one(const LaurentPoly& p);

}  // namespace crystals
