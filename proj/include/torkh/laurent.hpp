#pragma once

#include <climits>
#include <map>
#include <string>
#include <utility>

#include "torkh/rings.hpp"

namespace torkh {

/// Integer value extended by +infinity, used for staircase functions and
/// minimal-q profiles.
using ExtInt = long long;
inline constexpr ExtInt kInfinity = LLONG_MAX;

/// Laurent polynomial in t and q with integer coefficients.
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;  // (t exponent, q exponent)

  LaurentPoly2() = default;
  static LaurentPoly2 monomial(int t_exp, int q_exp, BigInt coeff = 1);
  static LaurentPoly2 constant(BigInt c) { return monomial(0, 0, std::move(c)); }

  const std::map<Key, BigInt>& terms() const { return terms_; }
  BigInt coeff(int t_exp, int q_exp) const;
  void add_term(int t_exp, int q_exp, const BigInt& c);
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2 scaled(const BigInt& c) const;
  LaurentPoly2 shifted(int t_exp, int q_exp) const;  // times t^a q^b

  /// Substitutes t = -1.
  LaurentPoly2 at_t_minus_one() const;
  /// Sum of coefficients.
  BigInt at_one() const;

  /// Human-readable form such as "q^-1 + q + t^2q^4".
  std::string str() const;

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  std::map<Key, BigInt> terms_;
};

}  // namespace torkh
