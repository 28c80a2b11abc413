#include "torkh/rings.hpp"

#include <cctype>

#include "torkh/errors.hpp"

namespace torkh {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw InvalidParameter("F_p needs a prime p, got " + std::to_string(p));
  return {RingKind::PrimeField, p};
}

std::string CoefficientRing::name() const {
  switch (kind) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "F" + std::to_string(p);
  }
  return "?";
}

CoefficientRing CoefficientRing::parse(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "Z") return integers();
  if (t == "Q") return rationals();
  if (t.size() >= 2 && t[0] == 'F') {
    try {
      std::size_t used = 0;
      long long p = std::stoll(t.substr(1), &used);
      if (used == t.size() - 1) return prime_field(p);
    } catch (const std::logic_error&) {
    }
  }
  throw InvalidInput("unknown coefficient ring '" + text + "' (expected Z, Q or F<p>)");
}

PrimeField::value_type PrimeField::inverse(value_type a) const {
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("PrimeField: zero has no inverse");
  return t < 0 ? t + p : t;
}

}  // namespace torkh
