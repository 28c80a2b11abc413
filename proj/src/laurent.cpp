#include "torkh/laurent.hpp"

#include <sstream>

namespace torkh {

LaurentPoly2 LaurentPoly2::monomial(int t_exp, int q_exp, BigInt coeff) {
  LaurentPoly2 p;
  p.add_term(t_exp, q_exp, coeff);
  return p;
}

BigInt LaurentPoly2::coeff(int t_exp, int q_exp) const {
  auto it = terms_.find({t_exp, q_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly2::add_term(int t_exp, int q_exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, ins] = terms_.emplace(Key{t_exp, q_exp}, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const { return *this + o.scaled(-1); }

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

LaurentPoly2 LaurentPoly2::scaled(const BigInt& c) const {
  LaurentPoly2 r;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int t_exp, int q_exp) const {
  LaurentPoly2 r;
  for (const auto& [k, v] : terms_) r.terms_[{k.first + t_exp, k.second + q_exp}] = v;
  return r;
}

LaurentPoly2 LaurentPoly2::at_t_minus_one() const {
  LaurentPoly2 r;
  for (const auto& [k, v] : terms_) r.add_term(0, k.second, (k.first % 2) ? BigInt(-v) : v);
  return r;
}

BigInt LaurentPoly2::at_one() const {
  BigInt s = 0;
  for (const auto& [k, v] : terms_) s += v;
  return s;
}

std::string LaurentPoly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    BigInt c = v;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    first = false;
    bool mono = k.first != 0 || k.second != 0;
    if (c != 1 || !mono) os << c;
    if (k.first == 1) os << "t";
    else if (k.first != 0) os << "t^" << k.first;
    if (k.second == 1) os << "q";
    else if (k.second != 0) os << "q^" << k.second;
  }
  return os.str();
}

}  // namespace torkh
