#pragma once

// Coefficient rings used by the chain-complex machinery. Each ring is a small
// policy object: it owns whatever runtime parameters it needs (the modulus of
// a prime field) and exposes arithmetic on its value_type.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "torkh/errors.hpp"

namespace torkh {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class RingKind { Integers, Rationals, PrimeField };

/// Runtime description of a coefficient ring: Z, Q or F_p.
struct CoefficientRing {
  RingKind kind = RingKind::Rationals;
  std::int64_t p = 0;  // only meaningful for PrimeField

  static CoefficientRing integers() { return {RingKind::Integers, 0}; }
  static CoefficientRing rationals() { return {RingKind::Rationals, 0}; }
  static CoefficientRing prime_field(std::int64_t p);

  bool is_field() const { return kind != RingKind::Integers; }
  std::int64_t characteristic() const { return kind == RingKind::PrimeField ? p : 0; }
  std::string name() const;  // "Z", "Q", "F3", ...

  /// Parses "Z", "Q", "F2", "F3", ... (case-insensitive prefix).
  static CoefficientRing parse(const std::string& text);

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

bool is_prime(std::int64_t n);

struct IntegerRing {
  using value_type = BigInt;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return v; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
  value_type inverse(const value_type& a) const { return a; }  // units are ±1
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool has_half() const { return false; }
  std::int64_t characteristic() const { return 0; }
  CoefficientRing descriptor() const { return CoefficientRing::integers(); }
  std::string to_string(const value_type& a) const { return a.str(); }
};

/// Integers in an int64 with overflow detection. Used for the bulk of the
/// reduction work; CoefficientOverflow signals a retry with IntegerRing.
struct CheckedInt64Ring {
  using value_type = std::int64_t;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return v; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_unit(value_type a) const { return a == 1 || a == -1; }
  value_type inverse(value_type a) const { return a; }
  value_type add(value_type a, value_type b) const {
    value_type r;
    if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow();
    return r;
  }
  value_type sub(value_type a, value_type b) const {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r)) throw CoefficientOverflow();
    return r;
  }
  value_type mul(value_type a, value_type b) const {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
    return r;
  }
  value_type neg(value_type a) const {
    if (a == INT64_MIN) throw CoefficientOverflow();
    return -a;
  }
  bool has_half() const { return false; }
  std::int64_t characteristic() const { return 0; }
  CoefficientRing descriptor() const { return CoefficientRing::integers(); }
  std::string to_string(value_type a) const { return std::to_string(a); }
};

struct RationalField {
  using value_type = BigRational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return v; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_unit(const value_type& a) const { return a != 0; }
  value_type inverse(const value_type& a) const { return value_type(1) / a; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool has_half() const { return true; }
  std::int64_t characteristic() const { return 0; }
  CoefficientRing descriptor() const { return CoefficientRing::rationals(); }
  std::string to_string(const value_type& a) const { return a.str(); }
};

struct PrimeField {
  using value_type = std::int64_t;

  explicit PrimeField(std::int64_t modulus) : p(modulus) {
    if (!is_prime(modulus)) throw std::invalid_argument("PrimeField: modulus is not prime");
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    v %= p;
    return v < 0 ? v + p : v;
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_unit(value_type a) const { return a != 0; }
  value_type inverse(value_type a) const;
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const {
    value_type s = a - b;
    return s < 0 ? s + p : s;
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<__int128>(a) * b) % p);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  bool has_half() const { return p != 2; }
  std::int64_t characteristic() const { return p; }
  CoefficientRing descriptor() const { return CoefficientRing::prime_field(p); }
  std::string to_string(value_type a) const { return std::to_string(a); }

  std::int64_t p;
};

/// Calls fn(ring_policy) with the policy object matching `ring`.
template <class Fn>
decltype(auto) with_ring(const CoefficientRing& ring, Fn&& fn) {
  switch (ring.kind) {
    case RingKind::Integers:
      return fn(IntegerRing{});
    case RingKind::Rationals:
      return fn(RationalField{});
    case RingKind::PrimeField:
      return fn(PrimeField{ring.p});
  }
  throw std::logic_error("unreachable ring kind");
}

}  // namespace torkh
