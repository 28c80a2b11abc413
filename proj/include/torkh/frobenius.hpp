#pragma once

// The rank-two Frobenius algebras A = R[X]/(X^2 - hX - t) behind the three
// theories. Elements are stored as coefficient pairs (c1, cX).

#include <array>
#include <cstdint>
#include <string>

namespace torkh {

enum class Theory { Khovanov, Lee, BarNatan };

inline std::string theory_name(Theory t) {
  return t == Theory::Lee ? "lee" : t == Theory::BarNatan ? "bar-natan" : "khovanov";
}

struct Frobenius {
  std::int64_t h = 0;
  std::int64_t t = 0;

  static Frobenius of(Theory th) {
    switch (th) {
      case Theory::Lee:
        return {0, 1};
      case Theory::BarNatan:
        return {1, 0};
      default:
        return {0, 0};
    }
  }

  using Elem = std::array<std::int64_t, 2>;

  Elem mul(const Elem& a, const Elem& b) const {
    return {a[0] * b[0] + t * a[1] * b[1], a[0] * b[1] + a[1] * b[0] + h * a[1] * b[1]};
  }
  /// X^dots * (2X - h)^genus
  Elem dotted_handles(int dots, int genus) const {
    Elem v{1, 0};
    for (int i = 0; i < dots; ++i) v = mul(v, {0, 1});
    for (int i = 0; i < genus; ++i) v = mul(v, {-h, 2});
    return v;
  }
  /// counit: eps(1) = 0, eps(X) = 1
  std::int64_t counit(const Elem& a) const { return a[1]; }
};

/// q-degree step of the deformation: 0, 4 (Lee) or 2 (Bar-Natan).
inline int deformation_degree(Theory th) {
  return th == Theory::Lee ? 4 : th == Theory::BarNatan ? 2 : 0;
}

}  // namespace torkh
