#pragma once

#include <cmath>

namespace proyden {

/// |t|^p and |t|^(p-2) t with shortcuts for the common exponents.
class PowerLaw {
 public:
  explicit PowerLaw(double p) : p_(p) {
    if (p == 2.0) kind_ = Kind::two;
    else if (p == 3.0) kind_ = Kind::three;
    else if (p == 1.5) kind_ = Kind::three_halves;
  }

  double exponent() const { return p_; }

  double abs_pow(double t) const {
    const double a = std::abs(t);
    switch (kind_) {
      case Kind::two: return a * a;
      case Kind::three: return a * a * a;
      case Kind::three_halves: return a * std::sqrt(a);
      default: return a == 0.0 ? 0.0 : std::pow(a, p_);
    }
  }

  /// psi(t) = |t|^(p-2) t, with psi(0) = 0.
  double psi(double t) const {
    switch (kind_) {
      case Kind::two: return t;
      case Kind::three: return std::abs(t) * t;
      case Kind::three_halves: return t == 0.0 ? 0.0 : t / std::sqrt(std::abs(t));
      default: return t == 0.0 ? 0.0 : std::pow(std::abs(t), p_ - 2.0) * t;
    }
  }

 private:
  enum class Kind { generic, two, three, three_halves };
  double p_;
  Kind kind_ = Kind::generic;
};

}  // namespace proyden
