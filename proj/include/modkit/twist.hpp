#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include <boost/rational.hpp>

namespace modkit {

using Rational = boost::rational<std::int64_t>;

/// Statistics phase omega = exp(2 pi i t), stored as the exact fraction t in [0, 1).
class Twist {
 public:
  Twist() = default;
  explicit Twist(Rational t) : t_(reduce(t)) {}
  Twist(std::int64_t num, std::int64_t den) : t_(reduce(Rational(num, den))) {}

  const Rational& value() const { return t_; }

  template <typename Real = double>
  std::complex<Real> phase() const {
    const Real angle = 2 * std::numbers::pi_v<Real> * static_cast<Real>(t_.numerator()) /
                       static_cast<Real>(t_.denominator());
    return std::polar(Real(1), angle);
  }

  Twist operator+(const Twist& o) const { return Twist(t_ + o.t_); }
  Twist operator-(const Twist& o) const { return Twist(t_ - o.t_); }
  friend bool operator==(const Twist& a, const Twist& b) { return a.t_ == b.t_; }
  friend bool operator<(const Twist& a, const Twist& b) { return a.t_ < b.t_; }

 private:
  static Rational reduce(Rational t) {
    // floor for rationals with positive denominator
    std::int64_t n = t.numerator();
    std::int64_t d = t.denominator();
    std::int64_t fl = n / d;
    if (n % d != 0 && n < 0) --fl;
    return t - fl;
  }
  Rational t_{0};
};

using Twists = std::vector<Twist>;

}  // namespace modkit
