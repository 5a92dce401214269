#ifndef ELKO_DUAL_HPP
#define ELKO_DUAL_HPP

// Forward-mode dual numbers with three derivative slots (one per momentum
// component). Nesting Dual<Dual<double>> gives exact mixed second derivatives.

#include <array>
#include <cmath>

namespace elko {

template <class S>
struct Dual {
  S v{};
  std::array<S, 3> d{};

  Dual() = default;
  Dual(double c) : v(S(c)) {}
  Dual(S value, std::array<S, 3> deriv) : v(value), d(deriv) {}

  Dual& operator+=(const Dual& o) {
    v = v + o.v;
    for (int i = 0; i < 3; ++i) d[i] = d[i] + o.d[i];
    return *this;
  }
};

using D0 = double;
using D1 = Dual<double>;
using D2 = Dual<Dual<double>>;

inline double value_of(double x) { return x; }
template <class S>
double value_of(const Dual<S>& x) { return value_of(x.v); }

template <class S>
Dual<S> operator+(const Dual<S>& a, const Dual<S>& b) {
  return {a.v + b.v, {a.d[0] + b.d[0], a.d[1] + b.d[1], a.d[2] + b.d[2]}};
}
template <class S>
Dual<S> operator-(const Dual<S>& a, const Dual<S>& b) {
  return {a.v - b.v, {a.d[0] - b.d[0], a.d[1] - b.d[1], a.d[2] - b.d[2]}};
}
template <class S>
Dual<S> operator-(const Dual<S>& a) {
  return {-a.v, {-a.d[0], -a.d[1], -a.d[2]}};
}
template <class S>
Dual<S> operator*(const Dual<S>& a, const Dual<S>& b) {
  return {a.v * b.v,
          {a.d[0] * b.v + a.v * b.d[0], a.d[1] * b.v + a.v * b.d[1],
           a.d[2] * b.v + a.v * b.d[2]}};
}
template <class S>
Dual<S> operator/(const Dual<S>& a, const Dual<S>& b) {
  S inv = S(1) / b.v;
  S q = a.v * inv;
  return {q,
          {(a.d[0] - q * b.d[0]) * inv, (a.d[1] - q * b.d[1]) * inv,
           (a.d[2] - q * b.d[2]) * inv}};
}

template <class S> Dual<S> operator+(const Dual<S>& a, double b) { return a + Dual<S>(b); }
template <class S> Dual<S> operator+(double a, const Dual<S>& b) { return Dual<S>(a) + b; }
template <class S> Dual<S> operator-(const Dual<S>& a, double b) { return a - Dual<S>(b); }
template <class S> Dual<S> operator-(double a, const Dual<S>& b) { return Dual<S>(a) - b; }
template <class S> Dual<S> operator*(const Dual<S>& a, double b) { return a * Dual<S>(b); }
template <class S> Dual<S> operator*(double a, const Dual<S>& b) { return Dual<S>(a) * b; }
template <class S> Dual<S> operator/(const Dual<S>& a, double b) { return a / Dual<S>(b); }
template <class S> Dual<S> operator/(double a, const Dual<S>& b) { return Dual<S>(a) / b; }

// chain rule helper: f(x) with value fv and derivative fp at x.v
template <class S>
Dual<S> lift(const Dual<S>& x, S fv, S fp) {
  return {fv, {x.d[0] * fp, x.d[1] * fp, x.d[2] * fp}};
}

using std::atan2;
using std::cosh;
using std::exp;
using std::sinh;
using std::sqrt;

template <class S>
Dual<S> sqrt(const Dual<S>& x) {
  S r = sqrt(x.v);
  return lift(x, r, S(0.5) / r);
}
template <class S>
Dual<S> exp(const Dual<S>& x) {
  S e = exp(x.v);
  return lift(x, e, e);
}
template <class S>
Dual<S> sinh(const Dual<S>& x) {
  return lift(x, sinh(x.v), cosh(x.v));
}
template <class S>
Dual<S> cosh(const Dual<S>& x) {
  return lift(x, cosh(x.v), sinh(x.v));
}
template <class S>
Dual<S> atan2(const Dual<S>& y, const Dual<S>& x) {
  S den = x.v * x.v + y.v * y.v;
  Dual<S> out;
  out.v = atan2(y.v, x.v);
  for (int i = 0; i < 3; ++i) out.d[i] = (x.v * y.d[i] - y.v * x.d[i]) / den;
  return out;
}

}  // namespace elko

#endif
