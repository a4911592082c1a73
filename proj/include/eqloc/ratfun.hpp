#ifndef EQLOC_RATFUN_HPP
#define EQLOC_RATFUN_HPP

#include <optional>
#include <stdexcept>
#include <utility>

#include "eqloc/laurent.hpp"

namespace eqloc {

// Univariate rational function in g over Q, kept in a canonical reduced form:
//  - the denominator is an ordinary polynomial with nonzero constant term,
//    integer coefficients of content 1, and positive constant coefficient;
//  - numerator and denominator share no polynomial factor (after clearing the
//    numerator's power of g);
//  - any rational scalar lives in the numerator.
// Equality of values is therefore structural equality of representations.
class RationalFunction {
 public:
  RationalFunction() : den_(Laurent(1)) {}
  explicit RationalFunction(Rat c) : num_(Laurent(std::move(c))), den_(Laurent(1)) {}
  explicit RationalFunction(long c) : RationalFunction(Rat(c)) {}

  RationalFunction(Laurent numerator, Laurent denominator) { normalize(std::move(numerator), std::move(denominator)); }

  static RationalFunction from_laurent(Laurent p) {
    RationalFunction f;
    f.num_ = std::move(p);
    return f;
  }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    Laurent g = poly_gcd(a.den_, b.den_);
    Laurent da = poly_divexact(a.den_, g);
    Laurent db = poly_divexact(b.den_, g);
    return RationalFunction(a.num_ * db + b.num_ * da, a.den_ * db);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  RationalFunction operator-() const {
    RationalFunction f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RationalFunction(den_, num_);
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  bool operator==(const RationalFunction&) const = default;

  // The exact constant if the function reduces to a scalar, nullopt otherwise.
  // Non-constancy is a verdict, not an error.
  std::optional<Rat> constant_value() const {
    if (num_.is_zero()) return Rat(0);
    if (den_.is_one() && num_.terms().size() == 1 && num_.low() == 0)
      return num_.terms().begin()->second;
    return std::nullopt;
  }

  Rat eval(const Rat& x) const {
    if (x == 0) throw std::domain_error("evaluation at 0");
    Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
  }

 private:
  void normalize(Laurent n, Laurent d) {
    if (d.is_zero()) throw std::domain_error("zero denominator");
    if (n.is_zero()) {
      num_ = Laurent();
      den_ = Laurent(1);
      return;
    }
    long s = d.low();
    d = d.shifted(-s);
    n = n.shifted(-s);
    long t = n.low();
    Laurent n0 = n.shifted(-t);
    Laurent g = poly_gcd(n0, d);
    if (!g.is_one()) {
      n0 = poly_divexact(n0, g);
      d = poly_divexact(d, g);
    }
    // Rescale: integer denominator, content 1, positive constant term.
    std::vector<Rat> dd = to_dense(d);
    std::vector<Int> di = detail::to_int_primitive(dd);
    if (di.front() < 0)
      for (auto& c : di) c = -c;
    Rat scale = Rat(di.front()) / dd.front();
    std::vector<Rat> dr(di.size());
    for (size_t i = 0; i < di.size(); ++i) dr[i] = Rat(di[i]);
    num_ = n0.scaled(scale).shifted(t);
    den_ = from_dense(dr);
  }

  Laurent num_;
  Laurent den_;
};

inline RationalFunction ratfun_reduce(const RationalFunction& f) {
  return RationalFunction(f.num(), f.den());
}

}  // namespace eqloc

#endif
