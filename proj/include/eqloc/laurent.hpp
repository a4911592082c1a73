#ifndef EQLOC_LAURENT_HPP
#define EQLOC_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eqloc/rational.hpp"

namespace eqloc {

inline Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (x == 0) throw std::domain_error("rat_pow: 0 raised to a non-positive power");
  Rat base = e > 0 ? x : Rat(1) / x;
  unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

// Sparse univariate Laurent polynomial over Q in the indeterminate g.
// Invariant: no stored coefficient is zero; zero polynomial has an empty map.
class Laurent {
 public:
  using Map = std::map<long, Rat>;

  Laurent() = default;
  explicit Laurent(Rat c) {
    if (c != 0) coeffs_.emplace(0, std::move(c));
  }
  explicit Laurent(long c) : Laurent(Rat(c)) {}

  static Laurent monomial(long exp, Rat c = Rat(1)) {
    Laurent p;
    if (c != 0) p.coeffs_.emplace(exp, std::move(c));
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
  }

  const Map& terms() const { return coeffs_; }

  long low() const {
    if (is_zero()) throw std::logic_error("low() of zero polynomial");
    return coeffs_.begin()->first;
  }
  long high() const {
    if (is_zero()) throw std::logic_error("high() of zero polynomial");
    return coeffs_.rbegin()->first;
  }

  const Rat& coeff(long exp) const {
    static const Rat kZero(0);
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? kZero : it->second;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  Laurent scaled(const Rat& s) const {
    Laurent r;
    if (s == 0) return r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, c * s);
    return r;
  }

  // Multiply by g^k.
  Laurent shifted(long k) const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
  }

  Rat eval(const Rat& x) const {
    if (!is_zero() && low() < 0 && x == 0)
      throw std::domain_error("evaluation of a Laurent polynomial at 0");
    Rat acc(0);
    for (const auto& [e, c] : coeffs_) acc += c * rat_pow(x, e);
    return acc;
  }

  bool operator==(const Laurent&) const = default;

 private:
  void add_term(long e, const Rat& c) {
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  Map coeffs_;
};

// --- Ordinary-polynomial helpers (low() >= 0), used for gcd/division. ---

inline std::vector<Rat> to_dense(const Laurent& p) {
  if (p.is_zero()) return {};
  if (p.low() < 0) throw std::logic_error("to_dense: negative exponent");
  std::vector<Rat> v(static_cast<size_t>(p.high()) + 1, Rat(0));
  for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e)] = c;
  return v;
}

inline Laurent from_dense(const std::vector<Rat>& v) {
  Laurent p;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p += Laurent::monomial(static_cast<long>(i), v[i]);
  return p;
}

namespace detail {

inline void trim(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Clear denominators, remove content, make leading coefficient positive.
inline std::vector<Int> to_int_primitive(const std::vector<Rat>& p) {
  std::vector<Int> out;
  if (p.empty()) return out;
  Int l(1);
  for (const auto& c : p)
    if (c != 0) l = lcm(l, denominator(c));
  Int content(0);
  out.reserve(p.size());
  for (const auto& c : p) {
    Int ci = numerator(c) * (l / denominator(c));
    content = gcd(content, ci);
    out.push_back(std::move(ci));
  }
  trim(out);
  if (out.empty()) return out;
  if (out.back() < 0) content = -content;
  for (auto& ci : out) ci /= content;
  return out;
}

inline std::vector<Int> int_primitive(std::vector<Int> p) {
  trim(p);
  if (p.empty()) return p;
  Int content(0);
  for (const auto& c : p) content = gcd(content, c);
  if (p.back() < 0) content = -content;
  for (auto& c : p) c /= content;
  return p;
}

// Pseudo-remainder of a by b, b nonzero.
inline std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
  const Int& lb = b.back();
  while (a.size() >= b.size()) {
    Int la = a.back();
    size_t k = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + k] -= la * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace detail

// Gcd of two ordinary polynomials over Q, returned as a primitive integer
// polynomial with positive leading coefficient (primitive PRS).
inline Laurent poly_gcd(const Laurent& a, const Laurent& b) {
  std::vector<Int> x = detail::to_int_primitive(to_dense(a));
  std::vector<Int> y = detail::to_int_primitive(to_dense(b));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Int> r = detail::int_primitive(detail::pseudo_rem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rat> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = Rat(x[i]);
  return from_dense(out);
}

// Exact division of ordinary polynomials; throws if the division is inexact.
inline Laurent poly_divexact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero");
  if (a.is_zero()) return Laurent();
  std::vector<Rat> r = to_dense(a);
  std::vector<Rat> d = to_dense(b);
  if (r.size() < d.size()) throw std::logic_error("poly_divexact: inexact division");
  std::vector<Rat> q(r.size() - d.size() + 1, Rat(0));
  auto deg = [](const std::vector<Rat>& v) {
    size_t n = v.size();
    while (n > 0 && v[n - 1] == 0) --n;
    return n;  // size of the trimmed vector
  };
  size_t rn = deg(r);
  const size_t dn = d.size();
  while (rn >= dn) {
    Rat c = r[rn - 1] / d[dn - 1];
    size_t k = rn - dn;
    q[k] = c;
    for (size_t i = 0; i < dn; ++i) r[i + k] -= c * d[i];
    rn = deg(r);
  }
  if (rn != 0) throw std::logic_error("poly_divexact: inexact division");
  return from_dense(q);
}

}  // namespace eqloc

#endif
