#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "statesurf/errors.hpp"

namespace statesurf {

using BigInt = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in an abstract variable; zero coefficients are
// never stored.  The bracket keeps exponents in A; the Jones polynomial is
// the same data read through t = A^-4.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(const BigInt& coeff, int exponent) {
    LaurentPolynomial p;
    if (coeff != 0) p.terms_[exponent] = coeff;
    return p;
  }
  static LaurentPolynomial one() { return monomial(1, 0); }

  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const {
    require(!is_zero(), ErrorCode::InternalInvariant, "degree of the zero polynomial");
    return terms_.begin()->first;
  }
  int max_exponent() const {
    require(!is_zero(), ErrorCode::InternalInvariant, "degree of the zero polynomial");
    return terms_.rbegin()->first;
  }

  BigInt coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const std::map<int, BigInt>& terms() const { return terms_; }

  void add_term(int exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = terms_.try_emplace(exponent, 0).first;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  LaurentPolynomial shifted(int delta) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_[e + delta] = c;
    return out;
  }

  LaurentPolynomial negated() const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }

  // Substitute the variable by its inverse.
  LaurentPolynomial inverted_variable() const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_[-e] = c;
    return out;
  }

  bool operator==(const LaurentPolynomial&) const = default;

 private:
  std::map<int, BigInt> terms_;
};

inline LaurentPolynomial pow(const LaurentPolynomial& base, int n) {
  LaurentPolynomial out = LaurentPolynomial::one();
  for (int i = 0; i < n; ++i) out = out * base;
  return out;
}

// An exponent in t, stored as a multiple of 1/2 (links can have half-integer
// Jones exponents; knots always land on integers).
struct HalfInt {
  int doubled = 0;

  bool is_integer() const { return doubled % 2 == 0; }
  std::string to_string() const {
    if (is_integer()) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
  }
  auto operator<=>(const HalfInt&) const = default;
};

struct JonesTerm {
  HalfInt t_exponent;
  BigInt coefficient;
};

// Read a bracket-variable polynomial as a polynomial in t = A^-4.
// Every A-exponent of a bracket-derived value is divisible by 2.
inline std::vector<JonesTerm> as_t_polynomial(const LaurentPolynomial& in_A) {
  std::vector<JonesTerm> out;
  for (auto it = in_A.terms().rbegin(); it != in_A.terms().rend(); ++it) {
    require(it->first % 2 == 0, ErrorCode::InternalInvariant,
            "bracket exponents must be even before the t-substitution");
    out.push_back({HalfInt{-it->first / 2}, it->second});
  }
  return out;  // ascending t-exponent
}

// Text form `c*t^e`, descending exponent, exact integer coefficients.
inline std::string jones_text(const LaurentPolynomial& in_A) {
  auto terms = as_t_polynomial(in_A);
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    BigInt c = it->coefficient;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    out += c.str() + "*t^" + it->t_exponent.to_string();
  }
  return out;
}

// Same layout for the bracket variable itself.
inline std::string bracket_text(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    BigInt c = it->second;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    out += c.str() + "*A^" + std::to_string(it->first);
  }
  return out;
}

}  // namespace statesurf
