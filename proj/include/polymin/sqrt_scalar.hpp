#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "polymin/rational.hpp"

namespace polymin {

/// Element sum_d q_d * sqrt(d) of the multi-quadratic extension of Q, d
/// square-free. Zero coefficients are never stored, so equality is
/// coefficientwise.
class SqrtScalar {
 public:
  SqrtScalar() = default;
  SqrtScalar(long v);  // NOLINT(google-explicit-constructor)
  SqrtScalar(const BigRational& q);  // NOLINT(google-explicit-constructor)
  /// q * sqrt(d); d must be square-free and positive.
  static SqrtScalar term(const BigRational& q, const BigInt& d);

  const std::map<BigInt, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  BigRational rational_part() const;

  SqrtScalar& operator+=(const SqrtScalar& o);
  SqrtScalar& operator-=(const SqrtScalar& o);
  SqrtScalar& operator*=(const SqrtScalar& o);
  friend SqrtScalar operator+(SqrtScalar a, const SqrtScalar& b) { return a += b; }
  friend SqrtScalar operator-(SqrtScalar a, const SqrtScalar& b) { return a -= b; }
  friend SqrtScalar operator*(SqrtScalar a, const SqrtScalar& b) { return a *= b; }
  SqrtScalar operator-() const;
  friend bool operator==(const SqrtScalar& a, const SqrtScalar& b) { return a.terms_ == b.terms_; }

  std::string str() const;
  /// {"terms":{"d":"num/den"}}
  nlohmann::json to_json() const;

 private:
  void add_term(const BigInt& d, const BigRational& q);
  std::map<BigInt, BigRational> terms_;
};

/// Square-free part of a positive integer (trial division).
BigInt square_free_part(const BigInt& n);

/// Exact sqrt(p) = (a/b) sqrt(d). Throws std::domain_error unless p > 0.
SqrtScalar sqrt_of(const BigRational& p);

}  // namespace polymin
