#include "polymin/sqrt_scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace polymin {

SqrtScalar::SqrtScalar(long v) : SqrtScalar(BigRational(v)) {}

SqrtScalar::SqrtScalar(const BigRational& q) { add_term(1, q); }

SqrtScalar SqrtScalar::term(const BigRational& q, const BigInt& d) {
  if (d <= 0) throw std::domain_error("SqrtScalar: radicand must be positive");
  SqrtScalar s;
  s.add_term(d, q);
  return s;
}

bool SqrtScalar::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

BigRational SqrtScalar::rational_part() const {
  auto it = terms_.find(BigInt(1));
  return it == terms_.end() ? BigRational(0) : it->second;
}

void SqrtScalar::add_term(const BigInt& d, const BigRational& q_in) {
  if (q_in == 0) return;
  BigRational q = q_in;
  q.canonicalize();
  auto [it, fresh] = terms_.emplace(d, q);
  if (!fresh) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

SqrtScalar& SqrtScalar::operator+=(const SqrtScalar& o) {
  for (const auto& [d, q] : o.terms_) add_term(d, q);
  return *this;
}

SqrtScalar& SqrtScalar::operator-=(const SqrtScalar& o) {
  for (const auto& [d, q] : o.terms_) add_term(d, -q);
  return *this;
}

SqrtScalar& SqrtScalar::operator*=(const SqrtScalar& o) {
  SqrtScalar out;
  for (const auto& [d1, q1] : terms_)
    for (const auto& [d2, q2] : o.terms_) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
      BigInt d = (d1 / g) * (d2 / g);
      out.add_term(d, q1 * q2 * g);
    }
  terms_ = std::move(out.terms_);
  return *this;
}

SqrtScalar SqrtScalar::operator-() const {
  SqrtScalar out;
  for (const auto& [d, q] : terms_) out.terms_.emplace(d, -q);
  return out;
}

std::string SqrtScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, q] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(q);
    if (d != 1) os << "*sqrt(" << d.get_str() << ")";
  }
  return os.str();
}

nlohmann::json SqrtScalar::to_json() const {
  nlohmann::json t = nlohmann::json::object();
  for (const auto& [d, q] : terms_) t[d.get_str()] = to_string(q);
  return {{"terms", t}};
}

BigInt square_free_part(const BigInt& n) {
  if (n <= 0) throw std::domain_error("square_free_part: argument must be positive");
  BigInt rest = n, out = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) return out;
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) break;
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  if (!mpz_perfect_square_p(rest.get_mpz_t())) out *= rest;
  return out;
}

SqrtScalar sqrt_of(const BigRational& p) {
  if (p <= 0) throw std::domain_error("sqrt_of: argument must be positive");
  // sqrt(a/b) = sqrt(ab)/b and ab = s^2 d.
  BigInt ab = p.get_num() * p.get_den();
  BigInt d = square_free_part(ab);
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), BigInt(ab / d).get_mpz_t());
  BigRational coeff(s, p.get_den());
  coeff.canonicalize();
  return SqrtScalar::term(coeff, d);
}

}  // namespace polymin
