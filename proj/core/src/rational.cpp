// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include "easlab/rational.hpp"

#include <cctype>
#include <ostream>

#include "easlab/error.hpp"

namespace easlab {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer(num)) throw InputError("not a rational: \"" + std::string(text) + "\"");
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(parse_integer(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer(den) || den.front() == '-' || den.front() == '+') {
      throw InputError("not a rational: \"" + std::string(text) + "\"");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw InputError("rational with zero denominator: \"" + std::string(text) + "\"");
    q = mpq_class(parse_integer(num), d);
    q.canonicalize();
  }
  return Rational(q);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

mpz_class Rational::height() const {
  mpz_class h = ::abs(value_.get_num());
  h *= value_.get_den();
  return h;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw InputError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

bool Rational::exact_sqrt(Rational& root) const {
  if (sign() < 0) return false;
  const mpz_class num = value_.get_num();
  const mpz_class den = value_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(mpq_class(rn, rd));
  return true;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace easlab
