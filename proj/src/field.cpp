#include "gsd/field.hpp"

#include <cctype>

namespace gsd {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw std::invalid_argument("prime too large: " + std::to_string(p));
  if (!is_prime(p)) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  Element n = from_int(num.get_si());
  Element d = from_int(den.get_si());
  return div(n, d);
}

std::string PrimeField::to_string(Element a) const {
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

PrimeField::Element PrimeField::parse(const std::string& text) const {
  mpq_class q;
  try {
    q = mpq_class(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a field element: '" + text + "'");
  }
  q.canonicalize();
  return from_rational(q);
}

RationalField::Element RationalField::parse(const std::string& text) const {
  Element q;
  try {
    q = Element(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace gsd
