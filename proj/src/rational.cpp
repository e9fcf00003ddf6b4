#include "linkmatch/rational.hpp"

#include <stdexcept>

namespace linkmatch {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
  return Rational(std::move(q));
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace linkmatch
