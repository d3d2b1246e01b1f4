#include "zsym/scalar.hpp"

#include <ostream>
#include <sstream>

namespace zsym {

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

namespace {

std::string rat_str(const mpq_class& q, bool with_sign) {
  std::ostringstream os;
  mpq_class a = abs(q);
  if (with_sign) os << (sgn(q) < 0 ? "-" : "+");
  else if (sgn(q) < 0) os << "-";
  os << a.get_num().get_str() << "/" << a.get_den().get_str();
  return os.str();
}

mpq_class parse_rat(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Scalar: bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

std::string Scalar::str() const {
  return rat_str(re_, false) + rat_str(im_, true) + "i";
}

Scalar Scalar::parse(const std::string& s) {
  if (s.empty() || s.back() != 'i')
    throw std::invalid_argument("Scalar: bad literal '" + s + "'");
  // Split at the sign separating the real and imaginary parts. Skip
  // position 0 so a leading minus on the real part is kept.
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    if (s[k] == '+' || s[k] == '-') split = k;
  }
  if (split == std::string::npos)
    throw std::invalid_argument("Scalar: bad literal '" + s + "'");
  mpq_class re = parse_rat(s.substr(0, split));
  mpq_class im = parse_rat(s.substr(split, s.size() - 1 - split));
  return Scalar(std::move(re), std::move(im));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace zsym
