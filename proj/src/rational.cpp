#include "liya/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace liya {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  if (!valid_int(num) || !valid_int(den))
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  Rational r;
  r.v_ = std::move(q);
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("rational: division by zero");
  return Rational(a.v_ / b.v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace liya
