#include "chtg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace chtg::exact {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) : q_(std::move(num), std::move(den)) {
    if (q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::from_string: cannot parse '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("Rational::from_string: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace chtg::exact
