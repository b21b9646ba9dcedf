#include "tvb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tvb {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational token '" + std::string(token) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in rational token '" + std::string(token) + "'");
    }
    if (negative) n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    Rational c = q;
    c.canonicalize();  // guard against caller-built mpq_class(4, 6)
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string decimal_string(const Rational& q, int digits) {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round(q * scale) to nearest, ties away from zero:
    // floor((2v+1)/2) for v >= 0, ceil((2v-1)/2) for v < 0
    mpz_class num = q.get_num() * scale;
    mpz_class den = q.get_den();
    mpz_class twice = 2 * num + (num >= 0 ? den : -den);
    mpz_class den2 = 2 * den;
    mpz_class scaled;
    if (num >= 0) {
        mpz_fdiv_q(scaled.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
    } else {
        mpz_cdiv_q(scaled.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
    }
    bool neg = scaled < 0;
    mpz_class mag = neg ? mpz_class(-scaled) : scaled;
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += ".";
        out += s.substr(s.size() - digits);
    }
    return (neg && mag != 0) ? "-" + out : out;
}

}  // namespace tvb
