#include "fscsynth/models/rational.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fscsynth {

namespace {

bool allDigits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

mpz_class parseInteger(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!allDigits(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    mpz_class result(std::string(s), 10);
    return negative ? mpz_class(-result) : result;
}

}  // namespace

Rational parseRational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parseInteger(text.substr(0, slash));
        mpz_class den = parseInteger(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        std::string_view expPart = text.substr(e + 1);
        mpz_class ex = parseInteger(expPart);
        if (!ex.fits_slong_p() || abs(ex) > 4096) throw std::invalid_argument("exponent out of range");
        exponent = ex.get_si();
    }

    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long fractionDigits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view intPart = mantissa.substr(0, dot);
        std::string_view fracPart = mantissa.substr(dot + 1);
        if ((!intPart.empty() && !allDigits(intPart)) || (!fracPart.empty() && !allDigits(fracPart)) ||
            (intPart.empty() && fracPart.empty())) {
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        }
        digits = std::string(intPart) + std::string(fracPart);
        fractionDigits = static_cast<long>(fracPart.size());
    } else {
        if (!allDigits(mantissa)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        digits = std::string(mantissa);
    }

    mpz_class num(digits, 10);
    long scale = exponent - fractionDigits;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
    Rational r = scale >= 0 ? Rational(num * pow10) : Rational(num, pow10);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string toString(Rational const& value) { return value.get_str(10); }

std::string toDecimalString(Rational const& value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value.get_d());
    return buffer;
}

Rational fromDouble(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite value cannot be made exact");
    Rational r(value);
    r.canonicalize();
    return r;
}

}  // namespace fscsynth
