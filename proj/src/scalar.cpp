#include "chordlab/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "chordlab/error.hpp"

namespace chordlab {

namespace {

std::int64_t reduce(const boost::multiprecision::cpp_int& v, std::int64_t p) {
    boost::multiprecision::cpp_int r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + p : t;
}

}  // namespace

Field Field::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31))
        throw Error(ErrorCode::invalid_algebra, "field characteristic " + std::to_string(p) + " is out of range");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error(ErrorCode::invalid_algebra, std::to_string(p) + " is not prime");
    Field f;
    f.modulus_ = p;
    return f;
}

Field Field::parse(const std::string& text) {
    if (text == "Q") return rationals();
    std::string digits;
    if (text.rfind("Fp ", 0) == 0)
        digits = text.substr(3);
    else if (text.size() > 1 && text[0] == 'F')
        digits = text.substr(1);
    if (digits.empty() || digits.size() > 10 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw Error(ErrorCode::invalid_algebra, "unknown field '" + text + "' (use Q or F<prime>)");
    return prime(std::stoll(digits));
}

std::string Field::to_string() const { return is_rational() ? "Q" : "F" + std::to_string(modulus_); }

Scalar::Scalar(const Field& field, std::int64_t value) : field_(field) {
    if (field.is_rational())
        rational_ = value;
    else
        residue_ = reduce(value, field.characteristic());
}

Scalar::Scalar(const Field& field, const Rational& value) : field_(field) {
    if (field.is_rational()) {
        rational_ = value;
        return;
    }
    const std::int64_t p = field.characteristic();
    const std::int64_t den = reduce(boost::multiprecision::denominator(value), p);
    if (den == 0)
        throw Error(ErrorCode::invalid_algebra,
                    "coefficient " + value.str() + " has a denominator divisible by " + std::to_string(p));
    const std::int64_t num = reduce(boost::multiprecision::numerator(value), p);
    residue_ = static_cast<std::int64_t>((static_cast<__int128>(num) * inverse_mod(den, p)) % p);
}

void Scalar::check(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw Error(ErrorCode::field_mismatch,
                    "cannot combine elements of " + field_.to_string() + " and " + o.field_.to_string());
}

bool Scalar::is_zero() const { return field_.is_rational() ? rational_ == 0 : residue_ == 0; }

Rational Scalar::value() const { return field_.is_rational() ? rational_ : Rational(residue_); }

Scalar Scalar::operator+(const Scalar& o) const {
    check(o);
    Scalar r = *this;
    if (field_.is_rational())
        r.rational_ += o.rational_;
    else
        r.residue_ = (residue_ + o.residue_) % field_.characteristic();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.is_rational())
        r.rational_ = -rational_;
    else
        r.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check(o);
    Scalar r = *this;
    if (field_.is_rational())
        r.rational_ *= o.rational_;
    else
        r.residue_ = (residue_ * o.residue_) % field_.characteristic();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check(o);
    if (o.is_zero()) throw Error(ErrorCode::internal, "division by zero");
    Scalar r = *this;
    if (field_.is_rational())
        r.rational_ /= o.rational_;
    else
        r.residue_ = (residue_ * inverse_mod(o.residue_, field_.characteristic())) % field_.characteristic();
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && (field_.is_rational() ? rational_ == o.rational_ : residue_ == o.residue_);
}

std::string Scalar::to_string() const {
    if (!field_.is_rational()) return std::to_string(residue_);
    return boost::multiprecision::numerator(rational_).str() + "/" +
           boost::multiprecision::denominator(rational_).str();
}

Rational parse_rational(const std::string& text) {
    auto integer = [&](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size() || s.size() - i > 1000) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!integer(num, true) || !integer(den, false))
        throw Error(ErrorCode::syntax_error, "expected a rational number, got '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    boost::multiprecision::cpp_int d(den);
    if (d == 0) throw Error(ErrorCode::syntax_error, "zero denominator in '" + text + "'");
    return Rational(boost::multiprecision::cpp_int(num), d);
}

}  // namespace chordlab
