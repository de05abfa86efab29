#include "endalg/scalar.hpp"

#include <algorithm>
#include <cstdlib>

namespace endalg {

Field Field::quadratic(long long d) {
    if (d == 0 || d == 1)
        fail(Errc::invalid_argument, "quadratic field needs d outside {0, 1}");
    long long a = std::llabs(d);
    if (a > 1000000000000LL)
        fail(Errc::invalid_argument, "|d| too large for square-free validation (limit 10^12)");
    for (long long p = 2; p * p <= a; ++p) {
        if (a % (p * p) == 0)
            fail(Errc::invalid_argument, "d must be square-free: " + std::to_string(d));
    }
    return Field(d);
}

std::string Field::str() const {
    return is_quadratic() ? "qsqrt:" + std::to_string(d_) : "q";
}

Scalar::Scalar(const Field& field, Rational rat, Rational rad)
    : field_(field), rat_(std::move(rat)), rad_(std::move(rad)) {
    if (rad_ != 0 && !field_.is_quadratic())
        fail(Errc::domain, "radical part requires a quadratic field");
}

Scalar Scalar::radical_unit(const Field& field) {
    if (!field.is_quadratic())
        fail(Errc::domain, "sqrt(d) does not exist over Q");
    return Scalar(field, 0, 1);
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_)
        fail(Errc::context_mismatch,
             "field tag mismatch: " + field_.str() + " vs " + rhs.field_.str());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    return Scalar(field_, rat_ + rhs.rat_, rad_ + rhs.rad_);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    // (a + b sqrt(d)) (a' + b' sqrt(d)) = (aa' + bb'd) + (ab' + a'b) sqrt(d)
    Rational d(field_.d());
    return Scalar(field_, rat_ * rhs.rat_ + rad_ * rhs.rad_ * d, rat_ * rhs.rad_ + rad_ * rhs.rat_);
}

Scalar Scalar::inverse() const {
    if (is_zero())
        fail(Errc::division_by_zero, "division by zero scalar");
    if (rad_ == 0)
        return Scalar(field_, 1 / rat_);
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - d b^2); the norm is nonzero
    // because d is not a rational square.
    Rational d(field_.d());
    Rational norm = rat_ * rat_ - d * rad_ * rad_;
    return Scalar(field_, rat_ / norm, -rad_ / norm);
}

Scalar Scalar::conjugated() const {
    if (!field_.is_quadratic())
        fail(Errc::domain, "conjugation requested over Q");
    return Scalar(field_, rat_, -rad_);
}

Scalar FieldAutomorphism::apply(const Scalar& value) const {
    return is_identity() ? value : value.conjugated();
}

std::string rational_str(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1)
        out += "/" + denominator(value).str();
    return out;
}

std::string Scalar::str() const {
    if (is_zero())
        return "0";
    if (rad_ == 0)
        return rational_str(rat_);
    std::string radical = rad_ == 1 ? "s" : rad_ == -1 ? "-s" : rational_str(rad_) + "*s";
    if (rat_ == 0)
        return radical;
    // mixed: rational part first, radical part with explicit sign
    std::string out = rational_str(rat_);
    if (rad_ > 0)
        out += "+" + (rad_ == 1 ? std::string("s") : rational_str(rad_) + "*s");
    else
        out += "-" + (rad_ == -1 ? std::string("s") : rational_str(-rad_) + "*s");
    return out;
}

std::vector<Scalar> distinct_points(const Field& field, int count) {
    std::vector<Scalar> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k)
        out.push_back(Scalar::integer(field, k));
    return out;
}

Scalar fresh_scalar(const Field& field, const std::vector<Scalar>& avoid) {
    for (long long k = 0;; ++k) {
        Scalar candidate = Scalar::integer(field, k);
        if (std::find(avoid.begin(), avoid.end(), candidate) == avoid.end())
            return candidate;
    }
}

} // namespace endalg
