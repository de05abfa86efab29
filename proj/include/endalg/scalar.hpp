#ifndef ENDALG_SCALAR_HPP
#define ENDALG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "endalg/error.hpp"

namespace endalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals, or the quadratic extension Q(sqrt(d))
/// for a square-free integer d (d may be negative, d not in {0, 1}).
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field quadratic(long long d);

    bool is_quadratic() const { return d_ != 0; }
    long long d() const { return d_; }

    std::string str() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(long long d) : d_(d) {}
    long long d_; // 0 encodes plain Q
};

/// Exact element of the coefficient field, kept in canonical form:
/// rat + rad*sqrt(d), both parts reduced fractions, rad = 0 over Q.
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}
    explicit Scalar(const Field& field) : field_(field) {}
    Scalar(const Field& field, Rational rat) : field_(field), rat_(std::move(rat)) {}
    Scalar(const Field& field, Rational rat, Rational rad);

    static Scalar zero(const Field& field) { return Scalar(field); }
    static Scalar one(const Field& field) { return Scalar(field, 1); }
    static Scalar integer(const Field& field, long long value) { return Scalar(field, value); }
    /// The radical unit sqrt(d); rejects plain Q.
    static Scalar radical_unit(const Field& field);

    const Field& field() const { return field_; }
    const Rational& rational_part() const { return rat_; }
    const Rational& radical_part() const { return rad_; }

    bool is_zero() const { return rat_ == 0 && rad_ == 0; }
    bool is_one() const { return rat_ == 1 && rad_ == 0; }
    bool is_rational() const { return rad_ == 0; }

    Scalar operator-() const { return Scalar(field_, -rat_, -rad_); }
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const { return *this + (-rhs); }
    Scalar operator*(const Scalar& rhs) const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    /// Exact multiplicative inverse; fails on zero.
    Scalar inverse() const;
    /// The nontrivial field automorphism rat + rad*sqrt(d) -> rat - rad*sqrt(d).
    Scalar conjugated() const;

    std::string str() const;

    friend bool operator==(const Scalar&, const Scalar&) = default;

private:
    void require_same_field(const Scalar& rhs) const;

    Field field_;
    Rational rat_ = 0;
    Rational rad_ = 0;
};

/// Automorphism of the coefficient field P.  Only the identity exists over Q;
/// Q(sqrt(d)) additionally has conjugation, an involution.
class FieldAutomorphism {
public:
    enum class Kind { identity, conjugation };

    static FieldAutomorphism identity() { return FieldAutomorphism(Kind::identity); }
    static FieldAutomorphism conjugation() { return FieldAutomorphism(Kind::conjugation); }

    Kind kind() const { return kind_; }
    bool is_identity() const { return kind_ == Kind::identity; }

    /// Group law: conjugation composed with conjugation is the identity.
    FieldAutomorphism composed_with(const FieldAutomorphism& rhs) const {
        return FieldAutomorphism(is_identity() == rhs.is_identity() ? Kind::identity
                                                                    : Kind::conjugation);
    }

    Scalar apply(const Scalar& value) const;

    std::string str() const { return is_identity() ? "id" : "conj"; }

    friend bool operator==(const FieldAutomorphism&, const FieldAutomorphism&) = default;

private:
    explicit FieldAutomorphism(Kind kind) : kind_(kind) {}
    Kind kind_;
};

/// Canonical rational string: "p" or "p/q" with positive q.
std::string rational_str(const Rational& value);

/// Returns `count` pairwise distinct field elements (the integers 0,1,2,...).
/// Every finite avoid-set misses some of them; both fields are infinite.
std::vector<Scalar> distinct_points(const Field& field, int count);

/// First integer scalar not contained in `avoid`.
Scalar fresh_scalar(const Field& field, const std::vector<Scalar>& avoid);

} // namespace endalg

#endif
