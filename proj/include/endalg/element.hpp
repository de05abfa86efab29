#ifndef ENDALG_ELEMENT_HPP
#define ENDALG_ELEMENT_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "endalg/scalar.hpp"

namespace endalg {

enum class AlgebraKind { commutative, associative };

inline std::string kind_str(AlgebraKind kind) {
    return kind == AlgebraKind::commutative ? "comm" : "assoc";
}

/// Ambient algebra: P[x1..xn] or P<x1..xn> with a hard degree cap on products.
/// Values from different contexts never mix.
struct Context {
    AlgebraKind kind = AlgebraKind::commutative;
    int n_vars = 1;
    Field field = Field::rationals();
    int max_degree = 12;

    friend bool operator==(const Context&, const Context&) = default;
    std::string str() const;
};

Context make_context(AlgebraKind kind, int n_vars, const Field& field, int max_degree = 12);

/// Commutative case: exponent vector of length n.  Associative case: the
/// word's generator indices (0-based), empty = unit.  Interpretation is
/// supplied by the ambient AlgebraKind.
struct Monomial {
    std::vector<std::uint32_t> v;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

int monomial_degree(const Monomial& m, AlgebraKind kind);

/// Canonical total order: graded, x1 highest.  Commutative monomials compare
/// by total degree then exponent vector; words by length then letters.
bool monomial_less(const Monomial& a, const Monomial& b, AlgebraKind kind);

Monomial monomial_unit(AlgebraKind kind, int n_vars);
Monomial monomial_generator(AlgebraKind kind, int n_vars, int index); // 1-based index
Monomial monomial_mul(const Monomial& a, const Monomial& b, AlgebraKind kind);

struct MonomialOrder {
    AlgebraKind kind = AlgebraKind::commutative;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(a, b, kind);
    }
};

constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

/// Sparse element of the free algebra: finite sum of monomials with nonzero
/// exact coefficients, always kept in canonical form.
class AlgebraElement {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

    explicit AlgebraElement(const Context& ctx);

    static AlgebraElement zero(const Context& ctx) { return AlgebraElement(ctx); }
    static AlgebraElement one(const Context& ctx);
    static AlgebraElement constant(const Context& ctx, const Scalar& value);
    static AlgebraElement generator(const Context& ctx, int index); // 1-based
    static AlgebraElement monomial(const Context& ctx, const Monomial& m, const Scalar& coeff);

    const Context& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Degree of the zero element is the -infinity sentinel kDegreeNegInf.
    int degree() const;
    bool is_constant() const { return degree() <= 0; }
    Scalar constant_term() const;
    Scalar coefficient(const Monomial& m) const;
    /// True when some monomial involves generator `index` (1-based).
    bool involves(int index) const;

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const Scalar& rhs) const;
    AlgebraElement& operator+=(const AlgebraElement& rhs) { return *this = *this + rhs; }
    AlgebraElement& operator-=(const AlgebraElement& rhs) { return *this = *this - rhs; }
    AlgebraElement& operator*=(const AlgebraElement& rhs) { return *this = *this * rhs; }
    AlgebraElement pow(int exponent) const;

    /// Replaces every x_i by images[i-1]; the induced map is the P-algebra
    /// endomorphism fixing scalars.
    AlgebraElement substitute(std::span<const AlgebraElement> images) const;
    /// Word reversal with coefficients unchanged (associative kind only).
    AlgebraElement mirror() const;
    /// Applies the field automorphism to every coefficient (the natural
    /// extension of alpha to the whole algebra).
    AlgebraElement map_coefficients(const FieldAutomorphism& alpha) const;
    Scalar evaluate(std::span<const Scalar> point) const;

    std::string str() const;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    void insert_term(const Monomial& m, const Scalar& coeff);
    void require_same_context(const AlgebraElement& rhs) const;

    Context ctx_;
    TermMap terms_;
};

inline AlgebraElement operator*(const Scalar& lhs, const AlgebraElement& rhs) { return rhs * lhs; }

std::string monomial_str(const Monomial& m, AlgebraKind kind);

/// All monomials of total degree <= max_degree, in canonical order.
std::vector<Monomial> enumerate_monomials(const Context& ctx, int max_degree);

} // namespace endalg

#endif
