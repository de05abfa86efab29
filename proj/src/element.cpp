#include "endalg/element.hpp"

#include <algorithm>
#include <numeric>

namespace endalg {

std::string Context::str() const {
    return kind_str(kind) + " n=" + std::to_string(n_vars) + " " + field.str() +
           " D=" + std::to_string(max_degree);
}

Context make_context(AlgebraKind kind, int n_vars, const Field& field, int max_degree) {
    if (n_vars < 1)
        fail(Errc::invalid_argument, "need at least one generator");
    if (max_degree < 1)
        fail(Errc::invalid_argument, "degree cap must be at least 1");
    return Context{kind, n_vars, field, max_degree};
}

int monomial_degree(const Monomial& m, AlgebraKind kind) {
    if (kind == AlgebraKind::associative)
        return static_cast<int>(m.v.size());
    return std::accumulate(m.v.begin(), m.v.end(), 0);
}

bool monomial_less(const Monomial& a, const Monomial& b, AlgebraKind kind) {
    int da = monomial_degree(a, kind);
    int db = monomial_degree(b, kind);
    if (da != db)
        return da < db;
    if (kind == AlgebraKind::commutative)
        return a.v < b.v;
    // equal length words: lower letter index means higher generator (x1 > x2),
    // so the lexicographically larger index sequence is the smaller word
    return a.v > b.v;
}

Monomial monomial_unit(AlgebraKind kind, int n_vars) {
    Monomial m;
    if (kind == AlgebraKind::commutative)
        m.v.assign(n_vars, 0);
    return m;
}

Monomial monomial_generator(AlgebraKind kind, int n_vars, int index) {
    if (index < 1 || index > n_vars)
        fail(Errc::invalid_argument, "generator index out of range: " + std::to_string(index));
    Monomial m = monomial_unit(kind, n_vars);
    if (kind == AlgebraKind::commutative)
        m.v[index - 1] = 1;
    else
        m.v.push_back(static_cast<std::uint32_t>(index - 1));
    return m;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b, AlgebraKind kind) {
    Monomial out = a;
    if (kind == AlgebraKind::commutative) {
        for (size_t i = 0; i < out.v.size(); ++i)
            out.v[i] += b.v[i];
    } else {
        out.v.insert(out.v.end(), b.v.begin(), b.v.end());
    }
    return out;
}

AlgebraElement::AlgebraElement(const Context& ctx)
    : ctx_(ctx), terms_(MonomialOrder{ctx.kind}) {}

AlgebraElement AlgebraElement::one(const Context& ctx) {
    return constant(ctx, Scalar::one(ctx.field));
}

AlgebraElement AlgebraElement::constant(const Context& ctx, const Scalar& value) {
    if (value.field() != ctx.field)
        fail(Errc::context_mismatch, "scalar field does not match context");
    AlgebraElement out(ctx);
    out.insert_term(monomial_unit(ctx.kind, ctx.n_vars), value);
    return out;
}

AlgebraElement AlgebraElement::generator(const Context& ctx, int index) {
    AlgebraElement out(ctx);
    out.insert_term(monomial_generator(ctx.kind, ctx.n_vars, index), Scalar::one(ctx.field));
    return out;
}

AlgebraElement AlgebraElement::monomial(const Context& ctx, const Monomial& m,
                                        const Scalar& coeff) {
    AlgebraElement out(ctx);
    out.insert_term(m, coeff);
    return out;
}

void AlgebraElement::insert_term(const Monomial& m, const Scalar& coeff) {
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void AlgebraElement::require_same_context(const AlgebraElement& rhs) const {
    if (ctx_ != rhs.ctx_)
        fail(Errc::context_mismatch, "algebra context mismatch: " + ctx_.str() + " vs " + rhs.ctx_.str());
}

int AlgebraElement::degree() const {
    if (terms_.empty())
        return kDegreeNegInf;
    // graded order: the last term carries the maximal degree
    return monomial_degree(terms_.rbegin()->first, ctx_.kind);
}

Scalar AlgebraElement::constant_term() const {
    return coefficient(monomial_unit(ctx_.kind, ctx_.n_vars));
}

Scalar AlgebraElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ctx_.field) : it->second;
}

bool AlgebraElement::involves(int index) const {
    auto letter = static_cast<std::uint32_t>(index - 1);
    for (const auto& [mono, coeff] : terms_) {
        if (ctx_.kind == AlgebraKind::commutative) {
            if (mono.v[index - 1] != 0)
                return true;
        } else if (std::find(mono.v.begin(), mono.v.end(), letter) != mono.v.end()) {
            return true;
        }
    }
    return false;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out(ctx_);
    for (const auto& [mono, coeff] : terms_)
        out.terms_.emplace(mono, -coeff);
    return out;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    require_same_context(rhs);
    AlgebraElement out = *this;
    for (const auto& [mono, coeff] : rhs.terms_)
        out.insert_term(mono, coeff);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
    require_same_context(rhs);
    AlgebraElement out = *this;
    for (const auto& [mono, coeff] : rhs.terms_)
        out.insert_term(mono, -coeff);
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
    require_same_context(rhs);
    AlgebraElement out(ctx_);
    if (is_zero() || rhs.is_zero())
        return out;
    // both free algebras are domains, so the product degree is exactly the sum
    if (degree() + rhs.degree() > ctx_.max_degree)
        fail(Errc::degree_cap, "product degree " + std::to_string(degree() + rhs.degree()) +
                                   " exceeds cap " + std::to_string(ctx_.max_degree));
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.insert_term(monomial_mul(ma, mb, ctx_.kind), ca * cb);
    return out;
}

AlgebraElement AlgebraElement::operator*(const Scalar& rhs) const {
    if (rhs.field() != ctx_.field)
        fail(Errc::context_mismatch, "scalar field does not match context");
    AlgebraElement out(ctx_);
    if (rhs.is_zero())
        return out;
    for (const auto& [mono, coeff] : terms_)
        out.terms_.emplace(mono, coeff * rhs);
    return out;
}

AlgebraElement AlgebraElement::pow(int exponent) const {
    if (exponent < 0)
        fail(Errc::invalid_argument, "negative exponent");
    AlgebraElement out = one(ctx_);
    for (int k = 0; k < exponent; ++k)
        out *= *this;
    return out;
}

AlgebraElement AlgebraElement::substitute(std::span<const AlgebraElement> images) const {
    if (static_cast<int>(images.size()) != ctx_.n_vars)
        fail(Errc::invalid_argument, "expected " + std::to_string(ctx_.n_vars) + " images");
    for (const AlgebraElement& image : images)
        require_same_context(image);

    AlgebraElement out(ctx_);
    if (ctx_.kind == AlgebraKind::commutative) {
        // cache image powers across terms
        std::vector<std::vector<AlgebraElement>> powers(ctx_.n_vars, {one(ctx_)});
        auto power = [&](int i, std::uint32_t e) -> const AlgebraElement& {
            auto& cache = powers[i];
            while (cache.size() <= e)
                cache.push_back(cache.back() * images[i]);
            return cache[e];
        };
        for (const auto& [mono, coeff] : terms_) {
            AlgebraElement term = constant(ctx_, coeff);
            for (int i = 0; i < ctx_.n_vars; ++i)
                if (mono.v[i] != 0)
                    term *= power(i, mono.v[i]);
            out += term;
        }
    } else {
        for (const auto& [mono, coeff] : terms_) {
            AlgebraElement term = constant(ctx_, coeff);
            for (std::uint32_t letter : mono.v)
                term *= images[letter];
            out += term;
        }
    }
    return out;
}

AlgebraElement AlgebraElement::mirror() const {
    if (ctx_.kind != AlgebraKind::associative)
        fail(Errc::domain, "mirror is defined on the associative kind only");
    AlgebraElement out(ctx_);
    for (const auto& [mono, coeff] : terms_) {
        Monomial reversed = mono;
        std::reverse(reversed.v.begin(), reversed.v.end());
        out.terms_.emplace(reversed, coeff);
    }
    return out;
}

AlgebraElement AlgebraElement::map_coefficients(const FieldAutomorphism& alpha) const {
    if (alpha.is_identity())
        return *this;
    AlgebraElement out(ctx_);
    for (const auto& [mono, coeff] : terms_)
        out.terms_.emplace(mono, alpha.apply(coeff));
    return out;
}

Scalar AlgebraElement::evaluate(std::span<const Scalar> point) const {
    if (static_cast<int>(point.size()) != ctx_.n_vars)
        fail(Errc::invalid_argument, "expected " + std::to_string(ctx_.n_vars) + " coordinates");
    for (const Scalar& coordinate : point)
        if (coordinate.field() != ctx_.field)
            fail(Errc::context_mismatch, "point field does not match context");

    Scalar total = Scalar::zero(ctx_.field);
    for (const auto& [mono, coeff] : terms_) {
        Scalar value = coeff;
        if (ctx_.kind == AlgebraKind::commutative) {
            for (int i = 0; i < ctx_.n_vars; ++i)
                for (std::uint32_t k = 0; k < mono.v[i]; ++k)
                    value *= point[i];
        } else {
            for (std::uint32_t letter : mono.v)
                value *= point[letter];
        }
        total += value;
    }
    return total;
}

std::string monomial_str(const Monomial& m, AlgebraKind kind) {
    std::string out;
    auto append = [&](int index, std::uint32_t exponent) {
        if (exponent == 0)
            return;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(index);
        if (exponent > 1)
            out += "^" + std::to_string(exponent);
    };
    if (kind == AlgebraKind::commutative) {
        for (size_t i = 0; i < m.v.size(); ++i)
            append(static_cast<int>(i) + 1, m.v[i]);
    } else {
        size_t i = 0;
        while (i < m.v.size()) {
            size_t j = i;
            while (j < m.v.size() && m.v[j] == m.v[i])
                ++j;
            append(static_cast<int>(m.v[i]) + 1, static_cast<std::uint32_t>(j - i));
            i = j;
        }
    }
    return out;
}

std::string AlgebraElement::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    // highest-degree terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, coeff] = *it;
        std::string ms = monomial_str(mono, ctx_.kind);
        bool negative = false;
        std::string cs;
        if (coeff.is_rational()) {
            negative = coeff.rational_part() < 0;
            Rational magnitude = negative ? -coeff.rational_part() : coeff.rational_part();
            if (magnitude != 1 || ms.empty())
                cs = rational_str(magnitude);
        } else if (coeff.rational_part() == 0) {
            negative = coeff.radical_part() < 0;
            Rational magnitude = negative ? -coeff.radical_part() : coeff.radical_part();
            cs = magnitude == 1 ? "s" : rational_str(magnitude) + "*s";
        } else {
            cs = "(" + coeff.str() + ")";
        }
        std::string term = cs.empty() ? ms : ms.empty() ? cs : cs + "*" + ms;
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

namespace {

void enumerate_comm(const Context& ctx, int var, int remaining, Monomial& current,
                    std::vector<Monomial>& out) {
    if (var == ctx.n_vars) {
        out.push_back(current);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        current.v[var] = static_cast<std::uint32_t>(e);
        enumerate_comm(ctx, var + 1, remaining - e, current, out);
    }
    current.v[var] = 0;
}

} // namespace

std::vector<Monomial> enumerate_monomials(const Context& ctx, int max_degree) {
    std::vector<Monomial> out;
    if (ctx.kind == AlgebraKind::commutative) {
        Monomial current = monomial_unit(ctx.kind, ctx.n_vars);
        enumerate_comm(ctx, 0, max_degree, current, out);
    } else {
        std::vector<Monomial> level{monomial_unit(ctx.kind, ctx.n_vars)};
        out = level;
        for (int length = 1; length <= max_degree; ++length) {
            std::vector<Monomial> next;
            for (const Monomial& word : level)
                for (int letter = 0; letter < ctx.n_vars; ++letter) {
                    Monomial extended = word;
                    extended.v.push_back(static_cast<std::uint32_t>(letter));
                    next.push_back(extended);
                }
            out.insert(out.end(), next.begin(), next.end());
            level = std::move(next);
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return monomial_less(a, b, ctx.kind); });
    return out;
}

} // namespace endalg
