#include "endalg/bijection.hpp"

namespace endalg {

AlgebraElement LinearBijection::apply(const AlgebraElement& f) const {
    return f * scale + AlgebraElement::constant(f.context(), offset);
}

LinearBijection LinearBijection::inverted() const {
    Scalar inv = scale.inverse();
    return LinearBijection{inv, -(inv * offset)};
}

LinearBijection linear_identity(const Field& field) {
    return LinearBijection{Scalar::one(field), Scalar::zero(field)};
}

PrimitiveBijection PrimitiveBijection::linear(const Context& ctx, const Scalar& scale,
                                              const Scalar& offset) {
    if (scale.field() != ctx.field || offset.field() != ctx.field)
        fail(Errc::context_mismatch, "linear bijection field mismatch");
    if (scale.is_zero())
        fail(Errc::invalid_argument, "linear bijection needs a nonzero scale");
    return PrimitiveBijection(ctx, LinearBijection{scale, offset});
}

PrimitiveBijection PrimitiveBijection::semilinear(const Context& ctx,
                                                  const FieldAutomorphism& alpha) {
    if (!alpha.is_identity() && !ctx.field.is_quadratic())
        fail(Errc::domain, "conjugation requested over Q");
    return PrimitiveBijection(ctx, alpha);
}

PrimitiveBijection PrimitiveBijection::algebra(TameAutomorphism phi) {
    Context ctx = phi.context();
    return PrimitiveBijection(ctx, std::move(phi));
}

PrimitiveBijection PrimitiveBijection::mirror(const Context& ctx) {
    if (ctx.kind != AlgebraKind::associative)
        fail(Errc::domain, "mirror bijection is defined on the associative kind only");
    return PrimitiveBijection(ctx, MirrorTag{});
}

AlgebraElement PrimitiveBijection::apply(const AlgebraElement& f) const {
    if (f.context() != ctx_)
        fail(Errc::context_mismatch, "element context mismatch");
    switch (rep_.index()) {
    case 0:
        return as_linear().apply(f);
    case 1:
        return f.map_coefficients(as_semilinear());
    case 2:
        return as_algebra().apply(f);
    default:
        return f.mirror();
    }
}

std::string PrimitiveBijection::str() const {
    switch (rep_.index()) {
    case 0:
        return as_linear().str();
    case 1:
        return "alpha(" + as_semilinear().str() + ")";
    case 2:
        return "auto[" + as_algebra().str() + "]";
    default:
        return "mirror";
    }
}

BijectionWord::BijectionWord(const Context& ctx, std::vector<PrimitiveBijection> word)
    : ctx_(ctx), word_(std::move(word)) {
    for (const PrimitiveBijection& primitive : word_)
        if (primitive.context() != ctx_)
            fail(Errc::context_mismatch, "primitive context mismatch");
}

AlgebraElement BijectionWord::apply(const AlgebraElement& f) const {
    AlgebraElement out = f;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it)
        out = it->apply(out);
    return out;
}

std::string BijectionWord::str() const {
    std::string out;
    for (const PrimitiveBijection& primitive : word_) {
        if (!out.empty())
            out += " . ";
        out += primitive.str();
    }
    return out;
}

CanonicalQuasiInner::CanonicalQuasiInner(const Context& ctx)
    : ctx_(ctx),
      linear_(linear_identity(ctx.field)),
      alpha_(FieldAutomorphism::identity()),
      phi_(ctx) {}

CanonicalQuasiInner::CanonicalQuasiInner(const Context& ctx, LinearBijection linear,
                                         FieldAutomorphism alpha, TameAutomorphism phi,
                                         bool mirror)
    : ctx_(ctx),
      linear_(std::move(linear)),
      alpha_(alpha),
      phi_(std::move(phi)),
      mirror_(mirror) {
    if (linear_.scale.is_zero())
        fail(Errc::invalid_argument, "canonical linear component needs a nonzero scale");
    if (linear_.scale.field() != ctx_.field || phi_.context() != ctx_)
        fail(Errc::context_mismatch, "canonical component context mismatch");
    if (!alpha_.is_identity() && !ctx_.field.is_quadratic())
        fail(Errc::domain, "conjugation requested over Q");
    if (mirror_ && ctx_.kind != AlgebraKind::associative)
        fail(Errc::domain, "mirror flag requires the associative kind");
}

CanonicalQuasiInner CanonicalQuasiInner::with_linear(const LinearBijection& linear) const {
    return CanonicalQuasiInner(ctx_, linear, alpha_, phi_, mirror_);
}

AlgebraElement CanonicalQuasiInner::apply(const AlgebraElement& f) const {
    AlgebraElement out = mirror_ ? f.mirror() : f;
    out = phi_.apply(out);
    out = out.map_coefficients(alpha_);
    return linear_.apply(out);
}

AlgebraElement CanonicalQuasiInner::apply_inverse(const AlgebraElement& f) const {
    AlgebraElement out = linear_.inverted().apply(f);
    out = out.map_coefficients(alpha_); // alpha is an involution
    out = phi_.inverted().apply(out);
    return mirror_ ? out.mirror() : out;
}

BijectionWord CanonicalQuasiInner::to_word() const {
    std::vector<PrimitiveBijection> word;
    word.push_back(PrimitiveBijection::linear(ctx_, linear_.scale, linear_.offset));
    word.push_back(PrimitiveBijection::semilinear(ctx_, alpha_));
    word.push_back(PrimitiveBijection::algebra(phi_));
    if (mirror_)
        word.push_back(PrimitiveBijection::mirror(ctx_));
    return BijectionWord(ctx_, std::move(word));
}

BijectionWord CanonicalQuasiInner::inverse_word() const {
    std::vector<PrimitiveBijection> word;
    if (mirror_)
        word.push_back(PrimitiveBijection::mirror(ctx_));
    word.push_back(PrimitiveBijection::algebra(phi_.inverted()));
    word.push_back(PrimitiveBijection::semilinear(ctx_, alpha_));
    LinearBijection inv = linear_.inverted();
    word.push_back(PrimitiveBijection::linear(ctx_, inv.scale, inv.offset));
    return BijectionWord(ctx_, std::move(word));
}

std::string CanonicalQuasiInner::str() const {
    return linear_.str() + " . alpha(" + alpha_.str() + ") . auto[" + phi_.str() + "] . mirror^" +
           (mirror_ ? "1" : "0");
}

namespace {

// Fuses two same-type neighbours [lhs, rhs] (rhs applied first) into at most
// one primitive.
std::vector<PrimitiveBijection> fuse(const PrimitiveBijection& lhs,
                                     const PrimitiveBijection& rhs) {
    const Context& ctx = lhs.context();
    if (lhs.is_mirror())
        return {}; // beta o beta = id
    if (lhs.is_linear()) {
        const LinearBijection& a = lhs.as_linear();
        const LinearBijection& b = rhs.as_linear();
        return {PrimitiveBijection::linear(ctx, a.scale * b.scale, a.scale * b.offset + a.offset)};
    }
    if (lhs.is_semilinear())
        return {PrimitiveBijection::semilinear(
            ctx, lhs.as_semilinear().composed_with(rhs.as_semilinear()))};
    return {PrimitiveBijection::algebra(compose(lhs.as_algebra(), rhs.as_algebra()))};
}

// Rewrites an out-of-order pair [lhs, rhs] (priority(lhs) > priority(rhs))
// into the equal composite [rhs', lhs'].
std::pair<PrimitiveBijection, PrimitiveBijection> swap_pair(const PrimitiveBijection& lhs,
                                                            const PrimitiveBijection& rhs) {
    const Context& ctx = lhs.context();
    if (rhs.is_linear()) {
        if (lhs.is_semilinear()) {
            // alpha_bar o linear(c,d) = linear(alpha c, alpha d) o alpha_bar
            const FieldAutomorphism& alpha = lhs.as_semilinear();
            const LinearBijection& l = rhs.as_linear();
            return {PrimitiveBijection::linear(ctx, alpha.apply(l.scale), alpha.apply(l.offset)),
                    lhs};
        }
        // phi and beta fix scalars, so they commute with linear maps
        return {rhs, lhs};
    }
    if (rhs.is_semilinear()) {
        const FieldAutomorphism& alpha = rhs.as_semilinear();
        if (lhs.is_algebra())
            // phi o alpha_bar = alpha_bar o phi^alpha
            return {rhs, PrimitiveBijection::algebra(lhs.as_algebra().twisted(alpha))};
        // beta o alpha_bar = alpha_bar o beta
        return {rhs, lhs};
    }
    // beta o phi = phi^beta o beta
    return {PrimitiveBijection::algebra(rhs.as_algebra().mirror_twisted()), lhs};
}

} // namespace

CanonicalQuasiInner normalize(const BijectionWord& word) {
    const Context& ctx = word.context();
    std::vector<PrimitiveBijection> v = word.word();

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i].priority() == v[i + 1].priority()) {
                auto fused = fuse(v[i], v[i + 1]);
                v.erase(v.begin() + i, v.begin() + i + 2);
                v.insert(v.begin() + i, fused.begin(), fused.end());
                changed = true;
                break;
            }
            if (v[i].priority() > v[i + 1].priority()) {
                auto [first, second] = swap_pair(v[i], v[i + 1]);
                v[i] = first;
                v[i + 1] = second;
                changed = true;
                break;
            }
        }
    }

    LinearBijection linear = linear_identity(ctx.field);
    FieldAutomorphism alpha = FieldAutomorphism::identity();
    TameAutomorphism phi(ctx);
    bool mirror = false;
    for (const PrimitiveBijection& primitive : v) {
        if (primitive.is_linear())
            linear = primitive.as_linear();
        else if (primitive.is_semilinear())
            alpha = primitive.as_semilinear();
        else if (primitive.is_algebra())
            phi = primitive.as_algebra();
        else
            mirror = true;
    }
    return CanonicalQuasiInner(ctx, linear, alpha, phi, mirror);
}

Endomorphism conjugate(const CanonicalQuasiInner& mu, const Endomorphism& s) {
    const Context& ctx = mu.context();
    if (s.context() != ctx)
        fail(Errc::context_mismatch, "endomorphism context mismatch");

    // materialize the tame parts once; the linear component cancels because
    // it commutes with every endomorphism
    Endomorphism phi = mu.phi().to_endomorphism();
    Endomorphism phi_inv = mu.phi().inverted().to_endomorphism();
    auto forward = [&](AlgebraElement f) {
        if (mu.mirror())
            f = f.mirror();
        f = phi.apply(f);
        return f.map_coefficients(mu.alpha());
    };
    auto backward = [&](AlgebraElement f) {
        f = f.map_coefficients(mu.alpha());
        f = phi_inv.apply(f);
        return mu.mirror() ? f.mirror() : f;
    };

    std::vector<AlgebraElement> images;
    images.reserve(ctx.n_vars);
    for (int i = 1; i <= ctx.n_vars; ++i)
        images.push_back(forward(s.apply(backward(AlgebraElement::generator(ctx, i)))));
    return Endomorphism(ctx, std::move(images));
}

AlgebraElement conjugate_apply(const CanonicalQuasiInner& mu, const Endomorphism& s,
                               const AlgebraElement& f) {
    return mu.apply(s.apply(mu.apply_inverse(f)));
}

} // namespace endalg
