#include "endalg/endo.hpp"

namespace endalg {

Endomorphism::Endomorphism(const Context& ctx, std::vector<AlgebraElement> images)
    : ctx_(ctx), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != ctx_.n_vars)
        fail(Errc::invalid_argument,
             "endomorphism needs " + std::to_string(ctx_.n_vars) + " generator images");
    for (const AlgebraElement& image : images_)
        if (image.context() != ctx_)
            fail(Errc::context_mismatch, "image context mismatch");
}

Endomorphism Endomorphism::identity(const Context& ctx) {
    std::vector<AlgebraElement> images;
    images.reserve(ctx.n_vars);
    for (int i = 1; i <= ctx.n_vars; ++i)
        images.push_back(AlgebraElement::generator(ctx, i));
    return Endomorphism(ctx, std::move(images));
}

Endomorphism Endomorphism::constant(const Context& ctx, std::span<const Scalar> point) {
    if (static_cast<int>(point.size()) != ctx.n_vars)
        fail(Errc::invalid_argument, "point arity mismatch");
    std::vector<AlgebraElement> images;
    images.reserve(ctx.n_vars);
    for (const Scalar& value : point)
        images.push_back(AlgebraElement::constant(ctx, value));
    return Endomorphism(ctx, std::move(images));
}

AlgebraElement Endomorphism::apply(const AlgebraElement& f) const {
    if (f.context() != ctx_)
        fail(Errc::context_mismatch, "element context mismatch");
    return f.substitute(images_);
}

bool Endomorphism::is_constant() const {
    for (const AlgebraElement& image : images_)
        if (image.degree() > 0)
            return false;
    return true;
}

std::string Endomorphism::str() const {
    std::string out;
    for (int i = 1; i <= ctx_.n_vars; ++i) {
        if (i > 1)
            out += "; ";
        out += "x" + std::to_string(i) + " -> " + image(i).str();
    }
    return out;
}

Endomorphism compose(const Endomorphism& s, const Endomorphism& t) {
    if (s.context() != t.context())
        fail(Errc::context_mismatch, "endomorphism context mismatch");
    std::vector<AlgebraElement> images;
    images.reserve(t.images().size());
    for (const AlgebraElement& image : t.images())
        images.push_back(s.apply(image));
    return Endomorphism(s.context(), std::move(images));
}

Endomorphism collapse_probe(const Context& ctx, int j) {
    std::vector<AlgebraElement> images;
    images.reserve(ctx.n_vars);
    for (int i = 1; i <= ctx.n_vars; ++i)
        images.push_back(i == j ? AlgebraElement::generator(ctx, i) : AlgebraElement::zero(ctx));
    return Endomorphism(ctx, std::move(images));
}

Endomorphism one_slot_probe(const Context& ctx, int j, const AlgebraElement& u) {
    std::vector<AlgebraElement> images;
    images.reserve(ctx.n_vars);
    for (int i = 1; i <= ctx.n_vars; ++i)
        images.push_back(i == j ? u : AlgebraElement::generator(ctx, i));
    return Endomorphism(ctx, std::move(images));
}

std::vector<Endomorphism> theorem2_probe_set(const Context& ctx) {
    std::vector<Endomorphism> probes;
    probes.reserve(ctx.n_vars);
    for (int j = 1; j <= ctx.n_vars; ++j)
        probes.push_back(collapse_probe(ctx, j));
    return probes;
}

} // namespace endalg
