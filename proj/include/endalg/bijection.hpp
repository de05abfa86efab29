#ifndef ENDALG_BIJECTION_HPP
#define ENDALG_BIJECTION_HPP

#include <variant>

#include "endalg/tame.hpp"

namespace endalg {

/// u -> scale*u + offset with scale != 0.  Commutes with every endomorphism,
/// so it never changes a conjugation action.
struct LinearBijection {
    Scalar scale;
    Scalar offset;
    friend bool operator==(const LinearBijection&, const LinearBijection&) = default;

    AlgebraElement apply(const AlgebraElement& f) const;
    LinearBijection inverted() const;
    std::string str() const { return "linear(" + scale.str() + "," + offset.str() + ")"; }
};

LinearBijection linear_identity(const Field& field);

struct MirrorTag {
    friend bool operator==(const MirrorTag&, const MirrorTag&) = default;
};

/// One of the four bijection kinds that generate automorphisms of End(W):
/// linear, semilinear coefficient map, algebra automorphism, word mirror.
class PrimitiveBijection {
public:
    static PrimitiveBijection linear(const Context& ctx, const Scalar& scale,
                                     const Scalar& offset);
    static PrimitiveBijection semilinear(const Context& ctx, const FieldAutomorphism& alpha);
    static PrimitiveBijection algebra(TameAutomorphism phi);
    static PrimitiveBijection mirror(const Context& ctx);

    const Context& context() const { return ctx_; }
    /// Sorting key for the canonical component order linear < alpha < auto < mirror.
    int priority() const { return static_cast<int>(rep_.index()); }

    bool is_linear() const { return rep_.index() == 0; }
    bool is_semilinear() const { return rep_.index() == 1; }
    bool is_algebra() const { return rep_.index() == 2; }
    bool is_mirror() const { return rep_.index() == 3; }
    const LinearBijection& as_linear() const { return std::get<0>(rep_); }
    const FieldAutomorphism& as_semilinear() const { return std::get<1>(rep_); }
    const TameAutomorphism& as_algebra() const { return std::get<2>(rep_); }

    AlgebraElement apply(const AlgebraElement& f) const;
    std::string str() const;

    friend bool operator==(const PrimitiveBijection&, const PrimitiveBijection&) = default;

private:
    using Rep = std::variant<LinearBijection, FieldAutomorphism, TameAutomorphism, MirrorTag>;
    PrimitiveBijection(const Context& ctx, Rep rep) : ctx_(ctx), rep_(std::move(rep)) {}

    Context ctx_;
    Rep rep_;
};

/// Finite composition word of primitive bijections, applied right-to-left
/// (the last entry acts first).
class BijectionWord {
public:
    explicit BijectionWord(const Context& ctx) : ctx_(ctx) {}
    BijectionWord(const Context& ctx, std::vector<PrimitiveBijection> word);

    const Context& context() const { return ctx_; }
    const std::vector<PrimitiveBijection>& word() const { return word_; }

    AlgebraElement apply(const AlgebraElement& f) const;
    std::string str() const;

private:
    Context ctx_;
    std::vector<PrimitiveBijection> word_;
};

/// Normal form mu = linear o alpha_bar o phi o beta^mirror of a quasi-inner
/// generator.  mirror is always false in the commutative kind.
class CanonicalQuasiInner {
public:
    explicit CanonicalQuasiInner(const Context& ctx);
    CanonicalQuasiInner(const Context& ctx, LinearBijection linear, FieldAutomorphism alpha,
                        TameAutomorphism phi, bool mirror);

    static CanonicalQuasiInner identity(const Context& ctx) { return CanonicalQuasiInner(ctx); }

    const Context& context() const { return ctx_; }
    const LinearBijection& linear() const { return linear_; }
    const FieldAutomorphism& alpha() const { return alpha_; }
    const TameAutomorphism& phi() const { return phi_; }
    bool mirror() const { return mirror_; }

    /// Replaces the linear component; the conjugation action is unchanged.
    CanonicalQuasiInner with_linear(const LinearBijection& linear) const;

    AlgebraElement apply(const AlgebraElement& f) const;
    AlgebraElement apply_inverse(const AlgebraElement& f) const;
    BijectionWord to_word() const;
    BijectionWord inverse_word() const;

    std::string str() const;
    friend bool operator==(const CanonicalQuasiInner&, const CanonicalQuasiInner&) = default;

private:
    Context ctx_;
    LinearBijection linear_;
    FieldAutomorphism alpha_;
    TameAutomorphism phi_;
    bool mirror_ = false;
};

/// Rewrites a bijection word into canonical order by the normalizer
/// relations: mirror*mirror -> empty, alpha_bar o phi -> phi^alpha o
/// alpha_bar, beta o phi -> phi^beta o beta, beta o alpha_bar -> alpha_bar o
/// beta, linear commutes with phi and beta, alpha_bar o linear(c,d) ->
/// linear(alpha c, alpha d) o alpha_bar, and same-type neighbours fuse.
/// Each pass strictly shrinks (word length, type inversions), so it stops.
CanonicalQuasiInner normalize(const BijectionWord& word);

/// Def.-1 conjugation s^tau = mu o s o mu^(-1), computed on generator images.
/// The result is a genuine substitution endomorphism fixing every scalar.
Endomorphism conjugate(const CanonicalQuasiInner& mu, const Endomorphism& s);

/// mu(s(mu^(-1)(f))) without building the endomorphism; test oracle for
/// conjugate().
AlgebraElement conjugate_apply(const CanonicalQuasiInner& mu, const Endomorphism& s,
                               const AlgebraElement& f);

} // namespace endalg

#endif
