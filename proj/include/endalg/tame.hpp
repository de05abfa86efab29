#ifndef ENDALG_TAME_HPP
#define ENDALG_TAME_HPP

#include <optional>
#include <variant>
#include <vector>

#include "endalg/endo.hpp"

namespace endalg {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Exact Gauss-Jordan inverse; empty when the matrix is singular.
std::optional<ScalarMatrix> try_invert_matrix(const ScalarMatrix& m, const Field& field);

/// x_i -> sum_j matrix[i][j] x_j + shift[i]; the matrix must be invertible.
struct AffineMap {
    ScalarMatrix matrix;
    std::vector<Scalar> shift;
    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// x_index -> x_index + addend, other generators fixed; the addend must not
/// involve x_index, which makes the map triangular and trivially invertible.
struct TriangularShift {
    int index = 1; // 1-based
    AlgebraElement addend;
    friend bool operator==(const TriangularShift&, const TriangularShift&) = default;
};

/// One invertible building block of a tame automorphism.
class TameGenerator {
public:
    static TameGenerator affine(const Context& ctx, ScalarMatrix matrix,
                                std::vector<Scalar> shift);
    static TameGenerator elementary(const Context& ctx, int index, AlgebraElement addend);

    const Context& context() const { return ctx_; }
    bool is_affine() const { return std::holds_alternative<AffineMap>(rep_); }
    const AffineMap& as_affine() const { return std::get<AffineMap>(rep_); }
    const TriangularShift& as_elementary() const { return std::get<TriangularShift>(rep_); }

    Endomorphism to_endomorphism() const;
    TameGenerator inverted() const;
    TameGenerator twisted(const FieldAutomorphism& alpha) const;
    TameGenerator mirror_twisted() const;

    std::string str() const;
    friend bool operator==(const TameGenerator&, const TameGenerator&) = default;

private:
    TameGenerator(const Context& ctx, std::variant<AffineMap, TriangularShift> rep)
        : ctx_(ctx), rep_(std::move(rep)) {}

    Context ctx_;
    std::variant<AffineMap, TriangularShift> rep_;
};

/// Automorphism of W(X) given generatively as a word of invertible
/// generators, applied right-to-left (the last entry acts first).  Inverses
/// are exact and free: reverse the word and invert each generator.
class TameAutomorphism {
public:
    explicit TameAutomorphism(const Context& ctx) : ctx_(ctx) {}
    TameAutomorphism(const Context& ctx, std::vector<TameGenerator> word);

    static TameAutomorphism identity(const Context& ctx) { return TameAutomorphism(ctx); }

    const Context& context() const { return ctx_; }
    const std::vector<TameGenerator>& word() const { return word_; }
    bool is_identity_word() const { return word_.empty(); }

    Endomorphism to_endomorphism() const;
    AlgebraElement apply(const AlgebraElement& f) const;
    TameAutomorphism inverted() const;
    /// Coefficient twist phi^alpha with alpha_bar o phi = phi^alpha o alpha_bar.
    TameAutomorphism twisted(const FieldAutomorphism& alpha) const;
    /// Mirror twist phi^beta with beta o phi = phi^beta o beta (associative only).
    TameAutomorphism mirror_twisted() const;

    std::string str() const;
    friend bool operator==(const TameAutomorphism&, const TameAutomorphism&) = default;

private:
    Context ctx_;
    std::vector<TameGenerator> word_;
};

/// compose(phi, psi) applies psi first; the word is the concatenation.
TameAutomorphism compose(const TameAutomorphism& phi, const TameAutomorphism& psi);

/// A basic element u = phi(x_index) together with the base that witnesses it.
struct BasicElementWitness {
    TameAutomorphism phi;
    int index = 1; // 1-based

    AlgebraElement element() const { return phi.to_endomorphism().image(index); }
};

} // namespace endalg

#endif
