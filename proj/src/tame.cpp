#include "endalg/tame.hpp"

namespace endalg {

std::optional<ScalarMatrix> try_invert_matrix(const ScalarMatrix& m, const Field& field) {
    const size_t n = m.size();
    ScalarMatrix work = m;
    ScalarMatrix inv(n, std::vector<Scalar>(n, Scalar::zero(field)));
    for (size_t i = 0; i < n; ++i)
        inv[i][i] = Scalar::one(field);

    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar scale = work[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            work[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || work[row][col].is_zero())
                continue;
            Scalar factor = work[row][col];
            for (size_t j = 0; j < n; ++j) {
                work[row][j] -= factor * work[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

TameGenerator TameGenerator::affine(const Context& ctx, ScalarMatrix matrix,
                                    std::vector<Scalar> shift) {
    const size_t n = static_cast<size_t>(ctx.n_vars);
    if (matrix.size() != n || shift.size() != n)
        fail(Errc::invalid_argument, "affine generator needs an n x n matrix and n shifts");
    for (const auto& row : matrix) {
        if (row.size() != n)
            fail(Errc::invalid_argument, "affine matrix is not square");
        for (const Scalar& entry : row)
            if (entry.field() != ctx.field)
                fail(Errc::context_mismatch, "matrix entry field mismatch");
    }
    for (const Scalar& entry : shift)
        if (entry.field() != ctx.field)
            fail(Errc::context_mismatch, "shift entry field mismatch");
    if (!try_invert_matrix(matrix, ctx.field))
        fail(Errc::singular_matrix, "affine generator matrix is singular");
    return TameGenerator(ctx, AffineMap{std::move(matrix), std::move(shift)});
}

TameGenerator TameGenerator::elementary(const Context& ctx, int index, AlgebraElement addend) {
    if (index < 1 || index > ctx.n_vars)
        fail(Errc::invalid_argument, "elementary index out of range");
    if (addend.context() != ctx)
        fail(Errc::context_mismatch, "addend context mismatch");
    if (addend.involves(index))
        fail(Errc::invalid_argument,
             "elementary addend must not involve x" + std::to_string(index));
    return TameGenerator(ctx, TriangularShift{index, std::move(addend)});
}

Endomorphism TameGenerator::to_endomorphism() const {
    std::vector<AlgebraElement> images;
    images.reserve(ctx_.n_vars);
    if (is_affine()) {
        const AffineMap& map = as_affine();
        for (int i = 0; i < ctx_.n_vars; ++i) {
            AlgebraElement image = AlgebraElement::constant(ctx_, map.shift[i]);
            for (int j = 0; j < ctx_.n_vars; ++j)
                image += AlgebraElement::generator(ctx_, j + 1) * map.matrix[i][j];
            images.push_back(image);
        }
    } else {
        const TriangularShift& shift = as_elementary();
        for (int i = 1; i <= ctx_.n_vars; ++i) {
            AlgebraElement image = AlgebraElement::generator(ctx_, i);
            if (i == shift.index)
                image += shift.addend;
            images.push_back(image);
        }
    }
    return Endomorphism(ctx_, std::move(images));
}

TameGenerator TameGenerator::inverted() const {
    if (is_affine()) {
        const AffineMap& map = as_affine();
        ScalarMatrix inverse = *try_invert_matrix(map.matrix, ctx_.field);
        // x = A y + b  =>  y = A^{-1} x - A^{-1} b
        std::vector<Scalar> shift;
        shift.reserve(ctx_.n_vars);
        for (int i = 0; i < ctx_.n_vars; ++i) {
            Scalar value = Scalar::zero(ctx_.field);
            for (int j = 0; j < ctx_.n_vars; ++j)
                value += inverse[i][j] * map.shift[j];
            shift.push_back(-value);
        }
        return TameGenerator(ctx_, AffineMap{std::move(inverse), std::move(shift)});
    }
    const TriangularShift& shift = as_elementary();
    return TameGenerator(ctx_, TriangularShift{shift.index, -shift.addend});
}

TameGenerator TameGenerator::twisted(const FieldAutomorphism& alpha) const {
    if (alpha.is_identity())
        return *this;
    if (is_affine()) {
        AffineMap map = as_affine();
        for (auto& row : map.matrix)
            for (Scalar& entry : row)
                entry = alpha.apply(entry);
        for (Scalar& entry : map.shift)
            entry = alpha.apply(entry);
        return TameGenerator(ctx_, std::move(map));
    }
    TriangularShift shift = as_elementary();
    shift.addend = shift.addend.map_coefficients(alpha);
    return TameGenerator(ctx_, std::move(shift));
}

TameGenerator TameGenerator::mirror_twisted() const {
    if (ctx_.kind != AlgebraKind::associative)
        fail(Errc::domain, "mirror twist is defined on the associative kind only");
    if (is_affine())
        return *this; // degree <= 1 images are mirror-fixed
    TriangularShift shift = as_elementary();
    shift.addend = shift.addend.mirror();
    return TameGenerator(ctx_, std::move(shift));
}

std::string TameGenerator::str() const {
    if (is_affine()) {
        const AffineMap& map = as_affine();
        std::string out = "affine [";
        for (int i = 0; i < ctx_.n_vars; ++i) {
            out += i == 0 ? "[" : ",[";
            for (int j = 0; j < ctx_.n_vars; ++j)
                out += (j == 0 ? "" : ",") + map.matrix[i][j].str();
            out += "]";
        }
        out += "] + [";
        for (int i = 0; i < ctx_.n_vars; ++i)
            out += (i == 0 ? "" : ",") + map.shift[i].str();
        return out + "]";
    }
    const TriangularShift& shift = as_elementary();
    return "elem " + std::to_string(shift.index) + " " + shift.addend.str();
}

TameAutomorphism::TameAutomorphism(const Context& ctx, std::vector<TameGenerator> word)
    : ctx_(ctx), word_(std::move(word)) {
    for (const TameGenerator& generator : word_)
        if (generator.context() != ctx_)
            fail(Errc::context_mismatch, "generator context mismatch");
}

Endomorphism TameAutomorphism::to_endomorphism() const {
    Endomorphism out = Endomorphism::identity(ctx_);
    for (const TameGenerator& generator : word_)
        out = compose(out, generator.to_endomorphism());
    return out;
}

AlgebraElement TameAutomorphism::apply(const AlgebraElement& f) const {
    return to_endomorphism().apply(f);
}

TameAutomorphism TameAutomorphism::inverted() const {
    std::vector<TameGenerator> word;
    word.reserve(word_.size());
    for (auto it = word_.rbegin(); it != word_.rend(); ++it)
        word.push_back(it->inverted());
    return TameAutomorphism(ctx_, std::move(word));
}

TameAutomorphism TameAutomorphism::twisted(const FieldAutomorphism& alpha) const {
    std::vector<TameGenerator> word;
    word.reserve(word_.size());
    for (const TameGenerator& generator : word_)
        word.push_back(generator.twisted(alpha));
    return TameAutomorphism(ctx_, std::move(word));
}

TameAutomorphism TameAutomorphism::mirror_twisted() const {
    std::vector<TameGenerator> word;
    word.reserve(word_.size());
    for (const TameGenerator& generator : word_)
        word.push_back(generator.mirror_twisted());
    return TameAutomorphism(ctx_, std::move(word));
}

std::string TameAutomorphism::str() const {
    std::string out;
    for (const TameGenerator& generator : word_) {
        if (!out.empty())
            out += "; ";
        out += generator.str();
    }
    return out;
}

TameAutomorphism compose(const TameAutomorphism& phi, const TameAutomorphism& psi) {
    if (phi.context() != psi.context())
        fail(Errc::context_mismatch, "automorphism context mismatch");
    std::vector<TameGenerator> word = phi.word();
    word.insert(word.end(), psi.word().begin(), psi.word().end());
    return TameAutomorphism(phi.context(), std::move(word));
}

} // namespace endalg
