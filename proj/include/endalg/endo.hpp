#ifndef ENDALG_ENDO_HPP
#define ENDALG_ENDO_HPP

#include <span>
#include <string>
#include <vector>

#include "endalg/element.hpp"

namespace endalg {

/// Substitution endomorphism of the free algebra, given by its generator
/// images.  Fixes every scalar by construction; equality is exact equality
/// of all images.
class Endomorphism {
public:
    Endomorphism(const Context& ctx, std::vector<AlgebraElement> images);

    static Endomorphism identity(const Context& ctx);
    static Endomorphism constant(const Context& ctx, std::span<const Scalar> point);

    const Context& context() const { return ctx_; }
    const std::vector<AlgebraElement>& images() const { return images_; }
    const AlgebraElement& image(int index) const { return images_.at(index - 1); } // 1-based

    AlgebraElement apply(const AlgebraElement& f) const;
    bool is_constant() const;

    std::string str() const;

    friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

private:
    Context ctx_;
    std::vector<AlgebraElement> images_;
};

/// compose(s, t)(f) = s(t(f)): t acts first.  This matches the paper-style
/// juxtaposition st where s is applied to t's output.
Endomorphism compose(const Endomorphism& s, const Endomorphism& t);

/// Collapse probe: x_j -> x_j, every other generator -> 0.
Endomorphism collapse_probe(const Context& ctx, int j);

/// One-slot probe: x_j -> u, every other generator fixed.
Endomorphism one_slot_probe(const Context& ctx, int j, const AlgebraElement& u);

/// The collapse probes for every generator index, in order.
std::vector<Endomorphism> theorem2_probe_set(const Context& ctx);

} // namespace endalg

#endif
