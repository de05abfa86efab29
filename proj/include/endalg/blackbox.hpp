#ifndef ENDALG_BLACKBOX_HPP
#define ENDALG_BLACKBOX_HPP

#include <optional>
#include <utility>

#include "endalg/bijection.hpp"

namespace endalg {

/// Finite record of an abstract bijection mu on probe inputs.  Keys are
/// pairwise distinct; lookup is exact.
class OracleTable {
public:
    explicit OracleTable(const Context& ctx) : ctx_(ctx) {}

    const Context& context() const { return ctx_; }
    const std::vector<std::pair<AlgebraElement, AlgebraElement>>& entries() const {
        return entries_;
    }

    void insert(AlgebraElement key, AlgebraElement value);
    std::optional<AlgebraElement> lookup(const AlgebraElement& key) const;

    std::string str() const; // "<expr> => <expr>" per line

private:
    Context ctx_;
    std::vector<std::pair<AlgebraElement, AlgebraElement>> entries_;
};

/// Builds the probe table for mu on {0, 1, x_i}, sqrt(d) over quadratic
/// fields, and the off-diagonal products x_i x_j.
OracleTable probe_table(const CanonicalQuasiInner& mu);

struct DecomposeResult {
    CanonicalQuasiInner canonical;
    std::string report;
    int violations = 0;
    /// Set when the associative product probes commute and the mirror flag
    /// fell back to false.
    bool mirror_defaulted = false;
};

/// Reconstructs the canonical form from an oracle table: linear part from
/// mu(0), mu(1); alpha from scalar probes; phi from the normalized generator
/// images, matched against `witness` when given, otherwise against a
/// recognizable single-generator automorphism; mirror flag from product
/// probes.  Every table entry is then re-checked against the result and
/// violations are reported, never repaired.
DecomposeResult decompose_blackbox(const OracleTable& table,
                                   const TameAutomorphism* witness = nullptr);

enum class LawStatus { pass, fail, not_checkable };

struct LawCheck {
    std::string law;
    LawStatus status = LawStatus::not_checkable;
    int checks = 0;
    std::string detail;
};

struct LawReport {
    std::vector<LawCheck> laws;
    const LawCheck& law(const std::string& name) const;
    std::string str() const;
};

/// Checks the table against the linearity laws: additivity, the scalar law
/// mu(a u) = mu(a) mu(u), proportionality of mu(a x_i) to x_i for
/// generator-fixing mu, and (anti-)multiplicativity.  Entries are first
/// normalized by the linear part read off mu(0), mu(1); laws without enough
/// probes report not_checkable, never a guess.
LawReport law_checks(const OracleTable& table);

/// Exact solutions of a = a^2, b = b^2, ab = 0, a + b = 1 over the field;
/// the only idempotents of a field are 0 and 1.
std::vector<std::pair<Scalar, Scalar>> solve_product_coefficients(const Field& field);

struct CentralityVerdict {
    enum class Kind { central_linear, central_nonbijective, not_central };
    Kind kind;
    std::string witness;
    std::string str() const;
};

/// Verdict for the unary candidate u -> sum coeffs[k] u^k, which commutes
/// with every substitution endomorphism structurally; bijectivity is decided
/// by degree, with an explicit collision or missing-preimage witness.
CentralityVerdict centrality_probe(const Context& ctx, const std::vector<Scalar>& coeffs);

/// Verdict for a table candidate: the collapse probes plus `extra_probes`
/// are searched for a commutation violation mu(s(u)) != s(mu(u)); with no
/// violation the table must fit a linear or unary model to be classified.
CentralityVerdict centrality_probe(const OracleTable& table,
                                   const std::vector<Endomorphism>& extra_probes = {});

struct BaseImageResult {
    bool is_base = false;
    TameAutomorphism witness;
    std::string detail;
};

/// Theorem-1 check: the images under mu of the base phi(x_i) again form a
/// base, certified by the composite witness automorphism.
BaseImageResult base_image_check(const CanonicalQuasiInner& mu, const TameAutomorphism& base);

} // namespace endalg

#endif
