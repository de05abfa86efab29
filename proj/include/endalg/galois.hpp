#ifndef ENDALG_GALOIS_HPP
#define ENDALG_GALOIS_HPP

#include <span>

#include "endalg/tame.hpp"

namespace endalg {

/// Principal ideal <u> generated by a basic element u = phi(x_index); the
/// witness base makes membership decidable by coordinate change.  Two-sided
/// in the associative kind.
struct PrincipalBasicIdeal {
    BasicElementWitness witness;
    AlgebraElement generator() const { return witness.element(); }
};

/// T' membership: eta lies in the prime set of T iff it kills every
/// generator (sufficient for the generated ideal, eta being a homomorphism).
bool in_prime_set(std::span<const AlgebraElement> generators, const Endomorphism& eta);

/// <u>'' membership via Lemma 3.1: pull f back through the witness base and
/// substitute 0 for x_index; f belongs to <u>'' = <u> iff the result is 0.
bool in_double_prime(const AlgebraElement& f, const PrincipalBasicIdeal& ideal);

/// Sampled A' membership: every endomorphism of the finite sample kills f.
/// Over-approximates membership in the ideal of the full prime set.
bool sample_ideal(std::span<const Endomorphism> sample, const AlgebraElement& f);

} // namespace endalg

#endif
