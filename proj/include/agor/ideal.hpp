#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "agor/groebner.hpp"

namespace agor {

// Reserved auxiliary variable used by the intersection construction;
// forbidden in user rings fed to ideal operations that need it.
inline constexpr const char* kAuxVar = "@t";

// An ideal given by generators, with a lazily computed reduced Groebner
// basis cached on first use. Values are immutable after construction.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
    static Ideal unit(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    const GroebnerBasis& groebner() const;
    bool contains(const Polynomial& f) const;
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return groebner().is_trivial(); }
    bool same_ideal(const Ideal& o) const;
    bool is_homogeneous_gens() const; // every generator homogeneous

    // Canonical presentation: generators replaced by the reduced basis.
    Ideal canonical() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<const GroebnerBasis> gb_;
};

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
// exponent 0 yields the unit ideal (1); callers may treat that specially
Ideal ideal_power(const Ideal& I, unsigned e);

// I cap J via a single auxiliary variable and block elimination.
Ideal intersect(const Ideal& I, const Ideal& J);

// I : J = { f : f J in I }. J must be nonzero.
Ideal colon(const Ideal& I, const Ideal& J);
Ideal colon(const Ideal& I, const Polynomial& f);

// Iterates I := I : J until stable (reduced-basis equality). Throws after
// 50 iterations.
Ideal saturate(const Ideal& I, const Ideal& J);

// dim_k of the degree-t slice of a homogeneous ideal, by the rank of the
// coefficient matrix of { m g : g generator, deg(m g) = t }. No Groebner
// basis involved.
size_t graded_component_dim(const Ideal& I, uint32_t t);

// Number of monomials of degree t in n variables.
size_t monomial_count(size_t nvars, uint32_t t);
std::vector<Expvec> monomials_of_degree(size_t nvars, uint32_t t);

// Generators of I cap k[remaining variables] after dropping the first k
// variables of the ring; recomputes a basis in a block order internally.
Ideal eliminate(const Ideal& I, size_t first_k, const RingPtr& target);
Ideal eliminate(const Ideal& I, size_t first_k);

// Preimage construction: kernel-style computation of the relations among
// `images` modulo target_gens. The images live in the source ring; the
// result lives in a fresh ring on the image variable names. When
// target_gens are homogeneous and all images share one degree (projective
// cone data), the result is saturated by the irrelevant ideal.
Ideal ring_map_kernel(const std::vector<Polynomial>& target_gens,
                      const std::vector<std::pair<std::string, Polynomial>>&
                          images);

// Ideal of the whole variable set (the irrelevant maximal ideal).
Ideal irrelevant_ideal(const RingPtr& ring);

} // namespace agor
