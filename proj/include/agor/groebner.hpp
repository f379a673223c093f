#pragma once

#include <optional>
#include <vector>

#include "agor/poly.hpp"

namespace agor {

// Reduced Groebner basis: monic elements, sorted descending by leading
// monomial, no term of any element divisible by another leading monomial.
// For a fixed ring and order this is the unique canonical form of the ideal.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;
    bool reduced = false;

    bool is_trivial() const; // contains 1
    bool operator==(const GroebnerBasis& o) const;
};

// Remainder of multivariate division of f by G; no term of the result is
// divisible by any leading monomial of G. normal_form(f,G)=0 iff f lies in
// the ideal when G is a Groebner basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis);

// Buchberger's algorithm with the coprime-lcm and chain criteria, normal
// pair selection (smallest lcm degree, then ring order, then insertion
// index), full inter-reduction at the end. Deterministic for a fixed
// generator sequence. Zero generators are ignored.
GroebnerBasis buchberger(const RingPtr& ring,
                         const std::vector<Polynomial>& gens);

struct StandardMonomialBasis {
    RingPtr ring;
    std::vector<Expvec> monomials;

    size_t dimension() const { return monomials.size(); }
    std::vector<size_t> count_by_degree() const;
};

// True iff for every variable some leading monomial of G is a pure power
// of it (the zero-dimensionality criterion for proper ideals).
bool is_zero_dimensional(const GroebnerBasis& G);

// All monomials not divisible by any leading monomial of G. Without a cap
// the ideal must be zero-dimensional; with a cap only monomials of total
// degree <= cap are returned.
StandardMonomialBasis standard_monomials(const GroebnerBasis& G,
                                         std::optional<uint32_t> degree_cap =
                                             std::nullopt);

} // namespace agor
