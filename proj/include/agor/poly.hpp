#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "agor/field.hpp"

namespace agor {

using Expvec = std::vector<uint32_t>;

uint32_t total_degree(const Expvec& e);
bool divides(const Expvec& a, const Expvec& b); // a | b
Expvec exp_mul(const Expvec& a, const Expvec& b);
Expvec exp_div(const Expvec& a, const Expvec& b); // requires b | a
Expvec exp_lcm(const Expvec& a, const Expvec& b);
bool exp_coprime(const Expvec& a, const Expvec& b);

// Monomial orders. All are total, multiplicative well-orders.
// BlockElim(k) makes any monomial involving one of the first k variables
// larger than every monomial in the remaining variables.
enum class OrderKind { Grevlex, Lex, Grlex, BlockElim };

struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    size_t block = 0; // BlockElim only: number of leading variables eliminated

    static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grlex() { return {OrderKind::Grlex, 0}; }
    static MonomialOrder block_elim(size_t k) { return {OrderKind::BlockElim, k}; }

    bool operator==(const MonomialOrder&) const = default;

    // strict comparison: a < b in this order
    bool less(const Expvec& a, const Expvec& b) const;
    std::string str() const;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Polynomial ring: coefficient field, ordered variable list, monomial order.
// Immutable; shared by value through RingPtr.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(const Field& field, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::grevlex());

    const Field& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const MonomialOrder& order() const { return order_; }

    int var_index(const std::string& name) const; // -1 if absent
    bool same_as(const PolyRing& o) const;

    RingPtr with_order(const MonomialOrder& o) const;

private:
    PolyRing(const Field& f, std::vector<std::string> v, MonomialOrder o)
        : field_(f), vars_(std::move(v)), order_(o) {}

    Field field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

// Multivariate polynomial with exact coefficients. Terms are kept sorted
// in strictly descending ring order with no zero coefficients; the zero
// polynomial has no terms.
class Polynomial {
public:
    struct Term {
        Expvec exp;
        Scalar coef;
    };

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, const Scalar& c);
    static Polynomial constant(const RingPtr& ring, long n);
    static Polynomial variable(const RingPtr& ring, size_t idx);
    static Polynomial monomial(const RingPtr& ring, const Expvec& e,
                               const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    const Expvec& leading_exp() const;
    const Scalar& leading_coef() const;
    uint32_t degree() const; // max total degree; 0 for the zero polynomial
    bool is_homogeneous() const;
    bool is_constant() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial mul_term(const Expvec& e, const Scalar& c) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // exact division by a single term; throws if any term is not divisible
    Polynomial divide_by_term(const Expvec& e, const Scalar& c) const;

    Scalar coefficient(const Expvec& e) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    std::string str() const;

    // Builds a normalized polynomial from arbitrary (exp, coef) pairs.
    static Polynomial from_terms(const RingPtr& ring,
                                 std::vector<Term> terms);

private:
    void check_compatible(const Polynomial& o) const;

    RingPtr ring_;
    std::vector<Term> terms_; // descending in ring order
};

// f with variables substituted; unassigned variables map to themselves.
// All images must live in `target`, which must contain the unassigned
// variables of f by name.
Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& assignment,
                      const RingPtr& target);

// Convenience: substitution into f's own ring.
Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& assignment);

// Applies the invertible linear change x_i -> sum_j M[i][j] x_j to each
// generator. M must be square of size nvars with nonzero determinant.
std::vector<Polynomial> linear_change(const std::vector<Polynomial>& gens,
                                      const std::vector<std::vector<Scalar>>& M);

// Sets `var` to 1 and lands in the ring without it.
Polynomial dehomogenize(const Polynomial& f, const std::string& var,
                        const RingPtr& target);
RingPtr ring_without_var(const RingPtr& ring, const std::string& var);
RingPtr ring_with_prefix_var(const RingPtr& ring, const std::string& var,
                             MonomialOrder order);

// Homogenizes a single polynomial using `var` (which must be a variable of
// the target ring missing from f's support).
Polynomial homogenize(const Polynomial& f, const std::string& var,
                      const RingPtr& target);

} // namespace agor
