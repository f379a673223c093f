#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agor/ideal.hpp"

namespace agor {

// Isomorphism-class label of an Artinian Gorenstein algebra of degree <= 6:
// a multiset of atoms A(n,d) plus the two special degree-6 classes.
struct LabelAtom {
    enum Kind { And, A1sp, A2sp } kind = And;
    int n = 0, d = 1; // meaningful for kind == And

    int degree() const { return kind == And ? d : 6; }
    std::string str() const;
    bool operator==(const LabelAtom&) const = default;
    bool operator<(const LabelAtom& o) const;
};

struct AlgebraLabel {
    std::vector<LabelAtom> atoms; // kept sorted

    static AlgebraLabel atom(LabelAtom a) { return AlgebraLabel{{a}}; }
    static AlgebraLabel parse(const std::string& text);

    void normalize();
    int degree() const;
    std::string str() const;
    bool operator==(const AlgebraLabel& o) const { return atoms == o.atoms; }
    bool operator<(const AlgebraLabel& o) const { return atoms < o.atoms; }
};

// Invariants of a finite-dimensional local quotient algebra.
struct ArtinianReport {
    size_t dim = 0;                  // dim_k of the quotient
    std::vector<size_t> hilbert;     // maximal-ideal filtration dimensions
    size_t level = 0;                // largest e with M^e != 0
    size_t socle_dim = 0;
    bool gorenstein = false;
    std::optional<AlgebraLabel> label;
};

// The quotient algebra A = ring/I of a zero-dimensional ideal, with its
// standard monomial basis and exact coordinate arithmetic.
class QuotientAlgebra {
public:
    explicit QuotientAlgebra(const Ideal& I);

    const Ideal& ideal() const { return ideal_; }
    const RingPtr& ring() const { return ideal_.ring(); }
    const std::vector<Expvec>& basis() const { return basis_.monomials; }
    size_t dim() const { return basis_.monomials.size(); }

    // coordinates of the normal form of f in the standard monomial basis
    std::vector<Scalar> coords(const Polynomial& f) const;
    // true iff every variable is nilpotent mod I (support at the origin)
    bool local_at_origin() const;

private:
    Ideal ideal_;
    StandardMonomialBasis basis_;
    std::map<Expvec, size_t> index_;
};

// Hilbert function of the maximal-ideal filtration of a zero-dimensional
// ideal supported at the origin; fills dim, hilbert, level.
ArtinianReport filtration_hilbert(const Ideal& I);

// Dimension of 0 : M computed from the stacked multiplication maps.
size_t socle_dim(const Ideal& I);

struct PsiFormRank {
    size_t i;
    size_t rank;
    size_t expected; // dimension of M^i/M^{i+1}
    bool nondegenerate;
};

// Ranks of the multiplication pairings M^i/M^{i+1} x M^{e-i}/M^{e+1-i} ->
// M^e of a graded local algebra; all nondegenerate together with a
// one-dimensional top piece characterizes Gorenstein.
std::vector<PsiFormRank> psi_form_ranks(const Ideal& I);
bool psi_all_nondegenerate(const std::vector<PsiFormRank>& ranks,
                           const ArtinianReport& rep);

// For a local algebra of degree 6 with filtration (1,2,2,1): is there
// v in M \ M^2 with v^2 = 0 over the algebraic closure? Decided by
// saturating the coefficient ideal of v^2 by the two coordinates of the
// projection of v to M/M^2.
bool square_zero_exists(const Ideal& I);

struct LocalComponent {
    std::vector<Scalar> point;
    Ideal at_origin; // component translated so the point is the origin
};

// Splits a zero-dimensional affine ideal along its rational support.
// Throws if some eliminant has an irreducible non-linear factor.
std::vector<LocalComponent> split_rational_support(const Ideal& I);

// Full isomorphism-class label of the quotient of a zero-dimensional ideal
// of degree <= 6 with rational support. Each local piece must be
// Gorenstein.
AlgebraLabel classify(const Ideal& I);

// Combined local report: filtration data plus socle and Gorenstein flag.
ArtinianReport artinian_report(const Ideal& I);

// Minimal polynomial of x_v acting on the quotient algebra.
std::vector<Scalar> eliminant(const QuotientAlgebra& A, size_t var);

// Roots with multiplicity if f splits into linear factors over its field;
// std::nullopt otherwise. Deterministic.
std::optional<std::vector<std::pair<Scalar, int>>>
linear_roots(const std::vector<Scalar>& f, const Field& field);

} // namespace agor
