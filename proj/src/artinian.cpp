#include "agor/artinian.hpp"

#include <algorithm>
#include <sstream>

#include "agor/linalg.hpp"

namespace agor {

// ---------------------------------------------------------------- labels

std::string LabelAtom::str() const {
    switch (kind) {
    case A1sp: return "A1sp";
    case A2sp: return "A2sp";
    default:
        return "A(" + std::to_string(n) + "," + std::to_string(d) + ")";
    }
}

bool LabelAtom::operator<(const LabelAtom& o) const {
    auto key = [](const LabelAtom& a) {
        int kindrank = a.kind == And ? 0 : (a.kind == A1sp ? 1 : 2);
        return std::make_tuple(kindrank, -a.degree(), -a.n);
    };
    return key(*this) < key(o);
}

void AlgebraLabel::normalize() { std::sort(atoms.begin(), atoms.end()); }

int AlgebraLabel::degree() const {
    int s = 0;
    for (const auto& a : atoms) s += a.degree();
    return s;
}

std::string AlgebraLabel::str() const {
    if (atoms.empty()) return "0";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < atoms.size()) {
        size_t j = i;
        while (j < atoms.size() && atoms[j] == atoms[i]) ++j;
        if (!first) os << "+";
        first = false;
        os << atoms[i].str();
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

AlgebraLabel AlgebraLabel::parse(const std::string& text) {
    AlgebraLabel lab;
    size_t i = 0;
    auto fail = [&](const std::string& m) {
        throw ParseError("bad label '" + text + "': " + m, 1,
                         static_cast<int>(i + 1));
    };
    while (i < text.size()) {
        while (i < text.size() && std::isspace(
                   static_cast<unsigned char>(text[i])))
            ++i;
        LabelAtom atom;
        if (text.compare(i, 4, "A1sp") == 0) {
            atom.kind = LabelAtom::A1sp;
            i += 4;
        } else if (text.compare(i, 4, "A2sp") == 0) {
            atom.kind = LabelAtom::A2sp;
            i += 4;
        } else if (text.compare(i, 2, "A(") == 0) {
            i += 2;
            size_t comma = text.find(',', i);
            size_t close = text.find(')', i);
            if (comma == std::string::npos || close == std::string::npos ||
                comma > close)
                fail("expected A(n,d)");
            atom.kind = LabelAtom::And;
            atom.n = std::stoi(text.substr(i, comma - i));
            atom.d = std::stoi(text.substr(comma + 1, close - comma - 1));
            i = close + 1;
        } else {
            fail("expected an atom");
        }
        size_t count = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t j = i;
            while (j < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            if (j == i) fail("expected a multiplicity");
            count = std::stoul(text.substr(i, j - i));
            i = j;
        }
        for (size_t k = 0; k < count; ++k) lab.atoms.push_back(atom);
        while (i < text.size() && std::isspace(
                   static_cast<unsigned char>(text[i])))
            ++i;
        if (i < text.size()) {
            if (text[i] != '+') fail("expected '+'");
            ++i;
        }
    }
    if (lab.atoms.empty()) fail("empty label");
    lab.normalize();
    return lab;
}

// ----------------------------------------------------- quotient algebras

QuotientAlgebra::QuotientAlgebra(const Ideal& I) : ideal_(I.canonical()) {
    const GroebnerBasis& G = ideal_.groebner();
    if (G.is_trivial())
        throw MathError("quotient of the unit ideal is zero");
    if (!is_zero_dimensional(G))
        throw MathError("ideal is not zero-dimensional");
    basis_ = standard_monomials(G);
    for (size_t i = 0; i < basis_.monomials.size(); ++i)
        index_.emplace(basis_.monomials[i], i);
}

std::vector<Scalar> QuotientAlgebra::coords(const Polynomial& f) const {
    Polynomial nf = normal_form(f, ideal_.groebner());
    std::vector<Scalar> v(dim(), Scalar(ring()->field()));
    for (const auto& t : nf.terms()) {
        auto it = index_.find(t.exp);
        if (it == index_.end())
            throw MathError("normal form outside the standard basis");
        v[it->second] = t.coef;
    }
    return v;
}

bool QuotientAlgebra::local_at_origin() const {
    size_t N = dim();
    for (size_t v = 0; v < ring()->nvars(); ++v) {
        Expvec e(ring()->nvars(), 0);
        e[v] = static_cast<uint32_t>(N);
        Polynomial p = Polynomial::monomial(ring(), e,
                                            Scalar(ring()->field(), 1));
        if (!ideal_.contains(p)) return false;
    }
    return true;
}

namespace {

// rank of the span of normal forms of all monomials of degree in [lo, hi]
size_t filtration_rank(const QuotientAlgebra& A, uint32_t lo, uint32_t hi) {
    size_t n = A.ring()->nvars();
    std::vector<std::vector<Scalar>> rows;
    for (uint32_t t = lo; t <= hi; ++t) {
        for (const auto& m : monomials_of_degree(n, t)) {
            Polynomial p = Polynomial::monomial(A.ring(), m,
                                                Scalar(A.ring()->field(), 1));
            rows.push_back(A.coords(p));
        }
    }
    Matrix M(A.ring()->field(), rows.size(), A.dim());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < A.dim(); ++c) M.at(r, c) = rows[r][c];
    return M.rank();
}

std::vector<std::vector<Scalar>> multiplication_matrix(
    const QuotientAlgebra& A, size_t var) {
    // column i holds the coordinates of x_var * b_i
    size_t D = A.dim();
    std::vector<std::vector<Scalar>> cols;
    for (size_t i = 0; i < D; ++i) {
        Expvec e = A.basis()[i];
        e[var] += 1;
        Polynomial p = Polynomial::monomial(A.ring(), e,
                                            Scalar(A.ring()->field(), 1));
        cols.push_back(A.coords(p));
    }
    return cols;
}

void require_local(const QuotientAlgebra& A) {
    if (!A.local_at_origin())
        throw MathError("support is not concentrated at the origin");
}

} // namespace

ArtinianReport filtration_hilbert(const Ideal& I) {
    QuotientAlgebra A(I);
    require_local(A);
    size_t D = A.dim();
    ArtinianReport rep;
    rep.dim = D;
    std::vector<size_t> ranks;
    ranks.push_back(D); // V_0 is the whole algebra
    for (uint32_t i = 1;; ++i) {
        size_t r = filtration_rank(A, i, static_cast<uint32_t>(D));
        ranks.push_back(r);
        if (r == 0) break;
    }
    rep.level = ranks.size() - 2;
    for (size_t i = 0; i + 1 < ranks.size(); ++i)
        rep.hilbert.push_back(ranks[i] - ranks[i + 1]);
    return rep;
}

size_t socle_dim(const Ideal& I) {
    QuotientAlgebra A(I);
    require_local(A);
    size_t D = A.dim();
    size_t n = A.ring()->nvars();
    Matrix M(A.ring()->field(), n * D, D);
    for (size_t v = 0; v < n; ++v) {
        auto cols = multiplication_matrix(A, v);
        for (size_t i = 0; i < D; ++i)
            for (size_t r = 0; r < D; ++r) M.at(v * D + r, i) = cols[i][r];
    }
    return M.kernel().size();
}

std::vector<PsiFormRank> psi_form_ranks(const Ideal& I) {
    if (!I.is_homogeneous_gens())
        throw MathError("psi forms need homogeneous input");
    QuotientAlgebra A(I);
    require_local(A);

    // graded pieces are spanned by the standard monomials of each degree
    std::vector<std::vector<size_t>> piece;
    for (size_t i = 0; i < A.dim(); ++i) {
        uint32_t d = total_degree(A.basis()[i]);
        if (piece.size() <= d) piece.resize(d + 1);
        piece[d].push_back(i);
    }
    size_t e = piece.size() - 1;
    const Field& F = A.ring()->field();

    std::vector<PsiFormRank> out;
    for (size_t i = 0; i <= e; ++i) {
        const auto& rowsidx = piece[i];
        const auto& colsidx = piece[e - i];
        size_t ne = piece[e].size();
        // stacked pairing matrix into the top graded piece
        Matrix M(F, rowsidx.size(), colsidx.size() * ne);
        for (size_t r = 0; r < rowsidx.size(); ++r) {
            for (size_t c = 0; c < colsidx.size(); ++c) {
                Expvec prod = exp_mul(A.basis()[rowsidx[r]],
                                      A.basis()[colsidx[c]]);
                std::vector<Scalar> v = A.coords(
                    Polynomial::monomial(A.ring(), prod, Scalar(F, 1)));
                for (size_t u = 0; u < ne; ++u)
                    M.at(r, c * ne + u) = v[piece[e][u]];
            }
        }
        size_t rank = M.rank();
        bool nondeg = piece[i].size() == piece[e - i].size() &&
                      rank == piece[i].size();
        out.push_back({i, rank, piece[i].size(), nondeg});
    }
    return out;
}

bool psi_all_nondegenerate(const std::vector<PsiFormRank>& ranks,
                           const ArtinianReport& rep) {
    if (rep.hilbert.empty() || rep.hilbert.back() != 1) return false;
    return std::all_of(ranks.begin(), ranks.end(),
                       [](const PsiFormRank& r) { return r.nondegenerate; });
}

bool square_zero_exists(const Ideal& I) {
    QuotientAlgebra A(I);
    require_local(A);
    ArtinianReport rep = filtration_hilbert(I);
    std::vector<size_t> expected{1, 2, 2, 1};
    if (rep.dim != 6 || rep.hilbert != expected)
        throw MathError("square-zero test needs filtration (1,2,2,1)");

    const Field& F = A.ring()->field();
    size_t D = A.dim();
    if (total_degree(A.basis()[0]) != 0)
        throw MathError("standard basis does not contain 1");

    // functionals vanishing on k*1 + M^2 give the M/M^2 coordinates
    size_t n = A.ring()->nvars();
    std::vector<std::vector<Scalar>> span;
    std::vector<Scalar> one(D, Scalar(F));
    one[0] = Scalar(F, 1);
    span.push_back(one);
    for (uint32_t t = 2; t <= D; ++t)
        for (const auto& m : monomials_of_degree(n, t))
            span.push_back(A.coords(
                Polynomial::monomial(A.ring(), m, Scalar(F, 1))));
    Matrix S(F, span.size(), D);
    for (size_t r = 0; r < span.size(); ++r)
        for (size_t c = 0; c < D; ++c) S.at(r, c) = span[r][c];
    auto functionals = S.kernel();
    if (functionals.size() != 2)
        throw MathError("unexpected M/M^2 dimension in square-zero test");

    // unknown coefficient ring: one variable per basis element of M
    std::vector<std::string> cvars;
    for (size_t j = 1; j < D; ++j) cvars.push_back("c" + std::to_string(j));
    RingPtr cring = PolyRing::make(F, cvars, MonomialOrder::grevlex());

    // coefficient polynomials of v^2 in the standard basis
    std::vector<std::vector<std::vector<Scalar>>> prod(
        D - 1, std::vector<std::vector<Scalar>>(D - 1));
    for (size_t j = 1; j < D; ++j)
        for (size_t l = j; l < D; ++l) {
            Expvec e = exp_mul(A.basis()[j], A.basis()[l]);
            auto v = A.coords(
                Polynomial::monomial(A.ring(), e, Scalar(F, 1)));
            prod[j - 1][l - 1] = v;
            prod[l - 1][j - 1] = v;
        }
    std::vector<Polynomial> egens;
    for (size_t m = 0; m < D; ++m) {
        std::vector<Polynomial::Term> terms;
        for (size_t j = 0; j + 1 < D; ++j)
            for (size_t l = 0; l + 1 < D; ++l) {
                const Scalar& s = prod[j][l][m];
                if (s.is_zero()) continue;
                Expvec e(cvars.size(), 0);
                e[j] += 1;
                e[l] += 1;
                terms.push_back({std::move(e), s});
            }
        Polynomial p = Polynomial::from_terms(cring, std::move(terms));
        if (!p.is_zero()) egens.push_back(p);
    }

    // the two projection coordinates of v as linear forms in the c's
    std::vector<Polynomial> lforms;
    for (const auto& phi : functionals) {
        std::vector<Polynomial::Term> terms;
        for (size_t j = 1; j < D; ++j) {
            // b_j has unit coordinate vector, so phi(b_j) = phi[j]
            if (phi[j].is_zero()) continue;
            Expvec e(cvars.size(), 0);
            e[j - 1] = 1;
            terms.push_back({std::move(e), phi[j]});
        }
        lforms.push_back(Polynomial::from_terms(cring, std::move(terms)));
    }
    if (lforms[0].is_zero() || lforms[1].is_zero())
        throw MathError("degenerate projection in square-zero test");

    Ideal E(cring, std::move(egens));
    Ideal L(cring, std::move(lforms));
    return !saturate(E, L).is_unit();
}

// ------------------------------------------------------------ eliminants

std::vector<Scalar> eliminant(const QuotientAlgebra& A, size_t var) {
    const Field& F = A.ring()->field();
    size_t D = A.dim();
    std::vector<std::vector<Scalar>> powers;
    Polynomial p = Polynomial::constant(A.ring(), 1);
    Polynomial xv = Polynomial::variable(A.ring(), var);
    powers.push_back(A.coords(p));
    for (size_t m = 1; m <= D; ++m) {
        p = normal_form(p * xv, A.ideal().groebner());
        powers.push_back(A.coords(p));
        // look for a dependence among powers 0..m
        Matrix M(F, D, m + 1);
        for (size_t c = 0; c <= m; ++c)
            for (size_t r = 0; r < D; ++r) M.at(r, c) = powers[c][r];
        auto ker = M.kernel();
        if (!ker.empty()) {
            std::vector<Scalar> f = ker.front();
            Scalar lead = f[m];
            if (lead.is_zero())
                throw MathError("unexpected eliminant dependence");
            Scalar li = lead.inv();
            for (auto& c : f) c *= li;
            return f; // monic of degree m
        }
    }
    throw MathError("no eliminant found (not zero-dimensional?)");
}

namespace {

using UPoly = std::vector<Scalar>; // coef[i] of x^i, no trailing zeros

void utrim(UPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Scalar(F));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

UPoly umod(UPoly a, const UPoly& b, const Field& F) {
    utrim(a);
    if (b.empty()) throw MathError("univariate division by zero");
    Scalar inv = b.back().inv();
    while (udeg(a) >= udeg(b)) {
        Scalar c = a.back() * inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        utrim(a);
        if (a.empty()) break;
    }
    (void)F;
    return a;
}

UPoly umonic(UPoly f) {
    utrim(f);
    if (f.empty()) return f;
    Scalar inv = f.back().inv();
    for (auto& c : f) c *= inv;
    return f;
}

UPoly ugcd(UPoly a, UPoly b, const Field& F) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = umod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(a);
}

UPoly uderiv(const UPoly& f, const Field& F) {
    UPoly r;
    for (size_t i = 1; i < f.size(); ++i)
        r.push_back(f[i] * Scalar(F, static_cast<long>(i)));
    utrim(r);
    return r;
}

Scalar ueval(const UPoly& f, const Scalar& x) {
    Scalar acc(x.field());
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

// synthetic division of f by (x - r); caller guarantees f(r) = 0
UPoly udiv_linear(const UPoly& f, const Scalar& r) {
    size_t m = f.size() - 1;
    UPoly q(m, Scalar(r.field()));
    q[m - 1] = f[m];
    for (size_t i = m - 1; i >= 1; --i) q[i - 1] = f[i] + r * q[i];
    utrim(q);
    return q;
}

// exact division of monic-compatible polynomials; remainder must vanish
UPoly udivexact(const UPoly& f, const UPoly& g, const Field& F) {
    UPoly r = f;
    utrim(r);
    UPoly q(r.size() >= g.size() ? r.size() - g.size() + 1 : 0, Scalar(F));
    Scalar inv = g.back().inv();
    while (udeg(r) >= udeg(g)) {
        size_t shift = r.size() - g.size();
        Scalar c = r.back() * inv;
        q[shift] = c;
        for (size_t i = 0; i < g.size(); ++i) r[shift + i] -= c * g[i];
        utrim(r);
        if (r.empty()) break;
    }
    if (!r.empty()) throw MathError("univariate division not exact");
    utrim(q);
    return q;
}

// x^e mod f over F_p
UPoly upow_x_mod(uint64_t e, const UPoly& f, const Field& F) {
    UPoly result{Scalar(F, 1)};
    UPoly base{Scalar(F), Scalar(F, 1)}; // x
    base = umod(base, f, F);
    while (e) {
        if (e & 1) result = umod(umul(result, base, F), f, F);
        base = umod(umul(base, base, F), f, F);
        e >>= 1;
    }
    return result;
}

UPoly upow_mod(UPoly b, uint64_t e, const UPoly& f, const Field& F) {
    UPoly result{Scalar(F, 1)};
    b = umod(std::move(b), f, F);
    while (e) {
        if (e & 1) result = umod(umul(result, b, F), f, F);
        b = umod(umul(b, b, F), f, F);
        e >>= 1;
    }
    return result;
}

// all roots of a squarefree fully-split monic polynomial over F_p
void cz_roots(const UPoly& f, const Field& F, std::vector<Scalar>& out,
              uint64_t& delta) {
    if (udeg(f) <= 0) return;
    if (udeg(f) == 1) {
        out.push_back(-f[0]);
        return;
    }
    uint64_t p = F.characteristic();
    for (;;) {
        delta += 1;
        // gcd(f, (x + delta)^((p-1)/2) - 1)
        UPoly shifted{Scalar(F, static_cast<long>(delta % p)), Scalar(F, 1)};
        UPoly g = upow_mod(shifted, (p - 1) / 2, f, F);
        if (g.empty())
            continue;
        g[0] -= Scalar(F, 1);
        utrim(g);
        UPoly h = ugcd(f, g, F);
        if (udeg(h) > 0 && udeg(h) < udeg(f)) {
            UPoly q = udivexact(f, h, F);
            cz_roots(h, F, out, delta);
            cz_roots(q, F, out, delta);
            return;
        }
    }
}

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> divs{1};
    if (n <= 1) return divs;
    mpz_class rest = n;
    std::vector<std::pair<mpz_class, int>> fact;
    for (mpz_class q = 2; q * q <= rest && q < (1 << 21); ++q) {
        if (rest % q == 0) {
            int e = 0;
            while (rest % q == 0) { rest /= q; ++e; }
            fact.emplace_back(q, e);
        }
    }
    if (rest > 1) {
        if (rest > mpz_class("1099511627776")) // 2^40: give up honestly
            throw MathError("rational root search overflow");
        fact.emplace_back(rest, 1);
    }
    for (const auto& [q, e] : fact) {
        size_t old = divs.size();
        mpz_class pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= q;
            for (size_t i = 0; i < old; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

} // namespace

std::optional<std::vector<std::pair<Scalar, int>>>
linear_roots(const std::vector<Scalar>& f_in, const Field& F) {
    UPoly f = f_in;
    utrim(f);
    if (f.empty()) throw MathError("root search on the zero polynomial");
    std::vector<std::pair<Scalar, int>> roots;

    if (udeg(f) == 0) return roots;

    if (F.is_prime_field()) {
        // squarefree part, then distinct-degree check, then splitting
        UPoly s = f;
        UPoly d = uderiv(f, F);
        if (!d.empty()) {
            UPoly g = ugcd(f, d, F);
            if (udeg(g) > 0) {
                // s = f / g
                UPoly r = f;
                UPoly q(r.size() - g.size() + 1, Scalar(F));
                Scalar inv = g.back().inv();
                while (udeg(r) >= udeg(g)) {
                    size_t shift = r.size() - g.size();
                    Scalar c = r.back() * inv;
                    q[shift] = c;
                    for (size_t i = 0; i < g.size(); ++i)
                        r[shift + i] -= c * g[i];
                    utrim(r);
                    if (r.empty()) break;
                }
                utrim(q);
                s = q;
            }
        }
        s = umonic(s);
        // s splits into distinct linear factors iff x^p == x (mod s)
        UPoly xp = upow_x_mod(F.characteristic(), s, F);
        UPoly x{Scalar(F), Scalar(F, 1)};
        UPoly diff = xp;
        diff.resize(std::max(diff.size(), x.size()), Scalar(F));
        for (size_t i = 0; i < x.size(); ++i) diff[i] -= x[i];
        utrim(diff);
        if (!umod(diff, s, F).empty() && !diff.empty())
            return std::nullopt;
        if (!diff.empty() && udeg(diff) >= udeg(s)) {
            // reduce and re-check
            UPoly rem = umod(diff, s, F);
            if (!rem.empty()) return std::nullopt;
        } else if (!diff.empty() && udeg(diff) < udeg(s)) {
            return std::nullopt;
        }
        std::vector<Scalar> rs;
        uint64_t delta = 0;
        cz_roots(s, F, rs, delta);
        for (const Scalar& r : rs) {
            int mult = 0;
            UPoly cur = f;
            while (!cur.empty() && ueval(cur, r).is_zero()) {
                cur = udiv_linear(cur, r);
                ++mult;
                if (cur.empty() || udeg(cur) < 0) break;
            }
            roots.emplace_back(r, mult);
        }
        int total = 0;
        for (const auto& [r, m] : roots) total += m;
        if (total != udeg(f)) return std::nullopt;
        return roots;
    }

    // rationals: strip x^k, scale to integers, rational root theorem
    int zero_mult = 0;
    UPoly g = f;
    while (!g.empty() && g[0].is_zero()) {
        g.erase(g.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Scalar(F), zero_mult);
    if (udeg(g) == 0) return roots;

    mpz_class denlcm = 1;
    for (const auto& c : g)
        denlcm = lcm(denlcm, c.rat().get_den());
    std::vector<mpz_class> zc;
    for (const auto& c : g)
        zc.push_back(mpz_class(c.rat() * denlcm));
    mpz_class a0 = zc.front(), alead = zc.back();

    std::vector<mpz_class> ps = divisors_of(a0);
    std::vector<mpz_class> qs = divisors_of(alead);
    UPoly cur = g;
    for (const mpz_class& pz : ps) {
        for (const mpz_class& qz : qs) {
            for (int sign = 0; sign < 2; ++sign) {
                if (udeg(cur) == 0) break;
                mpq_class cand(sign ? -pz : pz, qz);
                cand.canonicalize();
                Scalar r(F, cand);
                int mult = 0;
                while (!cur.empty() && udeg(cur) > 0 &&
                       ueval(cur, r).is_zero()) {
                    cur = udiv_linear(cur, r);
                    ++mult;
                }
                if (mult > 0) roots.emplace_back(r, mult);
            }
        }
    }
    if (udeg(cur) != 0) return std::nullopt;
    return roots;
}

// ------------------------------------------------------ support splitting

std::vector<LocalComponent> split_rational_support(const Ideal& I) {
    QuotientAlgebra A(I);
    const RingPtr& ring = I.ring();
    const Field& F = ring->field();
    size_t n = ring->nvars();

    for (size_t v = 0; v < n; ++v) {
        std::vector<Scalar> f = eliminant(A, v);
        auto roots = linear_roots(f, F);
        if (!roots)
            throw MathError("irrational support detected on variable " +
                            ring->vars()[v]);
        if (roots->size() >= 2) {
            std::vector<LocalComponent> out;
            for (const auto& [r, mult] : *roots) {
                Polynomial others = Polynomial::constant(ring, 1);
                Polynomial xv = Polynomial::variable(ring, v);
                for (const auto& [s, smult] : *roots) {
                    if (s == r) continue;
                    others = others *
                             (xv - Polynomial::constant(ring, s));
                }
                Ideal comp = saturate(I, Ideal(ring, {others}));
                auto sub = split_rational_support(comp);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            size_t total = 0;
            for (const auto& c : out)
                total += QuotientAlgebra(c.at_origin).dim();
            if (total != A.dim())
                throw MathError("support splitting lost degree");
            return out;
        }
    }

    // single point: read off the coordinates and translate to the origin
    std::vector<Scalar> point;
    std::map<std::string, Polynomial> shift;
    for (size_t v = 0; v < n; ++v) {
        std::vector<Scalar> f = eliminant(A, v);
        auto roots = linear_roots(f, F);
        if (!roots)
            throw MathError("irrational support detected on variable " +
                            ring->vars()[v]);
        Scalar r = roots->empty() ? Scalar(F) : roots->front().first;
        point.push_back(r);
        if (!r.is_zero())
            shift.emplace(ring->vars()[v],
                          Polynomial::variable(ring, v) +
                              Polynomial::constant(ring, r));
    }
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens())
        gens.push_back(shift.empty() ? g : substitute(g, shift));
    return {{std::move(point), Ideal(ring, std::move(gens))}};
}

// --------------------------------------------------------- classification

namespace {

LabelAtom label_local_piece(const Ideal& J) {
    ArtinianReport rep = filtration_hilbert(J);
    size_t sd = socle_dim(J);
    if (sd != 1)
        throw MathError("non-Gorenstein local piece (socle dimension " +
                        std::to_string(sd) + ")");
    size_t d = rep.dim;
    if (d > 6)
        throw MathError("classification is restricted to degree <= 6 pieces");
    if (d == 1) return LabelAtom{LabelAtom::And, 0, 1};

    const std::vector<size_t>& H = rep.hilbert;
    auto is_thin = [&] {
        if (H.empty() || H[0] != 1) return false;
        for (size_t i = 2; i < H.size(); ++i)
            if (H[i] != 1) return false;
        return H.size() >= 2;
    };
    std::vector<size_t> sp{1, 2, 2, 1};
    if (H == sp && d == 6) {
        return square_zero_exists(J) ? LabelAtom{LabelAtom::A1sp}
                                     : LabelAtom{LabelAtom::A2sp};
    }
    if (is_thin())
        return LabelAtom{LabelAtom::And, static_cast<int>(H[1]),
                         static_cast<int>(d)};
    std::string hs;
    for (size_t x : H) hs += (hs.empty() ? "" : ",") + std::to_string(x);
    throw MathError("filtration Hilbert function (" + hs +
                    ") is not realizable for a Gorenstein piece");
}

} // namespace

AlgebraLabel classify(const Ideal& I) {
    std::vector<LocalComponent> comps = split_rational_support(I);
    AlgebraLabel lab;
    int total = 0;
    for (const auto& c : comps) {
        LabelAtom a = label_local_piece(c.at_origin);
        total += a.degree();
        lab.atoms.push_back(a);
    }
    if (total > 6)
        throw MathError("classification is restricted to degree <= 6");
    lab.normalize();
    return lab;
}

ArtinianReport artinian_report(const Ideal& I) {
    ArtinianReport rep = filtration_hilbert(I);
    rep.socle_dim = socle_dim(I);
    rep.gorenstein = rep.socle_dim == 1;
    if (rep.dim <= 6 && rep.gorenstein) {
        try {
            rep.label = classify(I);
        } catch (const MathError&) {
            rep.label.reset();
        }
    }
    return rep;
}

} // namespace agor
