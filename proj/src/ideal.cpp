#include "agor/ideal.hpp"

#include <algorithm>

#include "agor/linalg.hpp"

namespace agor {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring()->same_as(*ring_))
            throw MathError("ideal generator ring mismatch");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(const RingPtr& ring) {
    return Ideal(ring, {Polynomial::constant(ring, 1)});
}

const GroebnerBasis& Ideal::groebner() const {
    if (!gb_)
        gb_ = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_));
    return *gb_;
}

bool Ideal::contains(const Polynomial& f) const {
    return normal_form(f, groebner()).is_zero();
}

bool Ideal::same_ideal(const Ideal& o) const {
    return groebner() == o.groebner();
}

bool Ideal::is_homogeneous_gens() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal Ideal::canonical() const {
    Ideal r(ring_, groebner().elements);
    r.gb_ = gb_;
    return r;
}

namespace {

void check_same_ring(const Ideal& I, const Ideal& J) {
    if (!I.ring()->same_as(*J.ring()))
        throw MathError("ideal ring mismatch");
}

} // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const auto& f : I.gens())
        for (const auto& g : J.gens()) gens.push_back(f * g);
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned e) {
    if (e == 0) return Ideal::unit(I.ring());
    Ideal r = I;
    for (unsigned k = 1; k < e; ++k) r = ideal_product(r, I);
    return r;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    const RingPtr& ring = I.ring();
    if (ring->var_index(kAuxVar) >= 0)
        throw MathError(std::string("variable name ") + kAuxVar +
                        " is reserved");
    if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);

    RingPtr aux = ring_with_prefix_var(ring, kAuxVar,
                                       MonomialOrder::block_elim(1));
    Polynomial t = Polynomial::variable(aux, 0);
    Polynomial one_minus_t = Polynomial::constant(aux, 1) - t;

    auto lift = [&](const Polynomial& f) {
        std::vector<Polynomial::Term> terms;
        for (const auto& tm : f.terms()) {
            Expvec e(aux->nvars(), 0);
            for (size_t i = 0; i < tm.exp.size(); ++i) e[i + 1] = tm.exp[i];
            terms.push_back({std::move(e), tm.coef});
        }
        return Polynomial::from_terms(aux, std::move(terms));
    };

    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(t * lift(f));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * lift(g));

    GroebnerBasis G = buchberger(aux, gens);
    std::vector<Polynomial> result;
    for (const auto& g : G.elements) {
        bool free_of_t = true;
        for (const auto& tm : g.terms())
            if (tm.exp[0] != 0) { free_of_t = false; break; }
        if (!free_of_t) continue;
        std::vector<Polynomial::Term> terms;
        for (const auto& tm : g.terms()) {
            Expvec e(tm.exp.begin() + 1, tm.exp.end());
            terms.push_back({std::move(e), tm.coef});
        }
        result.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    // canonical generators for downstream homogeneity checks
    return Ideal(ring, buchberger(ring, result).elements);
}

Ideal colon(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw MathError("colon by the zero polynomial");
    if (!f.ring()->same_as(*I.ring()))
        throw MathError("ideal ring mismatch");
    Ideal F(I.ring(), {f});
    Ideal M = intersect(I, F);
    std::vector<Polynomial> gens;
    for (const auto& g : M.gens()) {
        // every element of I cap (f) is divisible by f; division must be
        // exact, so run classical division and insist on zero remainder
        Polynomial q(I.ring());
        Polynomial r = g;
        while (!r.is_zero() && divides(f.leading_exp(), r.leading_exp())) {
            Expvec e = exp_div(r.leading_exp(), f.leading_exp());
            Scalar c = r.leading_coef() / f.leading_coef();
            q = q + Polynomial::monomial(I.ring(), e, c);
            r = r - f.mul_term(e, c);
        }
        if (!r.is_zero())
            throw MathError("colon division left a remainder");
        gens.push_back(q);
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal colon(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    if (J.is_zero()) throw MathError("colon by the zero ideal");
    std::optional<Ideal> acc;
    for (const auto& f : J.gens()) {
        Ideal c = colon(I, f);
        acc = acc ? intersect(*acc, c) : c;
    }
    return *acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    Ideal cur = I;
    for (int iter = 0; iter < 50; ++iter) {
        Ideal next = colon(cur, J);
        if (next.same_ideal(cur)) return cur;
        cur = next;
    }
    throw MathError("saturation did not stabilize within 50 iterations");
}

size_t monomial_count(size_t nvars, uint32_t t) {
    // C(nvars - 1 + t, t)
    mpz_class num = 1;
    for (uint32_t k = 1; k <= t; ++k) {
        num *= static_cast<unsigned long>(nvars - 1 + k);
        num /= k;
    }
    return static_cast<size_t>(num.get_ui());
}

std::vector<Expvec> monomials_of_degree(size_t nvars, uint32_t t) {
    std::vector<Expvec> out;
    Expvec cur(nvars, 0);
    auto rec = [&](auto&& self, size_t v, uint32_t rem) -> void {
        if (v + 1 == nvars) {
            cur[v] = rem;
            out.push_back(cur);
            cur[v] = 0;
            return;
        }
        for (uint32_t e = 0; e <= rem; ++e) {
            cur[v] = e;
            self(self, v + 1, rem - e);
        }
        cur[v] = 0;
    };
    if (nvars == 0) return out;
    rec(rec, 0, t);
    return out;
}

size_t graded_component_dim(const Ideal& I, uint32_t t) {
    const RingPtr& ring = I.ring();
    for (const auto& g : I.gens())
        if (!g.is_homogeneous())
            throw MathError("graded component of a non-homogeneous ideal");

    std::vector<Expvec> cols = monomials_of_degree(ring->nvars(), t);
    std::map<Expvec, size_t> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);

    std::vector<const Polynomial*> gens;
    for (const auto& g : I.gens())
        if (g.degree() <= t) gens.push_back(&g);

    size_t rows = 0;
    for (const Polynomial* g : gens)
        rows += monomial_count(ring->nvars(), t - g->degree());
    Matrix M(ring->field(), rows, cols.size());
    size_t r = 0;
    for (const Polynomial* g : gens) {
        for (const auto& m : monomials_of_degree(ring->nvars(),
                                                 t - g->degree())) {
            for (const auto& tm : g->terms())
                M.at(r, col_of.at(exp_mul(tm.exp, m))) = tm.coef;
            ++r;
        }
    }
    return M.rank();
}

Ideal eliminate(const Ideal& I, size_t first_k, const RingPtr& target) {
    const RingPtr& ring = I.ring();
    if (first_k == 0 || first_k >= ring->nvars())
        throw MathError("elimination block out of range");
    RingPtr block = ring->order() ==
                            MonomialOrder::block_elim(first_k)
                        ? ring
                        : ring->with_order(MonomialOrder::block_elim(first_k));
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) {
        std::vector<Polynomial::Term> terms(g.terms().begin(),
                                            g.terms().end());
        gens.push_back(Polynomial::from_terms(block, std::move(terms)));
    }
    GroebnerBasis G = buchberger(block, gens);
    std::vector<Polynomial> out;
    for (const auto& g : G.elements) {
        bool free_of_block = true;
        for (const auto& tm : g.terms())
            for (size_t v = 0; v < first_k && free_of_block; ++v)
                if (tm.exp[v] != 0) free_of_block = false;
        if (!free_of_block) continue;
        std::vector<Polynomial::Term> terms;
        for (const auto& tm : g.terms()) {
            Expvec e(tm.exp.begin() + static_cast<long>(first_k),
                     tm.exp.end());
            terms.push_back({std::move(e), tm.coef});
        }
        out.push_back(Polynomial::from_terms(target, std::move(terms)));
    }
    return Ideal(target, std::move(out));
}

Ideal eliminate(const Ideal& I, size_t first_k) {
    const RingPtr& ring = I.ring();
    if (first_k == 0 || first_k >= ring->nvars())
        throw MathError("elimination block out of range");
    std::vector<std::string> vars(ring->vars().begin() +
                                      static_cast<long>(first_k),
                                  ring->vars().end());
    RingPtr target = PolyRing::make(ring->field(), std::move(vars),
                                    MonomialOrder::grevlex());
    return eliminate(I, first_k, target);
}

Ideal irrelevant_ideal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < ring->nvars(); ++i)
        gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

Ideal ring_map_kernel(const std::vector<Polynomial>& target_gens,
                      const std::vector<std::pair<std::string, Polynomial>>&
                          images) {
    if (images.empty()) throw MathError("ring_map_kernel: no images given");
    RingPtr src = images.front().second.ring();
    for (const auto& [name, img] : images)
        if (!img.ring()->same_as(*src))
            throw MathError("ring_map_kernel: image ring mismatch");
    for (const auto& g : target_gens)
        if (!g.ring()->same_as(*src))
            throw MathError("ring_map_kernel: generator ring mismatch");

    // combined ring [source vars..., image vars...] eliminating the source
    std::vector<std::string> vars = src->vars();
    for (const auto& [name, img] : images) {
        if (src->var_index(name) >= 0)
            throw MathError("image variable collides with source: " + name);
        vars.push_back(name);
    }
    size_t ns = src->nvars();
    RingPtr big = PolyRing::make(src->field(), vars,
                                 MonomialOrder::block_elim(ns));

    auto lift = [&](const Polynomial& f) {
        std::vector<Polynomial::Term> terms;
        for (const auto& tm : f.terms()) {
            Expvec e(big->nvars(), 0);
            for (size_t i = 0; i < tm.exp.size(); ++i) e[i] = tm.exp[i];
            terms.push_back({std::move(e), tm.coef});
        }
        return Polynomial::from_terms(big, std::move(terms));
    };

    std::vector<Polynomial> gens;
    for (const auto& g : target_gens) gens.push_back(lift(g));
    for (size_t j = 0; j < images.size(); ++j) {
        Polynomial yj = Polynomial::variable(big, ns + j);
        gens.push_back(yj - lift(images[j].second));
    }

    std::vector<std::string> yvars;
    for (const auto& [name, img] : images) yvars.push_back(name);
    RingPtr yring = PolyRing::make(src->field(), yvars,
                                   MonomialOrder::grevlex());
    Ideal combined(big, std::move(gens));
    Ideal ker = eliminate(combined, ns, yring);

    bool cone_data = std::all_of(target_gens.begin(), target_gens.end(),
                                 [](const Polynomial& g) {
                                     return g.is_homogeneous();
                                 });
    if (cone_data && !images.empty()) {
        uint32_t d = images.front().second.degree();
        for (const auto& [name, img] : images)
            if (!img.is_homogeneous() || img.degree() != d) cone_data = false;
    }
    if (cone_data) ker = saturate(ker, irrelevant_ideal(yring));
    return Ideal(yring, ker.groebner().elements);
}

} // namespace agor
