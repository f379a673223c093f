#include "agor/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace agor {

bool GroebnerBasis::is_trivial() const {
    return elements.size() == 1 && elements[0].is_constant() &&
           !elements[0].is_zero();
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
    if (!ring->same_as(*o.ring)) return false;
    if (elements.size() != o.elements.size()) return false;
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] != o.elements[i]) return false;
    return true;
}

namespace {

// Sorted-map accumulator for the division loop.
struct WorkPoly {
    std::map<Expvec, Scalar, std::function<bool(const Expvec&, const Expvec&)>>
        terms;

    explicit WorkPoly(const MonomialOrder& o)
        : terms([o](const Expvec& a, const Expvec& b) {
              return o.less(b, a); // descending
          }) {}

    void load(const Polynomial& f) {
        for (const auto& t : f.terms()) terms.emplace(t.exp, t.coef);
    }

    bool empty() const { return terms.empty(); }

    // adds c * x^e * g
    void add_scaled(const Polynomial& g, const Expvec& e, const Scalar& c) {
        for (const auto& t : g.terms()) {
            Expvec m = exp_mul(t.exp, e);
            Scalar v = t.coef * c;
            auto it = terms.find(m);
            if (it == terms.end()) {
                terms.emplace(std::move(m), std::move(v));
            } else {
                it->second += v;
                if (it->second.is_zero()) terms.erase(it);
            }
        }
    }
};

Polynomial reduce_full(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const RingPtr& ring) {
    WorkPoly h(ring->order());
    h.load(f);
    std::vector<Polynomial::Term> out;
    while (!h.empty()) {
        auto lead = h.terms.begin();
        bool reduced_step = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (divides(g.leading_exp(), lead->first)) {
                Expvec q = exp_div(lead->first, g.leading_exp());
                Scalar c = -(lead->second / g.leading_coef());
                h.add_scaled(g, q, c);
                reduced_step = true;
                break;
            }
        }
        if (!reduced_step) {
            out.push_back({lead->first, lead->second});
            h.terms.erase(lead);
        }
    }
    return Polynomial::from_terms(ring, std::move(out));
}

} // namespace

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis) {
    if (basis.empty()) return f;
    return reduce_full(f, basis, f.ring());
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (!f.ring()->same_as(*G.ring))
        throw MathError("normal_form: ring mismatch");
    return normal_form(f, G.elements);
}

GroebnerBasis buchberger(const RingPtr& ring,
                         const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring()->same_as(*ring))
            throw MathError("buchberger: generator ring mismatch");
        basis.push_back(g.monic());
    }

    struct Pair {
        size_t i, j;
        Expvec lcm;
        uint32_t deg;
        size_t idx;
    };

    const MonomialOrder ord = ring->order();
    // normal strategy: smallest lcm degree, then smallest lcm in the ring
    // order, then insertion index
    auto later = [&ord](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg > b.deg;
        if (a.lcm != b.lcm) return ord.less(b.lcm, a.lcm);
        return a.idx > b.idx;
    };

    std::vector<Pair> heap;
    std::set<std::pair<size_t, size_t>> pending;
    size_t next_idx = 0;

    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            const Expvec& a = basis[i].leading_exp();
            const Expvec& b = basis[j].leading_exp();
            if (exp_coprime(a, b)) continue; // coprime-lcm criterion
            Expvec l = exp_lcm(a, b);
            heap.push_back({i, j, std::move(l), 0, next_idx++});
            heap.back().deg = total_degree(heap.back().lcm);
            std::push_heap(heap.begin(), heap.end(), later);
            pending.insert({i, j});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    // chain criterion: (i,j) is unnecessary if some k with lt(k) | lcm(i,j)
    // has both mixed pairs no longer pending
    auto chain_skip = [&](const Pair& p) {
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!divides(basis[k].leading_exp(), p.lcm)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k)))
                return true;
        }
        return false;
    };

    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), later);
        Pair p = std::move(heap.back());
        heap.pop_back();
        pending.erase({p.i, p.j});
        if (chain_skip(p)) continue;
        const Polynomial& f = basis[p.i];
        const Polynomial& g = basis[p.j];
        Scalar one(ring->field(), 1);
        Polynomial spoly = f.mul_term(exp_div(p.lcm, f.leading_exp()), one) -
                           g.mul_term(exp_div(p.lcm, g.leading_exp()), one);
        Polynomial r = reduce_full(spoly, basis, ring);
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            push_pairs_for(basis.size() - 1);
        }
    }

    // minimalize: drop g_i when another leading monomial divides lt(g_i)
    // (on ties keep the earliest element)
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Expvec& lj = basis[j].leading_exp();
            const Expvec& li = basis[i].leading_exp();
            if (divides(lj, li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // full tail reduction of every survivor
    std::vector<Polynomial> reduced(minimal.size());
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = reduce_full(minimal[i], others, ring).monic();
    }
    std::erase_if(reduced, [](const Polynomial& f) { return f.is_zero(); });

    std::sort(reduced.begin(), reduced.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return ord.less(b.leading_exp(), a.leading_exp());
              });
    return GroebnerBasis{ring, std::move(reduced), true};
}

bool is_zero_dimensional(const GroebnerBasis& G) {
    if (G.is_trivial()) return true;
    size_t n = G.ring->nvars();
    for (size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& g : G.elements) {
            const Expvec& e = g.leading_exp();
            if (e[v] == 0) continue;
            bool pure = true;
            for (size_t k = 0; k < n && pure; ++k)
                if (k != v && e[k] != 0) pure = false;
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

StandardMonomialBasis standard_monomials(const GroebnerBasis& G,
                                         std::optional<uint32_t> degree_cap) {
    if (!G.reduced) throw MathError("standard_monomials needs a reduced basis");
    size_t n = G.ring->nvars();
    std::vector<Expvec> leads;
    for (const auto& g : G.elements) leads.push_back(g.leading_exp());

    auto divisible = [&](const Expvec& m) {
        for (const auto& l : leads)
            if (divides(l, m)) return true;
        return false;
    };

    std::vector<Expvec> out;
    if (G.is_trivial()) return {G.ring, out};

    // per-variable exponent bounds from pure-power leading monomials;
    // has_bound[v] false means x_v is unbounded in the quotient
    std::vector<uint32_t> var_cap(n, 0);
    std::vector<bool> has_bound(n, false);
    for (size_t v = 0; v < n; ++v) {
        for (const auto& l : leads) {
            if (l[v] == 0) continue;
            bool pure = true;
            for (size_t k = 0; k < n && pure; ++k)
                if (k != v && l[k] != 0) pure = false;
            if (pure) {
                uint32_t b = l[v] - 1;
                var_cap[v] = has_bound[v] ? std::min(var_cap[v], b) : b;
                has_bound[v] = true;
            }
        }
    }

    uint32_t deg_cap;
    if (degree_cap) {
        deg_cap = *degree_cap;
        for (size_t v = 0; v < n; ++v) {
            if (!has_bound[v]) var_cap[v] = deg_cap;
            var_cap[v] = std::min(var_cap[v], deg_cap);
        }
    } else {
        for (size_t v = 0; v < n; ++v)
            if (!has_bound[v])
                throw MathError(
                    "ideal is not zero-dimensional and no degree cap was given");
        uint64_t s = 0;
        for (uint32_t c : var_cap) s += c;
        deg_cap = static_cast<uint32_t>(s);
    }

    Expvec cur(n, 0);
    auto rec = [&](auto&& self, size_t v, uint32_t remaining) -> void {
        if (v == n) {
            if (!divisible(cur)) out.push_back(cur);
            return;
        }
        uint32_t top = std::min(var_cap[v], remaining);
        for (uint32_t e = 0; e <= top; ++e) {
            cur[v] = e;
            self(self, v + 1, remaining - e);
        }
        cur[v] = 0;
    };
    rec(rec, 0, deg_cap);

    const MonomialOrder& ord = G.ring->order();
    std::sort(out.begin(), out.end(),
              [&](const Expvec& a, const Expvec& b) { return ord.less(a, b); });
    return {G.ring, std::move(out)};
}

std::vector<size_t> StandardMonomialBasis::count_by_degree() const {
    std::vector<size_t> counts;
    for (const auto& m : monomials) {
        uint32_t d = total_degree(m);
        if (counts.size() <= d) counts.resize(d + 1, 0);
        ++counts[d];
    }
    return counts;
}

} // namespace agor
