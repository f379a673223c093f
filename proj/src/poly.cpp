#include "agor/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace agor {

uint32_t total_degree(const Expvec& e) {
    uint64_t s = 0;
    for (uint32_t x : e) s += x;
    if (s > 0x7fffffff) throw MathError("exponent overflow");
    return static_cast<uint32_t>(s);
}

bool divides(const Expvec& a, const Expvec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expvec exp_mul(const Expvec& a, const Expvec& b) {
    Expvec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t s = static_cast<uint64_t>(a[i]) + b[i];
        if (s > 0x7fffffff) throw MathError("exponent overflow");
        r[i] = static_cast<uint32_t>(s);
    }
    return r;
}

Expvec exp_div(const Expvec& a, const Expvec& b) {
    Expvec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw MathError("monomial division not exact");
        r[i] = a[i] - b[i];
    }
    return r;
}

Expvec exp_lcm(const Expvec& a, const Expvec& b) {
    Expvec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exp_coprime(const Expvec& a, const Expvec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

namespace {

// grevlex on a contiguous slice [lo, hi)
int cmp_grevlex(const Expvec& a, const Expvec& b, size_t lo, size_t hi) {
    uint64_t da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const Expvec& a, const Expvec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

} // namespace

bool MonomialOrder::less(const Expvec& a, const Expvec& b) const {
    switch (kind) {
    case OrderKind::Grevlex:
        return cmp_grevlex(a, b, 0, a.size()) < 0;
    case OrderKind::Lex:
        return cmp_lex(a, b) < 0;
    case OrderKind::Grlex: {
        uint32_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return cmp_lex(a, b) < 0;
    }
    case OrderKind::BlockElim: {
        int c = cmp_grevlex(a, b, 0, std::min(block, a.size()));
        if (c != 0) return c < 0;
        return cmp_grevlex(a, b, std::min(block, a.size()), a.size()) < 0;
    }
    }
    return false;
}

std::string MonomialOrder::str() const {
    switch (kind) {
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Grlex: return "grlex";
    case OrderKind::BlockElim: return "elim(" + std::to_string(block) + ")";
    }
    return "?";
}

RingPtr PolyRing::make(const Field& field, std::vector<std::string> vars,
                       MonomialOrder order) {
    if (vars.empty()) throw MathError("polynomial ring needs variables");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw MathError("empty variable name");
        if (!seen.insert(v).second)
            throw MathError("duplicate variable name: " + v);
    }
    if (order.kind == OrderKind::BlockElim && order.block >= vars.size())
        throw MathError("elimination block must leave at least one variable");
    return RingPtr(new PolyRing(field, std::move(vars), order));
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolyRing::same_as(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
}

RingPtr PolyRing::with_order(const MonomialOrder& o) const {
    return make(field_, vars_, o);
}

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
    Polynomial f(ring);
    if (!c.is_zero())
        f.terms_.push_back({Expvec(ring->nvars(), 0), c});
    return f;
}

Polynomial Polynomial::constant(const RingPtr& ring, long n) {
    return constant(ring, Scalar(ring->field(), n));
}

Polynomial Polynomial::variable(const RingPtr& ring, size_t idx) {
    if (idx >= ring->nvars()) throw MathError("variable index out of range");
    Expvec e(ring->nvars(), 0);
    e[idx] = 1;
    return monomial(ring, e, Scalar(ring->field(), 1));
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Expvec& e,
                                const Scalar& c) {
    if (e.size() != ring->nvars())
        throw MathError("exponent vector length mismatch");
    Polynomial f(ring);
    if (!c.is_zero()) f.terms_.push_back({e, c});
    return f;
}

const Expvec& Polynomial::leading_exp() const {
    if (is_zero()) throw MathError("zero polynomial has no leading term");
    return terms_.front().exp;
}

const Scalar& Polynomial::leading_coef() const {
    if (is_zero()) throw MathError("zero polynomial has no leading term");
    return terms_.front().coef;
}

uint32_t Polynomial::degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.exp));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    uint32_t d = total_degree(terms_.front().exp);
    for (const auto& t : terms_)
        if (total_degree(t.exp) != d) return false;
    return true;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (!ring_ || !o.ring_) throw MathError("polynomial without ring");
    if (!ring_->same_as(*o.ring_))
        throw MathError("polynomial ring mismatch");
}

Polynomial Polynomial::from_terms(const RingPtr& ring,
                                  std::vector<Term> terms) {
    const MonomialOrder& ord = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.less(b.exp, a.exp); // descending
    });
    Polynomial f(ring);
    for (auto& t : terms) {
        if (t.exp.size() != ring->nvars())
            throw MathError("exponent vector length mismatch");
        if (!f.terms_.empty() && f.terms_.back().exp == t.exp) {
            Scalar s = f.terms_.back().coef + t.coef;
            if (s.is_zero())
                f.terms_.pop_back();
            else
                f.terms_.back().coef = s;
        } else if (!t.coef.is_zero()) {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    const MonomialOrder& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].exp == o.terms_[j].exp) {
            Scalar s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].exp, s});
            ++i; ++j;
        } else if (ord.less(o.terms_[j].exp, terms_[i].exp)) {
            r.terms_.push_back(terms_[i]); ++i;
        } else {
            r.terms_.push_back(o.terms_[j]); ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp, -t.coef});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp, t.coef * c});
    return r;
}

Polynomial Polynomial::mul_term(const Expvec& e, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({exp_mul(t.exp, e), t.coef * c});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    const MonomialOrder& ord = ring_->order();
    auto desc = [&](const Expvec& a, const Expvec& b) { return ord.less(b, a); };
    std::map<Expvec, Scalar, decltype(desc)> acc(desc);
    for (const auto& s : terms_) {
        for (const auto& t : o.terms_) {
            Expvec e = exp_mul(s.exp, t.exp);
            Scalar c = s.coef * t.coef;
            auto it = acc.find(e);
            if (it == acc.end()) {
                acc.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc) r.terms_.push_back({e, c});
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coef().inv());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
    if (!ring_->same_as(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp ||
            terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

Polynomial Polynomial::divide_by_term(const Expvec& e, const Scalar& c) const {
    Scalar ci = c.inv();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({exp_div(t.exp, e), t.coef * ci});
    return r;
}

Scalar Polynomial::coefficient(const Expvec& e) const {
    for (const auto& t : terms_)
        if (t.exp == e) return t.coef;
    return Scalar(ring_->field());
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != ring_->nvars())
        throw MathError("evaluation point has wrong length");
    Scalar acc(ring_->field());
    for (const auto& t : terms_) {
        Scalar m = t.coef;
        for (size_t i = 0; i < point.size(); ++i)
            for (uint32_t k = 0; k < t.exp[i]; ++k) m *= point[i];
        acc += m;
    }
    return acc;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = t.coef.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool any_var = total_degree(t.exp) > 0;
        bool coef_one = cs == "1";
        if (!any_var || !coef_one) os << cs;
        bool star = !any_var ? false : !coef_one;
        for (size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << ring_->vars()[i];
            if (t.exp[i] > 1) os << "^" << t.exp[i];
        }
    }
    return os.str();
}

Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& assignment,
                      const RingPtr& target) {
    const RingPtr& src = f.ring();
    if (!src) throw MathError("polynomial without ring");
    for (const auto& [name, img] : assignment) {
        if (src->var_index(name) < 0)
            throw MathError("unknown variable in substitution: " + name);
        if (!img.ring()->same_as(*target))
            throw MathError("substitution image not in target ring");
    }
    if (!(src->field() == target->field()))
        throw MathError("field mismatch in substitution");
    // images for every source variable
    std::vector<Polynomial> images(src->nvars());
    for (size_t i = 0; i < src->nvars(); ++i) {
        const std::string& nm = src->vars()[i];
        auto it = assignment.find(nm);
        if (it != assignment.end()) {
            images[i] = it->second;
        } else {
            int j = target->var_index(nm);
            if (j < 0)
                throw MathError("target ring missing variable: " + nm);
            images[i] = Polynomial::variable(target, static_cast<size_t>(j));
        }
    }
    // term-by-term expansion; inputs here are small
    Polynomial acc(target);
    for (const auto& t : f.terms()) {
        Polynomial m = Polynomial::constant(target, t.coef);
        for (size_t i = 0; i < images.size(); ++i)
            for (uint32_t k = 0; k < t.exp[i]; ++k) m = m * images[i];
        acc = acc + m;
    }
    return acc;
}

Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& assignment) {
    return substitute(f, assignment, f.ring());
}

std::vector<Polynomial> linear_change(const std::vector<Polynomial>& gens,
                                      const std::vector<std::vector<Scalar>>& M) {
    if (gens.empty()) return gens;
    RingPtr ring = gens.front().ring();
    size_t n = ring->nvars();
    if (M.size() != n)
        throw MathError("linear change matrix has wrong size");
    for (const auto& row : M)
        if (row.size() != n)
            throw MathError("linear change matrix has wrong size");
    // determinant check via fraction-free-ish Gaussian elimination
    std::vector<std::vector<Scalar>> A = M;
    bool singular = false;
    for (size_t c = 0; c < n && !singular; ++c) {
        size_t piv = c;
        while (piv < n && A[piv][c].is_zero()) ++piv;
        if (piv == n) { singular = true; break; }
        std::swap(A[piv], A[c]);
        Scalar inv = A[c][c].inv();
        for (size_t r = c + 1; r < n; ++r) {
            if (A[r][c].is_zero()) continue;
            Scalar fct = A[r][c] * inv;
            for (size_t k = c; k < n; ++k) A[r][k] -= fct * A[c][k];
        }
    }
    if (singular) throw MathError("linear change matrix is singular");

    std::map<std::string, Polynomial> assignment;
    for (size_t i = 0; i < n; ++i) {
        Polynomial img(ring);
        for (size_t j = 0; j < n; ++j)
            img = img + Polynomial::variable(ring, j).scaled(M[i][j]);
        assignment.emplace(ring->vars()[i], img);
    }
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(substitute(g, assignment));
    return out;
}

RingPtr ring_without_var(const RingPtr& ring, const std::string& var) {
    int idx = ring->var_index(var);
    if (idx < 0) throw MathError("no such variable: " + var);
    std::vector<std::string> vars;
    for (size_t i = 0; i < ring->nvars(); ++i)
        if (static_cast<int>(i) != idx) vars.push_back(ring->vars()[i]);
    MonomialOrder ord = ring->order();
    if (ord.kind == OrderKind::BlockElim) ord = MonomialOrder::grevlex();
    return PolyRing::make(ring->field(), std::move(vars), ord);
}

RingPtr ring_with_prefix_var(const RingPtr& ring, const std::string& var,
                             MonomialOrder order) {
    if (ring->var_index(var) >= 0)
        throw MathError("variable already present: " + var);
    std::vector<std::string> vars{var};
    for (const auto& v : ring->vars()) vars.push_back(v);
    return PolyRing::make(ring->field(), std::move(vars), order);
}

Polynomial dehomogenize(const Polynomial& f, const std::string& var,
                        const RingPtr& target) {
    const RingPtr& src = f.ring();
    int idx = src->var_index(var);
    if (idx < 0) throw MathError("no such variable: " + var);
    std::vector<Polynomial::Term> terms;
    for (const auto& t : f.terms()) {
        Expvec e;
        e.reserve(target->nvars());
        for (size_t i = 0; i < t.exp.size(); ++i)
            if (static_cast<int>(i) != idx) e.push_back(t.exp[i]);
        terms.push_back({std::move(e), t.coef});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Polynomial homogenize(const Polynomial& f, const std::string& var,
                      const RingPtr& target) {
    const RingPtr& src = f.ring();
    int tidx = target->var_index(var);
    if (tidx < 0) throw MathError("target ring missing variable: " + var);
    if (src->var_index(var) >= 0)
        throw MathError("polynomial already involves " + var);
    uint32_t d = f.degree();
    std::vector<Polynomial::Term> terms;
    for (const auto& t : f.terms()) {
        Expvec e(target->nvars(), 0);
        for (size_t i = 0; i < t.exp.size(); ++i) {
            int j = target->var_index(src->vars()[i]);
            if (j < 0) throw MathError("target ring missing variable: " +
                                       src->vars()[i]);
            e[static_cast<size_t>(j)] = t.exp[i];
        }
        e[static_cast<size_t>(tidx)] = d - total_degree(t.exp);
        terms.push_back({std::move(e), t.coef});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

} // namespace agor
