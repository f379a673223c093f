#include "agor/field.hpp"

namespace agor {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit range
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw MathError("division by zero in F_" + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

uint64_t sqrt_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (pow_mod(a, (p - 1) / 2, p) != 1)
        throw MathError("no square root of " + std::to_string(a) + " in F_" +
                        std::to_string(p));
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    uint64_t q = p - 1;
    uint64_t s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    uint64_t m = s;
    uint64_t c = pow_mod(z, q, p);
    uint64_t t = pow_mod(a, q, p);
    uint64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0;
        uint64_t tt = t;
        while (tt != 1) { tt = mul_mod(tt, tt, p); ++i; }
        uint64_t b = c;
        for (uint64_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

Field Field::prime(uint64_t p) {
    if (p == 2 || p == 3)
        throw MathError("characteristic " + std::to_string(p) +
                        " unsupported");
    if (p >= (1ull << 31) || !is_prime_u64(p))
        throw MathError("field characteristic must be a prime < 2^31, got " +
                        std::to_string(p));
    return Field{FieldKind::PrimeField, p};
}

std::string Field::str() const {
    return is_prime_field() ? "Fp(" + std::to_string(p) + ")" : "QQ";
}

Scalar::Scalar(const Field& f, long n) : field_(f) {
    if (f.is_prime_field()) {
        long m = n % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        v_ = static_cast<uint64_t>(m);
    } else {
        v_ = mpq_class(n);
    }
}

Scalar::Scalar(const Field& f, const mpq_class& q) : field_(f) {
    if (f.is_prime_field()) {
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pz(static_cast<unsigned long>(f.p));
        mpz_class nm = num % pz;
        if (nm < 0) nm += pz;
        mpz_class dm = den % pz;
        uint64_t d = dm.get_ui();
        if (d == 0)
            throw MathError("denominator divisible by field characteristic");
        v_ = mul_mod(nm.get_ui(), inv_mod(d, f.p), f.p);
    } else {
        mpq_class c = q;
        c.canonicalize();
        v_ = c;
    }
}

Scalar Scalar::from_decimal(const Field& f, const std::string& digits) {
    mpz_class z(digits, 10);
    return Scalar(f, mpq_class(z));
}

bool Scalar::is_zero() const {
    if (field_.is_prime_field()) return std::get<uint64_t>(v_) == 0;
    return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_prime_field()) return std::get<uint64_t>(v_) == 1;
    return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw MathError("scalar field mismatch: " + field_.str() + " vs " +
                        o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r(field_);
    if (field_.is_prime_field())
        r.v_ = add_mod(std::get<uint64_t>(v_), std::get<uint64_t>(o.v_),
                       field_.p);
    else
        r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r(field_);
    if (field_.is_prime_field())
        r.v_ = sub_mod(std::get<uint64_t>(v_), std::get<uint64_t>(o.v_),
                       field_.p);
    else
        r.v_ = mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_));
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r(field_);
    if (field_.is_prime_field())
        r.v_ = mul_mod(std::get<uint64_t>(v_), std::get<uint64_t>(o.v_),
                       field_.p);
    else
        r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    Scalar r(field_);
    if (field_.is_prime_field()) {
        uint64_t a = std::get<uint64_t>(v_);
        r.v_ = a == 0 ? uint64_t{0} : field_.p - a;
    } else {
        r.v_ = mpq_class(-std::get<mpq_class>(v_));
    }
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw MathError("division by zero");
    Scalar r(field_);
    if (field_.is_prime_field())
        r.v_ = inv_mod(std::get<uint64_t>(v_), field_.p);
    else
        r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    if (field_.is_prime_field())
        return std::get<uint64_t>(v_) == std::get<uint64_t>(o.v_);
    return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

bool Scalar::less_canonical(const Scalar& o) const {
    check_same(o);
    if (field_.is_prime_field())
        return std::get<uint64_t>(v_) < std::get<uint64_t>(o.v_);
    return std::get<mpq_class>(v_) < std::get<mpq_class>(o.v_);
}

const mpq_class& Scalar::rat() const {
    if (field_.is_prime_field())
        throw MathError("rational value requested from prime-field scalar");
    return std::get<mpq_class>(v_);
}

uint64_t Scalar::residue() const {
    if (!field_.is_prime_field())
        throw MathError("residue requested from rational scalar");
    return std::get<uint64_t>(v_);
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(std::get<uint64_t>(v_));
    return std::get<mpq_class>(v_).get_str();
}

} // namespace agor
