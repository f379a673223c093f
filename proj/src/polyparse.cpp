#include "agor/polyparse.hpp"

#include <cctype>

namespace agor {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    int line = 1, col = 1;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            advance();
    }
    char peek() const { return i < s.size() ? s[i] : '\0'; }
    void advance() {
        if (i >= s.size()) return;
        if (s[i] == '\n') { ++line; col = 1; }
        else ++col;
        ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, col);
    }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@';
}
bool ident_char(char c) {
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

std::string read_uint(Cursor& cur) {
    cur.skip_ws();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        digits += cur.peek();
        cur.advance();
    }
    if (digits.empty()) cur.fail("expected an unsigned integer");
    return digits;
}

std::string read_ident(Cursor& cur) {
    cur.skip_ws();
    if (!ident_start(cur.peek())) cur.fail("expected a variable name");
    std::string name;
    while (ident_char(cur.peek())) {
        name += cur.peek();
        cur.advance();
    }
    return name;
}

Polynomial parse_term(const RingPtr& ring, Cursor& cur) {
    Scalar coef(ring->field(), 1);
    bool have_any = false;
    cur.skip_ws();
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        std::string num = read_uint(cur);
        coef = Scalar::from_decimal(ring->field(), num);
        cur.skip_ws();
        if (cur.peek() == '/') {
            cur.advance();
            std::string den = read_uint(cur);
            Scalar d = Scalar::from_decimal(ring->field(), den);
            if (d.is_zero()) cur.fail("zero denominator");
            coef = coef / d;
        }
        have_any = true;
    }
    Expvec e(ring->nvars(), 0);
    for (;;) {
        cur.skip_ws();
        if (cur.peek() == '*') {
            cur.advance();
            cur.skip_ws();
        }
        if (!ident_start(cur.peek())) break;
        int lc = cur.line, cc = cur.col;
        std::string name = read_ident(cur);
        int idx = ring->var_index(name);
        if (idx < 0)
            throw ParseError("undeclared variable '" + name + "'", lc, cc);
        uint32_t pow = 1;
        cur.skip_ws();
        if (cur.peek() == '^') {
            cur.advance();
            pow = static_cast<uint32_t>(std::stoul(read_uint(cur)));
        }
        uint64_t sum = static_cast<uint64_t>(e[static_cast<size_t>(idx)]) + pow;
        if (sum > 0x7fffffff) cur.fail("exponent overflow");
        e[static_cast<size_t>(idx)] = static_cast<uint32_t>(sum);
        have_any = true;
    }
    if (!have_any) cur.fail("expected a term");
    return Polynomial::monomial(ring, e, coef);
}

} // namespace

Polynomial parse_poly(const RingPtr& ring, const std::string& text) {
    Cursor cur{text};
    cur.skip_ws();
    bool neg = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
        neg = cur.peek() == '-';
        cur.advance();
    }
    Polynomial acc = parse_term(ring, cur);
    if (neg) acc = -acc;
    for (;;) {
        cur.skip_ws();
        char c = cur.peek();
        if (c != '+' && c != '-') break;
        cur.advance();
        Polynomial t = parse_term(ring, cur);
        acc = c == '+' ? acc + t : acc - t;
    }
    if (!cur.eof()) cur.fail("unexpected trailing input");
    return acc;
}

} // namespace agor
