#include "hodgelab/numeric.hpp"

#include <algorithm>

namespace hodgelab {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat frac_part(const Rat& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q - Rat(fl);
}

std::size_t bit_length(const Int& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    Rat q;
    if (q.set_str(text, 10) != 0) throw InputError("malformed rational literal: " + text);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Poly::Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) {
    normalize();
}

Poly Poly::constant(const Rat& v) {
    Poly p;
    if (v != 0) p.c.push_back(v);
    return p;
}

Poly Poly::monomial(std::size_t deg, const Rat& v) {
    Poly p;
    if (v != 0) {
        p.c.assign(deg + 1, Rat(0));
        p.c[deg] = v;
    }
    return p;
}

long Poly::degree() const {
    return static_cast<long>(c.size()) - 1;
}

bool Poly::is_zero() const {
    return c.empty();
}

void Poly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

bool Poly::operator==(const Poly& other) const {
    return c == other.c;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    Poly rem = a;
    Poly quot;
    const long db = b.degree();
    if (rem.degree() >= db) quot.c.assign(rem.degree() - db + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        const long shift = rem.degree() - db;
        Rat coef = rem.c.back() / b.c.back();
        quot.c[shift] = coef;
        for (long i = 0; i <= db; ++i) rem.c[shift + i] -= coef * b.c[i];
        rem.normalize();
    }
    quot.normalize();
    return {quot, rem};
}

RatFun::RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw InputError("rational function with zero denominator");
}

RatFun RatFun::constant(const Rat& v) {
    return RatFun(Poly::constant(v), Poly::constant(1));
}

Rat RatFun::eval(const Rat& x) const {
    Rat d = den.eval(x);
    if (d == 0) throw InputError("rational function evaluated at a pole");
    return num.eval(x) / d;
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.num, a.den * b.den);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
}

namespace {

void clear_row_denominators(std::vector<Rat>& row) {
    Int l(1);
    for (const Rat& v : row) {
        if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (l == 1) return;
    for (Rat& v : row) v *= Rat(l);
}

// Echelon reduction used by both rank and row-space form. Pivot rows are
// selected by largest numerator bit length among candidates in the column.
std::size_t echelonize(Matrix& m, bool reduced) {
    if (m.empty()) return 0;
    for (auto& row : m) clear_row_denominators(row);
    const std::size_t cols = m[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
        std::size_t best = m.size();
        std::size_t best_bits = 0;
        for (std::size_t r = pivot_row; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            std::size_t bits = bit_length(m[r][col].get_num());
            if (best == m.size() || bits > best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == m.size()) continue;
        std::swap(m[pivot_row], m[best]);
        const Rat pivot = m[pivot_row][col];
        for (std::size_t r = reduced ? 0 : pivot_row + 1; r < m.size(); ++r) {
            if (r == pivot_row || m[r][col] == 0) continue;
            Rat factor = m[r][col] / pivot;
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= factor * m[pivot_row][j];
        }
        if (reduced) {
            for (std::size_t j = col; j < cols; ++j) m[pivot_row][j] /= pivot;
        }
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

std::size_t matrix_rank(Matrix m) {
    return echelonize(m, false);
}

Matrix row_space_basis(Matrix m) {
    std::size_t rank = echelonize(m, true);
    m.resize(rank);
    return m;
}

}  // namespace hodgelab
