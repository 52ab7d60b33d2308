#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgelab {

using Int = mpz_class;
using Rat = mpq_class;

class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Normalized fraction num/den (den != 0).
Rat make_rat(const Int& num, const Int& den);

/// Fractional part in [0, 1).
Rat frac_part(const Rat& q);

std::size_t bit_length(const Int& v);

/// Parses "p/q", "p", or "-p/q" into an exact rational.
Rat parse_rat(const std::string& text);
std::string rat_to_string(const Rat& q);

// Dense univariate polynomial over the rationals, coefficients low to high.
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& v);
    static Poly monomial(std::size_t deg, const Rat& v);

    /// -1 for the zero polynomial.
    long degree() const;
    bool is_zero() const;
    void normalize();
    Rat eval(const Rat& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    bool operator==(const Poly& other) const;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Rational function num/den; den is never the zero polynomial.
struct RatFun {
    Poly num;
    Poly den;

    RatFun() : num(), den(Poly::constant(1)) {}
    RatFun(Poly n, Poly d);
    static RatFun constant(const Rat& v);
    bool is_zero() const { return num.is_zero(); }
    Rat eval(const Rat& x) const;

    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator+(const RatFun& a, const RatFun& b);
};

using Matrix = std::vector<std::vector<Rat>>;

/// Exact rank by Gaussian elimination. Denominators are cleared row-wise
/// first; pivots are chosen by largest numerator bit length.
std::size_t matrix_rank(Matrix m);

/// Reduced row echelon form (zero rows dropped): canonical basis of the row span.
Matrix row_space_basis(Matrix m);

}  // namespace hodgelab
