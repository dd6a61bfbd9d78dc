#pragma once

#include "quartet/exact.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace quartet {

class BiPoly;

// Dense univariate polynomial in p with exact integer coefficients.
// coeff(i) is the coefficient of p^i. Always kept trimmed: the highest
// stored coefficient is nonzero. The zero polynomial stores nothing and
// reports its degree as std::nullopt, never as a number.
class UniPoly {
public:
    UniPoly() = default;                       // zero polynomial
    explicit UniPoly(std::vector<ExactInt> coeffs);
    static UniPoly constant(ExactInt c);

    std::optional<int> degree() const;
    const ExactInt& coeff(int i) const;        // zero outside the stored range
    const ExactInt& leading() const;           // requires a nonzero polynomial
    bool is_zero() const { return c_.empty(); }

    ExactInt eval(const ExactInt& p) const;
    UniPoly derivative() const;
    UniPoly reflected() const;                 // p -> -p
    BiPoly to_bipoly() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& f, const UniPoly& g);
    friend UniPoly operator-(const UniPoly& f, const UniPoly& g);
    friend UniPoly operator*(const UniPoly& f, const UniPoly& g);
    friend bool operator==(const UniPoly& f, const UniPoly& g);

    // Rendered with monomials in descending degree, e.g. "p^3+2p-1".
    std::string str() const;

private:
    std::vector<ExactInt> c_;
    void trim();
};

// Dense bivariate polynomial in p and q. coeff(i, j) is the coefficient of
// p^i q^j, stored row-major with rows indexed by the p-exponent. Kept in
// canonical trimmed form: the last row and the last column each contain a
// nonzero entry; the zero polynomial is the empty grid, so structural
// equality of the representation is equality of polynomials.
class BiPoly {
public:
    BiPoly() = default;                        // zero polynomial
    static BiPoly constant(ExactInt c);
    static BiPoly monomial(ExactInt coeff, int pdeg, int qdeg);
    // rows[i][j] is the coefficient of p^i q^j; ragged rows are fine.
    static BiPoly from_rows(std::vector<std::vector<ExactInt>> rows);

    const ExactInt& coeff(int i, int j) const; // zero outside the stored grid
    std::optional<int> degree_p() const;
    std::optional<int> degree_q() const;
    bool is_zero() const { return data_.empty(); }

    ExactInt eval(const ExactInt& p, const ExactInt& q) const;
    // Collapse q to a constant, leaving a polynomial in p alone.
    UniPoly specialize_q(const ExactInt& q0) const;
    bool is_univariate_p() const { return cols_ <= 1; }
    UniPoly to_unipoly() const;                // requires is_univariate_p()

    BiPoly operator-() const;
    BiPoly pow(unsigned k) const;              // f^0 == 1 for every f
    friend BiPoly operator+(const BiPoly& f, const BiPoly& g);
    friend BiPoly operator-(const BiPoly& f, const BiPoly& g);
    friend BiPoly operator*(const BiPoly& f, const BiPoly& g);
    friend bool operator==(const BiPoly& f, const BiPoly& g);

    // Monomials in descending total degree, ties broken by descending
    // p-degree: "p^2q^2+2q^4", "p^2-pq+q^2", "0".
    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<ExactInt> data_;               // rows_ * cols_, row-major

    BiPoly(int rows, int cols);
    ExactInt& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const ExactInt& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    void trim();
};

// q^d * f(p/q): each coefficient c_i of f lands on the monomial p^i q^(d-i),
// so every term of the result has total degree exactly d. Setting q = 1
// recovers f. Throws DegreeTooSmallError when d < deg(f); the zero
// polynomial maps to zero for any d.
BiPoly homogenize(const UniPoly& f, int d);

inline std::ostream& operator<<(std::ostream& os, const UniPoly& f) {
    return os << f.str();
}

inline std::ostream& operator<<(std::ostream& os, const BiPoly& f) {
    return os << f.str();
}

} // namespace quartet
