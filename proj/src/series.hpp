#pragma once

#include "bigint.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace nara {

struct NonInvertibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InexactDivisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated Laurent series: exact rational coefficients for every exponent
// in [start_exp, trunc_order]. Exponents below start_exp are known zero;
// exponents above trunc_order are unknown, never assumed zero.
class LaurentSeries {
public:
    LaurentSeries() : start_(1), trunc_(0) {}  // zero, known through -infinity-ish

    static LaurentSeries zero(long trunc_order);
    static LaurentSeries monomial(const Rat& c, long exp, long trunc_order);
    // Coefficients cs[0].. at consecutive exponents from start_exp;
    // trunc_order = start_exp + cs.size() - 1.
    static LaurentSeries from_coeffs(std::vector<Rat> cs, long start_exp);
    // A polynomial sum cs[e]*x^e whose higher coefficients are known zero
    // through trunc_order.
    static LaurentSeries exact_polynomial(std::vector<Rat> cs,
                                          long trunc_order);

    long start_exp() const { return start_; }
    long trunc_order() const { return trunc_; }

    // Coefficient of x^e; zero below start_exp, throws above trunc_order.
    const Rat& coeff(long e) const;

    bool is_zero() const;  // every represented coefficient is zero
    LaurentSeries normalized() const;       // trim leading zero coefficients
    LaurentSeries truncated(long order) const;  // forget coefficients above

    friend LaurentSeries add(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries sub(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries mul(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries scale(const LaurentSeries&, const Rat&);
    friend LaurentSeries shift(const LaurentSeries&, long m);
    friend LaurentSeries inverse_unit(const LaurentSeries&);
    friend LaurentSeries derivative(const LaurentSeries&);

private:
    LaurentSeries(long start, long trunc, std::vector<Rat> cs);

    long start_;
    long trunc_;
    std::vector<Rat> coeffs_;  // size trunc_ - start_ + 1 (empty if start_ > trunc_)
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scale(const LaurentSeries& a, const Rat& q);
LaurentSeries shift(const LaurentSeries& a, long m);  // multiply by x^m
// Multiplicative inverse through the available order; the lowest coefficient
// after normalization must be nonzero (NonInvertibleError otherwise).
LaurentSeries inverse_unit(const LaurentSeries& a);
LaurentSeries derivative(const LaurentSeries& a);

// Coefficient-wise comparison over the mutually determined exponent range.
struct SeriesAgreement {
    bool equal = true;
    long through = 0;         // highest exponent compared
    long first_mismatch = 0;  // meaningful when !equal
};
SeriesAgreement agree(const LaurentSeries& a, const LaurentSeries& b);

// "c*x^e + ... (+ O(x^{N+1}))" with unit coefficients elided and exact
// rationals printed as p/q.
std::string to_string(const LaurentSeries& s);

// Generating functions of the k-step Narayana family, each determined
// through exactly the requested order N.
//   narayana_gf:  x / (1 - x - x^k);  coefficient of x^n is the n-th term
//   A_gf:         (k^k + (k-1)^{k-1}) x^2 / (1 - x - x^k)^2
//   B_gf_closed:  (k^{k-1} + k^k x^{k-1}) / (x^{k-3} (1 - x - x^k)^2)
//                 minus the shared correction k^{k-1}/x^{k-3} * sum i*x^{i-1}
//   C_gf_closed:  (k^{k-1} - (k-1)^{k-1} x^{k-1}) / (x^{k-3} (1 - x - x^k)^2)
//                 minus the same correction (empty for k < 4)
//   B_gf_def / C_gf_def: ordinary power series built term-by-term from the
//                 coefficient definitions via iterated sequence terms
LaurentSeries narayana_gf(int k, long N);
LaurentSeries A_gf(int k, long N);
LaurentSeries B_gf_closed(int k, long N);
LaurentSeries C_gf_closed(int k, long N);
LaurentSeries B_gf_def(int k, long N);
LaurentSeries C_gf_def(int k, long N);

// Dense integer polynomial, lowest degree first; highest stored coefficient
// is nonzero unless the polynomial is zero.
struct IntPolynomial {
    std::vector<Int> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> cs) : coeffs(std::move(cs)) {
        normalize();
    }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    const Int& leading() const;
};

IntPolynomial derivative(const IntPolynomial& p);
IntPolynomial one_minus_x_minus_xk(int k);

// Sylvester-matrix determinant via Bareiss fraction-free elimination.
Int resultant(const IntPolynomial& p, const IntPolynomial& q);
// (-1)^{d(d-1)/2} * resultant(p, p') / lc(p); the division must be exact.
Int discriminant(const IntPolynomial& p);

}  // namespace nara
