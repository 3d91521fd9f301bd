#include "series.hpp"

#include "sequences.hpp"

#include <algorithm>
#include <utility>

namespace nara {

namespace {
const Rat kZero(0);
}

LaurentSeries::LaurentSeries(long start, long trunc, std::vector<Rat> cs)
    : start_(start), trunc_(trunc), coeffs_(std::move(cs)) {
    const long want = trunc_ >= start_ ? trunc_ - start_ + 1 : 0;
    if (static_cast<long>(coeffs_.size()) != want)
        throw std::logic_error("LaurentSeries: coefficient count mismatch");
}

LaurentSeries LaurentSeries::zero(long trunc_order) {
    return {trunc_order + 1, trunc_order, {}};
}

LaurentSeries LaurentSeries::monomial(const Rat& c, long exp,
                                      long trunc_order) {
    if (exp > trunc_order)
        throw std::invalid_argument("monomial: exponent above truncation");
    std::vector<Rat> cs(static_cast<std::size_t>(trunc_order - exp + 1));
    cs[0] = c;
    return {exp, trunc_order, std::move(cs)};
}

LaurentSeries LaurentSeries::from_coeffs(std::vector<Rat> cs, long start_exp) {
    const long trunc = start_exp + static_cast<long>(cs.size()) - 1;
    return {start_exp, trunc, std::move(cs)};
}

LaurentSeries LaurentSeries::exact_polynomial(std::vector<Rat> cs,
                                              long trunc_order) {
    if (trunc_order < 0) return zero(trunc_order);
    cs.resize(static_cast<std::size_t>(trunc_order) + 1);
    return {0, trunc_order, std::move(cs)};
}

const Rat& LaurentSeries::coeff(long e) const {
    if (e > trunc_)
        throw std::out_of_range("LaurentSeries: coefficient of x^" +
                                std::to_string(e) +
                                " is beyond truncation order " +
                                std::to_string(trunc_));
    if (e < start_) return kZero;
    return coeffs_[static_cast<std::size_t>(e - start_)];
}

bool LaurentSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return c == 0; });
}

LaurentSeries LaurentSeries::normalized() const {
    std::size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
    std::vector<Rat> cs(coeffs_.begin() + static_cast<long>(skip),
                        coeffs_.end());
    return {start_ + static_cast<long>(skip), trunc_, std::move(cs)};
}

LaurentSeries LaurentSeries::truncated(long order) const {
    if (order >= trunc_) return *this;
    if (order < start_) return zero(order);
    std::vector<Rat> cs(coeffs_.begin(),
                        coeffs_.begin() + (order - start_ + 1));
    return {start_, order, std::move(cs)};
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    const long trunc = std::min(a.trunc_, b.trunc_);
    const long start = std::min(a.start_, b.start_);
    if (trunc < start) return LaurentSeries::zero(trunc);
    std::vector<Rat> cs(static_cast<std::size_t>(trunc - start + 1));
    for (long e = start; e <= trunc; ++e)
        cs[static_cast<std::size_t>(e - start)] = a.coeff(e) + b.coeff(e);
    return {start, trunc, std::move(cs)};
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) {
    const long trunc = std::min(a.trunc_, b.trunc_);
    const long start = std::min(a.start_, b.start_);
    if (trunc < start) return LaurentSeries::zero(trunc);
    std::vector<Rat> cs(static_cast<std::size_t>(trunc - start + 1));
    for (long e = start; e <= trunc; ++e)
        cs[static_cast<std::size_t>(e - start)] = a.coeff(e) - b.coeff(e);
    return {start, trunc, std::move(cs)};
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    // The product is determined only as far as the weaker factor allows.
    const long trunc = std::min(a.trunc_ + b.start_, b.trunc_ + a.start_);
    const long start = a.start_ + b.start_;
    if (trunc < start) return LaurentSeries::zero(trunc);
    std::vector<Rat> cs(static_cast<std::size_t>(trunc - start + 1));
    Rat prod;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        const long ea = a.start_ + static_cast<long>(i);
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            const long e = ea + b.start_ + static_cast<long>(j);
            if (e > trunc) break;
            prod = a.coeffs_[i] * b.coeffs_[j];
            cs[static_cast<std::size_t>(e - start)] += prod;
        }
    }
    return {start, trunc, std::move(cs)};
}

LaurentSeries scale(const LaurentSeries& a, const Rat& q) {
    std::vector<Rat> cs(a.coeffs_.size());
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeffs_[i] * q;
    return {a.start_, a.trunc_, std::move(cs)};
}

LaurentSeries shift(const LaurentSeries& a, long m) {
    return {a.start_ + m, a.trunc_ + m, a.coeffs_};
}

LaurentSeries inverse_unit(const LaurentSeries& a) {
    const LaurentSeries an = a.normalized();
    if (an.coeffs_.empty() || an.coeffs_[0] == 0)
        throw NonInvertibleError(
            "inverse_unit: lowest available coefficient is zero");
    const Rat& unit = an.coeffs_[0];
    const std::size_t m = an.coeffs_.size();
    std::vector<Rat> inv(m);
    inv[0] = 1 / unit;
    Rat acc;
    for (std::size_t n = 1; n < m; ++n) {
        acc = 0;
        for (std::size_t i = 1; i <= n; ++i)
            acc += an.coeffs_[i] * inv[n - i];
        inv[n] = -acc / unit;
    }
    const long start = -an.start_;
    const long trunc = start + static_cast<long>(m) - 1;
    return {start, trunc, std::move(inv)};
}

LaurentSeries derivative(const LaurentSeries& a) {
    std::vector<Rat> cs(a.coeffs_.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = a.coeffs_[i] * (a.start_ + static_cast<long>(i));
    return {a.start_ - 1, a.trunc_ - 1, std::move(cs)};
}

SeriesAgreement agree(const LaurentSeries& a, const LaurentSeries& b) {
    SeriesAgreement r;
    r.through = std::min(a.trunc_order(), b.trunc_order());
    for (long e = std::min(a.start_exp(), b.start_exp()); e <= r.through;
         ++e) {
        if (a.coeff(e) != b.coeff(e)) {
            r.equal = false;
            r.first_mismatch = e;
            return r;
        }
    }
    return r;
}

std::string to_string(const LaurentSeries& s) {
    std::string out;
    for (long e = s.start_exp(); e <= s.trunc_order(); ++e) {
        const Rat& c = s.coeff(e);
        if (c == 0) continue;
        const bool negative = c < 0;
        Rat mag = negative ? Rat(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string xpart;
        if (e == 1)
            xpart = "x";
        else if (e != 0)
            xpart = "x^" + std::to_string(e);
        if (xpart.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += xpart;
        else
            out += to_string(mag) + "*" + xpart;
    }
    if (out.empty()) out = "0";
    out += " (+ O(x^" + std::to_string(s.trunc_order() + 1) + "))";
    return out;
}

namespace {

LaurentSeries denominator_series(int k, long order) {
    std::vector<Rat> cs;
    cs.resize(static_cast<std::size_t>(k) + 1);
    cs[0] = 1;
    cs[1] = -1;
    cs[static_cast<std::size_t>(k)] += -1;  // k == 1 would fold onto x^1
    return LaurentSeries::exact_polynomial(std::move(cs), order);
}

void require_k(int k) {
    if (k < 2) throw std::invalid_argument("series builders require k >= 2");
}

void require_order(long N) {
    if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
}

// k^{k-1}/x^{k-3} * sum_{i=0}^{k-3} i*x^{i-1}, shared by the B and C closed
// forms; the sum is empty (zero) for k < 4.
LaurentSeries closed_form_correction(int k, long order) {
    std::vector<Rat> cs;
    if (k >= 4) {
        cs.resize(static_cast<std::size_t>(k - 3));
        for (long i = 1; i <= k - 3; ++i)
            cs[static_cast<std::size_t>(i - 1)] = Rat(i);
    }
    LaurentSeries sum = LaurentSeries::exact_polynomial(std::move(cs), order);
    const Rat lead(Int(ipow(k, static_cast<unsigned long>(k - 1))));
    return shift(scale(sum, lead), -(k - 3));
}

}  // namespace

LaurentSeries narayana_gf(int k, long N) {
    require_k(k);
    require_order(N);
    const LaurentSeries inv = inverse_unit(denominator_series(k, N + 1));
    return shift(inv, 1).truncated(N);
}

LaurentSeries A_gf(int k, long N) {
    require_k(k);
    require_order(N);
    const LaurentSeries inv = inverse_unit(denominator_series(k, N + 2));
    const LaurentSeries sq = mul(inv, inv);
    const Rat d(Int(ipow(k, static_cast<unsigned long>(k)) +
                    ipow(k - 1, static_cast<unsigned long>(k - 1))));
    return scale(shift(sq, 2), d).truncated(N);
}

namespace {

// (c0 + c1 x^{k-1}) / (x^{k-3} (1 - x - x^k)^2) - correction, through N.
LaurentSeries closed_form_family(int k, const Int& c0, const Int& c1, long N) {
    const long pad = N + k;
    const LaurentSeries inv = inverse_unit(denominator_series(k, pad));
    const LaurentSeries sq = mul(inv, inv);
    std::vector<Rat> nc(static_cast<std::size_t>(k));
    nc[0] = Rat(c0);
    nc[static_cast<std::size_t>(k - 1)] += Rat(c1);
    const LaurentSeries numer =
        LaurentSeries::exact_polynomial(std::move(nc), pad);
    const LaurentSeries main = shift(mul(numer, sq), -(k - 3));
    return sub(main, closed_form_correction(k, pad)).truncated(N);
}

}  // namespace

LaurentSeries B_gf_closed(int k, long N) {
    require_k(k);
    require_order(N);
    const unsigned long uk = static_cast<unsigned long>(k);
    return closed_form_family(k, ipow(k, uk - 1), ipow(k, uk), N);
}

LaurentSeries C_gf_closed(int k, long N) {
    require_k(k);
    require_order(N);
    const unsigned long uk = static_cast<unsigned long>(k);
    return closed_form_family(k, ipow(k, uk - 1), -ipow(k - 1, uk - 1), N);
}

LaurentSeries B_gf_def(int k, long N) {
    require_k(k);
    require_order(N);
    const TermVector tv =
        terms(narayana_spec(k), static_cast<std::size_t>(N + k - 1));
    const Int lead = ipow(k, static_cast<unsigned long>(k - 1));
    std::vector<Rat> cs(static_cast<std::size_t>(N + 1));
    for (long n = 0; n <= N; ++n)
        cs[static_cast<std::size_t>(n)] =
            Rat(lead * Int(n + k - 2) *
                tv.at(static_cast<std::size_t>(n + k - 1)));
    return LaurentSeries::from_coeffs(std::move(cs), 0);
}

LaurentSeries C_gf_def(int k, long N) {
    require_k(k);
    require_order(N);
    const TermVector tv =
        terms(narayana_spec(k), static_cast<std::size_t>(N + k - 2));
    std::vector<Rat> cs(static_cast<std::size_t>(N + 1));
    for (long n = 0; n <= N; ++n) {
        Int acc = 0;
        for (int j = 0; j <= k - 2; ++j) {
            const Int c = ipow(k, static_cast<unsigned long>(j)) *
                          ipow(k - 1, static_cast<unsigned long>(k - 2 - j));
            acc += c * Int(n + k + j - 1) *
                   tv.at(static_cast<std::size_t>(n + j));
        }
        cs[static_cast<std::size_t>(n)] = Rat(acc);
    }
    return LaurentSeries::from_coeffs(std::move(cs), 0);
}

const Int& IntPolynomial::leading() const {
    if (coeffs.empty()) throw std::invalid_argument("zero polynomial");
    return coeffs.back();
}

IntPolynomial derivative(const IntPolynomial& p) {
    std::vector<Int> cs;
    for (std::size_t i = 1; i < p.coeffs.size(); ++i)
        cs.push_back(p.coeffs[i] * Int(static_cast<long>(i)));
    return IntPolynomial(std::move(cs));
}

IntPolynomial one_minus_x_minus_xk(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<Int> cs(static_cast<std::size_t>(k) + 1);
    cs[0] = 1;
    cs[1] = -1;
    cs[static_cast<std::size_t>(k)] += -1;
    return IntPolynomial(std::move(cs));
}

namespace {

// Determinant by Bareiss fraction-free elimination; all divisions exact.
Int bareiss_determinant(std::vector<std::vector<Int>> m) {
    const std::size_t d = m.size();
    if (d == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t r = 0; r + 1 < d; ++r) {
        if (m[r][r] == 0) {
            std::size_t swap_row = r + 1;
            while (swap_row < d && m[swap_row][r] == 0) ++swap_row;
            if (swap_row == d) return 0;
            std::swap(m[r], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < d; ++i) {
            for (std::size_t j = r + 1; j < d; ++j) {
                Int num = m[r][r] * m[i][j] - m[i][r] * m[r][j];
                if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
                    throw InexactDivisionError(
                        "bareiss: pivot does not divide update");
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][r] = 0;
        }
        prev = m[r][r];
    }
    return sign < 0 ? Int(-m[d - 1][d - 1]) : m[d - 1][d - 1];
}

}  // namespace

Int resultant(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero()) throw std::invalid_argument("resultant: p is zero");
    if (q.is_zero()) return 0;
    const long dp = p.degree();
    const long dq = q.degree();
    const long d = dp + dq;
    if (d == 0) return 1;
    std::vector<std::vector<Int>> m(
        static_cast<std::size_t>(d),
        std::vector<Int>(static_cast<std::size_t>(d)));
    for (long r = 0; r < dq; ++r)
        for (long c = 0; c <= dp; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + c)] =
                p.coeffs[static_cast<std::size_t>(dp - c)];
    for (long r = 0; r < dp; ++r)
        for (long c = 0; c <= dq; ++c)
            m[static_cast<std::size_t>(dq + r)]
             [static_cast<std::size_t>(r + c)] =
                q.coeffs[static_cast<std::size_t>(dq - c)];
    return bareiss_determinant(std::move(m));
}

Int discriminant(const IntPolynomial& p) {
    const long d = p.degree();
    if (d < 1)
        throw std::invalid_argument("discriminant requires degree >= 1");
    Int r = resultant(p, derivative(p));
    if ((d * (d - 1) / 2) % 2 != 0) r = -r;
    if (!mpz_divisible_p(r.get_mpz_t(), p.leading().get_mpz_t()))
        throw InexactDivisionError(
            "discriminant: resultant not divisible by leading coefficient");
    Int out;
    mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
    return out;
}

}  // namespace nara
