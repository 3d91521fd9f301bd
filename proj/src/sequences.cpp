#include "sequences.hpp"

#include <stdexcept>
#include <utility>

namespace nara {

namespace {

void check_modulus(const std::optional<Int>& modulus) {
    if (modulus && *modulus < 2)
        throw std::invalid_argument("modulus must be >= 2");
}

void reduce(Int& v, const std::optional<Int>& modulus) {
    if (modulus) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), modulus->get_mpz_t());
}

}  // namespace

const Int& TermVector::at(std::size_t n) const {
    if (n < start_index || n - start_index >= values.size())
        throw std::out_of_range("TermVector: index " + std::to_string(n) +
                                " outside [" + std::to_string(start_index) +
                                ", " + std::to_string(end_index()) + ")");
    return values[n - start_index];
}

void validate(const SequenceSpec& spec) {
    if (spec.order < 1)
        throw std::invalid_argument("sequence order must be >= 1");
    if (spec.coeffs.size() != static_cast<std::size_t>(spec.order) ||
        spec.initial.size() != static_cast<std::size_t>(spec.order))
        throw std::invalid_argument(
            "coeffs and initial terms must both have exactly `order` entries");
}

SequenceSpec narayana_spec(int k) {
    if (k < 2) throw std::invalid_argument("narayana_spec requires k >= 2");
    SequenceSpec spec;
    spec.order = k;
    spec.coeffs.assign(k, 0);
    spec.coeffs[0] = 1;
    spec.coeffs[k - 1] = 1;
    spec.initial.assign(k, 1);
    spec.initial[0] = 0;
    spec.name = "narayana" + std::to_string(k);
    return spec;
}

SequenceSpec fibonacci_spec() {
    return SequenceSpec{2, {1, 1}, {0, 1}, "fibonacci"};
}

SequenceSpec lucas_spec() {
    return SequenceSpec{2, {1, 1}, {2, 1}, "lucas"};
}

SequenceSpec rabinowitz_spec() {
    return SequenceSpec{3, {1, 0, 1}, {0, 0, 1}, "rabinowitz"};
}

TermVector terms(const SequenceSpec& spec, std::size_t n_max) {
    validate(spec);
    const std::size_t k = static_cast<std::size_t>(spec.order);
    TermVector tv;
    tv.values.reserve(n_max + 1);
    for (std::size_t i = 0; i <= n_max && i < k; ++i)
        tv.values.push_back(spec.initial[i]);
    Int acc;
    for (std::size_t n = k; n <= n_max; ++n) {
        acc = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (spec.coeffs[i] == 0) continue;
            mpz_addmul(acc.get_mpz_t(), spec.coeffs[i].get_mpz_t(),
                       tv.values[n - 1 - i].get_mpz_t());
        }
        tv.values.push_back(acc);
    }
    return tv;
}

TermVector terms_mod(const SequenceSpec& spec, std::size_t n_max,
                     const Int& modulus) {
    check_modulus(modulus >= 0 ? std::optional<Int>(modulus)
                               : std::optional<Int>(modulus));
    TermVector tv = terms(spec, n_max);
    for (Int& v : tv.values) reduce(v, modulus);
    return tv;
}

Int term_iterative(const SequenceSpec& spec, std::uint64_t n,
                   const std::optional<Int>& modulus) {
    validate(spec);
    check_modulus(modulus);
    const std::uint64_t k = static_cast<std::uint64_t>(spec.order);
    if (n < k) {
        Int v = spec.initial[static_cast<std::size_t>(n)];
        reduce(v, modulus);
        return v;
    }
    std::vector<Int> ring(spec.initial.begin(), spec.initial.end());
    if (modulus)
        for (Int& v : ring) reduce(v, modulus);
    Int acc;
    for (std::uint64_t m = k; m <= n; ++m) {
        acc = 0;
        for (std::uint64_t i = 1; i <= k; ++i) {
            const Int& ci = spec.coeffs[static_cast<std::size_t>(i - 1)];
            if (ci == 0) continue;
            mpz_addmul(acc.get_mpz_t(), ci.get_mpz_t(),
                       ring[static_cast<std::size_t>((m - i) % k)].get_mpz_t());
        }
        reduce(acc, modulus);
        ring[static_cast<std::size_t>(m % k)] = acc;
    }
    return ring[static_cast<std::size_t>(n % k)];
}

std::vector<Int> charpoly_mul(const SequenceSpec& spec,
                              const std::vector<Int>& a,
                              const std::vector<Int>& b,
                              const std::optional<Int>& modulus) {
    const std::size_t k = static_cast<std::size_t>(spec.order);
    std::vector<Int> t(2 * k - 1);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(t[i + j].get_mpz_t(), a[i].get_mpz_t(),
                       b[j].get_mpz_t());
        }
    }
    // Fold x^d for d >= k back down using x^k = c_1 x^{k-1} + ... + c_k.
    for (std::size_t d = 2 * k - 2; d >= k && d < t.size(); --d) {
        if (t[d] == 0) continue;
        for (std::size_t i = 1; i <= k; ++i) {
            const Int& ci = spec.coeffs[i - 1];
            if (ci == 0) continue;
            mpz_addmul(t[d - i].get_mpz_t(), t[d].get_mpz_t(),
                       ci.get_mpz_t());
        }
    }
    t.resize(k);
    if (modulus)
        for (Int& v : t) reduce(v, modulus);
    return t;
}

std::vector<Int> charpoly_pow(const SequenceSpec& spec, std::vector<Int> base,
                              std::uint64_t exp,
                              const std::optional<Int>& modulus) {
    validate(spec);
    check_modulus(modulus);
    const std::size_t k = static_cast<std::size_t>(spec.order);
    if (base.size() != k)
        throw std::invalid_argument("charpoly_pow: base must have k entries");
    std::vector<Int> result(k);
    result[0] = 1;
    while (exp > 0) {
        if (exp & 1) result = charpoly_mul(spec, result, base, modulus);
        exp >>= 1;
        if (exp > 0) base = charpoly_mul(spec, base, base, modulus);
    }
    return result;
}

std::vector<Int> charpoly_x_power(const SequenceSpec& spec, std::uint64_t n,
                                  const std::optional<Int>& modulus) {
    validate(spec);
    const std::size_t k = static_cast<std::size_t>(spec.order);
    std::vector<Int> x(k);
    if (k == 1)
        x[0] = spec.coeffs[0];  // x = c_1 mod (x - c_1)
    else
        x[1] = 1;
    return charpoly_pow(spec, std::move(x), n, modulus);
}

Int charpoly_combine(const SequenceSpec& spec, const std::vector<Int>& residue,
                     const std::optional<Int>& modulus) {
    validate(spec);
    check_modulus(modulus);
    if (residue.size() != static_cast<std::size_t>(spec.order))
        throw std::invalid_argument(
            "charpoly_combine: residue must have k entries");
    Int acc = 0;
    for (std::size_t i = 0; i < residue.size(); ++i) {
        if (residue[i] == 0) continue;
        mpz_addmul(acc.get_mpz_t(), residue[i].get_mpz_t(),
                   spec.initial[i].get_mpz_t());
    }
    reduce(acc, modulus);
    return acc;
}

Int term_at(const SequenceSpec& spec, std::uint64_t n,
            const std::optional<Int>& modulus) {
    return charpoly_combine(spec, charpoly_x_power(spec, n, modulus), modulus);
}

}  // namespace nara
