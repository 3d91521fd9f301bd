#pragma once

#include "bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nara {

// Order-k linear recurrence a_n = c_1*a_{n-1} + ... + c_k*a_{n-k} together
// with its initial terms a_0..a_{k-1}. Terms are defined for n >= 0 only.
struct SequenceSpec {
    int order = 0;              // k >= 1
    std::vector<Int> coeffs;    // c_1..c_k
    std::vector<Int> initial;   // a_0..a_{k-1}
    std::string name;
};

// Dense run of consecutive terms; values[i] is the term at start_index + i.
struct TermVector {
    std::size_t start_index = 0;
    std::vector<Int> values;

    const Int& at(std::size_t n) const;
    std::size_t end_index() const { return start_index + values.size(); }
};

// k-step Narayana numbers: a_0 = 0, a_i = 1 for 1 <= i <= k-1,
// a_n = a_{n-1} + a_{n-k}. Rejects k < 2. k = 2 is the Fibonacci spec.
SequenceSpec narayana_spec(int k);
SequenceSpec fibonacci_spec();
SequenceSpec lucas_spec();
// Third-order X_n = X_{n-1} + X_{n-3} with X_0 = X_1 = 0, X_2 = 1;
// shifted Narayana: X_n = R_{n-1} for n >= 1.
SequenceSpec rabinowitz_spec();

void validate(const SequenceSpec& spec);

// a_0..a_{n_max} by plain iteration, O(n_max * k) bigint additions.
TermVector terms(const SequenceSpec& spec, std::size_t n_max);

// Same run with every term reduced mod modulus (>= 2).
TermVector terms_mod(const SequenceSpec& spec, std::size_t n_max,
                     const Int& modulus);

// Single term in O(n) time but O(k) memory (ring buffer); modular variant
// reduces every step. modulus, when given, must be >= 2.
Int term_iterative(const SequenceSpec& spec, std::uint64_t n,
                   const std::optional<Int>& modulus = {});

// Single term via x^n reduced modulo the characteristic polynomial
// x^k - c_1 x^{k-1} - ... - c_k, then combined with the initial terms.
// O(k^2 log n) coefficient multiplications.
Int term_at(const SequenceSpec& spec, std::uint64_t n,
            const std::optional<Int>& modulus = {});

// Residue-polynomial layer behind term_at, exposed so callers can compose
// exponents themselves: x^(a*b+c) = (x^a)^b * x^c mod charpoly.
// Polynomials are dense coefficient vectors of length k, degree = index.
std::vector<Int> charpoly_mul(const SequenceSpec& spec,
                              const std::vector<Int>& a,
                              const std::vector<Int>& b,
                              const std::optional<Int>& modulus = {});
std::vector<Int> charpoly_pow(const SequenceSpec& spec, std::vector<Int> base,
                              std::uint64_t exp,
                              const std::optional<Int>& modulus = {});
std::vector<Int> charpoly_x_power(const SequenceSpec& spec, std::uint64_t n,
                                  const std::optional<Int>& modulus = {});
Int charpoly_combine(const SequenceSpec& spec, const std::vector<Int>& residue,
                     const std::optional<Int>& modulus = {});

}  // namespace nara
