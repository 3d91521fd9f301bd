#pragma once

#include "sequences.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nara {

// One summand of a closed-form RHS: coeff * (alpha*n + beta) * seq(n + offset),
// where seq is roles[role] of the owning IdentityForm.
struct RhsTerm {
    Int coeff;
    long alpha = 0;
    long beta = 0;
    long offset = 0;
    int role = 0;
};

// Asserts, for all n >= min_n:
//   lhs_multiplier * sum_{i=0}^{n} a_i * a_{n-i}  =  sum of rhs terms
// with a = roles[0]; further roles serve mixed forms whose RHS references a
// second sequence (e.g. the Lucas convolution paired with Fibonacci terms).
struct IdentityForm {
    std::string name;
    int k = 0;  // family parameter for the generic form; 0 otherwise
    Int lhs_multiplier;
    std::vector<RhsTerm> terms;
    std::vector<SequenceSpec> roles;
    long min_n = 0;
    std::string notes;
};

struct NonDivisibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute-force Cauchy sums sum_{i=0}^{n} a_i*a_{n-i} for n = 0..n_max,
// O(n_max^2) bigint multiplications. Element n of the result is the
// convolution value at n. This is the oracle every closed form is
// tested against; it must stay independent of the closed-form path.
std::vector<Int> self_convolution(const SequenceSpec& spec,
                                  std::size_t n_max);

// The generic form: D = k^k + (k-1)^{k-1},
//   D * conv(n) = k^{k-1} (n+k-2) R_{n+k-1}
//               - sum_{j=0}^{k-2} k^j (k-1)^{k-2-j} (n+k+j-1) R_{n+j}.
// Rejects k < 2. For k = 2, 3, 4 the term lists reduce to the classical
// Fibonacci, Narayana and 4-step closed forms.
IdentityForm theorem1_form(int k);

// All named forms: the four Fibonacci variants, the Lucas form, the
// Rabinowitz third-order form, theorem1_form(k) for k_min..k_max, and the
// 6-step display form (whose notes record a corrected exponent reading).
std::vector<IdentityForm> catalog(int k_min = 2, int k_max = 6);

// Largest/smallest sequence index the form touches at convolution index n
// is n + max_offset(...) / n + min_offset(...).
long max_offset(const IdentityForm& form);
long min_offset(const IdentityForm& form);

// Exact RHS value before dividing by lhs_multiplier. role_terms[r] must
// cover index n + offset for every term with role r.
Int evaluate_rhs(const IdentityForm& form,
                 std::span<const TermVector> role_terms, long n);

// evaluate_rhs / lhs_multiplier, with exact divisibility checked first;
// throws NonDivisibleError otherwise (never rounds).
Int closed_form_convolution(const IdentityForm& form,
                            std::span<const TermVector> role_terms, long n);

// TermVectors sized so the form can be evaluated for min_n <= n <= n_max.
std::vector<TermVector> role_terms_for(const IdentityForm& form, long n_max);

// Copy of `form` with one coefficient bumped by +1: slot 0 is
// lhs_multiplier, slot 1+i is terms[i].coeff. Used by mutation checks.
IdentityForm perturbed(const IdentityForm& form, std::size_t slot);
std::size_t coefficient_slots(const IdentityForm& form);

}  // namespace nara
