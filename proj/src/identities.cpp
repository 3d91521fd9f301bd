#include "identities.hpp"

#include <utility>

namespace nara {

std::vector<Int> self_convolution(const SequenceSpec& spec,
                                  std::size_t n_max) {
    const TermVector tv = terms(spec, n_max);
    std::vector<Int> conv(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        Int& acc = conv[n];
        for (std::size_t i = 0; i <= n; ++i) {
            mpz_addmul(acc.get_mpz_t(), tv.values[i].get_mpz_t(),
                       tv.values[n - i].get_mpz_t());
        }
    }
    return conv;
}

IdentityForm theorem1_form(int k) {
    if (k < 2) throw std::invalid_argument("theorem1_form requires k >= 2");
    const unsigned long uk = static_cast<unsigned long>(k);
    IdentityForm form;
    form.name = "theorem1-k" + std::to_string(k);
    form.k = k;
    form.lhs_multiplier = ipow(k, uk) + ipow(k - 1, uk - 1);
    form.roles = {narayana_spec(k)};
    form.min_n = 0;
    form.terms.push_back({ipow(k, uk - 1), 1, k - 2, k - 1, 0});
    for (int j = 0; j <= k - 2; ++j) {
        Int c = -ipow(k, static_cast<unsigned long>(j)) *
                ipow(k - 1, static_cast<unsigned long>(k - 2 - j));
        form.terms.push_back({std::move(c), 1, k + j - 1, j, 0});
    }
    return form;
}

std::vector<IdentityForm> catalog(int k_min, int k_max) {
    if (k_min < 2 || k_max < k_min)
        throw std::invalid_argument("catalog requires 2 <= k_min <= k_max");
    const SequenceSpec fib = fibonacci_spec();
    const SequenceSpec luc = lucas_spec();
    std::vector<IdentityForm> forms;

    // 5 * conv(F) = (2n) F_{n+1} - (n+1) F_n
    forms.push_back({"fibonacci-a", 0, 5,
                     {{2, 1, 0, 1, 0}, {-1, 1, 1, 0, 0}},
                     {fib}, 0, ""});
    // 5 * conv(F) = (n-1) F_n + (2n) F_{n-1}
    forms.push_back({"fibonacci-b", 0, 5,
                     {{1, 1, -1, 0, 0}, {2, 1, 0, -1, 0}},
                     {fib}, 1, ""});
    // 5 * conv(F) = (n-1) F_{n+1} + (n+1) F_{n-1}
    forms.push_back({"fibonacci-c", 0, 5,
                     {{1, 1, -1, 1, 0}, {1, 1, 1, -1, 0}},
                     {fib}, 1, ""});
    // 5 * conv(F) = n L_n - F_n
    forms.push_back({"fibonacci-lucas", 0, 5,
                     {{1, 1, 0, 0, 1}, {-1, 0, 1, 0, 0}},
                     {fib, luc}, 0, ""});
    // conv(L) = (n+1) L_n + 2 F_{n+1}
    forms.push_back({"lucas", 0, 1,
                     {{1, 1, 1, 0, 0}, {2, 0, 1, 1, 1}},
                     {luc, fib}, 0, ""});
    // 31 * conv(X) = 6(n-2) X_{n+1} - 2n X_{n-1} + 3(n+1) X_{n-2}
    forms.push_back({"rabinowitz", 0, 31,
                     {{6, 1, -2, 1, 0}, {-2, 1, 0, -1, 0}, {3, 1, 1, -2, 0}},
                     {rabinowitz_spec()}, 2, ""});

    for (int k = k_min; k <= k_max; ++k) forms.push_back(theorem1_form(k));

    IdentityForm six = theorem1_form(6);
    six.name = "six-step-display";
    six.notes =
        "subtracted coefficients stored as 6^j*5^(4-j) with j the summation "
        "index; a transcription with a mismatched exponent index is corrected "
        "to this reading";
    forms.push_back(std::move(six));
    return forms;
}

long max_offset(const IdentityForm& form) {
    long m = 0;
    for (const RhsTerm& t : form.terms) m = std::max(m, t.offset);
    return m;
}

long min_offset(const IdentityForm& form) {
    long m = 0;
    for (const RhsTerm& t : form.terms) m = std::min(m, t.offset);
    return m;
}

Int evaluate_rhs(const IdentityForm& form,
                 std::span<const TermVector> role_terms, long n) {
    if (n < form.min_n)
        throw std::out_of_range(form.name + ": n < min_n");
    Int acc = 0;
    Int scaled;
    for (const RhsTerm& t : form.terms) {
        const long idx = n + t.offset;
        if (idx < 0)
            throw std::out_of_range(form.name + ": negative sequence index");
        if (t.role < 0 ||
            static_cast<std::size_t>(t.role) >= role_terms.size())
            throw std::out_of_range(form.name + ": missing role terms");
        const Int& value =
            role_terms[static_cast<std::size_t>(t.role)].at(
                static_cast<std::size_t>(idx));
        scaled = t.coeff * (Int(t.alpha) * n + t.beta);
        mpz_addmul(acc.get_mpz_t(), scaled.get_mpz_t(), value.get_mpz_t());
    }
    return acc;
}

Int closed_form_convolution(const IdentityForm& form,
                            std::span<const TermVector> role_terms, long n) {
    const Int rhs = evaluate_rhs(form, role_terms, n);
    if (form.lhs_multiplier == 0)
        throw NonDivisibleError(form.name + ": zero multiplier");
    if (!mpz_divisible_p(rhs.get_mpz_t(), form.lhs_multiplier.get_mpz_t()))
        throw NonDivisibleError(form.name + ": RHS " + rhs.get_str() +
                                " not divisible by " +
                                form.lhs_multiplier.get_str() + " at n=" +
                                std::to_string(n));
    Int q;
    mpz_divexact(q.get_mpz_t(), rhs.get_mpz_t(),
                 form.lhs_multiplier.get_mpz_t());
    return q;
}

std::vector<TermVector> role_terms_for(const IdentityForm& form, long n_max) {
    std::vector<long> needed(form.roles.size(), 0);
    for (const RhsTerm& t : form.terms) {
        const std::size_t r = static_cast<std::size_t>(t.role);
        if (r >= needed.size())
            throw std::out_of_range(form.name + ": term role out of range");
        needed[r] = std::max(needed[r], n_max + std::max(t.offset, 0L));
    }
    std::vector<TermVector> out;
    out.reserve(form.roles.size());
    for (std::size_t r = 0; r < form.roles.size(); ++r)
        out.push_back(terms(form.roles[r],
                            static_cast<std::size_t>(needed[r])));
    return out;
}

std::size_t coefficient_slots(const IdentityForm& form) {
    return 1 + form.terms.size();
}

IdentityForm perturbed(const IdentityForm& form, std::size_t slot) {
    IdentityForm mutant = form;
    if (slot == 0)
        mutant.lhs_multiplier += 1;
    else if (slot - 1 < mutant.terms.size())
        mutant.terms[slot - 1].coeff += 1;
    else
        throw std::out_of_range("perturbed: slot out of range");
    mutant.name += "+mut" + std::to_string(slot);
    return mutant;
}

}  // namespace nara
