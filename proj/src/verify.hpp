#pragma once

#include "identities.hpp"
#include "series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nara {

struct Counterexample {
    std::string inputs;  // rendered parameters, e.g. "k=3 n=7"
    int k = 0;
    long long n = -1;
    std::string lhs;
    std::string rhs;
};

struct CheckRecord {
    std::string check_id;
    std::string params;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    long long cells_checked = 0;
    double elapsed_sec = 0.0;
};

struct VerificationReport {
    std::vector<CheckRecord> records;
    bool overall_pass() const;
};

struct CampaignConfig {
    int k_min = 2;
    int k_max = 8;
    long n_max = 200;
    long series_order = 200;
    long lemma_m_max = 64;
    std::vector<std::string> forms;  // check families or form names; empty = all
    std::optional<Int> modulus;      // adds modular cross-check records
    int jobs = 0;                    // 0 = hardware concurrency
    bool mutate = false;             // run the corrupted-form self-test instead
};

// Both closed forms of the finite geometric sums against direct exact
// summation, for 0 <= m <= m_max. theta must not be 0 or 1.
CheckRecord check_lemma1(const Rat& theta, long m_max);

// k^{k-2-m} (k-1)^m sum_{i=0}^m (k/(k-1))^i (k+i) == k^{k-1} (m+1), exactly,
// over the (k, m) grid. Returns the proof-needed range (m <= k-4) and the
// extended range (m <= m_max) as separate records.
std::vector<CheckRecord> check_lemma2(int k_min, int k_max, long m_max);

// Brute-force convolution (authoritative LHS) against the closed-form RHS.
std::vector<CheckRecord> check_theorem1(const CampaignConfig& config);

// Grid checks for every non-generic catalog form from its min_n.
std::vector<CheckRecord> check_catalog(const CampaignConfig& config);

// Generating-function reconstruction per k: gf coefficients match iterated
// terms, definitional == closed for B and C, B - C == A, and A == D * conv.
std::vector<CheckRecord> check_proof_reconstruction(
    const CampaignConfig& config);

// Perturbs each coefficient of theorem1_form(k) by +1 and grid-checks the
// corrupted form through n = k+3. Every record is expected to FAIL with a
// counterexample; a passing record means the mutation went undetected.
std::vector<CheckRecord> check_mutation(const CampaignConfig& config);

// One exact grid check of a single form (smallest failing n reported).
CheckRecord grid_check_form(const IdentityForm& form, long n_max,
                            const std::string& check_id);
// Modular cross-check: both sides recomputed mod m must agree with each
// other and with the exact values reduced mod m.
CheckRecord grid_check_form_mod(const IdentityForm& form, long n_max,
                                const Int& modulus,
                                const std::string& check_id);

// Assembles and runs the selected checks, in parallel when jobs != 1, with
// a deterministic record order independent of thread count.
VerificationReport run_campaign(const CampaignConfig& config);

std::string render_table(const VerificationReport& report);
std::string render_csv(const VerificationReport& report);
std::string render_json_tree(const VerificationReport& report);

}  // namespace nara
