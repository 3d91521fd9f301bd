#include "verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

namespace nara {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Int mod_reduce(const Int& v, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::string fmt_k_n(int k, long n_max) {
    return "k=" + std::to_string(k) + " n_max=" + std::to_string(n_max);
}

}  // namespace

bool VerificationReport::overall_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.pass; });
}

CheckRecord check_lemma1(const Rat& theta, long m_max) {
    if (theta == 0 || theta == 1)
        throw std::invalid_argument("check_lemma1: theta must not be 0 or 1");
    if (m_max < 0)
        throw std::invalid_argument("check_lemma1: m_max must be >= 0");
    const auto t0 = Clock::now();
    CheckRecord rec;
    rec.check_id = "lemma1";
    rec.params = "theta=" + to_string(theta) + " m_max=" +
                 std::to_string(m_max);

    Rat sum_pow = 0;    // sum theta^i
    Rat sum_ipow = 0;   // sum i*theta^i
    Rat power = 1;      // theta^m
    const Rat denom = theta - 1;
    for (long m = 0; m <= m_max; ++m) {
        if (m > 0) power *= theta;
        sum_pow += power;
        sum_ipow += Rat(m) * power;
        const Rat closed_pow = (power * theta - 1) / denom;
        const Rat closed_ipow =
            theta * (1 - power) / (denom * denom) +
            Rat(m) * power * theta / denom;
        rec.cells_checked += 2;
        if (sum_pow != closed_pow || sum_ipow != closed_ipow) {
            rec.pass = false;
            Counterexample ce;
            ce.inputs = "theta=" + to_string(theta) + " m=" +
                        std::to_string(m);
            ce.n = m;
            if (sum_pow != closed_pow) {
                ce.lhs = to_string(sum_pow);
                ce.rhs = to_string(closed_pow);
            } else {
                ce.lhs = to_string(sum_ipow);
                ce.rhs = to_string(closed_ipow);
            }
            rec.counterexample = std::move(ce);
            break;
        }
    }
    rec.elapsed_sec = seconds_since(t0);
    return rec;
}

namespace {

bool lemma2_cell(int k, long m, Counterexample* ce) {
    // LHS built incrementally would be nicer; grids are small enough to
    // recompute the sum per cell without it mattering.
    const Rat theta = Rat(k) / Rat(k - 1);
    Rat sum = 0;
    Rat power = 1;
    for (long i = 0; i <= m; ++i) {
        if (i > 0) power *= theta;
        sum += power * Rat(k + i);
    }
    const Rat lhs = rpow(Rat(k), k - 2 - m) * rpow(Rat(k - 1), m) * sum;
    const Rat rhs =
        Rat(Int(ipow(k, static_cast<unsigned long>(k - 1)) * Int(m + 1)));
    if (lhs == rhs) return true;
    ce->inputs = "k=" + std::to_string(k) + " m=" + std::to_string(m);
    ce->k = k;
    ce->n = m;
    ce->lhs = to_string(lhs);
    ce->rhs = to_string(rhs);
    return false;
}

CheckRecord lemma2_record(int k_min, int k_max, const char* id,
                          std::function<long(int)> m_limit,
                          const std::string& params) {
    const auto t0 = Clock::now();
    CheckRecord rec;
    rec.check_id = id;
    rec.params = params;
    for (int k = k_min; k <= k_max && rec.pass; ++k) {
        const long limit = m_limit(k);
        for (long m = 0; m <= limit; ++m) {
            ++rec.cells_checked;
            Counterexample ce;
            if (!lemma2_cell(k, m, &ce)) {
                rec.pass = false;
                rec.counterexample = std::move(ce);
                break;
            }
        }
    }
    rec.elapsed_sec = seconds_since(t0);
    return rec;
}

}  // namespace

std::vector<CheckRecord> check_lemma2(int k_min, int k_max, long m_max) {
    if (k_min < 2 || k_max < k_min)
        throw std::invalid_argument("check_lemma2: need 2 <= k_min <= k_max");
    std::vector<CheckRecord> out;
    // The generating-function argument only consumes m <= k-4; the identity
    // itself holds for all m >= 0, so both ranges are checked.
    out.push_back(lemma2_record(
        k_min, k_max, "lemma2-proof-range",
        [](int k) { return static_cast<long>(k) - 4; },
        "k=" + std::to_string(k_min) + ".." + std::to_string(k_max) +
            " m<=k-4"));
    out.push_back(lemma2_record(
        k_min, k_max, "lemma2",
        [m_max](int) { return m_max; },
        "k=" + std::to_string(k_min) + ".." + std::to_string(k_max) +
            " m_max=" + std::to_string(m_max)));
    return out;
}

CheckRecord grid_check_form(const IdentityForm& form, long n_max,
                            const std::string& check_id) {
    const auto t0 = Clock::now();
    CheckRecord rec;
    rec.check_id = check_id;
    rec.params = "form=" + form.name + " n=" + std::to_string(form.min_n) +
                 ".." + std::to_string(n_max);
    const auto role_terms = role_terms_for(form, n_max);
    const auto conv =
        self_convolution(form.roles[0], static_cast<std::size_t>(n_max));
    for (long n = form.min_n; n <= n_max; ++n) {
        ++rec.cells_checked;
        const Int lhs =
            form.lhs_multiplier * conv[static_cast<std::size_t>(n)];
        const Int rhs = evaluate_rhs(form, role_terms, n);
        if (lhs != rhs) {
            rec.pass = false;
            Counterexample ce;
            ce.inputs = "form=" + form.name + " n=" + std::to_string(n);
            ce.k = form.k;
            ce.n = n;
            ce.lhs = lhs.get_str();
            ce.rhs = rhs.get_str();
            rec.counterexample = std::move(ce);
            break;
        }
    }
    rec.elapsed_sec = seconds_since(t0);
    return rec;
}

CheckRecord grid_check_form_mod(const IdentityForm& form, long n_max,
                                const Int& modulus,
                                const std::string& check_id) {
    if (modulus < 2)
        throw std::invalid_argument("modular cross-check: modulus must be >= 2");
    const auto t0 = Clock::now();
    CheckRecord rec;
    rec.check_id = check_id;
    rec.params = "form=" + form.name + " n=" + std::to_string(form.min_n) +
                 ".." + std::to_string(n_max) + " mod=" + modulus.get_str();

    const auto role_terms = role_terms_for(form, n_max);
    auto role_terms_mod = role_terms;
    for (TermVector& tv : role_terms_mod)
        for (Int& v : tv.values) v = mod_reduce(v, modulus);

    const auto conv =
        self_convolution(form.roles[0], static_cast<std::size_t>(n_max));
    // Modular convolution from the reduced terms, not from reduced conv.
    const auto& terms_mod = role_terms_mod[0].values;
    std::vector<Int> conv_mod(static_cast<std::size_t>(n_max) + 1);
    for (std::size_t n = 0; n < conv_mod.size(); ++n) {
        Int& acc = conv_mod[n];
        for (std::size_t i = 0; i <= n; ++i)
            mpz_addmul(acc.get_mpz_t(), terms_mod[i].get_mpz_t(),
                       terms_mod[n - i].get_mpz_t());
        acc = mod_reduce(acc, modulus);
    }

    const Int d_mod = mod_reduce(form.lhs_multiplier, modulus);
    for (long n = form.min_n; n <= n_max; ++n) {
        ++rec.cells_checked;
        const Int exact_lhs =
            form.lhs_multiplier * conv[static_cast<std::size_t>(n)];
        const Int exact_rhs = evaluate_rhs(form, role_terms, n);
        const Int lhs_mod =
            mod_reduce(d_mod * conv_mod[static_cast<std::size_t>(n)], modulus);
        const Int rhs_mod =
            mod_reduce(evaluate_rhs(form, role_terms_mod, n), modulus);
        const bool ok = lhs_mod == rhs_mod &&
                        lhs_mod == mod_reduce(exact_lhs, modulus) &&
                        rhs_mod == mod_reduce(exact_rhs, modulus);
        if (!ok) {
            rec.pass = false;
            Counterexample ce;
            ce.inputs = "form=" + form.name + " n=" + std::to_string(n) +
                        " mod=" + modulus.get_str();
            ce.k = form.k;
            ce.n = n;
            ce.lhs = lhs_mod.get_str();
            ce.rhs = rhs_mod.get_str();
            rec.counterexample = std::move(ce);
            break;
        }
    }
    rec.elapsed_sec = seconds_since(t0);
    return rec;
}

std::vector<CheckRecord> check_theorem1(const CampaignConfig& config) {
    std::vector<CheckRecord> out;
    for (int k = config.k_min; k <= config.k_max; ++k) {
        const IdentityForm form = theorem1_form(k);
        out.push_back(grid_check_form(form, config.n_max,
                                      "theorem1-k" + std::to_string(k)));
        out.back().params = fmt_k_n(k, config.n_max);
        if (config.modulus)
            out.push_back(grid_check_form_mod(
                form, config.n_max, *config.modulus,
                "theorem1-mod-k" + std::to_string(k)));
    }
    return out;
}

std::vector<CheckRecord> check_catalog(const CampaignConfig& config) {
    std::vector<CheckRecord> out;
    for (const IdentityForm& form : catalog(3, 4)) {
        if (!config.forms.empty() &&
            std::find(config.forms.begin(), config.forms.end(), form.name) ==
                config.forms.end() &&
            std::find(config.forms.begin(), config.forms.end(), "catalog") ==
                config.forms.end())
            continue;
        out.push_back(grid_check_form(form, config.n_max,
                                      "catalog-" + form.name));
        if (config.modulus)
            out.push_back(grid_check_form_mod(form, config.n_max,
                                              *config.modulus,
                                              "catalog-mod-" + form.name));
    }
    return out;
}

namespace {

CheckRecord series_record(const std::string& id, const std::string& params,
                          std::function<bool(Counterexample*)> body,
                          long long cells) {
    const auto t0 = Clock::now();
    CheckRecord rec;
    rec.check_id = id;
    rec.params = params;
    rec.cells_checked = cells;
    Counterexample ce;
    if (!body(&ce)) {
        rec.pass = false;
        rec.counterexample = std::move(ce);
    }
    rec.elapsed_sec = seconds_since(t0);
    return rec;
}

bool series_agree(const LaurentSeries& a, const LaurentSeries& b, int k,
                  Counterexample* ce) {
    const SeriesAgreement r = agree(a, b);
    if (r.equal) return true;
    ce->inputs = "k=" + std::to_string(k) + " exponent=" +
                 std::to_string(r.first_mismatch);
    ce->k = k;
    ce->n = r.first_mismatch;
    ce->lhs = to_string(a.coeff(r.first_mismatch));
    ce->rhs = to_string(b.coeff(r.first_mismatch));
    return false;
}

}  // namespace

std::vector<CheckRecord> check_proof_reconstruction(
    const CampaignConfig& config) {
    std::vector<CheckRecord> out;
    const long N = config.series_order;
    for (int k = config.k_min; k <= config.k_max; ++k) {
        const std::string suffix = "-k" + std::to_string(k);
        const std::string params =
            "k=" + std::to_string(k) + " order=" + std::to_string(N);
        const SequenceSpec spec = narayana_spec(k);

        out.push_back(series_record(
            "proof-gf" + suffix, params,
            [&](Counterexample* ce) {
                const LaurentSeries gf = narayana_gf(k, N);
                const TermVector tv =
                    terms(spec, static_cast<std::size_t>(N));
                for (long n = 0; n <= N; ++n) {
                    if (gf.coeff(n) !=
                        Rat(tv.at(static_cast<std::size_t>(n)))) {
                        ce->inputs = "k=" + std::to_string(k) + " n=" +
                                     std::to_string(n);
                        ce->k = k;
                        ce->n = n;
                        ce->lhs = to_string(gf.coeff(n));
                        ce->rhs = tv.at(static_cast<std::size_t>(n)).get_str();
                        return false;
                    }
                }
                return true;
            },
            N + 1));

        const LaurentSeries b_closed = B_gf_closed(k, N);
        const LaurentSeries c_closed = C_gf_closed(k, N);
        const LaurentSeries a = A_gf(k, N);

        out.push_back(series_record(
            "proof-bdef-bclosed" + suffix, params,
            [&](Counterexample* ce) {
                return series_agree(B_gf_def(k, N), b_closed, k, ce);
            },
            N + 1));
        out.push_back(series_record(
            "proof-cdef-cclosed" + suffix, params,
            [&](Counterexample* ce) {
                return series_agree(C_gf_def(k, N), c_closed, k, ce);
            },
            N + 1));
        out.push_back(series_record(
            "proof-cancel" + suffix, params,
            [&](Counterexample* ce) {
                return series_agree(sub(b_closed, c_closed), a, k, ce);
            },
            N + 1));
        out.push_back(series_record(
            "proof-a-conv" + suffix, params,
            [&](Counterexample* ce) {
                const auto conv =
                    self_convolution(spec, static_cast<std::size_t>(N));
                const Int d = theorem1_form(k).lhs_multiplier;
                for (long n = 0; n <= N; ++n) {
                    const Rat expect(
                        Int(d * conv[static_cast<std::size_t>(n)]));
                    if (a.coeff(n) != expect) {
                        ce->inputs = "k=" + std::to_string(k) + " n=" +
                                     std::to_string(n);
                        ce->k = k;
                        ce->n = n;
                        ce->lhs = to_string(a.coeff(n));
                        ce->rhs = to_string(expect);
                        return false;
                    }
                }
                return true;
            },
            N + 1));
    }
    return out;
}

std::vector<CheckRecord> check_mutation(const CampaignConfig& config) {
    std::vector<CheckRecord> out;
    for (int k = config.k_min; k <= config.k_max; ++k) {
        const IdentityForm form = theorem1_form(k);
        for (std::size_t slot = 0; slot < coefficient_slots(form); ++slot) {
            const IdentityForm mutant = perturbed(form, slot);
            CheckRecord rec =
                grid_check_form(mutant, k + 3,
                                "mutation-k" + std::to_string(k) + "-slot" +
                                    std::to_string(slot));
            rec.params = "k=" + std::to_string(k) + " slot=" +
                         std::to_string(slot) + " n<=" +
                         std::to_string(k + 3);
            out.push_back(std::move(rec));
        }
    }
    return out;
}

namespace {

void append_lemma1_tasks(
    const CampaignConfig& config,
    std::vector<std::function<std::vector<CheckRecord>()>>& tasks) {
    static const std::vector<Rat> thetas = {
        Rat(2), Rat(3), Rat(1, 2), Rat(3, 2), Rat(-1), Rat(5, 7)};
    for (const Rat& theta : thetas)
        tasks.push_back([theta, m = config.lemma_m_max] {
            return std::vector<CheckRecord>{check_lemma1(theta, m)};
        });
}

bool family_selected(const CampaignConfig& config, const std::string& name) {
    if (config.forms.empty()) return true;
    return std::find(config.forms.begin(), config.forms.end(), name) !=
           config.forms.end();
}

}  // namespace

VerificationReport run_campaign(const CampaignConfig& config) {
    if (config.k_min < 2 || config.k_max < config.k_min)
        throw std::invalid_argument("campaign: need 2 <= k_min <= k_max");
    std::vector<std::function<std::vector<CheckRecord>()>> tasks;

    if (config.mutate) {
        tasks.push_back([config] { return check_mutation(config); });
    } else {
        if (family_selected(config, "lemma1"))
            append_lemma1_tasks(config, tasks);
        if (family_selected(config, "lemma2"))
            tasks.push_back([config] {
                return check_lemma2(config.k_min, config.k_max,
                                    config.lemma_m_max);
            });
        for (int k = config.k_min; k <= config.k_max; ++k) {
            if (!family_selected(config, "theorem1") &&
                !family_selected(config, "theorem1-k" + std::to_string(k)))
                continue;
            tasks.push_back([config, k] {
                CampaignConfig single = config;
                single.k_min = single.k_max = k;
                return check_theorem1(single);
            });
        }
        // catalog selection also honors individual form names
        tasks.push_back([config] { return check_catalog(config); });
        if (family_selected(config, "proof"))
            for (int k = config.k_min; k <= config.k_max; ++k)
                tasks.push_back([config, k] {
                    CampaignConfig single = config;
                    single.k_min = single.k_max = k;
                    return check_proof_reconstruction(single);
                });
    }

    std::vector<std::vector<CheckRecord>> slots(tasks.size());
    unsigned jobs = config.jobs > 0
                        ? static_cast<unsigned>(config.jobs)
                        : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, tasks.size() ? tasks.size() : 1);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size();
                     i = next.fetch_add(1))
                    slots[i] = tasks[i]();
            });
        for (std::thread& t : pool) t.join();
    }

    VerificationReport report;
    for (auto& chunk : slots)
        for (auto& rec : chunk) report.records.push_back(std::move(rec));
    return report;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_elapsed(double sec) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << sec;
    return os.str();
}

}  // namespace

std::string render_table(const VerificationReport& report) {
    std::size_t id_w = 8, params_w = 6;
    for (const CheckRecord& r : report.records) {
        id_w = std::max(id_w, r.check_id.size());
        params_w = std::max(params_w, r.params.size());
    }
    std::ostringstream os;
    os << std::left;
    os.width(static_cast<std::streamsize>(id_w + 2));
    os << "check";
    os.width(static_cast<std::streamsize>(params_w + 2));
    os << "params";
    os << "status  cells     elapsed\n";
    for (const CheckRecord& r : report.records) {
        os.width(static_cast<std::streamsize>(id_w + 2));
        os << r.check_id;
        os.width(static_cast<std::streamsize>(params_w + 2));
        os << r.params;
        os.width(8);
        os << (r.pass ? "pass" : "FAIL");
        os.width(10);
        os << r.cells_checked;
        os << fmt_elapsed(r.elapsed_sec) << "s\n";
        if (r.counterexample) {
            os << "  counterexample: " << r.counterexample->inputs
               << "  lhs=" << r.counterexample->lhs
               << "  rhs=" << r.counterexample->rhs << "\n";
        }
    }
    os << "overall: " << (report.overall_pass() ? "pass" : "FAIL") << " ("
       << report.records.size() << " checks)\n";
    return os.str();
}

std::string render_csv(const VerificationReport& report) {
    std::string out =
        "check_id,params,status,cells_checked,elapsed_sec,"
        "ce_inputs,ce_lhs,ce_rhs\n";
    for (const CheckRecord& r : report.records) {
        out += csv_escape(r.check_id) + ',' + csv_escape(r.params) + ',' +
               (r.pass ? "pass" : "fail") + ',' +
               std::to_string(r.cells_checked) + ',' +
               fmt_elapsed(r.elapsed_sec) + ',';
        if (r.counterexample) {
            out += csv_escape(r.counterexample->inputs) + ',' +
                   csv_escape(r.counterexample->lhs) + ',' +
                   csv_escape(r.counterexample->rhs);
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

std::string render_json_tree(const VerificationReport& report) {
    nlohmann::json root;
    root["schema"] = "narayana-report-v1";
    root["overall"] = report.overall_pass() ? "pass" : "fail";
    root["records"] = nlohmann::json::array();
    for (const CheckRecord& r : report.records) {
        nlohmann::json rec;
        rec["check_id"] = r.check_id;
        rec["params"] = r.params;
        rec["status"] = r.pass ? "pass" : "fail";
        rec["cells_checked"] = r.cells_checked;
        rec["elapsed_sec"] = r.elapsed_sec;
        if (r.counterexample) {
            rec["counterexample"] = {
                {"inputs", r.counterexample->inputs},
                {"k", r.counterexample->k},
                {"n", r.counterexample->n},
                {"lhs", r.counterexample->lhs},
                {"rhs", r.counterexample->rhs},
            };
        } else {
            rec["counterexample"] = nullptr;
        }
        root["records"].push_back(std::move(rec));
    }
    return root.dump(2) + "\n";
}

}  // namespace nara
