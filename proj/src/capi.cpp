#include "narayana.h"

#include "identities.hpp"
#include "oeis.hpp"
#include "sequences.hpp"
#include "series.hpp"
#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>

using nara::Int;

struct nara_spec {
    nara::SequenceSpec v;
};
struct nara_terms {
    nara::TermVector v;
};
struct nara_form {
    nara::IdentityForm v;
};
struct nara_series {
    nara::LaurentSeries v;
};
struct nara_report {
    nara::VerificationReport v;
};
struct nara_bfile {
    nara::BFile v;
};

namespace {

thread_local std::string g_last_error = "ok";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

nara_status fail(nara_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs body(), translating exceptions into status codes.
template <typename Fn>
nara_status guarded(Fn&& body) {
    try {
        return body();
    } catch (const nara::NonDivisibleError& e) {
        return fail(NARA_ERR_NOT_DIVISIBLE, e.what());
    } catch (const nara::NonInvertibleError& e) {
        return fail(NARA_ERR_NOT_INVERTIBLE, e.what());
    } catch (const nara::BFileParseError& e) {
        return fail(NARA_ERR_PARSE, e.what());
    } catch (const nara::EmptyOverlapError& e) {
        return fail(NARA_ERR_NO_OVERLAP, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(NARA_ERR_INVALID_ARG, e.what());
    } catch (const std::out_of_range& e) {
        return fail(NARA_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::exception& e) {
        return fail(NARA_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(NARA_ERR_INTERNAL, "unknown error");
    }
}

nara_status require(bool ok, const char* message) {
    return ok ? NARA_OK : fail(NARA_ERR_INVALID_ARG, message);
}

std::optional<Int> parse_modulus(const char* modulus_dec) {
    if (modulus_dec == nullptr || *modulus_dec == '\0') return std::nullopt;
    return nara::parse_int(modulus_dec);
}

nara_status make_spec(nara::SequenceSpec spec, nara_spec** out) {
    *out = new nara_spec{std::move(spec)};
    return NARA_OK;
}

std::size_t checked_n(int64_t n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
    return static_cast<std::size_t>(n);
}

}  // namespace

extern "C" {

const char* nara_version(void) { return "0.1.0"; }

const char* nara_last_error(void) { return g_last_error.c_str(); }

void nara_string_free(char* s) { std::free(s); }

/* ---- sequences ------------------------------------------------------- */

nara_status nara_spec_narayana(int k, nara_spec** out) {
    if (nara_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] { return make_spec(nara::narayana_spec(k), out); });
}

nara_status nara_spec_fibonacci(nara_spec** out) {
    if (nara_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] { return make_spec(nara::fibonacci_spec(), out); });
}

nara_status nara_spec_lucas(nara_spec** out) {
    if (nara_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] { return make_spec(nara::lucas_spec(), out); });
}

nara_status nara_spec_rabinowitz(nara_spec** out) {
    if (nara_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] { return make_spec(nara::rabinowitz_spec(), out); });
}

void nara_spec_free(nara_spec* spec) { delete spec; }

int nara_spec_order(const nara_spec* spec) {
    return spec ? spec->v.order : 0;
}

nara_status nara_spec_name(const nara_spec* spec, char** out) {
    if (nara_status s = require(spec && out, "NULL argument")) return s;
    *out = dup_string(spec->v.name);
    return NARA_OK;
}

nara_status nara_terms_compute(const nara_spec* spec, int64_t n_max,
                               nara_terms** out) {
    if (nara_status s = require(spec && out, "NULL argument")) return s;
    return guarded([&] {
        *out = new nara_terms{
            nara::terms(spec->v, checked_n(n_max, "n_max"))};
        return NARA_OK;
    });
}

nara_status nara_self_convolution(const nara_spec* spec, int64_t n_max,
                                  nara_terms** out) {
    if (nara_status s = require(spec && out, "NULL argument")) return s;
    return guarded([&] {
        nara::TermVector tv;
        tv.values =
            nara::self_convolution(spec->v, checked_n(n_max, "n_max"));
        *out = new nara_terms{std::move(tv)};
        return NARA_OK;
    });
}

void nara_terms_free(nara_terms* terms) { delete terms; }

int64_t nara_terms_start(const nara_terms* terms) {
    return terms ? static_cast<int64_t>(terms->v.start_index) : 0;
}

int64_t nara_terms_count(const nara_terms* terms) {
    return terms ? static_cast<int64_t>(terms->v.values.size()) : 0;
}

nara_status nara_terms_value(const nara_terms* terms, int64_t position,
                             char** out) {
    if (nara_status s = require(terms && out, "NULL argument")) return s;
    if (position < 0 ||
        position >= static_cast<int64_t>(terms->v.values.size()))
        return fail(NARA_ERR_OUT_OF_RANGE, "terms position out of range");
    *out = dup_string(
        terms->v.values[static_cast<std::size_t>(position)].get_str());
    return NARA_OK;
}

nara_status nara_term_at(const nara_spec* spec, uint64_t n,
                         const char* modulus_dec, char** out) {
    if (nara_status s = require(spec && out, "NULL argument")) return s;
    return guarded([&] {
        const Int v = nara::term_at(spec->v, n, parse_modulus(modulus_dec));
        *out = dup_string(v.get_str());
        return NARA_OK;
    });
}

nara_status nara_term_iterative(const nara_spec* spec, uint64_t n,
                                const char* modulus_dec, char** out) {
    if (nara_status s = require(spec && out, "NULL argument")) return s;
    return guarded([&] {
        const Int v =
            nara::term_iterative(spec->v, n, parse_modulus(modulus_dec));
        *out = dup_string(v.get_str());
        return NARA_OK;
    });
}

/* ---- identities ------------------------------------------------------ */

nara_status nara_form_theorem1(int k, nara_form** out) {
    if (nara_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] {
        *out = new nara_form{nara::theorem1_form(k)};
        return NARA_OK;
    });
}

void nara_form_free(nara_form* form) { delete form; }

nara_status nara_form_name(const nara_form* form, char** out) {
    if (nara_status s = require(form && out, "NULL argument")) return s;
    *out = dup_string(form->v.name);
    return NARA_OK;
}

nara_status nara_form_multiplier(const nara_form* form, char** out) {
    if (nara_status s = require(form && out, "NULL argument")) return s;
    *out = dup_string(form->v.lhs_multiplier.get_str());
    return NARA_OK;
}

int64_t nara_form_min_n(const nara_form* form) {
    return form ? form->v.min_n : 0;
}

nara_status nara_form_rhs_at(const nara_form* form, int64_t n, char** out) {
    if (nara_status s = require(form && out, "NULL argument")) return s;
    return guarded([&] {
        const auto role_terms = nara::role_terms_for(form->v, n);
        const Int v = nara::evaluate_rhs(form->v, role_terms, n);
        *out = dup_string(v.get_str());
        return NARA_OK;
    });
}

nara_status nara_form_closed_conv_at(const nara_form* form, int64_t n,
                                     char** out) {
    if (nara_status s = require(form && out, "NULL argument")) return s;
    return guarded([&] {
        const auto role_terms = nara::role_terms_for(form->v, n);
        const Int v = nara::closed_form_convolution(form->v, role_terms, n);
        *out = dup_string(v.get_str());
        return NARA_OK;
    });
}

nara_status nara_closed_convolution(const nara_form* form, int64_t n_max,
                                    nara_terms** out) {
    if (nara_status s = require(form && out, "NULL argument")) return s;
    return guarded([&] {
        const long last = static_cast<long>(checked_n(n_max, "n_max"));
        if (form->v.min_n > 0)
            throw std::invalid_argument(
                "closed convolution needs a form valid from n=0");
        const auto role_terms = nara::role_terms_for(form->v, last);
        nara::TermVector tv;
        tv.values.reserve(static_cast<std::size_t>(last) + 1);
        for (long n = 0; n <= last; ++n)
            tv.values.push_back(
                nara::closed_form_convolution(form->v, role_terms, n));
        *out = new nara_terms{std::move(tv)};
        return NARA_OK;
    });
}

/* ---- series ---------------------------------------------------------- */

nara_status nara_series_build(nara_series_kind kind, int k, int64_t order,
                              nara_series** out) {
    if (nara_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] {
        const long N = static_cast<long>(checked_n(order, "order"));
        nara::LaurentSeries s;
        switch (kind) {
            case NARA_SERIES_GF: s = nara::narayana_gf(k, N); break;
            case NARA_SERIES_A: s = nara::A_gf(k, N); break;
            case NARA_SERIES_B_CLOSED: s = nara::B_gf_closed(k, N); break;
            case NARA_SERIES_B_DEF: s = nara::B_gf_def(k, N); break;
            case NARA_SERIES_C_CLOSED: s = nara::C_gf_closed(k, N); break;
            case NARA_SERIES_C_DEF: s = nara::C_gf_def(k, N); break;
            case NARA_SERIES_DIFF:
                s = nara::sub(
                    nara::sub(nara::B_gf_closed(k, N),
                              nara::C_gf_closed(k, N)),
                    nara::A_gf(k, N));
                break;
            default:
                throw std::invalid_argument("unknown series kind");
        }
        *out = new nara_series{std::move(s)};
        return NARA_OK;
    });
}

void nara_series_free(nara_series* series) { delete series; }

int64_t nara_series_start_exp(const nara_series* series) {
    return series ? series->v.start_exp() : 0;
}

int64_t nara_series_trunc_order(const nara_series* series) {
    return series ? series->v.trunc_order() : 0;
}

nara_status nara_series_coeff(const nara_series* series, int64_t exponent,
                              char** out) {
    if (nara_status s = require(series && out, "NULL argument")) return s;
    return guarded([&] {
        *out = dup_string(
            nara::to_string(series->v.coeff(static_cast<long>(exponent))));
        return NARA_OK;
    });
}

nara_status nara_series_render(const nara_series* series, char** out) {
    if (nara_status s = require(series && out, "NULL argument")) return s;
    *out = dup_string(nara::to_string(series->v));
    return NARA_OK;
}

int nara_series_is_zero(const nara_series* series) {
    return series && series->v.is_zero() ? 1 : 0;
}

/* ---- integer polynomials --------------------------------------------- */

namespace {

nara::IntPolynomial parse_poly(const char* const* coeffs, size_t len) {
    if (coeffs == nullptr)
        throw std::invalid_argument("coefficient array is NULL");
    std::vector<Int> cs;
    cs.reserve(len);
    for (size_t i = 0; i < len; ++i) {
        if (coeffs[i] == nullptr)
            throw std::invalid_argument("coefficient string is NULL");
        cs.push_back(nara::parse_int(coeffs[i]));
    }
    return nara::IntPolynomial(std::move(cs));
}

}  // namespace

nara_status nara_resultant(const char* const* p_coeffs, size_t p_len,
                           const char* const* q_coeffs, size_t q_len,
                           char** out) {
    if (nara_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] {
        const Int r = nara::resultant(parse_poly(p_coeffs, p_len),
                                      parse_poly(q_coeffs, q_len));
        *out = dup_string(r.get_str());
        return NARA_OK;
    });
}

nara_status nara_discriminant(const char* const* coeffs, size_t len,
                              char** out) {
    if (nara_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] {
        const Int d = nara::discriminant(parse_poly(coeffs, len));
        *out = dup_string(d.get_str());
        return NARA_OK;
    });
}

/* ---- verification campaigns ------------------------------------------ */

void nara_verify_config_default(nara_verify_config* config) {
    if (!config) return;
    config->k_min = 2;
    config->k_max = 8;
    config->n_max = 200;
    config->series_order = 200;
    config->lemma_m_max = 64;
    config->forms = nullptr;
    config->modulus_dec = nullptr;
    config->jobs = 0;
    config->mutate = 0;
}

nara_status nara_verify_run(const nara_verify_config* config,
                            nara_report** out) {
    if (nara_status s = require(config && out, "NULL argument")) return s;
    return guarded([&] {
        nara::CampaignConfig cc;
        cc.k_min = config->k_min;
        cc.k_max = config->k_max;
        cc.n_max = static_cast<long>(checked_n(config->n_max, "n_max"));
        cc.series_order = static_cast<long>(
            checked_n(config->series_order, "series_order"));
        cc.lemma_m_max = static_cast<long>(
            checked_n(config->lemma_m_max, "lemma_m_max"));
        if (config->forms && *config->forms) {
            std::istringstream in(config->forms);
            std::string item;
            while (std::getline(in, item, ','))
                if (!item.empty()) cc.forms.push_back(item);
        }
        if (config->modulus_dec && *config->modulus_dec)
            cc.modulus = nara::parse_int(config->modulus_dec);
        cc.jobs = config->jobs;
        cc.mutate = config->mutate != 0;
        *out = new nara_report{nara::run_campaign(cc)};
        return NARA_OK;
    });
}

void nara_report_free(nara_report* report) { delete report; }

int nara_report_pass(const nara_report* report) {
    return report && report->v.overall_pass() ? 1 : 0;
}

int64_t nara_report_record_count(const nara_report* report) {
    return report ? static_cast<int64_t>(report->v.records.size()) : 0;
}

nara_status nara_report_render(const nara_report* report, nara_format format,
                               char** out) {
    if (nara_status s = require(report && out, "NULL argument")) return s;
    return guarded([&] {
        std::string text;
        switch (format) {
            case NARA_FORMAT_TABLE:
                text = nara::render_table(report->v);
                break;
            case NARA_FORMAT_CSV:
                text = nara::render_csv(report->v);
                break;
            case NARA_FORMAT_JSON_TREE:
                text = nara::render_json_tree(report->v);
                break;
            default:
                throw std::invalid_argument("unknown report format");
        }
        *out = dup_string(text);
        return NARA_OK;
    });
}

/* ---- OEIS b-files ----------------------------------------------------- */

nara_status nara_bfile_load(const char* path, nara_bfile** out) {
    if (nara_status s = require(path && out, "NULL argument")) return s;
    return guarded([&]() -> nara_status {
        try {
            *out = new nara_bfile{nara::load_bfile(path)};
        } catch (const nara::BFileParseError&) {
            throw;
        } catch (const std::runtime_error& e) {
            return fail(NARA_ERR_IO, e.what());
        }
        return NARA_OK;
    });
}

nara_status nara_bfile_parse(const char* text, const char* sequence_id,
                             nara_bfile** out) {
    if (nara_status s = require(text && out, "NULL argument")) return s;
    return guarded([&] {
        *out = new nara_bfile{nara::parse_bfile(
            std::string(text), sequence_id ? sequence_id : "")};
        return NARA_OK;
    });
}

void nara_bfile_free(nara_bfile* bfile) { delete bfile; }

int64_t nara_bfile_entry_count(const nara_bfile* bfile) {
    return bfile ? static_cast<int64_t>(bfile->v.entries.size()) : 0;
}

nara_status nara_oeis_cross_check(const nara_bfile* bfile,
                                  const nara_terms* computed, int64_t offset,
                                  int* matched, char** detail) {
    if (nara_status s = require(bfile && computed && matched,
                                "NULL argument"))
        return s;
    return guarded([&] {
        const nara::CheckRecord rec =
            nara::cross_check(bfile->v, computed->v, offset);
        *matched = rec.pass ? 1 : 0;
        if (detail) {
            std::string text;
            if (rec.pass) {
                text = "matched " + std::to_string(rec.cells_checked) +
                       " entries";
            } else {
                text = "mismatch at " + rec.counterexample->inputs +
                       ": b-file has " + rec.counterexample->lhs +
                       ", computed " + rec.counterexample->rhs;
            }
            *detail = dup_string(text);
        }
        return NARA_OK;
    });
}

}  // extern "C"
