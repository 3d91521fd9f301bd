#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nara {

// Exact arithmetic backed by GMP. All sequence terms, identity values and
// series coefficients are Int or Rat; nothing in the library ever rounds.
using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int ipow(long base, unsigned long exp) {
    return ipow(Int(base), exp);
}

// q^e for signed e; e < 0 inverts (q must be nonzero in that case).
inline Rat rpow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    Rat r;
    const unsigned long mag = e < 0 ? static_cast<unsigned long>(-e)
                                    : static_cast<unsigned long>(e);
    mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), mag);
    mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), mag);
    r.canonicalize();
    if (e < 0) {
        if (r == 0) throw std::domain_error("rpow: negative power of zero");
        r = 1 / r;
    }
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p/q" for non-integers, plain "p" otherwise.
inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses a decimal integer; throws std::invalid_argument on anything else.
inline Int parse_int(const std::string& text) {
    Int v;
    if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return v;
}

}  // namespace nara
