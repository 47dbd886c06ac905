#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tjurina {

// Exact rational coefficients. GMP does the heavy lifting; everything in the
// library is exact, there is no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

// Parses "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
inline Rat rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }

} // namespace tjurina
