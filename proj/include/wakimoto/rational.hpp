#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace wakimoto {

// Exact rational scalar. GMP keeps every computation in this project exact;
// floating point appears only in the monodromy integrator.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q".
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double rat_double(const Rat& r) { return r.get_d(); }

} // namespace wakimoto
