#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace fol {

using Rat = mpq_class;
using Int = mpz_class;

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

using Point = std::vector<Rat>; // rational point in the ambient space

} // namespace fol
