#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fol/error.hpp"

namespace fol {

/// Exponent vector of a monomial in a fixed ambient ring.  The length of the
/// vector is the ambient variable count; the total degree is cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int n) : e_(static_cast<size_t>(n), 0u) {}
    explicit Monomial(std::vector<uint32_t> e) : e_(std::move(e)) {
        for (uint32_t x : e_) deg_ += x;
    }

    int vars() const { return static_cast<int>(e_.size()); }
    uint32_t deg() const { return deg_; }
    uint32_t exp(int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<uint32_t>& exps() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;     // this | o
    Monomial div(const Monomial& o) const;     // this / o, assumes o | this
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    Monomial with_exp(int i, uint32_t v) const;
    Monomial extended(int extra) const;        // append `extra` zero exponents
    Monomial truncated(int m) const;           // keep first m exponents (rest must be 0)

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names) const;

private:
    uint32_t deg_ = 0;
    std::vector<uint32_t> e_;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t x : m.exps()) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Term orders.  grlex is the canonical storage/printing order; grevlex the
// default Groebner order; ELIM_LAST is a block order making the trailing
// `elim` auxiliary variables largest (used for elimination).
bool grlex_greater(const Monomial& a, const Monomial& b);
bool grevlex_greater(const Monomial& a, const Monomial& b);
bool lex_greater(const Monomial& a, const Monomial& b);

struct MonomialOrder {
    enum Kind { GREVLEX, GRLEX, LEX, ELIM_LAST };
    Kind kind = GREVLEX;
    int elim = 0; // for ELIM_LAST: number of trailing variables to eliminate

    bool greater(const Monomial& a, const Monomial& b) const;
    bool operator==(const MonomialOrder&) const = default;
};

/// All monomials of total degree `deg` in `n` variables, in descending
/// graded-lexicographic order (the documented deterministic order).
std::vector<Monomial> monomial_basis(int n, int deg);

/// Default variable names x0, x1, ...
std::vector<std::string> default_names(int n);

} // namespace fol
