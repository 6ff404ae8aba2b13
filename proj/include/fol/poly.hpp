#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fol/monomial.hpp"
#include "fol/rational.hpp"

namespace fol {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in descending graded-lexicographic order with no zero
/// coefficients, so equal polynomials have identical representations.  All
/// values are immutable after construction.
class Poly {
public:
    using Term = std::pair<Monomial, Rat>;

    Poly() = default;
    explicit Poly(int n) : n_(n) {}

    static Poly zero(int n) { return Poly(n); }
    static Poly constant(int n, const Rat& c);
    static Poly one(int n) { return constant(n, 1); }
    static Poly variable(int n, int i);
    static Poly term(int n, Monomial m, const Rat& c);
    /// Builds from an arbitrary term list (merges duplicates, drops zeros).
    static Poly from_terms(int n, std::vector<Term> terms);

    int vars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    std::span<const Term> terms() const { return t_; }

    bool operator==(const Poly& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;
    Poly pow(int e) const;

    /// Formal partial derivative with respect to variable i.
    Poly derivative(int i) const;

    /// Composition: substitute images[i] for variable i.  All images must
    /// live in one common target ring.
    Poly substitute(const std::vector<Poly>& images) const;

    /// Evaluation at a rational point.
    Rat eval(const Point& p) const;

    /// p(x + c): translate the point c to the origin.
    Poly translated(const Point& c) const;

    /// Sum of the terms of total degree exactly d.
    Poly graded_component(int d) const;
    /// Largest total degree among terms (-1 for the zero polynomial).
    int total_degree() const;
    /// Smallest total degree among terms (-1 for zero).
    int min_degree() const;
    /// Degree if all terms share one total degree.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }

    /// Leading term in the canonical (grlex) order.
    const Term& leading() const;
    /// Divides by the leading coefficient so the grlex-leading coefficient is 1.
    Poly monic() const;

    int degree_in(int i) const; // degree in variable i (-1 for zero)

    /// Exact division: returns the quotient iff d divides this exactly.
    std::optional<Poly> divided_by(const Poly& d) const;

    Poly extended(int extra) const;  // embed into a ring with extra trailing variables
    Poly truncated(int m) const;     // drop trailing variables (must not occur)

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const { return str(default_names(n_)); }

private:
    int n_ = 0;
    std::vector<Term> t_;

    void normalize(); // sort + merge + drop zeros
};

/// A greatest common divisor, normalized so the grlex-leading coefficient
/// is 1; gcd(p, 0) is the normalization of p.
Poly poly_gcd(const Poly& a, const Poly& b);

/// gcd-of-coefficients content as a polynomial gcd over a variable view is
/// internal; this is the rational content (gcd of numerators / lcm of
/// denominators) used to produce primitive integer polynomials.
Rat rational_content(const Poly& p);

} // namespace fol
