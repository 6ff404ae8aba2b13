#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fol/poly.hpp"

namespace fol {

/// Finitely generated polynomial ideal with a cached reduced Groebner basis
/// for the tagged monomial order.  The cache is write-once; distinct ideals
/// can be processed concurrently.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(std::vector<Poly> gens, MonomialOrder ord = {});

    int vars() const { return n_; }
    const std::vector<Poly>& gens() const { return gens_; }
    const MonomialOrder& order() const { return ord_; }

    /// Reduced Groebner basis (computed once, then cached).  Elements are
    /// monic and sorted by ascending leading monomial.
    const std::vector<Poly>& groebner() const;

    /// Unique remainder modulo the Groebner basis; zero iff p is a member.
    Poly normal_form(const Poly& p) const;
    bool contains(const Poly& p) const { return normal_form(p).is_zero(); }
    bool contains_ideal(const Ideal& J) const;

    bool is_unit() const;  // 1 in I
    bool is_zero_ideal() const;

    /// Krull dimension of the quotient ring (-1 for the unit ideal),
    /// computed from maximal independent variable sets of the leading-term
    /// ideal.
    int krull_dimension() const;

    /// Number of standard monomials (monomials outside the leading-term
    /// ideal), or nullopt when infinite.
    std::optional<long> vector_space_dimension() const;

    bool same_ideal(const Ideal& J) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int n_ = 0;
    std::vector<Poly> gens_;
    MonomialOrder ord_;
    mutable std::shared_ptr<const std::vector<Poly>> gb_;
};

Ideal ideal_intersection(const Ideal& I, const Ideal& J);

/// (I : f), f nonzero.
Ideal ideal_quotient(const Ideal& I, const Poly& f);

/// I : f^infinity, computed by adjoining 1 - y*f and eliminating y.
Ideal saturation(const Ideal& I, const Poly& f);

/// I : J^infinity = intersection over the generators' saturations; the
/// result is verified to be a fixed point of quotient by each generator.
Ideal saturation(const Ideal& I, const Ideal& J);

/// Dimension of O/(I + (x_i^B)) as certified local data at the origin:
/// `dim` counts standard monomials of the truncated ideal; `certified` means
/// the truncation provably did not cut the local quotient (max standard
/// monomial degree <= B-2 and the count is stable under B -> B+1).
struct LocalDim {
    long dim = 0;
    int max_standard_degree = -1;
    bool certified = false;
};
LocalDim local_quotient_dimension(const Ideal& I, int bound);

} // namespace fol
