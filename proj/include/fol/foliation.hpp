#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fol/form.hpp"
#include "fol/ideal.hpp"

namespace fol {

/// A codimension-one foliation presented by a nonzero polynomial 1-form.
///
/// Degree dictionary (fixed once): a foliation of projective degree d on
/// P^{n-1} is the descended form with coefficient degree d+1, i.e. total
/// degree k = d+2.  All APIs speak total degree; the CLI converts.
class FoliationForm {
public:
    explicit FoliationForm(DiffForm omega);

    int vars() const { return omega_.vars(); }
    const DiffForm& omega() const { return omega_; }

    bool is_integrable() const;                     // omega ^ d omega == 0
    DiffForm integrability_witness() const;         // omega ^ d omega
    std::optional<int> total_degree() const { return omega_.total_degree(); }
    bool is_homogeneous() const { return omega_.is_homogeneous(); }

    /// Homogeneous and radially annihilated (i_R omega = 0).
    bool descends_to_projective() const;
    /// Projective degree via the dictionary (requires descent).
    int projective_degree() const;

    bool is_saturated() const; // gcd of the coefficients is 1

private:
    DiffForm omega_;
};

/// Ideal generated by the coefficient polynomials of omega.
Ideal singular_ideal(const FoliationForm& F);

/// Divides out the gcd of the coefficients; the divisor is monic.
std::pair<Poly, FoliationForm> saturate_form(const FoliationForm& F);

/// The cone of a projective foliation is represented by the same form; this
/// checks descent and errors otherwise.
FoliationForm cone(const FoliationForm& F);

/// Pullback under the rational map given by `sections` (one per ambient
/// coordinate of F): substitute into coefficients, replace dx_i by
/// d(section_i), then saturate.  Homogeneous sections must share one degree.
FoliationForm pullback(const std::vector<Poly>& sections, const FoliationForm& F);

/// v is a symmetry iff L_v omega ^ omega == 0.
bool is_symmetry(const VectorField& v, const FoliationForm& F);

/// For a symmetry v of an integrable F, h = i_v omega is an integrating
/// factor; the identity h d(omega) = dh ^ omega is re-verified exactly.
Poly integrating_factor_from_symmetry(const VectorField& v, const FoliationForm& F);

/// P/Q is a rational first integral iff omega ^ (Q dP - P dQ) == 0.
bool first_integral_check(const FoliationForm& F, const Poly& P, const Poly& Q);

/// Vanishing order of the pulled-back form along the exceptional divisor of
/// the blow-up at p: with nu the minimal coefficient jet degree after
/// translating p to the origin, returns nu if i_R omega_nu != 0 and nu+1
/// otherwise.
int multiplicity_at(const FoliationForm& F, const Point& p);

/// V(f) is invariant iff every coefficient of omega ^ df lies in (f).
bool is_invariant_hypersurface(const FoliationForm& F, const Poly& f);

/// Basis of the fields of graded degree ell (components of degree ell+1)
/// with v(f) in (f).
std::vector<VectorField> logarithmic_fields_basis(const Poly& f, int ell);

bool is_logarithmic_field(const VectorField& v, const Poly& f);

} // namespace fol
