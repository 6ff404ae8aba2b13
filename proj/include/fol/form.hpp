#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fol/poly.hpp"

namespace fol {

class VectorField;

/// Polynomial differential p-form.  Coefficients are stored on strictly
/// increasing index tuples, encoded as bitmasks; sign bookkeeping happens at
/// insertion, so equality is plain representation equality.
///
/// Grading: deg x_i = deg dx_i = 1, hence the total degree of a homogeneous
/// p-form is (coefficient degree) + p.
class DiffForm {
public:
    DiffForm() = default;
    DiffForm(int n, int p);
    explicit DiffForm(Poly f); // 0-form

    static DiffForm zero(int n, int p) { return DiffForm(n, p); }
    /// c * dx_{i1} ^ ... ^ dx_{ip} for a strictly increasing tuple.
    static DiffForm term(int n, const std::vector<int>& tuple, Poly c);
    static DiffForm d_coordinate(int n, int i); // dx_i

    int vars() const { return n_; }
    int form_degree() const { return p_; }
    bool is_zero() const { return c_.empty(); }

    const std::map<uint32_t, Poly>& coeffs() const { return c_; }
    Poly coeff(uint32_t mask) const;
    /// The underlying Poly of a 0-form.
    Poly scalar() const;

    /// All coefficients share one total degree c; the form's total degree is
    /// then c + p.
    std::optional<int> total_degree() const;
    bool is_homogeneous() const { return is_zero() || total_degree().has_value(); }
    /// Largest coefficient degree + p (useful for non-homogeneous forms).
    int max_total_degree() const;

    DiffForm operator+(const DiffForm& o) const;
    DiffForm operator-(const DiffForm& o) const;
    DiffForm operator-() const;
    DiffForm scaled(const Rat& c) const;
    DiffForm mul(const Poly& f) const;

    bool operator==(const DiffForm& o) const {
        return n_ == o.n_ && p_ == o.p_ && c_ == o.c_;
    }
    bool operator!=(const DiffForm& o) const { return !(*this == o); }

    /// Sum of the pieces whose total degree is exactly t.
    DiffForm graded_component(int t) const;

    /// Substitute x -> x + c in every coefficient (the frame dx is unchanged).
    DiffForm translated(const Point& pt) const;

    Rat eval_coeff(uint32_t mask, const Point& pt) const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const { return str(default_names(n_)); }

    /// Inserts c * dx_tuple given by an arbitrary mask with a sign-corrected
    /// coefficient; used by the algebra routines.
    void add_term(uint32_t mask, const Poly& c);

private:
    int n_ = 0;
    int p_ = 0;
    std::map<uint32_t, Poly> c_;
};

/// Polynomial vector field: n coefficient polynomials of the frame d/dx_i.
/// Grading: deg(d/dx_i) = -1, so a field with homogeneous components of
/// degree c has graded degree c - 1.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(std::vector<Poly> comps);
    static VectorField zero(int n);
    static VectorField coordinate(int n, int i); // d/dx_i
    static VectorField euler(int n);             // R = sum x_i d/dx_i

    int vars() const { return n_; }
    const Poly& comp(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Poly>& comps() const { return c_; }
    bool is_zero() const;

    /// Graded degree (components homogeneous of one degree c -> c - 1).
    std::optional<int> graded_degree() const;

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField scaled(const Rat& r) const;
    VectorField mul(const Poly& f) const;
    bool operator==(const VectorField& o) const = default;

    /// Derivation applied to a polynomial: v(f) = sum v_i df/dx_i.
    Poly apply(const Poly& f) const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const { return str(default_names(n_)); }

private:
    int n_ = 0;
    std::vector<Poly> c_;
};

// ---- exterior algebra ----------------------------------------------------

/// Sign-correct shuffle product; the zero form when p + q > n.
DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// Exterior derivative; d(d(a)) = 0.
DiffForm exterior_derivative(const DiffForm& a);

/// Interior product i_v; annihilates 0-forms.
DiffForm interior_product(const VectorField& v, const DiffForm& a);

/// Lie derivative, defined as the Cartan combination i_v d + d i_v.
DiffForm lie_derivative(const VectorField& v, const DiffForm& a);

/// [v, w]_i = v(w_i) - w(v_i).
VectorField lie_bracket(const VectorField& v, const VectorField& w);

/// Substitution pullback under the map x_i = comps[i] (a map into the form's
/// ambient space): coefficients are composed and dx_i becomes d(comps[i]).
DiffForm pullback_form(const std::vector<Poly>& comps, const DiffForm& a);

} // namespace fol
