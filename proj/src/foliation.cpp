#include "fol/foliation.hpp"

#include <unordered_map>

#include "fol/linalg.hpp"

namespace fol {

FoliationForm::FoliationForm(DiffForm omega) : omega_(std::move(omega)) {
    if (omega_.form_degree() != 1) throw MathError("foliation form must be a 1-form");
    if (omega_.is_zero()) throw MathError("foliation form must be nonzero");
}

bool FoliationForm::is_integrable() const {
    return wedge(omega_, exterior_derivative(omega_)).is_zero();
}

DiffForm FoliationForm::integrability_witness() const {
    return wedge(omega_, exterior_derivative(omega_));
}

bool FoliationForm::descends_to_projective() const {
    if (!omega_.is_homogeneous()) return false;
    return interior_product(VectorField::euler(vars()), omega_).scalar().is_zero();
}

int FoliationForm::projective_degree() const {
    if (!descends_to_projective())
        throw MathError("projective degree: form does not descend");
    return *total_degree() - 2;
}

bool FoliationForm::is_saturated() const {
    Poly g = Poly::zero(vars());
    for (const auto& [m, c] : omega_.coeffs()) g = poly_gcd(g, c);
    return g.is_constant() && !g.is_zero();
}

Ideal singular_ideal(const FoliationForm& F) {
    std::vector<Poly> gens;
    for (const auto& [m, c] : F.omega().coeffs()) gens.push_back(c);
    return Ideal(std::move(gens));
}

std::pair<Poly, FoliationForm> saturate_form(const FoliationForm& F) {
    Poly g = Poly::zero(F.vars());
    for (const auto& [m, c] : F.omega().coeffs()) g = poly_gcd(g, c);
    DiffForm w(F.vars(), 1);
    for (const auto& [m, c] : F.omega().coeffs()) w.add_term(m, *c.divided_by(g));
    return {g, FoliationForm(std::move(w))};
}

FoliationForm cone(const FoliationForm& F) {
    if (!F.descends_to_projective())
        throw MathError("cone: the form does not descend to projective space");
    return F;
}

FoliationForm pullback(const std::vector<Poly>& sections, const FoliationForm& F) {
    if (static_cast<int>(sections.size()) != F.vars())
        throw DimError("pullback: expected one section per coordinate of the target cone");
    bool all_zero = true;
    for (const auto& s : sections)
        if (!s.is_zero()) all_zero = false;
    if (all_zero) throw MathError("pullback: all sections are zero");
    if (!F.descends_to_projective())
        throw MathError("pullback: the target form does not descend");
    // homogeneous sections must share one common degree
    std::optional<int> deg;
    bool all_homog = true;
    for (const auto& s : sections) {
        auto h = s.homogeneous_degree();
        if (!h) {
            all_homog = false;
            continue;
        }
        if (deg && *deg != *h)
            throw MathError("pullback: homogeneous sections of different degrees");
        if (!deg) deg = *h;
    }
    (void)all_homog;
    DiffForm pulled = pullback_form(sections, F.omega());
    if (pulled.is_zero()) throw MathError("pullback: degenerate (identically zero) pullback");
    return saturate_form(FoliationForm(std::move(pulled))).second;
}

bool is_symmetry(const VectorField& v, const FoliationForm& F) {
    return wedge(lie_derivative(v, F.omega()), F.omega()).is_zero();
}

Poly integrating_factor_from_symmetry(const VectorField& v, const FoliationForm& F) {
    if (!F.is_integrable())
        throw MathError("integrating factor: the form is not integrable");
    if (!is_symmetry(v, F)) throw MathError("integrating factor: v is not a symmetry");
    Poly h = interior_product(v, F.omega()).scalar();
    DiffForm lhs = exterior_derivative(F.omega()).mul(h);
    DiffForm rhs = wedge(exterior_derivative(DiffForm(h)), F.omega());
    if (lhs != rhs)
        throw MathError("integrating factor identity failed (internal)");
    return h;
}

bool first_integral_check(const FoliationForm& F, const Poly& P, const Poly& Q) {
    if (Q.is_zero()) throw MathError("first integral: zero denominator");
    DiffForm dP = exterior_derivative(DiffForm(P));
    DiffForm dQ = exterior_derivative(DiffForm(Q));
    DiffForm num = dP.mul(Q) - dQ.mul(P); // Q dP - P dQ
    return wedge(F.omega(), num).is_zero();
}

int multiplicity_at(const FoliationForm& F, const Point& p) {
    DiffForm w = F.omega().translated(p);
    // minimal coefficient jet degree
    int nu = -1;
    for (const auto& [m, c] : w.coeffs()) {
        int d = c.min_degree();
        if (d >= 0) nu = (nu < 0) ? d : std::min(nu, d);
    }
    if (nu < 0) throw MathError("multiplicity: zero form");
    DiffForm jet = w.graded_component(nu + 1); // 1-form of total degree nu+1
    Poly r = interior_product(VectorField::euler(F.vars()), jet).scalar();
    return r.is_zero() ? nu + 1 : nu;
}

bool is_invariant_hypersurface(const FoliationForm& F, const Poly& f) {
    if (f.is_zero() || f.is_constant())
        throw MathError("invariant hypersurface: f must be nonconstant");
    DiffForm w = wedge(F.omega(), exterior_derivative(DiffForm(f)));
    for (const auto& [m, c] : w.coeffs())
        if (!c.divided_by(f).has_value()) return false;
    return true;
}

bool is_logarithmic_field(const VectorField& v, const Poly& f) {
    return v.apply(f).divided_by(f).has_value();
}

std::vector<VectorField> logarithmic_fields_basis(const Poly& f, int ell) {
    if (f.is_zero() || f.is_constant())
        throw MathError("logarithmic fields: f must be nonconstant");
    int n = f.vars();
    int comp_deg = ell + 1;
    if (comp_deg < 0) return {};
    auto monos = monomial_basis(n, comp_deg);
    Ideal If({f});
    // columns: normal form of (mu d/dx_j)(f) modulo (f), coordinatized over
    // the monomials that occur
    struct Col {
        int j;
        Monomial mu;
        Poly nf;
    };
    std::vector<Col> cols;
    for (int j = 0; j < n; ++j) {
        Poly dfj = f.derivative(j);
        for (const auto& mu : monos) {
            Poly w = Poly::term(n, mu, Rat(1)) * dfj;
            cols.push_back({j, mu, If.normal_form(w)});
        }
    }
    std::unordered_map<Monomial, int32_t, MonomialHash> coord;
    for (const auto& c : cols)
        for (const auto& t : c.nf.terms())
            if (!coord.count(t.first))
                coord.emplace(t.first, static_cast<int32_t>(coord.size()));
    int32_t width = static_cast<int32_t>(coord.size());
    std::vector<SparseVec> columns;
    columns.reserve(cols.size());
    for (const auto& c : cols) {
        std::vector<std::pair<int32_t, Rat>> entries;
        for (const auto& t : c.nf.terms()) entries.emplace_back(coord.at(t.first), t.second);
        columns.push_back(sparse_from_rat(entries));
    }
    auto kernel = kernel_of_columns(columns, width);
    std::vector<VectorField> basis;
    for (const auto& k : kernel) {
        std::vector<Poly> comps(static_cast<size_t>(n), Poly::zero(n));
        for (const auto& [idx, val] : k.nz) {
            const Col& c = cols[static_cast<size_t>(idx)];
            comps[static_cast<size_t>(c.j)] =
                comps[static_cast<size_t>(c.j)] + Poly::term(n, c.mu, Rat(val));
        }
        basis.emplace_back(std::move(comps));
    }
    return basis;
}

} // namespace fol
