#include "fol/unfolding.hpp"

#include <bit>
#include <unordered_map>

#include "fol/linalg.hpp"

namespace fol {

namespace {

// coordinate table for p-forms of one total degree: (mask, monomial) -> column
struct FormCoords {
    int n, p, total;
    std::vector<uint32_t> masks;
    std::vector<Monomial> monos;
    std::unordered_map<Monomial, int32_t, MonomialHash> mono_idx;
    std::unordered_map<uint32_t, int32_t> mask_idx;

    FormCoords(int n_, int p_, int total_) : n(n_), p(p_), total(total_) {
        if (p >= 0 && p <= n && total - p >= 0) {
            for (uint32_t m = 0; m < (1u << n); ++m)
                if (std::popcount(m) == p) masks.push_back(m);
            monos = monomial_basis(n, total - p);
        }
        for (size_t i = 0; i < masks.size(); ++i)
            mask_idx.emplace(masks[i], static_cast<int32_t>(i));
        for (size_t i = 0; i < monos.size(); ++i)
            mono_idx.emplace(monos[i], static_cast<int32_t>(i));
    }

    int32_t width() const {
        return static_cast<int32_t>(masks.size() * monos.size());
    }

    SparseVec coords(const DiffForm& w) const {
        std::vector<std::pair<int32_t, Rat>> entries;
        for (const auto& [mask, c] : w.coeffs()) {
            int32_t mi = mask_idx.at(mask);
            for (const auto& t : c.terms()) {
                int32_t col = mi * static_cast<int32_t>(monos.size()) + mono_idx.at(t.first);
                entries.emplace_back(col, t.second);
            }
        }
        return sparse_from_rat(entries);
    }
};

Poly combo_poly(const SparseVec& v, const std::vector<Monomial>& monos, int n,
                int32_t offset = 0, int32_t limit = -1) {
    std::vector<Poly::Term> ts;
    for (const auto& [c, val] : v.nz) {
        int32_t idx = c - offset;
        if (idx < 0) continue;
        if (limit >= 0 && idx >= limit) continue;
        ts.emplace_back(monos[static_cast<size_t>(idx)], Rat(val));
    }
    return Poly::from_terms(n, std::move(ts));
}

} // namespace

UnfoldingEngine::UnfoldingEngine(const FoliationForm& F) : F_(F) {
    n_ = F.vars();
    auto k = F.total_degree();
    if (!k) throw MathError("unfolding: the form must be homogeneous");
    if (!F.is_integrable()) throw MathError("unfolding: the form must be integrable");
    k_ = *k;
    domega_ = exterior_derivative(F.omega());
}

GradedSlice UnfoldingEngine::slice(int ell, bool with_bases, bool with_h1) const {
    if (ell < 0) throw MathError("unfolding slice: negative degree");
    GradedSlice out;
    out.degree = ell;

    const auto h_monos = monomial_basis(n_, ell);
    const long Nh = static_cast<long>(h_monos.size());
    FormCoords two(n_, 2, k_ + ell);

    // ---- I(ell): kernel of (h, eta) -> h d(omega) - omega ^ eta + omega ^ dh,
    // projected to the h coordinates
    std::vector<SparseVec> cols;
    cols.reserve(static_cast<size_t>(Nh));
    for (const auto& m : h_monos) {
        Poly h = Poly::term(n_, m, Rat(1));
        DiffForm val = domega_.mul(h) + wedge(F_.omega(), exterior_derivative(DiffForm(h)));
        cols.push_back(two.coords(val));
    }
    // eta runs over the monomial basis of Omega^1 of total degree ell
    FormCoords oneL(n_, 1, ell);
    std::vector<std::pair<int, Monomial>> eta_basis; // (variable index, coeff monomial)
    for (uint32_t mask : oneL.masks) {
        int i = std::countr_zero(mask);
        for (const auto& mu : oneL.monos) eta_basis.emplace_back(i, mu);
    }
    for (const auto& [i, mu] : eta_basis) {
        DiffForm eta = DiffForm::term(n_, {i}, Poly::term(n_, mu, Rat(1)));
        cols.push_back(two.coords(-wedge(F_.omega(), eta)));
    }
    auto kernel = kernel_of_columns(cols, two.width());
    // project kernel vectors onto the leading Nh coordinates
    std::vector<SparseVec> h_parts;
    for (const auto& k : kernel) {
        SparseVec v;
        for (const auto& [c, val] : k.nz)
            if (c < Nh) v.nz.emplace_back(c, val);
        v.make_primitive();
        if (!v.empty()) h_parts.push_back(std::move(v));
    }
    auto I_basis = rowspace_basis(h_parts, static_cast<int32_t>(Nh));
    out.dim_I = static_cast<long>(I_basis.size());

    // ---- J(ell): image of v -> i_v omega on fields with components of
    // degree ell - k + 1
    std::vector<SparseVec> j_rows;
    const int comp_deg = ell - k_ + 1;
    std::unordered_map<Monomial, int32_t, MonomialHash> h_idx;
    for (size_t i = 0; i < h_monos.size(); ++i)
        h_idx.emplace(h_monos[i], static_cast<int32_t>(i));
    auto poly_coords = [&](const Poly& p) {
        std::vector<std::pair<int32_t, Rat>> entries;
        for (const auto& t : p.terms()) entries.emplace_back(h_idx.at(t.first), t.second);
        return sparse_from_rat(entries);
    };
    if (comp_deg >= 0) {
        const auto f_monos = monomial_basis(n_, comp_deg);
        for (int i = 0; i < n_; ++i) {
            Poly wi = F_.omega().coeff(1u << i);
            if (wi.is_zero()) continue;
            for (const auto& mu : f_monos) {
                Poly val = Poly::term(n_, mu, Rat(1)) * wi;
                if (!val.is_zero()) j_rows.push_back(poly_coords(val));
            }
        }
    }
    auto J_basis = rowspace_basis(j_rows, static_cast<int32_t>(Nh));
    out.dim_J = static_cast<long>(J_basis.size());

    // ---- K(ell): kernel of h -> h d(omega) - dh ^ omega
    std::vector<SparseVec> k_cols;
    for (const auto& m : h_monos) {
        Poly h = Poly::term(n_, m, Rat(1));
        DiffForm val = domega_.mul(h) -
                       wedge(exterior_derivative(DiffForm(h)), F_.omega());
        k_cols.push_back(two.coords(val));
    }
    auto K_kernel = kernel_of_columns(k_cols, two.width());
    out.dim_K = static_cast<long>(K_kernel.size());

    // ---- Unf(ell) = I/J: completion of the J-basis inside the I-basis
    auto compl_idx = completing_indices(J_basis, I_basis, static_cast<int32_t>(Nh));
    out.dim_Unf = static_cast<long>(compl_idx.size());
    if (out.dim_Unf != out.dim_I - out.dim_J)
        throw MathError("unfolding slice: J is not contained in I (internal)");

    if (with_h1) out.dim_H1 = cln_h1(ell);

    if (with_bases) {
        for (const auto& r : I_basis) out.basis_I.push_back(combo_poly(r, h_monos, n_));
        for (const auto& r : J_basis) out.basis_J.push_back(combo_poly(r, h_monos, n_));
        for (const auto& r : K_kernel) out.basis_K.push_back(combo_poly(r, h_monos, n_));
        for (size_t idx : compl_idx)
            out.basis_Unf.push_back(combo_poly(I_basis[idx], h_monos, n_));
    }
    return out;
}

long UnfoldingEngine::cln_h1(int ell) const {
    // middle term Omega^1(ell)
    FormCoords one(n_, 1, ell);
    if (one.width() == 0) return 0;
    FormCoords three(n_, 3, ell + k_);

    // d1(eta) = eta ^ d(omega) + omega ^ d(eta)
    std::vector<SparseVec> d1_cols;
    std::vector<std::pair<int, Monomial>> eta_basis;
    for (uint32_t mask : one.masks) {
        int i = std::countr_zero(mask);
        for (const auto& mu : one.monos) eta_basis.emplace_back(i, mu);
    }
    for (const auto& [i, mu] : eta_basis) {
        DiffForm eta = DiffForm::term(n_, {i}, Poly::term(n_, mu, Rat(1)));
        DiffForm val = wedge(eta, domega_) + wedge(F_.omega(), exterior_derivative(eta));
        d1_cols.push_back(three.coords(val));
    }
    long dim_omega1 = static_cast<long>(d1_cols.size());
    long rank_d1 = rank_of(d1_cols, three.width());
    long ker_d1 = dim_omega1 - rank_d1;

    // d0(v) = L_v omega on fields of graded degree ell - k
    long rank_d0 = 0;
    const int comp_deg = ell - k_ + 1;
    if (comp_deg >= 0) {
        std::vector<SparseVec> d0_cols;
        const auto f_monos = monomial_basis(n_, comp_deg);
        for (int i = 0; i < n_; ++i) {
            for (const auto& mu : f_monos) {
                VectorField v = VectorField::zero(n_);
                std::vector<Poly> comps(static_cast<size_t>(n_), Poly::zero(n_));
                comps[static_cast<size_t>(i)] = Poly::term(n_, mu, Rat(1));
                v = VectorField(std::move(comps));
                DiffForm lv = lie_derivative(v, F_.omega());
                // complex property: d1(d0(v)) = L_v(omega ^ d omega) = 0
                DiffForm check =
                    wedge(lv, domega_) + wedge(F_.omega(), exterior_derivative(lv));
                if (!check.is_zero())
                    throw MathError("cln complex: d1 o d0 != 0 (internal)");
                d0_cols.push_back(one.coords(lv));
            }
        }
        rank_d0 = rank_of(d0_cols, one.width());
    }
    return ker_d1 - rank_d0;
}

long UnfoldingEngine::rank() const {
    FormCoords one(n_, 1, k_ - 1);
    std::vector<SparseVec> cols;
    for (int i = 0; i < n_; ++i) {
        DiffForm lv = lie_derivative(VectorField::coordinate(n_, i), F_.omega());
        cols.push_back(one.coords(lv));
    }
    return rank_of(cols, one.width());
}

RegularityReport UnfoldingEngine::regularity() const {
    RegularityReport rep;
    rep.k = k_;
    rep.regular = true;
    for (int ell = 1; ell <= k_ - 1; ++ell) {
        long h1 = cln_h1(ell);
        rep.h1_table.emplace_back(ell, h1);
        if (h1 != 0) rep.regular = false;
    }
    return rep;
}

StabconesReport UnfoldingEngine::check_stabcones_hypotheses(int bound) const {
    if (!F_.descends_to_projective())
        throw MathError("stabcones: the form does not descend to projective space");
    StabconesReport rep;
    rep.bound = bound;
    rep.k = k_;
    rep.integrating_factors_vanish = true;
    rep.unfoldings_vanish = true;
    for (int ell = 0; ell <= bound; ++ell) {
        GradedSlice s = slice(ell, false, false);
        if (ell >= 1) {
            rep.K_table.emplace_back(ell, s.dim_K);
            if (s.dim_K != 0) rep.integrating_factors_vanish = false;
        }
        if (ell != k_) {
            rep.Unf_table.emplace_back(ell, s.dim_Unf);
            if (s.dim_Unf != 0) rep.unfoldings_vanish = false;
        }
    }
    rep.holds = rep.integrating_factors_vanish && rep.unfoldings_vanish;
    return rep;
}

DeterminacyReport UnfoldingEngine::infinitesimal_determinacy(int bound) const {
    DeterminacyReport rep;
    rep.bound = bound;
    rep.k = k_;
    rep.determined = true;
    for (int ell = 0; ell <= k_; ++ell) {
        long dk = slice(ell, false, false).dim_K;
        rep.K_table.emplace_back(ell, dk);
        if (dk != 0) rep.determined = false;
    }
    for (int ell = k_ + 1; ell <= bound; ++ell) {
        long du = slice(ell, false, false).dim_Unf;
        rep.Unf_table.emplace_back(ell, du);
        if (du != 0) rep.determined = false;
    }
    return rep;
}

} // namespace fol
