#pragma once

#include <vector>

#include "fol/foliation.hpp"

namespace fol {

/// Per-degree dimensions and bases of the first-order unfolding data of a
/// homogeneous integrable 1-form of total degree k:
///   I(ell): h with h d(omega) = omega ^ (eta - dh) for some 1-form eta of
///           total degree ell,
///   J(ell): h = i_v omega over fields of graded degree ell - k,
///   K(ell): integrating factors h d(omega) = dh ^ omega,
///   Unf = I/J, and H1 of the graded complex
///   T(ell-k) -> Omega^1(ell) -> Omega^3(ell+k).
struct GradedSlice {
    int degree = 0;
    long dim_I = 0, dim_J = 0, dim_K = 0, dim_Unf = 0, dim_H1 = 0;
    std::vector<Poly> basis_I, basis_J, basis_K, basis_Unf;
};

struct RegularityReport {
    int k = 0;
    bool regular = false;
    std::vector<std::pair<int, long>> h1_table; // (ell, dim H1) over [1, k-1]
};

struct StabconesReport {
    int bound = 0;
    int k = 0;
    bool integrating_factors_vanish = false; // K(ell) = 0 for 1 <= ell <= B
    bool unfoldings_vanish = false;          // Unf(ell) = 0 for ell in [0,B], ell != k
    bool holds = false;
    std::vector<std::pair<int, long>> K_table;
    std::vector<std::pair<int, long>> Unf_table;
};

struct DeterminacyReport {
    int bound = 0;
    int k = 0;
    bool determined = false;
    std::vector<std::pair<int, long>> K_table;   // ell in [0, k]
    std::vector<std::pair<int, long>> Unf_table; // ell in (k, B]
};

/// Graded linear algebra on a fixed homogeneous integrable form.  Slices at
/// distinct degrees are independent; computations are pure.
class UnfoldingEngine {
public:
    explicit UnfoldingEngine(const FoliationForm& F);

    int vars() const { return n_; }
    int total_degree() const { return k_; }

    /// dim_H1 is only filled when with_h1 is set (it is a separate system).
    GradedSlice slice(int ell, bool with_bases = false, bool with_h1 = true) const;
    long dim_I(int ell) const { return slice(ell, false, false).dim_I; }
    long dim_J(int ell) const { return slice(ell, false, false).dim_J; }
    long dim_K(int ell) const { return slice(ell, false, false).dim_K; }
    long dim_unf(int ell) const { return slice(ell, false, false).dim_Unf; }

    /// dim ker(d1 on Omega^1(ell)) - dim im(d0 on T(ell-k)); checks
    /// d1 o d0 = 0 on the domain basis.
    long cln_h1(int ell) const;

    /// Rank: dimension of the image of v -> L_v omega on constant fields.
    long rank() const;

    /// H1(ell) = 0 for all ell in [1, k-1].
    RegularityReport regularity() const;

    StabconesReport check_stabcones_hypotheses(int bound) const;

    /// Graded criterion: K(ell) = 0 for ell <= k and Unf(ell) = 0 for
    /// k < ell <= bound.
    DeterminacyReport infinitesimal_determinacy(int bound) const;

    static int default_bound(int k) { return 2 * k + 4; }

private:
    FoliationForm F_;
    int n_ = 0;
    int k_ = 0;
    DiffForm domega_;
};

} // namespace fol
