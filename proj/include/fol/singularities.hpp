#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fol/foliation.hpp"

namespace fol {

/// Polynomial map from C^m to an affine space (components) or to a
/// projective space (homogeneous sections of one common degree on the cone).
class PolyMap {
public:
    enum class Target { AFFINE, PROJECTIVE };

    PolyMap(std::vector<Poly> comps, Target target);

    int source_dim() const { return m_; }
    /// Dimension of the target space: component count for affine targets,
    /// section count - 1 for projective ones.
    int target_dim() const;
    Target target() const { return target_; }
    bool projective() const { return target_ == Target::PROJECTIVE; }
    const std::vector<Poly>& comps() const { return c_; }

    /// Jacobian matrix rows (one gradient per component/section).
    std::vector<std::vector<Poly>> jacobian() const;

    /// Base locus ideal (s_0, ..., s_n) of a projective map.
    Ideal base_locus() const;

private:
    int m_ = 0;
    std::vector<Poly> c_;
    Target target_;
};

enum class SingClass { NonSingular, Morse, Kupka, OtherSingular };

std::string to_string(SingClass c);

struct SingularityVerdict {
    Point point;
    SingClass cls = SingClass::NonSingular;
    bool omega_vanishes = false;
    bool domega_vanishes = false;
    bool jet_symmetric = false;
    Rat jet_determinant;           // det of the linear-jet matrix (Morse test)
    std::vector<std::vector<Rat>> jet_matrix;
};

/// Pointwise classification per the jet criterion: NonSingular when
/// omega(p) != 0; Kupka when omega(p) = 0, d omega(p) != 0; Morse when the
/// linear-jet matrix is symmetric and invertible; OtherSingular otherwise.
SingularityVerdict classify_point(const FoliationForm& F, const Point& p);

/// Milnor number at p: local quotient dimension of the Jacobian ideal after
/// translating p to the origin; nullopt when infinite (or not certified
/// within the truncation bound).
std::optional<long> milnor_number(const Poly& f, const Point& p, int bound = 30);

/// Ideal of the critical set C_k: (k+1)-minors of the Jacobian for affine
/// targets; (k+2)-minors on the cone for projective targets (cone rank =
/// fiber rank + 1 away from the base locus).
Ideal critical_ideal(const PolyMap& pi, int k);

struct DimensionReport {
    int k = 0;
    bool empty = false;
    int dim = 0;    // projective dimension for projective targets
    int lower = 0;  // m - (m-k)(n-k), with m, n projective when applicable
    int upper = 0;  // k
    bool holds = false;
};

/// Prop-style bound check: m - (m-k)(n-k) <= dim C_k <= k for nonempty C_k.
/// Projective maps are measured projectively (cone Krull dimension - 1,
/// after saturating by the base locus).
DimensionReport check_expected_dimension(const PolyMap& pi, int k);

/// Tang(pi, G) = saturation(Sing(pullback), pulled-back Sing(G)).
Ideal tangency_ideal(const PolyMap& pi, const FoliationForm& G);

struct TangencyReport {
    bool projective = false;
    int dim_tang = 0;     // projective dimension when projective
    bool finite = false;  // dim <= 0
    std::optional<long> count_with_multiplicity;
    std::vector<SingularityVerdict> points; // rational points found
    bool has_unclassified_points = false;
    std::vector<Poly> tang_generators;
};

TangencyReport tangency_analysis(const PolyMap& pi, const FoliationForm& G);

struct GenericMapReport {
    bool generic = false;
    bool base_locus_empty = false;
    std::vector<Poly> base_locus_gens;
};

/// Transversality of the sections along the base locus: the ideal
/// (B + maximal Jacobian minors) must become the unit ideal after
/// saturation by the irrelevant ideal.
GenericMapReport check_generic_map(const PolyMap& pi);

/// Rational points of a zero-dimensional ideal found by lex elimination and
/// rational root extraction; `complete` is false when some branch had no
/// rational/solvable structure.
struct RationalPoints {
    std::vector<Point> points;
    bool complete = true;
};
RationalPoints rational_points(const Ideal& I);

} // namespace fol
