#include "fol/singularities.hpp"

#include <algorithm>

namespace fol {

PolyMap::PolyMap(std::vector<Poly> comps, Target target) : c_(std::move(comps)), target_(target) {
    if (c_.empty()) throw DimError("map: needs at least one component");
    m_ = c_[0].vars();
    for (const auto& p : c_)
        if (p.vars() != m_) throw DimError("map: components in different rings");
    if (target_ == Target::PROJECTIVE) {
        bool all_zero = true;
        std::optional<int> deg;
        for (const auto& s : c_) {
            if (s.is_zero()) continue;
            all_zero = false;
            auto h = s.homogeneous_degree();
            if (!h) throw MathError("projective map: sections must be homogeneous");
            if (deg && *deg != *h)
                throw MathError("projective map: sections of different degrees");
            deg = *h;
        }
        if (all_zero) throw MathError("projective map: all sections are zero");
    }
}

int PolyMap::target_dim() const {
    return target_ == Target::AFFINE ? static_cast<int>(c_.size())
                                     : static_cast<int>(c_.size()) - 1;
}

std::vector<std::vector<Poly>> PolyMap::jacobian() const {
    std::vector<std::vector<Poly>> J;
    J.reserve(c_.size());
    for (const auto& p : c_) {
        std::vector<Poly> row;
        row.reserve(static_cast<size_t>(m_));
        for (int j = 0; j < m_; ++j) row.push_back(p.derivative(j));
        J.push_back(std::move(row));
    }
    return J;
}

Ideal PolyMap::base_locus() const {
    if (target_ != Target::PROJECTIVE) throw MathError("base locus: projective maps only");
    return Ideal(c_);
}

std::string to_string(SingClass c) {
    switch (c) {
        case SingClass::NonSingular: return "NonSingular";
        case SingClass::Morse: return "Morse";
        case SingClass::Kupka: return "Kupka";
        case SingClass::OtherSingular: return "OtherSingular";
    }
    return "?";
}

static Rat rat_det(std::vector<std::vector<Rat>> a) {
    const size_t n = a.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
        }
    }
    return det;
}

SingularityVerdict classify_point(const FoliationForm& F, const Point& p) {
    const int n = F.vars();
    if (static_cast<int>(p.size()) != n) throw DimError("classify: point dimension mismatch");
    SingularityVerdict v;
    v.point = p;

    DiffForm w = F.omega().translated(p);
    bool omega0 = true;
    for (const auto& [m, c] : w.coeffs())
        if (!c.graded_component(0).is_zero()) omega0 = false;
    v.omega_vanishes = omega0;
    if (!omega0) {
        v.cls = SingClass::NonSingular;
        return v;
    }

    DiffForm dw = exterior_derivative(w);
    bool domega0 = true;
    for (const auto& [m, c] : dw.coeffs())
        if (!c.graded_component(0).is_zero()) domega0 = false;
    v.domega_vanishes = domega0;
    if (!domega0) {
        v.cls = SingClass::Kupka;
        return v;
    }

    // linear jet: coefficient of dx_i is sum_j A[i][j] x_j + h.o.t.
    v.jet_matrix.assign(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) {
        Poly ci = w.coeff(1u << i).graded_component(1);
        for (const auto& t : ci.terms()) {
            for (int j = 0; j < n; ++j)
                if (t.first.exp(j) == 1) v.jet_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = t.second;
        }
    }
    v.jet_symmetric = true;
    for (int i = 0; i < n && v.jet_symmetric; ++i)
        for (int j = i + 1; j < n; ++j)
            if (v.jet_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                v.jet_matrix[static_cast<size_t>(j)][static_cast<size_t>(i)]) {
                v.jet_symmetric = false;
                break;
            }
    v.jet_determinant = rat_det(v.jet_matrix);
    v.cls = (v.jet_symmetric && v.jet_determinant != 0) ? SingClass::Morse
                                                        : SingClass::OtherSingular;
    return v;
}

std::optional<long> milnor_number(const Poly& f, const Point& p, int bound) {
    Poly g = f.translated(p);
    std::vector<Poly> jac;
    for (int i = 0; i < f.vars(); ++i) jac.push_back(g.derivative(i));
    bool all_zero = true;
    for (const auto& d : jac)
        if (!d.is_zero()) all_zero = false;
    if (all_zero) return std::nullopt; // constant f: non-isolated by convention
    LocalDim ld = local_quotient_dimension(Ideal(std::move(jac)), bound);
    if (!ld.certified) return std::nullopt;
    return ld.dim;
}

static Poly sym_det(const std::vector<std::vector<Poly>>& M, const std::vector<int>& rows,
                    const std::vector<int>& cols, int n) {
    if (rows.size() == 1) return M[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[0])];
    Poly acc = Poly::zero(n);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
        const Poly& a = M[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[j])];
        if (a.is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        Poly minor = sym_det(M, sub_rows, sub_cols, n);
        Poly term = a * minor;
        if (j & 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

static void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<size_t>(k));
    // iterative enumeration in lexicographic order
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    if (k == 0) {
        out.push_back({});
        return;
    }
    if (k > n) return;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
}

Ideal critical_ideal(const PolyMap& pi, int k) {
    const int m = pi.source_dim();
    const int n = pi.target_dim();
    if (k < 0 || k > std::min(m, n)) throw MathError("critical set: k out of range");
    auto J = pi.jacobian();
    const int rows = static_cast<int>(J.size()); // n or n+1
    // fiber rank <= k on the cone means cone rank <= k+1 away from B
    const int size = pi.projective() ? k + 2 : k + 1;
    std::vector<Poly> gens;
    if (size > rows || size > m) {
        gens.push_back(Poly::zero(m)); // rank can never exceed k: whole space
        return Ideal(std::move(gens));
    }
    std::vector<std::vector<int>> rsel, csel;
    combinations(rows, size, rsel);
    combinations(m, size, csel);
    for (const auto& r : rsel)
        for (const auto& c : csel) {
            Poly d = sym_det(J, r, c, m);
            if (!d.is_zero()) gens.push_back(d);
        }
    if (gens.empty()) gens.push_back(Poly::zero(m));
    return Ideal(std::move(gens));
}

DimensionReport check_expected_dimension(const PolyMap& pi, int k) {
    DimensionReport rep;
    rep.k = k;
    const int n = pi.target_dim();
    const int m_eff = pi.projective() ? pi.source_dim() - 1 : pi.source_dim();
    rep.lower = m_eff - (m_eff - k) * (n - k);
    rep.upper = k;
    Ideal C = critical_ideal(pi, k);
    if (pi.projective()) {
        Ideal sat = saturation(C, pi.base_locus());
        int kr = sat.krull_dimension();
        if (kr <= 0) { // at most the cone origin: projectively empty
            rep.empty = true;
            rep.dim = -1;
        } else {
            rep.dim = kr - 1;
        }
    } else {
        int kr = C.krull_dimension();
        if (kr < 0) {
            rep.empty = true;
            rep.dim = -1;
        } else {
            rep.dim = kr;
        }
    }
    rep.holds = rep.empty || (rep.lower <= rep.dim && rep.dim <= rep.upper);
    return rep;
}

static FoliationForm pulled_foliation(const PolyMap& pi, const FoliationForm& G) {
    if (G.vars() != static_cast<int>(pi.comps().size()))
        throw DimError("tangency: the foliation must live on the target coordinates");
    if (pi.projective() && !G.descends_to_projective())
        throw MathError("tangency: the target foliation must descend");
    DiffForm raw = pullback_form(pi.comps(), G.omega());
    if (raw.is_zero()) throw MathError("tangency: degenerate pullback");
    return saturate_form(FoliationForm(std::move(raw))).second;
}

Ideal tangency_ideal(const PolyMap& pi, const FoliationForm& G) {
    FoliationForm F = pulled_foliation(pi, G);
    Ideal singF = singular_ideal(F);
    std::vector<Poly> pulled;
    for (const auto& [m, c] : G.omega().coeffs()) {
        Poly q = c.substitute(pi.comps());
        if (!q.is_zero()) pulled.push_back(q);
    }
    if (pulled.empty()) throw MathError("tangency: Sing(G) pulls back to the whole space");
    return saturation(singF, Ideal(std::move(pulled)));
}

TangencyReport tangency_analysis(const PolyMap& pi, const FoliationForm& G) {
    TangencyReport rep;
    rep.projective = pi.projective();
    FoliationForm F = pulled_foliation(pi, G);
    Ideal T = tangency_ideal(pi, G);
    rep.tang_generators = T.groebner();

    const int m = pi.source_dim();
    Ideal pointwise = T; // ideal whose rational solutions are reported
    if (rep.projective) {
        int kr = T.krull_dimension();
        rep.dim_tang = (kr <= 0) ? -1 : kr - 1;
        // affine slice l(x) = 1 picks one representative per projective point
        std::vector<Poly> slice_gens = T.gens();
        Poly l = Poly::zero(m);
        for (int i = 0; i < m; ++i)
            l = l + Poly::variable(m, i).scaled(Rat(i + 1));
        slice_gens.push_back(l - Poly::one(m));
        pointwise = Ideal(std::move(slice_gens));
        if (rep.dim_tang <= 0) rep.count_with_multiplicity = pointwise.vector_space_dimension();
    } else {
        rep.dim_tang = T.krull_dimension();
        if (rep.dim_tang <= 0) rep.count_with_multiplicity = T.vector_space_dimension();
    }
    rep.finite = rep.dim_tang <= 0;
    if (rep.finite) {
        RationalPoints pts = rational_points(pointwise);
        rep.has_unclassified_points = !pts.complete;
        for (const auto& p : pts.points) rep.points.push_back(classify_point(F, p));
        std::sort(rep.points.begin(), rep.points.end(),
                  [](const SingularityVerdict& a, const SingularityVerdict& b) {
                      return a.point < b.point;
                  });
    }
    return rep;
}

GenericMapReport check_generic_map(const PolyMap& pi) {
    if (!pi.projective()) throw MathError("generic-map check: projective targets only");
    GenericMapReport rep;
    const int m = pi.source_dim();
    Ideal B = pi.base_locus();
    rep.base_locus_gens = B.groebner();
    std::vector<Poly> irr_gens;
    for (int i = 0; i < m; ++i) irr_gens.push_back(Poly::variable(m, i));
    Ideal irrelevant(std::move(irr_gens));
    rep.base_locus_empty = saturation(B, irrelevant).is_unit();

    auto J = pi.jacobian();
    const int rows = static_cast<int>(J.size());
    const int size = std::min(rows, m);
    std::vector<std::vector<int>> rsel, csel;
    combinations(rows, size, rsel);
    combinations(m, size, csel);
    std::vector<Poly> gens = B.gens();
    for (const auto& r : rsel)
        for (const auto& c : csel) {
            Poly d = sym_det(J, r, c, m);
            if (!d.is_zero()) gens.push_back(d);
        }
    Ideal T(std::move(gens));
    rep.generic = saturation(T, irrelevant).is_unit();
    return rep;
}

// ---- rational point extraction ---------------------------------------------

namespace {

std::vector<Int> divisors_of(const Int& a0) {
    std::vector<Int> out;
    Int a = abs(a0);
    if (a == 0 || a > Int("1000000000000")) return out;
    for (Int d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
        if (d > 1000000) return {}; // give up on huge constants
    }
    return out;
}

// rational roots (distinct) of a nonzero univariate polynomial given by
// coefficients c[i] of x^i; `complete` reports whether all complex roots
// were accounted for (after deflation the remainder is constant)
struct Roots {
    std::vector<Rat> roots;
    bool complete = true;
};

Roots rational_roots(std::vector<Rat> c) {
    Roots out;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) {
        out.complete = false; // zero polynomial: not zero-dimensional
        return out;
    }
    // factor out x^v
    size_t v = 0;
    while (v < c.size() && c[v] == 0) ++v;
    if (v > 0) {
        out.roots.push_back(Rat(0));
        c.erase(c.begin(), c.begin() + static_cast<long>(v));
    }
    if (c.size() <= 1) return out;
    // scale to integer coefficients
    Int den(1);
    for (const auto& q : c) den = lcm(den, q.get_den());
    std::vector<Int> ic;
    ic.reserve(c.size());
    for (const auto& q : c) ic.push_back(q.get_num() * (den / q.get_den()));
    auto eval = [&](const Rat& x) {
        Rat acc(0);
        for (size_t i = ic.size(); i-- > 0;) acc = acc * x + Rat(ic[i]);
        return acc;
    };
    auto p_div = divisors_of(ic.front());
    auto q_div = divisors_of(ic.back());
    if (p_div.empty() || q_div.empty()) {
        out.complete = false;
        return out;
    }
    size_t found_degree = 0;
    std::vector<Rat> found;
    for (const auto& p : p_div)
        for (const auto& q : q_div)
            for (int s = -1; s <= 1; s += 2) {
                Rat cand(s * p, q);
                cand.canonicalize();
                if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
                if (eval(cand) == 0) found.push_back(cand);
            }
    // deflate to count multiplicities toward the degree budget
    std::vector<Rat> work(c);
    for (const auto& r : found) {
        bool again = true;
        while (again && work.size() > 1) {
            // synthetic division by (x - r)
            std::vector<Rat> q(work.size() - 1);
            Rat carry = work.back();
            for (size_t i = work.size() - 1; i-- > 0;) {
                q[i] = carry;
                carry = work[i] + carry * r;
            }
            if (carry == 0) {
                work = q;
                ++found_degree;
            } else {
                again = false;
            }
        }
    }
    out.roots.insert(out.roots.end(), found.begin(), found.end());
    out.complete = (work.size() <= 1);
    return out;
}

void solve_rec(std::vector<Poly> gens, int n, Point partial, RationalPoints& out) {
    if (n == 0) {
        Point p(partial.rbegin(), partial.rend());
        out.points.push_back(std::move(p));
        return;
    }
    Ideal I(gens, MonomialOrder{MonomialOrder::LEX, 0});
    const auto& gb = I.groebner();
    if (gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero()) return; // no solutions
    // find a generator univariate in the last variable
    std::optional<std::vector<Rat>> uni;
    for (const auto& g : gb) {
        bool pure = true;
        int maxdeg = 0;
        for (const auto& t : g.terms()) {
            for (int i = 0; i < n - 1 && pure; ++i)
                if (t.first.exp(i) > 0) pure = false;
            maxdeg = std::max(maxdeg, static_cast<int>(t.first.exp(n - 1)));
        }
        if (pure && !g.is_zero()) {
            std::vector<Rat> c(static_cast<size_t>(maxdeg) + 1, Rat(0));
            for (const auto& t : g.terms()) c[t.first.exp(n - 1)] = t.second;
            uni = std::move(c);
            break;
        }
    }
    if (!uni) {
        out.complete = false;
        return;
    }
    Roots roots = rational_roots(*uni);
    if (!roots.complete) out.complete = false;
    for (const auto& r : roots.roots) {
        // substitute x_{n-1} = r and drop the variable
        std::vector<Poly> next;
        std::vector<Poly> images;
        for (int i = 0; i < n - 1; ++i) images.push_back(Poly::variable(n - 1, i));
        images.push_back(Poly::constant(n - 1, r));
        for (const auto& g : gens) {
            Poly h = g.substitute(images);
            if (!h.is_zero()) next.push_back(h);
        }
        Point next_partial = partial;
        next_partial.push_back(r);
        if (next.empty()) {
            if (n - 1 == 0) {
                Point p(next_partial.rbegin(), next_partial.rend());
                out.points.push_back(std::move(p));
            } else {
                out.complete = false; // positive-dimensional fiber
            }
            continue;
        }
        solve_rec(std::move(next), n - 1, std::move(next_partial), out);
    }
}

} // namespace

RationalPoints rational_points(const Ideal& I) {
    RationalPoints out;
    if (I.krull_dimension() > 0) {
        out.complete = false;
        return out;
    }
    if (I.is_unit()) return out;
    solve_rec(I.gens(), I.vars(), {}, out);
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

} // namespace fol
