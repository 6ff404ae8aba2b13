#include "fol/ideal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace fol {

// ---- engine working representation: terms sorted descending per order ----

namespace {

using Term = Poly::Term;

struct OrdPoly {
    std::vector<Term> t; // sorted descending w.r.t. the engine order

    bool zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().first; }
    const Rat& lc() const { return t.front().second; }
};

OrdPoly to_ord(const Poly& p, const MonomialOrder& ord) {
    OrdPoly q;
    q.t.assign(p.terms().begin(), p.terms().end());
    std::sort(q.t.begin(), q.t.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.first, b.first);
    });
    return q;
}

Poly from_ord(int n, const OrdPoly& p) {
    return Poly::from_terms(n, p.t);
}

// r -= c * m * g
void submul(OrdPoly& r, const Rat& c, const Monomial& m, const OrdPoly& g,
            const MonomialOrder& ord) {
    std::vector<Term> tmp;
    tmp.reserve(r.t.size() + g.t.size());
    size_t i = 0, j = 0;
    while (i < r.t.size() && j < g.t.size()) {
        Monomial gm = g.t[j].first.times(m);
        if (r.t[i].first == gm) {
            Rat v = r.t[i].second - c * g.t[j].second;
            if (v != 0) tmp.emplace_back(r.t[i].first, std::move(v));
            ++i, ++j;
        } else if (ord.greater(r.t[i].first, gm)) {
            tmp.push_back(r.t[i]);
            ++i;
        } else {
            tmp.emplace_back(std::move(gm), -(c * g.t[j].second));
            ++j;
        }
    }
    for (; i < r.t.size(); ++i) tmp.push_back(r.t[i]);
    for (; j < g.t.size(); ++j)
        tmp.emplace_back(g.t[j].first.times(m), -(c * g.t[j].second));
    r.t = std::move(tmp);
}

// full normal form against a list of divisors (first matching divisor wins)
OrdPoly normal_form_ord(OrdPoly f, const std::vector<OrdPoly>& G, const MonomialOrder& ord) {
    std::vector<Term> rem;
    while (!f.zero()) {
        bool divided = false;
        for (const auto& g : G) {
            if (g.zero()) continue;
            if (g.lm().divides(f.lm())) {
                Rat c = f.lc() / g.lc();
                submul(f, c, f.lm().div(g.lm()), g, ord);
                divided = true;
                break;
            }
        }
        if (!divided) {
            rem.push_back(f.t.front());
            f.t.erase(f.t.begin());
        }
    }
    OrdPoly r;
    r.t = std::move(rem);
    return r;
}

OrdPoly s_poly(const OrdPoly& f, const OrdPoly& g, const MonomialOrder& ord) {
    Monomial L = f.lm().lcm(g.lm());
    OrdPoly s;
    // s = (L/lm f)/lc f * f; then subtract (L/lm g)/lc g * g
    Monomial mf = L.div(f.lm());
    for (const auto& [m, c] : f.t) s.t.emplace_back(m.times(mf), c / f.lc());
    submul(s, Rat(1) / g.lc(), L.div(g.lm()), g, ord);
    return s;
}

struct Pair {
    size_t i, j;
    Monomial lcm;
    uint32_t deg;
};

std::vector<OrdPoly> buchberger(std::vector<OrdPoly> G, const MonomialOrder& ord) {
    // drop zeros
    G.erase(std::remove_if(G.begin(), G.end(), [](const OrdPoly& p) { return p.zero(); }),
            G.end());
    auto add_pairs = [&](std::vector<Pair>& P, size_t k) {
        for (size_t i = 0; i < k; ++i) {
            Monomial L = G[i].lm().lcm(G[k].lm());
            P.push_back({i, k, L, L.deg()});
        }
    };
    std::vector<Pair> pairs;
    for (size_t k = 1; k < G.size(); ++k) add_pairs(pairs, k);
    std::set<std::pair<size_t, size_t>> done;

    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree first, then indices
        size_t best = 0;
        for (size_t i = 1; i < pairs.size(); ++i) {
            const Pair &a = pairs[i], &b = pairs[best];
            if (a.deg < b.deg || (a.deg == b.deg && std::tie(a.i, a.j) < std::tie(b.i, b.j)))
                best = i;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));
        done.insert({pr.i, pr.j});

        // first (coprimality) criterion
        if (G[pr.i].lm().coprime(G[pr.j].lm())) continue;
        // chain criterion: lm_k | lcm(i,j) with both (i,k), (j,k) handled
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!G[k].lm().divides(pr.lcm)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        OrdPoly s = normal_form_ord(s_poly(G[pr.i], G[pr.j], ord), G, ord);
        if (s.zero()) continue;
        G.push_back(std::move(s));
        add_pairs(pairs, G.size() - 1);
    }

    // minimalize: drop elements whose lm is divisible by another lm
    std::vector<OrdPoly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (G[j].lm().divides(G[i].lm())) {
                if (G[j].lm() == G[i].lm() && j > i) continue; // keep the first
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // inter-reduce and normalize monic
    std::vector<OrdPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OrdPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OrdPoly r = normal_form_ord(minimal[i], others, ord);
        if (!r.zero()) {
            Rat inv = Rat(1) / r.lc();
            for (auto& [m, c] : r.t) c *= inv;
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const OrdPoly& a, const OrdPoly& b) {
        return ord.greater(b.lm(), a.lm()); // ascending leading monomial
    });
    return reduced;
}

} // namespace

// ---- Ideal ----------------------------------------------------------------

Ideal::Ideal(std::vector<Poly> gens, MonomialOrder ord) : gens_(std::move(gens)), ord_(ord) {
    if (gens_.empty()) throw DimError("ideal: needs at least one generator");
    n_ = gens_[0].vars();
    for (const auto& g : gens_)
        if (g.vars() != n_) throw DimError("ideal: generators in different rings");
    // canonical: drop zero generators (keep one zero if all are zero)
    std::vector<Poly> nz;
    for (const auto& g : gens_)
        if (!g.is_zero()) nz.push_back(g);
    if (!nz.empty()) gens_ = std::move(nz);
    else gens_ = {Poly::zero(n_)};
}

const std::vector<Poly>& Ideal::groebner() const {
    if (gb_) return *gb_;
    std::vector<OrdPoly> G;
    for (const auto& g : gens_)
        if (!g.is_zero()) G.push_back(to_ord(g, ord_));
    auto R = buchberger(std::move(G), ord_);
    auto out = std::make_shared<std::vector<Poly>>();
    out->reserve(R.size());
    for (const auto& r : R) out->push_back(from_ord(n_, r));
    gb_ = out;
    return *gb_;
}

Poly Ideal::normal_form(const Poly& p) const {
    if (p.vars() != n_) throw DimError("normal_form: ring mismatch");
    const auto& gb = groebner();
    std::vector<OrdPoly> G;
    G.reserve(gb.size());
    for (const auto& g : gb) G.push_back(to_ord(g, ord_));
    return from_ord(n_, normal_form_ord(to_ord(p, ord_), G, ord_));
}

bool Ideal::contains_ideal(const Ideal& J) const {
    for (const auto& g : J.gens())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::is_zero_ideal() const { return groebner().empty(); }

int Ideal::krull_dimension() const {
    const auto& gb = groebner();
    if (is_unit()) return -1;
    if (gb.empty()) return n_;
    std::vector<Monomial> lms;
    lms.reserve(gb.size());
    for (const auto& g : gb) lms.push_back(to_ord(g, ord_).lm());
    // max |S| over variable subsets S touching no leading monomial's support
    int best = 0;
    for (uint32_t s = 0; s < (1u << n_); ++s) {
        int size = 0;
        for (int i = 0; i < n_; ++i)
            if (s & (1u << i)) ++size;
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : lms) {
            bool inside = true;
            for (int i = 0; i < n_ && inside; ++i)
                if (m.exp(i) > 0 && !(s & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

std::optional<long> Ideal::vector_space_dimension() const {
    if (is_unit()) return 0;
    if (krull_dimension() > 0) return std::nullopt;
    const auto& gb = groebner();
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(to_ord(g, ord_).lm());
    auto standard = [&](const Monomial& m) {
        for (const auto& l : lms)
            if (l.divides(m)) return false;
        return true;
    };
    // standard monomials are closed under division: breadth-first walk
    std::unordered_set<Monomial, MonomialHash> seen;
    std::deque<Monomial> queue;
    Monomial one(n_);
    if (!standard(one)) return 0;
    seen.insert(one);
    queue.push_back(one);
    long count = 0;
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        ++count;
        for (int i = 0; i < n_; ++i) {
            Monomial next = m.with_exp(i, m.exp(i) + 1);
            if (!seen.count(next) && standard(next)) {
                seen.insert(next);
                queue.push_back(next);
            }
        }
    }
    return count;
}

bool Ideal::same_ideal(const Ideal& J) const {
    if (n_ != J.n_) return false;
    if (ord_ == J.ord_) return groebner() == J.groebner();
    return contains_ideal(J) && J.contains_ideal(*this);
}

std::string Ideal::str(const std::vector<std::string>& names) const {
    std::string s = "(";
    const auto& gb = groebner();
    if (gb.empty()) s += "0";
    for (size_t i = 0; i < gb.size(); ++i) {
        if (i > 0) s += ", ";
        s += gb[i].str(names);
    }
    return s + ")";
}

// ---- derived constructions -------------------------------------------------

static std::vector<Poly> eliminate_last(const std::vector<Poly>& gb, int n_main) {
    std::vector<Poly> out;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (int i = n_main; i < g.vars() && pure; ++i)
                if (t.first.exp(i) > 0) pure = false;
        if (pure && !g.is_zero()) out.push_back(g.truncated(n_main));
    }
    if (out.empty()) out.push_back(Poly::zero(n_main));
    return out;
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    if (I.vars() != J.vars()) throw DimError("intersection: ring mismatch");
    int n = I.vars();
    // t*I + (1-t)*J, eliminate the auxiliary variable t
    Poly t = Poly::variable(n + 1, n);
    Poly omt = Poly::one(n + 1) - t;
    std::vector<Poly> gens;
    for (const auto& f : I.gens()) gens.push_back(f.extended(1) * t);
    for (const auto& g : J.gens()) gens.push_back(g.extended(1) * omt);
    Ideal E(std::move(gens), MonomialOrder{MonomialOrder::ELIM_LAST, 1});
    return Ideal(eliminate_last(E.groebner(), n), I.order());
}

Ideal ideal_quotient(const Ideal& I, const Poly& f) {
    if (f.is_zero()) throw MathError("ideal quotient by the zero polynomial");
    if (f.is_constant()) return I;
    Ideal fI(std::vector<Poly>{f}, I.order());
    Ideal cap = ideal_intersection(I, fI);
    std::vector<Poly> gens;
    for (const auto& g : cap.gens()) {
        if (g.is_zero()) continue;
        auto q = g.divided_by(f);
        if (!q) throw MathError("ideal quotient: inexact division (internal)");
        gens.push_back(*q);
    }
    if (gens.empty()) gens.push_back(Poly::zero(I.vars()));
    return Ideal(std::move(gens), I.order());
}

Ideal saturation(const Ideal& I, const Poly& f) {
    if (f.is_zero()) throw MathError("saturation by the zero polynomial");
    if (f.is_constant()) return I;
    int n = I.vars();
    // Rabinowitsch: I + (1 - y f), eliminate y
    Poly y = Poly::variable(n + 1, n);
    std::vector<Poly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.extended(1));
    gens.push_back(Poly::one(n + 1) - y * f.extended(1));
    Ideal E(std::move(gens), MonomialOrder{MonomialOrder::ELIM_LAST, 1});
    return Ideal(eliminate_last(E.groebner(), n), I.order());
}

Ideal saturation(const Ideal& I, const Ideal& J) {
    bool all_zero = true;
    for (const auto& f : J.gens())
        if (!f.is_zero()) all_zero = false;
    if (all_zero) throw MathError("saturation by the zero ideal");
    std::optional<Ideal> acc;
    for (const auto& f : J.gens()) {
        if (f.is_zero()) continue;
        Ideal s = saturation(I, f);
        acc = acc ? ideal_intersection(*acc, s) : s;
    }
    return *acc;
}

LocalDim local_quotient_dimension(const Ideal& I, int bound) {
    auto truncated_count = [&](int B) -> std::pair<long, int> {
        std::vector<Poly> gens = I.gens();
        for (int i = 0; i < I.vars(); ++i)
            gens.push_back(Poly::variable(I.vars(), i).pow(B));
        Ideal T(std::move(gens), I.order());
        const auto& gb = T.groebner();
        std::vector<Monomial> lms;
        for (const auto& g : gb) lms.push_back(to_ord(g, T.order()).lm());
        auto standard = [&](const Monomial& m) {
            for (const auto& l : lms)
                if (l.divides(m)) return false;
            return true;
        };
        std::unordered_set<Monomial, MonomialHash> seen;
        std::deque<Monomial> queue;
        Monomial one(I.vars());
        long count = 0;
        int maxdeg = -1;
        if (standard(one)) {
            seen.insert(one);
            queue.push_back(one);
        }
        while (!queue.empty()) {
            Monomial m = queue.front();
            queue.pop_front();
            ++count;
            maxdeg = std::max(maxdeg, static_cast<int>(m.deg()));
            for (int i = 0; i < I.vars(); ++i) {
                Monomial next = m.with_exp(i, m.exp(i) + 1);
                if (!seen.count(next) && standard(next)) {
                    seen.insert(next);
                    queue.push_back(next);
                }
            }
        }
        return {count, maxdeg};
    };
    auto [dim, maxdeg] = truncated_count(bound);
    LocalDim out;
    out.dim = dim;
    out.max_standard_degree = maxdeg;
    if (maxdeg <= bound - 2) {
        auto [dim2, maxdeg2] = truncated_count(bound + 1);
        out.certified = (dim2 == dim);
    }
    return out;
}

} // namespace fol
