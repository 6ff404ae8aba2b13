#include "fol/poly.hpp"

#include <algorithm>

namespace fol {

static bool term_greater(const Poly::Term& a, const Poly::Term& b) {
    return grlex_greater(a.first, b.first);
}

void Poly::normalize() {
    std::sort(t_.begin(), t_.end(), term_greater);
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& tm : t_) {
        if (!out.empty() && out.back().first == tm.first) {
            out.back().second += tm.second;
            if (out.back().second == 0) out.pop_back();
        } else if (tm.second != 0) {
            out.push_back(std::move(tm));
        }
    }
    t_ = std::move(out);
}

Poly Poly::constant(int n, const Rat& c) {
    Poly p(n);
    if (c != 0) p.t_.emplace_back(Monomial(n), c);
    return p;
}

Poly Poly::variable(int n, int i) {
    if (i < 0 || i >= n) throw DimError("variable index out of range");
    Poly p(n);
    p.t_.emplace_back(Monomial(n).with_exp(i, 1), Rat(1));
    return p;
}

Poly Poly::term(int n, Monomial m, const Rat& c) {
    if (m.vars() != n) throw DimError("term: monomial dimension mismatch");
    Poly p(n);
    if (c != 0) p.t_.emplace_back(std::move(m), c);
    return p;
}

Poly Poly::from_terms(int n, std::vector<Term> terms) {
    Poly p(n);
    for (auto& t : terms) {
        if (t.first.vars() != n) throw DimError("from_terms: monomial dimension mismatch");
        t.second.canonicalize();
    }
    p.t_ = std::move(terms);
    p.normalize();
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    if (n_ != o.n_) throw DimError("poly add: ambient dimension mismatch");
    Poly r(n_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        if (t_[i].first == o.t_[j].first) {
            Rat c = t_[i].second + o.t_[j].second;
            if (c != 0) r.t_.emplace_back(t_[i].first, std::move(c));
            ++i, ++j;
        } else if (term_greater(t_[i], o.t_[j])) {
            r.t_.push_back(t_[i++]);
        } else {
            r.t_.push_back(o.t_[j++]);
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
    return r;
}

Poly Poly::operator-() const {
    Poly r(n_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.emplace_back(t.first, -t.second);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (n_ != o.n_) throw DimError("poly mul: ambient dimension mismatch");
    std::vector<Term> acc;
    acc.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_)
            acc.emplace_back(a.first.times(b.first), a.second * b.second);
    Poly r(n_);
    r.t_ = std::move(acc);
    r.normalize();
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return Poly(n_);
    Poly r(n_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.emplace_back(t.first, t.second * c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw MathError("pow: negative exponent");
    Poly r = Poly::one(n_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::derivative(int i) const {
    if (i < 0 || i >= n_) throw DimError("derivative: variable index out of range");
    Poly r(n_);
    for (const auto& t : t_) {
        uint32_t e = t.first.exp(i);
        if (e == 0) continue;
        r.t_.emplace_back(t.first.with_exp(i, e - 1), t.second * Rat(static_cast<long>(e)));
    }
    // descending grlex is preserved termwise except for merges; re-normalize
    Poly out(n_);
    out.t_ = std::move(r.t_);
    out.normalize();
    return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != n_)
        throw DimError("substitute: image count must equal ambient dimension");
    int m = images.empty() ? 0 : images[0].vars();
    for (const auto& im : images)
        if (im.vars() != m) throw DimError("substitute: images live in different rings");
    // lazily built power tables
    std::vector<std::vector<Poly>> pw(images.size());
    auto power = [&](int i, uint32_t e) -> const Poly& {
        auto& v = pw[static_cast<size_t>(i)];
        if (v.empty()) v.push_back(Poly::one(m));
        while (v.size() <= e) v.push_back(v.back() * images[static_cast<size_t>(i)]);
        return v[e];
    };
    Poly acc(m);
    for (const auto& t : t_) {
        Poly prod = Poly::constant(m, t.second);
        for (int i = 0; i < n_; ++i) {
            uint32_t e = t.first.exp(i);
            if (e > 0) prod = prod * power(i, e);
        }
        acc = acc + prod;
    }
    return acc;
}

Rat Poly::eval(const Point& p) const {
    if (static_cast<int>(p.size()) != n_) throw DimError("eval: point dimension mismatch");
    Rat acc(0);
    for (const auto& t : t_) {
        Rat v = t.second;
        for (int i = 0; i < n_; ++i) {
            for (uint32_t e = 0; e < t.first.exp(i); ++e) v *= p[static_cast<size_t>(i)];
        }
        acc += v;
    }
    return acc;
}

Poly Poly::translated(const Point& c) const {
    if (static_cast<int>(c.size()) != n_) throw DimError("translated: point dimension mismatch");
    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        images.push_back(Poly::variable(n_, i) + Poly::constant(n_, c[static_cast<size_t>(i)]));
    return substitute(images);
}

Poly Poly::graded_component(int d) const {
    Poly r(n_);
    for (const auto& t : t_)
        if (static_cast<int>(t.first.deg()) == d) r.t_.push_back(t);
    return r;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.first.deg()));
    return d;
}

int Poly::min_degree() const {
    if (t_.empty()) return -1;
    int d = static_cast<int>(t_[0].first.deg());
    for (const auto& t : t_) d = std::min(d, static_cast<int>(t.first.deg()));
    return d;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (t_.empty()) return std::nullopt;
    int d = static_cast<int>(t_[0].first.deg());
    for (const auto& t : t_)
        if (static_cast<int>(t.first.deg()) != d) return std::nullopt;
    return d;
}

const Poly::Term& Poly::leading() const {
    if (t_.empty()) throw MathError("leading term of the zero polynomial");
    return t_[0];
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / t_[0].second);
}

int Poly::degree_in(int i) const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.first.exp(i)));
    return d;
}

std::optional<Poly> Poly::divided_by(const Poly& d) const {
    if (d.is_zero()) throw MathError("division by the zero polynomial");
    Poly q(n_);
    Poly r = *this;
    const Monomial& lm = d.leading().first;
    const Rat& lc = d.leading().second;
    while (!r.is_zero()) {
        const auto& [m, c] = r.leading();
        if (!lm.divides(m)) return std::nullopt;
        Poly t = Poly::term(n_, m.div(lm), c / lc);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

Poly Poly::extended(int extra) const {
    Poly r(n_ + extra);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.emplace_back(t.first.extended(extra), t.second);
    r.normalize();
    return r;
}

Poly Poly::truncated(int m) const {
    Poly r(m);
    for (const auto& t : t_) r.t_.emplace_back(t.first.truncated(m), t.second);
    r.normalize();
    return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string ms = m.str(names);
        if (m.is_one()) {
            s += to_string(a);
        } else if (a == 1) {
            s += ms;
        } else {
            s += to_string(a) + "*" + ms;
        }
        first = false;
    }
    return s;
}

Rat rational_content(const Poly& p) {
    if (p.is_zero()) return Rat(0);
    Int num(0), den(1);
    for (const auto& t : p.terms()) {
        num = ::gcd(num, t.second.get_num());
        den = ::lcm(den, t.second.get_den());
    }
    Rat c(num, den);
    c.canonicalize();
    return c;
}

// ---- multivariate gcd via a recursive univariate view -------------------

static int top_variable(const Poly& a, const Poly& b) {
    int n = a.vars();
    for (int i = n - 1; i >= 0; --i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return i;
    return -1;
}

// coefficient of v^k, with the v-exponent removed
static Poly coeff_of(const Poly& p, int v, uint32_t k) {
    std::vector<Poly::Term> ts;
    for (const auto& t : p.terms())
        if (t.first.exp(v) == k) ts.emplace_back(t.first.with_exp(v, 0), t.second);
    return Poly::from_terms(p.vars(), std::move(ts));
}

static Poly shift_by(const Poly& p, int v, uint32_t k) {
    if (k == 0) return p;
    return p * Poly::term(p.vars(), Monomial(p.vars()).with_exp(v, k), Rat(1));
}

static Poly content_wrt(const Poly& p, int v) {
    Poly g = Poly::zero(p.vars());
    int d = p.degree_in(v);
    for (int k = 0; k <= std::max(d, 0); ++k) {
        Poly c = coeff_of(p, v, static_cast<uint32_t>(k));
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (!g.is_zero() && g.is_constant()) return Poly::one(p.vars());
    }
    return g;
}

static Poly prem(const Poly& f, const Poly& g, int v) {
    int dg = g.degree_in(v);
    Poly lcg = coeff_of(g, v, static_cast<uint32_t>(dg));
    Poly r = f;
    while (!r.is_zero()) {
        int dr = r.degree_in(v);
        if (dr < dg) break;
        Poly lcr = coeff_of(r, v, static_cast<uint32_t>(dr));
        r = lcg * r - shift_by(lcr * g, v, static_cast<uint32_t>(dr - dg));
    }
    return r;
}

static Poly primitive_wrt(const Poly& p, int v) {
    if (p.is_zero()) return p;
    Poly c = content_wrt(p, v);
    auto q = p.divided_by(c);
    return *q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw DimError("gcd: ambient dimension mismatch");
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    int v = top_variable(a, b);
    if (v < 0) return Poly::one(a.vars()); // both nonzero constants
    Poly ca = content_wrt(a, v), cb = content_wrt(b, v);
    Poly gc = poly_gcd(ca, cb);
    Poly f = *a.divided_by(ca);
    Poly g = *b.divided_by(cb);
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    while (!g.is_zero()) {
        Poly r = prem(f, g, v);
        f = std::move(g);
        g = r.is_zero() ? r : primitive_wrt(r, v);
    }
    return (gc * primitive_wrt(f, v)).monic();
}

} // namespace fol
