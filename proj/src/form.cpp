#include "fol/form.hpp"

#include <bit>

namespace fol {

static int popcount(uint32_t m) { return std::popcount(m); }

DiffForm::DiffForm(int n, int p) : n_(n), p_(p) {
    if (p < 0 || p > n) p_ = p; // p > n is representable and identically zero
}

DiffForm::DiffForm(Poly f) : n_(f.vars()), p_(0) {
    if (!f.is_zero()) c_.emplace(0u, std::move(f));
}

DiffForm DiffForm::term(int n, const std::vector<int>& tuple, Poly c) {
    DiffForm w(n, static_cast<int>(tuple.size()));
    uint32_t mask = 0;
    for (size_t i = 0; i < tuple.size(); ++i) {
        int idx = tuple[i];
        if (idx < 0 || idx >= n) throw DimError("form term: index out of range");
        if (i > 0 && tuple[i - 1] >= idx)
            throw DimError("form term: tuple must be strictly increasing");
        mask |= (1u << idx);
    }
    if (!c.is_zero()) w.c_.emplace(mask, std::move(c));
    return w;
}

DiffForm DiffForm::d_coordinate(int n, int i) {
    return term(n, {i}, Poly::one(n));
}

Poly DiffForm::coeff(uint32_t mask) const {
    auto it = c_.find(mask);
    return it == c_.end() ? Poly::zero(n_) : it->second;
}

Poly DiffForm::scalar() const {
    if (p_ != 0) throw MathError("scalar(): not a 0-form");
    if (c_.empty()) return Poly::zero(n_);
    return c_.begin()->second;
}

std::optional<int> DiffForm::total_degree() const {
    if (c_.empty()) return std::nullopt;
    std::optional<int> d;
    for (const auto& [m, c] : c_) {
        auto h = c.homogeneous_degree();
        if (!h) return std::nullopt;
        if (d && *d != *h) return std::nullopt;
        d = *h;
    }
    return *d + p_;
}

int DiffForm::max_total_degree() const {
    int d = -1;
    for (const auto& [m, c] : c_) d = std::max(d, c.total_degree());
    return d < 0 ? -1 : d + p_;
}

void DiffForm::add_term(uint32_t mask, const Poly& c) {
    if (c.is_zero()) return;
    auto it = c_.find(mask);
    if (it == c_.end()) {
        c_.emplace(mask, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

DiffForm DiffForm::operator+(const DiffForm& o) const {
    if (n_ != o.n_ || p_ != o.p_) throw DimError("form add: degree or dimension mismatch");
    DiffForm r = *this;
    for (const auto& [m, c] : o.c_) r.add_term(m, c);
    return r;
}

DiffForm DiffForm::operator-() const {
    DiffForm r(n_, p_);
    for (const auto& [m, c] : c_) r.c_.emplace(m, -c);
    return r;
}

DiffForm DiffForm::operator-(const DiffForm& o) const { return *this + (-o); }

DiffForm DiffForm::scaled(const Rat& s) const {
    DiffForm r(n_, p_);
    if (s == 0) return r;
    for (const auto& [m, c] : c_) r.c_.emplace(m, c.scaled(s));
    return r;
}

DiffForm DiffForm::mul(const Poly& f) const {
    DiffForm r(n_, p_);
    if (f.is_zero()) return r;
    for (const auto& [m, c] : c_) {
        Poly q = c * f;
        if (!q.is_zero()) r.c_.emplace(m, std::move(q));
    }
    return r;
}

DiffForm DiffForm::graded_component(int t) const {
    DiffForm r(n_, p_);
    for (const auto& [m, c] : c_) {
        Poly g = c.graded_component(t - p_);
        if (!g.is_zero()) r.c_.emplace(m, std::move(g));
    }
    return r;
}

DiffForm DiffForm::translated(const Point& pt) const {
    DiffForm r(n_, p_);
    for (const auto& [m, c] : c_) {
        Poly g = c.translated(pt);
        if (!g.is_zero()) r.c_.emplace(m, std::move(g));
    }
    return r;
}

Rat DiffForm::eval_coeff(uint32_t mask, const Point& pt) const {
    auto it = c_.find(mask);
    return it == c_.end() ? Rat(0) : it->second.eval(pt);
}

static std::vector<int> mask_tuple(uint32_t mask) {
    std::vector<int> t;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) t.push_back(i);
    return t;
}

std::string DiffForm::str(const std::vector<std::string>& names) const {
    if (c_.empty()) return "0";
    if (p_ == 0) return c_.begin()->second.str(names);
    // lexicographic tuple order for rendering
    std::vector<std::pair<std::vector<int>, const Poly*>> items;
    for (const auto& [m, c] : c_) items.emplace_back(mask_tuple(m), &c);
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string s;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i > 0) s += " + ";
        s += "(" + items[i].second->str(names) + ")*";
        for (size_t j = 0; j < items[i].first.size(); ++j) {
            if (j > 0) s += "^";
            s += "d" + names[static_cast<size_t>(items[i].first[j])];
        }
    }
    return s;
}

// parity of the number of pairs (i in a, j in b) with i > j
static int merge_sign(uint32_t a, uint32_t b) {
    int inv = 0;
    for (int j = 0; j < 32; ++j) {
        if (!(b & (1u << j))) continue;
        uint32_t higher = a >> (j + 1);
        inv += popcount(higher);
    }
    return (inv & 1) ? -1 : 1;
}

VectorField::VectorField(std::vector<Poly> comps) : c_(std::move(comps)) {
    if (c_.empty()) throw DimError("vector field needs at least one component");
    n_ = static_cast<int>(c_.size());
    for (const auto& p : c_)
        if (p.vars() != n_) throw DimError("vector field: component ring mismatch");
}

VectorField VectorField::zero(int n) {
    std::vector<Poly> c(static_cast<size_t>(n), Poly::zero(n));
    return VectorField(std::move(c));
}

VectorField VectorField::coordinate(int n, int i) {
    auto v = zero(n);
    v.c_[static_cast<size_t>(i)] = Poly::one(n);
    return v;
}

VectorField VectorField::euler(int n) {
    std::vector<Poly> c;
    c.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c.push_back(Poly::variable(n, i));
    return VectorField(std::move(c));
}

bool VectorField::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

std::optional<int> VectorField::graded_degree() const {
    std::optional<int> d;
    for (const auto& p : c_) {
        if (p.is_zero()) continue;
        auto h = p.homogeneous_degree();
        if (!h) return std::nullopt;
        if (d && *d != *h) return std::nullopt;
        d = *h;
    }
    if (!d) return std::nullopt; // zero field
    return *d - 1;
}

VectorField VectorField::operator+(const VectorField& o) const {
    if (n_ != o.n_) throw DimError("field add: dimension mismatch");
    std::vector<Poly> c;
    c.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c.push_back(c_[i] + o.c_[i]);
    return VectorField(std::move(c));
}

VectorField VectorField::operator-(const VectorField& o) const {
    return *this + o.scaled(Rat(-1));
}

VectorField VectorField::scaled(const Rat& r) const {
    std::vector<Poly> c;
    c.reserve(c_.size());
    for (const auto& p : c_) c.push_back(p.scaled(r));
    return VectorField(std::move(c));
}

VectorField VectorField::mul(const Poly& f) const {
    std::vector<Poly> c;
    c.reserve(c_.size());
    for (const auto& p : c_) c.push_back(p * f);
    return VectorField(std::move(c));
}

Poly VectorField::apply(const Poly& f) const {
    if (f.vars() != n_) throw DimError("apply: dimension mismatch");
    Poly acc(n_);
    for (int i = 0; i < n_; ++i) acc = acc + c_[static_cast<size_t>(i)] * f.derivative(i);
    return acc;
}

std::string VectorField::str(const std::vector<std::string>& names) const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) s += ", ";
        s += c_[i].str(names);
    }
    return s + "]";
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    if (a.vars() != b.vars()) throw DimError("wedge: dimension mismatch");
    DiffForm r(a.vars(), a.form_degree() + b.form_degree());
    if (r.form_degree() > a.vars()) return DiffForm(a.vars(), r.form_degree());
    for (const auto& [ma, ca] : a.coeffs()) {
        for (const auto& [mb, cb] : b.coeffs()) {
            if (ma & mb) continue;
            int s = merge_sign(ma, mb);
            Poly c = ca * cb;
            if (s < 0) c = -c;
            r.add_term(ma | mb, c);
        }
    }
    return r;
}

DiffForm exterior_derivative(const DiffForm& a) {
    int n = a.vars();
    DiffForm r(n, a.form_degree() + 1);
    if (r.form_degree() > n) return r;
    for (const auto& [m, c] : a.coeffs()) {
        for (int i = 0; i < n; ++i) {
            if (m & (1u << i)) continue;
            Poly dc = c.derivative(i);
            if (dc.is_zero()) continue;
            // sign of moving dx_i into position: count indices in m below i
            int below = popcount(m & ((1u << i) - 1u));
            if (below & 1) dc = -dc;
            r.add_term(m | (1u << i), dc);
        }
    }
    return r;
}

DiffForm interior_product(const VectorField& v, const DiffForm& a) {
    if (v.vars() != a.vars()) throw DimError("interior product: dimension mismatch");
    int p = a.form_degree();
    if (p == 0) return DiffForm(a.vars(), 0); // zero by convention
    DiffForm r(a.vars(), p - 1);
    for (const auto& [m, c] : a.coeffs()) {
        int pos = 0;
        for (int i = 0; i < 32; ++i) {
            if (!(m & (1u << i))) continue;
            const Poly& vi = v.comp(i);
            if (!vi.is_zero()) {
                Poly t = vi * c;
                if (pos & 1) t = -t;
                r.add_term(m & ~(1u << i), t);
            }
            ++pos;
        }
    }
    return r;
}

DiffForm lie_derivative(const VectorField& v, const DiffForm& a) {
    // Cartan: L_v = i_v d + d i_v (single canonical definition)
    return interior_product(v, exterior_derivative(a)) +
           exterior_derivative(interior_product(v, a));
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
    if (v.vars() != w.vars()) throw DimError("bracket: dimension mismatch");
    std::vector<Poly> c;
    c.reserve(static_cast<size_t>(v.vars()));
    for (int i = 0; i < v.vars(); ++i) c.push_back(v.apply(w.comp(i)) - w.apply(v.comp(i)));
    return VectorField(std::move(c));
}

DiffForm pullback_form(const std::vector<Poly>& comps, const DiffForm& a) {
    if (static_cast<int>(comps.size()) != a.vars())
        throw DimError("pullback: component count must match the form's ambient dimension");
    int m = comps.empty() ? 0 : comps[0].vars();
    for (const auto& c : comps)
        if (c.vars() != m) throw DimError("pullback: components live in different rings");
    int p = a.form_degree();
    DiffForm r(m, p);
    if (p > m) return r;
    // d(comps[i]) computed once
    std::vector<DiffForm> dc;
    dc.reserve(comps.size());
    for (const auto& c : comps) dc.push_back(exterior_derivative(DiffForm(c)));
    for (const auto& [mask, c] : a.coeffs()) {
        DiffForm w(m, 0);
        w = DiffForm(c.substitute(comps));
        if (w.is_zero()) continue;
        for (int i = 0; i < 32; ++i) {
            if (!(mask & (1u << i))) continue;
            w = wedge(w, dc[static_cast<size_t>(i)]);
            if (w.is_zero()) break;
        }
        if (!w.is_zero()) r = r + w;
    }
    return r;
}

} // namespace fol
