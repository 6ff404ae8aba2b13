#include "fol/monomial.hpp"

namespace fol {

Monomial Monomial::times(const Monomial& o) const {
    std::vector<uint32_t> e(e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::div(const Monomial& o) const {
    std::vector<uint32_t> e(e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] -= o.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<uint32_t> e(e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], o.e_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& o) const {
    std::vector<uint32_t> e(e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], o.e_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

Monomial Monomial::with_exp(int i, uint32_t v) const {
    std::vector<uint32_t> e(e_);
    e[static_cast<size_t>(i)] = v;
    return Monomial(std::move(e));
}

Monomial Monomial::extended(int extra) const {
    std::vector<uint32_t> e(e_);
    e.resize(e.size() + static_cast<size_t>(extra), 0u);
    return Monomial(std::move(e));
}

Monomial Monomial::truncated(int m) const {
    for (size_t i = static_cast<size_t>(m); i < e_.size(); ++i)
        if (e_[i] != 0) throw DimError("truncated: monomial involves dropped variable");
    std::vector<uint32_t> e(e_.begin(), e_.begin() + m);
    return Monomial(std::move(e));
}

std::string Monomial::str(const std::vector<std::string>& names) const {
    std::string s;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() > b.deg();
    return a.exps() > b.exps(); // lexicographic on exponent vectors
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() > b.deg();
    // smaller exponent in the last differing variable wins
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    for (size_t i = ea.size(); i-- > 0;) {
        if (ea[i] != eb[i]) return ea[i] < eb[i];
    }
    return false;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    return a.exps() > b.exps();
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case GREVLEX: return grevlex_greater(a, b);
        case GRLEX: return grlex_greater(a, b);
        case LEX: return lex_greater(a, b);
        case ELIM_LAST: {
            const int n = a.vars();
            const int split = n - elim;
            uint32_t da = 0, db = 0;
            for (int i = split; i < n; ++i) {
                da += a.exp(i);
                db += b.exp(i);
            }
            if (da != db) return da > db;
            for (size_t i = a.exps().size(); i-- > static_cast<size_t>(split);) {
                if (a.exps()[i] != b.exps()[i]) return a.exps()[i] < b.exps()[i];
            }
            // tie on the auxiliary block: grevlex on the leading block
            uint32_t ma = a.deg() - da, mb = b.deg() - db;
            if (ma != mb) return ma > mb;
            for (size_t i = static_cast<size_t>(split); i-- > 0;) {
                if (a.exps()[i] != b.exps()[i]) return a.exps()[i] < b.exps()[i];
            }
            return false;
        }
    }
    return false;
}

static void gen_basis(int n, int deg, int pos, std::vector<uint32_t>& cur,
                      std::vector<Monomial>& out) {
    if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = static_cast<uint32_t>(deg);
        out.emplace_back(cur);
        return;
    }
    for (int d = deg; d >= 0; --d) {
        cur[static_cast<size_t>(pos)] = static_cast<uint32_t>(d);
        gen_basis(n, deg - d, pos + 1, cur, out);
    }
}

std::vector<Monomial> monomial_basis(int n, int deg) {
    if (n < 1 || deg < 0) return {};
    std::vector<Monomial> out;
    std::vector<uint32_t> cur(static_cast<size_t>(n), 0u);
    gen_basis(n, deg, 0, cur, out); // emitted in descending lex = descending grlex
    return out;
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

} // namespace fol
