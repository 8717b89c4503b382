#include "shiftlr/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "shiftlr/errors.hpp"

namespace shiftlr {

long long Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Exponent& e, long long c) {
    if (static_cast<int>(e.size()) != nvars_) throw DimensionError("exponent length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw DimensionError("variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw DimensionError("variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw DimensionError("variable counts differ");
    Polynomial out(nvars_);
    Exponent e(nvars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = a[i] + b[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial Polynomial::scaled(long long c) const {
    Polynomial out(nvars_);
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
}

Polynomial Polynomial::divided(long long d) const {
    Polynomial out(nvars_);
    for (const auto& [e, v] : terms_) {
        if (v % d != 0) throw std::logic_error("polynomial coefficient not divisible");
        out.add_term(e, v / d);
    }
    return out;
}

bool Polynomial::is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i)
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            std::swap(f[i], f[i + 1]);
            if (coefficient(f) != c) return false;
        }
    return true;
}

Polynomial schur_polynomial(const Partition& p, int n) {
    if (n < 0) throw DimensionError("negative variable count");
    Polynomial out(n);
    if (p.length() > n) return out;
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= p.length(); ++r) rows.emplace_back(p.row(r), 0);
    const Partition conj = conjugate(p);
    std::vector<int> exponent(n, 0);
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == p.length()) {
            out.add_term(exponent, 1);
            return;
        }
        if (c == p.row(r + 1)) return rec(r + 1, 0);
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        // Leave room for the cells below in this column.
        const int hi = n - (conj.row(c + 1) - r - 1);
        for (int v = lo; v <= hi; ++v) {
            rows[r][c] = v;
            ++exponent[v - 1];
            rec(r, c + 1);
            --exponent[v - 1];
        }
    };
    rec(0, 0);
    return out;
}

const Polynomial& SchurExpander::schur(const Partition& p, int n) {
    auto key = std::make_pair(p, n);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, schur_polynomial(p, n)).first;
    return it->second;
}

std::map<Partition, long long> SchurExpander::expand(Polynomial p) {
    std::map<Partition, long long> out;
    const int n = p.nvars();
    for (int guard = 0; !p.is_zero(); ++guard) {
        if (guard > 1000000) throw std::logic_error("Schur expansion did not terminate");
        const auto& [lead, c] = *p.terms().rbegin();
        if (!std::is_sorted(lead.rbegin(), lead.rend())) throw std::logic_error("polynomial is not symmetric");
        const Partition tau(lead);
        const long long coef = c;
        out[tau] += coef;
        p -= schur(tau, n).scaled(coef);
    }
    return out;
}

}  // namespace shiftlr
