#include "forestpoly/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace forestpoly {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw std::overflow_error("integer overflow in negation");
    return -a;
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    if (exps_.empty()) throw std::invalid_argument("monomial: exponent vector must have length n+1 >= 1");
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("monomial: negative exponent");
    }
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

void Monomial::set_exponent(int var, int e) {
    if (e < 0) throw std::invalid_argument("monomial: negative exponent");
    exps_[static_cast<std::size_t>(var)] = e;
}

bool GrlexBefore::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return b.exponents() < a.exponents();
}

Polynomial Polynomial::constant(int n, std::int64_t c) {
    Polynomial p(n);
    p.add_term(Monomial(n), c);
    return p;
}

Polynomial Polynomial::variable(int n, int var) {
    if (var < 0 || var > n) throw std::invalid_argument("variable index out of range");
    Monomial m(n);
    m.set_exponent(var, 1);
    Polynomial p(n);
    p.add_term(m, 1);
    return p;
}

Polynomial Polynomial::from_terms(int n, const std::vector<std::pair<std::vector<int>, std::int64_t>>& terms) {
    Polynomial p(n);
    for (const auto& [exps, c] : terms) {
        if (static_cast<int>(exps.size()) != n + 1) {
            throw std::invalid_argument("term exponent vector length mismatch");
        }
        p.add_term(Monomial(exps), c);
    }
    return p;
}

std::int64_t Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t Polynomial::coefficient_sum() const {
    std::int64_t s = 0;
    for (const auto& [m, c] : terms_) s = checked_add(s, c);
    return s;
}

void Polynomial::add_term(const Monomial& m, std::int64_t c) {
    if (m.ambient() != n_) throw std::invalid_argument("monomial ambient mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void require_same_ambient(const Polynomial& p, const Polynomial& q) {
    if (p.ambient() != q.ambient()) {
        throw std::invalid_argument("polynomial ambient mismatch: " + std::to_string(p.ambient()) +
                                    " vs " + std::to_string(q.ambient()));
    }
}

} // namespace

Polynomial add(const Polynomial& p, const Polynomial& q) {
    require_same_ambient(p, q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms()) r.add_term(m, c);
    return r;
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, scale(q, -1)); }

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    require_same_ambient(p, q);
    const int n = p.ambient();
    Polynomial r(n);
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            std::vector<int> exps(static_cast<std::size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) exps[static_cast<std::size_t>(i)] = mp.exponent(i) + mq.exponent(i);
            r.add_term(Monomial(std::move(exps)), checked_mul(cp, cq));
        }
    }
    return r;
}

Polynomial scale(const Polynomial& p, std::int64_t c) {
    Polynomial r(p.ambient());
    if (c == 0) return r;
    for (const auto& [m, coeff] : p.terms()) r.add_term(m, checked_mul(coeff, c));
    return r;
}

Polynomial pow(const Polynomial& p, int e) {
    if (e < 0) throw std::invalid_argument("polynomial pow: negative exponent");
    Polynomial r = Polynomial::constant(p.ambient(), 1);
    for (int i = 0; i < e; ++i) r = mul(r, p);
    return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

std::int64_t evaluate(const Polynomial& p, const std::vector<std::int64_t>& values) {
    if (static_cast<int>(values.size()) != p.ambient() + 1) {
        throw std::invalid_argument("evaluate: expected " + std::to_string(p.ambient() + 1) + " values, got " +
                                    std::to_string(values.size()));
    }
    std::int64_t total = 0;
    for (const auto& [m, c] : p.terms()) {
        std::int64_t term = c;
        for (int i = 0; i <= p.ambient(); ++i) {
            for (int e = 0; e < m.exponent(i); ++e) term = checked_mul(term, values[static_cast<std::size_t>(i)]);
        }
        total = checked_add(total, term);
    }
    return total;
}

Polynomial substitute_root(const Polynomial& p, const std::vector<std::int64_t>& coeffs) {
    const int n = p.ambient();
    if (static_cast<int>(coeffs.size()) != n + 1) {
        throw std::invalid_argument("substitute_root: expected " + std::to_string(n + 1) + " coefficients, got " +
                                    std::to_string(coeffs.size()));
    }
    Polynomial form(n);
    for (int i = 0; i <= n; ++i) {
        Monomial m(n);
        m.set_exponent(i, 1);
        form.add_term(m, coeffs[static_cast<std::size_t>(i)]);
    }
    // Successive powers of the form, computed once.
    std::vector<Polynomial> powers{Polynomial::constant(n, 1)};
    Polynomial result(n);
    for (const auto& [m, c] : p.terms()) {
        const int d = m.exponent(0);
        while (static_cast<int>(powers.size()) <= d) powers.push_back(mul(powers.back(), form));
        Monomial rest = m;
        rest.set_exponent(0, 0);
        Polynomial part(n);
        part.add_term(rest, c);
        result = add(result, mul(part, powers[static_cast<std::size_t>(d)]));
    }
    return result;
}

Polynomial negate_vars(const Polynomial& p, const std::vector<int>& vars) {
    const int n = p.ambient();
    std::vector<char> mask(static_cast<std::size_t>(n) + 1, 0);
    for (int v : vars) {
        if (v < 0 || v > n) throw std::invalid_argument("negate_vars: variable index out of range");
        mask[static_cast<std::size_t>(v)] = 1;
    }
    Polynomial r(n);
    for (const auto& [m, c] : p.terms()) {
        int flips = 0;
        for (int i = 0; i <= n; ++i)
            if (mask[static_cast<std::size_t>(i)]) flips += m.exponent(i);
        r.add_term(m, (flips % 2 == 0) ? c : checked_neg(c));
    }
    return r;
}

bool is_homogeneous(const Polynomial& p, int d) {
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != d) return false;
    }
    return true;
}

Polynomial embed(const Polynomial& p, int new_n, int offset) {
    const int n = p.ambient();
    if (offset < 0 || n + offset > new_n) throw std::invalid_argument("embed: variables do not fit");
    Polynomial r(new_n);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> exps(static_cast<std::size_t>(new_n) + 1, 0);
        exps[0] = m.exponent(0);
        for (int i = 1; i <= n; ++i) exps[static_cast<std::size_t>(i + offset)] = m.exponent(i);
        r.add_term(Monomial(std::move(exps)), c);
    }
    return r;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const std::int64_t abs_c = c < 0 ? checked_neg(c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (abs_c != 1 || m.degree() == 0) factors.push_back(std::to_string(abs_c));
        for (int i = 0; i <= m.ambient(); ++i) {
            const int e = m.exponent(i);
            if (e == 0) continue;
            std::string name = i == 0 ? "x" : "x" + std::to_string(i);
            if (e > 1) name += "^" + std::to_string(e);
            factors.push_back(std::move(name));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << " * ";
            out << factors[i];
        }
    }
    return out.str();
}

} // namespace forestpoly
