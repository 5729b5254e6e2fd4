#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace forestpoly {

// Coefficient arithmetic is exact 64-bit with mandatory overflow detection;
// any overflow throws std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

// Exponent vector of length n+1: position 0 is the root variable x,
// position i is x_i.
class Monomial {
public:
    explicit Monomial(int n) : exps_(static_cast<std::size_t>(n) + 1, 0) {}
    explicit Monomial(std::vector<int> exps);

    int ambient() const { return static_cast<int>(exps_.size()) - 1; }
    int degree() const;
    int exponent(int var) const { return exps_[static_cast<std::size_t>(var)]; }
    void set_exponent(int var, int e);
    const std::vector<int>& exponents() const { return exps_; }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

private:
    std::vector<int> exps_;
};

// Graded-lexicographic term order, leading term first: higher total degree
// wins, ties broken by lexicographically greater exponent vector (x before
// x1 before x2 ...). This is the canonical order for printing and storage.
struct GrlexBefore {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse exact-integer multivariate polynomial in x, x1..xn.
// Immutable value type; all operations return new polynomials.
class Polynomial {
public:
    using TermMap = std::map<Monomial, std::int64_t, GrlexBefore>;

    // Zero polynomial with ambient variable count n.
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial constant(int n, std::int64_t c);
    static Polynomial variable(int n, int var); // x if var == 0, else x_var
    static Polynomial from_terms(int n, const std::vector<std::pair<std::vector<int>, std::int64_t>>& terms);

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    std::int64_t coefficient(const Monomial& m) const;

    // Sum of coefficients (evaluation at the all-ones point, but exact on
    // the stored terms without exponentiation).
    std::int64_t coefficient_sum() const;

    void add_term(const Monomial& m, std::int64_t c); // builder; purges zeros

    bool operator==(const Polynomial& other) const {
        return n_ == other.n_ && terms_ == other.terms_;
    }

private:
    int n_;
    TermMap terms_;
};

// Ring operations. Ambient mismatch throws std::invalid_argument.
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, std::int64_t c);
Polynomial pow(const Polynomial& p, int e);

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);

// Exact value at a point; values has length n+1 (position 0 is x).
std::int64_t evaluate(const Polynomial& p, const std::vector<std::int64_t>& values);

// Substitutes the linear form L = c0*x + c1*x1 + ... + cn*xn for the root
// variable x: every x^d becomes L^d, expanded and collected; x1..xn are
// untouched. Successive powers of L are computed once and reused.
Polynomial substitute_root(const Polynomial& p, const std::vector<std::int64_t>& coeffs);

// Multiplies each term's coefficient by (-1)^(sum of exponents at the
// listed variable indices).
Polynomial negate_vars(const Polynomial& p, const std::vector<int>& vars);

// True iff every stored monomial has total degree d. The zero polynomial
// is homogeneous of every degree.
bool is_homogeneous(const Polynomial& p, int d);

// Re-embeds p into ambient new_n, shifting every non-root variable index
// by offset: x_i -> x_{i+offset}, x unchanged.
Polynomial embed(const Polynomial& p, int new_n, int offset);

// Canonical text form: terms in graded-lex order, "c * x^a0 * x1^a1 * ..."
// with exponent-0 factors omitted, exponent-1 superscripts omitted, and
// unit coefficients omitted unless the term is constant. Zero prints "0".
std::string to_string(const Polynomial& p);

} // namespace forestpoly
