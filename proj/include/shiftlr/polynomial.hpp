#pragma once

#include <map>
#include <vector>

#include "shiftlr/shapes.hpp"

namespace shiftlr {

// Sparse integer polynomial in a fixed number of variables.
class Polynomial {
public:
    using Exponent = std::vector<int>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<Exponent, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, long long c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(long long c) const;
    // Exact division of every coefficient; throws if some coefficient is not divisible.
    Polynomial divided(long long d) const;
    bool is_symmetric() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    int nvars_;
    std::map<Exponent, long long> terms_;  // no zero coefficients
};

Polynomial schur_polynomial(const Partition& p, int n);

// Expands a symmetric polynomial in Schur polynomials of the same variable count by
// repeatedly removing the lexicographically largest exponent.
class SchurExpander {
public:
    std::map<Partition, long long> expand(Polynomial p);
    const Polynomial& schur(const Partition& p, int n);

private:
    std::map<std::pair<Partition, int>, Polynomial> cache_;
};

}  // namespace shiftlr
