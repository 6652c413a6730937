#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ncnat/bigint.hpp"

namespace ncnat {

// Integer polynomial in q, dense ascending coefficients, no trailing zero.
// Degrees stay below the term depth for the shipped invariants, so a dense
// vector keeps equality and hashing trivial.
class Polynomial {
public:
    Polynomial() = default; // zero
    Polynomial(BigInt constant);
    Polynomial(long long constant) : Polynomial(BigInt(constant)) {}
    explicit Polynomial(std::vector<BigInt> coeffs);

    // Convenience: the monomial c * q^degree.
    static Polynomial monomial(BigInt coefficient, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as 0.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    BigInt coefficient(std::size_t deg) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    BigInt evaluate(const BigInt& x) const;

    // Text form: terms ascending by degree, "q" for degree one, "q^k" above,
    // coefficient 1 left implicit except at degree zero. Examples: "0", "2",
    // "3 - q", "5 - 2q + q^2", "-3 + q".
    std::string to_string() const;

    // Accepts the form above with terms in any order, optional whitespace,
    // optional '*' between coefficient and q, repeated terms accumulated.
    static Polynomial parse(std::string_view text);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    // Any strict total order works for grouping; degree first, then
    // coefficients from the top.
    std::strong_ordering operator<=>(const Polynomial& other) const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

} // namespace ncnat
