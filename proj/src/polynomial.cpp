#include "ncnat/polynomial.hpp"

#include <cctype>

#include "ncnat/errors.hpp"

namespace ncnat {

namespace {
constexpr std::size_t kMaxParsedDegree = 1u << 20;
}

Polynomial::Polynomial(BigInt constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(BigInt coefficient, std::size_t degree) {
    if (coefficient.is_zero()) return {};
    std::vector<BigInt> coeffs(degree + 1);
    coeffs[degree] = std::move(coefficient);
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt Polynomial::coefficient(std::size_t deg) const {
    return deg < coeffs_.size() ? coeffs_[deg] : BigInt{};
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const BigInt& c : coeffs_) out.push_back(-c);
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

BigInt Polynomial::evaluate(const BigInt& x) const {
    BigInt acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::strong_ordering Polynomial::operator<=>(const Polynomial& other) const {
    if (auto c = coeffs_.size() <=> other.coeffs_.size(); c != 0) return c;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (auto c = coeffs_[i] <=> other.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    const BigInt one{1};
    for (std::size_t deg = 0; deg < coeffs_.size(); ++deg) {
        const BigInt& c = coeffs_[deg];
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        BigInt mag = negative ? -c : c;
        if (deg == 0 || mag != one) out += mag.to_string();
        if (deg >= 1) {
            out += "q";
            if (deg >= 2) out += "^" + std::to_string(deg);
        }
    }
    return out;
}

Polynomial Polynomial::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    std::vector<BigInt> coeffs;
    auto add_term = [&](const BigInt& c, std::size_t deg) {
        if (deg >= kMaxParsedDegree) throw ParseError("exponent too large", pos);
        if (coeffs.size() <= deg) coeffs.resize(deg + 1);
        coeffs[deg] += c;
    };

    skip_ws();
    if (pos >= text.size()) throw ParseError("empty polynomial", pos);
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) {
            if (first) throw ParseError("expected a term", pos);
            break;
        }
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", pos);
        }
        // coefficient digits (optional when a q follows)
        std::size_t dig_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        bool has_coeff = pos > dig_start;
        BigInt coeff = has_coeff ? BigInt::from_string(text.substr(dig_start, pos - dig_start))
                                 : BigInt{1};
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            if (!has_coeff) throw ParseError("'*' without a coefficient", pos);
            ++pos;
            skip_ws();
        }
        std::size_t deg = 0;
        if (pos < text.size() && text[pos] == 'q') {
            ++pos;
            deg = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t exp_start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos == exp_start) throw ParseError("expected an exponent after '^'", pos);
                deg = 0;
                for (std::size_t i = exp_start; i < pos; ++i) {
                    deg = deg * 10 + static_cast<std::size_t>(text[i] - '0');
                    if (deg >= kMaxParsedDegree) throw ParseError("exponent too large", i);
                }
            }
        } else if (!has_coeff) {
            throw ParseError("expected a coefficient or 'q'", pos);
        }
        add_term(sign < 0 ? -coeff : coeff, deg);
        first = false;
    }
    return Polynomial(std::move(coeffs));
}

} // namespace ncnat
