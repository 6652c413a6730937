#include "ncnat/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ncnat/errors.hpp"

namespace ncnat {

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value > 0 ? 1 : -1;
    // Avoid UB on LLONG_MIN by working in unsigned space.
    unsigned long long mag =
        value > 0 ? static_cast<unsigned long long>(value)
                  : ~static_cast<unsigned long long>(value) + 1ull;
    while (mag) {
        limbs_.push_back(static_cast<std::uint32_t>(mag));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<std::uint32_t>(sum));
        carry = sum >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow;
        if (i < b.size()) diff -= b[i];
        if (diff < 0) {
            diff += (std::int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.sign_ = a.sign_;
        out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        return out;
    }
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt{};
    if (c > 0) {
        out.sign_ = a.sign_;
        out.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
    } else {
        out.sign_ = b.sign_;
        out.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
    BigInt out;
    out.sign_ = a.sign_ * b.sign_;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& other) const {
    if (sign_ != other.sign_) return sign_ <=> other.sign_;
    int c = cmp_mag(limbs_, other.limbs_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    // Repeated division by 10^9.
    std::vector<std::uint32_t> mag = limbs_;
    std::string digits;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos >= text.size()) throw ParseError("expected digits", pos);
    BigInt out;
    const BigInt chunk_base{1000000000};
    std::size_t i = pos;
    while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected a digit", i);
        // Consume up to 9 digits at a time.
        std::uint32_t chunk = 0;
        std::size_t start = i;
        std::uint32_t scale = 1;
        while (i < text.size() && i - start < 9 &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
            chunk = chunk * 10 + static_cast<std::uint32_t>(text[i] - '0');
            scale *= 10;
            ++i;
        }
        BigInt scale_big{static_cast<long long>(scale)};
        out = out * scale_big + BigInt{static_cast<long long>(chunk)};
    }
    if (sign < 0) out = -out;
    return out;
}

long long BigInt::to_int64() const {
    if (is_zero()) return 0;
    if (limbs_.size() > 2) throw std::overflow_error("BigInt does not fit in 64 bits");
    unsigned long long mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<unsigned long long>(limbs_[1]) << 32;
    if (sign_ > 0) {
        if (mag > 0x7fffffffffffffffull) throw std::overflow_error("BigInt does not fit in 64 bits");
        return static_cast<long long>(mag);
    }
    if (mag > 0x8000000000000000ull) throw std::overflow_error("BigInt does not fit in 64 bits");
    return -static_cast<long long>(mag - 1) - 1;
}

} // namespace ncnat
