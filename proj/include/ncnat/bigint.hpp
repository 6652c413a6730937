#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ncnat {

// Arbitrary-precision signed integer. Only what polynomial coefficients
// need: add, subtract, multiply, compare, decimal round trip. Custom
// deformations can grow coefficients without bound, so fixed-width storage
// is not an option here.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    static BigInt from_string(std::string_view text); // ParseError on junk
    std::string to_string() const;

    bool is_zero() const noexcept { return limbs_.empty(); }
    int sign() const noexcept { return sign_; }

    // Throws std::overflow_error when the value does not fit.
    long long to_int64() const;

    BigInt operator-() const;
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    std::strong_ordering operator<=>(const BigInt& other) const;

private:
    // |value| = sum limbs_[i] * 2^(32 i); no trailing zero limb; sign_ is
    // 0 exactly for zero.
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    void trim();
};

} // namespace ncnat
