#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace evenwalk {

// Arbitrary-precision nonnegative integer for exact walk counts.
// Little-endian base-2^32 limbs, no trailing zero limbs (zero == empty).
// Only the operations the counting formulas need: add, multiply,
// divide by a machine word (with remainder), ordering, decimal I/O.
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t v);

    static BigCount from_decimal(std::string_view text);
    static BigCount from_uint128(unsigned __int128 v);
    static BigCount pow2(unsigned exponent);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // requires fits_u64()

    BigCount& operator+=(const BigCount& rhs);
    BigCount& operator*=(const BigCount& rhs);

    friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
    friend BigCount operator*(const BigCount& lhs, const BigCount& rhs);

    // In-place quotient, returns the remainder. divisor must be nonzero.
    std::uint32_t divmod_u32(std::uint32_t divisor);

    int compare(const BigCount& rhs) const;
    friend bool operator==(const BigCount& a, const BigCount& b) { return a.limbs_ == b.limbs_; }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        return a.compare(b) <=> 0;
    }

    std::string to_decimal() const;
    double to_double() const;
    std::size_t bit_length() const;

    // a/b as a double, stable even when both overflow double range.
    static double ratio(const BigCount& a, const BigCount& b);

private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

}  // namespace evenwalk
