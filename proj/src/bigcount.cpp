#include "evenwalk/bigcount.hpp"

#include <cmath>
#include <stdexcept>

namespace evenwalk {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigCount::BigCount(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

BigCount BigCount::from_uint128(unsigned __int128 v) {
    BigCount out;
    while (v != 0) {
        out.limbs_.push_back(static_cast<std::uint32_t>(v));
        v >>= 32;
    }
    return out;
}

BigCount BigCount::pow2(unsigned exponent) {
    BigCount out;
    out.limbs_.assign(exponent / 32 + 1, 0);
    out.limbs_.back() = 1u << (exponent % 32);
    return out;
}

BigCount BigCount::from_decimal(std::string_view text) {
    BigCount out;
    bool any_digit = false;
    for (char c : text) {
        if (c == '\'' || c == '_' || c == ' ') continue;  // digit group separators
        if (c < '0' || c > '9') throw std::invalid_argument("BigCount: bad decimal digit");
        any_digit = true;
        // out = out*10 + digit
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : out.limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        while (carry) {
            out.limbs_.push_back(static_cast<std::uint32_t>(carry));
            carry >>= 32;
        }
    }
    if (!any_digit) throw std::invalid_argument("BigCount: no digits in decimal string");
    return out;
}

std::uint64_t BigCount::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigCount: value exceeds 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

void BigCount::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigCount& BigCount::operator+=(const BigCount& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = carry + limbs_[i];
        if (i < rhs.limbs_.size()) cur += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigCount operator*(const BigCount& lhs, const BigCount& rhs) {
    BigCount out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t a = lhs.limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = a * rhs.limbs_[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out.limbs_[i + rhs.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    out.trim();
    return out;
}

BigCount& BigCount::operator*=(const BigCount& rhs) {
    *this = *this * rhs;
    return *this;
}

std::uint32_t BigCount::divmod_u32(std::uint32_t divisor) {
    if (divisor == 0) throw std::invalid_argument("BigCount: division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

int BigCount::compare(const BigCount& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::string BigCount::to_decimal() const {
    if (is_zero()) return "0";
    // Peel 9 decimal digits at a time.
    std::vector<std::uint32_t> groups;
    BigCount tmp = *this;
    while (!tmp.is_zero()) groups.push_back(tmp.divmod_u32(1000000000u));
    std::string out = std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        out.append(9 - part.size(), '0');
        out += part;
    }
    return out;
}

std::size_t BigCount::bit_length() const {
    if (is_zero()) return 0;
    std::size_t bits = (limbs_.size() - 1) * 32;
    std::uint32_t top = limbs_.back();
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

double BigCount::to_double() const {
    if (is_zero()) return 0.0;
    double v = 0.0;
    // Top three limbs carry more precision than a double can hold.
    std::size_t first = limbs_.size() > 3 ? limbs_.size() - 3 : 0;
    for (std::size_t i = limbs_.size(); i-- > first;) v = v * static_cast<double>(kLimbBase) + limbs_[i];
    return std::ldexp(v, static_cast<int>(first * 32));
}

double BigCount::ratio(const BigCount& a, const BigCount& b) {
    if (b.is_zero()) throw std::invalid_argument("BigCount::ratio: zero denominator");
    if (a.is_zero()) return 0.0;
    // Scale both sides into double range before dividing.
    auto mantissa = [](const BigCount& x) {
        double v = 0.0;
        std::size_t first = x.limbs_.size() > 3 ? x.limbs_.size() - 3 : 0;
        for (std::size_t i = x.limbs_.size(); i-- > first;) v = v * static_cast<double>(kLimbBase) + x.limbs_[i];
        return std::pair<double, int>(v, static_cast<int>(first * 32));
    };
    auto [ma, ea] = mantissa(a);
    auto [mb, eb] = mantissa(b);
    return std::ldexp(ma / mb, ea - eb);
}

}  // namespace evenwalk
