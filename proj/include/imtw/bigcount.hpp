#ifndef IMTW_BIGCOUNT_HPP
#define IMTW_BIGCOUNT_HPP

#include <gmpxx.h>

#include <string>

#include "imtw/errors.hpp"

namespace imtw {

// Exact nonnegative integer with a saturated top element. The Ramsey-type
// bounds grow through iterated cubing and leave any explicit representation
// within a handful of steps even for tiny parameters; values whose bit
// length crosses kMaxBits collapse to "saturated", which compares greater
// than every finite value and absorbs arithmetic. Saturated values compare
// equal to each other; reports print them with a distinguished marker.
class BigCount {
public:
    static constexpr size_t kMaxBits = 1 << 16;

    BigCount() : value_(0), saturated_(false) {}
    BigCount(unsigned long v) : value_(v), saturated_(false) {}
    explicit BigCount(const mpz_class& v) : value_(v), saturated_(false) {
        if (sgn(value_) < 0)
            throw invalid_argument_error("BigCount: negative value");
        clamp();
    }

    static BigCount saturated() {
        BigCount b;
        b.saturated_ = true;
        return b;
    }

    bool is_saturated() const { return saturated_; }
    bool is_zero() const { return !saturated_ && sgn(value_) == 0; }

    const mpz_class& value() const {
        if (saturated_)
            throw invalid_argument_error("BigCount: saturated value queried");
        return value_;
    }

    // Fits in unsigned long and is not saturated.
    bool fits_ulong() const {
        return !saturated_ && value_.fits_ulong_p();
    }
    unsigned long to_ulong() const { return value().get_ui(); }

    std::string to_decimal() const {
        if (saturated_) return ">=2^" + std::to_string(kMaxBits);
        return value_.get_str();
    }

    friend BigCount operator+(const BigCount& a, const BigCount& b) {
        if (a.saturated_ || b.saturated_) return saturated();
        return BigCount(mpz_class(a.value_ + b.value_));
    }
    friend BigCount operator*(const BigCount& a, const BigCount& b) {
        if (a.is_zero() || b.is_zero()) return BigCount(0ul);
        if (a.saturated_ || b.saturated_) return saturated();
        return BigCount(mpz_class(a.value_ * b.value_));
    }
    // Saturated minus a finite amount stays saturated; throws on underflow.
    friend BigCount operator-(const BigCount& a, const BigCount& b) {
        if (b.saturated_)
            throw invalid_argument_error("BigCount: subtracting saturated");
        if (a.saturated_) return saturated();
        if (a.value_ < b.value_)
            throw invalid_argument_error("BigCount: negative difference");
        return BigCount(mpz_class(a.value_ - b.value_));
    }

    friend bool operator==(const BigCount& a, const BigCount& b) {
        if (a.saturated_ || b.saturated_)
            return a.saturated_ && b.saturated_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const BigCount& a, const BigCount& b) {
        return !(a == b);
    }
    friend bool operator<(const BigCount& a, const BigCount& b) {
        if (a.saturated_) return false;
        if (b.saturated_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const BigCount& a, const BigCount& b) {
        return a < b || a == b;
    }
    friend bool operator>(const BigCount& a, const BigCount& b) {
        return b < a;
    }
    friend bool operator>=(const BigCount& a, const BigCount& b) {
        return b <= a;
    }

private:
    void clamp() {
        if (mpz_sizeinbase(value_.get_mpz_t(), 2) > kMaxBits) {
            saturated_ = true;
            value_ = 0;
        }
    }
    mpz_class value_;
    bool saturated_;
};

} // namespace imtw

#endif
