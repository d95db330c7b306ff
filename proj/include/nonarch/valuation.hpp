#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "nonarch/errors.hpp"

namespace nonarch {

/**
 * Element of Z union {+infinity}, the value group of a discretely valued
 * field extended by ord(0).  Never a float: absolute values |x| = q^{-ord x}
 * are represented by this integer exponent throughout the library, and only
 * converted to a double at reporting boundaries.
 *
 * Addition follows ord(xy) = ord(x) + ord(y) (infinity absorbs); comparisons
 * place +infinity above every integer.  Adding two infinite valuations is
 * fine; subtracting infinity is not defined and throws.
 */
class Valuation {
public:
    Valuation() : v_(0), finite_(true) {}
    explicit Valuation(std::int64_t v) : v_(v), finite_(true) {}

    static Valuation infinity() {
        Valuation v;
        v.finite_ = false;
        v.v_ = std::numeric_limits<std::int64_t>::max();
        return v;
    }

    bool is_finite() const { return finite_; }

    std::int64_t value() const {
        if (!finite_) throw PreconditionFailed("valuation: value() of +infinity");
        return v_;
    }

    Valuation operator+(const Valuation& o) const {
        if (!finite_ || !o.finite_) return infinity();
        return Valuation(v_ + o.v_);
    }
    Valuation operator-(const Valuation& o) const {
        if (!o.finite_) throw PreconditionFailed("valuation: cannot subtract +infinity");
        if (!finite_) return infinity();
        return Valuation(v_ - o.v_);
    }
    Valuation operator+(std::int64_t k) const {
        if (!finite_) return infinity();
        return Valuation(v_ + k);
    }
    Valuation operator-(std::int64_t k) const {
        if (!finite_) return infinity();
        return Valuation(v_ - k);
    }
    Valuation operator*(std::int64_t k) const {
        if (!finite_) {
            if (k <= 0) throw PreconditionFailed("valuation: infinity * nonpositive");
            return infinity();
        }
        return Valuation(v_ * k);
    }

    bool operator==(const Valuation& o) const {
        return finite_ == o.finite_ && (!finite_ || v_ == o.v_);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const {
        if (!finite_) return false;
        if (!o.finite_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    bool operator==(std::int64_t k) const { return finite_ && v_ == k; }
    bool operator<=(std::int64_t k) const { return finite_ && v_ <= k; }
    bool operator<(std::int64_t k) const { return finite_ && v_ < k; }
    bool operator>=(std::int64_t k) const { return !finite_ || v_ >= k; }
    bool operator>(std::int64_t k) const { return !finite_ || v_ > k; }

    std::string str() const { return finite_ ? std::to_string(v_) : "+inf"; }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
        return os << v.str();
    }

private:
    std::int64_t v_;
    bool finite_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }
inline Valuation max(const Valuation& a, const Valuation& b) { return a < b ? b : a; }

}  // namespace nonarch
