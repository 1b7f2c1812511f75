#pragma once

#include "reiscfg/numtheory.hpp"

namespace reiscfg {

// Exact value num * 2^exp with num odd or zero (normalized). Holds the
// half-integer intermediates (alpha, beta, alpha-tilde) whose Moebius
// combinations must cancel to integers.
class DyadicRational {
  public:
    DyadicRational() : num_(0), exp_(0) {}
    DyadicRational(const BigCount& n) : num_(n), exp_(0) { normalize(); }
    DyadicRational(long long n) : num_(n), exp_(0) { normalize(); }
    DyadicRational(const BigCount& n, long long e) : num_(n), exp_(e) { normalize(); }

    const BigCount& numerator() const { return num_; }
    long long exponent() const { return exp_; }

    DyadicRational operator+(const DyadicRational& o) const;
    DyadicRational operator-(const DyadicRational& o) const;
    DyadicRational operator-() const { return DyadicRational(-num_, exp_); }
    DyadicRational operator*(const BigCount& c) const { return DyadicRational(num_ * c, exp_); }
    DyadicRational operator*(const DyadicRational& o) const {
        return DyadicRational(num_ * o.num_, exp_ + o.exp_);
    }

    bool operator==(const DyadicRational& o) const {
        return num_ == o.num_ && (num_ == 0 || exp_ == o.exp_);
    }
    bool operator!=(const DyadicRational& o) const { return !(*this == o); }
    bool operator<(const DyadicRational& o) const;
    bool operator>=(const DyadicRational& o) const { return !(*this < o); }

    bool is_integer() const { return num_ == 0 || exp_ >= 0; }

    // Throws IntegralityError when the value is not an integer.
    BigCount to_integer(const char* context = "dyadic value") const;

    // "13", "51/2", "3/4", "-5/2", ...
    std::string str() const;

  private:
    void normalize();

    BigCount num_;
    long long exp_;
};

}  // namespace reiscfg
