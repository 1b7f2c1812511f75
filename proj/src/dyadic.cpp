#include "reiscfg/dyadic.hpp"

namespace reiscfg {

void DyadicRational::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while ((num_ & 1) == 0) {
        num_ >>= 1;
        ++exp_;
    }
}

DyadicRational DyadicRational::operator+(const DyadicRational& o) const {
    if (num_ == 0) return o;
    if (o.num_ == 0) return *this;
    long long e = std::min(exp_, o.exp_);
    BigCount a = num_ << (exp_ - e);
    BigCount b = o.num_ << (o.exp_ - e);
    return DyadicRational(a + b, e);
}

DyadicRational DyadicRational::operator-(const DyadicRational& o) const {
    return *this + (-o);
}

bool DyadicRational::operator<(const DyadicRational& o) const {
    DyadicRational d = *this - o;
    return d.num_ < 0;
}

BigCount DyadicRational::to_integer(const char* context) const {
    if (!is_integer())
        throw IntegralityError(std::string(context) + " is not an integer: " + str());
    return num_ << exp_;
}

std::string DyadicRational::str() const {
    if (is_integer()) return BigCount(num_ << exp_).str();
    BigCount den = BigCount(1) << (-exp_);
    return num_.str() + "/" + den.str();
}

}  // namespace reiscfg
