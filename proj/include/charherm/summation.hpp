#ifndef CHARHERM_SUMMATION_HPP_
#define CHARHERM_SUMMATION_HPP_

#include <cmath>
#include <type_traits>

namespace charherm {

/// Running sum with Neumaier compensation for floating-point scalars.
///
/// For non-floating scalars (exact rationals) the correction term is
/// unused and the sum is the plain exact sum.
template <typename Scalar>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(const Scalar& init) : sum_(init) {}

  CompensatedSum& operator+=(const Scalar& term) {
    if constexpr (std::is_floating_point_v<Scalar>) {
      const Scalar t = sum_ + term;
      if (std::abs(sum_) >= std::abs(term)) {
        correction_ += (sum_ - t) + term;
      } else {
        correction_ += (term - t) + sum_;
      }
      sum_ = t;
    } else {
      sum_ += term;
    }
    return *this;
  }

  Scalar value() const {
    if constexpr (std::is_floating_point_v<Scalar>) {
      return sum_ + correction_;
    } else {
      return sum_;
    }
  }

 private:
  Scalar sum_{0};
  Scalar correction_{0};
};

}  // namespace charherm

#endif  // CHARHERM_SUMMATION_HPP_
