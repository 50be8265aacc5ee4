#pragma once

#include <stdexcept>

#include "ecost/core/rational.hpp"

namespace ecost {

/// b^floor(d * max_grad / min_grad): how many nodes of a uniformly branching tree can
/// look as good as a unique depth-d solution when edge costs range over [min_grad, max_grad].
inline BigInt worst_case_bound(std::uint64_t b, const Rational& d, const Rational& min_grad, const Rational& max_grad) {
    if (min_grad <= Rational(0)) throw std::invalid_argument("worst_case_bound: min_grad must be positive");
    if (max_grad < min_grad) throw std::invalid_argument("worst_case_bound: max_grad below min_grad");
    if (d < Rational(0)) throw std::invalid_argument("worst_case_bound: negative depth");
    const Rational exponent = d * max_grad / min_grad;
    return big_pow(BigInt(b), static_cast<std::uint64_t>(floor(exponent)));
}

}  // namespace ecost
