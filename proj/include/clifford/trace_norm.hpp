#ifndef CLIFFORD_TRACE_NORM_HPP
#define CLIFFORD_TRACE_NORM_HPP

#include "clifford/multivector.hpp"

namespace clifford {

/// The normalized trace: the coefficient of the unit blade. It is linear,
/// tracial and unital, and agrees with (1/n) Tr under every matrix
/// representation built in matrix_rep.hpp.
template <Scalar S>
S trace(const Multivector<S>& a) {
  return a.coeff(Blade{});
}

/// ||a|| = tr(a * a^*), with * the reversal. Defined over real domains only;
/// for q == 1 it equals the sum of squared coefficients.
///
/// Note that this functional is not submultiplicative: ||(1 + v_1)^2|| = 8
/// while ||1 + v_1||^2 = 4.
template <Scalar S>
S norm(const Multivector<S>& a) {
  if constexpr (!scalar_traits<S>::is_real) {
    fail(errc::domain_unsupported, "norm is defined over real scalar domains only");
  } else {
    return trace(a * reverse(a));
  }
}

/// Closed form sum_S alpha_S^2 prod_{k in S} q_k, used to cross-check norm().
template <Scalar S>
S norm_closed_form(const Multivector<S>& a) {
  S total = scalar_traits<S>::zero();
  for (const auto& [b, c] : a.terms()) {
    S w = c * c;
    for (std::size_t k : b.indices()) w *= a.signature()(k);
    total += w;
  }
  return total;
}

}  // namespace clifford

#endif  // CLIFFORD_TRACE_NORM_HPP
