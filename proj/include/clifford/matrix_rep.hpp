#ifndef CLIFFORD_MATRIX_REP_HPP
#define CLIFFORD_MATRIX_REP_HPP

#include <cstddef>
#include <vector>

#include "clifford/linalg.hpp"
#include "clifford/multivector.hpp"
#include "clifford/trace_norm.hpp"

namespace clifford {

/// Faithful representation of Cl(V_{2k}, q == 1) on a space of dimension 2^k.
template <Scalar S>
struct MatrixRep {
  std::size_t k = 0;
  std::size_t dim = 0;
  std::vector<Matrix<S>> gens;  // gens[a] is the image of v_{a+1}
};

inline constexpr std::size_t default_max_rep_k = 4;

namespace detail {

template <Scalar S>
Matrix<S> kron_chain(const std::vector<Matrix<S>>& parts) {
  Matrix<S> r = Matrix<S>::identity(1);
  for (const auto& p : parts) r = kron(r, p);
  return r;
}

}  // namespace detail

/// Ladder (Jordan-Wigner) construction: v_{2j-1} -> Z^(j-1) (x) X (x) I^(k-j),
/// v_{2j} -> Z^(j-1) (x) Y (x) I^(k-j). Over a real domain only k = 1 is
/// available, using Z in place of Y.
template <Scalar S>
MatrixRep<S> build_rep(std::size_t k, std::size_t max_k = default_max_rep_k) {
  using T = scalar_traits<S>;
  require(k >= 1, errc::precondition, "representation needs k >= 1");
  require(k <= max_k, errc::out_of_range, "representation size 2^" + std::to_string(k) + " exceeds the cap");
  const S one = T::one();
  const S zero = T::zero();
  const Matrix<S> id = Matrix<S>::identity(2);
  const Matrix<S> x = Matrix<S>::from_rows({{zero, one}, {one, zero}});
  const Matrix<S> z = Matrix<S>::from_rows({{one, zero}, {zero, S(-one)}});
  Matrix<S> y;
  if constexpr (T::has_imaginary_unit) {
    const S i = T::imaginary_unit();
    y = Matrix<S>::from_rows({{zero, S(-i)}, {i, zero}});
  } else {
    require(k == 1, errc::domain_unsupported, "real matrix representations are only built for k = 1");
    y = z;
  }

  MatrixRep<S> rep;
  rep.k = k;
  rep.dim = std::size_t{1} << k;
  const Matrix<S>* middles[] = {&x, &y};
  for (std::size_t j = 1; j <= k; ++j) {
    for (const Matrix<S>* middle : middles) {
      std::vector<Matrix<S>> parts;
      for (std::size_t p = 1; p < j; ++p) parts.push_back(z);
      parts.push_back(*middle);
      for (std::size_t p = j + 1; p <= k; ++p) parts.push_back(id);
      rep.gens.push_back(detail::kron_chain(parts));
    }
  }
  return rep;
}

template <Scalar S>
Matrix<S> represent_blade(const MatrixRep<S>& rep, const Blade& b) {
  require(b.max_index() <= 2 * rep.k, errc::out_of_range, "blade " + b.to_string() + " exceeds the representation");
  Matrix<S> m = Matrix<S>::identity(rep.dim);
  for (std::size_t k : b.indices()) m = m * rep.gens[k - 1];
  return m;
}

/// Evaluation homomorphism Cl(V_{2k}) -> M_{2^k}.
template <Scalar S>
Matrix<S> represent(const MatrixRep<S>& rep, const Multivector<S>& a) {
  Blade support = a.support();
  require(support.max_index() <= 2 * rep.k, errc::out_of_range,
          "support " + support.to_string() + " exceeds 2k = " + std::to_string(2 * rep.k));
  require(a.signature().is_unit_on(support), errc::unsupported_signature,
          "matrix representations require q == 1 on the support");
  Matrix<S> m(rep.dim, rep.dim);
  for (const auto& [b, c] : a.terms()) m += represent_blade(rep, b) * c;
  return m;
}

/// diag(a, ..., a) with `copies` blocks.
template <Scalar S>
Matrix<S> diagonal_embed(const Matrix<S>& small, std::size_t copies) {
  require(copies >= 1, errc::precondition, "diagonal embedding needs at least one copy");
  require(small.square(), errc::shape_mismatch, "diagonal embedding of a non-square matrix");
  std::size_t n = small.rows();
  Matrix<S> r(n * copies, n * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(c * n + i, c * n + j) = small(i, j);
  return r;
}

/// True iff the 4^k ordered blade images are linearly independent.
template <Scalar S>
bool is_faithful(const MatrixRep<S>& rep) {
  std::vector<Matrix<S>> images;
  std::size_t n = 2 * rep.k;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
    images.push_back(represent_blade(rep, Blade::from_words({mask})));
  return matrix_family_rank(images) == (std::size_t{1} << n);
}

/// Checks that the normalized matrix traces of a under the representations of
/// size 2^k_small and 2^k_large agree with each other and with trace(a).
/// Real-domain inputs are lifted to the complexified domain first.
template <Scalar S>
bool verify_trace_coherence(const Multivector<S>& a, std::size_t k_small, std::size_t k_large) {
  using C = complexified_t<S>;
  require(k_small >= 1 && k_small <= k_large, errc::precondition, "need 1 <= k_small <= k_large");
  require(a.support().max_index() <= 2 * k_small, errc::precondition, "support exceeds the small representation");
  Multivector<C> lifted = convert<C>(a);
  C small = represent(build_rep<C>(k_small), lifted).normalized_trace();
  C large = represent(build_rep<C>(k_large), lifted).normalized_trace();
  C expected = complexify(trace(a));
  return scalar_equal(small, large) && scalar_equal(small, expected);
}

}  // namespace clifford

#endif  // CLIFFORD_MATRIX_REP_HPP
