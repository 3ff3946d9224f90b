#ifndef CLIFFORD_TENSOR_DECOMP_HPP
#define CLIFFORD_TENSOR_DECOMP_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "clifford/linalg.hpp"
#include "clifford/multivector.hpp"

namespace clifford {

/// One factor of a rewritten generator: an element of the subalgebra A_factor.
template <Scalar S>
struct ChainFactor {
  std::size_t factor;
  Multivector<S> element;
};

/// Finite truncation of an even cut sequence 0 = n_0 < n_1 < ... < n_t with
/// blocks (n_{i-1}, n_i], the elements c_i and the commuting subalgebras
///   A_1 = Cl(V_1),  A_i = Cl(V_i)_even + c_i Cl(V_i)_odd  (i >= 2).
///
/// v_1 ... v_n squares to (-1)^(n(n-1)/2), which is +1 for n = 0 mod 4. For
/// those cuts c_i is taken as i v_1 ... v_n, so the domain must contain i;
/// every stored c_i satisfies c_i^2 = -1.
template <Scalar S>
class FactorChain {
 public:
  using signature_ptr = typename Multivector<S>::signature_ptr;

  static FactorChain build(std::vector<std::size_t> cuts, signature_ptr sig) {
    require(!cuts.empty(), errc::invalid_chain, "a chain needs at least one cut");
    FactorChain ch;
    ch.sig_ = std::move(sig);
    std::size_t prev = 0;
    for (std::size_t n : cuts) {
      require(n % 2 == 0, errc::invalid_chain, "cut " + std::to_string(n) + " is odd");
      require(n > prev, errc::invalid_chain, "cuts must be strictly increasing and positive");
      prev = n;
    }
    require(ch.sig_->is_unit_on(Blade::range(1, cuts.back())), errc::unsupported_signature,
            "the factor chain is built for q == 1");
    ch.cuts_ = std::move(cuts);

    const Multivector<S> minus_one = Multivector<S>::scalar(S(-scalar_traits<S>::one()), ch.sig_);
    for (std::size_t n : ch.cuts_) {
      const bool needs_i = n % 4 == 0;
      S lambda = scalar_traits<S>::one();
      if (needs_i) {
        if constexpr (scalar_traits<S>::has_imaginary_unit)
          lambda = scalar_traits<S>::imaginary_unit();
        else
          fail(errc::domain_unsupported, "cut " + std::to_string(n) + " = 0 mod 4 needs a scalar domain containing i");
      }
      Multivector<S> c = Multivector<S>::blade(Blade::range(1, n), lambda, ch.sig_);
      require(c * c == minus_one, errc::invariant, "c_i does not square to -1");
      ch.lambda_.push_back(lambda);
      ch.adjusted_.push_back(needs_i);
      ch.c_.push_back(std::move(c));
    }
    return ch;
  }

  std::size_t size() const noexcept { return cuts_.size(); }
  const std::vector<std::size_t>& cuts() const noexcept { return cuts_; }
  const signature_ptr& signature() const noexcept { return sig_; }

  /// Whether c_i was scaled by the imaginary unit.
  bool adjusted(std::size_t i) const { return adjusted_.at(checked(i) - 1); }

  const Multivector<S>& c(std::size_t i) const { return c_.at(checked(i) - 1); }

  std::size_t block_lo(std::size_t i) const { return (checked(i) == 1 ? 0 : cuts_[i - 2]) + 1; }
  std::size_t block_hi(std::size_t i) const { return cuts_[checked(i) - 1]; }
  Blade block(std::size_t i) const { return Blade::range(block_lo(i), block_hi(i)); }
  std::size_t block_size(std::size_t i) const { return block_hi(i) - block_lo(i) + 1; }

  /// Factor whose block holds index k.
  std::size_t factor_of(std::size_t k) const {
    require(k >= 1 && k <= cuts_.back(), errc::out_of_range, "index " + std::to_string(k) + " is outside the chain");
    std::size_t i = 1;
    while (cuts_[i - 1] < k) ++i;
    return i;
  }

  /// phi_i : Cl(V_i) -> A_i, identity on the even part, left multiplication
  /// by c_i on the odd part (identity altogether for i = 1).
  Multivector<S> phi_apply(std::size_t i, const Multivector<S>& u) const {
    require(u.support().is_subset_of(block(i)), errc::out_of_range,
            "element is not supported in block " + std::to_string(i));
    if (i == 1) return u;
    return even_part(u) + c(i) * odd_part(u);
  }

  bool in_factor(std::size_t i, const Multivector<S>& a) const {
    if (i == 1) return a.support().is_subset_of(block(1));
    if (!even_part(a).support().is_subset_of(block(i))) return false;
    Multivector<S> w = -(c(i) * odd_part(a));
    return w.support().is_subset_of(block(i)) && is_homogeneous(w, Parity::odd);
  }

  /// Inverse of phi_i; c_i^{-1} = -c_i.
  Multivector<S> phi_inverse(std::size_t i, const Multivector<S>& a) const {
    require(in_factor(i, a), errc::membership, "element does not lie in A_" + std::to_string(i));
    if (i == 1) return a;
    return even_part(a) - c(i) * odd_part(a);
  }

  /// Images phi_i(v_p), p in block i: generators of A_i.
  std::vector<Multivector<S>> factor_generators(std::size_t i) const {
    std::vector<Multivector<S>> gens;
    for (std::size_t p = block_lo(i); p <= block_hi(i); ++p) gens.push_back(phi_apply(i, Multivector<S>::generator(p, sig_)));
    return gens;
  }

  /// phi_i applied to every basis blade of Cl(V_i).
  std::vector<Multivector<S>> factor_basis(std::size_t i) const {
    std::vector<Multivector<S>> out;
    const std::size_t lo = block_lo(i);
    const std::size_t m = block_size(i);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t b = 0; b < m; ++b)
        if ((mask >> b) & 1U) idx.push_back(lo + b);
      out.push_back(phi_apply(i, Multivector<S>::blade(Blade(idx), scalar_traits<S>::one(), sig_)));
    }
    return out;
  }

  /// [A_i, A_j] = 0, checked on generators.
  bool commutator_check(std::size_t i, std::size_t j) const {
    require(i != j, errc::precondition, "commutator check needs two distinct factors");
    checked(i);
    checked(j);
    for (const auto& a : factor_generators(i))
      for (const auto& b : factor_generators(j))
        if (!(a * b - b * a).is_zero()) return false;
    return true;
  }

  /// phi_i(uw) = phi_i(u) phi_i(w) on all pairs of basis blades of Cl(V_i).
  bool is_homomorphism(std::size_t i) const {
    const std::size_t lo = block_lo(i);
    const std::size_t m = block_size(i);
    std::vector<Multivector<S>> basis;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t b = 0; b < m; ++b)
        if ((mask >> b) & 1U) idx.push_back(lo + b);
      basis.push_back(Multivector<S>::blade(Blade(idx), scalar_traits<S>::one(), sig_));
    }
    for (const auto& u : basis)
      for (const auto& w : basis)
        if (!(phi_apply(i, u * w) == phi_apply(i, u) * phi_apply(i, w))) return false;
    return true;
  }

  /// Images of the basis blades are linearly independent.
  bool is_injective(std::size_t i) const {
    std::vector<typename Multivector<S>::term_map> vs;
    for (const auto& img : factor_basis(i)) vs.push_back(img.terms());
    return sparse_rank(vs) == (std::size_t{1} << block_size(i));
  }

  /// Ordered factors, each in a single A_j, whose product is v_k:
  ///   v_k = (-mu_1 B_1)(mu_2 B_2) ... (mu_{i-1} B_{i-1}) phi_i(mu_i^{-1} B_i^{-1} v_k),
  /// where B_j is the product of the block-j generators and mu_j B_j is the
  /// part of c_j = c_{j-1} mu_j B_j contributed by block j.
  std::vector<ChainFactor<S>> rewrite_generator(std::size_t k) const {
    const std::size_t i = factor_of(k);
    const Multivector<S> vk = Multivector<S>::generator(k, sig_);
    if (i == 1) return {{1, vk}};
    std::vector<ChainFactor<S>> out;
    for (std::size_t j = 1; j < i; ++j) {
      Multivector<S> piece = Multivector<S>::blade(block(j), mu(j), sig_);
      if (j == 1) piece = -piece;
      out.push_back({j, std::move(piece)});
    }
    Multivector<S> bi = Multivector<S>::blade(block(i), scalar_traits<S>::one(), sig_);
    Multivector<S> u = reverse(bi) * vk * (scalar_traits<S>::one() / mu(i));
    out.push_back({i, phi_apply(i, u)});
    return out;
  }

  /// Rank of all products a_1 ... a_t with a_j running over factor_basis(j);
  /// equals 2^{n_t} exactly when the factors generate Cl(V_{n_t}) freely.
  std::size_t product_span_rank() const {
    std::vector<Multivector<S>> products{Multivector<S>::scalar(scalar_traits<S>::one(), sig_)};
    for (std::size_t j = 1; j <= size(); ++j) {
      std::vector<Multivector<S>> next;
      const auto basis = factor_basis(j);
      next.reserve(products.size() * basis.size());
      for (const auto& p : products)
        for (const auto& b : basis) next.push_back(p * b);
      products = std::move(next);
    }
    std::vector<typename Multivector<S>::term_map> vs;
    vs.reserve(products.size());
    for (const auto& p : products) vs.push_back(p.terms());
    return sparse_rank(vs);
  }

 private:
  std::size_t checked(std::size_t i) const {
    require(i >= 1 && i <= cuts_.size(), errc::precondition, "factor index " + std::to_string(i) + " out of range");
    return i;
  }

  // mu_j = lambda_j / lambda_{j-1}, lambda_0 = 1.
  S mu(std::size_t j) const {
    S prev = j == 1 ? scalar_traits<S>::one() : lambda_[j - 2];
    return lambda_[j - 1] / prev;
  }

  std::vector<std::size_t> cuts_;
  signature_ptr sig_;
  std::vector<S> lambda_;
  std::vector<bool> adjusted_;
  std::vector<Multivector<S>> c_;
};

template <Scalar S>
FactorChain<S> chain_build(std::vector<std::size_t> cuts, typename Multivector<S>::signature_ptr sig) {
  return FactorChain<S>::build(std::move(cuts), std::move(sig));
}

}  // namespace clifford

#endif  // CLIFFORD_TENSOR_DECOMP_HPP
