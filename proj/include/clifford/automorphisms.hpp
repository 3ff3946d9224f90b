#ifndef CLIFFORD_AUTOMORPHISMS_HPP
#define CLIFFORD_AUTOMORPHISMS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clifford/linalg.hpp"
#include "clifford/multivector.hpp"

namespace clifford {

/// Linear map on V that is the identity off a finite active index set.
/// Column c of the matrix holds the coordinates of phi(v_{active[c]}) in the
/// basis v_{active[0]}, v_{active[1]}, ...
template <Scalar S>
class OrthogonalMap {
 public:
  OrthogonalMap() = default;

  OrthogonalMap(std::vector<std::size_t> active, Matrix<S> matrix) : active_(std::move(active)), matrix_(std::move(matrix)) {
    require(matrix_.rows() == active_.size() && matrix_.cols() == active_.size(), errc::shape_mismatch,
            "orthogonal map matrix must be |active| x |active|");
    for (std::size_t c = 0; c < active_.size(); ++c) {
      require(active_[c] >= 1, errc::precondition, "generator indices start at 1");
      require(c == 0 || active_[c] > active_[c - 1], errc::precondition, "active indices must be strictly increasing");
    }
  }

  static OrthogonalMap identity() { return {}; }

  /// v_k -> sign_k v_{perm(k)} on the listed indices.
  static OrthogonalMap signed_permutation(const std::map<std::size_t, std::pair<std::size_t, int>>& images) {
    std::vector<std::size_t> active;
    for (const auto& [k, img] : images) active.push_back(k);
    Matrix<S> m(active.size(), active.size());
    for (std::size_t c = 0; c < active.size(); ++c) {
      const auto& [target, sign] = images.at(active[c]);
      auto pos = std::find(active.begin(), active.end(), target);
      require(pos != active.end(), errc::precondition, "permutation target outside the active set");
      m(static_cast<std::size_t>(pos - active.begin()), c) = sign < 0 ? S(-scalar_traits<S>::one()) : scalar_traits<S>::one();
    }
    return {active, m};
  }

  /// Rotation of the (i, j) plane: v_i -> c v_i + s v_j, v_j -> -s v_i + c v_j.
  static OrthogonalMap plane_rotation(std::size_t i, std::size_t j, const S& c, const S& s) {
    require(i < j, errc::precondition, "rotation plane needs i < j");
    return {{i, j}, Matrix<S>::from_rows({{c, S(-s)}, {s, c}})};
  }

  const std::vector<std::size_t>& active() const noexcept { return active_; }
  const Matrix<S>& matrix() const noexcept { return matrix_; }

  /// Coefficient of v_row in phi(v_col).
  S entry(std::size_t row, std::size_t col) const {
    auto r = position(row);
    auto c = position(col);
    if (r && c) return matrix_(*r, *c);
    if (!c) return row == col ? scalar_traits<S>::one() : scalar_traits<S>::zero();
    return scalar_traits<S>::zero();
  }

  Multivector<S> image(std::size_t k, const typename Multivector<S>::signature_ptr& sig) const {
    auto c = position(k);
    if (!c) return Multivector<S>::generator(k, sig);
    Multivector<S> out(sig);
    for (std::size_t r = 0; r < active_.size(); ++r) out.add(Blade::single(active_[r]), matrix_(r, *c));
    return out;
  }

  /// Gram preservation on the active set: sum_r M_rc M_rd q_r = delta_cd q_c.
  bool preserves(const Signature<S>& sig) const {
    for (std::size_t c = 0; c < active_.size(); ++c) {
      for (std::size_t d = c; d < active_.size(); ++d) {
        S g = scalar_traits<S>::zero();
        for (std::size_t r = 0; r < active_.size(); ++r) g += matrix_(r, c) * matrix_(r, d) * sig(active_[r]);
        S want = c == d ? sig(active_[c]) : scalar_traits<S>::zero();
        if (!scalar_equal(g, want)) return false;
      }
    }
    return true;
  }

  /// (phi o rho)(v) = phi(rho(v)).
  friend OrthogonalMap compose(const OrthogonalMap& phi, const OrthogonalMap& rho) {
    std::vector<std::size_t> all = phi.active_;
    all.insert(all.end(), rho.active_.begin(), rho.active_.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    Matrix<S> m(all.size(), all.size());
    for (std::size_t r = 0; r < all.size(); ++r)
      for (std::size_t c = 0; c < all.size(); ++c) {
        S sum = scalar_traits<S>::zero();
        for (std::size_t k : all) sum += phi.entry(all[r], k) * rho.entry(k, all[c]);
        m(r, c) = sum;
      }
    return {all, m};
  }

 private:
  std::optional<std::size_t> position(std::size_t k) const {
    auto it = std::lower_bound(active_.begin(), active_.end(), k);
    if (it == active_.end() || *it != k) return std::nullopt;
    return static_cast<std::size_t>(it - active_.begin());
  }

  std::vector<std::size_t> active_;
  Matrix<S> matrix_;
};

/// Extends phi multiplicatively: v_{i_1} ... v_{i_r} -> phi(v_{i_1}) ... phi(v_{i_r}).
template <Scalar S>
Multivector<S> bogolyubov_apply(const OrthogonalMap<S>& phi, const Multivector<S>& a) {
  require(phi.preserves(a.signature()), errc::not_orthogonal, "map does not preserve the quadratic form");
  const auto& sig = a.signature_handle();
  std::map<std::size_t, Multivector<S>> images;
  Multivector<S> out(sig);
  for (const auto& [b, c] : a.terms()) {
    Multivector<S> term = Multivector<S>::scalar(c, sig);
    for (std::size_t k : b.indices()) {
      auto it = images.find(k);
      if (it == images.end()) it = images.emplace(k, phi.image(k, sig)).first;
      term = term * it->second;
    }
    out += term;
  }
  return out;
}

/// u^{-1} a u, the orientation under which conjugation by diag(1, n) scales
/// the upper-right unit by n. The caller certifies u^{-1}.
template <Scalar S>
Multivector<S> conjugation_apply(const Multivector<S>& u, const Multivector<S>& u_inv, const Multivector<S>& a) {
  Multivector<S> one = u.scalar_like(scalar_traits<S>::one());
  require(u * u_inv == one && u_inv * u == one, errc::not_inverse, "supplied inverse does not invert u");
  return u_inv * a * u;
}

}  // namespace clifford

#endif  // CLIFFORD_AUTOMORPHISMS_HPP
