#ifndef CLIFFORD_SIGNATURE_HPP
#define CLIFFORD_SIGNATURE_HPP

#include <cstddef>
#include <map>
#include <string>

#include "clifford/blade.hpp"
#include "clifford/scalar.hpp"

namespace clifford {

/// Diagonal quadratic form q_k = f(v_k): a default value plus a finite table
/// of overrides. The default signature is q == 1 (orthonormal basis).
template <Scalar S>
class Signature {
 public:
  Signature() : default_(scalar_traits<S>::one()) {}
  explicit Signature(S default_value, std::map<std::size_t, S> overrides = {}) : default_(std::move(default_value)) {
    for (auto& [k, q] : overrides) set(k, std::move(q));
  }

  const S& operator()(std::size_t k) const {
    auto it = overrides_.find(k);
    return it == overrides_.end() ? default_ : it->second;
  }

  void set(std::size_t k, S q) {
    require(k >= 1, errc::precondition, "generator indices start at 1");
    if (scalar_equal(q, default_))
      overrides_.erase(k);
    else
      overrides_[k] = std::move(q);
  }

  const S& default_value() const noexcept { return default_; }
  const std::map<std::size_t, S>& overrides() const noexcept { return overrides_; }

  bool is_unit_on(const Blade& support) const {
    for (std::size_t k : support.indices())
      if (!scalar_equal((*this)(k), scalar_traits<S>::one())) return false;
    return true;
  }

  bool is_nondegenerate_on(const Blade& support) const {
    for (std::size_t k : support.indices())
      if (is_zero((*this)(k))) return false;
    return true;
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    if (!scalar_equal(a.default_, b.default_) || a.overrides_.size() != b.overrides_.size()) return false;
    for (auto ia = a.overrides_.begin(), ib = b.overrides_.begin(); ia != a.overrides_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !scalar_equal(ia->second, ib->second)) return false;
    return true;
  }

 private:
  S default_;
  std::map<std::size_t, S> overrides_;
};

}  // namespace clifford

#endif  // CLIFFORD_SIGNATURE_HPP
