#ifndef CLIFFORD_MULTIVECTOR_HPP
#define CLIFFORD_MULTIVECTOR_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "clifford/blade.hpp"
#include "clifford/scalar.hpp"
#include "clifford/signature.hpp"

namespace clifford {

/// v_S * v_T = c * v_{S xor T}, with c = sign(S,T) * prod_{k in S and T} q_k.
template <Scalar S>
std::pair<S, Blade> blade_product(const Blade& a, const Blade& b, const Signature<S>& sig) {
  S c = a.reorder_is_odd(b) ? S(-scalar_traits<S>::one()) : scalar_traits<S>::one();
  for (std::size_t k : (a & b).indices()) {
    const S& q = sig(k);
    require(!is_zero(q), errc::degenerate_form, "signature vanishes at shared index " + std::to_string(k));
    c *= q;
  }
  return {std::move(c), a ^ b};
}

/// Finitely supported element of Cl(V, f). Values are immutable from the
/// outside apart from the accumulation helpers; zero coefficients are never
/// stored, so the empty term map is the canonical zero.
template <Scalar S>
class Multivector {
 public:
  using scalar_type = S;
  using term_map = std::map<Blade, S>;
  using signature_ptr = std::shared_ptr<const Signature<S>>;

  Multivector() : sig_(std::make_shared<const Signature<S>>()) {}
  explicit Multivector(Signature<S> sig) : sig_(std::make_shared<const Signature<S>>(std::move(sig))) {}
  explicit Multivector(signature_ptr sig) : sig_(std::move(sig)) {}

  static Multivector scalar(S value, signature_ptr sig) {
    Multivector m(std::move(sig));
    m.add(Blade{}, std::move(value));
    return m;
  }
  static Multivector blade(const Blade& b, S coeff, signature_ptr sig) {
    Multivector m(std::move(sig));
    m.add(b, std::move(coeff));
    return m;
  }
  static Multivector generator(std::size_t k, signature_ptr sig) {
    return blade(Blade::single(k), scalar_traits<S>::one(), std::move(sig));
  }

  const term_map& terms() const noexcept { return terms_; }
  const Signature<S>& signature() const noexcept { return *sig_; }
  const signature_ptr& signature_handle() const noexcept { return sig_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  S coeff(const Blade& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? scalar_traits<S>::zero() : it->second;
  }

  /// Union of the index sets of all blades.
  Blade support() const {
    Blade s;
    for (const auto& [b, c] : terms_) s = s | b;
    return s;
  }

  Multivector zero_like() const { return Multivector(sig_); }
  Multivector scalar_like(S value) const { return scalar(std::move(value), sig_); }

  /// Accumulate c * v_b, dropping the entry if it cancels.
  void add(const Blade& b, S c) {
    if (clifford::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, std::move(c));
    if (!inserted) {
      it->second += c;
      if (clifford::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool same_context(const Multivector& o) const { return sig_ == o.sig_ || *sig_ == *o.sig_; }

  void check_context(const Multivector& o) const {
    require(same_context(o), errc::domain_mismatch, "operands carry different signature contexts");
  }

  Multivector& operator+=(const Multivector& o) {
    check_context(o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_context(o);
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  Multivector& operator*=(const S& s) {
    if (clifford::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      if (clifford::is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  Multivector operator-() const {
    Multivector r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) { return a *= s; }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_context(b);
    Multivector r(a.sig_);
    for (const auto& [ba, ca] : a.terms_) {
      for (const auto& [bb, cb] : b.terms_) {
        auto [sign, blade] = blade_product(ba, bb, *a.sig_);
        r.add(blade, ca * cb * sign);
      }
    }
    return r;
  }

  /// Exact on exact domains; float domains compare within float_tolerance.
  friend bool operator==(const Multivector& a, const Multivector& b) {
    if (!a.same_context(b)) return false;
    if constexpr (scalar_traits<S>::exact) {
      return a.terms_ == b.terms_;
    } else {
      Multivector d = a - b;
      for (const auto& [bl, c] : d.terms_)
        if (!scalar_equal(c, scalar_traits<S>::zero())) return false;
      return true;
    }
  }

 private:
  signature_ptr sig_;
  term_map terms_;
};

template <Scalar S>
Multivector<S> mv_product(const Multivector<S>& a, const Multivector<S>& b) {
  return a * b;
}

/// sum_k c_k * m_k in canonical form. All operands must share one context.
template <Scalar S>
Multivector<S> linear_combine(std::span<const std::pair<S, Multivector<S>>> pairs) {
  require(!pairs.empty(), errc::precondition, "linear_combine needs at least one operand for its context");
  Multivector<S> r = pairs.front().second.zero_like();
  for (const auto& [c, m] : pairs) r += m * c;
  return r;
}

template <Scalar S>
Multivector<S> linear_combine(const std::vector<std::pair<S, Multivector<S>>>& pairs) {
  return linear_combine(std::span<const std::pair<S, Multivector<S>>>(pairs));
}

/// The anti-automorphism fixing V: a grade-r blade picks up (-1)^(r(r-1)/2).
template <Scalar S>
Multivector<S> reverse(const Multivector<S>& a) {
  Multivector<S> r = a.zero_like();
  for (const auto& [b, c] : a.terms()) {
    std::size_t n = b.size();
    r.add(b, (n * (n - 1) / 2) % 2 == 0 ? c : S(-c));
  }
  return r;
}

template <Scalar S>
Multivector<S> parity_project(const Multivector<S>& a, Parity p) {
  Multivector<S> r = a.zero_like();
  for (const auto& [b, c] : a.terms())
    if (b.parity() == p) r.add(b, c);
  return r;
}

template <Scalar S>
Multivector<S> even_part(const Multivector<S>& a) {
  return parity_project(a, Parity::even);
}

template <Scalar S>
Multivector<S> odd_part(const Multivector<S>& a) {
  return parity_project(a, Parity::odd);
}

/// True when every blade of a has parity p (the zero element is homogeneous).
template <Scalar S>
bool is_homogeneous(const Multivector<S>& a, Parity p) {
  for (const auto& [b, c] : a.terms())
    if (b.parity() != p) return false;
  return true;
}

/// Nonnegative integer power; a^0 is the unit.
template <Scalar S>
Multivector<S> power(const Multivector<S>& a, std::size_t n) {
  Multivector<S> result = a.scalar_like(scalar_traits<S>::one());
  Multivector<S> base = a;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

/// Product of a list of factors, left to right; the empty product is 1.
template <Scalar S>
Multivector<S> product_of(std::span<const Multivector<S>> factors, const typename Multivector<S>::signature_ptr& sig) {
  Multivector<S> r = Multivector<S>::scalar(scalar_traits<S>::one(), sig);
  for (const auto& f : factors) r = r * f;
  return r;
}

/// Re-expresses a multivector over a larger scalar domain (e.g. Q into Q(i)).
template <Scalar To, Scalar From>
Multivector<To> convert(const Multivector<From>& a) {
  const Signature<From>& s = a.signature();
  std::map<std::size_t, To> over;
  for (const auto& [k, q] : s.overrides()) over.emplace(k, To(q));
  Multivector<To> r(Signature<To>(To(s.default_value()), std::move(over)));
  for (const auto& [b, c] : a.terms()) r.add(b, To(c));
  return r;
}

}  // namespace clifford

#endif  // CLIFFORD_MULTIVECTOR_HPP
