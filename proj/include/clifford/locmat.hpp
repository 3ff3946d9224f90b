#ifndef CLIFFORD_LOCMAT_HPP
#define CLIFFORD_LOCMAT_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clifford/linalg.hpp"
#include "clifford/scalar.hpp"

namespace clifford {

/// Matrix size m_i of each factor of the infinite tensor product; every size
/// is even and at least 2.
class FactorShape {
 public:
  explicit FactorShape(std::size_t default_size = 2, std::map<std::size_t, std::size_t> overrides = {})
      : default_(default_size), overrides_(std::move(overrides)) {
    validate(default_);
    for (const auto& [i, m] : overrides_) {
      require(i >= 1, errc::precondition, "factor indices start at 1");
      validate(m);
    }
  }

  std::size_t operator()(std::size_t factor) const {
    auto it = overrides_.find(factor);
    return it == overrides_.end() ? default_ : it->second;
  }

  friend bool operator==(const FactorShape&, const FactorShape&) = default;

 private:
  static void validate(std::size_t m) {
    require(m >= 2 && m % 2 == 0, errc::shape_mismatch, "factor sizes must be even and at least 2");
  }

  std::size_t default_;
  std::map<std::size_t, std::size_t> overrides_;
};

/// coeff * (tensor product over the listed factors), identity elsewhere.
template <Scalar S>
struct TensorTerm {
  S coeff;
  std::map<std::size_t, Matrix<S>> factors;
};

/// Finite sum of elementary tensors in the tensor product of M_{m_i}.
/// Identity factors are not stored and terms with a zero coefficient or a
/// zero factor are dropped; terms with identical factor maps are merged.
template <Scalar S>
class TensorElement {
 public:
  explicit TensorElement(FactorShape shape = FactorShape{}) : shape_(std::move(shape)) {}

  static TensorElement identity(FactorShape shape = FactorShape{}) {
    TensorElement t(std::move(shape));
    t.add_term({scalar_traits<S>::one(), {}});
    return t;
  }

  static TensorElement local(FactorShape shape, std::size_t factor, Matrix<S> m, S coeff = scalar_traits<S>::one()) {
    TensorElement t(std::move(shape));
    t.add_term({std::move(coeff), {{factor, std::move(m)}}});
    return t;
  }

  const FactorShape& shape() const noexcept { return shape_; }
  const std::vector<TensorTerm<S>>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::set<std::size_t> support() const {
    std::set<std::size_t> s;
    for (const auto& t : terms_)
      for (const auto& [i, m] : t.factors) s.insert(i);
    return s;
  }

  void add_term(TensorTerm<S> t) {
    if (is_zero_scalar(t.coeff)) return;
    for (auto it = t.factors.begin(); it != t.factors.end();) {
      require(it->first >= 1, errc::precondition, "factor indices start at 1");
      const std::size_t m = shape_(it->first);
      require(it->second.rows() == m && it->second.cols() == m, errc::shape_mismatch,
              "factor " + std::to_string(it->first) + " expects a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
      if (it->second.is_zero()) return;
      if (it->second == Matrix<S>::identity(m))
        it = t.factors.erase(it);
      else
        ++it;
    }
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (same_factors(it->factors, t.factors)) {
        it->coeff += t.coeff;
        if (is_zero_scalar(it->coeff)) terms_.erase(it);
        return;
      }
    }
    terms_.push_back(std::move(t));
  }

  TensorElement& operator+=(const TensorElement& o) {
    require(shape_ == o.shape_, errc::shape_mismatch, "tensor elements over different shapes");
    for (const auto& t : o.terms_) add_term(t);
    return *this;
  }
  TensorElement& operator*=(const S& s) {
    TensorElement r(shape_);
    for (auto t : terms_) {
      t.coeff *= s;
      r.add_term(std::move(t));
    }
    return *this = std::move(r);
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a += b * S(-scalar_traits<S>::one());
  }
  friend TensorElement operator*(TensorElement a, const S& s) { return a *= s; }
  friend TensorElement operator*(const S& s, TensorElement a) { return a *= s; }

  friend TensorElement operator*(const TensorElement& a, const TensorElement& b) { return tp_product(a, b); }

  /// Kronecker product (ascending factor order) over the given factors; the
  /// support of the element must be contained in them.
  Matrix<S> flatten(const std::set<std::size_t>& onto) const {
    std::size_t dim = 1;
    for (std::size_t i : onto) dim *= shape_(i);
    Matrix<S> total(dim, dim);
    for (const auto& t : terms_) {
      Matrix<S> m = Matrix<S>::identity(1);
      for (std::size_t i : onto) {
        auto it = t.factors.find(i);
        m = kron(m, it == t.factors.end() ? Matrix<S>::identity(shape_(i)) : it->second);
      }
      for (const auto& [i, f] : t.factors)
        require(onto.count(i) == 1, errc::precondition, "flatten target misses factor " + std::to_string(i));
      total += m * t.coeff;
    }
    return total;
  }

  /// Equality after flattening both sides onto the union of supports.
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    if (!(a.shape_ == b.shape_)) return false;
    std::set<std::size_t> onto = a.support();
    for (std::size_t i : b.support()) onto.insert(i);
    return a.flatten(onto) == b.flatten(onto);
  }

 private:
  static bool is_zero_scalar(const S& s) { return scalar_equal(s, scalar_traits<S>::zero()); }

  static bool same_factors(const std::map<std::size_t, Matrix<S>>& x, const std::map<std::size_t, Matrix<S>>& y) {
    if (x.size() != y.size()) return false;
    for (auto ix = x.begin(), iy = y.begin(); ix != x.end(); ++ix, ++iy)
      if (ix->first != iy->first || !(ix->second == iy->second)) return false;
    return true;
  }

  FactorShape shape_;
  std::vector<TensorTerm<S>> terms_;
};

template <Scalar S>
TensorElement<S> tp_product(const TensorElement<S>& a, const TensorElement<S>& b) {
  require(a.shape() == b.shape(), errc::shape_mismatch, "tensor elements over different shapes");
  TensorElement<S> r(a.shape());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      TensorTerm<S> t{ta.coeff * tb.coeff, ta.factors};
      for (const auto& [i, m] : tb.factors) {
        auto it = t.factors.find(i);
        if (it == t.factors.end())
          t.factors.emplace(i, m);
        else
          it->second = it->second * m;
      }
      r.add_term(std::move(t));
    }
  return r;
}

/// sum of coeff * prod over supported factors of (1/m_i) Tr; identity
/// factors contribute 1, so padding a term does not change the value.
template <Scalar S>
S tp_trace(const TensorElement<S>& a) {
  S total = scalar_traits<S>::zero();
  for (const auto& t : a.terms()) {
    S v = t.coeff;
    for (const auto& [i, m] : t.factors) v *= m.normalized_trace();
    total += v;
  }
  return total;
}

template <Scalar S>
TensorElement<S> adjoint(const TensorElement<S>& a) {
  TensorElement<S> r(a.shape());
  for (const auto& t : a.terms()) {
    TensorTerm<S> u{scalar_traits<S>::conj(t.coeff), {}};
    for (const auto& [i, m] : t.factors) u.factors.emplace(i, m.adjoint());
    r.add_term(std::move(u));
  }
  return r;
}

/// ||a|| = tr(a a^*), over real domains.
template <Scalar S>
S tp_norm(const TensorElement<S>& a) {
  if constexpr (!scalar_traits<S>::is_real) {
    fail(errc::domain_unsupported, "the tensor norm is defined over real scalar domains only");
  } else {
    return tp_trace(tp_product(a, adjoint(a)));
  }
}

/// Product of per-factor conjugations a -> x_i^{-1} a x_i, applied only on
/// the factors an element is supported on. This is the limit of the finite
/// products phi_1 ... phi_n, whose action on any fixed element stabilizes.
template <Scalar S>
class LocalAutomorphism {
 public:
  using rule_fn = std::function<Matrix<S>(std::size_t factor, std::size_t size)>;

  explicit LocalAutomorphism(rule_fn rule) : rule_(std::move(rule)) {
    require(static_cast<bool>(rule_), errc::precondition, "automorphism needs a factor rule");
  }

  static LocalAutomorphism identity() {
    return LocalAutomorphism([](std::size_t, std::size_t m) { return Matrix<S>::identity(m); });
  }

  /// Finitely many explicit x_i, identity on all other factors.
  static LocalAutomorphism explicit_factors(std::map<std::size_t, Matrix<S>> xs) {
    return LocalAutomorphism([xs = std::move(xs)](std::size_t i, std::size_t m) {
      auto it = xs.find(i);
      return it == xs.end() ? Matrix<S>::identity(m) : it->second;
    });
  }

  /// x_i = diag(I_k, i I_k) with k = m_i / 2 and i the literal factor index,
  /// so that the nilpotent [[0, I_k], [0, 0]] at factor i is scaled by i.
  static LocalAutomorphism index_scaling() {
    return LocalAutomorphism([](std::size_t i, std::size_t m) {
      std::vector<S> d(m, scalar_traits<S>::one());
      for (std::size_t r = m / 2; r < m; ++r) d[r] = from_rational<S>(Rational(static_cast<long long>(i)));
      return Matrix<S>::diagonal(d);
    });
  }

  Matrix<S> x(std::size_t factor, std::size_t size) const {
    Matrix<S> m = rule_(factor, size);
    require(m.rows() == size && m.cols() == size, errc::invalid_automorphism,
            "rule produced a wrongly sized matrix for factor " + std::to_string(factor));
    return m;
  }

  /// (x_i, x_i^{-1}); a singular x_i raises errc::invalid_automorphism.
  std::pair<Matrix<S>, Matrix<S>> x_and_inverse(std::size_t factor, std::size_t size) const {
    Matrix<S> m = x(factor, size);
    try {
      Matrix<S> inv = clifford::inverse(m);
      return {std::move(m), std::move(inv)};
    } catch (const error&) {
      fail(errc::invalid_automorphism, "x_" + std::to_string(factor) + " is singular");
    }
  }

  /// The automorphism conjugating by x_i^{-1} on every factor.
  LocalAutomorphism inverse() const {
    return LocalAutomorphism([rule = rule_](std::size_t i, std::size_t m) { return clifford::inverse(rule(i, m)); });
  }

 private:
  rule_fn rule_;
};

template <Scalar S>
TensorElement<S> limit_automorphism_apply(const LocalAutomorphism<S>& phi, const TensorElement<S>& a) {
  TensorElement<S> r(a.shape());
  std::map<std::size_t, std::pair<Matrix<S>, Matrix<S>>> cache;
  for (const auto& t : a.terms()) {
    TensorTerm<S> u{t.coeff, {}};
    for (const auto& [i, m] : t.factors) {
      auto it = cache.find(i);
      if (it == cache.end()) it = cache.emplace(i, phi.x_and_inverse(i, a.shape()(i))).first;
      const auto& [x, x_inv] = it->second;
      u.factors.emplace(i, x_inv * m * x);
    }
    r.add_term(std::move(u));
  }
  return r;
}

/// [[0, I_k], [0, 0]] of size m = 2k.
template <Scalar S>
Matrix<S> upper_nilpotent(std::size_t m) {
  Matrix<S> a(m, m);
  for (std::size_t r = 0; r < m / 2; ++r) a(r, m / 2 + r) = scalar_traits<S>::one();
  return a;
}

template <Scalar S>
struct WitnessRow {
  std::size_t n;
  S norm_before;  // ||(1/n) a_n||
  S norm_after;   // ||phi((1/n) a_n)||
};

/// b_n = (1/n) a_n at factor n and the norms of b_n and phi(b_n) under the
/// index-scaling automorphism: ||b_n|| = 1/(2n^2) -> 0 while phi(b_n) = a_n
/// keeps norm 1/2.
template <Scalar S>
std::vector<WitnessRow<S>> witness_sequence(std::size_t count, const FactorShape& shape = FactorShape{}) {
  require(count >= 1, errc::precondition, "witness needs N >= 1");
  const auto phi = LocalAutomorphism<S>::index_scaling();
  std::vector<WitnessRow<S>> rows;
  for (std::size_t n = 1; n <= count; ++n) {
    S inv_n = from_rational<S>(Rational(1, static_cast<long long>(n)));
    TensorElement<S> b = TensorElement<S>::local(shape, n, upper_nilpotent<S>(shape(n)), inv_n);
    rows.push_back({n, tp_norm(b), tp_norm(limit_automorphism_apply(phi, b))});
  }
  return rows;
}

}  // namespace clifford

#endif  // CLIFFORD_LOCMAT_HPP
