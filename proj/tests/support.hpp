#ifndef CLIFFORD_TESTS_SUPPORT_HPP
#define CLIFFORD_TESTS_SUPPORT_HPP

// Test-only oracles and random generators. The oracles deliberately avoid
// the library's bitset arithmetic: they rewrite explicit words of generator
// indices one adjacent transposition at a time.

#include <cstddef>
#include <memory>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include "clifford/clifford.hpp"

namespace clifford {

// Readable gtest failure output.
template <Scalar S>
void PrintTo(const Multivector<S>& m, std::ostream* os) {
  *os << to_expression(m);
}

inline void PrintTo(const Blade& b, std::ostream* os) { *os << b.to_string(); }

template <Scalar S>
void PrintTo(const AdTerm<S>& t, std::ostream* os) {
  *os << "(" << t.blade.to_string() << ", " << to_text(t.coeff) << ")";
}

template <Scalar S>
void PrintTo(const Matrix<S>& m, std::ostream* os) {
  *os << m.to_string();
}

}  // namespace clifford

namespace clifford::testing {

/// Sorts the word v_{w0} v_{w1} ... by adjacent transpositions, contracting
/// v_k v_k = q_k, and returns (coefficient, resulting blade).
template <Scalar S>
std::pair<S, Blade> rewrite_word(std::vector<std::size_t> word, const Signature<S>& sig) {
  S coeff = scalar_traits<S>::one();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      if (word[p] > word[p + 1]) {
        std::swap(word[p], word[p + 1]);
        coeff = -coeff;
        changed = true;
      } else if (word[p] == word[p + 1]) {
        coeff *= sig(word[p]);
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(p), word.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        changed = true;
        break;
      }
    }
  }
  return {coeff, Blade(word)};
}

template <Scalar S>
std::pair<S, Blade> oracle_blade_product(const Blade& a, const Blade& b, const Signature<S>& sig) {
  std::vector<std::size_t> word = a.indices();
  for (std::size_t k : b.indices()) word.push_back(k);
  return rewrite_word(word, sig);
}

/// Product of multivectors computed term by term with the word oracle.
template <Scalar S>
Multivector<S> oracle_product(const Multivector<S>& a, const Multivector<S>& b) {
  Multivector<S> r = a.zero_like();
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      auto [c, bl] = oracle_blade_product(ba, bb, a.signature());
      r.add(bl, ca * cb * c);
    }
  return r;
}

/// Reversal by literally reversing each word and re-sorting it.
template <Scalar S>
Multivector<S> oracle_reverse(const Multivector<S>& a) {
  Multivector<S> r = a.zero_like();
  for (const auto& [b, c] : a.terms()) {
    std::vector<std::size_t> w = b.indices();
    std::vector<std::size_t> rw(w.rbegin(), w.rend());
    auto [s, bl] = rewrite_word(rw, a.signature());
    r.add(bl, c * s);
  }
  return r;
}

template <Scalar S>
typename Multivector<S>::signature_ptr unit_signature() {
  return std::make_shared<const Signature<S>>();
}

template <Scalar S>
Multivector<S> gen(std::size_t k, const typename Multivector<S>::signature_ptr& sig) {
  return Multivector<S>::generator(k, sig);
}

template <Scalar S>
Multivector<S> mv(std::initializer_list<std::pair<Blade, S>> terms, const typename Multivector<S>::signature_ptr& sig) {
  Multivector<S> m(sig);
  for (const auto& [b, c] : terms) m.add(b, c);
  return m;
}

inline Rational q(long long p, long long d = 1) { return Rational(p, d); }

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

  bool coin() { return index(0, 1) == 1; }

  /// Nonzero small rational p/q with |p| <= 9, 1 <= q <= 6.
  Rational rational() {
    long long p = 0;
    while (p == 0) p = std::uniform_int_distribution<long long>(-9, 9)(rng_);
    long long d = std::uniform_int_distribution<long long>(1, 6)(rng_);
    return Rational(p, d);
  }

  template <Scalar S>
  S scalar() {
    if constexpr (std::is_same_v<S, Gaussian>) {
      return coin() ? Gaussian(rational(), rational()) : Gaussian(rational());
    } else if constexpr (std::is_same_v<S, Rational>) {
      return rational();
    } else if constexpr (std::is_same_v<S, double>) {
      return rational().convert_to<double>();
    } else {
      return Complex(rational().convert_to<double>(), rational().convert_to<double>());
    }
  }

  Blade blade(std::size_t max_index) { return Blade::from_words({std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << max_index) - 1)(rng_)}); }

  Blade blade_with_parity(std::size_t max_index, Parity p, bool nonempty = true) {
    for (;;) {
      Blade b = blade(max_index);
      if (b.parity() == p && (!nonempty || !b.empty())) return b;
    }
  }

  template <Scalar S>
  Multivector<S> multivector(std::size_t max_index, std::size_t max_terms,
                             const typename Multivector<S>::signature_ptr& sig) {
    Multivector<S> m(sig);
    std::size_t n = index(1, max_terms);
    for (std::size_t t = 0; t < n; ++t) m.add(blade(max_index), scalar<S>());
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace clifford::testing

#endif  // CLIFFORD_TESTS_SUPPORT_HPP
