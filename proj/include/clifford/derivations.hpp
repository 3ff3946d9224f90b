#ifndef CLIFFORD_DERIVATIONS_HPP
#define CLIFFORD_DERIVATIONS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "clifford/multivector.hpp"

namespace clifford {

/// ad(g)(x) = gx - xg.
template <Scalar S>
Multivector<S> ad_apply(const Multivector<S>& g, const Multivector<S>& x) {
  return g * x - x * g;
}

namespace detail {

// ad(v_S)(x) computed blade by blade: v_S v_T - v_T v_S is 2 v_S v_T when the
// blades anticommute and 0 when they commute.
template <Scalar S>
void accumulate_ad_blade(Multivector<S>& out, const Blade& g, const S& alpha, const Multivector<S>& x) {
  const std::size_t ng = g.size();
  for (const auto& [b, c] : x.terms()) {
    std::size_t swaps = ng * b.size() - (g & b).size();
    if (swaps % 2 == 0) continue;
    auto [sign, blade] = blade_product(g, b, x.signature());
    out.add(blade, S(alpha * c * sign * S(2)));
  }
}

}  // namespace detail

template <Scalar S>
struct AdTerm {
  Blade blade;
  S coeff;

  friend bool operator==(const AdTerm& a, const AdTerm& b) {
    return a.blade == b.blade && scalar_equal(a.coeff, b.coeff);
  }
};

/// D = sum_S alpha_S ad(v_S) with a declared parity. Either a finite list
/// (stored canonically: sorted, unique blades, nonzero coefficients) or a
/// lazy stream with a locality certificate M -> cutoff(M):
///   even: every term at position >= cutoff(M) has min index > M;
///   odd:  every term at position >= cutoff(M) contains {1, ..., M}.
/// Either way such terms commute with everything supported in {1..M}.
///
/// Streams memoize the consumed prefix and are single-consumer: evaluating
/// one stream family from several threads at once needs external locking.
template <Scalar S>
class AdFamily {
 public:
  using term = AdTerm<S>;
  using generator_fn = std::function<std::optional<term>(std::size_t)>;
  using cutoff_fn = std::function<std::size_t(std::size_t)>;

  static constexpr std::size_t default_lookahead = 16;

  AdFamily() = default;

  static AdFamily finite(Parity parity, const std::vector<term>& terms) {
    AdFamily f;
    f.parity_ = parity;
    std::map<Blade, S> merged;
    for (const auto& t : terms) {
      check_term(parity, t);
      auto [it, inserted] = merged.try_emplace(t.blade, t.coeff);
      if (!inserted) it->second += t.coeff;
    }
    for (auto& [b, c] : merged)
      if (!is_zero(c)) f.state_->cache.push_back({b, c});
    f.state_->exhausted = true;
    return f;
  }

  static AdFamily stream(Parity parity, generator_fn gen, cutoff_fn cutoff,
                         std::size_t lookahead = default_lookahead) {
    require(static_cast<bool>(gen) && static_cast<bool>(cutoff), errc::precondition,
            "stream families need a generator and a locality bound");
    AdFamily f;
    f.parity_ = parity;
    f.stream_ = true;
    f.lookahead_ = lookahead;
    f.state_->gen = std::move(gen);
    f.cutoff_ = std::move(cutoff);
    return f;
  }

  Parity parity() const noexcept { return parity_; }
  bool is_stream() const noexcept { return stream_; }
  std::size_t lookahead() const noexcept { return lookahead_; }

  /// All terms of a finite family. For a stream, the prefix consumed so far.
  const std::vector<term>& terms() const { return state_->cache; }

  std::size_t cutoff(std::size_t m) const { return stream_ ? cutoff_(m) : state_->cache.size(); }

  /// Term at position n, or nullopt past the end of a finite stream.
  const term* at(std::size_t n) const {
    while (state_->cache.size() <= n && !state_->exhausted) {
      std::optional<term> t = state_->gen(state_->cache.size());
      if (!t) {
        state_->exhausted = true;
        break;
      }
      check_term(parity_, *t);
      state_->cache.push_back(std::move(*t));
    }
    return n < state_->cache.size() ? &state_->cache[n] : nullptr;
  }

 private:
  struct state {
    generator_fn gen;
    std::vector<term> cache;
    bool exhausted = false;
  };

  static void check_term(Parity parity, const term& t) {
    require(t.blade.parity() == parity, errc::parity,
            "blade " + t.blade.to_string() + " does not match the family parity");
    require(!t.blade.empty(), errc::invariant, "the unit blade contributes ad(1) = 0 and is not a family term");
    require(!is_zero(t.coeff), errc::invariant, "family coefficients must be nonzero");
  }

  Parity parity_ = Parity::even;
  bool stream_ = false;
  std::size_t lookahead_ = default_lookahead;
  cutoff_fn cutoff_;
  std::shared_ptr<state> state_ = std::make_shared<state>();
};

/// Evaluates D(x). For streams only the certified prefix is summed; the next
/// lookahead() terms are probed and a nonzero action raises
/// errc::contract_violation.
template <Scalar S>
Multivector<S> family_apply(const AdFamily<S>& d, const Multivector<S>& x) {
  Multivector<S> out = x.zero_like();
  if (!d.is_stream()) {
    for (const auto& t : d.terms()) detail::accumulate_ad_blade(out, t.blade, t.coeff, x);
    return out;
  }
  const std::size_t m = x.support().max_index();
  const std::size_t n = d.cutoff(m);
  for (std::size_t j = 0; j < n; ++j) {
    const auto* t = d.at(j);
    if (t == nullptr) break;
    detail::accumulate_ad_blade(out, t->blade, t->coeff, x);
  }
  for (std::size_t j = n; j < n + d.lookahead(); ++j) {
    const auto* t = d.at(j);
    if (t == nullptr) break;
    Multivector<S> probe = x.zero_like();
    detail::accumulate_ad_blade(probe, t->blade, t->coeff, x);
    require(probe.is_zero(), errc::contract_violation,
            "term " + std::to_string(j) + " lies beyond cutoff(" + std::to_string(m) + ") = " + std::to_string(n) +
                " but acts nonzero");
  }
  return out;
}

/// sum_S ad(a_S)(x) for arbitrary generators a_S (the general ad-sums whose
/// blade expansions are AdFamily terms).
template <Scalar S>
Multivector<S> ad_sum_apply(std::span<const Multivector<S>> generators, const Multivector<S>& x) {
  Multivector<S> out = x.zero_like();
  for (const auto& g : generators) out += ad_apply(g, x);
  return out;
}

/// k -> D(v_k); missing entries mean D(v_k) = 0.
template <Scalar S>
using ActionTable = std::map<std::size_t, Multivector<S>>;

template <Scalar S>
ActionTable<S> action_table(const AdFamily<S>& d, std::size_t bound, const typename Multivector<S>::signature_ptr& sig) {
  ActionTable<S> table;
  for (std::size_t k = 1; k <= bound; ++k) {
    Multivector<S> img = family_apply(d, Multivector<S>::generator(k, sig));
    if (!img.is_zero()) table.emplace(k, std::move(img));
  }
  return table;
}

namespace detail {

// For both parities (1/(2 q_k)) D(v_k) v_k = sum of alpha_S v_S over the
// blades that anticommute with v_k: those containing k in the even case,
// those missing k in the odd case.
template <Scalar S>
std::vector<AdTerm<S>> extract(const ActionTable<S>& table, std::size_t scan,
                               const typename Multivector<S>::signature_ptr& sig, Parity parity) {
  for (const auto& [k, img] : table) {
    require(k >= 1 && k <= scan, errc::precondition,
            "action table entry for v_" + std::to_string(k) + " is outside the declared bound");
    img.check_context(Multivector<S>(sig));
  }
  std::map<Blade, S> found;
  const Parity image_parity = parity + Parity::odd;
  for (std::size_t k = 1; k <= scan; ++k) {
    auto it = table.find(k);
    if (it == table.end()) continue;
    require(is_homogeneous(it->second, image_parity), errc::parity,
            "D(v_" + std::to_string(k) + ") has the wrong parity for this derivation");
    const S& q = (*sig)(k);
    require(!is_zero(q), errc::degenerate_form, "signature vanishes at " + std::to_string(k));
    S scale = scalar_traits<S>::one() / (S(2) * q);
    Multivector<S> w = it->second * Multivector<S>::generator(k, sig) * scale;
    for (const auto& [b, c] : w.terms()) {
      require(b.parity() == parity, errc::parity, "blade " + b.to_string() + " has the wrong parity");
      const bool anticommutes = parity == Parity::even ? b.contains(k) : !b.contains(k);
      require(anticommutes, errc::not_an_ad_sum,
              "D(v_" + std::to_string(k) + ") involves " + b.to_string() + ", which commutes with v_" + std::to_string(k));
      auto [pos, inserted] = found.try_emplace(b, c);
      require(inserted || scalar_equal(pos->second, c), errc::not_an_ad_sum,
              "inconsistent coefficients for blade " + b.to_string());
    }
  }
  std::vector<AdTerm<S>> out;
  for (auto& [b, c] : found) {
    require(!b.empty(), errc::not_an_ad_sum, "unit blade in extracted family");
    out.push_back({b, c});
  }
  AdFamily<S> family = AdFamily<S>::finite(parity, out);
  for (std::size_t k = 1; k <= scan; ++k) {
    auto it = table.find(k);
    Multivector<S> expected = it == table.end() ? Multivector<S>(sig) : it->second;
    require(family_apply(family, Multivector<S>::generator(k, sig)) == expected, errc::not_an_ad_sum,
            "reconstructed family does not reproduce D(v_" + std::to_string(k) + ")");
  }
  return out;
}

}  // namespace detail

/// Coefficients of the unique even ad-sum (supported in indices <= bound)
/// with the given action on v_1, ..., v_bound.
template <Scalar S>
std::vector<AdTerm<S>> extract_even(const ActionTable<S>& table, std::size_t bound,
                                    const typename Multivector<S>::signature_ptr& sig) {
  return detail::extract(table, bound, sig, Parity::even);
}

/// Odd counterpart; needs D(v_k) for k <= bound + 1 so that every odd blade
/// on {1..bound} is missed by at least one scanned generator.
template <Scalar S>
std::vector<AdTerm<S>> extract_odd(const ActionTable<S>& table, std::size_t bound,
                                   const typename Multivector<S>::signature_ptr& sig) {
  return detail::extract(table, bound + 1, sig, Parity::odd);
}

/// Finitely supported skew-symmetric map on V; psi(v_k) = sum_m psi(m, k) v_m.
/// Only entries with i < j are stored.
template <Scalar S>
class SkewMap {
 public:
  SkewMap() = default;

  /// Accepts entries in any position; (i, j) and (j, i) must be negatives of
  /// each other and the diagonal must vanish.
  static SkewMap from_entries(const std::vector<std::tuple<std::size_t, std::size_t, S>>& entries) {
    std::map<std::pair<std::size_t, std::size_t>, S> full;
    for (const auto& [i, j, v] : entries) {
      require(i >= 1 && j >= 1, errc::precondition, "generator indices start at 1");
      require(i != j || is_zero(v), errc::invariant, "skew map has a nonzero diagonal entry");
      if (i == j) continue;
      auto [it, inserted] = full.try_emplace({i, j}, v);
      require(inserted, errc::invariant, "duplicate skew map entry");
    }
    SkewMap m;
    for (const auto& [ij, v] : full) {
      auto [i, j] = ij;
      auto mirror = full.find({j, i});
      if (mirror != full.end())
        require(scalar_equal(mirror->second, S(-v)), errc::invariant,
                "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and their mirror are not negatives");
      if (i < j)
        m.set(i, j, v);
      else if (mirror == full.end())
        m.set(j, i, S(-v));
    }
    return m;
  }

  /// psi(i, j) = v and psi(j, i) = -v for i < j.
  void set(std::size_t i, std::size_t j, S v) {
    require(i >= 1 && i < j, errc::precondition, "skew entries are stored with 1 <= i < j");
    if (is_zero(v))
      upper_.erase({i, j});
    else
      upper_[{i, j}] = std::move(v);
  }

  S operator()(std::size_t i, std::size_t j) const {
    if (i == j) return scalar_traits<S>::zero();
    bool flip = i > j;
    auto it = upper_.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == upper_.end()) return scalar_traits<S>::zero();
    return flip ? S(-it->second) : it->second;
  }

  const std::map<std::pair<std::size_t, std::size_t>, S>& upper() const noexcept { return upper_; }
  bool is_zero_map() const noexcept { return upper_.empty(); }

  Blade support() const {
    Blade s;
    for (const auto& [ij, v] : upper_) s = s | Blade::single(ij.first) | Blade::single(ij.second);
    return s;
  }

  Multivector<S> apply_generator(std::size_t k, const typename Multivector<S>::signature_ptr& sig) const {
    Multivector<S> out(sig);
    for (std::size_t m : support().indices()) out.add(Blade::single(m), (*this)(m, k));
    return out;
  }

  friend bool operator==(const SkewMap& a, const SkewMap& b) {
    if (a.upper_.size() != b.upper_.size()) return false;
    for (auto ia = a.upper_.begin(), ib = b.upper_.begin(); ia != a.upper_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !scalar_equal(ia->second, ib->second)) return false;
    return true;
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, S> upper_;
};

/// The even family sum_{i<j} (psi_ij / 2) ad(v_i v_j), whose restriction to V
/// is psi. Requires the orthonormal case q == 1 on the support of psi.
template <Scalar S>
AdFamily<S> bogolyubov_derivation(const SkewMap<S>& psi, const Signature<S>& sig) {
  require(sig.is_unit_on(psi.support()), errc::unsupported_signature,
          "Bogolyubov derivations are built for q == 1 only");
  std::vector<AdTerm<S>> terms;
  const S half = scalar_traits<S>::one() / S(2);
  for (const auto& [ij, v] : psi.upper()) terms.push_back({Blade{ij.first, ij.second}, S(v * half)});
  return AdFamily<S>::finite(Parity::even, terms);
}

/// Inverse of bogolyubov_derivation: succeeds iff every blade has two
/// indices, otherwise raises errc::not_bogolyubov (some v_k would be mapped
/// outside V).
template <Scalar S>
SkewMap<S> derivation_restricts_to_V(const AdFamily<S>& d) {
  require(!d.is_stream(), errc::precondition, "restriction to V is decided for finite families");
  require(d.parity() == Parity::even, errc::parity, "Bogolyubov derivations are even");
  SkewMap<S> psi;
  for (const auto& t : d.terms()) {
    require(t.blade.size() == 2, errc::not_bogolyubov,
            "blade " + t.blade.to_string() + " maps generators outside V");
    auto idx = t.blade.indices();
    psi.set(idx[0], idx[1], S(t.coeff * S(2)));
  }
  return psi;
}

/// u = sum_{i<j} (psi_ij / 2) v_i v_j, so that ad(u) is the Bogolyubov
/// derivation of psi.
template <Scalar S>
Multivector<S> inner_witness(const SkewMap<S>& psi, const typename Multivector<S>::signature_ptr& sig) {
  require(sig->is_unit_on(psi.support()), errc::unsupported_signature,
          "Bogolyubov derivations are built for q == 1 only");
  Multivector<S> u(sig);
  const S half = scalar_traits<S>::one() / S(2);
  for (const auto& [ij, v] : psi.upper()) u.add(Blade{ij.first, ij.second}, S(v * half));
  return u;
}

}  // namespace clifford

#endif  // CLIFFORD_DERIVATIONS_HPP
