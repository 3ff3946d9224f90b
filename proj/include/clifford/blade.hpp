#ifndef CLIFFORD_BLADE_HPP
#define CLIFFORD_BLADE_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "clifford/error.hpp"

namespace clifford {

enum class Parity { even, odd };

constexpr Parity operator+(Parity a, Parity b) noexcept { return a == b ? Parity::even : Parity::odd; }

/// A finite set of generator indices (1-based), i.e. the basis element v_S.
/// Stored as a bitset with index k at bit k-1; trailing zero words are
/// trimmed so that equal sets compare equal word for word.
class Blade {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Blade() = default;

  /// Indices must be positive and strictly increasing.
  Blade(std::initializer_list<std::size_t> indices) : Blade(std::span<const std::size_t>(indices.begin(), indices.size())) {}

  explicit Blade(std::span<const std::size_t> indices) {
    std::size_t prev = 0;
    for (std::size_t k : indices) {
      require(k >= 1, errc::precondition, "generator indices start at 1");
      require(k > prev, errc::precondition, "blade indices must be strictly increasing");
      set(k);
      prev = k;
    }
  }

  explicit Blade(const std::vector<std::size_t>& indices) : Blade(std::span<const std::size_t>(indices)) {}

  static Blade single(std::size_t k) {
    Blade b;
    require(k >= 1, errc::precondition, "generator indices start at 1");
    b.set(k);
    return b;
  }

  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static Blade range(std::size_t lo, std::size_t hi) {
    Blade b;
    for (std::size_t k = lo; k <= hi; ++k) b.set(k);
    return b;
  }

  static Blade from_words(std::vector<word_type> words) {
    Blade b;
    b.words_ = std::move(words);
    b.trim();
    return b;
  }

  bool empty() const noexcept { return words_.empty(); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (word_type w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  Parity parity() const noexcept { return size() % 2 == 0 ? Parity::even : Parity::odd; }

  bool contains(std::size_t k) const noexcept {
    if (k == 0) return false;
    std::size_t bit = k - 1;
    std::size_t w = bit / word_bits;
    return w < words_.size() && ((words_[w] >> (bit % word_bits)) & 1U) != 0;
  }

  /// Largest index, 0 for the empty blade.
  std::size_t max_index() const noexcept {
    if (words_.empty()) return 0;
    word_type top = words_.back();
    return (words_.size() - 1) * word_bits + (word_bits - static_cast<std::size_t>(std::countl_zero(top)));
  }

  /// Smallest index, 0 for the empty blade.
  std::size_t min_index() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w])) + 1;
    return 0;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits != 0) {
        out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)) + 1);
        bits &= bits - 1;
      }
    }
    return out;
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

  bool is_subset_of(const Blade& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type o = w < other.words_.size() ? other.words_[w] : 0;
      if ((words_[w] & ~o) != 0) return false;
    }
    return true;
  }

  bool disjoint(const Blade& other) const noexcept { return (*this & other).empty(); }

  friend Blade operator^(const Blade& a, const Blade& b) { return combine(a, b, [](word_type x, word_type y) { return x ^ y; }); }
  friend Blade operator&(const Blade& a, const Blade& b) { return combine(a, b, [](word_type x, word_type y) { return x & y; }); }
  friend Blade operator|(const Blade& a, const Blade& b) { return combine(a, b, [](word_type x, word_type y) { return x | y; }); }
  friend Blade operator-(const Blade& a, const Blade& b) { return combine(a, b, [](word_type x, word_type y) { return x & ~y; }); }

  friend bool operator==(const Blade&, const Blade&) = default;

  /// Grade first, then colexicographic (compare highest differing index).
  friend std::strong_ordering operator<=>(const Blade& a, const Blade& b) noexcept {
    std::size_t na = a.size();
    std::size_t nb = b.size();
    if (na != nb) return na <=> nb;
    if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
    for (std::size_t w = a.words_.size(); w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    return std::strong_ordering::equal;
  }

  /// Number of pairs (s, t) with s in *this, t in other and s > t, mod 2:
  /// the sign picked up when sorting the concatenation S then T.
  bool reorder_is_odd(const Blade& other) const noexcept {
    std::size_t total = size();
    std::size_t below_or_at = 0;  // elements of *this that are <= current t
    std::size_t inversions = 0;
    for (std::size_t w = 0; w < other.words_.size(); ++w) {
      word_type mine = w < words_.size() ? words_[w] : 0;
      word_type bits = other.words_[w];
      while (bits != 0) {
        unsigned pos = static_cast<unsigned>(std::countr_zero(bits));
        word_type mask = pos == word_bits - 1 ? ~word_type{0} : ((word_type{1} << (pos + 1)) - 1);
        inversions += total - (below_or_at + static_cast<std::size_t>(std::popcount(mine & mask)));
        bits &= bits - 1;
      }
      below_or_at += static_cast<std::size_t>(std::popcount(mine));
    }
    return inversions % 2 == 1;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t k : indices()) {
      if (!first) out += ",";
      out += std::to_string(k);
      first = false;
    }
    return out + "}";
  }

 private:
  void set(std::size_t k) {
    std::size_t bit = k - 1;
    std::size_t w = bit / word_bits;
    if (words_.size() <= w) words_.resize(w + 1, 0);
    words_[w] |= word_type{1} << (bit % word_bits);
  }

  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  template <class Op>
  static Blade combine(const Blade& a, const Blade& b, Op op) {
    Blade r;
    std::size_t n = std::max(a.words_.size(), b.words_.size());
    r.words_.resize(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
      word_type x = w < a.words_.size() ? a.words_[w] : 0;
      word_type y = w < b.words_.size() ? b.words_[w] : 0;
      r.words_[w] = op(x, y);
    }
    r.trim();
    return r;
  }

  std::vector<word_type> words_;
};

}  // namespace clifford

#endif  // CLIFFORD_BLADE_HPP
