#ifndef CLIFFORD_SCALAR_HPP
#define CLIFFORD_SCALAR_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>

#include <boost/multiprecision/cpp_int.hpp>

#include "clifford/error.hpp"

namespace clifford {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element a + b*i of Q(i).
struct Gaussian {
  Rational re{0};
  Rational im{0};

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    Rational den = o.re * o.re + o.im * o.im;
    require(den != 0, errc::precondition, "division by zero");
    Rational r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
};

using Complex = std::complex<double>;

/// Tag naming one of the four scalar domains; fixed per computation context.
enum class Domain { rational, gaussian, f64, c64 };

constexpr std::string_view to_string(Domain d) noexcept {
  switch (d) {
    case Domain::rational: return "rational";
    case Domain::gaussian: return "gaussian";
    case Domain::f64: return "f64";
    case Domain::c64: return "c64";
  }
  return "?";
}

inline Domain parse_domain(std::string_view s) {
  if (s == "rational") return Domain::rational;
  if (s == "gaussian") return Domain::gaussian;
  if (s == "f64") return Domain::f64;
  if (s == "c64") return Domain::c64;
  fail(errc::format, "unknown scalar domain '" + std::string(s) + "'");
}

inline constexpr double float_tolerance = 1e-9;

namespace detail {

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline Rational parse_rational(std::string_view s) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) fail(errc::format, "malformed rational '" + std::string(s) + "'");
  Integer n(std::string{num});
  Integer d(std::string{den});
  if (d == 0) fail(errc::format, "zero denominator in '" + std::string(s) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

inline double parse_double(std::string_view s) {
  if (s.find('/') != std::string_view::npos) {
    auto slash = s.find('/');
    double den = parse_double(s.substr(slash + 1));
    if (den == 0.0) fail(errc::format, "zero denominator in '" + std::string(s) + "'");
    return parse_double(s.substr(0, slash)) / den;
  }
  std::string_view body = s;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc{} || ptr != body.data() + body.size() || body.empty())
    fail(errc::format, "malformed number '" + std::string(s) + "'");
  return v;
}

inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// Splits "a+b i" style text into real and imaginary substrings; imaginary is
// empty when there is no trailing i.
inline std::pair<std::string, std::string> split_complex(const std::string& s, bool& has_imag) {
  has_imag = !s.empty() && s.back() == 'i';
  if (!has_imag) return {s, ""};
  std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string::npos) return {"", body};
  return {body.substr(0, split), body.substr(split)};
}

inline std::string imag_text(std::string im) {
  if (im.empty() || im == "+") return "1";
  if (im == "-") return "-1";
  return im;
}

inline std::string join_complex(const std::string& re, const std::string& im, bool re_zero, bool im_zero, bool im_neg,
                         bool im_unit) {
  if (im_zero) return re;
  std::string imag = im_unit ? (im_neg ? "-" : "") : im;
  imag += im_unit ? "i" : " i";
  if (re_zero) return imag;
  return re + (im_neg ? "" : "+") + imag;
}

}  // namespace detail

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr Domain domain = Domain::rational;
  static constexpr bool exact = true;
  static constexpr bool has_imaginary_unit = false;
  static constexpr bool is_real = true;

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static Rational conj(const Rational& a) { return a; }
  static std::string to_string(const Rational& a) { return a.str(); }
  static Rational from_string(std::string_view s) {
    std::string t = detail::strip_spaces(s);
    if (!t.empty() && t.back() == 'i') fail(errc::domain_mismatch, "imaginary value in rational domain");
    return detail::parse_rational(t);
  }
};

template <>
struct scalar_traits<Gaussian> {
  static constexpr Domain domain = Domain::gaussian;
  static constexpr bool exact = true;
  static constexpr bool has_imaginary_unit = true;
  static constexpr bool is_real = false;

  static Gaussian zero() { return {}; }
  static Gaussian one() { return Gaussian(1); }
  static Gaussian imaginary_unit() { return {Rational(0), Rational(1)}; }
  static Gaussian from_rational(const Rational& r) { return Gaussian(r); }
  static bool is_zero(const Gaussian& a) { return a.re == 0 && a.im == 0; }
  static bool equal(const Gaussian& a, const Gaussian& b) { return a == b; }
  static Gaussian conj(const Gaussian& a) { return {a.re, -a.im}; }
  static std::string to_string(const Gaussian& a) {
    Rational mag = a.im < 0 ? Rational(-a.im) : a.im;
    std::string im = (a.im < 0 ? "-" : "") + mag.str();
    return detail::join_complex(a.re.str(), im, a.re == 0, a.im == 0, a.im < 0, mag == 1);
  }
  static Gaussian from_string(std::string_view s) {
    bool has_imag = false;
    auto [re, im] = detail::split_complex(detail::strip_spaces(s), has_imag);
    Gaussian g;
    if (!re.empty()) g.re = detail::parse_rational(re);
    if (has_imag) g.im = detail::parse_rational(detail::imag_text(im));
    return g;
  }
};

template <>
struct scalar_traits<double> {
  static constexpr Domain domain = Domain::f64;
  static constexpr bool exact = false;
  static constexpr bool has_imaginary_unit = false;
  static constexpr bool is_real = true;

  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_rational(const Rational& r) { return r.convert_to<double>(); }
  static bool is_zero(double a) { return a == 0.0; }
  static bool equal(double a, double b) {
    return std::abs(a - b) <= float_tolerance * std::max({1.0, std::abs(a), std::abs(b)});
  }
  static double conj(double a) { return a; }
  static std::string to_string(double a) { return detail::format_double(a); }
  static double from_string(std::string_view s) {
    std::string t = detail::strip_spaces(s);
    if (!t.empty() && t.back() == 'i') fail(errc::domain_mismatch, "imaginary value in f64 domain");
    return detail::parse_double(t);
  }
};

template <>
struct scalar_traits<Complex> {
  static constexpr Domain domain = Domain::c64;
  static constexpr bool exact = false;
  static constexpr bool has_imaginary_unit = true;
  static constexpr bool is_real = false;

  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex imaginary_unit() { return {0.0, 1.0}; }
  static Complex from_rational(const Rational& r) { return {r.convert_to<double>(), 0.0}; }
  static bool is_zero(const Complex& a) { return a == Complex{}; }
  static bool equal(const Complex& a, const Complex& b) {
    return std::abs(a - b) <= float_tolerance * std::max({1.0, std::abs(a), std::abs(b)});
  }
  static Complex conj(const Complex& a) { return std::conj(a); }
  static std::string to_string(const Complex& a) {
    double mag = std::abs(a.imag());
    std::string im = (a.imag() < 0 ? "-" : "") + detail::format_double(mag);
    return detail::join_complex(detail::format_double(a.real()), im, a.real() == 0.0, a.imag() == 0.0,
                                        a.imag() < 0, mag == 1.0);
  }
  static Complex from_string(std::string_view s) {
    bool has_imag = false;
    auto [re, im] = detail::split_complex(detail::strip_spaces(s), has_imag);
    Complex c;
    if (!re.empty()) c.real(detail::parse_double(re));
    if (has_imag) c.imag(detail::parse_double(detail::imag_text(im)));
    return c;
  }
};

template <class S>
concept Scalar = requires { scalar_traits<S>::domain; };

template <class S>
concept ComplexScalar = Scalar<S> && scalar_traits<S>::has_imaginary_unit;

template <Scalar S>
bool is_zero(const S& a) {
  return scalar_traits<S>::is_zero(a);
}

template <Scalar S>
bool scalar_equal(const S& a, const S& b) {
  return scalar_traits<S>::equal(a, b);
}

template <Scalar S>
std::string to_text(const S& a) {
  return scalar_traits<S>::to_string(a);
}

template <Scalar S>
S from_rational(const Rational& r) {
  return scalar_traits<S>::from_rational(r);
}

/// The smallest domain containing S and i; matrix representations live there.
template <Scalar S>
struct complexified {
  using type = S;
};
template <>
struct complexified<Rational> {
  using type = Gaussian;
};
template <>
struct complexified<double> {
  using type = Complex;
};
template <Scalar S>
using complexified_t = typename complexified<S>::type;

template <Scalar S>
complexified_t<S> complexify(const S& a) {
  return complexified_t<S>(a);
}

inline std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << scalar_traits<Gaussian>::to_string(g); }

}  // namespace clifford

#endif  // CLIFFORD_SCALAR_HPP
