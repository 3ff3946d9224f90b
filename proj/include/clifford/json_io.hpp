#ifndef CLIFFORD_JSON_IO_HPP
#define CLIFFORD_JSON_IO_HPP

// JSON wire formats. Scalars travel as strings: rationals "p/q", Gaussian
// rationals "p/q+r/s i", floats in shortest round-trip decimal form.
//
//   multivector : {"domain":"rational","signature":{"default":"1","overrides":{"3":"2"}},
//                  "terms":[{"blade":[1,2],"coeff":"3/4"}]}
//   derivation  : {"parity":"even","terms":[{"blade":[1,2],"coeff":"1"}]}
//   action table: {"parity":"even","bound":2,"actions":[{"k":1,"image":"-2*e2"}]}
//                 (an image is an expression string or a multivector "terms" array)
//   skew map    : {"entries":[{"i":1,"j":2,"value":"-2"}]}        (i < j on output)
//   orthogonal  : {"active":[1,2],"matrix":[["0","-1"],["1","0"]]}
//                 matrix[r][c] = coefficient of v_{active[r]} in phi(v_{active[c]})
//   chain       : {"cuts":[2,6,10]}

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "clifford/automorphisms.hpp"
#include "clifford/derivations.hpp"
#include "clifford/expr.hpp"
#include "clifford/multivector.hpp"

namespace clifford::json {

using nlohmann::json;

template <Scalar S>
json scalar_to_json(const S& s) {
  return to_text(s);
}

template <Scalar S>
S scalar_from_json(const json& j) {
  if (j.is_string()) return scalar_traits<S>::from_string(j.get<std::string>());
  if (j.is_number_integer()) return from_rational<S>(Rational(j.get<long long>()));
  if (j.is_number_float()) {
    if constexpr (scalar_traits<S>::exact)
      fail(errc::format, "float literal " + j.dump() + " in an exact domain; use a \"p/q\" string");
    else
      return S(j.get<double>());
  }
  fail(errc::format, "expected a scalar, got " + j.dump());
}

inline const json& field(const json& j, const char* name) {
  require(j.is_object() && j.contains(name), errc::format, std::string("missing field '") + name + "'");
  return j.at(name);
}

inline std::size_t index_from_json(const json& j) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0), errc::format,
          "expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

inline Blade blade_from_json(const json& j) {
  require(j.is_array(), errc::format, "blade must be an array of indices");
  std::vector<std::size_t> idx;
  for (const auto& k : j) idx.push_back(index_from_json(k));
  try {
    return Blade(idx);
  } catch (const error& e) {
    fail(errc::format, e.what());
  }
}

inline json blade_to_json(const Blade& b) { return b.indices(); }

template <Scalar S>
json signature_to_json(const Signature<S>& sig) {
  json over = json::object();
  for (const auto& [k, q] : sig.overrides()) over[std::to_string(k)] = scalar_to_json(q);
  return {{"default", scalar_to_json(sig.default_value())}, {"overrides", over}};
}

template <Scalar S>
Signature<S> signature_from_json(const json& j) {
  Signature<S> sig(j.contains("default") ? scalar_from_json<S>(j.at("default")) : scalar_traits<S>::one());
  if (j.contains("overrides")) {
    require(j.at("overrides").is_object(), errc::format, "signature overrides must be an object");
    for (const auto& [key, q] : j.at("overrides").items()) {
      require(!key.empty() && key.size() <= 7 && detail::all_digits(key) && key != std::string(key.size(), '0'),
              errc::format, "signature override key '" + key + "' is not an index");
      sig.set(std::stoul(key), scalar_from_json<S>(q));
    }
  }
  return sig;
}

template <Scalar S>
json terms_to_json(const Multivector<S>& a) {
  json terms = json::array();
  for (const auto& [b, c] : a.terms()) terms.push_back({{"blade", blade_to_json(b)}, {"coeff", scalar_to_json(c)}});
  return terms;
}

template <Scalar S>
Multivector<S> terms_from_json(const json& j, const typename Multivector<S>::signature_ptr& sig) {
  require(j.is_array(), errc::format, "terms must be an array");
  Multivector<S> m(sig);
  for (const auto& t : j) m.add(blade_from_json(field(t, "blade")), scalar_from_json<S>(field(t, "coeff")));
  return m;
}

template <Scalar S>
json multivector_to_json(const Multivector<S>& a) {
  return {{"domain", std::string(to_string(scalar_traits<S>::domain))},
          {"signature", signature_to_json(a.signature())},
          {"terms", terms_to_json(a)}};
}

/// Reads a multivector; a "domain" field other than S's raises domain-mismatch.
template <Scalar S>
Multivector<S> multivector_from_json(const json& j) {
  if (j.contains("domain")) {
    Domain d = parse_domain(j.at("domain").get<std::string>());
    require(d == scalar_traits<S>::domain, errc::domain_mismatch,
            "multivector is in the " + std::string(to_string(d)) + " domain, expected " +
                std::string(to_string(scalar_traits<S>::domain)));
  }
  Signature<S> sig = j.contains("signature") ? signature_from_json<S>(j.at("signature")) : Signature<S>{};
  return terms_from_json<S>(field(j, "terms"), std::make_shared<const Signature<S>>(std::move(sig)));
}

inline Parity parity_from_json(const json& j) {
  std::string p = j.get<std::string>();
  if (p == "even") return Parity::even;
  if (p == "odd") return Parity::odd;
  fail(errc::format, "parity must be \"even\" or \"odd\"");
}

inline std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

template <Scalar S>
json derivation_to_json(Parity parity, const std::vector<AdTerm<S>>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({{"blade", blade_to_json(t.blade)}, {"coeff", scalar_to_json(t.coeff)}});
  return {{"parity", parity_name(parity)}, {"terms", out}};
}

template <Scalar S>
json derivation_to_json(const AdFamily<S>& d) {
  require(!d.is_stream(), errc::precondition, "stream families have no finite JSON form");
  return derivation_to_json(d.parity(), d.terms());
}

template <Scalar S>
AdFamily<S> derivation_from_json(const json& j) {
  Parity p = parity_from_json(field(j, "parity"));
  std::vector<AdTerm<S>> terms;
  const json& ts = field(j, "terms");
  require(ts.is_array(), errc::format, "derivation terms must be an array");
  for (const auto& t : ts) terms.push_back({blade_from_json(field(t, "blade")), scalar_from_json<S>(field(t, "coeff"))});
  return AdFamily<S>::finite(p, terms);
}

template <Scalar S>
json skew_to_json(const SkewMap<S>& psi) {
  json entries = json::array();
  for (const auto& [ij, v] : psi.upper())
    entries.push_back({{"i", ij.first}, {"j", ij.second}, {"value", scalar_to_json(v)}});
  return {{"entries", entries}};
}

template <Scalar S>
SkewMap<S> skew_from_json(const json& j) {
  std::vector<std::tuple<std::size_t, std::size_t, S>> entries;
  const json& es = field(j, "entries");
  require(es.is_array(), errc::format, "skew map entries must be an array");
  for (const auto& e : es)
    entries.emplace_back(index_from_json(field(e, "i")), index_from_json(field(e, "j")),
                         scalar_from_json<S>(field(e, "value")));
  return SkewMap<S>::from_entries(entries);
}

template <Scalar S>
json orthogonal_to_json(const OrthogonalMap<S>& phi) {
  json rows = json::array();
  const auto& m = phi.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"active", phi.active()}, {"matrix", rows}};
}

template <Scalar S>
OrthogonalMap<S> orthogonal_from_json(const json& j) {
  std::vector<std::size_t> active;
  for (const auto& k : field(j, "active")) active.push_back(index_from_json(k));
  const json& rows = field(j, "matrix");
  require(rows.is_array() && rows.size() == active.size(), errc::format, "matrix must have one row per active index");
  Matrix<S> m(active.size(), active.size());
  for (std::size_t r = 0; r < active.size(); ++r) {
    require(rows[r].is_array() && rows[r].size() == active.size(), errc::format, "matrix must be square");
    for (std::size_t c = 0; c < active.size(); ++c) m(r, c) = scalar_from_json<S>(rows[r][c]);
  }
  return {active, m};
}

inline std::vector<std::size_t> chain_from_json(const json& j) {
  std::vector<std::size_t> cuts;
  for (const auto& c : field(j, "cuts")) cuts.push_back(index_from_json(c));
  return cuts;
}

template <Scalar S>
struct ActionTableSpec {
  Parity parity;
  std::size_t bound;
  ActionTable<S> table;
};

template <Scalar S>
ActionTableSpec<S> action_table_from_json(const json& j, const typename Multivector<S>::signature_ptr& sig) {
  ActionTableSpec<S> spec{parity_from_json(field(j, "parity")), index_from_json(field(j, "bound")), {}};
  const json& acts = field(j, "actions");
  require(acts.is_array(), errc::format, "actions must be an array");
  for (const auto& a : acts) {
    std::size_t k = index_from_json(field(a, "k"));
    const json& img = field(a, "image");
    Multivector<S> m = img.is_string() ? parse<S>(img.get<std::string>(), sig) : terms_from_json<S>(img, sig);
    require(spec.table.emplace(k, std::move(m)).second, errc::format, "duplicate action for k = " + std::to_string(k));
  }
  return spec;
}

template <Scalar S>
json action_table_to_json(Parity parity, std::size_t bound, const ActionTable<S>& table) {
  json acts = json::array();
  for (const auto& [k, m] : table) acts.push_back({{"k", k}, {"image", to_expression(m)}});
  return {{"parity", parity_name(parity)}, {"bound", bound}, {"actions", acts}};
}

}  // namespace clifford::json

#endif  // CLIFFORD_JSON_IO_HPP
