// cliff: command-line front end for the clifford library.
//
// Exit status: 0 on success, 1 when a verification fails or the library
// reports an error, 2 for usage errors and malformed input (syntax, unknown
// atoms, bad JSON). Diagnostics go to stderr as "error: <code>: <message>".

#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clifford/clifford.hpp"
#include "clifford/json_io.hpp"

namespace {

using namespace clifford;
namespace cj = clifford::json;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Settings {
  Domain domain = Domain::rational;
  std::optional<json> config_signature;
  std::string sig_default;
  std::vector<std::string> sig_overrides;
  bool json_out = false;
};

struct Request {
  std::string command;
  std::string expr;
  std::string document;
  std::string u;
  std::string u_inv;
  std::vector<std::size_t> cuts;
  std::size_t k = 0;
  std::size_t n = 10;
  std::size_t m = 2;
  std::size_t large_k = 4;
};

std::string read_stream(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_source(const std::string& arg) {
  if (arg == "-") return read_stream(std::cin);
  std::ifstream f(arg);
  require(static_cast<bool>(f), errc::format, "cannot read '" + arg + "'");
  return read_stream(f);
}

// A JSON argument is inline text when it starts with '{' or '[', stdin for
// "-", and a file path otherwise.
json load_json(const std::string& arg) {
  std::size_t first = arg.find_first_not_of(" \t\r\n");
  bool inline_text = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
  std::string text = inline_text ? arg : read_source(arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::format, std::string("invalid JSON: ") + e.what());
  }
}

template <Scalar S>
S scalar_arg(const std::string& text) {
  try {
    return scalar_traits<S>::from_string(text);
  } catch (const error& e) {
    fail(errc::format, "bad scalar '" + text + "' in --sig: " + e.what());
  }
}

template <Scalar S>
typename Multivector<S>::signature_ptr make_signature(const Settings& st) {
  Signature<S> sig = st.config_signature ? cj::signature_from_json<S>(*st.config_signature) : Signature<S>{};
  if (!st.sig_default.empty()) {
    Signature<S> fresh(scalar_arg<S>(st.sig_default));
    for (const auto& [k, q] : sig.overrides()) fresh.set(k, q);
    sig = fresh;
  }
  for (const std::string& entry : st.sig_overrides) {
    std::size_t eq = entry.find('=');
    require(eq != std::string::npos, errc::format, "--sig entries look like k=q, got '" + entry + "'");
    std::string key = entry.substr(0, eq);
    bool digits = !key.empty() && key.size() <= 7 && key.find_first_not_of("0123456789") == std::string::npos;
    require(digits && key != std::string(key.size(), '0'), errc::format, "bad generator index '" + key + "' in --sig");
    sig.set(std::stoul(key), scalar_arg<S>(entry.substr(eq + 1)));
  }
  return std::make_shared<const Signature<S>>(std::move(sig));
}

/// Prints named checks as "name: OK" / "name: FAIL", or collects them for JSON.
class Report {
 public:
  explicit Report(bool json_out) : json_out_(json_out) {}

  void note(const std::string& line) {
    if (json_out_)
      notes_.push_back(line);
    else
      std::cout << line << '\n';
  }

  void check(const std::string& name, bool ok) {
    ok_ = ok_ && ok;
    if (json_out_)
      checks_.push_back({{"name", name}, {"ok", ok}});
    else
      std::cout << name << ": " << (ok ? "OK" : "FAIL") << '\n';
  }

  int finish() {
    if (json_out_)
      std::cout << json{{"notes", notes_}, {"checks", checks_}, {"ok", ok_}}.dump() << '\n';
    else
      std::cout << (ok_ ? "all checks OK" : "verification FAILED") << '\n';
    return ok_ ? exit_ok : exit_failed;
  }

 private:
  bool json_out_;
  bool ok_ = true;
  json notes_ = json::array();
  json checks_ = json::array();
};

template <Scalar S>
class Runner {
 public:
  using MV = Multivector<S>;

  Runner(const Request& rq, const Settings& st) : rq_(rq), st_(st), sig_(make_signature<S>(st)) {}

  int run() {
    const std::string& c = rq_.command;
    if (c == "eval") return eval();
    if (c == "trace") return print_scalar(trace(operand(rq_.expr)));
    if (c == "norm") return print_scalar(norm(operand(rq_.expr)));
    if (c == "deriv apply") return deriv_apply();
    if (c == "deriv extract") return deriv_extract();
    if (c == "deriv bogolyubov") return deriv_bogolyubov();
    if (c == "deriv inner-witness") return deriv_inner_witness();
    if (c == "deriv restrict") return deriv_restrict();
    if (c == "auto bogolyubov") return print_mv(bogolyubov_apply(cj::orthogonal_from_json<S>(load_json(rq_.document)),
                                                                 operand(rq_.expr)));
    if (c == "auto conjugate") return print_mv(conjugation_apply(operand(rq_.u), operand(rq_.u_inv), operand(rq_.expr)));
    if (c == "decomp build") return decomp_build();
    if (c == "decomp check") return decomp_check();
    if (c == "decomp rewrite") return decomp_rewrite();
    if (c == "rep check") return rep_check();
    if (c == "witness") return witness();
    fail(errc::precondition, "unknown command '" + c + "'");
  }

 private:
  // Expressions are parsed in the active signature; a JSON multivector
  // (inline or from a file via @path) carries its own.
  MV operand(const std::string& arg) const {
    if (!arg.empty() && arg[0] == '@') return cj::multivector_from_json<S>(load_json(arg.substr(1)));
    std::size_t first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return cj::multivector_from_json<S>(load_json(arg));
    return parse<S>(arg == "-" ? read_stream(std::cin) : arg, sig_);
  }

  int print_mv(const MV& a) const {
    if (st_.json_out)
      std::cout << cj::multivector_to_json(a).dump() << '\n';
    else
      std::cout << to_expression(a) << '\n';
    return exit_ok;
  }

  int print_scalar(const S& s) const {
    if (st_.json_out)
      std::cout << json{{"value", to_text(s)}}.dump() << '\n';
    else
      std::cout << to_text(s) << '\n';
    return exit_ok;
  }

  static int print_json(const json& j) {
    std::cout << j.dump() << '\n';
    return exit_ok;
  }

  int eval() { return print_mv(operand(rq_.expr)); }

  int deriv_apply() {
    AdFamily<S> d = cj::derivation_from_json<S>(load_json(rq_.document));
    return print_mv(family_apply(d, operand(rq_.expr)));
  }

  int deriv_extract() {
    auto spec = cj::action_table_from_json<S>(load_json(rq_.document), sig_);
    auto terms = spec.parity == Parity::even ? extract_even(spec.table, spec.bound, sig_)
                                             : extract_odd(spec.table, spec.bound, sig_);
    return print_json(cj::derivation_to_json(spec.parity, terms));
  }

  int deriv_bogolyubov() {
    SkewMap<S> psi = cj::skew_from_json<S>(load_json(rq_.document));
    AdFamily<S> d = bogolyubov_derivation(psi, *sig_);
    for (std::size_t k : psi.support().indices()) {
      if (family_apply(d, MV::generator(k, sig_)) != psi.apply_generator(k, sig_)) {
        std::cerr << "error: invariant: derivation disagrees with psi on v_" << k << '\n';
        return exit_failed;
      }
    }
    return print_json(cj::derivation_to_json(d));
  }

  int deriv_inner_witness() {
    SkewMap<S> psi = cj::skew_from_json<S>(load_json(rq_.document));
    MV u = inner_witness(psi, sig_);
    for (std::size_t k : psi.support().indices()) {
      if (ad_apply(u, MV::generator(k, sig_)) != psi.apply_generator(k, sig_)) {
        std::cerr << "error: invariant: ad(u) disagrees with psi on v_" << k << '\n';
        return exit_failed;
      }
    }
    return print_mv(u);
  }

  int deriv_restrict() {
    return print_json(cj::skew_to_json(derivation_restricts_to_V(cj::derivation_from_json<S>(load_json(rq_.document)))));
  }

  FactorChain<S> chain() const { return chain_build<S>(rq_.cuts, sig_); }

  static std::string factor_label(std::size_t i) { return "A_" + std::to_string(i); }

  int decomp_build() {
    FactorChain<S> ch = chain();
    const MV minus_one = MV::scalar(S(-scalar_traits<S>::one()), sig_);
    json factors = json::array();
    for (std::size_t i = 1; i <= ch.size(); ++i) {
      bool squares = ch.c(i) * ch.c(i) == minus_one;
      std::string block = "v_" + std::to_string(ch.block_lo(i)) + "..v_" + std::to_string(ch.block_hi(i));
      if (st_.json_out) {
        factors.push_back({{"factor", i},
                           {"block", {ch.block_lo(i), ch.block_hi(i)}},
                           {"c", to_expression(ch.c(i))},
                           {"scaled_by_i", ch.adjusted(i)},
                           {"c_squared_is_minus_one", squares}});
      } else {
        std::cout << factor_label(i) << ": block " << block << ", c_" << i << " = " << to_expression(ch.c(i))
                  << (ch.adjusted(i) ? " (scaled by i)" : "") << ", c_" << i << "^2 = " << (squares ? "-1" : "?")
                  << '\n';
      }
    }
    if (st_.json_out) std::cout << json{{"cuts", ch.cuts()}, {"factors", factors}}.dump() << '\n';
    return exit_ok;
  }

  bool rewrite_holds(const FactorChain<S>& ch, std::size_t k, const std::vector<ChainFactor<S>>& parts) const {
    MV product = MV::scalar(scalar_traits<S>::one(), sig_);
    for (const auto& f : parts) {
      if (!ch.in_factor(f.factor, f.element)) return false;
      product = product * f.element;
    }
    return product == MV::generator(k, sig_);
  }

  int decomp_check() {
    FactorChain<S> ch = chain();
    const MV minus_one = MV::scalar(S(-scalar_traits<S>::one()), sig_);
    const std::size_t n = ch.cuts().back();
    Report rep(st_.json_out);
    for (std::size_t i = 1; i <= ch.size(); ++i) {
      std::string s = std::to_string(i);
      rep.check("c_" + s + "^2 = -1", ch.c(i) * ch.c(i) == minus_one);
      rep.check("phi_" + s + " homomorphism", ch.is_homomorphism(i));
      rep.check("phi_" + s + " injective", ch.is_injective(i));
    }
    for (std::size_t i = 1; i <= ch.size(); ++i)
      for (std::size_t j = i + 1; j <= ch.size(); ++j)
        rep.check("[A_" + std::to_string(i) + ", A_" + std::to_string(j) + "] = 0", ch.commutator_check(i, j));
    for (std::size_t k = 1; k <= n; ++k)
      rep.check("rewrite v_" + std::to_string(k), rewrite_holds(ch, k, ch.rewrite_generator(k)));
    if (n <= 10) {
      std::size_t full = std::size_t{1} << n;
      rep.check("product span rank " + std::to_string(full), ch.product_span_rank() == full);
    } else {
      rep.note("product span rank: skipped for n > 10");
    }
    return rep.finish();
  }

  int decomp_rewrite() {
    FactorChain<S> ch = chain();
    const std::size_t n = ch.cuts().back();
    std::vector<std::size_t> ks;
    if (rq_.k != 0) {
      ks.push_back(rq_.k);
    } else {
      for (std::size_t k = 1; k <= n; ++k) ks.push_back(k);
    }
    bool all_ok = true;
    json out = json::array();
    for (std::size_t k : ks) {
      auto parts = ch.rewrite_generator(k);
      bool ok = rewrite_holds(ch, k, parts);
      all_ok = all_ok && ok;
      if (st_.json_out) {
        json fs = json::array();
        for (const auto& f : parts) fs.push_back({{"factor", f.factor}, {"element", to_expression(f.element)}});
        out.push_back({{"k", k}, {"factors", fs}, {"ok", ok}});
      } else {
        std::cout << "v_" << k << '\n';
        for (const auto& f : parts) std::cout << "  " << factor_label(f.factor) << ": " << to_expression(f.element) << '\n';
        std::cout << "  product: " << (ok ? "OK" : "FAIL") << '\n';
      }
    }
    if (st_.json_out) std::cout << json{{"rewrites", out}, {"ok", all_ok}}.dump() << '\n';
    return all_ok ? exit_ok : exit_failed;
  }

  int rep_check() {
    using C = complexified_t<S>;
    const std::size_t k = rq_.k == 0 ? 1 : rq_.k;
    const std::size_t large = std::max(k, rq_.large_k);
    MatrixRep<C> r = build_rep<C>(k, large);
    const Matrix<C> id = Matrix<C>::identity(r.dim);
    const Matrix<C> zero(r.dim, r.dim);
    Report rep(st_.json_out);
    rep.note("representation k = " + std::to_string(k) + ", " + std::to_string(r.dim) + "x" + std::to_string(r.dim) +
             " matrices");
    bool squares = true, anti = true;
    for (std::size_t a = 0; a < r.gens.size(); ++a) {
      squares = squares && r.gens[a] * r.gens[a] == id;
      for (std::size_t b = a + 1; b < r.gens.size(); ++b)
        anti = anti && r.gens[a] * r.gens[b] + r.gens[b] * r.gens[a] == zero;
    }
    rep.check("generator squares", squares);
    rep.check("anticommutation", anti);
    rep.check("faithful", is_faithful(r));
    auto unit = std::make_shared<const Signature<S>>();
    bool coherent = true;
    const std::size_t blades = std::size_t{1} << (2 * k);
    for (std::size_t mask = 0; mask < blades; ++mask)
      coherent = coherent &&
                 verify_trace_coherence(MV::blade(Blade::from_words({mask}), scalar_traits<S>::one(), unit), k, large);
    rep.check("trace coherence k=" + std::to_string(k) + " vs k=" + std::to_string(large) + " on " +
                  std::to_string(blades) + " blades",
              coherent);
    if (!rq_.expr.empty()) rep.check("trace coherence for the given element", verify_trace_coherence(operand(rq_.expr), k, large));
    return rep.finish();
  }

  int witness() {
    auto rows = witness_sequence<S>(rq_.n, FactorShape(rq_.m));
    const S& limit = rows.front().norm_after;
    bool non_continuous = !is_zero(limit);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const S nn = from_rational<S>(Rational(static_cast<long long>(r.n * r.n)));
      non_continuous = non_continuous && scalar_equal(r.norm_after, limit) &&
                       scalar_equal(S(r.norm_before * nn), rows.front().norm_before);
      if constexpr (!scalar_traits<S>::has_imaginary_unit)
        if (i > 0) non_continuous = non_continuous && r.norm_before < rows[i - 1].norm_before;
    }
    if (st_.json_out) {
      json js = json::array();
      for (const auto& r : rows)
        js.push_back({{"n", r.n}, {"norm_before", to_text(r.norm_before)}, {"norm_after", to_text(r.norm_after)}});
      std::cout << json{{"rows", js}, {"verdict", non_continuous ? "NON-CONTINUOUS" : "INCONCLUSIVE"},
                        {"limit", to_text(limit)}}
                       .dump()
                << '\n';
    } else {
      for (const auto& r : rows) std::cout << '(' << to_text(r.norm_before) << ", " << to_text(r.norm_after) << ")\n";
      if (non_continuous)
        std::cout << "NON-CONTINUOUS: ||b_n|| -> 0, ||phi(b_n)|| = " << to_text(limit) << '\n';
      else
        std::cout << "INCONCLUSIVE\n";
    }
    return non_continuous ? exit_ok : exit_failed;
  }

  const Request& rq_;
  const Settings& st_;
  typename MV::signature_ptr sig_;
};

int dispatch(const Request& rq, const Settings& st) {
  switch (st.domain) {
    case Domain::rational: return Runner<Rational>(rq, st).run();
    case Domain::gaussian: return Runner<Gaussian>(rq, st).run();
    case Domain::f64: return Runner<double>(rq, st).run();
    case Domain::c64: return Runner<Complex>(rq, st).run();
  }
  return exit_failed;
}

int exit_for(errc code) {
  switch (code) {
    case errc::syntax:
    case errc::unknown_atom:
    case errc::format: return exit_usage;
    default: return exit_failed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Clifford algebras and their tensor decompositions"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings st;
  Request rq;
  std::string domain_name = "rational";
  std::string config_path;

  app.add_option("--domain", domain_name, "Scalar domain: rational, gaussian, f64 or c64")
      ->check(CLI::IsMember({"rational", "gaussian", "f64", "c64"}));
  app.add_option("--sig", st.sig_overrides, "Signature entries k=q, comma separated")->delimiter(',');
  app.add_option("--sig-default", st.sig_default, "Signature value for generators without an entry");
  app.add_option("--config", config_path, "JSON file with \"domain\" and \"signature\" fields");
  app.add_flag("--json", st.json_out, "Emit JSON instead of text");

  auto add_expr = [&rq](CLI::App* sub, const char* help) { sub->add_option("expr", rq.expr, help)->required(); };
  auto add_doc = [&rq](CLI::App* sub, const char* help) { sub->add_option("input", rq.document, help)->required(); };

  std::vector<std::pair<CLI::App*, std::string>> leaves;
  auto leaf = [&leaves](CLI::App* parent, const char* name, const char* help, std::string key) {
    CLI::App* sub = parent->add_subcommand(name, help);
    leaves.emplace_back(sub, std::move(key));
    return sub;
  };

  add_expr(leaf(&app, "eval", "Print the canonical form of an expression", "eval"), "Expression");
  add_expr(leaf(&app, "trace", "Print the trace of an expression", "trace"), "Expression");
  add_expr(leaf(&app, "norm", "Print the squared trace norm of an expression", "norm"), "Expression");

  CLI::App* deriv = app.add_subcommand("deriv", "Derivations given by ad-sums");
  deriv->require_subcommand(1);
  {
    CLI::App* s = leaf(deriv, "apply", "Apply a finite derivation family to an expression", "deriv apply");
    add_doc(s, "Derivation JSON (inline, file or -)");
    add_expr(s, "Expression");
    add_doc(leaf(deriv, "extract", "Recover ad-sum coefficients from an action table", "deriv extract"),
            "Action table JSON (inline, file or -)");
    add_doc(leaf(deriv, "bogolyubov", "Derivation extending a skew map on V", "deriv bogolyubov"),
            "Skew map JSON (inline, file or -)");
    add_doc(leaf(deriv, "inner-witness", "Element u with ad(u) extending a skew map", "deriv inner-witness"),
            "Skew map JSON (inline, file or -)");
    add_doc(leaf(deriv, "restrict", "Skew map obtained by restricting a derivation to V", "deriv restrict"),
            "Derivation JSON (inline, file or -)");
  }

  CLI::App* autos = app.add_subcommand("auto", "Automorphisms");
  autos->require_subcommand(1);
  {
    CLI::App* s = leaf(autos, "bogolyubov", "Apply the automorphism induced by an orthogonal map", "auto bogolyubov");
    add_doc(s, "Orthogonal map JSON (inline, file or -)");
    add_expr(s, "Expression");
    CLI::App* c = leaf(autos, "conjugate", "Compute u^-1 a u", "auto conjugate");
    c->add_option("u", rq.u, "Unit u")->required();
    c->add_option("u_inv", rq.u_inv, "Inverse of u")->required();
    add_expr(c, "Expression a");
  }

  CLI::App* decomp = app.add_subcommand("decomp", "Tensor decomposition along a chain of even cuts");
  decomp->require_subcommand(1);
  for (auto [name, help] : {std::pair{"build", "Show the chain data c_i"}, std::pair{"check", "Verify the decomposition"},
                            std::pair{"rewrite", "Rewrite generators as products of factor elements"}}) {
    CLI::App* s = leaf(decomp, name, help, std::string("decomp ") + name);
    s->add_option("--cuts", rq.cuts, "Cut points n_1 < n_2 < ..., comma separated")->delimiter(',')->required();
    if (std::string(name) == "rewrite") s->add_option("--k", rq.k, "Rewrite only v_k")->check(CLI::PositiveNumber);
  }

  CLI::App* rep = app.add_subcommand("rep", "Matrix representations");
  rep->require_subcommand(1);
  {
    CLI::App* s = leaf(rep, "check", "Verify the representation on 2^k x 2^k matrices", "rep check");
    s->add_option("--k", rq.k, "Half the number of generators")->check(CLI::Range(1, 4));
    s->add_option("--large", rq.large_k, "Larger representation used for trace coherence")->check(CLI::Range(1, 4));
    s->add_option("--expr", rq.expr, "Also check trace coherence for this element");
  }

  {
    CLI::App* s = leaf(&app, "witness", "Norms of the discontinuity witness sequence", "witness");
    s->add_option("--n", rq.n, "Number of terms")->check(CLI::PositiveNumber);
    s->add_option("--m", rq.m, "Factor matrix size (even)")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: usage: " << e.what() << '\n';
    return exit_usage;
  }

  for (const auto& [sub, key] : leaves)
    if (sub->parsed()) rq.command = key;

  try {
    if (!config_path.empty()) {
      nlohmann::json cfg = load_json(config_path);
      require(cfg.is_object(), errc::format, "config must be a JSON object");
      if (cfg.contains("domain") && app.get_option("--domain")->count() == 0)
        domain_name = cfg.at("domain").get<std::string>();
      if (cfg.contains("signature")) st.config_signature = cfg.at("signature");
    }
    st.domain = parse_domain(domain_name);
    return dispatch(rq, st);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: format: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return exit_failed;
  }
}
