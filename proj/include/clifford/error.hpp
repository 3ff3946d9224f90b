#ifndef CLIFFORD_ERROR_HPP
#define CLIFFORD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace clifford {

enum class errc {
  degenerate_form,
  domain_mismatch,
  domain_unsupported,
  out_of_range,
  unsupported_signature,
  contract_violation,
  not_an_ad_sum,
  parity,
  invariant,
  not_bogolyubov,
  not_orthogonal,
  not_inverse,
  invalid_chain,
  membership,
  precondition,
  invalid_automorphism,
  shape_mismatch,
  syntax,
  unknown_atom,
  format,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::degenerate_form: return "degenerate-form";
    case errc::domain_mismatch: return "domain-mismatch";
    case errc::domain_unsupported: return "domain-unsupported";
    case errc::out_of_range: return "out-of-range";
    case errc::unsupported_signature: return "unsupported-signature";
    case errc::contract_violation: return "contract-violation";
    case errc::not_an_ad_sum: return "not-an-ad-sum";
    case errc::parity: return "parity";
    case errc::invariant: return "invariant";
    case errc::not_bogolyubov: return "not-bogolyubov";
    case errc::not_orthogonal: return "not-orthogonal";
    case errc::not_inverse: return "not-inverse";
    case errc::invalid_chain: return "invalid-chain";
    case errc::membership: return "membership";
    case errc::precondition: return "precondition";
    case errc::invalid_automorphism: return "invalid-automorphism";
    case errc::shape_mismatch: return "shape-mismatch";
    case errc::syntax: return "syntax";
    case errc::unknown_atom: return "unknown-atom";
    case errc::format: return "format";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch on the category without parsing text.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace clifford

#endif  // CLIFFORD_ERROR_HPP
