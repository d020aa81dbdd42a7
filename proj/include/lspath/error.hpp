#ifndef LSPATH_ERROR_HPP
#define LSPATH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lsp {

// Every failure carries a stable machine-readable kind (kebab-case) next to
// the human message; the CLI forwards the kind verbatim in its error object.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
  throw Error(kind, message);
}

namespace errkind {
inline constexpr const char* not_graded = "not-graded";
inline constexpr const char* no_unique_extremum = "no-unique-extremum";
inline constexpr const char* non_positive_bond = "non-positive-bond";
inline constexpr const char* redundant_cover = "redundant-cover";
inline constexpr const char* unknown_element = "unknown-element";
inline constexpr const char* not_comparable = "not-comparable";
inline constexpr const char* gcd_condition = "gcd-condition";
inline constexpr const char* interval_too_large = "interval-too-large";
inline constexpr const char* too_many_chains = "too-many-chains";
inline constexpr const char* too_large = "too-large";
inline constexpr const char* not_a_chain = "not-a-chain";
inline constexpr const char* not_an_ls_path = "not-an-ls-path";
inline constexpr const char* non_comparable_supports = "non-comparable-supports";
inline constexpr const char* width_one = "width-one";
inline constexpr const char* zero_path = "zero-path";
inline constexpr const char* zero_element = "zero-element";
inline constexpr const char* missing_value = "missing-value";
inline constexpr const char* missing_chain = "missing-chain";
inline constexpr const char* missing_entry = "missing-entry";
inline constexpr const char* non_standard_target = "non-standard-target";
inline constexpr const char* unsupported_type = "unsupported-type";
inline constexpr const char* not_dominant = "not-dominant";
inline constexpr const char* orbit_too_large = "orbit-too-large";
inline constexpr const char* malformed_pair = "malformed-pair";
inline constexpr const char* solve_failed = "solve-failed";
inline constexpr const char* bound_exceeded = "bound-exceeded";
inline constexpr const char* not_in_ring = "not-in-ring";
inline constexpr const char* parse_error = "parse-error";
inline constexpr const char* no_such_element = "no-such-element";
}  // namespace errkind

}  // namespace lsp

#endif
