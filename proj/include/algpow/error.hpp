#ifndef ALGPOW_ERROR_HPP
#define ALGPOW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace algpow {

// All failures raised by the library carry a stable machine-readable code
// (used verbatim in CLI JSON output) plus a human message.
class Error : public std::runtime_error {
  public:
    Error(std::string code, std::string const & message)
        : std::runtime_error(message)
        , code_(std::move(code))
    {}
    std::string const & code() const noexcept { return code_; }

  private:
    std::string code_;
};

namespace errc {
inline constexpr char const * degenerate_input = "degenerate_input";
inline constexpr char const * precondition = "precondition";
inline constexpr char const * parse = "parse_error";
inline constexpr char const * mixed_base = "mixed_base";
inline constexpr char const * not_invertible = "not_invertible";
inline constexpr char const * precision_cap = "precision_cap";
inline constexpr char const * reducible = "reducible";
inline constexpr char const * irreducibility_inconclusive = "irreducibility_inconclusive";
inline constexpr char const * singular_basis = "singular_basis";
inline constexpr char const * not_algebraic_integer = "not_algebraic_integer";
inline constexpr char const * outside_field = "outside_field";
inline constexpr char const * outside_module = "outside_complementary_module";
inline constexpr char const * non_integral_trace = "non_integral_trace";
inline constexpr char const * wrong_kind = "wrong_kind";
inline constexpr char const * no_denominator = "no_admissible_denominator";
} // namespace errc

} // namespace algpow

#endif /* ALGPOW_ERROR_HPP */
