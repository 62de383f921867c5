#pragma once

#include <stdexcept>
#include <string>

namespace wallforge {

/// Reason codes for domain errors raised by the exact-arithmetic layer.
enum class Errc {
  parse_error,        // malformed literal (decimals, bad denominator, ...)
  non_positive_t,     // stability parameter t <= 0
  not_in_cone,        // Im Z = 0 with Re Z >= 0: slope undefined
  rank_not_positive,  // operation requires ch0 > 0
  non_integral,       // value required to be an integer is not
  negative_length,    // zero-scheme length came out negative
  negative_radicand,  // wall radius squared is negative, no wall exists
  degenerate_wall,    // proportional class pair, wall is the whole half-plane
  invalid_argument,   // out-of-domain parameter (e.g. even d)
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace wallforge
