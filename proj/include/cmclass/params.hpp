#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cmclass {

/// Segre product of K[X_1..X_m], K[Y_1..Y_n], K[Z_1..Z_p].
struct Segre3Params {
  int m = 2;
  int n = 2;
  int p = 2;

  /// Throws std::invalid_argument unless m, n, p >= 2.
  void validate() const;
  std::string to_string() const;
  friend auto operator<=>(const Segre3Params&, const Segre3Params&) = default;
};

/// K[X_1..X_m]^(c) # K[Y_1..Y_n]^(d) with gcd(c, d) = 1.
struct Veronese2Params {
  int m = 1;
  int n = 1;
  int c = 1;
  int d = 1;

  /// Throws std::invalid_argument unless m, n, c, d >= 1 and gcd(c, d) = 1.
  void validate() const;
  std::string to_string() const;
  friend auto operator<=>(const Veronese2Params&, const Veronese2Params&) = default;
};

/// Class label (i, j) of the module M_(i,j) = R1 # R2(-i) # R3(-j).
struct Label2 {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend auto operator<=>(const Label2&, const Label2&) = default;
};

}  // namespace cmclass
