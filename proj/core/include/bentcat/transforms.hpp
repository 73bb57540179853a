#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bentcat/boolean_function.hpp"

namespace bentcat {

/// W_f(w) = sum_x (-1)^(f(x) + w.x), indexed by w under the Point encoding.
struct WalshSpectrum {
  int n_vars = 0;
  std::vector<std::int64_t> values;

  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

enum class SpectrumTag { Bent, SemiBent, FiveValued, Other };

struct SpectrumClass {
  SpectrumTag tag = SpectrumTag::Other;
  /// Distinct absolute Walsh values, ascending.
  std::vector<std::int64_t> value_set;
};

const char* to_string(SpectrumTag tag) noexcept;

/// Unnormalized in-place Walsh-Hadamard butterfly. size must be a power of two.
void fwht(std::span<std::int64_t> values);

WalshSpectrum walsh_transform(const BooleanFunction& f);

/// Bent: n even and every |W| = 2^(n/2).
/// SemiBent: |W| in {0, 2^e} with e = (n+1)/2 for odd n, (n+2)/2 for even n.
/// FiveValued: n even, |W| in {0, 2^(n/2), 2^(n/2+1)} with all three present.
SpectrumClass classify_spectrum(const WalshSpectrum& spectrum);

bool is_bent(const BooleanFunction& f);

/// The dual f* defined by W_f(u) = 2^(n/2) (-1)^(f*(u)). Throws NotBent.
BooleanFunction dual(const BooleanFunction& f);

/// sum_x (-1)^(g(x) + g(x+b)) for every b, computed through the spectrum.
std::vector<std::int64_t> autocorrelation(const BooleanFunction& g);

}  // namespace bentcat
