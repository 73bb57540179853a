#include "bentcat/transforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "bentcat/errors.hpp"

namespace bentcat {

const char* to_string(SpectrumTag tag) noexcept {
  switch (tag) {
    case SpectrumTag::Bent:
      return "Bent";
    case SpectrumTag::SemiBent:
      return "SemiBent";
    case SpectrumTag::FiveValued:
      return "FiveValued";
    case SpectrumTag::Other:
      break;
  }
  return "Other";
}

void fwht(std::span<std::int64_t> values) {
  const std::size_t size = values.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("transform length must be a power of two");
  }
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const std::int64_t u = values[i];
        const std::int64_t v = values[i + half];
        values[i] = u + v;
        values[i + half] = u - v;
      }
    }
  }
}

namespace {

std::vector<std::int64_t> signs(const BooleanFunction& f) {
  std::vector<std::int64_t> out(f.size());
  for (Point x = 0; x < f.size(); ++x) out[x] = f[x] ? -1 : 1;
  return out;
}

}  // namespace

WalshSpectrum walsh_transform(const BooleanFunction& f) {
  WalshSpectrum s{f.n_vars(), signs(f)};
  fwht(s.values);
  return s;
}

SpectrumClass classify_spectrum(const WalshSpectrum& spectrum) {
  SpectrumClass out;
  for (auto v : spectrum.values) out.value_set.push_back(std::llabs(v));
  std::sort(out.value_set.begin(), out.value_set.end());
  out.value_set.erase(std::unique(out.value_set.begin(), out.value_set.end()),
                      out.value_set.end());

  const int n = spectrum.n_vars;
  const auto within = [&](std::initializer_list<std::int64_t> allowed) {
    return std::all_of(out.value_set.begin(), out.value_set.end(),
                       [&](std::int64_t v) {
                         return std::find(allowed.begin(), allowed.end(), v) !=
                                allowed.end();
                       });
  };

  if (n % 2 == 0) {
    const std::int64_t half = std::int64_t{1} << (n / 2);
    if (out.value_set.size() == 1 && out.value_set.front() == half) {
      out.tag = SpectrumTag::Bent;
      return out;
    }
  }
  const int semi_exponent = n % 2 == 1 ? (n + 1) / 2 : (n + 2) / 2;
  if (semi_exponent <= n && within({0, std::int64_t{1} << semi_exponent})) {
    out.tag = SpectrumTag::SemiBent;
    return out;
  }
  if (n % 2 == 0 && n >= 2) {
    const std::int64_t half = std::int64_t{1} << (n / 2);
    if (out.value_set.size() >= 3 && within({0, half, 2 * half})) {
      out.tag = SpectrumTag::FiveValued;
      return out;
    }
  }
  out.tag = SpectrumTag::Other;
  return out;
}

bool is_bent(const BooleanFunction& f) {
  if (f.n_vars() % 2 != 0) return false;
  return classify_spectrum(walsh_transform(f)).tag == SpectrumTag::Bent;
}

BooleanFunction dual(const BooleanFunction& f) {
  const auto spectrum = walsh_transform(f);
  if (classify_spectrum(spectrum).tag != SpectrumTag::Bent) {
    throw NotBent("dual requested for a function that is not bent");
  }
  BooleanFunction out(f.n_vars());
  for (Point u = 0; u < f.size(); ++u) {
    if (spectrum.values[u] < 0) out.set(u, true);
  }
  return out;
}

std::vector<std::int64_t> autocorrelation(const BooleanFunction& g) {
  auto values = signs(g);
  fwht(values);
  for (auto& v : values) v *= v;
  fwht(values);
  const int shift = g.n_vars();
  for (auto& v : values) v >>= shift;
  return values;
}

}  // namespace bentcat
