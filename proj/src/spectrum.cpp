#include "kirchhoff/spectrum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kirchhoff {

Spectrum::Spectrum(std::vector<std::pair<Rat, int>> pairs) {
  std::map<Rat, long> merged;
  for (const auto& [value, mult] : pairs) {
    if (mult < 0) throw std::invalid_argument("Spectrum: negative multiplicity");
    if (mult == 0) continue;
    merged[value] += mult;
  }
  pairs_.reserve(merged.size());
  for (auto it = merged.rbegin(); it != merged.rend(); ++it)
    pairs_.emplace_back(it->first, static_cast<int>(it->second));
}

int Spectrum::dimension() const {
  int d = 0;
  for (const auto& [value, mult] : pairs_) d += mult;
  return d;
}

Polynomial Spectrum::char_poly() const { return Polynomial::from_roots(pairs_); }

Rat Spectrum::product() const {
  Rat p = 1;
  for (const auto& [value, mult] : pairs_) p *= rat_pow(value, mult);
  return p;
}

Rat Spectrum::sum() const {
  Rat s = 0;
  for (const auto& [value, mult] : pairs_) s += value * mult;
  return s;
}

}  // namespace kirchhoff
