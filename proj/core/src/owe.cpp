#include "burstforge/owe.hpp"

#include <cmath>

#include "burstforge/error.hpp"
#include "burstforge/fba.hpp"
#include "burstforge/parallel.hpp"

namespace burstforge {

std::vector<double> owe_scores(const std::vector<ImageF>& burst, double p,
                               double sigma_s) {
  if (burst.empty()) throw ParameterError("owe_scores: empty burst");
  for (const auto& frame : burst)
    if (!frame.same_shape(burst[0]))
      throw DimensionError("owe_scores: frames have mismatched shapes");

  std::vector<MagnitudeMap> mags(burst.size());
  parallel_for(burst.size(), [&](std::size_t t) {
    mags[t] = smoothed_mean_magnitude(fft2(burst[t]), sigma_s);
  });
  const std::vector<MagnitudeMap> weights = fba_weights(mags, p);

  std::vector<double> energies(burst.size(), 0.0);
  for (std::size_t t = 0; t < weights.size(); ++t)
    for (double w : weights[t].values) energies[t] += w;
  return energies;
}

}  // namespace burstforge
