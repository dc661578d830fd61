#pragma once

#include <vector>

#include "burstforge/image.hpp"

namespace burstforge {

// Overall weights energy: per-frame sum of its FBA weight map,
//   E_t = sum_f |v_bar_t(f)|^p / sum_i |v_bar_i(f)|^p
// with v_bar the sigma_s-smoothed channel-mean magnitude. The energies sum
// to h*w over the burst; a sharper frame captures more of it.
std::vector<double> owe_scores(const std::vector<ImageF>& burst, double p,
                               double sigma_s);

}  // namespace burstforge
