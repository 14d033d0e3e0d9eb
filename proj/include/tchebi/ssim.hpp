#pragma once

#include "tchebi/image.hpp"

namespace tchebi {

// Mean structural similarity over the valid (fully windowed) region, with the
// standard 11x11 Gaussian window (sigma 1.5) and stabilizers C1 = (0.01*255)^2,
// C2 = (0.03*255)^2. Images must be at least 11x11 and equally sized.
double ssim(const GrayImage& reference, const GrayImage& test);

}  // namespace tchebi
