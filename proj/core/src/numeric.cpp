#include "fusion_forge/numeric.hpp"

namespace fusion_forge {

bool to_rational_angle(Complex z, RationalAngle& out, std::int64_t max_den, double tol) {
  if (std::abs(std::abs(z) - 1.0) > tol) return false;
  double turns = std::arg(z) / (2.0 * std::numbers::pi);
  if (turns < 0) turns += 1.0;
  for (std::int64_t den = 1; den <= max_den; ++den) {
    std::int64_t num = std::llround(turns * static_cast<double>(den)) % den;
    if (near(root_of_unity(num, den), z, tol)) {
      out = {num, den};
      return true;
    }
  }
  return false;
}

}  // namespace fusion_forge
