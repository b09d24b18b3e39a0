#include "fusion_forge/twisted_double.hpp"

#include <sstream>

#include "fusion_forge/errors.hpp"

namespace fusion_forge {

EquivariantCategory build_double(const Cocycle3& omega, const BuildOptions& options) {
  const auto report = validate(omega, options.tol);
  if (!report) {
    std::ostringstream os;
    os << "omega fails the 3-cocycle identities at " << report.violation_count << " points";
    throw ValidationFailure(os.str());
  }
  return build_category(adjoint_action_data(omega, options.tol), options);
}

CheckResult verify_braided_commutativity(const FusionRing& ring) {
  CheckResult result("comm");
  const int r = ring.rank();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.N(i, j, k) != ring.N(j, i, k)) {
          result.passed = false;
          ++result.failures;
          if (result.witnesses.size() < 8) result.witnesses.push_back({i, j, k});
        }
  return result;
}

}  // namespace fusion_forge
