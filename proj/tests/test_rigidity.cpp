#include <doctest.h>

#include "szego/errors.hpp"
#include "szego/rigidity.hpp"

using namespace szego;

namespace {
// sup defect for q = 0.3, k = 1 on the 32-point spiral (radius 0.9) and 256
// boundary nodes, from the first run of this configuration.
constexpr double kOffCenterDefect = 0.25464790894703304;
}  // namespace

TEST_CASE("centered puncture is the equality case") {
  const ConformalMap id = ConformalMap::identity();
  const auto z = default_interior_samples(id);
  for (int k = 1; k <= 4; ++k) {
    const auto r = ks_defect({cd(0)}, {k}, id, 256, z);
    CHECK(r.sup_defect <= 1e-12);
    CHECK(r.interior_samples == 32);
    CHECK(r.boundary_nodes == 256);
  }
  CHECK(ks_defect({}, {}, id, 256, z).sup_defect <= 1e-13);
}

TEST_CASE("off-center puncture breaks equality") {
  const auto rows = rigidity_scan({cd(0), cd(0.1), cd(0.2), cd(0.3)}, 1, 256);
  CHECK(rows[0].sup_defect <= 1e-12);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].sup_defect > 1e-6);
  CHECK(rows[3].sup_defect == doctest::Approx(kOffCenterDefect).epsilon(0.10));
  CHECK(rows[3].antisymmetry_defect > 1e-6);
  CHECK(rows[0].antisymmetry_defect <= 1e-12);
}

TEST_CASE("order zero ignores the puncture") {
  for (const auto& r : rigidity_scan({cd(0.1), cd(0.3), cd(-0.2, 0.4)}, 0, 256)) CHECK(r.sup_defect <= 1e-12);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(rigidity_scan({cd(1.0)}, 1, 64), invalid_input_error);
  CHECK_THROWS_AS(ks_defect({cd(0)}, {1, 2}, ConformalMap::identity(), 64, {cd(0.5)}), invalid_input_error);
}
