#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galileo/surface.hpp"
#include "galileo/translation.hpp"

namespace galileo {

inline constexpr int kDefaultGrid = 21;
inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr double kOdeTolerance = 1e-6;
/// A report whose failed fraction exceeds this is unusable.
inline constexpr double kMaxFailedFraction = 0.2;

struct Stats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double spread = 0.0;
  std::size_t count = 0;
};

enum class Verdict { constant, non_constant, unavailable };
std::string_view name_of(Verdict v);

struct GridPoint {
  double u = 0.0;
  double v = 0.0;
  bool operator==(const GridPoint&) const = default;
};

/// Where the maximum and the minimum were reached (first in row-major order).
struct Witness {
  GridPoint at_max;
  double max = 0.0;
  GridPoint at_min;
  double min = 0.0;
};

struct QuantityReport {
  Stats stats;
  Verdict verdict = Verdict::unavailable;
  std::optional<Witness> witness;  // set when non_constant
};

struct NodeSample {
  std::size_t i = 0, j = 0;
  GridPoint at;
  std::optional<Curvatures> curvatures;  // empty when the node failed
  std::optional<double> closed_K;
  std::optional<double> closed_H;
};

struct NodeFailure {
  std::size_t i = 0, j = 0;
  GridPoint at;
  std::string error;
};

struct CurvatureReport {
  int nu = 0, nv = 0;
  double tolerance = 0.0;
  Domain domain;
  std::vector<NodeSample> nodes;  // row-major, index i * nv + j
  std::vector<NodeFailure> failures;
  QuantityReport K, H_canonical, H_paper;
  // max |closed form - general machinery| when the family has closed forms
  std::optional<double> closed_K_residual;
  std::optional<double> closed_H_residual;
  bool usable = false;
};

/// Samples K, H_canonical and H_paper on an nu x nv grid over the domain.
/// Nodes that raise DegenerateError or EvalError are recorded as failures.
CurvatureReport sample(const Surface& s, int nu = kDefaultGrid, int nv = kDefaultGrid,
                       double tol = kDefaultTolerance);
CurvatureReport sample(const SurfaceFamily& family, int nu = kDefaultGrid, int nv = kDefaultGrid,
                       double tol = kDefaultTolerance);

// -- theorem certificates ------------------------------------------------------

enum class TheoremId { K_affine, H_affine, K_type3, H_type3, K_type4, H_type4_cmc, minimal_ruled };
std::string_view name_of(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

/// One quantitative claim: `value < bound` (or `value > bound` when `lower`).
struct CertificateCheck {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool lower = false;
  bool pass = false;
};

struct Certificate {
  TheoremId theorem = TheoremId::K_affine;
  FamilyKind family = FamilyKind::affine;
  std::vector<CertificateCheck> checks;
  bool pass = false;
  CurvatureReport report;
};

/// Which family kinds each theorem speaks about:
///   K_affine      constantK_type1 (K == K0); affine, type1_2_standard (flat)
///   H_affine      cmc_cylinder_* (H_paper == H0); parabolic_ruled (H_paper == 0)
///   K_type3       type3, type3_circle (flat)
///   H_type3       type3_circle (|H_paper| == |H0|, circle radius 1/|H0|)
///   K_type4       type4, type1_2_standard of type 2 (flat)
///   H_type4_cmc   type4_cmc_ode (H_paper == H0 plus the ODE certificates)
///   minimal_ruled parabolic_ruled (nontrivially minimal), ruled_type_C (minimal)
/// A mismatch throws PreconditionError.
Certificate certify_theorem(TheoremId id, const SurfaceFamily& family, int nu = kDefaultGrid,
                            int nv = kDefaultGrid);
Certificate certify_theorem(TheoremId id, const FamilyParams& params, std::optional<Domain> domain = {},
                            int nu = kDefaultGrid, int nv = kDefaultGrid);

// -- nonexistence probes -------------------------------------------------------

struct ProbeInfo {
  std::string id;
  std::string description;
  bool control = false;          // negative control: asserts constancy instead
  double min_spread = 0.0;       // lower bound on spread(K) and spread(H_paper)
  double max_control_spread = 0.0;
};

/// type4_minimal, type3_noncircle, type3_circle_control.
const std::vector<ProbeInfo>& probe_registry();

/// Probe family for `id`. A nonzero seed scales its coefficients by factors in
/// [0.75, 1.25]; seed 0 is the canonical instance. Throws PreconditionError on
/// an unknown id.
SurfaceFamily probe_family(std::string_view id, std::uint64_t seed = 0);

struct ProbeReport {
  ProbeInfo probe;
  double spread_K = 0.0;
  double spread_H = 0.0;
  double min_abs_H = 0.0;
  std::vector<CertificateCheck> checks;
  bool pass = false;
  CurvatureReport report;
};

ProbeReport probe_nonexistence(std::string_view id, int nu = kDefaultGrid, int nv = kDefaultGrid,
                               std::uint64_t seed = 0);

}  // namespace galileo
