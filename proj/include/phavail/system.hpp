#pragma once

#include <span>
#include <string>
#include <vector>

#include "phavail/ctmc.hpp"
#include "phavail/lindley.hpp"

namespace phavail {

enum class SystemStructure { Single, Series, Parallel };

struct SystemComponent {
  std::string label;
  ComponentParams params;
};

/// A named system: one component, or several independent components in
/// series or parallel (one repairman per component).
struct SystemModel {
  std::string name;
  SystemStructure structure = SystemStructure::Single;
  std::vector<SystemComponent> components;

  /// Throws EmptySystem / NonPositiveRate / Error on structural violations.
  void check() const;
};

/// Long-run availability of a series arrangement: product of per-component
/// steady-state availabilities under each component's law.
double steady_state_series(std::span<const ComponentParams> components);

/// Long-run availability of a parallel arrangement:
/// 1 - prod(1 - A_inf_i).
double steady_state_parallel(std::span<const ComponentParams> components);

enum class CurveKind { ClosedForm, NumericTransient, MonteCarlo };

/// Availability values over a time grid, tagged with how they were produced.
struct AvailabilityCurve {
  std::vector<double> times;
  std::vector<double> values;
  CurveKind provenance = CurveKind::ClosedForm;
};

/// System availability on a grid under component independence: product of
/// component curves for series, complement-product for parallel.
AvailabilityCurve system_availability_curve(const SystemModel& model,
                                            std::span<const double> grid);

/// Disjoint up/down state-index sets over a product-space chain.
struct StateClassification {
  std::vector<int> up;
  std::vector<int> down;
};

/// Joint chain of independent components with separate repairmen, built as
/// the Kronecker sum of per-component generators. Lindley components
/// contribute 4 states (E0, G0, G1, F), exponential components 2 (up, down).
/// State ordering is lexicographic with the first component most
/// significant.
struct ProductSpace {
  GeneratorMatrix generator;
  StateDistribution initial;
  StateClassification series;    ///< up iff no component failed
  StateClassification parallel;  ///< down iff every component failed
};

ProductSpace product_space_generator(std::span<const ComponentParams> components);

}  // namespace phavail
