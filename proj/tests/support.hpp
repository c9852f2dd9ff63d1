#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vmrt/omega_builder.hpp"
#include "vmrt/variety.hpp"

namespace vmrt::testing {

inline ChartRef share(VarietyChart c) { return std::make_shared<const VarietyChart>(std::move(c)); }

/// Builtin spec with omega filled in (constructed when the catalog leaves it open).
/// Constructions are cached; the (3,3) one is the slow part of every suite.
inline VarietySpec resolved(const std::string& name) {
  static std::map<std::string, VarietySpec> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  VarietySpec spec = builtin_spec(name);
  if (!spec.omega) spec.omega = build_omega(*spec.chart).omega;
  return cache.emplace(name, spec).first->second;
}

/// Fixtures on which every identity must hold.
inline std::vector<std::string> isotropic_fixtures() {
  return {"veronese-2-3", "veronese-2-4", "veronese-3-3", "flat-conic", "linear-3", "v3-conic"};
}

/// Heisenberg group with S = P^1 = PW, chart (1, t).
inline ChartRef heisenberg_line_chart() {
  return share(VarietyChart("heisenberg-line", 1, PolyVec{MultiPoly(1), MultiPoly::variable(0)}, {"t"}));
}

inline Vec ints(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Vec nondegenerate_point(const VarietyChart& chart, SampleStream& stream) {
  Vec p = stream.next_vector(chart.param_dim());
  while (!frame_is_nondegenerate(chart, p)) p = stream.next_vector(chart.param_dim());
  return p;
}

}  // namespace vmrt::testing
