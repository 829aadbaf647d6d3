#include "vpc/domain.hpp"

#include <algorithm>

namespace vpc {

const char* to_string(VpcRole role) {
  switch (role) {
    case VpcRole::kActive: return "active";
    case VpcRole::kInactive: return "inactive";
    case VpcRole::kShadow: return "shadow";
    case VpcRole::kReleased: return "released";
  }
  return "?";
}

const char* to_string(MessageLayer layer) {
  switch (layer) {
    case MessageLayer::kData: return "data";
    case MessageLayer::kControl: return "control";
    case MessageLayer::kManagementOrchestration: return "mgmt";
  }
  return "?";
}

std::size_t nearest_rank(std::uint32_t q_basis_points, std::size_t n) {
  if (n == 0) return 0;
  // Integer-only: smallest rank r with r > q*n, i.e. floor(q_bp*n/10000)+1.
  std::size_t r = (static_cast<std::size_t>(q_basis_points) * n) / 10000 + 1;
  return std::min(r, n);
}

Result<RunStats> compute_stats(std::span<const CycleSample> samples) {
  std::vector<Nanos> cycles;
  cycles.reserve(samples.size());
  std::size_t missed = 0;
  for (const CycleSample& s : samples) {
    if (s.missed) {
      ++missed;
    } else {
      cycles.push_back(s.cycle_time);
    }
  }
  if (cycles.empty()) return make_error("no measurable samples");

  std::sort(cycles.begin(), cycles.end());
  const std::size_t n = cycles.size();

  RunStats st;
  st.n = n;
  st.missed_count = missed;
  st.min = cycles.front();
  st.max = cycles.back();
  st.p25 = cycles[nearest_rank(2500, n) - 1];
  st.median = cycles[nearest_rank(5000, n) - 1];
  st.p75 = cycles[nearest_rank(7500, n) - 1];
  st.p9999 = cycles[nearest_rank(9999, n) - 1];
  st.iqr = st.p75 - st.p25;
  st.jitter = st.max - st.min;
  // 1.5*iqr is a half-integer for odd iqr; stored bounds truncate toward
  // zero, the count below compares exactly on doubled values.
  st.outlier_low = st.p25 - (3 * st.iqr) / 2;
  st.outlier_high = st.p75 + (3 * st.iqr) / 2;
  for (Nanos c : cycles) {
    if (2 * c > 2 * st.p75 + 3 * st.iqr || 2 * c < 2 * st.p25 - 3 * st.iqr) {
      ++st.outlier_count;
    }
  }
  return st;
}

std::set<int> classify_rt(const RunStats& stats) {
  std::set<int> classes;
  for (const RtClassRequirement& rc : kRtClasses) {
    const bool cycle_ok = rc.cycle_max_exclusive ? stats.max < rc.cycle_time_max
                                                 : stats.max <= rc.cycle_time_max;
    if (cycle_ok && stats.jitter <= rc.jitter_max) classes.insert(rc.class_id);
  }
  return classes;
}

}  // namespace vpc
