#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "vpc/result.hpp"

namespace vpc {

// Nanosecond time/duration carried as signed 64-bit everywhere.
using Nanos = std::int64_t;

constexpr Nanos kMicrosecond = 1'000;
constexpr Nanos kMillisecond = 1'000'000;
constexpr Nanos kSecond = 1'000'000'000;

// Unique id per process endpoint (ICPS, VPC instance, VPCMO, registry, IR
// host, grandmaster). 0 is reserved as "unassigned".
using NodeId = std::uint32_t;
constexpr NodeId kUnassignedNode = 0;

enum class MessageLayer : std::uint8_t {
  kData = 0,
  kControl = 1,                // highest transmit priority
  kManagementOrchestration = 2 // reliable delivery required
};

enum class VpcRole : std::uint8_t {
  kActive = 0,
  kInactive = 1,
  kShadow = 2,   // pre-handover state of a new cluster member
  kReleased = 3  // never transmits
};

const char* to_string(VpcRole role);
const char* to_string(MessageLayer layer);

// Requirement tier pairing a cycle-time band with a jitter bound.
struct RtClassRequirement {
  int class_id;
  Nanos cycle_time_min;
  Nanos cycle_time_max;
  bool cycle_max_exclusive;  // class 3 demands cycle time strictly below 1 ms
  Nanos jitter_max;
};

// Class 1: remote control/monitoring. Class 2: mobile robotics/process
// control. Class 3: closed loop motion control.
inline constexpr RtClassRequirement kRtClasses[] = {
    {1, 10 * kMillisecond, 100 * kMillisecond, false, 1 * kSecond},
    {2, 1 * kMillisecond, 10 * kMillisecond, false, 1 * kMillisecond},
    {3, 0, 1 * kMillisecond, true, 1 * kMicrosecond},
};

// One request/response measurement taken at the ICPS.
struct CycleSample {
  std::uint32_t seq = 0;
  Nanos t_send = 0;       // sender clock
  Nanos t_recv = 0;       // sender clock
  Nanos cycle_time = 0;   // t_recv - t_send; 0 when missed
  NodeId responder = 0;   // 0 when missed
  bool missed = false;
};

// Aggregate over a run. Percentiles are nearest-rank over the ascending
// sort of non-missed samples; jitter is max - min (worst-case variation).
struct RunStats {
  std::size_t n = 0;  // non-missed samples
  Nanos median = 0;
  Nanos p25 = 0;
  Nanos p75 = 0;
  Nanos p9999 = 0;
  Nanos max = 0;
  Nanos min = 0;
  Nanos iqr = 0;
  Nanos outlier_low = 0;
  Nanos outlier_high = 0;
  std::size_t outlier_count = 0;
  Nanos jitter = 0;
  std::size_t missed_count = 0;
};

// Nearest-rank selection: 1-based rank of the q-quantile in a sorted list of
// n values, q given in basis points (1/10000). The rank is the smallest one
// strictly exceeding q*n, capped at n, so rank(9999bp, 10000) == 10000.
std::size_t nearest_rank(std::uint32_t q_basis_points, std::size_t n);

// Batch statistics over recorded samples. Missed samples count toward
// missed_count only. Errors with "no measurable samples" when nothing is
// measurable.
Result<RunStats> compute_stats(std::span<const CycleSample> samples);

// Every RT class whose worst case bounds admit these stats: class satisfied
// iff stats.max fits the cycle-time bound and stats.jitter fits the jitter
// bound. The lower cycle bound describes the demand band, not a failure
// condition, so it does not gate satisfaction.
std::set<int> classify_rt(const RunStats& stats);

}  // namespace vpc
