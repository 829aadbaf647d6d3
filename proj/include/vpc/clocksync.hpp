#pragma once

#include <deque>
#include <functional>
#include <vector>

#include "vpc/actor.hpp"
#include "vpc/domain.hpp"
#include "vpc/result.hpp"

namespace vpc {

// Two-way time transfer offset estimation between a node and a grandmaster.
// Offsets are reported, never applied: cycle times are measured on a single
// clock at the ICPS, so sync accuracy does not enter their correctness.

struct ClockOffsetSample {
  std::uint32_t probe_seq = 0;
  Nanos offset = 0;      // remote - local, signed
  Nanos round_trip = 0;
  Nanos t_probe = 0;     // local clock at probe send
};

struct SyncConfig {
  Nanos sync_interval = 31'250'000;  // 31.25 ms (2^-5 s)
  std::size_t window = 10'000;       // samples retained
};

struct ProbeTimes {
  Nanos t1 = 0;  // probe send, local clock
  Nanos t2 = 0;  // remote receive
  Nanos t3 = 0;  // remote reply send
  Nanos t4 = 0;  // reply receive, local clock
};

// ((t2 - t1) + (t3 - t4)) / 2, integer, rounding toward zero.
Result<Nanos> estimate_offset(const ProbeTimes& t);

struct OffsetSummary {
  std::size_t n = 0;
  Nanos max_abs = 0;
  Nanos median = 0;
  Nanos min = 0;
  Nanos max = 0;
};

Result<OffsetSummary> sync_report(std::span<const ClockOffsetSample> samples);

// Answers every ClockProbe with a ClockProbeReply carrying its receive and
// transmit timestamps on the remote clock. remote_clock maps driver time to
// the grandmaster's clock; tests inject skew through it.
class GrandmasterActor final : public Actor {
 public:
  explicit GrandmasterActor(std::function<Nanos(Nanos)> remote_clock = {});
  void on_message(ActorContext& ctx, const Received& rx) override;
  void on_timer(ActorContext&, std::uint32_t) override {}

 private:
  std::function<Nanos(Nanos)> remote_clock_;
};

// Probes the grandmaster on a fixed schedule and keeps a sliding window of
// offset samples.
class ClockClientActor final : public Actor {
 public:
  ClockClientActor(NodeId grandmaster, SyncConfig cfg = {},
                   std::function<Nanos(Nanos)> local_clock = {});
  void start(ActorContext& ctx) override;
  void on_message(ActorContext& ctx, const Received& rx) override;
  void on_timer(ActorContext& ctx, std::uint32_t timer_id) override;

  const std::deque<ClockOffsetSample>& samples() const { return samples_; }
  std::vector<ClockOffsetSample> sample_vector() const {
    return {samples_.begin(), samples_.end()};
  }

 private:
  Nanos local(Nanos t) const { return local_clock_ ? local_clock_(t) : t; }

  NodeId grandmaster_;
  SyncConfig cfg_;
  std::function<Nanos(Nanos)> local_clock_;
  std::uint32_t next_seq_ = 1;
  std::deque<ClockOffsetSample> samples_;
};

}  // namespace vpc
