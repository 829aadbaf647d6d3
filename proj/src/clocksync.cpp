#include "vpc/clocksync.hpp"

#include <algorithm>
#include <cmath>

#include "vpc/wire.hpp"

namespace vpc {

Result<Nanos> estimate_offset(const ProbeTimes& t) {
  if (t.t4 < t.t1 || t.t3 < t.t2) return make_error("non-causal timestamps");
  return ((t.t2 - t.t1) + (t.t3 - t.t4)) / 2;
}

Result<OffsetSummary> sync_report(std::span<const ClockOffsetSample> samples) {
  if (samples.empty()) return make_error("no offset samples");
  std::vector<Nanos> offsets;
  offsets.reserve(samples.size());
  for (const auto& s : samples) offsets.push_back(s.offset);
  std::sort(offsets.begin(), offsets.end());

  OffsetSummary sum;
  sum.n = offsets.size();
  sum.min = offsets.front();
  sum.max = offsets.back();
  sum.median = offsets[nearest_rank(5000, offsets.size()) - 1];
  for (Nanos o : offsets) sum.max_abs = std::max<Nanos>(sum.max_abs, std::abs(o));
  return sum;
}

GrandmasterActor::GrandmasterActor(std::function<Nanos(Nanos)> remote_clock)
    : remote_clock_(std::move(remote_clock)) {}

void GrandmasterActor::on_message(ActorContext& ctx, const Received& rx) {
  if (rx.msg.msg_type != msg::kClockProbe) return;
  ByteReader r(rx.msg.payload);
  const std::uint64_t t1 = r.u64();
  if (!r.ok()) return;

  const Nanos remote_now = remote_clock_ ? remote_clock_(ctx.now_ns()) : ctx.now_ns();
  ByteWriter w;
  w.u64(t1);
  w.u64(static_cast<std::uint64_t>(remote_now));  // t2
  w.u64(static_cast<std::uint64_t>(remote_now));  // t3
  WireMessage reply;
  reply.layer = MessageLayer::kControl;
  reply.msg_type = msg::kClockProbeReply;
  reply.src = ctx.self();
  reply.seq = rx.msg.seq;
  reply.timestamp_ns = static_cast<std::uint64_t>(ctx.now_ns());
  reply.payload = w.take();
  ctx.send(rx.msg.src, reply);
}

namespace {
constexpr std::uint32_t kProbeTimer = 1;
}

ClockClientActor::ClockClientActor(NodeId grandmaster, SyncConfig cfg,
                                   std::function<Nanos(Nanos)> local_clock)
    : grandmaster_(grandmaster), cfg_(cfg), local_clock_(std::move(local_clock)) {}

void ClockClientActor::start(ActorContext& ctx) {
  ctx.schedule(kProbeTimer, ctx.now_ns() + cfg_.sync_interval);
}

void ClockClientActor::on_timer(ActorContext& ctx, std::uint32_t timer_id) {
  if (timer_id != kProbeTimer) return;
  ByteWriter w;
  w.u64(static_cast<std::uint64_t>(local(ctx.now_ns())));  // t1
  WireMessage probe;
  probe.layer = MessageLayer::kControl;
  probe.msg_type = msg::kClockProbe;
  probe.src = ctx.self();
  probe.seq = next_seq_++;
  probe.timestamp_ns = static_cast<std::uint64_t>(ctx.now_ns());
  probe.payload = w.take();
  ctx.send(grandmaster_, probe);
  ctx.schedule(kProbeTimer, ctx.now_ns() + cfg_.sync_interval);
}

void ClockClientActor::on_message(ActorContext& ctx, const Received& rx) {
  if (rx.msg.msg_type != msg::kClockProbeReply) return;
  ByteReader r(rx.msg.payload);
  ProbeTimes t;
  t.t1 = static_cast<Nanos>(r.u64());
  t.t2 = static_cast<Nanos>(r.u64());
  t.t3 = static_cast<Nanos>(r.u64());
  if (!r.ok()) return;
  t.t4 = local(ctx.now_ns());

  auto offset = estimate_offset(t);
  if (!offset.ok()) return;  // reordered or corrupt probe, drop
  ClockOffsetSample s;
  s.probe_seq = rx.msg.seq;
  s.offset = offset.value();
  s.round_trip = (t.t4 - t.t1) - (t.t3 - t.t2);
  s.t_probe = t.t1;
  samples_.push_back(s);
  while (samples_.size() > cfg_.window) samples_.pop_front();
}

}  // namespace vpc
