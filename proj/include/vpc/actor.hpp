#pragma once

#include <memory>

#include "vpc/domain.hpp"
#include "vpc/wire.hpp"

namespace vpc {

struct Received {
  WireMessage msg;
  NodeId from = 0;   // transport-level sender
  Nanos rx_time = 0; // receiver clock
};

class Actor;

// Services a driver provides to an actor. Two implementations exist: the
// deterministic in-process driver (virtual time) and the socket driver
// (real time). Actor code never sees which one it runs on.
class ActorContext {
 public:
  virtual ~ActorContext() = default;

  virtual Nanos now_ns() const = 0;
  virtual NodeId self() const = 0;

  // Layer-routed send: Data/Control ride the datagram channel, M&O the
  // reliable stream.
  virtual void send(NodeId dest, const WireMessage& msg) = 0;

  // Zero-delay handoff to a node hosted by the same driver/host.
  virtual void forward(NodeId dest, const WireMessage& msg) = 0;

  // One-shot absolute-time timer; scheduling an id again replaces the
  // previous deadline.
  virtual void schedule(std::uint32_t timer_id, Nanos at_ns) = 0;
  virtual void cancel(std::uint32_t timer_id) = 0;

  // Bring up another actor on this host (IR hosts deploying instances).
  virtual bool spawn_local(NodeId node, std::unique_ptr<Actor> actor) = 0;

  // Stop delivering messages/timers to this actor.
  virtual void stop_self() = 0;
};

class Actor {
 public:
  virtual ~Actor() = default;
  virtual void start(ActorContext& ctx) { (void)ctx; }
  virtual void on_message(ActorContext& ctx, const Received& rx) = 0;
  virtual void on_timer(ActorContext& ctx, std::uint32_t timer_id) = 0;
};

}  // namespace vpc
