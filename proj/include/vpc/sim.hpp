#pragma once

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <queue>
#include <random>
#include <vector>

#include "vpc/actor.hpp"
#include "vpc/transport.hpp"

namespace vpc {

// Deterministic discrete-event driver for the in-process channel. All nodes
// (actors or plain mailboxes) share one virtual clock; events are processed
// in (time, insertion) order, so a run is a pure function of its inputs and
// the seed.
class SimNet {
 public:
  struct Options {
    Nanos datagram_delay = 150 * kMicrosecond;   // per hop
    Nanos datagram_jitter = 50 * kMicrosecond;   // uniform [0, jitter]
    Nanos mgmt_delay = 200 * kMicrosecond;       // reliable stream, fixed
    std::uint64_t seed = 1;
  };

  explicit SimNet(Options opts = {});
  ~SimNet();

  // Nodes. Actors get start() immediately at the current virtual time.
  void add_actor(NodeId node, std::unique_ptr<Actor> actor);
  void add_mailbox(NodeId node);
  // Crash-stop fault: no further deliveries or timers; the actor object is
  // kept for end-of-run inspection.
  void crash(NodeId node);
  bool alive(NodeId node) const;
  Actor* actor(NodeId node) const;

  void set_fault_plan(FaultPlan plan) { plan_ = std::move(plan); }
  FaultPlan& fault_plan() { return plan_; }

  // Called once per routed message, before fault evaluation.
  std::function<void(const WireMessage&, NodeId from, NodeId to, Nanos t)> on_route;

  Nanos now() const { return now_; }
  void run_until(Nanos t);
  bool step();  // process one event; false if queue empty

  // Run fn at virtual time t (test hook for fault injection).
  void schedule_call(Nanos t, std::function<void()> fn);

  // Driver internals used by the per-node context and endpoint.
  void route(NodeId from, NodeId dest, const WireMessage& msg, bool local_forward);
  void set_timer(NodeId node, std::uint32_t timer_id, Nanos at);
  void cancel_timer(NodeId node, std::uint32_t timer_id);
  void deactivate(NodeId node);

  // Endpoint-style access for a mailbox node: advance virtual time until a
  // message is deliverable or the timeout elapses.
  std::optional<Received> mailbox_receive(NodeId node, Nanos timeout);

  std::unique_ptr<Endpoint> open_endpoint(NodeId node);

 private:
  struct NodeState;
  struct Event {
    Nanos t = 0;
    std::uint64_t order = 0;
    enum Kind { kDeliver, kTimer, kCall } kind = kDeliver;
    NodeId node = 0;
    std::uint32_t timer_id = 0;
    std::uint64_t timer_gen = 0;
    Received rx;
    std::function<void()> call;
  };
  struct EventAfter {
    bool operator()(const Event& a, const Event& b) const {
      if (a.t != b.t) return a.t > b.t;
      return a.order > b.order;
    }
  };

  void dispatch(Event& ev);
  NodeState* find(NodeId node) const;

  Options opts_;
  Nanos now_ = 0;
  std::uint64_t next_order_ = 0;
  std::mt19937_64 rng_;
  FaultPlan plan_;
  std::map<NodeId, std::unique_ptr<NodeState>> nodes_;
  std::priority_queue<Event, std::vector<Event>, EventAfter> queue_;
};

}  // namespace vpc
