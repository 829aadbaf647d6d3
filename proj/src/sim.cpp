#include "vpc/sim.hpp"

#include <cassert>

namespace vpc {

struct SimNet::NodeState {
  NodeId id = 0;
  std::unique_ptr<Actor> actor;          // null for mailbox nodes
  std::deque<Received> mailbox;
  bool alive = true;
  std::map<std::uint32_t, std::uint64_t> timer_gen;
  SimNet* net = nullptr;

  struct Context final : ActorContext {
    NodeState* n = nullptr;
    Nanos now_ns() const override { return n->net->now_; }
    NodeId self() const override { return n->id; }
    void send(NodeId dest, const WireMessage& msg) override {
      n->net->route(n->id, dest, msg, false);
    }
    void forward(NodeId dest, const WireMessage& msg) override {
      n->net->route(n->id, dest, msg, true);
    }
    void schedule(std::uint32_t timer_id, Nanos at_ns) override {
      n->net->set_timer(n->id, timer_id, at_ns);
    }
    void cancel(std::uint32_t timer_id) override {
      n->net->cancel_timer(n->id, timer_id);
    }
    bool spawn_local(NodeId node, std::unique_ptr<Actor> actor) override {
      if (n->net->find(node)) return false;
      n->net->add_actor(node, std::move(actor));
      return true;
    }
    void stop_self() override { n->net->deactivate(n->id); }
  };
  Context ctx;
};

SimNet::SimNet(Options opts) : opts_(opts), rng_(opts.seed) {}
SimNet::~SimNet() = default;

SimNet::NodeState* SimNet::find(NodeId node) const {
  auto it = nodes_.find(node);
  return it == nodes_.end() ? nullptr : it->second.get();
}

void SimNet::add_actor(NodeId node, std::unique_ptr<Actor> actor) {
  assert(!find(node));
  auto st = std::make_unique<NodeState>();
  st->id = node;
  st->actor = std::move(actor);
  st->net = this;
  st->ctx.n = st.get();
  NodeState* raw = st.get();
  nodes_[node] = std::move(st);
  raw->actor->start(raw->ctx);
}

void SimNet::add_mailbox(NodeId node) {
  assert(!find(node));
  auto st = std::make_unique<NodeState>();
  st->id = node;
  st->net = this;
  st->ctx.n = st.get();
  nodes_[node] = std::move(st);
}

void SimNet::crash(NodeId node) {
  if (NodeState* st = find(node)) {
    st->alive = false;
    st->timer_gen.clear();
  }
}

void SimNet::deactivate(NodeId node) { crash(node); }

bool SimNet::alive(NodeId node) const {
  NodeState* st = find(node);
  return st && st->alive;
}

Actor* SimNet::actor(NodeId node) const {
  NodeState* st = find(node);
  return st ? st->actor.get() : nullptr;
}

void SimNet::route(NodeId from, NodeId dest, const WireMessage& msg, bool local_forward) {
  // Round-trip through the codec so the in-process channel carries exactly
  // what the datagram channels would.
  auto bytes = encode(msg);
  assert(bytes.ok());
  auto decoded = decode(bytes.value());
  assert(decoded.ok());

  if (on_route) on_route(msg, from, dest, now_);

  Nanos delay = 0;
  if (!local_forward) {
    if (msg.layer == MessageLayer::kManagementOrchestration) {
      delay = opts_.mgmt_delay;  // lossless, ordered
    } else {
      if (plan_.partitioned(from, dest)) return;
      if (plan_.drops(msg.src, msg.msg_type, msg.seq)) return;
      delay = opts_.datagram_delay + plan_.delay_ns;
      if (opts_.datagram_jitter > 0) {
        delay += std::uniform_int_distribution<Nanos>(0, opts_.datagram_jitter)(rng_);
      }
    }
  }

  Event ev;
  ev.t = now_ + delay;
  ev.order = next_order_++;
  ev.kind = Event::kDeliver;
  ev.node = dest;
  ev.rx = Received{decoded.value(), from, ev.t};
  queue_.push(std::move(ev));
}

void SimNet::set_timer(NodeId node, std::uint32_t timer_id, Nanos at) {
  NodeState* st = find(node);
  if (!st || !st->alive) return;
  std::uint64_t gen = ++st->timer_gen[timer_id];
  Event ev;
  ev.t = at;
  ev.order = next_order_++;
  ev.kind = Event::kTimer;
  ev.node = node;
  ev.timer_id = timer_id;
  ev.timer_gen = gen;
  queue_.push(std::move(ev));
}

void SimNet::cancel_timer(NodeId node, std::uint32_t timer_id) {
  if (NodeState* st = find(node)) ++st->timer_gen[timer_id];
}

void SimNet::schedule_call(Nanos t, std::function<void()> fn) {
  Event ev;
  ev.t = t;
  ev.order = next_order_++;
  ev.kind = Event::kCall;
  ev.call = std::move(fn);
  queue_.push(std::move(ev));
}

void SimNet::dispatch(Event& ev) {
  now_ = std::max(now_, ev.t);
  switch (ev.kind) {
    case Event::kCall:
      ev.call();
      return;
    case Event::kDeliver: {
      NodeState* st = find(ev.node);
      if (!st || !st->alive) return;  // undeliverable
      if (st->actor) {
        st->actor->on_message(st->ctx, ev.rx);
      } else {
        st->mailbox.push_back(std::move(ev.rx));
      }
      return;
    }
    case Event::kTimer: {
      NodeState* st = find(ev.node);
      if (!st || !st->alive || !st->actor) return;
      auto it = st->timer_gen.find(ev.timer_id);
      if (it == st->timer_gen.end() || it->second != ev.timer_gen) return;  // superseded
      st->actor->on_timer(st->ctx, ev.timer_id);
      return;
    }
  }
}

bool SimNet::step() {
  if (queue_.empty()) return false;
  Event ev = queue_.top();
  queue_.pop();
  dispatch(ev);
  return true;
}

void SimNet::run_until(Nanos t) {
  while (!queue_.empty() && queue_.top().t <= t) {
    Event ev = queue_.top();
    queue_.pop();
    dispatch(ev);
  }
  now_ = std::max(now_, t);
}

std::optional<Received> SimNet::mailbox_receive(NodeId node, Nanos timeout) {
  NodeState* st = find(node);
  if (!st || !st->alive) return std::nullopt;
  const Nanos deadline = now_ + timeout;
  for (;;) {
    if (!st->mailbox.empty()) {
      Received rx = std::move(st->mailbox.front());
      st->mailbox.pop_front();
      return rx;
    }
    if (queue_.empty() || queue_.top().t > deadline) break;
    Event ev = queue_.top();
    queue_.pop();
    dispatch(ev);
  }
  now_ = std::max(now_, deadline);
  return std::nullopt;
}

namespace {
class InProcessEndpoint final : public Endpoint {
 public:
  InProcessEndpoint(SimNet& net, NodeId node) : net_(net), node_(node) {}
  Result<void> send(NodeId dest, const WireMessage& msg) override {
    auto bytes = encode(msg);
    if (!bytes.ok()) return bytes.error();
    net_.route(node_, dest, msg, false);
    return {};
  }
  std::optional<Received> receive(Nanos timeout) override {
    return net_.mailbox_receive(node_, timeout);
  }
  NodeId local() const override { return node_; }

 private:
  SimNet& net_;
  NodeId node_;
};
}  // namespace

std::unique_ptr<Endpoint> SimNet::open_endpoint(NodeId node) {
  if (!find(node)) add_mailbox(node);
  return std::make_unique<InProcessEndpoint>(*this, node);
}

}  // namespace vpc
