#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "vpc/actor.hpp"
#include "vpc/domain.hpp"
#include "vpc/result.hpp"
#include "vpc/wire.hpp"

namespace vpc {

enum class ChannelKind {
  kDatagram,   // UDP unicast, one message per datagram
  kRawFrame,   // Ethernet frames, EtherType 0x88B5; needs link-layer access
  kInProcess,  // deterministic, supports fault injection
};

// Fault injection for the in-process channel. Applies to Data/Control
// datagrams only; the reliable M&O stream is never touched.
struct FaultPlan {
  std::function<bool(NodeId src, std::uint8_t msg_type, std::uint32_t seq)> drop_filter;
  Nanos delay_ns = 0;
  std::set<std::pair<NodeId, NodeId>> partitions;  // unordered pairs

  bool drops(NodeId src, std::uint8_t msg_type, std::uint32_t seq) const {
    return drop_filter && drop_filter(src, msg_type, seq);
  }
  bool partitioned(NodeId a, NodeId b) const {
    return partitions.count({std::min(a, b), std::max(a, b)}) > 0;
  }
  bool empty() const { return !drop_filter && delay_ns == 0 && partitions.empty(); }
};

// One endpoint per node: Data/Control sends are best-effort datagrams, M&O
// sends ride a reliable ordered stream of the same wire format.
class Endpoint {
 public:
  virtual ~Endpoint() = default;
  virtual Result<void> send(NodeId dest, const WireMessage& msg) = 0;
  virtual std::optional<Received> receive(Nanos timeout) = 0;
  virtual NodeId local() const = 0;
};

struct PeerAddress {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;  // UDP data/control port; M&O TCP is port + 1
  std::string site;
};

// Static NodeId -> address mapping; nodes absent from the table get a
// loopback address with a port derived from the id.
struct PeersTable {
  std::map<NodeId, PeerAddress> peers;
  std::uint16_t udp_port_base = 15000;

  PeerAddress lookup(NodeId node) const {
    auto it = peers.find(node);
    if (it != peers.end()) return it->second;
    return PeerAddress{"127.0.0.1", static_cast<std::uint16_t>(udp_port_base + 2 * node), ""};
  }
};

}  // namespace vpc
