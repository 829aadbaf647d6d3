#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vpc/actor.hpp"
#include "vpc/result.hpp"
#include "vpc/wire.hpp"

namespace vpc {

enum class VpfMode : std::uint8_t { kCyclic = 0, kAcyclic = 1 };

// Closed-world function kinds; new behavior extends this enum.
enum class VpfKind : std::uint8_t {
  kInvert = 0,
  kIdentity = 1,
  kRisingEdgeCounter = 2,
};

struct VpfDescriptor {
  std::uint32_t vpf_id = 0;
  std::uint32_t version = 0;
  VpfMode mode = VpfMode::kCyclic;
  VpfKind kind = VpfKind::kIdentity;
  std::map<std::string, std::string> params;

  bool operator==(const VpfDescriptor&) const = default;
};

struct VpfState {
  std::uint64_t counter = 0;
  std::uint8_t last_input = 0;

  bool operator==(const VpfState&) const = default;
};

// Pure transfer-function step over the binary signal domain. Invert and
// Identity leave the counter untouched; RisingEdgeCounter increments it on
// each 0 -> 1 transition. state.last_input always tracks the input.
Result<std::uint8_t> apply_vpf(const VpfDescriptor& desc, VpfState& state, std::uint8_t input);

// Wire encoding: vpf_id u32 | version u32 | mode u8 | kind u8 |
// param-count u8 | per param key str8, value str8.
std::vector<std::uint8_t> encode_descriptor(const VpfDescriptor& d);
void encode_descriptor(ByteWriter& w, const VpfDescriptor& d);
Result<VpfDescriptor> decode_descriptor(ByteReader& r);
Result<VpfDescriptor> decode_descriptor(std::span<const std::uint8_t> data);

// Versioned, immutable store. Entries are keyed by (vpf_id, version);
// re-putting the same key with different content is a conflict. When a path
// is given the registry is backed by an append-only record file reloaded at
// startup.
class VpfRegistry {
 public:
  VpfRegistry() = default;
  static Result<VpfRegistry> open(const std::string& path);

  Result<void> put(const VpfDescriptor& d);
  // version 0 is the get-latest sentinel.
  Result<VpfDescriptor> get(std::uint32_t vpf_id, std::uint32_t version) const;
  std::vector<std::uint32_t> versions(std::uint32_t vpf_id) const;
  std::size_t size() const { return entries_.size(); }

 private:
  Result<void> append_record(const VpfDescriptor& d);

  std::map<std::pair<std::uint32_t, std::uint32_t>, VpfDescriptor> entries_;
  std::string path_;  // empty = in-memory only
};

// M&O service wrapper. AssignVpf with the request flag is a lookup
// (payload: vpf_id u32 | version u32); without it, a store. Replies carry
// the response flag, or the error flag with a str16 detail.
class RegistryActor final : public Actor {
 public:
  explicit RegistryActor(VpfRegistry registry) : registry_(std::move(registry)) {}
  void on_message(ActorContext& ctx, const Received& rx) override;
  void on_timer(ActorContext&, std::uint32_t) override {}

  const VpfRegistry& registry() const { return registry_; }

 private:
  VpfRegistry registry_;
};

}  // namespace vpc
