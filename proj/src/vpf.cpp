#include "vpc/vpf.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace vpc {

Result<std::uint8_t> apply_vpf(const VpfDescriptor& desc, VpfState& state, std::uint8_t input) {
  if (input > 1) return make_error("domain violation");
  std::uint8_t output = input;
  switch (desc.kind) {
    case VpfKind::kInvert:
      output = static_cast<std::uint8_t>(1 - input);
      break;
    case VpfKind::kIdentity:
      output = input;
      break;
    case VpfKind::kRisingEdgeCounter:
      if (state.last_input == 0 && input == 1) ++state.counter;
      output = input;
      break;
    default:
      return make_error("unknown vpf kind");
  }
  state.last_input = input;
  return output;
}

void encode_descriptor(ByteWriter& w, const VpfDescriptor& d) {
  w.u32(d.vpf_id);
  w.u32(d.version);
  w.u8(static_cast<std::uint8_t>(d.mode));
  w.u8(static_cast<std::uint8_t>(d.kind));
  w.u8(static_cast<std::uint8_t>(d.params.size()));
  for (const auto& [k, v] : d.params) {
    w.str8(k);
    w.str8(v);
  }
}

std::vector<std::uint8_t> encode_descriptor(const VpfDescriptor& d) {
  ByteWriter w;
  encode_descriptor(w, d);
  return w.take();
}

Result<VpfDescriptor> decode_descriptor(ByteReader& r) {
  VpfDescriptor d;
  d.vpf_id = r.u32();
  d.version = r.u32();
  d.mode = static_cast<VpfMode>(r.u8());
  d.kind = static_cast<VpfKind>(r.u8());
  const std::uint8_t count = r.u8();
  for (std::uint8_t i = 0; i < count; ++i) {
    std::string k = r.str8();
    std::string v = r.str8();
    d.params[k] = v;
  }
  if (!r.ok()) return make_error("bad descriptor encoding");
  return d;
}

Result<VpfDescriptor> decode_descriptor(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  return decode_descriptor(r);
}

Result<VpfRegistry> VpfRegistry::open(const std::string& path) {
  VpfRegistry reg;
  reg.path_ = path;
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return reg;  // fresh store
  for (;;) {
    std::uint8_t len_buf[4];
    if (!in.read(reinterpret_cast<char*>(len_buf), 4)) break;
    const std::uint32_t len = (std::uint32_t(len_buf[0]) << 24) | (std::uint32_t(len_buf[1]) << 16) |
                              (std::uint32_t(len_buf[2]) << 8) | std::uint32_t(len_buf[3]);
    std::vector<std::uint8_t> rec(len);
    if (!in.read(reinterpret_cast<char*>(rec.data()), len)) {
      return make_error("truncated registry record in " + path);
    }
    auto d = decode_descriptor(rec);
    if (!d.ok()) return make_error("corrupt registry record in " + path);
    reg.entries_[{d.value().vpf_id, d.value().version}] = d.value();
  }
  return reg;
}

Result<void> VpfRegistry::append_record(const VpfDescriptor& d) {
  if (path_.empty()) return {};
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out.good()) return make_error("cannot open registry store " + path_);
  const std::vector<std::uint8_t> rec = encode_descriptor(d);
  const std::uint32_t len = static_cast<std::uint32_t>(rec.size());
  const std::uint8_t len_buf[4] = {
      static_cast<std::uint8_t>(len >> 24), static_cast<std::uint8_t>(len >> 16),
      static_cast<std::uint8_t>(len >> 8), static_cast<std::uint8_t>(len)};
  out.write(reinterpret_cast<const char*>(len_buf), 4);
  out.write(reinterpret_cast<const char*>(rec.data()), static_cast<std::streamsize>(rec.size()));
  if (!out.good()) return make_error("registry append failed");
  return {};
}

Result<void> VpfRegistry::put(const VpfDescriptor& d) {
  if (d.vpf_id == 0 || d.version == 0) return make_error("invalid descriptor id/version");
  auto it = entries_.find({d.vpf_id, d.version});
  if (it != entries_.end()) {
    if (it->second == d) return {};  // idempotent re-put
    return make_error("conflict: (vpf_id, version) already stored with different content");
  }
  auto appended = append_record(d);
  if (!appended.ok()) return appended;
  entries_[{d.vpf_id, d.version}] = d;
  return {};
}

Result<VpfDescriptor> VpfRegistry::get(std::uint32_t vpf_id, std::uint32_t version) const {
  if (version == 0) {
    const VpfDescriptor* latest = nullptr;
    for (const auto& [key, d] : entries_) {
      if (key.first == vpf_id) latest = &d;
    }
    if (!latest) return make_error("not found");
    return *latest;
  }
  auto it = entries_.find({vpf_id, version});
  if (it == entries_.end()) return make_error("not found");
  return it->second;
}

std::vector<std::uint32_t> VpfRegistry::versions(std::uint32_t vpf_id) const {
  std::vector<std::uint32_t> out;
  for (const auto& [key, d] : entries_) {
    if (key.first == vpf_id) out.push_back(key.second);
  }
  return out;
}

void RegistryActor::on_message(ActorContext& ctx, const Received& rx) {
  if (rx.msg.msg_type != msg::kAssignVpf) return;

  WireMessage reply;
  reply.layer = MessageLayer::kManagementOrchestration;
  reply.msg_type = msg::kAssignVpf;
  reply.src = ctx.self();
  reply.seq = rx.msg.seq;
  reply.timestamp_ns = static_cast<std::uint64_t>(ctx.now_ns());

  auto fail = [&](const std::string& detail) {
    reply.flags = flag::kResponse | flag::kError;
    ByteWriter w;
    w.str16(detail);
    reply.payload = w.take();
    ctx.send(rx.msg.src, reply);
  };

  if (rx.msg.flags & flag::kRequest) {
    ByteReader r(rx.msg.payload);
    const std::uint32_t vpf_id = r.u32();
    const std::uint32_t version = r.u32();
    if (!r.ok()) return fail("bad lookup payload");
    auto d = registry_.get(vpf_id, version);
    if (!d.ok()) return fail(d.error().message);
    reply.flags = flag::kResponse;
    reply.payload = encode_descriptor(d.value());
    ctx.send(rx.msg.src, reply);
    return;
  }

  auto d = decode_descriptor(rx.msg.payload);
  if (!d.ok()) return fail(d.error().message);
  auto stored = registry_.put(d.value());
  if (!stored.ok()) return fail(stored.error().message);
  reply.flags = flag::kResponse;
  ByteWriter w;
  w.u32(d.value().vpf_id);
  w.u32(d.value().version);
  reply.payload = w.take();
  ctx.send(rx.msg.src, reply);
}

}  // namespace vpc
