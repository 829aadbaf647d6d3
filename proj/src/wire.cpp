#include "vpc/wire.hpp"

namespace vpc {

namespace msg {

bool is_registered(std::uint8_t type) {
  return type <= kClockProbeReply ||
         (type >= kDeployVpc && type <= kWorkflowStatus);
}

const char* name(std::uint8_t type) {
  switch (type) {
    case kSensorInput: return "SensorInput";
    case kActuatorOutput: return "ActuatorOutput";
    case kStateSync: return "StateSync";
    case kSyncAck: return "SyncAck";
    case kHandoverCmd: return "HandoverCmd";
    case kHandoverAck: return "HandoverAck";
    case kReadyToTakeover: return "ReadyToTakeover";
    case kClockProbe: return "ClockProbe";
    case kClockProbeReply: return "ClockProbeReply";
    case kDeployVpc: return "DeployVpc";
    case kAssignVpf: return "AssignVpf";
    case kReleaseCluster: return "ReleaseCluster";
    case kIrRegister: return "IrRegister";
    case kIrCapabilityQuery: return "IrCapabilityQuery";
    case kIrCapabilityReply: return "IrCapabilityReply";
    case kReconfigureRequest: return "ReconfigureRequest";
    case kRedeployRequest: return "RedeployRequest";
    case kWorkflowStatus: return "WorkflowStatus";
  }
  return "Unknown";
}

}  // namespace msg

Result<std::vector<std::uint8_t>> encode(const WireMessage& m) {
  if (m.payload.size() > kMaxPayload) return make_error("payload too long");
  if (!msg::is_registered(m.msg_type)) return make_error("unregistered msg_type");
  ByteWriter w;
  w.u8(m.version);
  w.u8(static_cast<std::uint8_t>(m.layer));
  w.u8(m.msg_type);
  w.u8(m.flags);
  w.u32(m.src);
  w.u32(m.cluster_id);
  w.u32(m.seq);
  w.u64(m.timestamp_ns);
  w.u16(static_cast<std::uint16_t>(m.payload.size()));
  w.bytes(m.payload);
  return w.take();
}

Result<WireMessage> decode(std::span<const std::uint8_t> data) {
  if (data.size() < kWireHeaderSize) return make_error("short header");
  ByteReader r(data);
  WireMessage m;
  m.version = r.u8();
  if (m.version != kWireVersion) return make_error("unsupported version");
  const std::uint8_t layer = r.u8();
  if (layer > 2) return make_error("bad layer");
  m.layer = static_cast<MessageLayer>(layer);
  m.msg_type = r.u8();
  m.flags = r.u8();
  m.src = r.u32();
  m.cluster_id = r.u32();
  m.seq = r.u32();
  m.timestamp_ns = r.u64();
  const std::uint16_t payload_len = r.u16();
  if (r.remaining() != payload_len) return make_error("length mismatch");
  m.payload = r.rest();
  return m;
}

}  // namespace vpc
