#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "vpc/domain.hpp"
#include "vpc/result.hpp"

namespace vpc {

// Registered message types. 0-8 ride the Data/Control layers, 16+ the
// Management & Orchestration layer.
namespace msg {
constexpr std::uint8_t kSensorInput = 0;
constexpr std::uint8_t kActuatorOutput = 1;
constexpr std::uint8_t kStateSync = 2;
constexpr std::uint8_t kSyncAck = 3;
constexpr std::uint8_t kHandoverCmd = 4;
constexpr std::uint8_t kHandoverAck = 5;
constexpr std::uint8_t kReadyToTakeover = 6;
constexpr std::uint8_t kClockProbe = 7;
constexpr std::uint8_t kClockProbeReply = 8;
constexpr std::uint8_t kDeployVpc = 16;
constexpr std::uint8_t kAssignVpf = 17;
constexpr std::uint8_t kReleaseCluster = 18;
constexpr std::uint8_t kIrRegister = 19;
constexpr std::uint8_t kIrCapabilityQuery = 20;
constexpr std::uint8_t kIrCapabilityReply = 21;
constexpr std::uint8_t kReconfigureRequest = 22;
constexpr std::uint8_t kRedeployRequest = 23;
constexpr std::uint8_t kWorkflowStatus = 24;

bool is_registered(std::uint8_t type);
const char* name(std::uint8_t type);
}  // namespace msg

// Flag bits. Request/response/error qualify query-style M&O messages;
// kCancel turns a HandoverCmd into a handover abort.
namespace flag {
constexpr std::uint8_t kRequest = 0x01;
constexpr std::uint8_t kResponse = 0x02;
constexpr std::uint8_t kError = 0x04;
constexpr std::uint8_t kCancel = 0x08;
}  // namespace flag

// The one framed message format carried on all layers and channels.
// Header (big-endian, 26 bytes):
//   version u8 | layer u8 | msg_type u8 | flags u8 | src u32 | cluster_id u32
//   | seq u32 | timestamp_ns u64 | payload_len u16
struct WireMessage {
  std::uint8_t version = 1;
  MessageLayer layer = MessageLayer::kData;
  std::uint8_t msg_type = 0;
  std::uint8_t flags = 0;
  NodeId src = 0;
  std::uint32_t cluster_id = 0;
  std::uint32_t seq = 0;
  std::uint64_t timestamp_ns = 0;
  std::vector<std::uint8_t> payload;

  bool operator==(const WireMessage&) const = default;
};

constexpr std::size_t kWireHeaderSize = 26;
constexpr std::size_t kMaxPayload = 1400;  // fits one unfragmented datagram
constexpr std::uint8_t kWireVersion = 1;

Result<std::vector<std::uint8_t>> encode(const WireMessage& m);
Result<WireMessage> decode(std::span<const std::uint8_t> data);

// Big-endian payload builder.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16(std::uint16_t v) {
    buf_.push_back(static_cast<std::uint8_t>(v >> 8));
    buf_.push_back(static_cast<std::uint8_t>(v));
  }
  void u32(std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
  }
  void u64(std::uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
  }
  void bytes(std::span<const std::uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
  // Length-prefixed strings (u8 and u16 prefixes).
  void str8(const std::string& s) {
    u8(static_cast<std::uint8_t>(s.size()));
    buf_.insert(buf_.end(), s.begin(), s.end());
  }
  void str16(const std::string& s) {
    u16(static_cast<std::uint16_t>(s.size()));
    buf_.insert(buf_.end(), s.begin(), s.end());
  }
  std::vector<std::uint8_t> take() { return std::move(buf_); }

 private:
  std::vector<std::uint8_t> buf_;
};

// Big-endian payload reader with a sticky failure flag; check ok() once at
// the end of a parse.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(take(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
  std::uint64_t u64() { return take(8); }
  std::string str8() { return str(u8()); }
  std::string str16() { return str(u16()); }
  std::vector<std::uint8_t> rest() {
    std::vector<std::uint8_t> out(data_.begin() + pos_, data_.end());
    pos_ = data_.size();
    return out;
  }
  std::size_t remaining() const { return data_.size() - pos_; }
  bool ok() const { return !failed_; }

 private:
  std::uint64_t take(std::size_t nbytes) {
    if (failed_ || data_.size() - pos_ < nbytes) {
      failed_ = true;
      return 0;
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < nbytes; ++i) v = (v << 8) | data_[pos_++];
    return v;
  }
  std::string str(std::size_t len) {
    if (failed_ || data_.size() - pos_ < len) {
      failed_ = true;
      return {};
    }
    std::string s(reinterpret_cast<const char*>(data_.data() + pos_), len);
    pos_ += len;
    return s;
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
  bool failed_ = false;
};

}  // namespace vpc
