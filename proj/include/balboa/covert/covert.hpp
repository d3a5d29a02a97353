// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <memory>

#include "balboa/bytes.hpp"

namespace balboa::covert {

// Single-producer single-consumer byte ring. Fixed capacity; pushes beyond
// capacity are refused (back-pressure), the data path never allocates.
class ByteRing {
 public:
    explicit ByteRing(size_t capacity = 1 << 20) : buf_(capacity + 1) {}

    size_t push(ByteSpan data);
    size_t pop(uint8_t* out, size_t max);
    bool push_byte(uint8_t b) { return push(ByteSpan(&b, 1)) == 1; }
    size_t size() const;
    bool empty() const { return size() == 0; }

 private:
    Bytes buf_;
    std::atomic<size_t> head_{0};  // consumer position
    std::atomic<size_t> tail_{0};  // producer position
};

// Outgoing bytes awaiting embedding plus extracted bytes awaiting delivery.
struct CovertQueue {
    ByteRing out;
    ByteRing in;
};

constexpr size_t kFrameHeaderLen = 4;
constexpr size_t kMinFrameCapacity = 5;

// Fills `region` (capacity bytes) with: u32be payload length n, n payload
// bytes pulled from queue.out, zero padding. capacity < 5 leaves the region
// untouched and consumes nothing.
// Returns the payload length n.
size_t encode_frame(CovertQueue& queue, uint8_t* region, size_t capacity);

// Incremental frame decoder for the restore direction: feed the observed
// region bytes one at a time; payload bytes land in queue.in. A length field
// exceeding capacity-4 marks the frame bad and nothing is delivered.
class FrameDecoder {
 public:
    void begin_region(size_t capacity);
    void feed(CovertQueue& queue, uint8_t b);
    bool bad_length() const { return bad_; }

 private:
    size_t capacity_ = 0;
    size_t pos_ = 0;
    uint32_t declared_ = 0;
    bool bad_ = false;
};

// Incremental frame encoder for the transform direction: the payload is
// committed from the queue when the region begins; bytes are then emitted
// positionally so the carrier can be replaced one byte at a time.
class FrameEncoder {
 public:
    // scratch must hold at least capacity bytes and stay valid for the region.
    void begin_region(CovertQueue& queue, uint8_t* scratch, size_t capacity);
    uint8_t next() { return pos_ < len_ ? scratch_[pos_++] : 0; }
    // False when the region was too small to frame (carrier passes through).
    bool active() const { return len_ > 0; }

 private:
    const uint8_t* scratch_ = nullptr;
    size_t len_ = 0;
    size_t pos_ = 0;
};

// The per-protocol plaintext rewriter contract. Both directions are
// incremental, length-preserving, and resumable at any byte boundary.
class Rewriter {
 public:
    virtual ~Rewriter() = default;
    virtual uint8_t transform_outgoing(uint8_t plain) = 0;
    virtual uint8_t restore_incoming(uint8_t plain) = 0;
};

class IdentityRewriter final : public Rewriter {
 public:
    uint8_t transform_outgoing(uint8_t b) override { return b; }
    uint8_t restore_incoming(uint8_t b) override { return b; }
};

}  // namespace balboa::covert
