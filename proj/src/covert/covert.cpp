// SPDX-License-Identifier: Apache-2.0
#include "balboa/covert/covert.hpp"

#include <cstring>

namespace balboa::covert {

size_t ByteRing::push(ByteSpan data) {
    const size_t cap = buf_.size();
    const size_t head = head_.load(std::memory_order_acquire);
    size_t tail = tail_.load(std::memory_order_relaxed);
    const size_t used = (tail + cap - head) % cap;
    const size_t room = cap - 1 - used;
    const size_t n = data.size() < room ? data.size() : room;
    for (size_t i = 0; i < n; ++i) {
        buf_[tail] = data[i];
        tail = (tail + 1) % cap;
    }
    tail_.store(tail, std::memory_order_release);
    return n;
}

size_t ByteRing::pop(uint8_t* out, size_t max) {
    const size_t cap = buf_.size();
    const size_t tail = tail_.load(std::memory_order_acquire);
    size_t head = head_.load(std::memory_order_relaxed);
    const size_t avail = (tail + cap - head) % cap;
    const size_t n = max < avail ? max : avail;
    for (size_t i = 0; i < n; ++i) {
        out[i] = buf_[head];
        head = (head + 1) % cap;
    }
    head_.store(head, std::memory_order_release);
    return n;
}

size_t ByteRing::size() const {
    const size_t cap = buf_.size();
    const size_t tail = tail_.load(std::memory_order_acquire);
    const size_t head = head_.load(std::memory_order_acquire);
    return (tail + cap - head) % cap;
}

size_t encode_frame(CovertQueue& queue, uint8_t* region, size_t capacity) {
    if (capacity < kMinFrameCapacity) return 0;
    const size_t n = queue.out.pop(region + kFrameHeaderLen, capacity - kFrameHeaderLen);
    write_be32(region, static_cast<uint32_t>(n));
    std::memset(region + kFrameHeaderLen + n, 0, capacity - kFrameHeaderLen - n);
    return n;
}

void FrameDecoder::begin_region(size_t capacity) {
    capacity_ = capacity;
    pos_ = 0;
    declared_ = 0;
    bad_ = capacity < kMinFrameCapacity;
}

void FrameDecoder::feed(CovertQueue& queue, uint8_t b) {
    if (bad_ || pos_ >= capacity_) {
        ++pos_;
        return;
    }
    if (pos_ < kFrameHeaderLen) {
        declared_ = declared_ << 8 | b;
        if (pos_ == kFrameHeaderLen - 1 && declared_ > capacity_ - kFrameHeaderLen) bad_ = true;
    } else if (pos_ < kFrameHeaderLen + declared_) {
        queue.in.push_byte(b);
    }
    ++pos_;
}

void FrameEncoder::begin_region(CovertQueue& queue, uint8_t* scratch, size_t capacity) {
    scratch_ = scratch;
    pos_ = 0;
    if (capacity < kMinFrameCapacity) {
        // Region too small to frame; caller passes carrier bytes through.
        len_ = 0;
        return;
    }
    encode_frame(queue, scratch, capacity);
    len_ = capacity;
}

}  // namespace balboa::covert
