// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "balboa/bytes.hpp"

namespace balboa::ogg {

constexpr uint8_t kCapture[4] = {'O', 'g', 'g', 'S'};
constexpr size_t kFixedHeaderLen = 27;  // through seg_count, before the segment table
constexpr size_t kMaxSegments = 255;
constexpr size_t kMaxBodyLen = 255 * 255;

constexpr uint8_t kFlagContinued = 0x01;
constexpr uint8_t kFlagBos = 0x02;
constexpr uint8_t kFlagEos = 0x04;

// Field offsets within the fixed header.
constexpr size_t kOffVersion = 4;
constexpr size_t kOffHeaderType = 5;
constexpr size_t kOffGranule = 6;
constexpr size_t kOffSerial = 14;
constexpr size_t kOffPageSeq = 18;
constexpr size_t kOffCrc = 22;
constexpr size_t kOffSegCount = 26;

struct PageHeader {
    uint8_t version = 0;
    uint8_t header_type = 0;
    uint64_t granule = 0;
    uint32_t serial = 0;
    uint32_t page_seq = 0;
    uint32_t crc = 0;
    uint8_t seg_count = 0;
    uint8_t seg_table[kMaxSegments] = {};

    size_t body_len() const {
        size_t n = 0;
        for (size_t i = 0; i < seg_count; ++i) n += seg_table[i];
        return n;
    }
    size_t header_len() const { return kFixedHeaderLen + seg_count; }
    bool bos() const { return header_type & kFlagBos; }
    bool eos() const { return header_type & kFlagEos; }

    // Parses a full header from raw bytes (capture pattern included).
    static std::optional<PageHeader> parse(ByteSpan raw);
    // Serializes with the stored crc field.
    Bytes serialize() const;
};

// CRC-32 with polynomial 0x04C11DB7, init 0, no reflection, no final xor --
// the Ogg page checksum. Incremental chaining form.
uint32_t crc32_update(uint32_t crc, const uint8_t* data, size_t len);
inline uint32_t crc32_update(uint32_t crc, uint8_t byte) { return crc32_update(crc, &byte, 1); }

// CRC of a complete page (header with crc field zeroed, then body).
uint32_t page_crc(const PageHeader& header, ByteSpan body);

// Incremental CRC over header bytes with the crc field substituted by zeros
// and the version byte forced to `version`; used when the original page must
// be reconstructed from a transformed one.
class PageCrc {
 public:
    void header_byte(size_t offset_in_header, uint8_t b);
    void body_byte(uint8_t b) { crc_ = crc32_update(crc_, b); }
    uint32_t value() const { return crc_; }
    void reset() { crc_ = 0; }

 private:
    uint32_t crc_ = 0;
};

struct Page {
    PageHeader header;
    Bytes body;
};

// Splits a whole Ogg file into pages. Returns nullopt on a malformed
// container (bad capture pattern, truncated page).
std::optional<std::vector<Page>> split_pages(ByteSpan file);

// Serializes a page, computing the crc field.
Bytes build_page(PageHeader header, ByteSpan body);

}  // namespace balboa::ogg
