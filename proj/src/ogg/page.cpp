// SPDX-License-Identifier: Apache-2.0
#include "balboa/ogg/page.hpp"

#include <cstring>

namespace balboa::ogg {
namespace {

struct CrcTable {
    uint32_t t[256];
    CrcTable() {
        for (uint32_t i = 0; i < 256; ++i) {
            uint32_t r = i << 24;
            for (int j = 0; j < 8; ++j) r = r & 0x80000000 ? (r << 1) ^ 0x04C11DB7 : r << 1;
            t[i] = r;
        }
    }
};
const CrcTable& crc_table() {
    static const CrcTable t;
    return t;
}

}  // namespace

uint32_t crc32_update(uint32_t crc, const uint8_t* data, size_t len) {
    const uint32_t* t = crc_table().t;
    for (size_t i = 0; i < len; ++i) crc = crc << 8 ^ t[(crc >> 24) ^ data[i]];
    return crc;
}

uint32_t page_crc(const PageHeader& header, ByteSpan body) {
    PageHeader h = header;
    h.crc = 0;
    const Bytes raw = h.serialize();
    uint32_t crc = crc32_update(0, raw.data(), raw.size());
    return crc32_update(crc, body.data(), body.size());
}

void PageCrc::header_byte(size_t offset_in_header, uint8_t b) {
    if (offset_in_header >= kOffCrc && offset_in_header < kOffCrc + 4) b = 0;
    crc_ = crc32_update(crc_, b);
}

std::optional<PageHeader> PageHeader::parse(ByteSpan raw) {
    if (raw.size() < kFixedHeaderLen || std::memcmp(raw.data(), kCapture, 4) != 0)
        return std::nullopt;
    PageHeader h;
    h.version = raw[kOffVersion];
    h.header_type = raw[kOffHeaderType];
    h.granule = read_le64(raw.data() + kOffGranule);
    h.serial = read_le32(raw.data() + kOffSerial);
    h.page_seq = read_le32(raw.data() + kOffPageSeq);
    h.crc = read_le32(raw.data() + kOffCrc);
    h.seg_count = raw[kOffSegCount];
    if (raw.size() < kFixedHeaderLen + h.seg_count) return std::nullopt;
    std::memcpy(h.seg_table, raw.data() + kFixedHeaderLen, h.seg_count);
    return h;
}

Bytes PageHeader::serialize() const {
    Bytes out(header_len());
    std::memcpy(out.data(), kCapture, 4);
    out[kOffVersion] = version;
    out[kOffHeaderType] = header_type;
    write_le64(out.data() + kOffGranule, granule);
    write_le32(out.data() + kOffSerial, serial);
    write_le32(out.data() + kOffPageSeq, page_seq);
    write_le32(out.data() + kOffCrc, crc);
    out[kOffSegCount] = seg_count;
    std::memcpy(out.data() + kFixedHeaderLen, seg_table, seg_count);
    return out;
}

std::optional<std::vector<Page>> split_pages(ByteSpan file) {
    std::vector<Page> pages;
    size_t pos = 0;
    while (pos < file.size()) {
        auto header = PageHeader::parse(file.subspan(pos));
        if (!header) return std::nullopt;
        const size_t body_len = header->body_len();
        const size_t total = header->header_len() + body_len;
        if (pos + total > file.size()) return std::nullopt;
        Page page;
        page.header = *header;
        page.body.assign(file.begin() + static_cast<long>(pos + header->header_len()),
                         file.begin() + static_cast<long>(pos + total));
        pages.push_back(std::move(page));
        pos += total;
    }
    return pages;
}

Bytes build_page(PageHeader header, ByteSpan body) {
    header.crc = page_crc(header, body);
    Bytes out = header.serialize();
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

}  // namespace balboa::ogg
