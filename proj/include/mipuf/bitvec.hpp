#ifndef MIPUF_BITVEC_HPP
#define MIPUF_BITVEC_HPP

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace mipuf {

/// Fixed-width bit vector, MSB-first packing (bit 0 is the high bit of
/// byte 0). Widths are not required to be byte multiples; trailing pad
/// bits are kept zero so byte-level comparison and hashing are stable.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t nbits) : nbits_(nbits), bytes_((nbits + 7) / 8, 0) {}

    static BitVec from_u64(uint64_t value, size_t nbits);
    static BitVec from_bytes(const std::vector<uint8_t>& bytes, size_t nbits);
    static BitVec from_hex(const std::string& hex, size_t nbits);

    size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool get(size_t i) const { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1; }
    void set(size_t i, bool v) {
        uint8_t mask = uint8_t(1u << (7 - (i & 7)));
        if (v) bytes_[i >> 3] |= mask; else bytes_[i >> 3] &= uint8_t(~mask);
    }
    void flip(size_t i) { bytes_[i >> 3] ^= uint8_t(1u << (7 - (i & 7))); }

    uint64_t to_u64() const;  // requires size() <= 64
    const std::vector<uint8_t>& bytes() const { return bytes_; }
    std::string to_hex() const;
    std::string to_bin() const;

    BitVec slice(size_t start, size_t len) const;
    /// Concatenation; left operand occupies the leading bits.
    BitVec concat(const BitVec& rhs) const;

    BitVec operator^(const BitVec& rhs) const;  // widths must match
    bool operator==(const BitVec& rhs) const {
        return nbits_ == rhs.nbits_ && bytes_ == rhs.bytes_;
    }
    bool operator!=(const BitVec& rhs) const { return !(*this == rhs); }
    bool operator<(const BitVec& rhs) const {
        if (nbits_ != rhs.nbits_) return nbits_ < rhs.nbits_;
        return bytes_ < rhs.bytes_;
    }

    size_t hamming(const BitVec& rhs) const;    // widths must match

    /// Appends [u32 bit-length BE][packed bytes]; the inverse reads the
    /// prefix back. Used for node state files and hash preimages.
    void serialize(std::vector<uint8_t>& out) const;
    static BitVec deserialize(const std::vector<uint8_t>& in, size_t& offset);

private:
    void clear_padding();

    size_t nbits_ = 0;
    std::vector<uint8_t> bytes_;
};

}  // namespace mipuf

#endif
