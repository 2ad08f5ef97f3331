#ifndef LTC_WIRE_HPP
#define LTC_WIRE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltc::wire {

// Little-endian fixed-width encoding; payloads are std::string byte buffers.

inline void put_u8(std::string &b, std::uint8_t x) { b.push_back(static_cast<char>(x)); }

inline void put_u32(std::string &b, std::uint32_t x) {
    for (int i = 0; i < 4; ++i) b.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

inline void put_u64(std::string &b, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) b.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

inline void put_i32(std::string &b, std::int32_t x) { put_u32(b, static_cast<std::uint32_t>(x)); }

inline void put_u32s(std::string &b, const std::vector<std::int32_t> &xs) {
    put_u32(b, static_cast<std::uint32_t>(xs.size()));
    for (std::int32_t x : xs) put_i32(b, x);
}

struct Reader {
    const std::string &buf;
    size_t pos = 0;

    explicit Reader(const std::string &b) : buf(b) {}

    bool done() const { return pos >= buf.size(); }

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(buf[pos++]);
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t x = 0;
        for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(buf[pos++])) << (8 * i);
        return x;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t x = 0;
        for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(buf[pos++])) << (8 * i);
        return x;
    }
    std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
    std::vector<std::int32_t> i32s() {
        std::uint32_t n = u32();
        std::vector<std::int32_t> xs(n);
        for (auto &x : xs) x = i32();
        return xs;
    }

private:
    void need(size_t k) const {
        if (pos + k > buf.size()) throw std::runtime_error("truncated payload");
    }
};

}  // namespace ltc::wire

#endif
