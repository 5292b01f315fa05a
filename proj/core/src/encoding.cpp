#include "qhesim/encoding.hpp"

#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace qhesim {

std::string fnv1a64_hex(const std::vector<std::uint8_t> &bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001B3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {
constexpr char b64_alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int b64_value(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
}
} // namespace

std::string base64_encode(const std::vector<std::uint8_t> &bytes) {
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i = 0;
    while (i + 3 <= bytes.size()) {
        const std::uint32_t n = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
        out.push_back(b64_alphabet[(n >> 18) & 63]);
        out.push_back(b64_alphabet[(n >> 12) & 63]);
        out.push_back(b64_alphabet[(n >> 6) & 63]);
        out.push_back(b64_alphabet[n & 63]);
        i += 3;
    }
    const std::size_t rem = bytes.size() - i;
    if (rem == 1) {
        const std::uint32_t n = bytes[i] << 16;
        out.push_back(b64_alphabet[(n >> 18) & 63]);
        out.push_back(b64_alphabet[(n >> 12) & 63]);
        out.append("==");
    } else if (rem == 2) {
        const std::uint32_t n = (bytes[i] << 16) | (bytes[i + 1] << 8);
        out.push_back(b64_alphabet[(n >> 18) & 63]);
        out.push_back(b64_alphabet[(n >> 12) & 63]);
        out.push_back(b64_alphabet[(n >> 6) & 63]);
        out.push_back('=');
    }
    return out;
}

std::vector<std::uint8_t> base64_decode(const std::string &text) {
    std::vector<std::uint8_t> out;
    std::uint32_t acc = 0;
    int bits = 0;
    for (char c : text) {
        if (c == '=') break;
        const int v = b64_value(c);
        if (v < 0) throw std::invalid_argument("base64_decode: invalid character");
        acc = (acc << 6) | static_cast<std::uint32_t>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xFF));
        }
    }
    return out;
}

namespace {

void push_le_double(std::vector<std::uint8_t> &out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    for (int k = 0; k < 8; ++k) out.push_back(static_cast<std::uint8_t>((bits >> (8 * k)) & 0xFF));
}

double read_le_double(const std::vector<std::uint8_t> &bytes, std::size_t offset) {
    std::uint64_t bits = 0;
    for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(bytes[offset + k]) << (8 * k);
    double v;
    std::memcpy(&v, &bits, sizeof(v));
    return v;
}

} // namespace

std::vector<std::uint8_t> matrix_to_bytes(const ComplexMatrix &m) {
    std::vector<std::uint8_t> out;
    out.reserve(m.rows() * m.cols() * 16);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            push_le_double(out, m(r, c).real());
            push_le_double(out, m(r, c).imag());
        }
    return out;
}

ComplexMatrix matrix_from_bytes(const std::vector<std::uint8_t> &bytes, std::size_t rows,
                                std::size_t cols) {
    if (bytes.size() != rows * cols * 16)
        throw std::invalid_argument("matrix_from_bytes: size mismatch");
    ComplexMatrix m(rows, cols);
    std::size_t off = 0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const double re = read_le_double(bytes, off);
            const double im = read_le_double(bytes, off + 8);
            m(r, c) = cplx{re, im};
            off += 16;
        }
    return m;
}

std::string matrix_digest(const ComplexMatrix &m) { return fnv1a64_hex(matrix_to_bytes(m)); }

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace qhesim
