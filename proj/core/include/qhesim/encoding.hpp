#pragma once

#include "qhesim/complex_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qhesim {

/// FNV-1a 64-bit over a byte buffer, rendered as 16 hex digits.
std::string fnv1a64_hex(const std::vector<std::uint8_t> &bytes);

std::string base64_encode(const std::vector<std::uint8_t> &bytes);
std::vector<std::uint8_t> base64_decode(const std::string &text);

/// Little-endian (real, imag) double pairs, row-major.
std::vector<std::uint8_t> matrix_to_bytes(const ComplexMatrix &m);
ComplexMatrix matrix_from_bytes(const std::vector<std::uint8_t> &bytes, std::size_t rows,
                                std::size_t cols);

/// Digest of a matrix payload, used in transcript logs.
std::string matrix_digest(const ComplexMatrix &m);

/// Fixed 12-significant-digit rendering used by every emitted artifact.
std::string format_real(double v);

} // namespace qhesim
