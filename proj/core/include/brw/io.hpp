#ifndef BRW_IO_HPP
#define BRW_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>

namespace brw {

/// Shortest round-trip decimal form, capped at 17 significant digits.
std::string format_g17(double v);

/// FNV-1a 64-bit checksum, hex-encoded.
std::string fnv1a_hex(const std::string& bytes);

/// Writes bytes to path, creating parent directories. Throws IoFailure.
void write_file(const std::filesystem::path& path, const std::string& bytes);

/// Reads a whole file. Throws IoFailure.
std::string read_file(const std::filesystem::path& path);

} // namespace brw

#endif
