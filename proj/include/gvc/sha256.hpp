#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace gvc {

// Minimal streaming SHA-256 (FIPS 180-4), enough for content digests in
// run manifests. Not intended for anything security-sensitive.
class Sha256 {
  public:
    Sha256();

    void update(const void* data, std::size_t len);
    void update(std::string_view text) { update(text.data(), text.size()); }

    // Finalizes and returns the lowercase hex digest. The object must not
    // be updated afterwards.
    std::string hex_digest();

  private:
    void process_block(const std::uint8_t* block);

    std::uint32_t state_[8];
    std::uint8_t buffer_[64];
    std::size_t buffer_len_ = 0;
    std::uint64_t total_len_ = 0;
};

std::string sha256_hex(std::string_view data);

// Throws IoError when the file cannot be read.
std::string sha256_file(const std::filesystem::path& path);

} // namespace gvc
