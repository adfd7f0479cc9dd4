#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kzq {

std::uint64_t fnv1a64(std::string_view data);

// Collects per-run output files, writes them to the output directory, and
// records checksums. The manifest itself contains only deterministic
// content (tool version, config echo, file table); volatile run facts
// (wall clock, worker count) go to a separate run_info.txt so a re-run
// with the same config and seed byte-reproduces everything except that
// one sidecar.
class RunManifest {
  public:
    RunManifest(std::filesystem::path out_dir, std::string tool_version,
                std::string config_echo);

    // Writes content to out_dir/name and records (name, checksum, bytes).
    void add_file(const std::string& name, const std::string& content);

    // Writes manifest.txt; call once after every add_file.
    void finalize() const;

    // Writes run_info.txt (the non-deterministic sidecar).
    void write_run_info(double wall_seconds, int workers) const;

    struct Entry {
        std::string name;
        std::uint64_t checksum;
        std::size_t bytes;
    };
    const std::vector<Entry>& entries() const { return entries_; }
    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
    std::string version_;
    std::string config_;
    std::vector<Entry> entries_;
};

}  // namespace kzq
