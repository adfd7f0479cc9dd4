#include "kzq/manifest.hpp"

#include <cstdio>
#include <fstream>

#include "kzq/errors.hpp"

namespace kzq {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

void write_whole_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw error("short write to '" + path.string() + "'");
}

}  // namespace

RunManifest::RunManifest(std::filesystem::path out_dir, std::string tool_version,
                         std::string config_echo)
    : dir_(std::move(out_dir)),
      version_(std::move(tool_version)),
      config_(std::move(config_echo)) {
    std::filesystem::create_directories(dir_);
}

void RunManifest::add_file(const std::string& name, const std::string& content) {
    write_whole_file(dir_ / name, content);
    entries_.push_back({name, fnv1a64(content), content.size()});
}

void RunManifest::finalize() const {
    std::string m;
    m += "tool_version = " + version_ + "\n";
    m += "files = " + std::to_string(entries_.size()) + "\n";
    char line[64];
    for (const auto& e : entries_) {
        std::snprintf(line, sizeof line, "  %016llx %10zu  ",
                      static_cast<unsigned long long>(e.checksum), e.bytes);
        m += line;
        m += e.name;
        m += '\n';
    }
    m += "config:\n";
    std::string indented;
    for (char c : config_) {
        if (indented.empty() || indented.back() == '\n') indented += "  ";
        indented += c;
    }
    m += indented;
    write_whole_file(dir_ / "manifest.txt", m);
}

void RunManifest::write_run_info(double wall_seconds, int workers) const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "wall_seconds = %.3f\nworkers = %d\n",
                  wall_seconds, workers);
    write_whole_file(dir_ / "run_info.txt", buf);
}

}  // namespace kzq
