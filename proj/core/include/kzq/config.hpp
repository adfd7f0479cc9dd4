#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kzq {

// Flat key = value run configuration.
//
//   # comment
//   coupling = 1.995e5
//   delta_max = [1.57e5, 2.58e5, 3.58e5]
//   tau_grid = geom(0.015625, 16, 33)
//
// Keys are free-form tokens (dots allowed); values are scalars, strings,
// bracketed lists, or grid generators geom(lo, hi, n) / lin(lo, hi, n).
// Insertion order is preserved so the echo is reproducible.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text);

    bool has(const std::string& key) const;

    // Throw config_error naming the key when it is absent (no-default
    // overloads) or unparseable.
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    std::vector<double> get_list(const std::string& key) const;
    std::vector<double> get_list(const std::string& key,
                                 const std::vector<double>& fallback) const;

    // Inserts or overwrites; overwriting keeps the original position.
    void set(const std::string& key, const std::string& value);

    const std::vector<std::pair<std::string, std::string>>& entries() const {
        return entries_;
    }

    // Canonical "key = value" text, one entry per line, insertion order.
    std::string echo() const;

  private:
    const std::string* find(const std::string& key) const;

    std::vector<std::pair<std::string, std::string>> entries_;
};

// Geometric grid helper shared by config parsing and canned setups.
std::vector<double> geometric_grid(double lo, double hi, int n);

}  // namespace kzq
