#include "kzq/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kzq/errors.hpp"

namespace kzq {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& key, const std::string& tok) {
    const std::string t = trim(tok);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || *end != '\0')
        throw config_error("config key '" + key + "': '" + t + "' is not a number");
    return v;
}

std::vector<std::string> split_args(const std::string& body) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(cur);
    return out;
}

}  // namespace

std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (lo <= 0.0 || hi <= 0.0 || n < 2)
        throw config_error("geometric grid needs positive bounds and n >= 2");
    std::vector<double> g(n);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(step * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

Config Config::parse_text(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw config_error("config line " + std::to_string(lineno) +
                               ": empty key");
        c.set(key, value);
    }
    return c;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

const std::string* Config::find(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return &v;
    return nullptr;
}

bool Config::has(const std::string& key) const { return find(key) != nullptr; }

void Config::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries_)
        if (k == key) {
            v = value;
            return;
        }
    entries_.emplace_back(key, value);
}

std::string Config::get_string(const std::string& key) const {
    const std::string* v = find(key);
    if (!v) throw config_error("config key '" + key + "' is required");
    return *v;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
    const std::string* v = find(key);
    return v ? *v : fallback;
}

double Config::get_double(const std::string& key) const {
    return parse_number(key, get_string(key));
}

double Config::get_double(const std::string& key, double fallback) const {
    const std::string* v = find(key);
    return v ? parse_number(key, *v) : fallback;
}

int Config::get_int(const std::string& key, int fallback) const {
    const std::string* v = find(key);
    if (!v) return fallback;
    const double d = parse_number(key, *v);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        throw config_error("config key '" + key + "': expected an integer");
    return i;
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
    const std::string* v = find(key);
    if (!v) return fallback;
    const std::string t = trim(*v);
    char* end = nullptr;
    const unsigned long long u = std::strtoull(t.c_str(), &end, 0);
    if (end == t.c_str() || *end != '\0')
        throw config_error("config key '" + key + "': expected an unsigned integer");
    return static_cast<std::uint64_t>(u);
}

std::vector<double> Config::get_list(const std::string& key) const {
    const std::string raw = trim(get_string(key));
    if (raw.size() >= 2 && raw.front() == '[' && raw.back() == ']') {
        std::vector<double> out;
        for (const auto& tok : split_args(raw.substr(1, raw.size() - 2)))
            out.push_back(parse_number(key, tok));
        if (out.empty())
            throw config_error("config key '" + key + "': empty list");
        return out;
    }
    for (const char* gen : {"geom", "lin"}) {
        const std::string head = std::string(gen) + "(";
        if (raw.rfind(head, 0) == 0 && raw.back() == ')') {
            const auto args =
                split_args(raw.substr(head.size(), raw.size() - head.size() - 1));
            if (args.size() != 3)
                throw config_error("config key '" + key + "': " + gen +
                                   "(lo, hi, n) takes 3 arguments");
            const double lo = parse_number(key, args[0]);
            const double hi = parse_number(key, args[1]);
            const int n = static_cast<int>(parse_number(key, args[2]));
            if (gen[0] == 'g') return geometric_grid(lo, hi, n);
            if (n < 2)
                throw config_error("config key '" + key + "': n >= 2 required");
            std::vector<double> g(n);
            for (int i = 0; i < n; ++i)
                g[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
            return g;
        }
    }
    // A bare scalar is a one-element list.
    return {parse_number(key, raw)};
}

std::vector<double> Config::get_list(const std::string& key,
                                     const std::vector<double>& fallback) const {
    return has(key) ? get_list(key) : fallback;
}

std::string Config::echo() const {
    std::string out;
    for (const auto& [k, v] : entries_) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

}  // namespace kzq
