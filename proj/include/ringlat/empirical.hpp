#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace ringlat {

// Locale-independent float formatting, 17 significant digits (lossless for
// IEEE doubles), '.' decimal.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

// --- SHA-1 (for git-style content hashes on emitted data) -------------------

namespace detail {

class Sha1 {
public:
    void update(const unsigned char* data, std::size_t len) {
        total_ += len;
        while (len > 0) {
            std::size_t take = std::min(len, std::size_t(64) - fill_);
            std::memcpy(block_ + fill_, data, take);
            fill_ += take;
            data += take;
            len -= take;
            if (fill_ == 64) { process(); fill_ = 0; }
        }
    }
    std::string hex_digest() {
        std::uint64_t bits = total_ * 8;
        unsigned char pad = 0x80;
        update(&pad, 1);
        unsigned char zero = 0;
        while (fill_ != 56) update(&zero, 1);
        unsigned char lenb[8];
        for (int i = 0; i < 8; ++i) lenb[i] = static_cast<unsigned char>(bits >> (56 - 8 * i));
        update(lenb, 8);
        static const char* hexd = "0123456789abcdef";
        std::string out;
        for (std::uint32_t w : h_) {
            for (int i = 28; i >= 0; i -= 4) out.push_back(hexd[(w >> i) & 0xF]);
        }
        return out;
    }

private:
    static std::uint32_t rol(std::uint32_t v, int s) { return (v << s) | (v >> (32 - s)); }
    void process() {
        std::uint32_t w[80];
        for (int i = 0; i < 16; ++i)
            w[i] = (std::uint32_t(block_[4 * i]) << 24) | (std::uint32_t(block_[4 * i + 1]) << 16) |
                   (std::uint32_t(block_[4 * i + 2]) << 8) | std::uint32_t(block_[4 * i + 3]);
        for (int i = 16; i < 80; ++i) w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
        std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3], e = h_[4];
        for (int i = 0; i < 80; ++i) {
            std::uint32_t f, kc;
            if (i < 20) { f = (b & c) | (~b & d); kc = 0x5A827999; }
            else if (i < 40) { f = b ^ c ^ d; kc = 0x6ED9EBA1; }
            else if (i < 60) { f = (b & c) | (b & d) | (c & d); kc = 0x8F1BBCDC; }
            else { f = b ^ c ^ d; kc = 0xCA62C1D6; }
            std::uint32_t t = rol(a, 5) + f + e + kc + w[i];
            e = d; d = c; c = rol(b, 30); b = a; a = t;
        }
        h_[0] += a; h_[1] += b; h_[2] += c; h_[3] += d; h_[4] += e;
    }

    std::array<std::uint32_t, 5> h_{0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0};
    unsigned char block_[64]{};
    std::size_t fill_ = 0;
    std::uint64_t total_ = 0;
};

} // namespace detail

// git blob hash: sha1("blob <len>\0" + content).
inline std::string git_blob_sha1(const std::string& content) {
    detail::Sha1 h;
    std::string header = "blob " + std::to_string(content.size());
    header.push_back('\0');
    h.update(reinterpret_cast<const unsigned char*>(header.data()), header.size());
    h.update(reinterpret_cast<const unsigned char*>(content.data()), content.size());
    return h.hex_digest();
}

// --- empirical distributions -------------------------------------------------

// Sorted sample of a scaled statistic plus provenance metadata (config echo,
// wall time, content hash).  The hash covers only the value rows, so reruns
// with identical seeds hash identically regardless of timing.
struct EmpiricalDistribution {
    std::vector<double> values; // sorted ascending
    std::map<std::string, std::string> meta;

    std::string values_csv() const {
        std::string out = "value\n";
        for (double v : values) { out += format_double(v); out.push_back('\n'); }
        return out;
    }
};

inline EmpiricalDistribution make_empirical(std::vector<double> values,
                                            std::map<std::string, std::string> meta) {
    std::sort(values.begin(), values.end());
    EmpiricalDistribution e{std::move(values), std::move(meta)};
    e.meta["content_sha1"] = git_blob_sha1(e.values_csv());
    e.meta["count"] = std::to_string(e.values.size());
    return e;
}

struct Histogram {
    std::vector<double> bin_edges; // ascending, size = bins + 1
    std::vector<double> masses;    // sums to 1
};

inline Histogram make_histogram(const EmpiricalDistribution& emp, double lo, double hi, int bins) {
    if (emp.values.empty() || bins < 1 || !(hi > lo))
        throw std::invalid_argument("make_histogram: bad arguments");
    Histogram h;
    h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i)
        h.bin_edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
    h.masses.assign(static_cast<std::size_t>(bins), 0.0);
    double w = 1.0 / static_cast<double>(emp.values.size());
    for (double v : emp.values) {
        int b = static_cast<int>(std::floor((v - lo) / (hi - lo) * bins));
        b = std::clamp(b, 0, bins - 1);
        h.masses[static_cast<std::size_t>(b)] += w;
    }
    return h;
}

// Default binning: 60 uniform bins from just below the support floor to just
// above the empirical maximum.
inline Histogram make_histogram(const EmpiricalDistribution& emp, double support_lo) {
    if (emp.values.empty()) throw std::invalid_argument("make_histogram: empty sample");
    return make_histogram(emp, support_lo - 0.05, emp.values.back() + 0.05, 60);
}

// Two-sided Kolmogorov-Smirnov statistic of a sorted sample against a CDF.
inline double ks_statistic(const EmpiricalDistribution& emp, const std::function<double(double)>& cdf) {
    if (emp.values.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    const double n = static_cast<double>(emp.values.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < emp.values.size(); ++i) {
        double F = cdf(emp.values[i]);
        ks = std::max(ks, std::fabs(F - static_cast<double>(i) / n));
        ks = std::max(ks, std::fabs(F - static_cast<double>(i + 1) / n));
    }
    return ks;
}

// As above, but with the CDF supplied at each order statistic (lets callers
// batch-evaluate quadrature-backed CDFs).
inline double ks_statistic_given(const std::vector<double>& cdf_at_sorted, std::size_t n) {
    double ks = 0.0;
    for (std::size_t i = 0; i < cdf_at_sorted.size(); ++i) {
        double F = cdf_at_sorted[i];
        ks = std::max(ks, std::fabs(F - static_cast<double>(i) / static_cast<double>(n)));
        ks = std::max(ks, std::fabs(F - static_cast<double>(i + 1) / static_cast<double>(n)));
    }
    return ks;
}

// --- serialization -----------------------------------------------------------

enum class EmitFormat { csv, json };

inline EmitFormat parse_format(const std::string& s) {
    if (s == "csv") return EmitFormat::csv;
    if (s == "json") return EmitFormat::json;
    throw std::invalid_argument("format must be csv or json");
}

inline std::string to_csv(const EmpiricalDistribution& emp) { return emp.values_csv(); }

inline std::string to_csv(const Histogram& h) {
    std::string out = "bin_lo,bin_hi,mass\n";
    for (std::size_t i = 0; i < h.masses.size(); ++i) {
        out += format_double(h.bin_edges[i]);
        out.push_back(',');
        out += format_double(h.bin_edges[i + 1]);
        out.push_back(',');
        out += format_double(h.masses[i]);
        out.push_back('\n');
    }
    return out;
}

inline nlohmann::json to_json(const EmpiricalDistribution& emp) {
    nlohmann::json j;
    j["values"] = emp.values;
    j["meta"] = emp.meta;
    return j;
}

inline EmpiricalDistribution empirical_from_json(const nlohmann::json& j) {
    EmpiricalDistribution e;
    e.values = j.at("values").get<std::vector<double>>();
    e.meta = j.at("meta").get<std::map<std::string, std::string>>();
    return e;
}

inline nlohmann::json to_json(const Histogram& h) {
    nlohmann::json j;
    j["bin_edges"] = h.bin_edges;
    j["masses"] = h.masses;
    return j;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

template <class T>
void emit(const T& obj, EmitFormat fmt, const std::string& path) {
    std::string payload = fmt == EmitFormat::csv ? to_csv(obj) : to_json(obj).dump(2) + "\n";
    write_file(path, payload);
}

} // namespace ringlat
