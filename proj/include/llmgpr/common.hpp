#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace llmgpr {

// Error taxonomy mapped to CLI exit codes: usage/config -> 1, data -> 2,
// training divergence -> 3.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

std::vector<std::string> split(const std::string& s, char sep);
std::string strip(const std::string& s);
std::string lower(const std::string& s);
bool starts_with(const std::string& s, const std::string& prefix);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);

std::uint64_t fnv1a(const void* bytes, std::size_t n,
                    std::uint64_t seed = 1469598103934665603ull);
std::uint64_t fnv1a(const std::string& s);
std::string hex64(std::uint64_t v);

// Fixed formatting used by every report writer so outputs are byte-stable.
std::string format_double(double v, int decimals);

// Runs fn(i) for i in [0, n) on up to n_threads workers with a fixed
// block partition; results must be written to caller-owned slots by index.
void parallel_for(std::size_t n, int n_threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace llmgpr
