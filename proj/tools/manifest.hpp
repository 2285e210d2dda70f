#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syncgame::cli {

std::string sha256_hex(const std::string &bytes);
std::string read_file(const std::string &path);

/// Everything needed to rerun a command and check that it produced the same
/// bytes. Deliberately free of timestamps and host details.
class RunManifest {
public:
    RunManifest(std::string command, std::vector<std::string> arguments);

    void set_seed(std::uint64_t seed) { seed_ = seed; }
    void set_budget(std::optional<std::uint64_t> millis, std::optional<std::uint64_t> nodes)
    {
        budget_millis_ = millis;
        budget_nodes_ = nodes;
    }
    void set_tol(double tol) { tol_ = tol; }
    void add_input(const std::string &path);
    /// Writes `contents` to `path` and records its digest.
    void write_output(const std::string &path, const std::string &contents);

    std::string to_json() const;
    void save(const std::string &path) const;

private:
    struct File {
        std::string path;
        std::string sha256;
    };

    std::string command_;
    std::vector<std::string> arguments_;
    std::uint64_t seed_ = 0;
    std::optional<std::uint64_t> budget_millis_;
    std::optional<std::uint64_t> budget_nodes_;
    std::optional<double> tol_;
    std::vector<File> inputs_;
    std::vector<File> outputs_;
};

} // namespace syncgame::cli
