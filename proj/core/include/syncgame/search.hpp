#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

namespace syncgame {

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_millis = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t seed = 0;
};

enum class SearchStatus { Found, ProvenNone, Inconclusive };

std::string_view to_string(SearchStatus s);

/// CLI exit code for a search outcome: 0, 20 or 30.
int exit_code(SearchStatus s);

template <class Certificate>
struct SearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<Certificate> certificate;
    std::uint64_t nodes = 0;
    double millis = 0;
};

/// Node and wall-clock accounting shared by the search engines.
class BudgetClock {
public:
    explicit BudgetClock(const SearchBudget &budget)
        : budget_(budget), start_(std::chrono::steady_clock::now())
    {
    }

    /// Counts one node; false once either limit is hit.
    bool tick()
    {
        if (exhausted_)
            return false;
        ++nodes_;
        if (nodes_ > budget_.max_nodes || ((nodes_ & 1023U) == 0 && elapsed_millis() > static_cast<double>(budget_.max_millis)))
            exhausted_ = true;
        return !exhausted_;
    }

    bool exhausted() const noexcept { return exhausted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    double elapsed_millis() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace syncgame
