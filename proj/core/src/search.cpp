#include "syncgame/search.hpp"

namespace syncgame {

std::string_view to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found:
        return "found";
    case SearchStatus::ProvenNone:
        return "proven-none";
    case SearchStatus::Inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

int exit_code(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found:
        return 0;
    case SearchStatus::ProvenNone:
        return 20;
    case SearchStatus::Inconclusive:
        return 30;
    }
    return 70;
}

} // namespace syncgame
