#pragma once

#include <string>
#include <string_view>

namespace npc::words {

// Words over single-letter generators; an uppercase letter is the inverse of its
// lowercase counterpart.

inline char inverse_letter(char c) {
    if (c >= 'a' && c <= 'z') return static_cast<char>(c - 'a' + 'A');
    if (c >= 'A' && c <= 'Z') return static_cast<char>(c - 'A' + 'a');
    return c;
}

inline char generator_of(char c) { return (c >= 'A' && c <= 'Z') ? inverse_letter(c) : c; }

std::string inverse(std::string_view w);
std::string free_reduce(std::string_view w);
// Free reduction followed by cancelling inverse letters at the two ends.
std::string cyclic_reduce(std::string_view w);
bool is_freely_reduced(std::string_view w);
bool is_cyclically_reduced(std::string_view w);
// Cyclic rotation starting at position `start`.
std::string rotate(std::string_view w, std::size_t start);

}  // namespace npc::words
