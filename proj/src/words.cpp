#include "npc/words.hpp"

#include <algorithm>

namespace npc::words {

std::string inverse(std::string_view w) {
    std::string out(w.rbegin(), w.rend());
    for (char& c : out) c = inverse_letter(c);
    return out;
}

std::string free_reduce(std::string_view w) {
    std::string out;
    out.reserve(w.size());
    for (char c : w) {
        if (!out.empty() && out.back() == inverse_letter(c) && out.back() != c) {
            out.pop_back();
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::string cyclic_reduce(std::string_view w) {
    std::string s = free_reduce(w);
    std::size_t lo = 0;
    std::size_t hi = s.size();
    while (hi - lo >= 2 && s[lo] == inverse_letter(s[hi - 1]) && s[lo] != s[hi - 1]) {
        ++lo;
        --hi;
    }
    return s.substr(lo, hi - lo);
}

bool is_freely_reduced(std::string_view w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == inverse_letter(w[i - 1]) && w[i] != w[i - 1]) return false;
    }
    return true;
}

bool is_cyclically_reduced(std::string_view w) {
    if (!is_freely_reduced(w)) return false;
    if (w.size() >= 2 && w.front() == inverse_letter(w.back()) && w.front() != w.back()) return false;
    return true;
}

std::string rotate(std::string_view w, std::size_t start) {
    if (w.empty()) return {};
    start %= w.size();
    std::string out(w.substr(start));
    out.append(w.substr(0, start));
    return out;
}

}  // namespace npc::words
