#include "npc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace npc {

namespace {
std::atomic<int> override_threads{0};
}

void set_thread_override(int n) { override_threads = n > 0 ? n : 0; }

int thread_count() {
    if (const int n = override_threads.load(); n > 0) return n;
    if (const char* s = std::getenv("NPC_THREADS")) {
        try {
            const int n = std::stoi(s);
            if (n > 0) return n;
        } catch (...) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace npc
