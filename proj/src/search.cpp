#include <algorithm>
#include <unordered_map>

#include "npc/diagram.hpp"
#include "npc/error.hpp"

namespace npc {

namespace {

struct WalkHash {
    std::size_t operator()(const std::vector<VertexId>& w) const {
        std::size_t h = w.size();
        for (VertexId x : w) h = h * 1000003u ^ static_cast<std::size_t>(x);
        return h;
    }
};

// Removes cyclic backtracks x y x -> x. Applies the same moves to `handles`
// when given, reporting each fold through `on_fold(kept, dropped)`.
template <class OnFold>
void fold(std::vector<VertexId>& w, std::vector<int>* handles, OnFold&& on_fold) {
    bool changed = true;
    while (changed && w.size() >= 2) {
        changed = false;
        const std::size_t n = w.size();
        if (n == 2) {
            // x y: the edge is a spur.
            w.pop_back();
            if (handles) handles->pop_back();
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t prev = (i + n - 1) % n;
            const std::size_t next = (i + 1) % n;
            if (w[prev] != w[next]) continue;
            if (handles) on_fold((*handles)[prev], (*handles)[next]);
            // Drop positions i and next.
            std::vector<std::size_t> drop{i, next};
            std::sort(drop.begin(), drop.end());
            for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(*it));
                if (handles) handles->erase(handles->begin() + static_cast<std::ptrdiff_t>(*it));
            }
            changed = true;
            break;
        }
    }
}

}  // namespace

struct DiagramSearcher::Impl {
    const Complex* target;
    std::size_t max_len = 0;

    struct Entry {
        int exact = -1;       // known minimum, -1 if unknown
        int failed_at = -1;   // no filling of area <= failed_at
    };
    std::unordered_map<std::vector<VertexId>, Entry, WalkHash> memo;

    explicit Impl(const Complex& t) : target(&t) {
        for (const auto& c : t.cell_walks()) max_len = std::max(max_len, c.size());
    }

    int lower_bound(const std::vector<VertexId>& w) const {
        if (w.size() <= 1) return 0;
        std::vector<std::pair<VertexId, VertexId>> darts;
        for (std::size_t i = 0; i < w.size(); ++i) darts.emplace_back(w[i], w[(i + 1) % w.size()]);
        std::sort(darts.begin(), darts.end());
        std::size_t lonely = 0;
        for (const auto& [a, b] : darts) {
            if (!std::binary_search(darts.begin(), darts.end(), std::make_pair(b, a))) ++lonely;
        }
        if (lonely == 0) return 0;
        if (max_len == 0) return 1 << 29;
        return static_cast<int>((lonely + max_len - 1) / max_len);
    }

    // Cells at edge w0 -> w1 as the walk w0, w1, c2, ..., c_{m-1}.
    std::vector<std::vector<VertexId>> cells_at(VertexId a, VertexId b) const {
        std::vector<std::vector<VertexId>> out;
        const int e = target->edge_index(target->index_of(a), target->index_of(b));
        if (e < 0) return out;
        for (int c : target->cells_of_edge(e)) {
            const auto& tw = target->cell_walks()[static_cast<std::size_t>(c)];
            const std::size_t m = tw.size();
            const std::size_t p = static_cast<std::size_t>(std::find(tw.begin(), tw.end(), a) - tw.begin());
            const int dir = tw[(p + 1) % m] == b ? 1 : -1;
            std::vector<VertexId> walk;
            for (std::size_t i = 0; i < m; ++i) {
                walk.push_back(tw[(p + m + static_cast<std::size_t>(dir) * i) % m]);
            }
            out.push_back(std::move(walk));
        }
        return out;
    }

    static std::vector<VertexId> attach(const std::vector<VertexId>& w, const std::vector<VertexId>& cell) {
        std::vector<VertexId> out{w[0]};
        for (std::size_t k = cell.size() - 1; k >= 2; --k) out.push_back(cell[k]);
        out.insert(out.end(), w.begin() + 1, w.end());
        return out;
    }

    static std::vector<std::size_t> bridges(const std::vector<VertexId>& w) {
        std::vector<std::size_t> out;
        const std::size_t n = w.size();
        for (std::size_t j = 2; j + 2 <= n; ++j) {
            if (w[j] == w[1] && w[j + 1] == w[0]) out.push_back(j);
        }
        return out;
    }

    // Minimal area if <= budget, else -1. `w` must be folded.
    int solve(std::vector<VertexId> w, int budget) {
        fold(w, nullptr, [](int, int) {});
        if (w.size() <= 1) return 0;
        if (budget < 0) return -1;
        auto key = canonical_cycle<VertexId>(w);
        {
            auto it = memo.find(key);
            if (it != memo.end()) {
                if (it->second.exact >= 0) return it->second.exact <= budget ? it->second.exact : -1;
                if (budget <= it->second.failed_at) return -1;
            }
        }
        int best = -1;
        if (lower_bound(w) <= budget) {
            // Branch on the first edge of the canonical rotation.
            const auto& v = key;
            for (const auto& cell : cells_at(v[0], v[1])) {
                const int limit = (best < 0 ? budget : best - 1) - 1;
                if (limit < 0) break;
                const int a = solve(attach(v, cell), limit);
                if (a >= 0 && (best < 0 || a + 1 < best)) best = a + 1;
            }
            for (std::size_t j : bridges(v)) {
                const int limit = best < 0 ? budget : best - 1;
                std::vector<VertexId> left(v.begin() + 1, v.begin() + static_cast<std::ptrdiff_t>(j));
                std::vector<VertexId> right(v.begin() + static_cast<std::ptrdiff_t>(j) + 1, v.end());
                const int a = solve(left, limit);
                if (a < 0) continue;
                const int b = solve(right, limit - a);
                if (b >= 0) best = a + b;
            }
        }
        auto& entry = memo[key];
        if (best >= 0) {
            entry.exact = best;
        } else {
            entry.failed_at = std::max(entry.failed_at, budget);
        }
        return best;
    }

    int minimum(const std::vector<VertexId>& w, int cap) {
        std::vector<VertexId> f = w;
        fold(f, nullptr, [](int, int) {});
        for (int b = lower_bound(f); b <= cap; ++b) {
            const int r = solve(f, b);
            if (r >= 0) return r;
        }
        return -1;
    }

    // Replays the optimum for a walk of builder handles.
    void replay(DiagramBuilder& builder, std::vector<int> handles) {
        std::vector<VertexId> w;
        for (int h : handles) w.push_back(builder.label(h));
        fold(w, &handles, [&](int kept, int dropped) { builder.merge(kept, dropped); });
        if (w.size() <= 1) return;
        const int total = solve(w, 1 << 29);
        for (const auto& cell : cells_at(w[0], w[1])) {
            if (total < 1 || solve(attach(w, cell), total - 1) != total - 1) continue;
            std::vector<int> walk{handles[0], handles[1]};
            for (std::size_t k = 2; k < cell.size(); ++k) walk.push_back(builder.add_vertex(cell[k]));
            builder.add_cell(walk);
            std::vector<int> next{handles[0]};
            for (std::size_t k = walk.size() - 1; k >= 2; --k) next.push_back(walk[k]);
            next.insert(next.end(), handles.begin() + 1, handles.end());
            replay(builder, std::move(next));
            return;
        }
        for (std::size_t j : bridges(w)) {
            std::vector<VertexId> left(w.begin() + 1, w.begin() + static_cast<std::ptrdiff_t>(j));
            std::vector<VertexId> right(w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end());
            const int a = solve(left, total);
            if (a < 0) continue;
            if (solve(right, total - a) != total - a) continue;
            builder.merge(handles[1], handles[j]);
            builder.merge(handles[0], handles[j + 1]);
            replay(builder, std::vector<int>(handles.begin() + 1, handles.begin() + static_cast<std::ptrdiff_t>(j)));
            replay(builder, std::vector<int>(handles.begin() + static_cast<std::ptrdiff_t>(j) + 1, handles.end()));
            return;
        }
        throw Error(ErrorKind::FillFailed, "search replay lost the optimum");
    }
};

DiagramSearcher::DiagramSearcher(const Complex& target) : impl_(std::make_unique<Impl>(target)) {}
DiagramSearcher::~DiagramSearcher() = default;

namespace {

std::vector<VertexId> open_loop(const Complex& target, std::vector<VertexId> loop) {
    if (loop.size() >= 2 && loop.front() == loop.back()) loop.pop_back();
    for (VertexId v : loop) target.index_of(v);  // throws UnknownVertex
    for (std::size_t i = 0; i < loop.size() && loop.size() >= 2; ++i) {
        const VertexId a = loop[i];
        const VertexId b = loop[(i + 1) % loop.size()];
        if (a == b || !target.adjacent(target.index_of(a), target.index_of(b))) {
            throw Error(ErrorKind::InvalidArgument,
                        "loop steps " + std::to_string(a) + " -> " + std::to_string(b) + " along a non-edge");
        }
    }
    if (loop.empty()) throw Error(ErrorKind::InvalidArgument, "empty loop");
    return loop;
}

}  // namespace

std::optional<int> DiagramSearcher::min_area(const std::vector<VertexId>& loop, int cap) {
    const int r = impl_->minimum(open_loop(*impl_->target, loop), cap);
    if (r < 0) return std::nullopt;
    return r;
}

void DiagramSearcher::fill_into(DiagramBuilder& b, const std::vector<int>& loop, int cap) {
    std::vector<VertexId> w;
    for (int h : loop) w.push_back(b.label(h));
    open_loop(*impl_->target, w);
    if (impl_->minimum(w, cap) < 0) {
        throw Error(ErrorKind::NotFillable, "no filling of area <= " + std::to_string(cap));
    }
    impl_->replay(b, loop);
}

DiscDiagram DiagramSearcher::search(const std::vector<VertexId>& loop_in, int cap) {
    const auto loop = open_loop(*impl_->target, loop_in);
    DiagramBuilder b(*impl_->target);
    std::vector<int> handles;
    for (VertexId v : loop) handles.push_back(b.add_vertex(v));
    fill_into(b, handles, cap);
    if (handles.size() == 1) return b.build(handles);
    // The boundary is the loop itself, with spurs folded into it.
    auto d = b.build(handles);
    return d;
}

std::size_t DiagramSearcher::memo_size() const { return impl_->memo.size(); }

DiscDiagram reduced_diagram_search(const Complex& target, const std::vector<VertexId>& loop, int area_cap) {
    DiagramSearcher s(target);
    return s.search(loop, area_cap);
}

}  // namespace npc
