// Independent reference computations used by the tests. They share no code with
// the library beyond the data types.
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <deque>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "npc/complex.hpp"

namespace oracle {

using npc::Complex;
using npc::VertexId;

// Floyd-Warshall over the raw edge list, keyed by vertex id.
struct Distances {
    std::map<VertexId, int> index;
    std::vector<std::vector<int>> d;
    int operator()(VertexId a, VertexId b) const { return d[static_cast<std::size_t>(index.at(a))][static_cast<std::size_t>(index.at(b))]; }
};

inline Distances floyd(const Complex& c) {
    Distances out;
    const auto& ids = c.vertex_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) out.index[ids[i]] = static_cast<int>(i);
    const std::size_t n = ids.size();
    const int inf = 1 << 28;
    out.d.assign(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i) out.d[i][i] = 0;
    for (const auto& [a, b] : c.raw_edges()) {
        if (a == b) continue;
        const auto i = static_cast<std::size_t>(out.index.at(a));
        const auto j = static_cast<std::size_t>(out.index.at(b));
        out.d[i][j] = out.d[j][i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out.d[i][j] = std::min(out.d[i][j], out.d[i][k] + out.d[k][j]);
    return out;
}

inline std::map<VertexId, std::set<VertexId>> neighbours(const Complex& c) {
    std::map<VertexId, std::set<VertexId>> nb;
    for (VertexId v : c.vertex_ids()) nb[v];
    for (const auto& [a, b] : c.raw_edges()) {
        if (a == b) continue;
        nb[a].insert(b);
        nb[b].insert(a);
    }
    return nb;
}

// All shortest paths by depth-first search over every simple path of length d(u,v).
inline std::vector<std::vector<VertexId>> all_geodesics(const Complex& c, VertexId u, VertexId v) {
    const auto dist = floyd(c);
    const auto nb = neighbours(c);
    const int target = dist(u, v);
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> path{u};
    std::function<void()> go = [&] {
        if (static_cast<int>(path.size()) - 1 == target) {
            if (path.back() == v) out.push_back(path);
            return;
        }
        for (VertexId x : nb.at(path.back())) {
            if (std::find(path.begin(), path.end(), x) != path.end()) continue;
            path.push_back(x);
            go();
            path.pop_back();
        }
    };
    go();
    std::sort(out.begin(), out.end());
    return out;
}

// Gromov four-point delta (doubled) by brute force over all quadruples.
inline int four_point_twice_delta(const Complex& c) {
    const auto dist = floyd(c);
    const auto& ids = c.vertex_ids();
    int best = 0;
    for (VertexId x : ids)
        for (VertexId y : ids)
            for (VertexId z : ids)
                for (VertexId w : ids) {
                    int s[3] = {dist(x, y) + dist(z, w), dist(x, z) + dist(y, w), dist(x, w) + dist(y, z)};
                    std::sort(s, s + 3);
                    best = std::max(best, s[2] - s[1]);
                }
    return best;
}

// Embedded cycles up to a given length, as sets of canonical vertex sequences.
inline std::set<std::vector<VertexId>> simple_cycles(const Complex& c, int max_len) {
    const auto nb = neighbours(c);
    std::set<std::vector<VertexId>> out;
    std::vector<VertexId> path;
    std::function<void()> go = [&] {
        const VertexId s = path.front();
        if (path.size() >= 3 && nb.at(path.back()).count(s)) {
            auto best = path;
            for (int rev = 0; rev < 2; ++rev) {
                auto w = path;
                if (rev) std::reverse(w.begin(), w.end());
                for (std::size_t r = 0; r < w.size(); ++r) {
                    std::rotate(w.begin(), w.begin() + 1, w.end());
                    best = std::min(best, w);
                }
            }
            out.insert(best);
        }
        if (static_cast<int>(path.size()) == max_len) return;
        for (VertexId x : nb.at(path.back())) {
            if (x <= s || std::find(path.begin(), path.end(), x) != path.end()) continue;
            path.push_back(x);
            go();
            path.pop_back();
        }
    };
    for (VertexId s : c.vertex_ids()) {
        path = {s};
        go();
    }
    return out;
}

// Path-around length: BFS over edges with exactly one endpoint in k, two edges
// adjacent when some cell boundary contains both. -1 when unreachable.
inline int path_around_length(const Complex& c, const std::set<VertexId>& k, std::pair<VertexId, VertexId> e,
                              std::pair<VertexId, VertexId> e2) {
    using E = std::pair<VertexId, VertexId>;
    auto meets = [&](E x) { return (k.count(x.first) > 0) != (k.count(x.second) > 0); };
    std::vector<std::vector<E>> cell_edges;
    for (const auto& w : c.cell_walks()) {
        std::vector<E> es;
        for (std::size_t i = 0; i < w.size(); ++i) es.push_back(std::minmax(w[i], w[(i + 1) % w.size()]));
        cell_edges.push_back(es);
    }
    if (e == e2) {
        for (const auto& es : cell_edges)
            if (std::find(es.begin(), es.end(), e) != es.end()) return 1;
        return -1;
    }
    std::map<E, int> dist{{e, 0}};
    std::deque<E> q{e};
    while (!q.empty()) {
        const E x = q.front();
        q.pop_front();
        for (const auto& es : cell_edges) {
            if (std::find(es.begin(), es.end(), x) == es.end()) continue;
            for (const auto& y : es) {
                if (meets(y) && !dist.count(y)) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
    }
    return dist.count(e2) ? dist[e2] : -1;
}

// Words: uppercase letters are inverses.
inline char inv(char ch) { return static_cast<char>(std::islower(static_cast<unsigned char>(ch)) ? std::toupper(ch) : std::tolower(ch)); }

inline std::string inverse_word(const std::string& w) {
    std::string out(w.rbegin(), w.rend());
    for (char& ch : out) ch = inv(ch);
    return out;
}

inline std::string free_reduce(const std::string& w) {
    std::string s;
    for (char ch : w) {
        if (!s.empty() && s.back() == inv(ch)) {
            s.pop_back();
        } else {
            s.push_back(ch);
        }
    }
    return s;
}

// Largest common subword between two distinct positions of the symmetrised
// relator set, each occurrence read cyclically, capped at |r| - 1.
inline std::vector<int> naive_max_pieces(const std::vector<std::string>& relators) {
    struct Pos {
        std::string w;
        std::size_t rel;
        int start;
    };
    std::vector<Pos> positions;
    for (std::size_t i = 0; i < relators.size(); ++i) {
        for (const auto& w : {relators[i], inverse_word(relators[i])}) {
            for (std::size_t s = 0; s < w.size(); ++s) positions.push_back({w.substr(s) + w.substr(0, s), i, static_cast<int>(positions.size())});
        }
    }
    std::vector<int> best(relators.size(), 0);
    for (const auto& p : positions) {
        for (const auto& q : positions) {
            if (p.start == q.start) continue;
            const std::size_t cap = std::min(p.w.size(), q.w.size()) - 1;
            std::size_t k = 0;
            while (k < cap && p.w[k] == q.w[k]) ++k;
            // Identical cyclic words from different relators are the same cell read twice.
            if (p.rel != q.rel && p.w == q.w) continue;
            best[p.rel] = std::max(best[p.rel], static_cast<int>(k));
        }
    }
    return best;
}

// Holonomy of the regular octagon group acting on the disc model. Side pairings
// of a regular hyperbolic octagon with angles pi/4, labelled abABcdCD; an element
// is trivial iff it keeps the origin inside its own tile.
class Fuchsian {
public:
    using M = std::array<std::complex<double>, 4>;

    Fuchsian() {
        const std::string labels = "abABcdCD";
        const double rho = std::acosh(1.0 / std::tan(std::numbers::pi / 8));
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const char l = labels[i];
            if (!std::islower(static_cast<unsigned char>(l))) continue;
            const std::size_t j = labels.find(inv(l));
            gen_[l] = mul(mul(rot(static_cast<double>(i) * std::numbers::pi / 4), tr(2 * rho)), rot(std::numbers::pi - static_cast<double>(j) * std::numbers::pi / 4));
            gen_[inv(l)] = inverse(gen_[l]);
        }
        std::swap(gen_['b'], gen_['B']);
        std::swap(gen_['d'], gen_['D']);
    }

    // |image of the origin| in the disc.
    double displacement(const std::string& w) const {
        M m{1, 0, 0, 1};
        for (char ch : w) m = mul(m, gen_.at(ch));
        return std::abs(m[1] / m[3]);
    }
    bool trivial(const std::string& w) const { return displacement(w) < 0.5; }

private:
    static M mul(const M& a, const M& b) {
        return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    }
    static M inverse(const M& a) { return {a[3], -a[1], -a[2], a[0]}; }
    static M rot(double t) { return {std::polar(1.0, t / 2), 0, 0, std::polar(1.0, -t / 2)}; }
    static M tr(double t) { return {std::cosh(t / 2), std::sinh(t / 2), std::sinh(t / 2), std::cosh(t / 2)}; }

    std::map<char, M> gen_;
};

}  // namespace oracle
