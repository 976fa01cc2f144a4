#include "npc/smallcancel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "npc/error.hpp"
#include "npc/words.hpp"

namespace npc {

namespace {

// a/b < c/d for non-negative counts and positive denominators.
bool ratio_less(int a, int b, int c, int d) { return static_cast<long long>(a) * d < static_cast<long long>(c) * b; }

void finish(C16Report& r) {
    r.passed = true;
    r.worst = -1;
    for (std::size_t i = 0; i < r.max_piece.size(); ++i) {
        if (6 * r.max_piece[i] >= r.boundary_length[i]) r.passed = false;
        if (r.worst < 0 || ratio_less(r.max_piece[static_cast<std::size_t>(r.worst)],
                                      r.boundary_length[static_cast<std::size_t>(r.worst)], r.max_piece[i],
                                      r.boundary_length[i])) {
            r.worst = static_cast<int>(i);
        }
    }
}

}  // namespace

std::vector<Piece> enumerate_pieces_complex(const Complex& complex) {
    std::vector<Piece> out;
    const int cells = static_cast<int>(complex.cell_count());
    for (int a = 0; a < cells; ++a) {
        const auto& ra = complex.cell(a);
        const int n = static_cast<int>(ra.size());
        if (n == 0) continue;
        std::set<int> partners;
        for (int i = 0; i < n; ++i) {
            const int e = complex.edge_index(ra[static_cast<std::size_t>(i)], ra[static_cast<std::size_t>((i + 1) % n)]);
            if (e < 0) continue;
            for (int b : complex.cells_of_edge(e)) {
                if (b != a) partners.insert(b);
            }
        }
        for (int b : partners) {
            const auto& rb = complex.cell(b);
            if (complex.cell_walks()[static_cast<std::size_t>(a)] == complex.cell_walks()[static_cast<std::size_t>(b)]) {
                continue;  // identical boundaries: the identity homeomorphism commutes
            }
            const int m = static_cast<int>(rb.size());
            std::map<int, int> pos_b;
            for (int j = 0; j < m; ++j) pos_b[rb[static_cast<std::size_t>(j)]] = j;
            auto shared = [&](int i) {
                const int x = ra[static_cast<std::size_t>(((i % n) + n) % n)];
                const int y = ra[static_cast<std::size_t>(((i + 1) % n + n) % n)];
                auto ix = pos_b.find(x);
                auto iy = pos_b.find(y);
                if (ix == pos_b.end() || iy == pos_b.end()) return false;
                const int d = ((iy->second - ix->second) % m + m) % m;
                return d == 1 || d == m - 1;
            };
            for (int s = 0; s < n; ++s) {
                if (!shared(s) || shared(s - 1)) continue;
                int len = 0;
                while (len < n && shared(s + len)) ++len;
                Piece p;
                for (int k = 0; k <= len; ++k) p.path.push_back(complex.id_of(ra[static_cast<std::size_t>((s + k) % n)]));
                p.length = len;
                p.first = {a, s, false};
                const int start_b = pos_b[ra[static_cast<std::size_t>(s)]];
                const bool forward = rb[static_cast<std::size_t>((start_b + 1) % m)] == ra[static_cast<std::size_t>((s + 1) % n)];
                p.second = {b, start_b, !forward};
                out.push_back(std::move(p));
            }
        }
    }
    for (int e = 0; e < static_cast<int>(complex.edge_count()); ++e) {
        const auto [x, y] = complex.edges()[static_cast<std::size_t>(e)];
        Piece p;
        p.path = {complex.id_of(x), complex.id_of(y)};
        p.length = 1;
        if (!complex.cells_of_edge(e).empty()) {
            const int c = complex.cells_of_edge(e).front();
            const auto& w = complex.cell(c);
            const auto it = std::find(w.begin(), w.end(), x);
            const int i = static_cast<int>(it - w.begin());
            const int m = static_cast<int>(w.size());
            const bool forward = w[static_cast<std::size_t>((i + 1) % m)] == y;
            p.first = p.second = {c, forward ? i : (i + m - 1) % m, !forward};
        } else {
            p.first = p.second = {-1, 0, false};
        }
        out.push_back(std::move(p));
    }
    return out;
}

C16Report check_c16_complex(const Complex& complex) {
    C16Report r;
    const int cells = static_cast<int>(complex.cell_count());
    r.max_piece.assign(static_cast<std::size_t>(cells), 1);
    for (int c = 0; c < cells; ++c) r.boundary_length.push_back(static_cast<int>(complex.cell_walks()[static_cast<std::size_t>(c)].size()));
    std::vector<std::optional<Piece>> best(static_cast<std::size_t>(cells));
    for (auto& p : enumerate_pieces_complex(complex)) {
        const int c = p.first.index;
        if (c < 0) continue;
        auto& slot = best[static_cast<std::size_t>(c)];
        if (!slot || p.length > slot->length) {
            r.max_piece[static_cast<std::size_t>(c)] = std::max(r.max_piece[static_cast<std::size_t>(c)], p.length);
            slot = std::move(p);
        }
    }
    finish(r);
    if (cells == 0) r.note = "no polygons; condition holds vacuously";
    if (r.worst >= 0) r.worst_piece = best[static_cast<std::size_t>(r.worst)];
    return r;
}

namespace {

struct CyclicWord {
    std::string w;
    int relator;
    bool inverted;
    char at(int i) const {
        const int n = static_cast<int>(w.size());
        return w[static_cast<std::size_t>(((i % n) + n) % n)];
    }
};

std::vector<CyclicWord> cyclic_words(const Presentation& p) {
    std::vector<CyclicWord> out;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        out.push_back({p.relators[i], static_cast<int>(i), false});
        out.push_back({words::inverse(p.relators[i]), static_cast<int>(i), true});
    }
    return out;
}

// Length of the piece starting at (a, pa) and (b, pb); 0 if the occurrences are
// the same position or related by a symmetry of the whole boundary.
int piece_length(const std::vector<CyclicWord>& cw, int a, int pa, int b, int pb) {
    const auto& x = cw[static_cast<std::size_t>(a)];
    const auto& y = cw[static_cast<std::size_t>(b)];
    const int n = static_cast<int>(x.w.size());
    const int m = static_cast<int>(y.w.size());
    int cap;
    if (a == b) {
        const int d = ((pb - pa) % n + n) % n;
        if (d == 0) return 0;
        cap = n - std::min(d, n - d);
    } else {
        cap = std::min(n, m);
    }
    int k = 0;
    while (k < cap && x.at(pa + k) == y.at(pb + k)) ++k;
    if (a != b && k == n && n == m) return 0;
    return k;
}

}  // namespace

std::vector<Piece> enumerate_pieces_presentation(const Presentation& p) {
    const auto cw = cyclic_words(p);
    std::vector<Piece> out;
    const int words_count = static_cast<int>(cw.size());
    for (int a = 0; a < words_count; ++a) {
        const int n = static_cast<int>(cw[static_cast<std::size_t>(a)].w.size());
        for (int pa = 0; pa < n; ++pa) {
            for (int b = 0; b < words_count; ++b) {
                const int m = static_cast<int>(cw[static_cast<std::size_t>(b)].w.size());
                for (int pb = 0; pb < m; ++pb) {
                    const int len = piece_length(cw, a, pa, b, pb);
                    if (len == 0) continue;
                    // Keep only left-maximal pieces.
                    if (piece_length(cw, a, pa - 1, b, pb - 1) == len + 1) continue;
                    Piece piece;
                    for (int k = 0; k < len; ++k) piece.word.push_back(cw[static_cast<std::size_t>(a)].at(pa + k));
                    piece.length = len;
                    piece.first = {cw[static_cast<std::size_t>(a)].relator, pa, cw[static_cast<std::size_t>(a)].inverted};
                    piece.second = {cw[static_cast<std::size_t>(b)].relator, pb, cw[static_cast<std::size_t>(b)].inverted};
                    out.push_back(std::move(piece));
                }
            }
        }
    }
    return out;
}

C16Report check_c16_presentation(const Presentation& p) {
    C16Report r;
    r.max_piece.assign(p.relators.size(), 0);
    for (const auto& rel : p.relators) r.boundary_length.push_back(static_cast<int>(rel.size()));
    std::vector<std::optional<Piece>> best(p.relators.size());
    for (auto& piece : enumerate_pieces_presentation(p)) {
        const auto i = static_cast<std::size_t>(piece.first.index);
        if (piece.length > r.max_piece[i]) {
            r.max_piece[i] = piece.length;
            best[i] = std::move(piece);
        }
    }
    finish(r);
    if (p.relators.empty()) {
        r.note = "no relators; condition holds vacuously";
    } else if (std::all_of(r.max_piece.begin(), r.max_piece.end(), [](int x) { return x == 0; })) {
        r.note = "no two distinct occurrences share a letter; condition holds vacuously";
    }
    if (r.worst >= 0) r.worst_piece = best[static_cast<std::size_t>(r.worst)];
    return r;
}

json to_json(const Piece& piece) {
    json j;
    if (!piece.word.empty() || piece.path.empty()) {
        j["word"] = piece.word;
    } else {
        j["path"] = piece.path;
    }
    j["length"] = piece.length;
    auto occ = [](const Occurrence& o) {
        return json{{"index", o.index}, {"offset", o.offset}, {"reversed", o.reversed}};
    };
    j["first"] = occ(piece.first);
    j["second"] = occ(piece.second);
    return j;
}

json to_json(const C16Report& r) {
    json j;
    j["max_piece"] = r.max_piece;
    j["boundary_length"] = r.boundary_length;
    j["verdict"] = r.passed ? "pass" : "fail";
    if (r.worst >= 0) j["worst"] = r.worst;
    if (r.worst_piece) j["worst_piece"] = to_json(*r.worst_piece);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

CheckReport to_report(const C16Report& r, const std::string& name) {
    const int overall = r.max_piece.empty() ? 0 : *std::max_element(r.max_piece.begin(), r.max_piece.end());
    json stats = {{"max_piece_length", overall}, {"max_piece", r.max_piece}, {"boundary_length", r.boundary_length}};
    if (!r.note.empty()) stats["note"] = r.note;
    if (r.passed) return CheckReport::pass(name, stats);
    json witness = {{"index", r.worst},
                    {"max_piece", r.max_piece[static_cast<std::size_t>(r.worst)]},
                    {"boundary_length", r.boundary_length[static_cast<std::size_t>(r.worst)]}};
    if (r.worst_piece) witness["piece"] = to_json(*r.worst_piece);
    return CheckReport::fail(name, witness, stats);
}

// ---------------------------------------------------------------------------

DehnSolver::DehnSolver(const Presentation& p) : p_(p) {
    const auto report = check_c16_presentation(p);
    if (!report.passed) {
        throw Error(ErrorKind::NotC16, "presentation fails C'(1/6) at relator " + std::to_string(report.worst) +
                                           " (piece " + std::to_string(report.max_piece[static_cast<std::size_t>(report.worst)]) +
                                           ", length " + std::to_string(report.boundary_length[static_cast<std::size_t>(report.worst)]) + ")");
    }
    std::set<std::string> all;
    for (const auto& r : p.relators) {
        for (const auto& w : {r, words::inverse(r)}) {
            for (std::size_t s = 0; s < w.size(); ++s) all.insert(words::rotate(w, s));
        }
    }
    conjugates_.assign(all.begin(), all.end());
}

std::string DehnSolver::reduce(std::string_view word) const { return run(word, true); }
std::string DehnSolver::reduce_linear(std::string_view word) const { return run(word, false); }

std::string DehnSolver::run(std::string_view word, bool cyclic) const {
    for (char c : word) {
        const char g = words::generator_of(c);
        if (std::none_of(p_.generators.begin(), p_.generators.end(), [&](const std::string& s) { return s[0] == g; })) {
            throw Error(ErrorKind::InvalidArgument, "letter '" + std::string(1, c) + "' is not in the alphabet");
        }
    }
    auto normalise = [cyclic](std::string_view x) { return cyclic ? words::cyclic_reduce(x) : words::free_reduce(x); };
    std::string w = normalise(word);
    for (;;) {
        std::size_t at = 0;
        std::size_t best_k = 0;
        const std::string* best = nullptr;
        for (std::size_t i = 0; i < w.size() && !best; ++i) {
            for (const auto& c : conjugates_) {
                std::size_t k = 0;
                while (k < c.size() && i + k < w.size() && w[i + k] == c[k]) ++k;
                if (2 * k > c.size() && k > best_k) {
                    best_k = k;
                    best = &c;
                    at = i;
                }
            }
        }
        if (!best) return w;
        const std::string repl = words::inverse(std::string_view(*best).substr(best_k));
        w = normalise(w.substr(0, at) + repl + w.substr(at + best_k));
    }
}

std::string dehn_reduce(const Presentation& p, std::string_view word) { return DehnSolver(p).reduce(word); }
bool is_trivial(const Presentation& p, std::string_view word) { return DehnSolver(p).is_trivial(word); }

}  // namespace npc
