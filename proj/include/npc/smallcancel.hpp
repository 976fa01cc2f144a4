#pragma once

#include <optional>
#include <string>
#include <vector>

#include "npc/complex.hpp"
#include "npc/report.hpp"

namespace npc {

// A place where a piece sits: cell (or relator) index, start offset along its
// canonical boundary, and whether it is read backwards (for relators: inside
// the inverse relator).
struct Occurrence {
    int index = 0;
    int offset = 0;
    bool reversed = false;

    bool operator==(const Occurrence&) const = default;
    auto operator<=>(const Occurrence&) const = default;
};

struct Piece {
    std::vector<VertexId> path;  // complex pieces
    std::string word;            // presentation pieces
    int length = 0;
    Occurrence first;
    Occurrence second;
};

struct C16Report {
    std::vector<int> max_piece;        // per polygon / relator
    std::vector<int> boundary_length;  // parallel to max_piece
    bool passed = true;
    int worst = -1;  // index with the largest max_piece / boundary ratio
    std::optional<Piece> worst_piece;
    std::string note;
};

CheckReport to_report(const C16Report& r, const std::string& name);

// Maximal common boundary paths of distinct polygons (both orders), followed by
// every edge of the complex as a length-1 piece.
std::vector<Piece> enumerate_pieces_complex(const Complex& complex);
C16Report check_c16_complex(const Complex& complex);

// Maximal common subwords between distinct positions of the cyclic words r and
// r^-1 (r ranging over the relators). Two positions in the same cyclic word at
// cyclic distance d are compared over at most n - min(d, n-d) letters, so a
// proper power (ab)^3 yields the piece abab. A full match between different
// cyclic words is a boundary symmetry and does not count.
std::vector<Piece> enumerate_pieces_presentation(const Presentation& p);
C16Report check_c16_presentation(const Presentation& p);

// Dehn's algorithm for a C'(1/6) presentation.
class DehnSolver {
public:
    // Throws NotC16 unless check_c16_presentation passes.
    explicit DehnSolver(const Presentation& p);

    // Free and cyclic reduction, then repeated replacement of the leftmost
    // longest subword that is more than half of a cyclic conjugate of some r^+-1.
    // Throws InvalidArgument on letters outside the alphabet.
    std::string reduce(std::string_view word) const;
    bool is_trivial(std::string_view word) const { return reduce(word).empty(); }
    // Same replacements without cyclic reduction, so the result represents the
    // same group element as the input.
    std::string reduce_linear(std::string_view word) const;
    const Presentation& presentation() const { return p_; }

private:
    std::string run(std::string_view word, bool cyclic) const;

    Presentation p_;
    std::vector<std::string> conjugates_;
};

std::string dehn_reduce(const Presentation& p, std::string_view word);
bool is_trivial(const Presentation& p, std::string_view word);

json to_json(const Piece& piece);
json to_json(const C16Report& r);

}  // namespace npc
