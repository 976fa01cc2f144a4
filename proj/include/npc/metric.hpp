#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "npc/complex.hpp"
#include "npc/report.hpp"

namespace npc {

inline constexpr int kUnreachable = -1;
inline constexpr std::size_t kDefaultGeodesicCap = 1'000'000;

// BFS distances from a vertex index; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Complex& complex, int source);

// All-pairs 1-skeleton distances by repeated BFS. Desk scale only (n^2 ints).
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Complex& complex);

    int operator()(int a, int b) const { return d_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
    std::size_t size() const { return n_; }
    bool connected() const;
    // Throws Disconnected when a and b lie in different components.
    int checked(int a, int b) const;
    std::span<const int> row(int a) const {
        return {d_.data() + static_cast<std::size_t>(a) * n_, n_};
    }

private:
    std::size_t n_ = 0;
    std::vector<int> d_;
};

std::vector<std::pair<VertexId, int>> distances(const Complex& complex, VertexId u);
int distance(const Complex& complex, VertexId u, VertexId v);

struct OrientedGeodesic {
    std::vector<VertexId> vertices;

    int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
    OrientedGeodesic reversed() const;
    bool operator==(const OrientedGeodesic&) const = default;
    auto operator<=>(const OrientedGeodesic&) const = default;
};

// Throws InvalidArgument unless the sequence is an edge path whose length equals
// the BFS distance between its ends.
OrientedGeodesic certify_geodesic(const Complex& complex, std::vector<VertexId> vertices);
bool is_geodesic(const Complex& complex, const DistanceMatrix& dist, std::span<const int> path);

struct Interval {
    VertexId source = 0;
    VertexId target = 0;
    int length = 0;
    std::vector<VertexId> vertices;                 // sorted by id
    std::vector<std::pair<int, int>> distance_pairs;  // (d(u,x), d(x,v)) parallel to vertices

    std::size_t size() const { return vertices.size(); }
};

Interval interval(const Complex& complex, VertexId u, VertexId v);
// Index form: vertices x with d(u,x)+d(x,v)=d(u,v), ascending.
std::vector<int> interval_indices(const Complex& complex, const DistanceMatrix& dist, int u, int v);

// All geodesics u -> v in lexicographic order of vertex ids. Throws CapExceeded
// as soon as more than `cap` geodesics exist.
std::vector<OrientedGeodesic> enumerate_geodesics(const Complex& complex, VertexId u, VertexId v,
                                                  std::size_t cap = kDefaultGeodesicCap);
std::vector<std::vector<int>> geodesic_paths(const Complex& complex, const DistanceMatrix& dist, int u, int v,
                                             std::size_t cap = kDefaultGeodesicCap);
// Number of geodesics, computed by DP over the interval DAG (saturates at SIZE_MAX).
std::size_t count_geodesics(const Complex& complex, const DistanceMatrix& dist, int u, int v);
// Lexicographically least geodesic (by vertex index, equivalently by id).
std::vector<int> least_geodesic(const Complex& complex, const DistanceMatrix& dist, int u, int v);

CheckReport is_convex(const Complex& complex, const Subcomplex& k, std::size_t cap = kDefaultGeodesicCap);
bool is_convex_fast(const Complex& complex, const DistanceMatrix& dist, const Subcomplex& k);

enum class DeltaMethod { SlimTriangles, FourPoint };

std::string_view to_string(DeltaMethod method);

struct DeltaEstimate {
    int twice_delta = 0;  // delta = twice_delta / 2
    DeltaMethod method = DeltaMethod::SlimTriangles;
    std::vector<VertexId> witness;  // triple or quadruple, empty for trivial complexes

    double value() const { return twice_delta / 2.0; }
};

DeltaEstimate delta_estimate(const Complex& complex, DeltaMethod method);
// Value of a single triple / quadruple, for re-verifying witnesses.
int slim_triangle_twice_delta(const Complex& complex, const DistanceMatrix& dist, int x, int y, int z);
int four_point_twice_delta(const DistanceMatrix& dist, int x, int y, int z, int w);

json to_json(const OrientedGeodesic& g);
json to_json(const Interval& i);
json to_json(const DeltaEstimate& d);

}  // namespace npc
