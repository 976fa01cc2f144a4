#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "npc/complex.hpp"
#include "npc/metric.hpp"
#include "npc/report.hpp"

namespace npc {

using Edge = std::pair<VertexId, VertexId>;  // ids, first < second

struct ExitEdge {
    std::vector<VertexId> geodesic;
    Edge edge;
    int index = 0;  // edge runs geodesic[index] -> geodesic[index + 1]
};

// The edge leaving the last vertex of k on g. Throws DoesNotGoThrough when g
// misses k and EndsInside when g ends in k.
ExitEdge exit_edge(const Subcomplex& k, const std::vector<VertexId>& g);

struct PathAround {
    std::vector<int> cells;   // sigma_1 .. sigma_n
    std::vector<Edge> edges;  // e_0 .. e_n
    int length() const { return static_cast<int>(cells.size()); }
};

// Shortest path around k between two edges that meet k without lying in it.
// Throws InvalidArgument on bad edges, NoPath, or CapExceeded beyond length_cap.
PathAround path_around(const Subcomplex& k, Edge e, Edge e2, int length_cap = 1 << 20);

struct SapProbeResult {
    int n = 0;
    int radius = 0;            // K lies in the ball of this radius around `centre`
    VertexId centre = 0;
    int r_emp = 0;             // max over configurations of the minimal path-around length
    bool exhaustive = true;
    bool vacuous = true;       // no configuration admitted a path around K
    std::size_t subcomplexes = 0;
    std::size_t configurations = 0;
    std::size_t no_path = 0;   // configurations whose exit edges are not joined around K
    json witness;              // worst configuration, null if none
};

// Exhaustive Small Angle probe over connected convex subgraphs K with at most n
// edges inside the radius ball. The probe is flagged non-exhaustive when some
// pair has more than geodesic_cap geodesics.
SapProbeResult sap_probe(const Complex& complex, int n, int radius, std::size_t geodesic_cap = kDefaultGeodesicCap);

// Recomputes the path-around length of a probe witness.
int replay_sap_witness(const Complex& complex, const json& witness);

// Throws NonExhaustiveProbe. Pass iff r_emp <= n * N^2 and no configuration lacked a path.
CheckReport verify_sap_bound(const SapProbeResult& probe, int N);

json to_json(const SapProbeResult& r);
json to_json(const PathAround& p);

struct HexagonSampling {
    int max_perimeter = 8;
    bool exhaustive = true;
    std::size_t samples = 0;  // used when not exhaustive
    std::uint64_t seed = 1;
    int area_cap = 64;        // polygonal targets: final search cap
};

// Embedded cycles of length 3..max_length, each listed once, from its least
// vertex in the direction of the smaller neighbour.
std::vector<std::vector<int>> embedded_cycles(const Complex& complex, int max_length);

// Splits a cycle starting at its first vertex into maximal geodesic segments;
// nullopt if more than six are needed. Missing sides are degenerate.
std::optional<std::array<std::vector<VertexId>, 6>> as_hexagon(const Complex& complex, const DistanceMatrix& dist,
                                                               const std::vector<int>& cycle);

// Stats carry empirical_N = max over fillings of max(multiplicity, degree).
CheckReport tight_hexagon_probe(const Complex& complex, int N, const HexagonSampling& spec);

}  // namespace npc
