#pragma once

#include <array>
#include <optional>
#include <vector>

#include "npc/complex.hpp"
#include "npc/diagram.hpp"
#include "npc/error.hpp"
#include "npc/metric.hpp"
#include "npc/report.hpp"

namespace npc {

// --- conditions (E) and (V) -----------------------------------------------

// max_radius < 0 checks every radius. Both throw KindMismatch / NotFlag.
CheckReport check_edge_condition(const Complex& complex, VertexId v, int max_radius = -1);
CheckReport check_vertex_condition(const Complex& complex, VertexId v, int max_radius = -1);

struct WsysReport {
    struct Outcome {
        VertexId v = 0;
        bool edge_ok = true;
        bool vertex_ok = true;
    };
    bool local = false;
    std::vector<Outcome> outcomes;  // by vertex id
    json witness;                   // first failure: least v, (E) before (V); null on pass

    bool passed() const { return witness.is_null(); }
    CheckReport to_report() const;
};

WsysReport check_weakly_systolic(const Complex& complex);
// Radii 1..3 only.
WsysReport check_locally(const Complex& complex);

// Every embedded 4- or 5-cycle has a chord.
CheckReport check_systolic(const Complex& complex);

// --- metric triangles -------------------------------------------------------

struct MetricTriangle {
    VertexId u = 0, v = 0, w = 0;
    VertexId u1 = 0, v1 = 0, w1 = 0;  // quasi-medians u', v', w'
    std::array<int, 3> sides{};       // d(u',v'), d(v',w'), d(w',u')

    int size() const { return sides[0]; }
    bool equilateral() const { return sides[0] == sides[1] && sides[1] == sides[2]; }
};

// u' is the vertex of I(u,v) ∩ I(u,w) farthest from u (least id on ties), and
// likewise for v', w'. Throws NotMetricTriangle if the result is not one.
MetricTriangle metric_triangle(const Complex& complex, VertexId u, VertexId v, VertexId w);
bool is_metric_triangle(const Complex& complex, const DistanceMatrix& dist, int a, int b, int c);

CheckReport check_weak_modularity(const Complex& complex);

json to_json(const MetricTriangle& t);

// --- fillings ---------------------------------------------------------------

enum class BigonBackend { Structured, Oracle };

// Layered flat disc of a simple bigon: layers[i] lists z^i_0 .. z^i_{k(i)}, left
// geodesic first. Triangles are label triples.
struct FlatDisc {
    std::vector<std::vector<VertexId>> layers;
    std::vector<std::array<VertexId, 3>> triangles;
};

// nullopt when the layer construction is ambiguous or fails a check.
std::optional<FlatDisc> flat_disc(const Complex& complex, const std::vector<VertexId>& g1,
                                  const std::vector<VertexId>& g2);

DiscDiagram fill_bigon(const Complex& complex, const OrientedGeodesic& g1, const OrientedGeodesic& g2,
                       BigonBackend backend = BigonBackend::Structured);

// Thrown when a filling exceeds multiplicity 4 or degree 14; carries the diagram.
class BoundViolation : public Error {
public:
    BoundViolation(const std::string& message, DiscDiagram d)
        : Error(ErrorKind::BoundViolated, message), diagram_(std::move(d)) {}
    const DiscDiagram& diagram() const { return diagram_; }

private:
    DiscDiagram diagram_;
};

// Sides are the least geodesics unless given. The loop is uv, vw, wu.
DiscDiagram fill_triangle(const Complex& complex, VertexId u, VertexId v, VertexId w);
DiscDiagram fill_triangle(const Complex& complex, const std::array<std::vector<VertexId>, 3>& sides);

// sides[i] runs from corner i to corner i+1 (mod 6); degenerate sides are
// single vertices. Fan of four triangles from corner 0.
DiscDiagram fill_hexagon(const Complex& complex, const std::array<std::vector<VertexId>, 6>& sides);

}  // namespace npc
