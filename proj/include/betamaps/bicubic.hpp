#pragma once

#include "betamaps/tree.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace betamaps {

// Rooted bicubic planar map in dart form. Darts are 0..dart_count()-1; alpha
// pairs the two darts of each edge (fixed-point-free involution); rot sends a
// dart to the next dart counterclockwise around its vertex (all orbits have
// size 3); the root dart leaves the root vertex, which is black, and the face
// to its right is the root face, colored 3.
//
// Faces are the orbits of d -> rot[alpha[d]]; the orbit of d walks the
// boundary of the face lying to the right of d. A proper 3-coloring of the
// faces with colors 1,2,3 counterclockwise around white vertices is computed
// on demand, anchored at the root face.
struct BicubicMap {
    std::vector<int> alpha;
    std::vector<int> rot;
    int root = 0;

    int dart_count() const { return static_cast<int>(alpha.size()); }
    int face_next(int d) const { return rot[alpha[d]]; }
    int face_prev(int d) const { return alpha[rot[rot[d]]]; }
};

struct MapStats {
    int f1r3 = 0; // 1-colored faces touching the root face
    int f3r2 = 0; // 3-colored faces touching R2
    int b = 0;    // black vertices incident to both R1 and R2
    int s1r3 = 0; // edges shared by S1 and the root face
    int one = 0;  // number of 1-colored faces

    bool operator==(const MapStats&) const = default;
};

class MapError : public std::runtime_error {
  public:
    MapError(const std::string& what, std::vector<std::string> v)
        : std::runtime_error(what), violations(std::move(v)) {}
    std::vector<std::string> violations;
};

struct MapAnalysis {
    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;
    std::vector<int> vertex_of;    // dart -> vertex id
    std::vector<int> face_of;      // dart -> face id
    std::vector<int> vertex_color; // vertex id -> 0 black, 1 white
    std::vector<int> face_color;   // face id -> 1, 2 or 3
};

// All invariant violations, each reported separately; empty means valid.
std::vector<std::string> validate_map(const BicubicMap& m);

// Vertex/face orbits plus both colorings; throws MapError when invalid.
MapAnalysis analyze_map(const BicubicMap& m);

// The two-vertex, three-edge map.
BicubicMap theta();

// Replace the root edge by a pendant digon: a new 1-colored face touching the
// root face once. f1r3 goes up by one; the result is irreducible.
BicubicMap op1(const BicubicMap& m);

// Rewire the root edge together with the first edge of the i-th 1-colored
// face met clockwise from the root along the root face. The result is
// irreducible with f1r3 = i; needs 1 <= i <= f1r3(m).
BicubicMap op2(const BicubicMap& m, int i);

// Chain k >= 2 irreducible maps into one; the root comes from the last part,
// and s1r3 of the result is k.
BicubicMap op3(std::vector<BicubicMap> parts);

// Tree -> map direction of the bijection; needs a nontrivial tree.
BicubicMap to_map(const BetaTree& t);

// Map -> tree direction of the bijection.
BetaTree to_tree(const BicubicMap& m);

MapStats map_statistics(const BicubicMap& m);

// Advance the root one step counterclockwise at the root vertex. Face colors
// are recomputed from the new root face, which realizes the recoloring
// 1->2, 2->3, 3->1; phi^3 is the identity.
BicubicMap phi(const BicubicMap& m);

// Relabeling-invariant encoding; two rooted maps are equal iff forms match.
std::vector<int> canonical_form(const BicubicMap& m);
bool maps_equal(const BicubicMap& a, const BicubicMap& b);

// Undirected vertex-edge graph with vertex colors and face-color edge
// annotations; the root edge is highlighted.
std::string map_to_dot(const BicubicMap& m);

} // namespace betamaps
