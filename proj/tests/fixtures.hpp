#pragma once

#include "kthit/graph.hpp"

namespace kthit::fixtures {

// Two-component graph for t = 4 with the root ({v1..v4}, {u1, u2}).
// Component 1: path v1 v2 v3 v4 with a K_4 {v2, w1, w2, w3} hanging off v2.
// Component 2: edge u1 u2 with a K_4 {u1, p1, p2, p3} hanging off u1.
struct RootFigure {
    enum : Vertex { v1 = 0, v2, v3, v4, w1, w2, w3, u1, u2, p1, p2, p3 };
    static Graph graph() {
        return Graph(12, {{v1, v2}, {v2, v3}, {v3, v4}, {v2, w1}, {v2, w2}, {v2, w3}, {w1, w2}, {w1, w3}, {w2, w3},
                          {u1, u2}, {u1, p1}, {u1, p2}, {u1, p3}, {p1, p2}, {p1, p3}, {p2, p3}});
    }
};

// Two triangles {0,1,2} and {0,3,4} sharing vertex 0.
inline Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

// Triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline Graph joined_triangles() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}}); }

// Two K_4 sharing vertex 0.
inline Graph k4_pair_sharing_vertex() {
    return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {0, 6}, {4, 5}, {4, 6}, {5, 6}});
}

// Triangle {0,1,2} plus vertex 3 adjacent to 0 and 1.
inline Graph triangle_with_ear() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}}); }

}  // namespace kthit::fixtures
