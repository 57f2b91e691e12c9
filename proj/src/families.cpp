#include "ovc/families.hpp"

#include <stdexcept>

namespace ovc {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // pentagram
    }
    return Graph(10, e);
}

Graph prism_graph(int n) {
    if (n < 3) throw std::invalid_argument("prism needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(n + i, n + (i + 1) % n);
        e.emplace_back(i, n + i);
    }
    return Graph(2 * n, e);
}

Graph moebius_ladder(int k) {
    if (k < 2) throw std::invalid_argument("moebius ladder needs k >= 2");
    const int n = 2 * k;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < k; ++i) e.emplace_back(i, i + k);
    return Graph(n, e);
}

Graph hypercube_graph(int dim) {
    if (dim < 0) throw std::invalid_argument("dimension must be non-negative");
    const int n = 1 << dim;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b)
            if (!(v & (1 << b))) e.emplace_back(v, v | (1 << b));
    return Graph(n, e);
}

}  // namespace ovc
