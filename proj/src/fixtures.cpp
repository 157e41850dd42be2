#include "snarklab/fixtures.hpp"

namespace snarklab {
namespace fixtures {

Multipole petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});        // outer cycle
  e.insert(e.end(), {{5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});      // pentagram
  for (int i = 0; i < 5; ++i) e.push_back({i, i + 5});              // spokes
  return Multipole::graph(10, e);
}

Multipole k4() {
  return Multipole::graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Multipole k33() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) e.push_back({u, v});
  return Multipole::graph(6, e);
}

Multipole cube_q3() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b) {
      int w = v ^ (1 << b);
      if (v < w) e.push_back({v, w});
    }
  return Multipole::graph(8, e);
}

Multipole flower_snark(int n) {
  if (n < 3 || n % 2 == 0) throw Error(Err::BadInput, "flower snark needs odd n >= 3");
  auto c = [](int i) { return 4 * i; };
  auto x = [](int i) { return 4 * i + 1; };
  auto y = [](int i) { return 4 * i + 2; };
  auto z = [](int i) { return 4 * i + 3; };
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    e.push_back({c(i), x(i)});
    e.push_back({c(i), y(i)});
    e.push_back({c(i), z(i)});
    e.push_back({x(i), x((i + 1) % n)});
  }
  for (int i = 0; i + 1 < n; ++i) {
    e.push_back({y(i), y(i + 1)});
    e.push_back({z(i), z(i + 1)});
  }
  e.push_back({y(n - 1), z(0)});
  e.push_back({z(n - 1), y(0)});
  return Multipole::graph(4 * n, e);
}

Multipole c4_pole() {
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) edges.push_back(Edge{End{i}, End{(i + 1) % 4}});
  std::vector<SemiedgeRef> order;
  for (int i = 0; i < 4; ++i) {
    order.push_back(SemiedgeRef{static_cast<int>(edges.size()), 1});
    edges.push_back(Edge{End{i}, End{}});
  }
  return Multipole(4, std::move(edges), std::move(order));
}

Multipole two_isolated_edges_pole() {
  std::vector<Edge> edges{Edge{End{}, End{}}, Edge{End{}, End{}}};
  std::vector<SemiedgeRef> order{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  return Multipole(0, std::move(edges), std::move(order));
}

Multipole adjacent_pair_gadget() {
  std::vector<Edge> edges{Edge{End{0}, End{1}}};
  std::vector<SemiedgeRef> order;
  for (int v : {0, 0, 1, 1}) {
    order.push_back(SemiedgeRef{static_cast<int>(edges.size()), 1});
    edges.push_back(Edge{End{v}, End{}});
  }
  return Multipole(2, std::move(edges), std::move(order));
}

}  // namespace fixtures
}  // namespace snarklab
