#pragma once

// Independent reference model for tests: literal path walking on the
// oriented 8x8 torus, with no use of the library's group tables.

#include <array>
#include <map>
#include <queue>
#include <string>
#include <utility>

namespace oracle {

using V = std::pair<int, int>;

inline int m8(int v) { return ((v % 8) + 8) % 8; }

// Row y runs right when y is even, columns x run up when x is even.
inline V step(V v, char c) {
  auto [x, y] = v;
  const int row = y % 2 == 0 ? 1 : -1;
  const int col = x % 2 == 0 ? 1 : -1;
  switch (c) {
    case 'a': return {m8(x + row), y};
    case 'A': return {m8(x - row), y};
    case 'b': return {x, m8(y + col)};
    default: return {x, m8(y - col)};
  }
}

inline V walk(V from, const std::string& letters) {
  for (char c : letters) from = step(from, c);
  return from;
}

/// Shortest path words from the origin to every vertex.
inline const std::map<V, std::string>& words() {
  static const std::map<V, std::string> table = [] {
    std::map<V, std::string> w{{{0, 0}, ""}};
    std::queue<V> q;
    q.push({0, 0});
    while (!q.empty()) {
      const V v = q.front();
      q.pop();
      for (char c : std::string("aAbB")) {
        const V n = step(v, c);
        if (!w.contains(n)) {
          w[n] = w[v] + c;
          q.push(n);
        }
      }
    }
    return w;
  }();
  return table;
}

/// g h: the path of h continued from the endpoint of g.
inline V mul(V g, V h) { return walk(g, words().at(h)); }

inline V inv(V g) {
  for (const auto& [h, w] : words())
    if (mul(g, h) == V{0, 0}) return h;
  return {-1, -1};
}

inline V power(V g, int n) {
  V acc{0, 0};
  const V base = n < 0 ? inv(g) : g;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) acc = mul(acc, base);
  return acc;
}

}  // namespace oracle
