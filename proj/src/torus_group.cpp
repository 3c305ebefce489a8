#include "lvb/torus_group.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace lvb {
namespace {

using Permutation = std::array<std::uint8_t, kGroupOrder>;

int vertex_index(Vertex v) { return Element::from_vertex(v).index(); }

Permutation letter_permutation(char c, const Convention& convention) {
  Permutation p{};
  for (int i = 0; i < kGroupOrder; ++i) {
    const Vertex v = Element::from_index(i).vertex();
    p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(vertex_index(step_vertex(v, c, convention)));
  }
  return p;
}

// Permutation of the product g*h: the path of g followed by the path of h in
// word order, the reverse in function order.
Permutation compose(const Permutation& g, const Permutation& h, CompositionOrder order) {
  const Permutation& first = order == CompositionOrder::word_order ? g : h;
  const Permutation& second = order == CompositionOrder::word_order ? h : g;
  Permutation out{};
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = second[first[v]];
  return out;
}

}  // namespace

std::string to_string(CompositionOrder order) {
  return order == CompositionOrder::word_order ? "word-order" : "function-order";
}
std::string to_string(RowPhase phase) {
  return phase == RowPhase::even_rows_right ? "even-rows-right" : "even-rows-left";
}
std::string to_string(ColumnPhase phase) {
  return phase == ColumnPhase::even_cols_up ? "even-cols-up" : "even-cols-down";
}
std::string to_string(const Convention& c) {
  return to_string(c.composition) + ", " + to_string(c.rows) + ", " + to_string(c.columns);
}

std::vector<Convention> all_conventions() {
  std::vector<Convention> out;
  for (auto order : {CompositionOrder::word_order, CompositionOrder::function_order})
    for (auto rows : {RowPhase::even_rows_right, RowPhase::even_rows_left})
      for (auto cols : {ColumnPhase::even_cols_up, ColumnPhase::even_cols_down})
        out.push_back({order, rows, cols});
  return out;
}

Vertex step_vertex(Vertex v, char c, const Convention& convention) {
  if (c == 'a' || c == 'A') {
    // Horizontal line y; even lines point right under even-rows-right.
    const bool even = v.y % 2 == 0;
    int dir = (even == (convention.rows == RowPhase::even_rows_right)) ? 1 : -1;
    if (c == 'A') dir = -dir;
    return {mod8(v.x + dir), v.y};
  }
  const bool even = v.x % 2 == 0;
  int dir = (even == (convention.columns == ColumnPhase::even_cols_up)) ? 1 : -1;
  if (c == 'B') dir = -dir;
  return {v.x, mod8(v.y + dir)};
}

Vertex walk(Vertex start, std::string_view letters, const Convention& convention) {
  Vertex v = start;
  if (convention.composition == CompositionOrder::word_order) {
    for (char c : letters) v = step_vertex(v, c, convention);
  } else {
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = step_vertex(v, *it, convention);
  }
  return v;
}

bool CenterSet::contains(Element g) const {
  return std::find(members.begin(), members.end(), g) != members.end();
}

TorusGroup TorusGroup::build(const Convention& convention) {
  TorusGroup group;
  group.convention_ = convention;

  std::map<char, Permutation> letters;
  for (char c : {'a', 'A', 'b', 'B'}) letters[c] = letter_permutation(c, convention);

  Permutation identity{};
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<std::uint8_t>(i);

  // Breadth-first closure; each permutation keeps its first (shortest) word.
  std::map<Permutation, std::string> words{{identity, ""}};
  std::queue<Permutation> frontier;
  frontier.push(identity);
  while (!frontier.empty()) {
    const Permutation p = frontier.front();
    frontier.pop();
    const std::string word = words.at(p);
    for (char c : {'a', 'A', 'b', 'B'}) {
      const Permutation q = compose(p, letters.at(c), convention.composition);
      if (words.emplace(q, word + c).second) frontier.push(q);
    }
  }

  // Regularity: distinct permutations must reach distinct endpoints, and
  // there must be exactly one per vertex.
  std::array<const Permutation*, kGroupOrder> by_endpoint{};
  for (const auto& [perm, word] : words) {
    const std::size_t endpoint = perm[0];
    if (by_endpoint[endpoint] != nullptr) {
      throw ConventionInconsistent("two distinct path classes reach the same vertex under " + to_string(convention),
                                   words.at(*by_endpoint[endpoint]), word);
    }
    by_endpoint[endpoint] = &perm;
  }
  if (words.size() != static_cast<std::size_t>(kGroupOrder)) {
    throw ConventionInconsistent("generated group does not act regularly on the torus", "", "");
  }

  for (std::size_t g = 0; g < by_endpoint.size(); ++g) {
    group.words_[g] = words.at(*by_endpoint[g]);
    for (std::size_t h = 0; h < by_endpoint.size(); ++h) {
      const Permutation product = compose(*by_endpoint[g], *by_endpoint[h], convention.composition);
      group.table_[g * kGroupOrder + h] = product[0];
    }
  }

  // Endpoint identification must agree with concatenating representative words.
  const Vertex base{0, 0};
  for (std::size_t g = 0; g < by_endpoint.size(); ++g) {
    for (std::size_t h = 0; h < by_endpoint.size(); ++h) {
      const std::string joined = group.words_[g] + group.words_[h];
      const int endpoint = vertex_index(walk(base, joined, convention));
      if (endpoint != group.table_[g * kGroupOrder + h]) {
        throw ConventionInconsistent("endpoint of a concatenated path disagrees with the product",
                                     group.words_[g], group.words_[h]);
      }
    }
  }

  for (int g = 0; g < kGroupOrder; ++g) {
    for (int h = 0; h < kGroupOrder; ++h) {
      if (group.table_[static_cast<std::size_t>(g * kGroupOrder + h)] == 0) {
        group.inverse_[static_cast<std::size_t>(g)] = static_cast<std::uint8_t>(h);
        break;
      }
    }
  }

  group.generator_a_ = Element::from_vertex(walk(base, "a", convention));
  group.generator_b_ = Element::from_vertex(walk(base, "b", convention));

  std::array<bool, kGroupOrder> seen{};
  for (int k = 0; k < kSide; ++k) {
    for (int m = 0; m < kSide; ++m) {
      const Element g = group.from_word_exponents(k, m);
      if (seen[static_cast<std::size_t>(g.index())]) {
        throw ConventionInconsistent("a^k b^m words do not cover the group", "", "");
      }
      seen[static_cast<std::size_t>(g.index())] = true;
      group.word_exponents_[static_cast<std::size_t>(g.index())] = {k, m};
    }
  }
  return group;
}

Element TorusGroup::power(Element g, long long n) const {
  if (n < 0) {
    g = inv(g);
    n = -n;
  }
  Element result = identity();
  Element base = g;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

Element TorusGroup::commutator(Element g, Element h) const {
  return mul(mul(mul(g, h), inv(g)), inv(h));
}

int TorusGroup::order_of(Element g) const {
  int m = 1;
  for (Element x = g; x != identity(); x = mul(x, g)) ++m;
  return m;
}

bool TorusGroup::is_central(Element z) const {
  for (int i = 0; i < kGroupOrder; ++i) {
    const Element g = Element::from_index(i);
    if (mul(z, g) != mul(g, z)) return false;
  }
  return true;
}

CenterSet TorusGroup::center() const {
  CenterSet out;
  for (int i = 0; i < kGroupOrder; ++i) {
    const Element z = Element::from_index(i);
    if (is_central(z)) out.members.push_back(z);
  }
  return out;
}

Element TorusGroup::from_word_exponents(long long k, long long m) const {
  return mul(power(a(), k), power(b(), m));
}

Element TorusGroup::evaluate_letters(std::string_view letters) const {
  Element result = identity();
  for (char c : letters) {
    switch (c) {
      case 'a': result = mul(result, a()); break;
      case 'A': result = mul(result, inv(a())); break;
      case 'b': result = mul(result, b()); break;
      case 'B': result = mul(result, inv(b())); break;
      default: throw std::invalid_argument(std::string("not a path letter: ") + c);
    }
  }
  return result;
}

std::vector<ParityRow> TorusGroup::parity_table() const {
  std::vector<ParityRow> rows;
  for (int k : {1, 0})
    for (int l : {1, 0})
      for (int i : {1, 0})
        for (int j : {1, 0}) {
          ParityRow row{i, j, k, l, {}, true};
          for (int kk = k; kk < kSide; kk += 2)
            for (int ll = l; ll < kSide; ll += 2)
              for (int ii = i; ii < kSide; ii += 2)
                for (int jj = j; jj < kSide; jj += 2) {
                  const Element x = Element::from_normal(kk, ll);
                  const Element y = Element::from_normal(ii, jj);
                  const Element value = commutator(x, mul(y, y));
                  if (std::find(row.values.begin(), row.values.end(), value) == row.values.end())
                    row.values.push_back(value);
                  row.all_central = row.all_central && is_central(value);
                }
          std::sort(row.values.begin(), row.values.end());
          rows.push_back(std::move(row));
        }
  return rows;
}

}  // namespace lvb
