#include "borelab/affine_cartan.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>

namespace borelab {

namespace {

using Rational = boost::rational<long long>;

struct Builder {
  int n;
  std::vector<int> m;
  explicit Builder(int nodes) : n(nodes), m(nodes * nodes, 0) {
    for (int i = 0; i < n; ++i) m[i * n + i] = 2;
  }
  // aij = <alpha_j, alpha_i^vee>
  void bond(int i, int j, int aij, int aji) {
    m[i * n + j] = aij;
    m[j * n + i] = aji;
  }
  void simple(int i, int j) { bond(i, j, -1, -1); }
  // alpha_short is shorter by a factor `ratio` in squared length.
  void arrow(int longer, int shorter, int ratio) { bond(longer, shorter, -1, -ratio); }
};

std::vector<int> integer_kernel(const std::vector<int>& entries, int n, bool transpose) {
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = transpose ? entries[j * n + i] : entries[i * n + j];
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col].numerator() != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][col].numerator() == 0) continue;
      Rational f = a[r][col];
      for (int c = 0; c < n; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row != n - 1) throw Error("affine Cartan matrix must have corank one");
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> v(n, 0);
  v[free_col] = 1;
  for (int r = 0; r < row; ++r) v[pivot_col[r]] = -a[r][free_col];
  long long den = 1;
  for (auto& x : v) den = std::lcm(den, x.denominator());
  std::vector<long long> iv(n);
  long long g = 0;
  for (int i = 0; i < n; ++i) {
    iv[i] = (v[i] * den).numerator();
    g = std::gcd(g, std::llabs(iv[i]));
  }
  std::vector<int> out(n);
  int sign = iv[0] < 0 ? -1 : 1;
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<int>(sign * iv[i] / g);
    if (out[i] <= 0) throw Error("null vector is not strictly positive");
  }
  return out;
}

std::vector<int> compute_symmetrizer(const std::vector<int>& m, int n) {
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::queue<int> q;
  q.push(0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j) {
      if (j == i || m[i * n + j] == 0 || seen[j]) continue;
      d[j] = d[i] * Rational(m[i * n + j], m[j * n + i]);
      seen[j] = true;
      q.push(j);
    }
  }
  long long den = 1;
  for (auto& x : d) den = std::lcm(den, x.denominator());
  std::vector<long long> iv(n);
  long long g = 0;
  for (int i = 0; i < n; ++i) {
    iv[i] = (d[i] * den).numerator();
    g = std::gcd(g, iv[i]);
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(iv[i] / g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (out[i] * m[i * n + j] != out[j] * m[j * n + i]) throw Error("Cartan matrix is not symmetrizable");
  return out;
}

// Reference marks for the exceptional and a few classical diagrams.
const std::map<std::string, std::vector<int>>& reference_marks() {
  static const std::map<std::string, std::vector<int>> table = {
      {"E6~1", {1, 1, 2, 3, 2, 1, 2}},
      {"E7~1", {1, 2, 3, 4, 3, 2, 1, 2}},
      {"E8~1", {1, 2, 3, 4, 5, 6, 4, 2, 3}},
      {"F4~1", {1, 2, 3, 4, 2}},
      {"G2~1", {1, 2, 3}},
      {"E6~2", {1, 2, 3, 2, 1}},
      {"A2~2", {2, 1}},
      {"D5~2", {1, 1, 1, 1, 1}},
      {"B3~1", {1, 1, 2, 2}},
      {"C3~1", {1, 2, 2, 1}},
  };
  return table;
}

struct ParsedLabel {
  char family;
  int rank;
  int twist;
};

ParsedLabel parse_label(std::string_view label) {
  auto tilde = label.find('~');
  if (label.size() < 4 || tilde == std::string_view::npos || tilde < 2 || tilde + 2 != label.size())
    throw Error("malformed diagram label '" + std::string(label) + "' (expected e.g. E8~1)");
  ParsedLabel p{label[0], 0, 0};
  auto rank_sv = label.substr(1, tilde - 1);
  auto [ptr, ec] = std::from_chars(rank_sv.data(), rank_sv.data() + rank_sv.size(), p.rank);
  if (ec != std::errc() || ptr != rank_sv.data() + rank_sv.size() || p.rank < 1)
    throw Error("malformed rank in label '" + std::string(label) + "'");
  char t = label[tilde + 1];
  if (t < '1' || t > '9') throw Error("malformed twist in label '" + std::string(label) + "'");
  p.twist = t - '0';
  if (p.family < 'A' || p.family > 'G') throw Error("unknown type letter in '" + std::string(label) + "'");
  return p;
}

Builder build_untwisted(char f, int n) {
  switch (f) {
    case 'A': {
      Builder b(n + 1);
      if (n == 1) {
        b.bond(0, 1, -2, -2);
      } else {
        for (int i = 0; i < n; ++i) b.simple(i, i + 1);
        b.simple(n, 0);
      }
      return b;
    }
    case 'B': {
      Builder b(n + 1);
      b.simple(0, 2);
      b.simple(1, 2);
      for (int i = 2; i < n - 1; ++i) b.simple(i, i + 1);
      b.arrow(n - 1, n, 2);
      return b;
    }
    case 'C': {
      Builder b(n + 1);
      b.arrow(0, 1, 2);
      for (int i = 1; i < n - 1; ++i) b.simple(i, i + 1);
      b.arrow(n, n - 1, 2);
      return b;
    }
    case 'D': {
      Builder b(n + 1);
      b.simple(0, 2);
      b.simple(1, 2);
      for (int i = 2; i < n - 2; ++i) b.simple(i, i + 1);
      b.simple(n - 2, n - 1);
      b.simple(n - 2, n);
      return b;
    }
    case 'E': {
      Builder b(n + 1);
      if (n == 6) {
        for (int i = 1; i < 5; ++i) b.simple(i, i + 1);
        b.simple(3, 6);
        b.simple(6, 0);
      } else if (n == 7) {
        for (int i = 0; i < 6; ++i) b.simple(i, i + 1);
        b.simple(3, 7);
      } else {
        for (int i = 0; i < 7; ++i) b.simple(i, i + 1);
        b.simple(5, 8);
      }
      return b;
    }
    case 'F': {
      Builder b(5);
      b.simple(0, 1);
      b.simple(1, 2);
      b.arrow(2, 3, 2);
      b.simple(3, 4);
      return b;
    }
    default: {
      Builder b(3);
      b.simple(0, 1);
      b.arrow(1, 2, 3);
      return b;
    }
  }
}

// A_{2l}^(2): alpha_0 shortest, alpha_l longest.
Builder build_a_even_twisted(int l) {
  Builder b(l + 1);
  if (l == 1) {
    b.bond(0, 1, -4, -1);
    return b;
  }
  b.arrow(1, 0, 2);
  for (int i = 1; i < l - 1; ++i) b.simple(i, i + 1);
  b.arrow(l, l - 1, 2);
  return b;
}

// A_{2l-1}^(2), l >= 3: fork at alpha_2, alpha_l long.
Builder build_a_odd_twisted(int l) {
  Builder b(l + 1);
  b.simple(0, 2);
  b.simple(1, 2);
  for (int i = 2; i < l - 1; ++i) b.simple(i, i + 1);
  b.arrow(l, l - 1, 2);
  return b;
}

// D_{l+1}^(2): alpha_0 and alpha_l short.
Builder build_d_twisted(int l) {
  Builder b(l + 1);
  b.arrow(1, 0, 2);
  for (int i = 1; i < l - 1; ++i) b.simple(i, i + 1);
  b.arrow(l - 1, l, 2);
  return b;
}

Builder build_e6_twisted() {
  Builder b(5);
  b.simple(0, 1);
  b.simple(1, 2);
  b.arrow(3, 2, 2);
  b.simple(3, 4);
  return b;
}

Builder build_matrix(const ParsedLabel& p, const std::string& label) {
  auto bad = [&](const std::string& why) { return Error("unsupported diagram '" + label + "': " + why); };
  if (p.twist == 3) throw bad("twist order 3 unsupported");
  if (p.twist != 1 && p.twist != 2) throw bad("twist must be 1 or 2");
  const int n = p.rank;
  if (p.twist == 1) {
    switch (p.family) {
      case 'A':
        if (n + 1 > kMaxNodes) throw bad("rank too large");
        return build_untwisted('A', n);
      case 'B':
        if (n == 2) return build_untwisted('C', 2);  // B2 = C2
        if (n < 2) throw bad("B_n needs n >= 2");
        if (n + 1 > kMaxNodes) throw bad("rank too large");
        return build_untwisted('B', n);
      case 'C':
        if (n < 2) throw bad("C_n needs n >= 2");
        if (n + 1 > kMaxNodes) throw bad("rank too large");
        return build_untwisted('C', n);
      case 'D':
        if (n == 3) return build_untwisted('A', 3);  // D3 = A3
        if (n < 3) throw bad("D_n needs n >= 3");
        if (n + 1 > kMaxNodes) throw bad("rank too large");
        return build_untwisted('D', n);
      case 'E':
        if (n < 6 || n > 8) throw bad("E_n needs n in 6..8");
        return build_untwisted('E', n);
      case 'F':
        if (n != 4) throw bad("only F4");
        return build_untwisted('F', 4);
      case 'G':
        if (n != 2) throw bad("only G2");
        return build_untwisted('G', 2);
    }
  }
  switch (p.family) {
    case 'A':
      if (n < 2) throw bad("A_n^(2) needs n >= 2");
      if (n / 2 + 1 > kMaxNodes) throw bad("rank too large");
      if (n % 2 == 0) return build_a_even_twisted(n / 2);
      if (n == 3) return build_d_twisted(2);  // A3 = D3
      return build_a_odd_twisted((n + 1) / 2);
    case 'D':
      if (n < 3) throw bad("D_n^(2) needs n >= 3");
      if (n > kMaxNodes) throw bad("rank too large");
      return build_d_twisted(n - 1);
    case 'E':
      if (n != 6) throw bad("only E6 has a twist-2 form");
      return build_e6_twisted();
    default:
      throw bad("no twist-2 form");
  }
}

}  // namespace

int AffineDiagram::long_symmetrizer() const { return *std::max_element(symmetrizer.begin(), symmetrizer.end()); }

AffineDiagram load_diagram(std::string_view label_sv) {
  std::string label(label_sv);
  ParsedLabel p = parse_label(label);
  Builder b = build_matrix(p, label);
  AffineDiagram d;
  d.label = label;
  d.family = p.family;
  d.rank = p.rank;
  d.twist = p.twist;
  d.nodes = b.n;
  d.cartan_entries = std::move(b.m);
  d.marks = integer_kernel(d.cartan_entries, d.nodes, false);
  d.comarks = integer_kernel(d.cartan_entries, d.nodes, true);
  d.symmetrizer = compute_symmetrizer(d.cartan_entries, d.nodes);
  if (auto it = reference_marks().find(label); it != reference_marks().end() && it->second != d.marks)
    throw Error("computed marks of " + label + " disagree with the reference table");
  return d;
}

int dual_coxeter_number(const AffineDiagram& d) { return std::accumulate(d.comarks.begin(), d.comarks.end(), 0); }

std::vector<NodeSet> connected_components(const AffineDiagram& d, NodeSet s) {
  std::vector<NodeSet> out;
  NodeSet left = s;
  while (!left.empty()) {
    NodeSet comp = NodeSet::single(left.front());
    std::vector<int> stack{left.front()};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j : s.nodes())
        if (!comp.contains(j) && d.adjacent(i, j)) {
          comp.insert(j);
          stack.push_back(j);
        }
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

bool is_connected(const AffineDiagram& d, NodeSet s) { return !s.empty() && connected_components(d, s).size() == 1; }

namespace {

void require_finite_irreducible(const AffineDiagram& d, NodeSet s) {
  if (s.empty()) throw Error("empty node set");
  if (!s.subset_of(d.all_nodes())) throw Error("node out of range");
  if (s == d.all_nodes()) throw Error("node set " + s.to_string() + " is not of finite type");
  if (!is_connected(d, s)) throw Error("node set " + s.to_string() + " is disconnected");
}

}  // namespace

RootVector dominant_long_root(const AffineDiagram& d, NodeSet s) {
  require_finite_irreducible(d, s);
  int start = -1;
  for (int i : s.nodes())
    if (start < 0 || d.symmetrizer[i] > d.symmetrizer[start]) start = i;
  RootVector g = RootVector::simple(d.nodes, start);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : s.nodes()) {
      int p = 0;
      for (int j = 0; j < d.nodes; ++j) p += d.a(i, j) * g[j];
      if (p < 0) {
        g.add(i, -p);
        moved = true;
      }
    }
  }
  return g;
}

int finite_dual_coxeter(const AffineDiagram& d, NodeSet s) {
  RootVector theta = dominant_long_root(d, s);
  // coroot coefficient of alpha_i in theta^vee is c_i * |alpha_i|^2 / |theta|^2
  long long theta_norm = 0;
  for (int i = 0; i < d.nodes; ++i)
    for (int j = 0; j < d.nodes; ++j) theta_norm += 1LL * theta[i] * d.symmetrizer[i] * d.a(i, j) * theta[j];
  long long num = 0;
  for (int i : s.nodes()) num += 2LL * theta[i] * d.symmetrizer[i];
  if (num % theta_norm != 0) throw Error("non-integral coroot expansion");
  return static_cast<int>(1 + num / theta_norm);
}

std::vector<std::vector<int>> diagram_automorphisms(const AffineDiagram& d) {
  const int n = d.nodes;
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || d.a(c, c) != d.a(i, i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = d.a(c, perm[j]) == d.a(i, j) && d.a(perm[j], c) == d.a(j, i);
      if (!ok) continue;
      perm[i] = c;
      used[c] = true;
      self(self, i + 1);
      used[c] = false;
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

std::string bond_symbol(const AffineDiagram& d, int left, int right) {
  int m = d.a(left, right) * d.a(right, left);
  if (m == 1) return "---";
  if (d.symmetrizer[left] == d.symmetrizer[right]) return "<" + std::to_string(m) + ">";
  std::string bars = m == 2 ? "=" : std::to_string(m);
  return d.symmetrizer[left] > d.symmetrizer[right] ? bars + "=>" : "<=" + bars;
}

std::string node_label(const AffineDiagram& d, int i) {
  return std::to_string(i) + "(" + std::to_string(d.marks[i]) + ")";
}

}  // namespace

std::string ascii_layout(const AffineDiagram& d) {
  const int n = d.nodes;
  std::string out = d.label + "  node(mark); arrows point to the shorter root\n";
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges += d.adjacent(i, j);
  if (edges == n && n > 2) {
    out += "  ";
    for (int i = 0; i < n; ++i) out += node_label(d, i) + " --- ";
    return out + "(back to 0)\n";
  }
  // longest path via double BFS, then hang the remaining leaves below it
  auto farthest = [&](int src, std::vector<int>& parent) {
    std::vector<int> dist(n, -1);
    parent.assign(n, -1);
    std::queue<int> q;
    q.push(src);
    dist[src] = 0;
    int last = src;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      last = i;
      for (int j = 0; j < n; ++j)
        if (d.adjacent(i, j) && dist[j] < 0) {
          dist[j] = dist[i] + 1;
          parent[j] = i;
          q.push(j);
        }
    }
    return last;
  };
  std::vector<int> parent;
  int a = farthest(0, parent);
  int b = farthest(a, parent);
  std::vector<int> chain;
  for (int v = b; v >= 0; v = parent[v]) chain.push_back(v);
  if (chain.front() > chain.back()) std::reverse(chain.begin(), chain.end());
  std::string line = "  ";
  std::vector<std::size_t> column(n, 0);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k) line += " " + bond_symbol(d, chain[k - 1], chain[k]) + " ";
    column[chain[k]] = line.size();
    line += node_label(d, chain[k]);
  }
  out += line + "\n";
  // Off-chain nodes hang below the chain as vertical paths; a second branch
  // at the same chain node is shifted right and drawn with a slanted connector.
  std::vector<std::string> grid;
  auto put = [&](std::size_t row, std::size_t col, const std::string& text) {
    if (grid.size() <= row) grid.resize(row + 1);
    if (grid[row].size() < col + text.size()) grid[row].resize(col + text.size(), ' ');
    grid[row].replace(col, text.size(), text);
  };
  std::vector<char> placed(n, 0);
  for (int c : chain) placed[c] = 1;
  std::vector<int> branches_at(n, 0);
  for (int c : chain)
    for (int v = 0; v < n; ++v) {
      if (placed[v] || !d.adjacent(c, v)) continue;
      const int k = branches_at[c]++;
      std::size_t col = column[c] + 6 * k;
      std::size_t row = 0;
      int prev = c;
      for (int cur = v; cur >= 0;) {
        placed[cur] = 1;
        std::string sym = bond_symbol(d, prev, cur);
        put(row, row == 0 && k > 0 ? column[c] + k : col, row == 0 && k > 0 ? "\\" : "|");
        if (sym != "---") put(row, col + 2, sym);
        put(row + 1, col, node_label(d, cur));
        row += 2;
        prev = cur;
        int next = -1;
        for (int u = 0; u < n; ++u)
          if (!placed[u] && d.adjacent(cur, u)) next = u;
        cur = next;
      }
    }
  for (const auto& r : grid) out += r + "\n";
  return out;
}

std::vector<std::string> known_labels(int max_rank) {
  std::vector<std::string> out;
  auto add = [&](char f, int n, int t) { out.push_back(std::string(1, f) + std::to_string(n) + "~" + std::to_string(t)); };
  for (int n = 1; n <= max_rank; ++n) add('A', n, 1);
  for (int n = 3; n <= max_rank; ++n) add('B', n, 1);
  for (int n = 2; n <= max_rank; ++n) add('C', n, 1);
  for (int n = 4; n <= max_rank; ++n) add('D', n, 1);
  for (int n = 6; n <= std::min(8, max_rank); ++n) add('E', n, 1);
  if (max_rank >= 4) add('F', 4, 1);
  if (max_rank >= 2) add('G', 2, 1);
  for (int n = 2; n <= max_rank; ++n)
    if (n != 3) add('A', n, 2);
  for (int n = 3; n <= max_rank; ++n) add('D', n, 2);
  if (max_rank >= 6) add('E', 6, 2);
  return out;
}

}  // namespace borelab
