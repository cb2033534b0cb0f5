#include "blab/diagrams.hpp"

#include <deque>
#include <functional>
#include <mutex>
#include <unordered_map>

namespace blab {

ComposeResult compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  const int n = d1.size();
  if (n != d2.size()) throw std::invalid_argument("compose: size mismatch");

  std::vector<std::uint8_t> res(2 * n, 0);
  std::vector<char> assigned(2 * n, 0);
  std::vector<char> mid_seen(n, 0);

  // Walks from a composite vertex to its match. Layer 1 = inside d1,
  // layer 2 = inside d2; middle vertices are d1-bottom = d2-top.
  auto walk = [&](int start) {
    int cur, layer;
    if (start < n) {
      cur = d1.partner(start);
      layer = 1;
    } else {
      cur = d2.partner(start);
      layer = 2;
    }
    for (;;) {
      if (layer == 1) {
        if (cur < n) return cur;  // composite top vertex
        int mid = cur - n;
        mid_seen[mid] = 1;
        cur = d2.partner(mid);
        layer = 2;
      } else {
        if (cur >= n) return cur;  // composite bottom vertex
        int mid = cur;
        mid_seen[mid] = 1;
        cur = d1.partner(n + mid);
        layer = 1;
      }
    }
  };

  for (int v = 0; v < 2 * n; ++v) {
    if (assigned[v]) continue;
    int w = walk(v);
    res[v] = static_cast<std::uint8_t>(w);
    res[w] = static_cast<std::uint8_t>(v);
    assigned[v] = assigned[w] = 1;
  }

  // Interior loops: cycles among middle vertices never reached by a walk.
  int loops = 0;
  for (int v = 0; v < n; ++v) {
    if (mid_seen[v]) continue;
    ++loops;
    int cur = v;
    for (;;) {
      mid_seen[cur] = 1;
      int a = d2.partner(cur);  // stays a middle vertex on an interior cycle
      mid_seen[a] = 1;
      int next = d1.partner(n + a) - n;
      if (next == v) break;
      cur = next;
    }
  }
  return {BrauerDiagram(n, std::move(res)), loops};
}

BrauerDiagram brauer_s(int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("brauer_s: index");
  auto d = BrauerDiagram::identity(n).partners();
  d[i - 1] = static_cast<std::uint8_t>(n + i);
  d[i] = static_cast<std::uint8_t>(n + i - 1);
  d[n + i - 1] = static_cast<std::uint8_t>(i);
  d[n + i] = static_cast<std::uint8_t>(i - 1);
  return BrauerDiagram(n, std::move(d));
}

BrauerDiagram brauer_e(int i, int n) { return e_st(i, i + 1, n); }

BrauerDiagram e_st(int s, int t, int n) {
  if (!(1 <= s && s < t && t <= n)) throw std::out_of_range("e_st: indices");
  auto d = BrauerDiagram::identity(n).partners();
  d[s - 1] = static_cast<std::uint8_t>(t - 1);
  d[t - 1] = static_cast<std::uint8_t>(s - 1);
  d[n + s - 1] = static_cast<std::uint8_t>(n + t - 1);
  d[n + t - 1] = static_cast<std::uint8_t>(n + s - 1);
  return BrauerDiagram(n, std::move(d));
}

BrauerDiagram perm_diagram(const Permutation& p) {
  const int n = p.size();
  std::vector<std::uint8_t> d(2 * n);
  for (int k = 1; k <= n; ++k) {
    d[k - 1] = static_cast<std::uint8_t>(n + p(k) - 1);
    d[n + p(k) - 1] = static_cast<std::uint8_t>(k - 1);
  }
  return BrauerDiagram(n, std::move(d));
}

// ---------------------------------------------------------------------------

namespace {

struct PartnerHash {
  std::size_t operator()(const std::vector<std::uint8_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto b : v) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void enumerate_matchings(int n2, std::vector<std::uint8_t>& partner, std::vector<char>& used,
                         const std::function<void(const std::vector<std::uint8_t>&)>& emit) {
  int v = 0;
  while (v < n2 && used[v]) ++v;
  if (v == n2) {
    emit(partner);
    return;
  }
  used[v] = 1;
  for (int w = v + 1; w < n2; ++w) {
    if (used[w]) continue;
    used[w] = 1;
    partner[v] = static_cast<std::uint8_t>(w);
    partner[w] = static_cast<std::uint8_t>(v);
    enumerate_matchings(n2, partner, used, emit);
    used[w] = 0;
  }
  used[v] = 0;
}

}  // namespace

struct DiagramRegistry::Table {
  std::mutex mtx;
  std::unordered_map<std::vector<std::uint8_t>, std::uint32_t, PartnerHash> ids;
  std::deque<BrauerDiagram> store;
  std::vector<std::uint32_t> all_ids;
  bool enumerated = false;
};

DiagramRegistry& DiagramRegistry::get() {
  static DiagramRegistry reg;
  return reg;
}

DiagramRegistry::Table& DiagramRegistry::table(int n) {
  static std::mutex tables_mtx;
  static std::map<int, Table> tables;
  std::lock_guard<std::mutex> lock(tables_mtx);
  return tables[n];
}

const DiagramRegistry::Table& DiagramRegistry::table(int n) const {
  return const_cast<DiagramRegistry*>(this)->table(n);
}

std::uint32_t DiagramRegistry::intern(const BrauerDiagram& d) {
  Table& t = table(d.size());
  std::lock_guard<std::mutex> lock(t.mtx);
  auto it = t.ids.find(d.partners());
  if (it != t.ids.end()) return it->second;
  std::uint32_t id = static_cast<std::uint32_t>(t.store.size());
  t.store.push_back(d);
  t.ids.emplace(d.partners(), id);
  return id;
}

const BrauerDiagram& DiagramRegistry::diagram(int n, std::uint32_t id) const {
  Table& t = const_cast<DiagramRegistry*>(this)->table(n);
  std::lock_guard<std::mutex> lock(t.mtx);
  return t.store.at(id);
}

const std::vector<std::uint32_t>& DiagramRegistry::all(int n) {
  Table& t = table(n);
  {
    std::lock_guard<std::mutex> lock(t.mtx);
    if (t.enumerated) return t.all_ids;
  }
  // Enumerate in lexicographic partner-array order (canonical order).
  std::vector<std::uint32_t> ids;
  std::vector<std::uint8_t> partner(2 * n, 0);
  std::vector<char> used(2 * n, 0);
  enumerate_matchings(2 * n, partner, used, [&](const std::vector<std::uint8_t>& p) {
    ids.push_back(intern(BrauerDiagram(n, p)));
  });
  std::lock_guard<std::mutex> lock(t.mtx);
  if (!t.enumerated) {
    t.all_ids = std::move(ids);
    t.enumerated = true;
  }
  return t.all_ids;
}

std::vector<std::uint32_t> ideal_basis(int n, int f) {
  if (f < 0 || f > n / 2 + 1) throw std::out_of_range("ideal_basis: f");
  auto& reg = DiagramRegistry::get();
  std::vector<std::uint32_t> out;
  for (auto id : reg.all(n))
    if (reg.diagram(n, id).horizontal_top() >= f) out.push_back(id);
  return out;
}

DiagramWord diagram_to_word(const BrauerDiagram& d) {
  const int n = d.size();
  std::vector<std::pair<int, int>> top, bottom;  // 1-based arcs
  std::vector<int> through_top;
  for (int v = 0; v < n; ++v) {
    int w = d.partner(v);
    if (w < n) {
      if (w > v) top.emplace_back(v + 1, w + 1);
    } else {
      through_top.push_back(v + 1);
    }
  }
  for (int v = n; v < 2 * n; ++v) {
    int w = d.partner(v);
    if (w > v) bottom.emplace_back(v - n + 1, w - n + 1);
  }
  const int f = static_cast<int>(top.size());

  std::vector<int> s1(n), s2(n);
  for (int i = 0; i < f; ++i) {
    s1[top[i].first - 1] = 2 * i + 1;
    s1[top[i].second - 1] = 2 * i + 2;
    s2[2 * i] = bottom[i].first;
    s2[2 * i + 1] = bottom[i].second;
  }
  for (int j = 0; j < static_cast<int>(through_top.size()); ++j) {
    int t = through_top[j];
    s1[t - 1] = 2 * f + j + 1;
    s2[2 * f + j] = d.partner(t - 1) - n + 1;
  }
  return {Permutation(std::move(s1)), f, Permutation(std::move(s2))};
}

std::pair<Permutation, std::pair<int, int>> factor_two_horizontal(const BrauerDiagram& d) {
  if (d.horizontal_top() != 1 || d.horizontal_bottom() != 1)
    throw std::invalid_argument("factor_two_horizontal: needs exactly one horizontal edge per row");
  const int n = d.size();
  int a = -1, b = -1, c = -1, e = -1;
  for (int v = 0; v < n; ++v)
    if (d.partner(v) < n && d.partner(v) > v) {
      a = v + 1;
      b = d.partner(v) + 1;
    }
  for (int v = n; v < 2 * n; ++v)
    if (d.partner(v) > v) {
      c = v - n + 1;
      e = d.partner(v) - n + 1;
    }
  std::vector<int> img(n);
  img[a - 1] = c;
  img[b - 1] = e;
  for (int v = 0; v < n; ++v)
    if (v + 1 != a && v + 1 != b) img[v] = d.partner(v) - n + 1;
  return {Permutation(std::move(img)), {c, e}};
}

}  // namespace blab
