// Generic finite-group engine on explicit multiplication tables: subgroup
// generation, cosets, double cosets, conjugacy, normality, semidirect
// verification, and order-census fingerprints.

#ifndef WEYLEXT_GROUP_HPP_
#define WEYLEXT_GROUP_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "weylext/base.hpp"

namespace weylext {

constexpr int kGroupOrderCap = 65536;
// Explicit order*order tables, subgroup materialization, and character
// tables are restricted to this order.
constexpr int kExhaustiveCap = 4096;
// Full triple-loop associativity up to here; larger tables use Light's
// test on a generating set, which checks the same property in n^2*|S|.
constexpr int kTripleLoopCap = 512;

struct GroupTable {
  int n = 0;
  int identity = 0;
  std::vector<int> mult_;  // row-major n*n
  std::vector<int> inv_;
  std::vector<std::string> labels;  // optional, size n when present

  int order() const { return n; }
  int mult(int a, int b) const { return mult_[size_t(a) * n + b]; }
  int inv(int a) const { return inv_[a]; }

  std::string label(int a) const {
    if (!labels.empty()) return labels[a];
    return "#" + std::to_string(a);
  }

  // Validates the table: Latin square, two-sided identity, inverses, and
  // (for order <= kExhaustiveCap) exhaustive associativity.
  static GroupTable build(std::vector<std::vector<int>> rows,
                          std::vector<std::string> labels = {}) {
    GroupTable g;
    g.n = int(rows.size());
    if (g.n == 0) throw InputError("group table: empty");
    if (g.n > kGroupOrderCap)
      throw ResourceError("group table: order " + std::to_string(g.n) +
                          " exceeds cap " + std::to_string(kGroupOrderCap));
    g.mult_.resize(size_t(g.n) * g.n);
    for (int a = 0; a < g.n; ++a) {
      if (int(rows[a].size()) != g.n)
        throw InputError("group table: row " + std::to_string(a) +
                         " has wrong length");
      for (int b = 0; b < g.n; ++b) {
        int c = rows[a][b];
        if (c < 0 || c >= g.n)
          throw InputError("group table: entry out of range at (" +
                           std::to_string(a) + "," + std::to_string(b) + ")");
        g.mult_[size_t(a) * g.n + b] = c;
      }
    }
    g.finish_validation();
    if (!labels.empty()) {
      if (int(labels.size()) != g.n)
        throw InputError("group table: label list has wrong length");
      g.labels = std::move(labels);
    }
    return g;
  }

  // Same validation, flat row-major input.
  static GroupTable build_flat(int n, std::vector<int> mult,
                               std::vector<std::string> labels = {}) {
    if (n > kGroupOrderCap)
      throw ResourceError("group table: order " + std::to_string(n) +
                          " exceeds cap " + std::to_string(kGroupOrderCap));
    if (n <= 0 || mult.size() != size_t(n) * n)
      throw InputError("group table: bad flat table size");
    std::vector<std::vector<int>> rows(n);
    for (int a = 0; a < n; ++a)
      rows[a].assign(mult.begin() + size_t(a) * n,
                     mult.begin() + size_t(a + 1) * n);
    return build(std::move(rows), std::move(labels));
  }

 private:
  void finish_validation() {
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < n; ++b) seen[mult(a, b)] = 1;
      if (std::count(seen.begin(), seen.end(), 1) != n)
        throw InputError("group table: row " + std::to_string(a) +
                         " is not a permutation");
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < n; ++b) seen[mult(b, a)] = 1;
      if (std::count(seen.begin(), seen.end(), 1) != n)
        throw InputError("group table: column " + std::to_string(a) +
                         " is not a permutation");
    }
    identity = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        ok = mult(e, a) == a && mult(a, e) == a;
      if (ok) {
        identity = e;
        break;
      }
    }
    if (identity < 0) throw InputError("group table: no identity element");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (mult(a, b) == identity && mult(b, a) == identity) {
          inv_[a] = b;
          break;
        }
      }
      if (inv_[a] < 0)
        throw InputError("group table: element " + std::to_string(a) +
                         " has no inverse");
    }
    if (n <= kTripleLoopCap) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int ab = mult(a, b);
          for (int c = 0; c < n; ++c)
            if (mult(ab, c) != mult(a, mult(b, c)))
              throw InputError("group table: associativity fails at (" +
                               std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(c) + ")");
        }
    } else {
      light_associativity_test();
    }
  }

  // Light's test: with S generating the table under left-normed products,
  // associativity of all triples follows from the triples (a, s, b), s in S.
  void light_associativity_test() const {
    std::vector<char> reached(n, 0);
    std::vector<int> queue{identity};
    std::vector<int> gens;
    reached[identity] = 1;
    for (int x = 0; x < n; ++x) {
      if (reached[x]) continue;
      gens.push_back(x);
      if (!reached[x]) {
        reached[x] = 1;
        queue.push_back(x);
      }
      for (size_t head = 0; head < queue.size(); ++head) {
        for (int g : gens) {
          int p = mult(queue[head], g);
          if (!reached[p]) {
            reached[p] = 1;
            queue.push_back(p);
          }
        }
      }
    }
    for (int s : gens)
      for (int a = 0; a < n; ++a) {
        int as = mult(a, s);
        for (int b = 0; b < n; ++b)
          if (mult(as, b) != mult(a, mult(s, b)))
            throw InputError("group table: associativity fails at (" +
                             std::to_string(a) + "," + std::to_string(s) +
                             "," + std::to_string(b) + ")");
      }
  }
};

struct Subgroup {
  const GroupTable* parent = nullptr;
  std::vector<int> members;  // sorted, deduplicated

  int order() const { return int(members.size()); }
  bool contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
};

inline Subgroup generate_subgroup(const GroupTable& g,
                                  const std::vector<int>& generators) {
  for (int x : generators)
    if (x < 0 || x >= g.n)
      throw InputError("generate_subgroup: generator index " +
                       std::to_string(x) + " out of range");
  std::vector<char> in(g.n, 0);
  std::vector<int> queue;
  in[g.identity] = 1;
  queue.push_back(g.identity);
  for (int x : generators)
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  // closure under products; inverses come for free in a finite group
  for (size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    for (size_t i = 0; i < queue.size(); ++i) {
      int p = g.mult(a, queue[i]);
      if (!in[p]) {
        in[p] = 1;
        queue.push_back(p);
      }
      int q = g.mult(queue[i], a);
      if (!in[q]) {
        in[q] = 1;
        queue.push_back(q);
      }
    }
  }
  Subgroup s;
  s.parent = &g;
  for (int x = 0; x < g.n; ++x)
    if (in[x]) s.members.push_back(x);
  return s;
}

inline Subgroup whole_group(const GroupTable& g) {
  Subgroup s;
  s.parent = &g;
  s.members.resize(g.n);
  for (int i = 0; i < g.n; ++i) s.members[i] = i;
  return s;
}

inline Subgroup trivial_subgroup(const GroupTable& g) {
  return Subgroup{&g, {g.identity}};
}

inline bool is_subgroup(const GroupTable& g, const std::vector<int>& members) {
  if (members.empty()) return false;
  for (int a : members)
    if (a < 0 || a >= g.n) return false;
  if (!std::binary_search(members.begin(), members.end(), g.identity))
    return false;
  for (int a : members)
    for (int b : members)
      if (!std::binary_search(members.begin(), members.end(), g.mult(a, b)))
        return false;
  return true;
}

inline bool is_normal(const GroupTable& g, const Subgroup& h) {
  for (int x = 0; x < g.n; ++x)
    for (int m : h.members)
      if (!h.contains(g.mult(g.mult(x, m), g.inv(x)))) return false;
  return true;
}

// Normality of h inside an ambient subgroup rather than the whole group.
inline bool is_normal_in(const GroupTable& g, const Subgroup& h,
                         const Subgroup& ambient) {
  for (int x : ambient.members)
    for (int m : h.members)
      if (!h.contains(g.mult(g.mult(x, m), g.inv(x)))) return false;
  return true;
}

// Partition of the group into double cosets left\g/right, each part sorted,
// parts ordered by their minimal element.
inline std::vector<std::vector<int>> double_cosets(const GroupTable& g,
                                                   const Subgroup& left,
                                                   const Subgroup& right) {
  if (left.parent != &g || right.parent != &g)
    throw InputError("double_cosets: subgroup belongs to a different group");
  std::vector<char> visited(g.n, 0);
  std::vector<std::vector<int>> parts;
  for (int seed = 0; seed < g.n; ++seed) {
    if (visited[seed]) continue;
    std::vector<int> part;
    for (int h : left.members) {
      int hs = g.mult(h, seed);
      for (int k : right.members) {
        int x = g.mult(hs, k);
        if (!visited[x]) {
          visited[x] = 1;
          part.push_back(x);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

struct SemidirectReport {
  bool ok = false;
  bool normal_ok = false;
  bool trivial_intersection = false;
  bool order_product = false;
  bool covers = false;
  // factorization[i] = (n, h) with group element i == n*h, when ok
  std::vector<std::pair<int, int>> factorization;
  std::string detail;
};

// Checks group = normal_part x| complement: normality, trivial intersection,
// and unique factorization n*h covering the group.
inline SemidirectReport semidirect_check(const GroupTable& g,
                                         const Subgroup& normal_part,
                                         const Subgroup& complement) {
  if (normal_part.parent != &g || complement.parent != &g)
    throw InputError("semidirect_check: subgroup belongs to a different group");
  SemidirectReport r;
  r.normal_ok = is_normal(g, normal_part);
  std::vector<int> inter;
  std::set_intersection(normal_part.members.begin(), normal_part.members.end(),
                        complement.members.begin(), complement.members.end(),
                        std::back_inserter(inter));
  r.trivial_intersection = inter.size() == 1 && inter[0] == g.identity;
  r.order_product =
      normal_part.order() * complement.order() == g.n;
  std::vector<int> factor_of(g.n, -1);
  std::vector<std::pair<int, int>> fact(g.n, {-1, -1});
  bool unique = true;
  int covered = 0;
  for (int a : normal_part.members)
    for (int b : complement.members) {
      int p = g.mult(a, b);
      if (factor_of[p] < 0) {
        factor_of[p] = 1;
        fact[p] = {a, b};
        ++covered;
      } else {
        unique = false;
      }
    }
  r.covers = covered == g.n && unique;
  r.ok = r.normal_ok && r.trivial_intersection && r.order_product && r.covers;
  if (r.ok) r.factorization = std::move(fact);
  if (!r.normal_ok)
    r.detail = "normal part is not normal";
  else if (!r.trivial_intersection)
    r.detail = "intersection is nontrivial";
  else if (!r.order_product)
    r.detail = "orders do not multiply to the group order";
  else if (!r.covers)
    r.detail = "products do not cover the group uniquely";
  else
    r.detail = "ok";
  return r;
}

inline int element_order(const GroupTable& g, int x) {
  int ord = 1;
  int p = x;
  while (p != g.identity) {
    p = g.mult(p, x);
    ++ord;
    if (ord > g.n) throw InputError("element_order: table is not a group");
  }
  return ord;
}

inline std::map<int, int> order_census(const GroupTable& g) {
  std::map<int, int> census;
  for (int x = 0; x < g.n; ++x) ++census[element_order(g, x)];
  return census;
}

inline std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g) {
  std::vector<char> visited(g.n, 0);
  std::vector<std::vector<int>> classes;
  for (int seed = 0; seed < g.n; ++seed) {
    if (visited[seed]) continue;
    std::vector<int> cls;
    for (int x = 0; x < g.n; ++x) {
      int c = g.mult(g.mult(x, seed), g.inv(x));
      if (!visited[c]) {
        visited[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline bool is_abelian(const GroupTable& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (g.mult(a, b) != g.mult(b, a)) return false;
  return true;
}

inline std::vector<int> center_elements(const GroupTable& g) {
  std::vector<int> z;
  for (int a = 0; a < g.n; ++a) {
    bool central = true;
    for (int b = 0; b < g.n && central; ++b)
      central = g.mult(a, b) == g.mult(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

// Not an isomorphism test; a cheap invariant triple used to tell small
// groups apart (e.g. dihedral vs quaternion of order 8).
struct Fingerprint {
  std::map<int, int> census;
  bool abelian = false;
  int center_order = 0;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.census == b.census && a.abelian == b.abelian &&
           a.center_order == b.center_order;
  }
};

inline Fingerprint fingerprint(const GroupTable& g) {
  return Fingerprint{order_census(g), is_abelian(g),
                     int(center_elements(g).size())};
}

// --- stock small groups -------------------------------------------------

inline GroupTable make_cyclic(int m) {
  if (m <= 0) throw InputError("make_cyclic: order must be positive");
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) rows[a][b] = (a + b) % m;
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) labels[a] = "g^" + std::to_string(a);
  return GroupTable::build(std::move(rows), std::move(labels));
}

// Dihedral group of order 2m: elements r^a f^e with f r f = r^-1.
inline GroupTable make_dihedral(int order) {
  if (order < 2 || order % 2 != 0)
    throw InputError("make_dihedral: order must be even and >= 2");
  int m = order / 2;
  auto idx = [m](int a, int e) { return e * m + a; };
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int a = 0; a < m; ++a)
    for (int e = 0; e < 2; ++e) {
      labels[idx(a, e)] =
          "r^" + std::to_string(a) + (e ? " f" : "");
      for (int b = 0; b < m; ++b)
        for (int d = 0; d < 2; ++d) {
          // (r^a f^e)(r^b f^d) = r^(a + b or a - b) f^(e+d)
          int exp = e ? (a - b + m) % m : (a + b) % m;
          rows[idx(a, e)][idx(b, d)] = idx(exp, (e + d) % 2);
        }
    }
  return GroupTable::build(std::move(rows), std::move(labels));
}

// Quaternion group {1,-1,i,-i,j,-j,k,-k}.
inline GroupTable make_quaternion() {
  // index = 2*axis + sign, axis in {1,i,j,k}
  auto mul = [](int x, int y) {
    int ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
    // multiplication of units: table over axes with result axis and sign
    static const int axis[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int neg[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int a = axis[ax][ay];
    int s = (sx + sy + neg[ax][ay]) % 2;
    return 2 * a + s;
  };
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) rows[x][y] = mul(x, y);
  return GroupTable::build(std::move(rows),
                           {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  long long order = (long long)a.n * b.n;
  if (order > kGroupOrderCap)
    throw ResourceError("direct_product: order exceeds cap");
  int n = int(order);
  auto idx = [&](int x, int y) { return x * b.n + y; };
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          rows[idx(x1, y1)][idx(x2, y2)] = idx(a.mult(x1, x2), b.mult(y1, y2));
  return GroupTable::build(std::move(rows));
}

// Relabels the group by a permutation: new index perm[x] corresponds to old
// index x. Useful for invariance tests.
inline GroupTable relabeled(const GroupTable& g, const std::vector<int>& perm) {
  if (int(perm.size()) != g.n)
    throw InputError("relabeled: permutation has wrong length");
  std::vector<std::vector<int>> rows(g.n, std::vector<int>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      rows[perm[a]][perm[b]] = perm[g.mult(a, b)];
  return GroupTable::build(std::move(rows));
}

}  // namespace weylext

#endif  // WEYLEXT_GROUP_HPP_
