// Exact root systems of classical types, Weyl groups as integer orthogonal
// matrices, and extended Weyl groups W x| Gamma for a finite abelian
// component group acting by root-preserving matrices.

#ifndef WEYLEXT_ROOTSYS_HPP_
#define WEYLEXT_ROOTSYS_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylext/base.hpp"
#include "weylext/clifford.hpp"
#include "weylext/group.hpp"

namespace weylext {

struct Mat {
  int n = 0;
  std::vector<int> a;  // row-major n*n

  Mat() = default;
  explicit Mat(int size) : n(size), a(size_t(size) * size, 0) {}

  static Mat identity_matrix(int size) {
    Mat m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
  }

  int& at(int i, int j) { return a[size_t(i) * n + j]; }
  int at(int i, int j) const { return a[size_t(i) * n + j]; }

  Mat transpose() const {
    Mat t(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != (i == j)) return false;
    return true;
  }

  bool is_orthogonal() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int dot = 0;
        for (int k = 0; k < n; ++k) dot += at(k, i) * at(k, j);
        if (dot != (i == j)) return false;
      }
    return true;
  }

  std::vector<int> apply(const std::vector<int>& v) const {
    std::vector<int> out(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  std::vector<Frac> apply(const std::vector<Frac>& v) const {
    std::vector<Frac> out(n, Frac(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out[i] = out[i] + Frac(at(i, j)) * v[j];
    return out;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat p(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        int xv = x.at(i, k);
        if (xv == 0) continue;
        for (int j = 0; j < x.n; ++j) p.at(i, j) += xv * y.at(k, j);
      }
    return p;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.n == y.n && x.a == y.a;
  }
};

// Extended groups materialize their full table only up to this order;
// larger groups stay in enumerated form (matrices + hash lookups) and
// subgroups are materialized individually.
constexpr int kEagerTableCap = 1024;

struct MatHash {
  size_t operator()(const Mat& m) const {
    size_t h = 1469598103934665603ull;
    for (int v : m.a) {
      h ^= size_t(v + 7);
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline int dot(const std::vector<int>& x, const std::vector<int>& y) {
  int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

struct RootSystem {
  std::string type_label;  // "A","B","C","D" or "custom"
  int rank = 0;
  int dim = 0;  // coordinate dimension (rank+1 for type A)
  std::vector<std::vector<int>> roots;
  std::vector<int> positive;  // indices into roots
  std::vector<int> simple;    // indices into roots; may be empty for custom
  std::map<std::vector<int>, int> index;

  int root_count() const { return int(roots.size()); }

  int index_of(const std::vector<int>& v) const {
    auto it = index.find(v);
    return it == index.end() ? -1 : it->second;
  }

  bool is_positive(int root_idx) const {
    return std::binary_search(positive.begin(), positive.end(), root_idx);
  }

  std::string root_name(int idx) const {
    const auto& v = roots[idx];
    std::string s;
    for (int i = 0; i < dim; ++i) {
      int c = v[i];
      if (c == 0) continue;
      std::string coef;
      if (c == 1)
        coef = s.empty() ? "" : "+";
      else if (c == -1)
        coef = "-";
      else
        coef = (c > 0 && !s.empty() ? "+" : "") + std::to_string(c);
      s += coef + "e" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
  }
};

namespace detail {

inline void finish_root_system(RootSystem& rs, bool require_reduced,
                               bool check_simple_span) {
  for (const auto& r : rs.roots)
    if (int(r.size()) != rs.dim)
      throw InputError("root system: root has wrong dimension");
  rs.index.clear();
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    if (std::all_of(rs.roots[i].begin(), rs.roots[i].end(),
                    [](int c) { return c == 0; }))
      throw InputError("root system: zero vector is not a root");
    if (rs.index.count(rs.roots[i]))
      throw InputError("root system: duplicate root");
    rs.index[rs.roots[i]] = int(i);
  }
  // closed under negation, positive half exactly one of each +/- pair
  std::vector<char> pos_mark(rs.roots.size(), 0);
  for (int p : rs.positive) {
    if (p < 0 || p >= rs.root_count())
      throw InputError("root system: positive index out of range");
    pos_mark[p] = 1;
  }
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    std::vector<int> neg(rs.roots[i]);
    for (int& c : neg) c = -c;
    int j = rs.index_of(neg);
    if (j < 0)
      throw InputError("root system: set is not closed under negation (" +
                       rs.root_name(int(i)) + ")");
    if (pos_mark[i] == pos_mark[size_t(j)])
      throw InputError(
          "root system: positive half must contain exactly one of each +/- "
          "pair (" + rs.root_name(int(i)) + ")");
  }
  if (require_reduced) {
    // no root may be an integer multiple (beyond +/-1) of another
    for (size_t i = 0; i < rs.roots.size(); ++i)
      for (size_t j = 0; j < rs.roots.size(); ++j) {
        if (i == j) continue;
        for (int k = 2; k <= 4; ++k) {
          std::vector<int> scaled(rs.roots[i]);
          for (int& c : scaled) c *= k;
          if (scaled == rs.roots[j])
            throw InputError("root system: not reduced (" +
                             rs.root_name(int(j)) + " = " + std::to_string(k) +
                             " * " + rs.root_name(int(i)) + ")");
        }
      }
  }
  std::sort(rs.positive.begin(), rs.positive.end());
  if (check_simple_span && !rs.simple.empty()) {
    // every positive root must be a nonnegative integer combination of the
    // simple roots; for the stock types a greedy peel-off suffices
    for (int p : rs.positive) {
      std::vector<int> v = rs.roots[p];
      bool progress = true;
      auto is_zero = [&] {
        return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
      };
      int guard = 0;
      while (!is_zero() && progress && ++guard < 1000) {
        progress = false;
        for (int s : rs.simple) {
          const auto& alpha = rs.roots[s];
          // peel off a simple root with positive inner product; for a
          // reduced crystallographic system this stays in Phi+ u {0}
          if (dot(v, alpha) > 0) {
            for (int i = 0; i < rs.dim; ++i) v[i] -= alpha[i];
            progress = true;
            break;
          }
        }
      }
      if (!is_zero())
        throw InputError("root system: positive root " + rs.root_name(p) +
                         " is not a sum of simple roots");
    }
  }
}

}  // namespace detail

// Stock types: A_n realized in n+1 coordinates, B/C/D_n in n coordinates.
inline RootSystem build_root_system(char type, int rank) {
  RootSystem rs;
  rs.type_label = std::string(1, type);
  rs.rank = rank;
  auto add_root = [&rs](std::vector<int> v, bool pos) {
    rs.index[v] = int(rs.roots.size());
    rs.roots.push_back(std::move(v));
    if (pos) rs.positive.push_back(int(rs.roots.size()) - 1);
  };
  auto unit = [&](int i, int sign) {
    std::vector<int> v(rs.dim, 0);
    v[i] = sign;
    return v;
  };
  auto pair_root = [&](int i, int j, int si, int sj) {
    std::vector<int> v(rs.dim, 0);
    v[i] = si;
    v[j] = sj;
    return v;
  };
  switch (type) {
    case 'A': {
      if (rank < 1) throw InputError("type A requires rank >= 1");
      rs.dim = rank + 1;
      for (int i = 0; i < rs.dim; ++i)
        for (int j = 0; j < rs.dim; ++j)
          if (i != j) add_root(pair_root(i, j, 1, -1), i < j);
      for (int i = 0; i < rank; ++i)
        rs.simple.push_back(rs.index_of(pair_root(i, i + 1, 1, -1)));
      break;
    }
    case 'B': {
      if (rank < 2) throw InputError("type B requires rank >= 2");
      rs.dim = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          add_root(pair_root(i, j, 1, -1), true);
          add_root(pair_root(i, j, -1, 1), false);
          add_root(pair_root(i, j, 1, 1), true);
          add_root(pair_root(i, j, -1, -1), false);
        }
      for (int i = 0; i < rank; ++i) {
        add_root(unit(i, 1), true);
        add_root(unit(i, -1), false);
      }
      for (int i = 0; i + 1 < rank; ++i)
        rs.simple.push_back(rs.index_of(pair_root(i, i + 1, 1, -1)));
      rs.simple.push_back(rs.index_of(unit(rank - 1, 1)));
      break;
    }
    case 'C': {
      if (rank < 2) throw InputError("type C requires rank >= 2");
      rs.dim = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          add_root(pair_root(i, j, 1, -1), true);
          add_root(pair_root(i, j, -1, 1), false);
          add_root(pair_root(i, j, 1, 1), true);
          add_root(pair_root(i, j, -1, -1), false);
        }
      for (int i = 0; i < rank; ++i) {
        add_root(unit(i, 2), true);
        add_root(unit(i, -2), false);
      }
      for (int i = 0; i + 1 < rank; ++i)
        rs.simple.push_back(rs.index_of(pair_root(i, i + 1, 1, -1)));
      rs.simple.push_back(rs.index_of(unit(rank - 1, 2)));
      break;
    }
    case 'D': {
      if (rank < 2) throw InputError("type D requires rank >= 2");
      rs.dim = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          add_root(pair_root(i, j, 1, -1), true);
          add_root(pair_root(i, j, -1, 1), false);
          add_root(pair_root(i, j, 1, 1), true);
          add_root(pair_root(i, j, -1, -1), false);
        }
      for (int i = 0; i + 1 < rank; ++i)
        rs.simple.push_back(rs.index_of(pair_root(i, i + 1, 1, -1)));
      rs.simple.push_back(rs.index_of(pair_root(rank - 2, rank - 1, 1, 1)));
      break;
    }
    default:
      throw InputError(std::string("unsupported root-system type '") + type +
                       "'");
  }
  detail::finish_root_system(rs, /*require_reduced=*/true,
                             /*check_simple_span=*/true);
  return rs;
}

// User-supplied (e.g. restricted) root data. The set must be reduced; the
// simple list is optional.
inline RootSystem build_custom_root_system(
    int dim, std::vector<std::vector<int>> roots,
    std::vector<std::vector<int>> positive_roots,
    std::vector<std::vector<int>> simple_roots = {}) {
  RootSystem rs;
  rs.type_label = "custom";
  rs.dim = dim;
  rs.rank = dim;
  rs.roots = std::move(roots);
  for (size_t i = 0; i < rs.roots.size(); ++i) rs.index[rs.roots[i]] = int(i);
  for (const auto& v : positive_roots) {
    auto it = rs.index.find(v);
    if (it == rs.index.end())
      throw InputError("custom root system: positive root not in root list");
    rs.positive.push_back(it->second);
  }
  for (const auto& v : simple_roots) {
    auto it = rs.index.find(v);
    if (it == rs.index.end())
      throw InputError("custom root system: simple root not in root list");
    rs.simple.push_back(it->second);
  }
  detail::finish_root_system(rs, /*require_reduced=*/true,
                             /*check_simple_span=*/false);
  return rs;
}

// Reflection in a root, s_a(x) = x - 2(x,a)/(a,a) * a. Rejected if the
// matrix is not integral.
inline Mat reflection_matrix(const RootSystem& rs, int root_idx) {
  const auto& alpha = rs.roots[root_idx];
  int norm = dot(alpha, alpha);
  Mat m(rs.dim);
  for (int j = 0; j < rs.dim; ++j) {
    // image of basis vector e_j
    std::vector<int> e(rs.dim, 0);
    e[j] = 1;
    long long num = 2LL * alpha[j];
    for (int i = 0; i < rs.dim; ++i) {
      long long val = (long long)e[i] * norm - num * alpha[i];
      if (val % norm != 0)
        throw InputError("reflection in " + rs.root_name(root_idx) +
                         " is not an integer matrix");
      m.at(i, j) = int(val / norm);
    }
  }
  return m;
}

inline bool preserves_root_set(const RootSystem& rs, const Mat& m) {
  for (const auto& r : rs.roots)
    if (rs.index_of(m.apply(r)) < 0) return false;
  return true;
}

inline bool permutes_simple_system(const RootSystem& rs, const Mat& m) {
  for (int s : rs.simple) {
    int im = rs.index_of(m.apply(rs.roots[s]));
    if (im < 0 ||
        !std::count(rs.simple.begin(), rs.simple.end(), im))
      return false;
  }
  return true;
}

// Component group action: one root-preserving integer orthogonal matrix per
// group element, forming a homomorphism.
struct ComponentAction {
  FiniteAbelianGroup gamma;
  std::vector<Mat> matrices;  // indexed by gamma element

  static ComponentAction trivial(const RootSystem& rs) {
    ComponentAction a;
    a.matrices = {Mat::identity_matrix(rs.dim)};
    return a;
  }

  // Builds the full action from one matrix per invariant factor generator.
  static ComponentAction from_generators(const RootSystem& rs,
                                         FiniteAbelianGroup gamma,
                                         const std::vector<Mat>& gen_mats) {
    if (int(gen_mats.size()) != gamma.rank())
      throw InputError(
          "component action: need one matrix per invariant factor");
    ComponentAction a;
    a.gamma = std::move(gamma);
    for (int i = 0; i < a.gamma.rank(); ++i) {
      const Mat& m = gen_mats[i];
      if (m.n != rs.dim)
        throw InputError("component action: matrix has wrong dimension");
      if (!m.is_orthogonal())
        throw InputError("component action: matrix is not orthogonal");
      if (!preserves_root_set(rs, m))
        throw InputError(
            "component action: matrix does not preserve the root set");
      // order must divide the invariant factor
      Mat p = m;
      for (int k = 1; k < a.gamma.factors[i]; ++k) p = p * m;
      if (!p.is_identity())
        throw InputError(
            "component action: generator matrix order does not divide its "
            "invariant factor");
      for (int j = 0; j < i; ++j)
        if (!(gen_mats[i] * gen_mats[j] == gen_mats[j] * gen_mats[i]))
          throw InputError(
              "component action: generator matrices must commute");
    }
    a.matrices.resize(a.gamma.order());
    for (int g = 0; g < a.gamma.order(); ++g) {
      auto t = a.gamma.tuple_of(g);
      Mat m = Mat::identity_matrix(rs.dim);
      for (int i = 0; i < a.gamma.rank(); ++i)
        for (int k = 0; k < t[i]; ++k) m = m * gen_mats[i];
      a.matrices[g] = std::move(m);
    }
    return a;
  }
};

// The extended Weyl group W x| Gamma. Elements are pairs (matrix, component)
// with matrix = w * A(component); they are enumerated with the inner Weyl
// group first (component index 0), so element i has component i / |W|.
struct ExtendedWeylGroup {
  RootSystem rs;
  ComponentAction action;
  std::vector<Mat> wmats;           // inner Weyl matrices, BFS order from id
  std::vector<std::string> wwords;  // reduced words over simple reflections
  std::vector<Mat> mats;            // matrix per extended element
  std::unordered_map<Mat, int, MatHash> winv_index;
  std::optional<GroupTable> table_;  // materialized when small

  int inner_order() const { return int(wmats.size()); }
  int order() const { return inner_order() * action.gamma.order(); }
  int identity() const { return 0; }
  int component_of(int i) const { return i / inner_order(); }
  int inner_part(int i) const { return i % inner_order(); }
  const Mat& matrix(int i) const { return mats[i]; }
  const FiniteAbelianGroup& gamma() const { return action.gamma; }

  int element_index(const Mat& matrix, int component) const {
    Mat w = matrix * action.matrices[component].transpose();
    auto it = winv_index.find(w);
    if (it == winv_index.end()) return -1;
    return component * inner_order() + it->second;
  }

  int multiply(int x, int y) const {
    if (table_) return table_->mult(x, y);
    int c = action.gamma.add(component_of(x), component_of(y));
    int idx = element_index(mats[x] * mats[y], c);
    if (idx < 0)
      throw Error("extended Weyl group: product fell outside the group");
    return idx;
  }

  int inverse(int x) const {
    if (table_) return table_->inv(x);
    int c = action.gamma.neg(component_of(x));
    int idx = element_index(mats[x].transpose(), c);
    if (idx < 0)
      throw Error("extended Weyl group: inverse fell outside the group");
    return idx;
  }

  int element_order(int x) const {
    int ord = 1, p = x;
    while (p != identity()) {
      p = multiply(p, x);
      ++ord;
    }
    return ord;
  }

  std::string label(int i) const {
    std::string s = wwords[inner_part(i)];
    int c = component_of(i);
    if (c != 0) s += "." + action.gamma.label(c);
    return s;
  }

  // Image of a root index under element i; the image is again a root.
  int act_root(int i, int root_idx) const {
    int im = rs.index_of(mats[i].apply(rs.roots[root_idx]));
    if (im < 0)
      throw Error("extended Weyl group: element does not preserve roots");
    return im;
  }

  // Action on an arbitrary vector, for callers holding raw coordinates.
  std::vector<int> act_vector(int i, const std::vector<int>& v) const {
    return mats[i].apply(v);
  }

  // Number of positive roots sent negative by the inner part of element i
  // (a Coxeter length when the element is inner).
  int inversion_count(int i) const {
    const Mat inner = mats[inner_part(i)];
    int count = 0;
    for (int p : rs.positive)
      if (!rs.is_positive(rs_index_checked(inner.apply(rs.roots[p]))))
        ++count;
    return count;
  }

  const GroupTable& table() const {
    if (!table_)
      throw ResourceError(
          "extended Weyl group: full table not materialized at order " +
          std::to_string(order()) + " (cap " +
          std::to_string(kEagerTableCap) +
          "); use the enumerated interface or subgroup tables");
    return *table_;
  }

 private:
  int rs_index_checked(const std::vector<int>& v) const {
    int idx = rs.index_of(v);
    if (idx < 0)
      throw Error("extended Weyl group: vector left the root set");
    return idx;
  }

  friend ExtendedWeylGroup build_extended_weyl(const RootSystem&,
                                               const ComponentAction&);
};

// Enumerates W by closing the simple reflections (all positive-root
// reflections when no simple system is given), then crosses with Gamma.
inline ExtendedWeylGroup build_extended_weyl(const RootSystem& rs,
                                             const ComponentAction& action) {
  ExtendedWeylGroup g;
  g.rs = rs;
  g.action = action;
  if (g.action.matrices.empty())
    g.action = ComponentAction::trivial(rs);
  for (const Mat& m : g.action.matrices) {
    if (m.n != rs.dim)
      throw InputError("extended Weyl group: action dimension mismatch");
    if (!preserves_root_set(rs, m))
      throw InputError(
          "extended Weyl group: action matrix does not preserve the root set");
  }
  if (!g.action.matrices[g.action.gamma.identity()].is_identity())
    throw InputError(
        "extended Weyl group: identity component must act trivially");

  std::vector<int> gen_roots = rs.simple.empty() ? rs.positive : rs.simple;
  std::vector<Mat> gens;
  std::vector<std::string> gen_names;
  for (size_t k = 0; k < gen_roots.size(); ++k) {
    gens.push_back(reflection_matrix(rs, gen_roots[k]));
    gen_names.push_back("s" + std::to_string(k + 1));
  }
  g.wmats.push_back(Mat::identity_matrix(rs.dim));
  g.wwords.push_back("e");
  g.winv_index[g.wmats[0]] = 0;
  for (size_t head = 0; head < g.wmats.size(); ++head) {
    Mat cur = g.wmats[head];  // copy: vector may reallocate
    for (size_t k = 0; k < gens.size(); ++k) {
      Mat next = cur * gens[k];
      if (g.winv_index.count(next)) continue;
      if (int(g.wmats.size()) + 1 > kGroupOrderCap)
        throw ResourceError("Weyl group enumeration exceeds the order cap");
      g.winv_index[next] = int(g.wmats.size());
      g.wmats.push_back(next);
      g.wwords.push_back(head == 0 ? gen_names[k]
                                   : g.wwords[head] + " " + gen_names[k]);
    }
  }
  long long total = (long long)g.wmats.size() * g.action.gamma.order();
  if (total > kGroupOrderCap)
    throw ResourceError("extended Weyl group: order " + std::to_string(total) +
                        " exceeds cap " + std::to_string(kGroupOrderCap));
  g.mats.reserve(total);
  for (int c = 0; c < g.action.gamma.order(); ++c)
    for (int w = 0; w < int(g.wmats.size()); ++w)
      g.mats.push_back(g.wmats[w] * g.action.matrices[c]);

  if (total <= kEagerTableCap) {
    int n = int(total);
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
      labels[x] = g.label(x);
      for (int y = 0; y < n; ++y) {
        int c = g.action.gamma.add(g.component_of(x), g.component_of(y));
        int idx = g.element_index(g.mats[x] * g.mats[y], c);
        if (idx < 0)
          throw Error("extended Weyl group: product fell outside the group");
        rows[x][y] = idx;
      }
    }
    g.table_ = GroupTable::build(std::move(rows), std::move(labels));
  }
  return g;
}

inline ExtendedWeylGroup build_weyl_group(const RootSystem& rs) {
  return build_extended_weyl(rs, ComponentAction::trivial(rs));
}

// Action on a root given by coordinates; the input must be a root and the
// image is again one.
inline std::vector<int> act_on_root(const ExtendedWeylGroup& g, int element,
                                    const std::vector<int>& root) {
  int idx = g.rs.index_of(root);
  if (idx < 0)
    throw InputError("act_on_root: " + vec_to_string(root) +
                     " is not a root of the system");
  return g.rs.roots[g.act_root(element, idx)];
}

// Subgroup of an extended Weyl group, as a sorted element-index set.
struct EwSubgroup {
  const ExtendedWeylGroup* parent = nullptr;
  std::vector<int> members;

  int order() const { return int(members.size()); }
  bool contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
};

inline EwSubgroup ew_generate(const ExtendedWeylGroup& g,
                              const std::vector<int>& generators) {
  for (int x : generators)
    if (x < 0 || x >= g.order())
      throw InputError("subgroup generation: element index out of range");
  std::map<int, char> in;
  std::vector<int> queue{g.identity()};
  in[g.identity()] = 1;
  for (int x : generators)
    if (!in.count(x)) {
      in[x] = 1;
      queue.push_back(x);
    }
  for (size_t h = 0; h < queue.size(); ++h)
    for (size_t i = 0; i < queue.size(); ++i) {
      int p = g.multiply(queue[h], queue[i]);
      if (!in.count(p)) {
        in[p] = 1;
        queue.push_back(p);
      }
      int q = g.multiply(queue[i], queue[h]);
      if (!in.count(q)) {
        in[q] = 1;
        queue.push_back(q);
      }
    }
  EwSubgroup s;
  s.parent = &g;
  for (auto& [x, _] : in) s.members.push_back(x);
  return s;
}

inline EwSubgroup ew_whole(const ExtendedWeylGroup& g) {
  EwSubgroup s;
  s.parent = &g;
  s.members.resize(g.order());
  for (int i = 0; i < g.order(); ++i) s.members[i] = i;
  return s;
}

inline EwSubgroup ew_trivial(const ExtendedWeylGroup& g) {
  return EwSubgroup{&g, {g.identity()}};
}

// Materializes a subgroup as its own GroupTable (member order preserved:
// element k of the table is members[k]).
inline GroupTable ew_subgroup_table(const EwSubgroup& s) {
  const ExtendedWeylGroup& g = *s.parent;
  int m = s.order();
  if (m > kExhaustiveCap)
    throw ResourceError("subgroup table: order " + std::to_string(m) +
                        " exceeds cap " + std::to_string(kExhaustiveCap));
  std::map<int, int> pos;
  for (int k = 0; k < m; ++k) pos[s.members[k]] = k;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = g.label(s.members[a]);
    for (int b = 0; b < m; ++b) {
      int p = g.multiply(s.members[a], s.members[b]);
      auto it = pos.find(p);
      if (it == pos.end())
        throw InputError("subgroup table: member set is not closed under "
                         "multiplication");
      rows[a][b] = it->second;
    }
  }
  return GroupTable::build(std::move(rows), std::move(labels));
}

}  // namespace weylext

#endif  // WEYLEXT_ROOTSYS_HPP_
