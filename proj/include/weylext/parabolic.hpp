// Theta-combinatorics for disconnected groups: the base normalizer, the
// stabilizers W(Theta), component images of normalizer-style Levis,
// cuspidality tests on the split-component shadow a_Theta, and detectors
// for the containment/minimality anomalies of N-parabolic subgroups.

#ifndef WEYLEXT_PARABOLIC_HPP_
#define WEYLEXT_PARABOLIC_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weylext/base.hpp"
#include "weylext/rootsys.hpp"

namespace weylext {

// Exact rational kernel of the linear system {(alpha, H) = 0 : alpha in
// rows}, returned as integer basis vectors (denominators cleared).
inline std::vector<std::vector<int>> integer_kernel(
    const std::vector<std::vector<int>>& rows, int dim) {
  std::vector<std::vector<Frac>> m;
  for (const auto& r : rows) {
    std::vector<Frac> fr(dim);
    for (int j = 0; j < dim; ++j) fr[j] = Frac(r[j]);
    m.push_back(std::move(fr));
  }
  int nrows = int(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < dim && r < nrows; ++c) {
    int p = -1;
    for (int i = r; i < nrows; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Frac lead = m[r][c];
    for (int j = 0; j < dim; ++j) m[r][j] = m[r][j] / lead;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Frac f = m[i][c];
      for (int j = 0; j < dim; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(dim, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Frac> v(dim, Frac(0));
    v[free] = Frac(1);
    for (int i = 0; i < int(pivot_col.size()); ++i)
      v[pivot_col[i]] = Frac(0) - m[i][free];
    long long den = 1;
    for (const Frac& f : v) den = std::lcm(den, f.den);
    std::vector<int> iv(dim);
    for (int j = 0; j < dim; ++j)
      iv[j] = int(v[j].num * (den / v[j].den));
    long long g = 0;
    for (int x : iv) g = std::gcd(g, (long long)(x < 0 ? -x : x));
    if (g > 1)
      for (int& x : iv) x = int(x / g);
    basis.push_back(std::move(iv));
  }
  return basis;
}

struct ParabolicDatum {
  const ExtendedWeylGroup* ambient = nullptr;
  std::vector<int> theta;                    // sorted simple-root indices
  std::vector<std::vector<int>> a_theta;     // integer basis of the kernel

  static ParabolicDatum build(const ExtendedWeylGroup& g,
                              const std::vector<int>& theta_roots) {
    ParabolicDatum d;
    d.ambient = &g;
    std::set<int> seen;
    for (int t : theta_roots) {
      if (!std::count(g.rs.simple.begin(), g.rs.simple.end(), t))
        throw InputError("parabolic datum: theta entry " + std::to_string(t) +
                         " is not a simple root index");
      seen.insert(t);
    }
    d.theta.assign(seen.begin(), seen.end());
    std::vector<std::vector<int>> rows;
    for (int t : d.theta) rows.push_back(g.rs.roots[t]);
    d.a_theta = integer_kernel(rows, g.rs.dim);
    if (int(d.a_theta.size()) != g.rs.dim - int(d.theta.size()))
      throw InputError(
          "parabolic datum: theta is not linearly independent");
    return d;
  }

  bool theta_contains(int root_idx) const {
    return std::binary_search(theta.begin(), theta.end(), root_idx);
  }
};

// {w in the extended group : w(Delta) = Delta}. For the supported types its
// intersection with the inner Weyl group must be trivial; violation is an
// error rather than a silent wrong answer.
inline EwSubgroup base_normalizer(const ExtendedWeylGroup& g) {
  EwSubgroup s;
  s.parent = &g;
  for (int i = 0; i < g.order(); ++i) {
    bool ok = true;
    for (int a : g.rs.simple) {
      int im = g.act_root(i, a);
      if (!std::count(g.rs.simple.begin(), g.rs.simple.end(), im)) {
        ok = false;
        break;
      }
    }
    if (ok) s.members.push_back(i);
  }
  for (int i : s.members)
    if (i != g.identity() && g.component_of(i) == 0)
      throw InconsistentDatumError(
          "base normalizer: inner element " + g.label(i) +
          " fixes the simple system; this shadow assumes a trivial inner "
          "stabilizer");
  return s;
}

namespace detail {

inline EwSubgroup theta_stabilizer_in(const ExtendedWeylGroup& g,
                                      const EwSubgroup& base,
                                      const std::vector<int>& theta) {
  EwSubgroup s;
  s.parent = &g;
  for (int i : base.members) {
    bool ok = true;
    for (int t : theta)
      if (!std::binary_search(theta.begin(), theta.end(), g.act_root(i, t))) {
        ok = false;
        break;
      }
    if (ok) s.members.push_back(i);
  }
  return s;
}

}  // namespace detail

// {w in base_normalizer : w(Theta) = Theta}.
inline EwSubgroup theta_stabilizer(const ParabolicDatum& d) {
  const ExtendedWeylGroup& g = *d.ambient;
  return detail::theta_stabilizer_in(g, base_normalizer(g), d.theta);
}

// Component image of the Theta-stabilizer, as a sorted subset of Gamma.
inline std::vector<int> n_levi_component_image(const ParabolicDatum& d) {
  const ExtendedWeylGroup& g = *d.ambient;
  EwSubgroup s = theta_stabilizer(d);
  std::set<int> image;
  for (int i : s.members) image.insert(g.component_of(i));
  return std::vector<int>(image.begin(), image.end());
}

inline bool fixes_pointwise(const ExtendedWeylGroup& g, int element,
                            const std::vector<std::vector<int>>& basis) {
  for (const auto& v : basis)
    if (g.act_vector(element, v) != v) return false;
  return true;
}

// Components whose coset contains an element acting as the identity on
// a_Theta; these index the cuspidal Levi over the Theta-parabolic.
inline std::vector<int> cuspidal_levi_components(const ParabolicDatum& d) {
  const ExtendedWeylGroup& g = *d.ambient;
  std::set<int> comps;
  comps.insert(g.gamma().identity());
  for (int i = 0; i < g.order(); ++i) {
    int c = g.component_of(i);
    if (comps.count(c)) continue;
    if (fixes_pointwise(g, i, d.a_theta)) comps.insert(c);
  }
  return std::vector<int>(comps.begin(), comps.end());
}

// True iff every requested component has a representative fixing a_Theta
// pointwise.
inline bool is_cuspidal_levi(const ParabolicDatum& d,
                             const std::vector<int>& levi_components) {
  std::vector<int> cusp = cuspidal_levi_components(d);
  for (int c : levi_components) {
    if (c < 0 || c >= d.ambient->gamma().order())
      throw InputError("is_cuspidal_levi: component index out of range");
    if (!std::binary_search(cusp.begin(), cusp.end(), c)) return false;
  }
  return true;
}

struct ContainmentAnomaly {
  std::vector<int> theta_small;  // simple-root indices
  std::vector<int> theta_large;
  int witness = -1;  // element of W(theta_small) \ W(theta_large)
};

// All pairs Theta1 < Theta2 whose stabilizers fail to nest; each witnessed
// by an explicit element.
inline std::vector<ContainmentAnomaly> containment_anomalies(
    const ExtendedWeylGroup& g) {
  int k = int(g.rs.simple.size());
  if (k > 16)
    throw ResourceError("containment_anomalies: too many simple roots");
  EwSubgroup base = base_normalizer(g);
  std::vector<EwSubgroup> stab(size_t(1) << k);
  std::vector<std::vector<int>> theta_of(size_t(1) << k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> theta;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) theta.push_back(g.rs.simple[b]);
    std::sort(theta.begin(), theta.end());
    theta_of[mask] = theta;
    stab[mask] = detail::theta_stabilizer_in(g, base, theta);
  }
  std::vector<ContainmentAnomaly> out;
  for (unsigned small = 0; small < (1u << k); ++small)
    for (unsigned large = 0; large < (1u << k); ++large) {
      if (small == large || (small & large) != small) continue;
      for (int w : stab[small].members)
        if (!stab[large].contains(w)) {
          out.push_back({theta_of[small], theta_of[large], w});
          break;
        }
    }
  return out;
}

struct MinimalNParabolicReport {
  bool exists = true;
  std::vector<int> witness_theta;  // a Theta with trivial stabilizer, if any
};

// The minimal N-parabolic exists unless the base normalizer is nontrivial
// while some Theta-parabolic fails to meet all those components.
inline MinimalNParabolicReport minimal_nparabolic_exists(
    const ExtendedWeylGroup& g) {
  MinimalNParabolicReport r;
  EwSubgroup base = base_normalizer(g);
  if (base.order() <= 1) return r;
  int k = int(g.rs.simple.size());
  if (k > 16)
    throw ResourceError("minimal_nparabolic_exists: too many simple roots");
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> theta;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) theta.push_back(g.rs.simple[b]);
    std::sort(theta.begin(), theta.end());
    EwSubgroup s = detail::theta_stabilizer_in(g, base, theta);
    if (s.order() == 1) {
      r.exists = false;
      r.witness_theta = theta;
      return r;
    }
  }
  return r;
}

struct DoubleCosetInfo {
  std::vector<int> members;  // sorted element indices
  int representative = -1;   // minimal element
  int size = 0;
  int length_proxy = 0;  // max Coxeter length of inner parts over the coset
};

// Double-coset census on an extended Weyl group, with the length proxy that
// stands in for the orbit dimension (the analytic dimension is out of
// scope; the proxy preserves the closure partial order at this scale).
inline std::vector<DoubleCosetInfo> double_coset_census(
    const ExtendedWeylGroup& g, const EwSubgroup& left,
    const EwSubgroup& right) {
  if (left.parent != &g || right.parent != &g)
    throw InputError("double_coset_census: subgroup has a different parent");
  std::vector<char> visited(g.order(), 0);
  std::vector<DoubleCosetInfo> out;
  for (int seed = 0; seed < g.order(); ++seed) {
    if (visited[seed]) continue;
    DoubleCosetInfo info;
    for (int h : left.members) {
      int hs = g.multiply(h, seed);
      for (int kk : right.members) {
        int x = g.multiply(hs, kk);
        if (!visited[x]) {
          visited[x] = 1;
          info.members.push_back(x);
        }
      }
    }
    std::sort(info.members.begin(), info.members.end());
    info.representative = info.members.front();
    info.size = int(info.members.size());
    for (int x : info.members)
      info.length_proxy = std::max(info.length_proxy, g.inversion_count(x));
    out.push_back(std::move(info));
  }
  return out;
}

}  // namespace weylext

#endif  // WEYLEXT_PARABOLIC_HPP_
