// Finite abelian character-group machinery and the restriction/induction
// arithmetic between a group and a finite-index normal subgroup with
// abelian quotient.

#ifndef WEYLEXT_CLIFFORD_HPP_
#define WEYLEXT_CLIFFORD_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "weylext/base.hpp"
#include "weylext/group.hpp"

namespace weylext {

// Finite abelian group in invariant-factor form d1 | d2 | ... | dk, each
// di >= 2. Elements are tuples (a1,...,ak) with ai mod di, enumerated in
// lexicographic order with the last coordinate fastest.
struct FiniteAbelianGroup {
  std::vector<int> factors;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> invariant_factors)
      : factors(std::move(invariant_factors)) {
    for (size_t i = 0; i < factors.size(); ++i) {
      if (factors[i] < 2)
        throw InputError("abelian group: invariant factor must be >= 2");
      if (i > 0 && factors[i] % factors[i - 1] != 0)
        throw InputError("abelian group: invariant factors must divide");
    }
    if (order_long() > kGroupOrderCap)
      throw ResourceError("abelian group: order exceeds cap");
  }

  long long order_long() const {
    long long o = 1;
    for (int d : factors) o *= d;
    return o;
  }
  int order() const { return int(order_long()); }
  int rank() const { return int(factors.size()); }
  int identity() const { return 0; }

  std::vector<int> tuple_of(int index) const {
    std::vector<int> t(factors.size());
    for (int i = rank() - 1; i >= 0; --i) {
      t[i] = index % factors[i];
      index /= factors[i];
    }
    return t;
  }

  int index_of(const std::vector<int>& t) const {
    if (int(t.size()) != rank())
      throw InputError("abelian group: tuple has wrong length");
    int idx = 0;
    for (int i = 0; i < rank(); ++i) {
      int a = t[i] % factors[i];
      if (a < 0) a += factors[i];
      idx = idx * factors[i] + a;
    }
    return idx;
  }

  int add(int x, int y) const {
    auto a = tuple_of(x), b = tuple_of(y);
    for (int i = 0; i < rank(); ++i) a[i] = (a[i] + b[i]) % factors[i];
    return index_of(a);
  }

  int neg(int x) const {
    auto a = tuple_of(x);
    for (int i = 0; i < rank(); ++i) a[i] = (factors[i] - a[i]) % factors[i];
    return index_of(a);
  }

  int element_order(int x) const {
    auto a = tuple_of(x);
    long long o = 1;
    for (int i = 0; i < rank(); ++i) {
      int d = factors[i] / std::gcd(a[i], factors[i]);
      o = std::lcm(o, (long long)d);
    }
    return int(o);
  }

  std::string label(int x) const { return vec_to_string(tuple_of(x)); }

  // Subgroup generated by a set of element indices, as a sorted index set.
  std::vector<int> span(const std::vector<int>& gens) const {
    std::vector<char> in(order(), 0);
    std::vector<int> queue{identity()};
    in[identity()] = 1;
    for (int g : gens) {
      if (g < 0 || g >= order())
        throw InputError("abelian group: generator index out of range");
      if (!in[g]) {
        in[g] = 1;
        queue.push_back(g);
      }
    }
    for (size_t h = 0; h < queue.size(); ++h)
      for (size_t i = 0; i < queue.size(); ++i) {
        int s = add(queue[h], queue[i]);
        if (!in[s]) {
          in[s] = 1;
          queue.push_back(s);
        }
      }
    std::vector<int> out;
    for (int x = 0; x < order(); ++x)
      if (in[x]) out.push_back(x);
    return out;
  }

  GroupTable to_table() const {
    int n = order();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
      labels[a] = label(a);
      for (int b = 0; b < n; ++b) rows[a][b] = add(a, b);
    }
    return GroupTable::build(std::move(rows), std::move(labels));
  }

  friend bool operator==(const FiniteAbelianGroup& a,
                         const FiniteAbelianGroup& b) {
    return a.factors == b.factors;
  }
};

inline FiniteAbelianGroup trivial_abelian_group() {
  return FiniteAbelianGroup{};
}

// The dual group has the same invariant factors; characters are indexed the
// same way as elements.
inline FiniteAbelianGroup dual_group(const FiniteAbelianGroup& g) {
  FiniteAbelianGroup d;
  d.factors = g.factors;
  return d;
}

// Bimultiplicative pairing <chi, x> = exp(2*pi*i * sum ai*bi/di), exact.
inline UnitRoot pairing(const FiniteAbelianGroup& g, int chi, int x) {
  auto a = g.tuple_of(chi), b = g.tuple_of(x);
  UnitRoot r;
  for (int i = 0; i < g.rank(); ++i)
    r = r * UnitRoot((long long)a[i] * b[i], g.factors[i]);
  return r;
}

// One restriction/induction instance: an irreducible of the big group whose
// stabilizer index, restriction multiplicity r, and character-orbit index
// [X : X(Pi)] satisfy r^2 * [X : X(Pi)] = [G_pi : G^0].
struct CliffordInstance {
  FiniteAbelianGroup gamma;
  int stabilizer_index = 1;
  int multiplicity = 1;
  int x_mod_xpi = 1;

  CliffordInstance(FiniteAbelianGroup gamma_, int stab, int r, int x)
      : gamma(std::move(gamma_)),
        stabilizer_index(stab),
        multiplicity(r),
        x_mod_xpi(x) {
    if (stab <= 0 || r <= 0 || x <= 0)
      throw InputError("clifford instance: values must be positive");
    if (gamma.order() % stab != 0)
      throw InconsistentDatumError(
          "clifford instance: stabilizer index does not divide the component "
          "group order");
    if ((long long)r * r * x != stab)
      throw InconsistentDatumError(
          "clifford instance: r^2 * [X:X(Pi)] = " +
          std::to_string((long long)r * r * x) + " but [G_pi:G^0] = " +
          std::to_string(stab));
  }
};

// All factorizations r^2 * x = stabilizer_index with x dividing |Gamma|.
// When the index is squarefree only (1, index) survives.
inline std::vector<std::pair<int, int>> solve_multiplicity(
    const FiniteAbelianGroup& gamma, int stabilizer_index) {
  if (stabilizer_index <= 0 || gamma.order() % stabilizer_index != 0)
    throw InputError(
        "solve_multiplicity: stabilizer index must divide the component group "
        "order");
  std::vector<std::pair<int, int>> out;
  for (int r = 1; (long long)r * r <= stabilizer_index; ++r) {
    if (stabilizer_index % (r * r) != 0) continue;
    int x = stabilizer_index / (r * r);
    if (gamma.order() % x == 0) out.emplace_back(r, x);
  }
  return out;
}

struct RestrictionCensus {
  int orbit_size = 1;        // [Gamma : image of G_pi]
  int restriction_length = 1;  // r * orbit_size
  int induction_length = 1;    // r * [X : X(Pi)]
  int stabilizer_index = 1;
  int multiplicity = 1;
};

inline RestrictionCensus restriction_census(const CliffordInstance& inst,
                                            int orbit_size) {
  if (orbit_size <= 0)
    throw InputError("restriction_census: orbit size must be positive");
  if ((long long)orbit_size * inst.stabilizer_index != inst.gamma.order())
    throw InconsistentDatumError(
        "restriction_census: orbit size * stabilizer index = " +
        std::to_string((long long)orbit_size * inst.stabilizer_index) +
        " != component group order " + std::to_string(inst.gamma.order()));
  RestrictionCensus c;
  c.orbit_size = orbit_size;
  c.stabilizer_index = inst.stabilizer_index;
  c.multiplicity = inst.multiplicity;
  c.restriction_length = inst.multiplicity * orbit_size;
  c.induction_length = inst.multiplicity * inst.x_mod_xpi;
  return c;
}

struct TransferCheck {
  bool ok = false;
  int group_side = 0;
  int weyl_side = 0;
  std::string detail;
};

// [G_pi : G^0] must match the Weyl-side index [N_{G_pi}(sigma) : N_{G^0}(sigma)].
inline TransferCheck stabilizer_transfer_check(int g_pi_index,
                                               int n_gpi_index) {
  if (g_pi_index <= 0 || n_gpi_index <= 0)
    throw InputError("stabilizer_transfer_check: indices must be positive");
  TransferCheck t;
  t.group_side = g_pi_index;
  t.weyl_side = n_gpi_index;
  t.ok = g_pi_index == n_gpi_index;
  t.detail = t.ok ? "indices agree"
                  : "component-group index " + std::to_string(g_pi_index) +
                        " != normalizer index " + std::to_string(n_gpi_index);
  return t;
}

struct TwistOrbits {
  std::vector<std::vector<int>> orbits;  // sorted label indices per orbit
};

// Orbits of the component group acting on constituent labels; multiplicities
// must be constant along each orbit.
inline TwistOrbits twist_orbit_partition(
    const FiniteAbelianGroup& gamma, int label_count,
    const std::vector<std::vector<int>>& action,
    const std::vector<int>& multiplicities) {
  if (int(action.size()) != gamma.order())
    throw InputError("twist_orbit_partition: need one permutation per group "
                     "element");
  if (int(multiplicities.size()) != label_count)
    throw InputError("twist_orbit_partition: multiplicity list has wrong "
                     "length");
  auto check_perm = [&](const std::vector<int>& p) {
    if (int(p.size()) != label_count) return false;
    std::vector<char> seen(label_count, 0);
    for (int v : p) {
      if (v < 0 || v >= label_count || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  for (const auto& p : action)
    if (!check_perm(p))
      throw InputError("twist_orbit_partition: action entry is not a "
                       "permutation of the labels");
  for (int l = 0; l < label_count; ++l)
    if (action[gamma.identity()][l] != l)
      throw InputError("twist_orbit_partition: identity must act trivially");
  for (int g = 0; g < gamma.order(); ++g)
    for (int h = 0; h < gamma.order(); ++h) {
      int gh = gamma.add(g, h);
      for (int l = 0; l < label_count; ++l)
        if (action[gh][l] != action[g][action[h][l]])
          throw InputError(
              "twist_orbit_partition: action is not a group action (fails at "
              "g=" + gamma.label(g) + ", h=" + gamma.label(h) + ")");
    }
  std::vector<char> visited(label_count, 0);
  TwistOrbits out;
  for (int seed = 0; seed < label_count; ++seed) {
    if (visited[seed]) continue;
    std::vector<int> orbit;
    for (int g = 0; g < gamma.order(); ++g) {
      int l = action[g][seed];
      if (!visited[l]) {
        visited[l] = 1;
        orbit.push_back(l);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    for (int l : orbit)
      if (multiplicities[l] != multiplicities[orbit[0]])
        throw InconsistentDatumError(
            "twist_orbit_partition: multiplicities differ within the orbit of "
            "label " + std::to_string(orbit[0]));
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace weylext

#endif  // WEYLEXT_CLIFFORD_HPP_
