// 2-cocycles on finite groups, the central extensions they define, character
// tables (exact for abelian groups, class-sum diagonalization otherwise),
// and the parameterization of induced-representation constituents by
// irreducibles with a fixed central character.

#ifndef WEYLEXT_EXTENSION_HPP_
#define WEYLEXT_EXTENSION_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylext/base.hpp"
#include "weylext/group.hpp"
#include "weylext/rgroup.hpp"

namespace weylext {

constexpr double kOrthogonalityTol = 1e-8;
constexpr double kDegreeTol = 1e-6;

// Normalized 2-cocycle with values in Z/modulus, stored as exponents:
// the complex value of eta(a,b) is exp(2*pi*i * at(a,b)/modulus).
struct Cocycle {
  const GroupTable* base = nullptr;
  int modulus = 1;
  std::vector<int> values;  // n*n exponents, reduced mod modulus

  int at(int a, int b) const {
    return values[size_t(a) * base->order() + b];
  }

  static Cocycle trivial(const GroupTable& g, int modulus = 1) {
    if (modulus < 1) throw InputError("cocycle: modulus must be >= 1");
    Cocycle c;
    c.base = &g;
    c.modulus = modulus;
    c.values.assign(size_t(g.order()) * g.order(), 0);
    return c;
  }

  static Cocycle from_values(const GroupTable& g, int modulus,
                             std::vector<int> values) {
    if (modulus < 1) throw InputError("cocycle: modulus must be >= 1");
    if (values.size() != size_t(g.order()) * g.order())
      throw InputError("cocycle: value table has the wrong size");
    Cocycle c;
    c.base = &g;
    c.modulus = modulus;
    for (int& v : values) {
      v %= modulus;
      if (v < 0) v += modulus;
    }
    c.values = std::move(values);
    return c;
  }

  // eta(a,b) = f(a) + f(b) - f(ab); requires f(identity) = 0 so the result
  // is normalized.
  static Cocycle coboundary(const GroupTable& g, int modulus,
                            const std::vector<int>& f) {
    if (int(f.size()) != g.order())
      throw InputError("coboundary: function has the wrong length");
    if (f[g.identity] % modulus != 0)
      throw InputError("coboundary: function must vanish at the identity");
    std::vector<int> vals(size_t(g.order()) * g.order());
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        vals[size_t(a) * g.order() + b] = f[a] + f[b] - f[g.mult(a, b)];
    return from_values(g, modulus, std::move(vals));
  }
};

struct CocycleCheck {
  bool ok = true;
  int a = -1, b = -1, c = -1;  // first violating triple, when !ok
  std::string detail = "ok";
};

// Exhaustive check of normalization and the cocycle identity
//   eta(ab,c) + eta(a,b) == eta(a,bc) + eta(b,c)  (mod modulus).
inline CocycleCheck verify_cocycle(const Cocycle& c) {
  const GroupTable& g = *c.base;
  int n = g.order();
  for (int w = 0; w < n; ++w) {
    if (c.at(g.identity, w) != 0 || c.at(w, g.identity) != 0)
      return {false, g.identity, w, -1, "normalization fails"};
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.mult(a, b);
      for (int d = 0; d < n; ++d) {
        int lhs = c.at(ab, d) + c.at(a, b);
        int rhs = c.at(a, g.mult(b, d)) + c.at(b, d);
        if ((lhs - rhs) % c.modulus != 0)
          return {false, a, b, d, "cocycle identity fails"};
      }
    }
  return {};
}

// The tautological central extension 1 -> Z/n -> total -> base -> 1 built
// from a cocycle: (z1,r1)(z2,r2) = (z1+z2+eta(r1,r2), r1 r2), elements
// indexed z*|base|+r.
struct CentralExtension {
  GroupTable total;
  const GroupTable* base = nullptr;
  int modulus = 1;
  std::vector<int> projection;    // total index -> base index
  std::vector<int> center_fiber;  // indices of (z, identity), z = 0..n-1

  int pair_index(int z, int r) const { return z * base->order() + r; }
};

inline CentralExtension build_extension(const Cocycle& c) {
  CocycleCheck chk = verify_cocycle(c);
  if (!chk.ok)
    throw InputError("build_extension: not a normalized cocycle (" +
                     chk.detail + " at (" + std::to_string(chk.a) + "," +
                     std::to_string(chk.b) + "," + std::to_string(chk.c) +
                     "))");
  const GroupTable& g = *c.base;
  int n = c.modulus, m = g.order();
  long long total = (long long)n * m;
  if (total > kExhaustiveCap)
    throw ResourceError("build_extension: extension order " +
                        std::to_string(total) + " exceeds cap");
  CentralExtension ext;
  ext.base = c.base;
  ext.modulus = n;
  auto idx = [m](int z, int r) { return z * m + r; };
  std::vector<std::vector<int>> rows(total, std::vector<int>(total));
  std::vector<std::string> labels(total);
  for (int z1 = 0; z1 < n; ++z1)
    for (int r1 = 0; r1 < m; ++r1) {
      labels[idx(z1, r1)] =
          (z1 ? "z^" + std::to_string(z1) + " " : std::string()) + g.label(r1);
      for (int z2 = 0; z2 < n; ++z2)
        for (int r2 = 0; r2 < m; ++r2)
          rows[idx(z1, r1)][idx(z2, r2)] =
              idx((z1 + z2 + c.at(r1, r2)) % n, g.mult(r1, r2));
    }
  ext.total = GroupTable::build(std::move(rows), std::move(labels));
  ext.projection.resize(total);
  for (int z = 0; z < n; ++z)
    for (int r = 0; r < m; ++r) ext.projection[idx(z, r)] = r;
  for (int z = 0; z < n; ++z) ext.center_fiber.push_back(idx(z, g.identity));
  // the fiber must be central and be exactly the kernel of the projection
  for (int zi : ext.center_fiber)
    for (int x = 0; x < int(total); ++x)
      if (ext.total.mult(zi, x) != ext.total.mult(x, zi))
        throw TheoremViolationError(
            "build_extension: fiber element is not central");
  for (int x = 0; x < int(total); ++x)
    for (int y = 0; y < int(total); ++y)
      if (ext.projection[ext.total.mult(x, y)] !=
          g.mult(ext.projection[x], ext.projection[y]))
        throw TheoremViolationError(
            "build_extension: projection is not a homomorphism");
  return ext;
}

struct CharacterTable {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_sizes;
  std::vector<int> representatives;
  int identity_class = 0;
  std::vector<int> degrees;
  // values[irrep][class]
  std::vector<std::vector<std::complex<double>>> values;
  // exact exponents (abelian groups only): exponent of the root of unity
  std::vector<std::vector<UnitRoot>> exact;
  bool exact_values = false;
  double orthogonality_residual = 0.0;
  double degree_residual = 0.0;
};

namespace detail {

// Exact character table of an abelian group: build a chain of cyclic steps
// <H, g> and extend characters level by level with exact root-of-unity
// exponents.
inline CharacterTable abelian_character_table(const GroupTable& g) {
  int n = g.order();
  std::vector<char> in_h(n, 0);
  in_h[g.identity] = 1;
  std::vector<int> h_elems{g.identity};
  // each character is a full value vector over the current subgroup
  std::vector<std::vector<UnitRoot>> chars{
      std::vector<UnitRoot>(n)};  // values stored per group index
  while (int(h_elems.size()) < n) {
    int gen = -1;
    for (int x = 0; x < n; ++x)
      if (!in_h[x]) {
        gen = x;
        break;
      }
    // cyclic step length: least a > 0 with gen^a in H
    int step = 1, p = gen;
    while (!in_h[p]) {
      p = g.mult(p, gen);
      ++step;
    }
    int power_in_h = p;  // gen^step
    std::vector<std::vector<UnitRoot>> next;
    next.reserve(chars.size() * step);
    for (const auto& chi : chars) {
      UnitRoot w = chi[power_in_h];
      for (int t = 0; t < step; ++t) {
        // zeta^step = w, the t-th solution
        UnitRoot zeta(w.num + (long long)t * w.den, w.den * (long long)step);
        std::vector<UnitRoot> ext(chi);
        int ga = g.identity;
        for (int a = 1; a < step; ++a) {
          ga = g.mult(ga, gen);
          for (int h : h_elems) ext[g.mult(ga, h)] = zeta.pow(a) * chi[h];
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    int ga = g.identity;
    for (int a = 1; a < step; ++a) {
      ga = g.mult(ga, gen);
      for (int i = int(h_elems.size()) - 1; i >= 0; --i) {
        int y = g.mult(ga, h_elems[i]);
        if (!in_h[y]) {
          in_h[y] = 1;
          h_elems.push_back(y);
        }
      }
    }
  }
  // canonical order: lexicographic on exponent vectors over element index
  std::sort(chars.begin(), chars.end(),
            [](const std::vector<UnitRoot>& a, const std::vector<UnitRoot>& b) {
              for (size_t i = 0; i < a.size(); ++i) {
                long long l = a[i].num * b[i].den, r = b[i].num * a[i].den;
                if (l != r) return l < r;
              }
              return false;
            });
  CharacterTable t;
  for (int x = 0; x < n; ++x) {
    t.classes.push_back({x});
    t.class_sizes.push_back(1);
    t.representatives.push_back(x);
    if (x == g.identity) t.identity_class = x;
  }
  t.exact_values = true;
  for (const auto& chi : chars) {
    std::vector<std::complex<double>> row(n);
    std::vector<UnitRoot> exact_row(n);
    for (int x = 0; x < n; ++x) {
      exact_row[x] = chi[x];
      row[x] = chi[x].value();
    }
    t.values.push_back(std::move(row));
    t.exact.push_back(std::move(exact_row));
    t.degrees.push_back(1);
  }
  return t;
}

inline CharacterTable class_sum_character_table(const GroupTable& g) {
  using Eigen::MatrixXcd;
  int n = g.order();
  auto classes = conjugacy_classes(g);
  int m = int(classes.size());
  std::vector<int> class_of(n);
  for (int k = 0; k < m; ++k)
    for (int x : classes[k]) class_of[x] = k;

  // class-algebra multiplication matrices L_i with (L_i)[k][j] = a_{ijk}
  std::vector<MatrixXcd> L(m, MatrixXcd::Zero(m, m));
  for (int i = 0; i < m; ++i) {
    std::vector<std::vector<long long>> count(m,
                                              std::vector<long long>(m, 0));
    for (int x : classes[i])
      for (int j = 0; j < m; ++j)
        for (int y : classes[j]) ++count[j][class_of[g.mult(x, y)]];
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        L[i](k, j) =
            double(count[j][k] / (long long)classes[k].size());
  }

  // split the space into common eigenvectors, one class matrix at a time
  std::vector<MatrixXcd> spaces{MatrixXcd::Identity(m, m)};
  for (int i = 0; i < m; ++i) {
    std::vector<MatrixXcd> next;
    for (const MatrixXcd& S : spaces) {
      if (S.cols() == 1) {
        next.push_back(S);
        continue;
      }
      MatrixXcd B = S.adjoint() * (L[i] * S);
      Eigen::ComplexEigenSolver<MatrixXcd> es(B);
      if (es.info() != Eigen::Success)
        throw ComputationError(
            "character table: eigensolver failed; for abelian inputs the "
            "exact construction applies");
      auto lam = es.eigenvalues();
      auto vec = es.eigenvectors();
      int d = int(B.rows());
      std::vector<int> ordering(d);
      for (int t = 0; t < d; ++t) ordering[t] = t;
      std::sort(ordering.begin(), ordering.end(), [&](int a, int b) {
        if (lam(a).real() != lam(b).real())
          return lam(a).real() < lam(b).real();
        return lam(a).imag() < lam(b).imag();
      });
      double cluster_tol = 1e-7 * (1.0 + lam.cwiseAbs().maxCoeff());
      std::vector<std::vector<int>> clusters;
      for (int t : ordering) {
        if (!clusters.empty() &&
            std::abs(lam(t) - lam(clusters.back().back())) < cluster_tol)
          clusters.back().push_back(t);
        else
          clusters.push_back({t});
      }
      for (const auto& cl : clusters) {
        MatrixXcd V(d, int(cl.size()));
        for (size_t c = 0; c < cl.size(); ++c) V.col(int(c)) = vec.col(cl[c]);
        MatrixXcd W = S * V;
        Eigen::HouseholderQR<MatrixXcd> qr(W);
        MatrixXcd Q = qr.householderQ() *
                      MatrixXcd::Identity(m, int(cl.size()));
        next.push_back(Q);
      }
    }
    spaces = std::move(next);
  }
  for (const MatrixXcd& S : spaces)
    if (S.cols() != 1)
      throw ComputationError(
          "character table: eigenvalue clustering left an unresolved block; "
          "for abelian inputs the exact construction applies");
  if (int(spaces.size()) != m)
    throw ComputationError("character table: wrong number of eigenvectors");

  CharacterTable t;
  t.classes = classes;
  for (int k = 0; k < m; ++k) {
    t.class_sizes.push_back(int(classes[k].size()));
    t.representatives.push_back(classes[k][0]);
    if (class_of[g.identity] == k) t.identity_class = k;
  }
  for (const MatrixXcd& S : spaces) {
    Eigen::VectorXcd v = S.col(0);
    std::vector<std::complex<double>> omega(m);
    for (int i = 0; i < m; ++i)
      omega[i] = (v.adjoint() * (L[i] * v))(0, 0);
    double inv_d2 = 0;
    for (int i = 0; i < m; ++i)
      inv_d2 += std::norm(omega[i]) / double(classes[i].size());
    double d = std::sqrt(double(n) / inv_d2);
    int deg = int(std::lround(d));
    t.degree_residual = std::max(t.degree_residual, std::abs(d - deg));
    if (deg < 1 || std::abs(d - deg) > kDegreeTol)
      throw ComputationError(
          "character table: non-integral degree " + std::to_string(d) +
          "; for abelian inputs the exact construction applies");
    std::vector<std::complex<double>> chi(m);
    for (int i = 0; i < m; ++i) {
      chi[i] = d * omega[i] / double(classes[i].size());
      if (std::abs(chi[i].real()) < 1e-9) chi[i].real(0.0);
      if (std::abs(chi[i].imag()) < 1e-9) chi[i].imag(0.0);
    }
    t.degrees.push_back(deg);
    t.values.push_back(std::move(chi));
  }
  // canonical order: degree, then value vectors rounded to 1e-6
  std::vector<int> order_idx(t.values.size());
  for (size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = int(i);
  auto key = [&](int i) {
    std::vector<long long> k{t.degrees[i]};
    for (const auto& z : t.values[i]) {
      k.push_back((long long)std::llround(z.real() * 1e6));
      k.push_back((long long)std::llround(z.imag() * 1e6));
    }
    return k;
  };
  std::sort(order_idx.begin(), order_idx.end(),
            [&](int a, int b) { return key(a) < key(b); });
  CharacterTable sorted = t;
  sorted.degrees.clear();
  sorted.values.clear();
  for (int i : order_idx) {
    sorted.degrees.push_back(t.degrees[i]);
    sorted.values.push_back(t.values[i]);
  }
  return sorted;
}

inline void validate_character_table(const GroupTable& g, CharacterTable& t) {
  int n = g.order();
  int m = int(t.classes.size());
  if (int(t.values.size()) != m)
    throw ComputationError("character table: class/irrep count mismatch");
  long long deg2 = 0;
  for (int d : t.degrees) deg2 += (long long)d * d;
  if (deg2 != n)
    throw ComputationError(
        "character table: sum of squared degrees is " + std::to_string(deg2) +
        ", expected " + std::to_string(n));
  double worst = 0;
  for (int r = 0; r < m; ++r)
    for (int s = r; s < m; ++s) {
      std::complex<double> acc(0, 0);
      for (int i = 0; i < m; ++i)
        acc += double(t.class_sizes[i]) * t.values[r][i] *
               std::conj(t.values[s][i]);
      acc /= double(n);
      double target = (r == s) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(acc - std::complex<double>(target, 0)));
    }
  t.orthogonality_residual = worst;
  if (worst > kOrthogonalityTol)
    throw ComputationError(
        "character table: row orthogonality residual " +
        std::to_string(worst) + " exceeds tolerance");
}

}  // namespace detail

inline CharacterTable character_table(const GroupTable& g) {
  if (g.order() > kExhaustiveCap)
    throw ResourceError("character table: order exceeds cap " +
                        std::to_string(kExhaustiveCap));
  CharacterTable t = is_abelian(g) ? detail::abelian_character_table(g)
                                   : detail::class_sum_character_table(g);
  detail::validate_character_table(g, t);
  return t;
}

// Central character of irrep r on the fiber generator (1, identity), as an
// exponent detector: returns the t with chi(z) = exp(2*pi*i*t*z/n), or -1
// if the value is not close to a root of unity of that order.
inline int central_character_exponent(const CentralExtension& ext,
                                      const CharacterTable& t, int irrep) {
  if (ext.modulus == 1) return 0;
  int zg = ext.center_fiber[1];  // (1, identity)
  int cls = -1;
  for (int k = 0; k < int(t.classes.size()); ++k)
    if (std::count(t.classes[k].begin(), t.classes[k].end(), zg)) {
      cls = k;
      break;
    }
  std::complex<double> w =
      t.values[irrep][cls] / double(t.degrees[irrep]);
  for (int e = 0; e < ext.modulus; ++e)
    if (std::abs(w - UnitRoot(e, ext.modulus).value()) < 1e-6) return e;
  return -1;
}

// Irreducibles of the extension whose fiber acts by z -> exp(2*pi*i*chi*z/n).
inline std::vector<int> irreps_with_central_character(
    const CentralExtension& ext, const CharacterTable& t, int chi_exponent) {
  if (chi_exponent < 0 || chi_exponent >= ext.modulus)
    throw InputError("central character exponent out of range");
  std::vector<int> out;
  for (int i = 0; i < int(t.values.size()); ++i)
    if (central_character_exponent(ext, t, i) == chi_exponent)
      out.push_back(i);
  return out;
}

struct Constituent {
  std::string id;
  int degree = 1;
  int multiplicity = 1;
};

// One constituent per irreducible of the extension with the requested
// central character; multiplicity equals degree, and the squared degrees
// must sum to the commuting-algebra dimension.
inline std::vector<Constituent> parameterize_components(const SigmaDatum& d,
                                                        const Cocycle& c,
                                                        int chi_exponent) {
  EwSubgroup r = r_group(d);
  GroupTable rt = ew_subgroup_table(r);
  if (c.base == nullptr || c.base->order() != rt.order() ||
      c.base->mult_ != rt.mult_)
    throw InputError(
        "parameterize_components: the cocycle must live on the R-group table "
        "(canonical element order)");
  Cocycle cc = Cocycle::from_values(rt, c.modulus, c.values);
  CentralExtension ext = build_extension(cc);
  CharacterTable t = character_table(ext.total);
  std::vector<int> block = irreps_with_central_character(ext, t, chi_exponent);
  std::vector<Constituent> out;
  long long deg2 = 0;
  for (size_t i = 0; i < block.size(); ++i) {
    Constituent cst;
    cst.id = "rho" + std::to_string(i + 1);
    cst.degree = t.degrees[block[i]];
    cst.multiplicity = cst.degree;
    deg2 += (long long)cst.degree * cst.degree;
    out.push_back(std::move(cst));
  }
  int dim = dim_commuting_algebra(d).dimension;
  if (deg2 != dim)
    throw TheoremViolationError(
        "parameterize_components: sum of squared degrees " +
        std::to_string(deg2) + " does not equal dim C(sigma) = " +
        std::to_string(dim) +
        " (central character incompatible with the cocycle class?)");
  return out;
}

struct CoboundaryReport {
  bool is_coboundary = false;
  std::vector<int> splitting;  // f with eta = df, when found
};

// Exhaustive search over normalized functions f : base -> Z/n. The guard
// n^|base| <= 2^24 keeps the search explicit rather than silent.
inline CoboundaryReport is_coboundary(const Cocycle& c) {
  const GroupTable& g = *c.base;
  int n = c.modulus, m = g.order();
  double space = std::pow(double(n), double(m));
  if (space > double(1 << 24))
    throw ResourceError(
        "is_coboundary: search space n^|G| exceeds 2^24; undecided");
  CocycleCheck chk = verify_cocycle(c);
  if (!chk.ok) throw InputError("is_coboundary: input is not a cocycle");
  std::vector<int> f(m, 0);
  // odometer over all f with f(identity) = 0
  std::vector<int> free_slots;
  for (int x = 0; x < m; ++x)
    if (x != g.identity) free_slots.push_back(x);
  while (true) {
    bool match = true;
    for (int a = 0; a < m && match; ++a)
      for (int b = 0; b < m && match; ++b) {
        int want = (f[a] + f[b] - f[g.mult(a, b)]) % n;
        if (want < 0) want += n;
        if (want != c.at(a, b)) match = false;
      }
    if (match) return {true, f};
    int pos = 0;
    while (pos < int(free_slots.size())) {
      int& slot = f[free_slots[pos]];
      if (++slot < n) break;
      slot = 0;
      ++pos;
    }
    if (pos == int(free_slots.size())) break;
  }
  return {false, {}};
}

// Degrees per central-character exponent; the blocks partition the full
// character table of the extension.
inline std::map<int, std::vector<int>> block_degree_multisets(
    const CentralExtension& ext, const CharacterTable& t) {
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < int(t.values.size()); ++i) {
    int e = central_character_exponent(ext, t, i);
    if (e < 0)
      throw ComputationError(
          "block_degree_multisets: fiber eigenvalue is not a root of unity");
    blocks[e].push_back(t.degrees[i]);
  }
  for (auto& [e, v] : blocks) std::sort(v.begin(), v.end());
  return blocks;
}

}  // namespace weylext

#endif  // WEYLEXT_EXTENSION_HPP_
