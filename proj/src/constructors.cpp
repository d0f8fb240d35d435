#include "nacent/constructors.hpp"

#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "nacent/errors.hpp"
#include "nacent/finite_field.hpp"

namespace nacent {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Left-regular action of a group given by an index multiplication rule.
Permutation regular_action(std::size_t order, Index s, const std::function<Index(Index, Index)>& mul) {
  std::vector<Point> im(order);
  for (Index g = 0; g < order; ++g) im[g] = static_cast<Point>(mul(s, g));
  return Permutation(std::move(im));
}

}  // namespace

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1); }

std::uint64_t su3_order(std::uint64_t q) { return q * q * q * (q * q - 1) * (q * q * q + 1); }

PermGroup standard_family(Family kind, std::int64_t n, std::size_t cap) {
  require(n >= 1, "family parameter must be at least 1");
  require(n <= 4096, "family parameter too large");
  const auto deg = static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  switch (kind) {
    case Family::Cyclic: {
      std::vector<Point> im(deg);
      for (std::size_t i = 0; i < deg; ++i) im[i] = static_cast<Point>((i + 1) % deg);
      gens.emplace_back(std::move(im));
      if (deg > cap) throw CapExceeded("cyclic group too large", cap, deg);
      return PermGroup::close(deg, std::move(gens), cap);
    }
    case Family::Dihedral: {
      if (n == 1) return PermGroup::close(2, {Permutation::from_cycles(2, {{0, 1}})}, cap);
      if (n == 2)
        return PermGroup::close(
            4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})}, cap);
      if (2 * deg > cap) throw CapExceeded("dihedral group too large", cap, 2 * deg);
      std::vector<Point> rot(deg), refl(deg);
      for (std::size_t i = 0; i < deg; ++i) {
        rot[i] = static_cast<Point>((i + 1) % deg);
        refl[i] = static_cast<Point>((deg - i) % deg);
      }
      gens.emplace_back(std::move(rot));
      gens.emplace_back(std::move(refl));
      return PermGroup::close(deg, std::move(gens), cap);
    }
    case Family::Symmetric: {
      if (deg >= 2) gens.push_back(Permutation::from_cycles(deg, {{0, 1}}));
      if (deg >= 3) {
        std::vector<Point> im(deg);
        for (std::size_t i = 0; i < deg; ++i) im[i] = static_cast<Point>((i + 1) % deg);
        gens.emplace_back(std::move(im));
      }
      return PermGroup::close(deg, std::move(gens), cap);
    }
    case Family::Alternating: {
      require(n >= 3, "alternating group needs n >= 3");
      for (std::size_t i = 0; i + 2 < deg; ++i) {
        std::vector<Point> im(deg);
        std::iota(im.begin(), im.end(), Point{0});
        im[i] = static_cast<Point>(i + 1);
        im[i + 1] = static_cast<Point>(i + 2);
        im[i + 2] = static_cast<Point>(i);
        gens.emplace_back(std::move(im));
      }
      return PermGroup::close(deg, std::move(gens), cap);
    }
  }
  throw std::logic_error("unknown family");
}

PermGroup psl2(std::int64_t q, std::size_t cap) {
  require(q >= 2 && q <= 81, "PSL(2, q) needs 2 <= q <= 81");
  const auto pp = as_prime_power(static_cast<std::uint64_t>(q));
  require(pp.prime != 0, "PSL(2, q) needs q to be a prime power");
  const std::uint64_t order = psl2_order(static_cast<std::uint64_t>(q));
  if (order > cap) throw CapExceeded("PSL(2, q) too large", cap, order);

  const Field field(static_cast<std::uint32_t>(pp.prime), pp.exponent);
  const FieldTable f(field);
  const auto nq = static_cast<std::uint32_t>(q);
  const std::uint32_t inf = nq;

  // z -> (a z + b) / (c z + d) on GF(q) and infinity.
  auto mobius = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    std::vector<Point> im(nq + 1);
    im[inf] = static_cast<Point>(c == 0 ? inf : f.mul(a, f.inv(c)));
    for (std::uint32_t z = 0; z < nq; ++z) {
      const std::uint32_t den = f.add(f.mul(c, z), d);
      const std::uint32_t num = f.add(f.mul(a, z), b);
      im[z] = static_cast<Point>(den == 0 ? inf : f.mul(num, f.inv(den)));
    }
    return Permutation(std::move(im));
  };

  // Elementary transvections with entries running over the power basis
  // 1, x, ..., x^(m-1); over a prime field these are just the two with entry 1.
  std::vector<Permutation> gens;
  std::uint32_t basis = 1;
  for (std::uint32_t i = 0; i < pp.exponent; ++i, basis *= static_cast<std::uint32_t>(pp.prime)) {
    gens.push_back(mobius(1, basis, 0, 1));
    gens.push_back(mobius(1, 0, basis, 1));
  }
  PermGroup g = PermGroup::close(nq + 1, std::move(gens), cap);
  if (g.order() != order) throw std::logic_error("PSL(2, q) closure has the wrong order");
  return g;
}

PermGroup psu3(std::int64_t q, UnitaryConstruction* info, std::size_t cap) {
  require(q >= 2 && is_prime(static_cast<std::uint64_t>(q)), "PSU(3, q) needs q prime");
  require(q <= 31, "PSU(3, q) needs q <= 31");
  const std::uint64_t target = su3_order(static_cast<std::uint64_t>(q));
  if (target > cap) throw CapExceeded("SU(3, q) too large", cap, target);

  const Field field(static_cast<std::uint32_t>(q), 2);
  const FieldTable f(field);
  const std::uint32_t Q = f.size();

  using Vec = std::array<std::uint32_t, 3>;
  auto herm = [&](const Vec& u, const Vec& v) {
    return f.add(f.add(f.mul(u[0], f.conj(v[2])), f.mul(u[1], f.conj(v[1]))), f.mul(u[2], f.conj(v[0])));
  };
  auto vec_code = [&](const Vec& v) { return (v[0] * Q + v[1]) * Q + v[2]; };

  // Projective points normalised so the first nonzero coordinate is 1.
  std::vector<Vec> points;
  std::unordered_map<std::uint32_t, Point> point_index;
  std::size_t projective = 0;
  for (std::uint32_t c = 1; c < Q * Q * Q; ++c) {
    const Vec v{c / (Q * Q), (c / Q) % Q, c % Q};
    const std::uint32_t lead = v[0] ? v[0] : v[1] ? v[1] : v[2];
    if (lead != 1) continue;
    ++projective;
    if (herm(v, v) == 0) {
      point_index[vec_code(v)] = static_cast<Point>(points.size());
      points.push_back(v);
    }
  }

  using Mat = std::array<std::uint32_t, 9>;
  auto mat_mul = [&](const Mat& a, const Mat& b) {
    Mat r{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::uint32_t s = 0;
        for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i * 3 + k], b[k * 3 + j]));
        r[i * 3 + j] = s;
      }
    return r;
  };
  auto det = [&](const Mat& m) {
    auto t = [&](int a, int b, int c) { return f.mul(f.mul(m[a], m[b]), m[c]); };
    std::uint32_t plus = f.add(f.add(t(0, 4, 8), t(1, 5, 6)), t(2, 3, 7));
    std::uint32_t minus = f.add(f.add(t(2, 4, 6), t(0, 5, 7)), t(1, 3, 8));
    return f.sub(plus, minus);
  };
  // Column form of invariance: h(M e_i, M e_j) = h(e_i, e_j).
  auto preserves_form = [&](const Mat& m) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Vec ci{m[i], m[3 + i], m[6 + i]}, cj{m[j], m[3 + j], m[6 + j]};
        if (herm(ci, cj) != (i + j == 2 ? 1u : 0u)) return false;
      }
    return true;
  };
  auto encode = [&](const Mat& m) {
    std::uint64_t k = 0;
    for (auto e : m) k = k * Q + e;
    return k;
  };

  const Mat ident{1, 0, 0, 0, 1, 0, 0, 0, 1};
  std::vector<Mat> gens;
  std::unordered_set<std::uint64_t> group{encode(ident)};
  std::vector<Mat> elements{ident};
  std::size_t scanned = 0;

  auto reclose = [&]() {
    group.clear();
    elements.assign(1, ident);
    group.insert(encode(ident));
    for (std::size_t head = 0; head < elements.size(); ++head)
      for (const auto& s : gens) {
        const Mat y = mat_mul(s, elements[head]);
        if (group.insert(encode(y)).second) elements.push_back(y);
      }
  };

  // The rows of a matrix preserving the form satisfy h(r_i, r_j) = J_ij as
  // well, which lets the lexicographic scan prune row by row.
  const std::uint32_t nvec = Q * Q * Q;
  auto row = [&](std::uint32_t c) { return Vec{c / (Q * Q), (c / Q) % Q, c % Q}; };
  bool done = false;
  for (std::uint32_t a = 0; a < nvec && !done; ++a) {
    const Vec r0 = row(a);
    if (herm(r0, r0) != 0 || a == 0) continue;
    for (std::uint32_t b = 0; b < nvec && !done; ++b) {
      const Vec r1 = row(b);
      if (herm(r1, r1) != 1 || herm(r0, r1) != 0) continue;
      for (std::uint32_t c = 0; c < nvec && !done; ++c) {
        const Vec r2 = row(c);
        if (herm(r2, r2) != 0 || herm(r0, r2) != 1 || herm(r1, r2) != 0) continue;
        const Mat m{r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]};
        ++scanned;
        if (det(m) != 1 || !preserves_form(m)) continue;
        if (group.count(encode(m))) continue;
        gens.push_back(m);
        reclose();
        if (elements.size() == target) done = true;
      }
    }
  }
  if (!done) throw std::runtime_error("special unitary scan did not reach |SU(3, q)|");

  auto act = [&](const Mat& m) {
    std::vector<Point> im(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Vec& v = points[i];
      Vec w{};
      for (int r = 0; r < 3; ++r)
        w[r] = f.add(f.add(f.mul(m[r * 3], v[0]), f.mul(m[r * 3 + 1], v[1])), f.mul(m[r * 3 + 2], v[2]));
      const std::uint32_t lead = w[0] ? w[0] : w[1] ? w[1] : w[2];
      const std::uint32_t s = f.inv(lead);
      for (auto& x : w) x = f.mul(x, s);
      im[i] = point_index.at(vec_code(w));
    }
    return Permutation(std::move(im));
  };

  std::size_t kernel = 0;
  for (const auto& m : elements)
    if (act(m).is_identity()) ++kernel;

  std::vector<Permutation> pgens;
  for (const auto& m : gens) pgens.push_back(act(m));
  PermGroup g = PermGroup::close(points.size(), std::move(pgens), cap);
  if (g.order() * kernel != target) throw std::logic_error("PSU(3, q) permutation image has the wrong order");

  if (info) {
    info->isotropic_points = points.size();
    info->projective_points = projective;
    info->matrix_group_order = elements.size();
    info->generators_used = gens.size();
    info->candidates_scanned = scanned;
    info->kernel_size = kernel;
  }
  return g;
}

PermGroup heisenberg(std::int64_t p, std::size_t cap) {
  require(p >= 3 && p <= 7 && is_prime(static_cast<std::uint64_t>(p)), "Heisenberg group needs an odd prime p <= 7");
  const auto P = static_cast<Index>(p);
  const std::size_t order = std::size_t{P} * P * P;
  if (order > cap) throw CapExceeded("Heisenberg group too large", cap, order);
  // (a, b, c) <-> [[1, a, c], [0, 1, b], [0, 0, 1]], index (a * p + b) * p + c.
  auto mul = [P](Index x, Index y) {
    const Index a = x / (P * P), b = (x / P) % P, c = x % P;
    const Index a2 = y / (P * P), b2 = (y / P) % P, c2 = y % P;
    return (((a + a2) % P) * P + (b + b2) % P) * P + (c + c2 + a * b2) % P;
  };
  std::vector<Permutation> gens{regular_action(order, P * P, mul), regular_action(order, P, mul)};
  return PermGroup::close(order, std::move(gens), cap);
}

PermGroup dicyclic(std::int64_t n, std::size_t cap) {
  require(n >= 1 && n <= 4096, "dicyclic group needs 1 <= n <= 4096");
  const auto N = static_cast<Index>(n);
  const std::size_t order = 4 * std::size_t{N};
  if (order > cap) throw CapExceeded("dicyclic group too large", cap, order);
  // a^k x^j <-> k + 2n j, with x^2 = a^n and x a x^-1 = a^-1.
  const Index m = 2 * N;
  auto mul = [N, m](Index u, Index v) {
    const Index k = u % m, j = u / m, l = v % m, t = v / m;
    if (j == 0) return (k + l) % m + m * t;
    if (t == 0) return (k + m - l) % m + m;
    return (k + m - l + N) % m;
  };
  std::vector<Permutation> gens{regular_action(order, 1, mul), regular_action(order, m, mul)};
  return PermGroup::close(order, std::move(gens), cap);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b, std::size_t cap) {
  const std::size_t order = a.order() * b.order();
  if (order > cap) throw CapExceeded("direct product too large", cap, order);
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = g[i];
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<Point>(da + i);
    gens.emplace_back(std::move(im));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<Point>(da + g[i]);
    gens.emplace_back(std::move(im));
  }
  return PermGroup::close(da + db, std::move(gens), cap);
}

PermGroup build(const GroupSpec& spec, std::size_t cap) {
  using K = GroupSpec::Kind;
  if (spec.kind == K::Product) {
    require(spec.operands.size() == 2, "product needs two operands");
    return direct_product(build(spec.operands[0], cap), build(spec.operands[1], cap), cap);
  }
  require(spec.params.size() == 1, "group constructor takes exactly one parameter");
  const std::int64_t n = spec.params[0];
  switch (spec.kind) {
    case K::Cyclic: return standard_family(Family::Cyclic, n, cap);
    case K::Dihedral: return standard_family(Family::Dihedral, n, cap);
    case K::Symmetric: return standard_family(Family::Symmetric, n, cap);
    case K::Alternating: return standard_family(Family::Alternating, n, cap);
    case K::PSL2: return psl2(n, cap);
    case K::PSU3: return psu3(n, nullptr, cap);
    case K::Heisenberg: return heisenberg(n, cap);
    case K::Dicyclic: return dicyclic(n, cap);
    case K::Product: break;
  }
  throw std::logic_error("unreachable group kind");
}

}  // namespace nacent
