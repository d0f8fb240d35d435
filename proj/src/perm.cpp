#include "nacent/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

#include "nacent/errors.hpp"
#include "nacent/table_group.hpp"

namespace nacent {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("images do not form a permutation");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > 65536) throw std::invalid_argument("permutation degree too large");
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> im = identity(degree).images_;
  for (const auto& cyc : cycles) {
    std::vector<Point> c(cyc);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw std::invalid_argument("cycle point out of range");
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<char> done(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !done[j]; j = images_[j]) {
      done[j] = 1;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> im(a.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = a[b[i]];
  return Permutation(std::move(im));
}

Permutation relabel(const Permutation& g, const Permutation& c) { return compose(compose(c, g), c.inverse()); }

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<Point>& v) const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(Point)));
  }
};

}  // namespace

PermGroup PermGroup::close(std::size_t degree, std::vector<Permutation> gens, std::size_t cap) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("close: generator degree mismatch");
  if (gens.empty()) gens.push_back(Permutation::identity(degree));

  std::unordered_set<std::vector<Point>, ImagesHash> seen;
  std::deque<std::vector<Point>> queue;
  auto id = Permutation::identity(degree);
  std::vector<Point> start(id.images().begin(), id.images().end());
  seen.insert(start);
  queue.push_back(std::move(start));
  std::vector<Point> next(degree);
  while (!queue.empty()) {
    const std::vector<Point> cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      for (std::size_t i = 0; i < degree; ++i) next[i] = s[cur[i]];
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("group closure exceeded the order cap", cap, seen.size());
        queue.push_back(next);
      }
    }
  }
  std::vector<Permutation> elems;
  elems.reserve(seen.size());
  for (const auto& v : seen) elems.emplace_back(v);
  std::sort(elems.begin(), elems.end());

  PermGroup g;
  g.degree_ = degree;
  g.finish(std::move(elems), std::move(gens));
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  for (const auto& e : elements)
    if (e.degree() != degree) throw std::invalid_argument("from_elements: degree mismatch");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw std::invalid_argument("from_elements: empty element set");

  PermGroup g;
  g.degree_ = degree;
  g.finish(std::move(elements), {});

  // Greedy generating set: adjoin the least element outside the current span.
  Bitset span(g.order_);
  span.set(g.identity_);
  std::vector<Index> gen_idx;
  for (Index i = 0; i < g.order_; ++i) {
    if (span.test(i)) continue;
    gen_idx.push_back(i);
    span = generate(g, gen_idx).bits();
  }
  for (auto i : gen_idx) g.generators_.push_back(g.element(i));
  if (g.generators_.empty()) g.generators_.push_back(Permutation::identity(degree));
  return g;
}

void PermGroup::finish(std::vector<Permutation> sorted, std::vector<Permutation> gens) {
  order_ = sorted.size();
  generators_ = std::move(gens);
  flat_.clear();
  flat_.reserve(order_ * degree_);
  for (const auto& p : sorted) flat_.insert(flat_.end(), p.images().begin(), p.images().end());

  const auto id = index_of(Permutation::identity(degree_));
  if (!id) throw std::invalid_argument("element set does not contain the identity");
  identity_ = *id;
  inverses_.resize(order_);
  for (Index i = 0; i < order_; ++i) {
    const auto inv = index_of(sorted[i].inverse());
    if (!inv) throw std::invalid_argument("element set is not closed under inversion");
    inverses_[i] = *inv;
  }
}

Permutation PermGroup::element(Index i) const {
  auto im = images(i);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

std::optional<Index> PermGroup::index_of(std::span<const Point> target) const {
  if (target.size() != degree_) return std::nullopt;
  std::size_t lo = 0, hi = order_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const Point* row = flat_.data() + mid * degree_;
    const auto cmp = std::lexicographical_compare_three_way(row, row + degree_, target.begin(), target.end());
    if (cmp < 0)
      lo = mid + 1;
    else if (cmp > 0)
      hi = mid;
    else
      return static_cast<Index>(mid);
  }
  return std::nullopt;
}

Index PermGroup::mul(Index i, Index j) const {
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  const Point* a = flat_.data() + std::size_t{i} * degree_;
  const Point* b = flat_.data() + std::size_t{j} * degree_;
  for (std::size_t x = 0; x < degree_; ++x) buf[x] = a[b[x]];
  const auto k = index_of(buf);
  if (!k) throw std::logic_error("product escaped the group");
  return *k;
}

bool PermGroup::commutes_unchecked(Index i, Index j) const {
  const Point* a = flat_.data() + std::size_t{i} * degree_;
  const Point* b = flat_.data() + std::size_t{j} * degree_;
  for (std::size_t x = 0; x < degree_; ++x)
    if (a[b[x]] != b[a[x]]) return false;
  return true;
}

bool PermGroup::commutes(Index i, Index j) const {
  if (i >= order_ || j >= order_) throw std::out_of_range("commutes: element index out of range");
  return commutes_unchecked(i, j);
}

std::vector<Index> PermGroup::generator_indices() const {
  std::vector<Index> out;
  for (const auto& g : generators_) out.push_back(*index_of(g));
  return out;
}

SubgroupMask::SubgroupMask(const PermGroup& parent, Bitset bits) : parent_(&parent), bits_(std::move(bits)) {
  if (bits_.size() != parent.order()) throw std::invalid_argument("mask length does not match parent order");
}

SubgroupMask SubgroupMask::whole(const PermGroup& g) {
  Bitset b(g.order());
  b.set_all();
  return SubgroupMask(g, std::move(b));
}

SubgroupMask SubgroupMask::trivial(const PermGroup& g) {
  Bitset b(g.order());
  b.set(g.identity());
  return SubgroupMask(g, std::move(b));
}

std::vector<Index> SubgroupMask::members() const {
  std::vector<Index> out;
  out.reserve(size());
  bits_.for_each([&](std::size_t i) { out.push_back(static_cast<Index>(i)); });
  return out;
}

bool SubgroupMask::is_subgroup() const {
  // A finite set is a subgroup iff it equals the subgroup generated by any
  // subset spanning it; grow a greedy generating set and compare.
  const PermGroup& g = *parent_;
  if (!contains(g.identity())) return false;
  std::vector<Index> gens;
  Bitset span(bits_.size());
  span.set(g.identity());
  for (auto x : members()) {
    if (span.test(x)) continue;
    gens.push_back(x);
    span = generate(g, gens).bits();
    if (!span.is_subset_of(bits_)) return false;
  }
  return true;
}

bool SubgroupMask::is_normal() const {
  const PermGroup& g = *parent_;
  const auto gens = g.generator_indices();
  for (auto n : members())
    for (auto s : gens)
      if (!contains(g.mul(g.mul(g.inverse(s), n), s))) return false;
  return true;
}

SubgroupMask generate(const PermGroup& g, std::span<const Index> gens) {
  Bitset bits(g.order());
  std::vector<Index> queue{g.identity()};
  bits.set(g.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index x = queue[head];
    for (auto s : gens) {
      const Index y = g.mul(x, s);
      if (!bits.test(y)) {
        bits.set(y);
        queue.push_back(y);
      }
    }
  }
  return SubgroupMask(g, std::move(bits));
}

SubgroupMask join(const SubgroupMask& a, const SubgroupMask& b) {
  auto gens = a.members();
  for (auto x : b.members())
    if (!a.contains(x)) gens.push_back(x);
  return generate(a.parent(), gens);
}

SubgroupMask intersect(const SubgroupMask& a, const SubgroupMask& b) {
  return SubgroupMask(a.parent(), a.bits() & b.bits());
}

SubgroupMask product(const SubgroupMask& a, const SubgroupMask& b) {
  const PermGroup& g = a.parent();
  Bitset bits(g.order());
  const auto bm = b.members();
  for (auto x : a.members())
    for (auto y : bm) bits.set(g.mul(x, y));
  return SubgroupMask(g, std::move(bits));
}

PermGroup as_group(const SubgroupMask& h) {
  std::vector<Permutation> elems;
  elems.reserve(h.size());
  for (auto i : h.members()) elems.push_back(h.parent().element(i));
  return PermGroup::from_elements(h.parent().degree(), std::move(elems));
}

SubgroupMask transport(const SubgroupMask& mask, const PermGroup& to) {
  Bitset bits(to.order());
  for (auto i : mask.members())
    if (auto j = to.index_of(mask.parent().images(i))) bits.set(*j);
  return SubgroupMask(to, std::move(bits));
}

TableGroup multiplication_table(const PermGroup& g, std::size_t cap) {
  const std::size_t k = g.order();
  if (k > cap) throw CapExceeded("multiplication table too large", cap, k);
  std::vector<Index> t(k * k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) t[std::size_t{i} * k + j] = g.mul(i, j);
  return TableGroup(k, std::move(t), g.identity());
}

std::uint64_t element_order(const PermGroup& g, Index i) {
  std::uint64_t n = 1;
  for (Index x = i; x != g.identity(); x = g.mul(x, i)) ++n;
  return n;
}

std::uint64_t permutation_order(std::span<const Point> im) {
  std::vector<char> seen(im.size(), 0);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < im.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = im[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace nacent
