#include "cech2/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cech2/error.hpp"

namespace cech2 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotActionHom: return "NotActionHom";
    case ErrorCode::EquivarianceViolation: return "EquivarianceViolation";
    case ErrorCode::PeifferViolation: return "PeifferViolation";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::NotTwoGroup: return "NotTwoGroup";
    case ErrorCode::IsoCheckFailed: return "IsoCheckFailed";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptySimplex: return "EmptySimplex";
    case ErrorCode::UnknownSpace: return "UnknownSpace";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::TetrahedronViolation: return "TetrahedronViolation";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::DefectNotInKernel: return "DefectNotInKernel";
    case ErrorCode::ValuesNotInKernel: return "ValuesNotInKernel";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

std::string pair(Elem a, Elem b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

bool is_permutation_of_range(const std::vector<Elem>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Elem x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

GroupPtr FiniteGroup::build(std::string name, const std::vector<std::vector<Elem>>& table, bool associativity) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::NotSquare, "empty table");
  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(r) + " has wrong length");
    for (Elem x : table[r]) {
      if (x < 0 || x >= n) throw Error(ErrorCode::EntryOutOfRange, "entry " + std::to_string(x) + " in row " + std::to_string(r));
      flat.push_back(x);
    }
  }
  auto m = [&](Elem a, Elem b) { return flat[static_cast<std::size_t>(a) * n + b]; };
  for (Elem x = 0; x < n; ++x)
    if (m(0, x) != x || m(x, 0) != x)
      throw Error(ErrorCode::NoIdentityAtZero, "element " + std::to_string(x));
  for (Elem a = 0; associativity && a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = m(a, b);
      for (Elem c = 0; c < n; ++c)
        if (m(ab, c) != m(a, m(b, c))) throw Error(ErrorCode::NotAssociative, "triple " + triple(a, b, c));
    }
  std::vector<Elem> inverse(n, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (m(a, b) == 0 && m(b, a) == 0) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0) throw Error(ErrorCode::MissingInverse, "element " + std::to_string(a));
  }
  return GroupPtr(new FiniteGroup(std::move(name), n, std::move(flat), std::move(inverse)));
}

GroupPtr FiniteGroup::validate(std::string name, const std::vector<std::vector<Elem>>& table) {
  return build(std::move(name), table, true);
}

GroupPtr FiniteGroup::inherited(std::string name, const std::vector<std::vector<Elem>>& table) {
  return build(std::move(name), table, false);
}

Elem FiniteGroup::power(Elem a, long long k) const {
  if (k < 0) return power(inv(a), -k);
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> rows(order_);
  for (int r = 0; r < order_; ++r) rows[r].assign(table_.begin() + r * order_, table_.begin() + (r + 1) * order_);
  return rows;
}

// ---------------------------------------------------------------------------

GroupHom GroupHom::validate(GroupPtr dom, GroupPtr cod, std::vector<Elem> map) {
  if (static_cast<int>(map.size()) != dom->order())
    throw Error(ErrorCode::InvalidInput, "map length " + std::to_string(map.size()) + " != |dom| " + std::to_string(dom->order()));
  for (Elem y : map)
    if (y < 0 || y >= cod->order()) throw Error(ErrorCode::EntryOutOfRange, "map value " + std::to_string(y));
  for (Elem x = 0; x < dom->order(); ++x)
    for (Elem y = 0; y < dom->order(); ++y)
      if (map[dom->mul(x, y)] != cod->mul(map[x], map[y]))
        throw Error(ErrorCode::NotHomomorphism, "pair " + pair(x, y) + " from " + dom->name() + " to " + cod->name());
  return GroupHom(std::move(dom), std::move(cod), std::move(map));
}

GroupHom GroupHom::trivial(GroupPtr dom, GroupPtr cod) {
  std::vector<Elem> map(dom->order(), 0);
  return GroupHom(std::move(dom), std::move(cod), std::move(map));
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<Elem> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return GroupHom(g, g, std::move(map));
}

bool GroupHom::injective() const {
  std::set<Elem> seen(map_.begin(), map_.end());
  return static_cast<int>(seen.size()) == dom_->order();
}

bool GroupHom::surjective() const {
  std::set<Elem> seen(map_.begin(), map_.end());
  return static_cast<int>(seen.size()) == cod_->order();
}

GroupHom GroupHom::after(const GroupHom& first) const {
  if (first.cod_.get() != dom_.get() && first.cod_->order() != dom_->order())
    throw Error(ErrorCode::InvalidInput, "composing homomorphisms with mismatched groups");
  std::vector<Elem> map(first.dom_->order());
  for (Elem x = 0; x < first.dom_->order(); ++x) map[x] = map_[first.map_[x]];
  return GroupHom(first.dom_, cod_, std::move(map));
}

// ---------------------------------------------------------------------------

GroupAction GroupAction::validate(GroupPtr actor, GroupPtr target, std::vector<std::vector<Elem>> perms) {
  const int nh = target->order();
  if (static_cast<int>(perms.size()) != actor->order())
    throw Error(ErrorCode::InvalidInput, "action needs one permutation per actor element");
  for (Elem g = 0; g < actor->order(); ++g) {
    if (!is_permutation_of_range(perms[g], nh))
      throw Error(ErrorCode::NotAutomorphism, "perms[" + std::to_string(g) + "] is not a permutation");
    for (Elem a = 0; a < nh; ++a)
      for (Elem b = 0; b < nh; ++b)
        if (perms[g][target->mul(a, b)] != target->mul(perms[g][a], perms[g][b]))
          throw Error(ErrorCode::NotAutomorphism, "g = " + std::to_string(g) + ", pair " + pair(a, b));
  }
  for (Elem g1 = 0; g1 < actor->order(); ++g1)
    for (Elem g2 = 0; g2 < actor->order(); ++g2) {
      const auto& composite = perms[actor->mul(g1, g2)];
      for (Elem h = 0; h < nh; ++h)
        if (composite[h] != perms[g1][perms[g2][h]])
          throw Error(ErrorCode::NotActionHom, "pair " + pair(g1, g2));
    }
  return GroupAction(std::move(actor), std::move(target), std::move(perms));
}

GroupAction GroupAction::trivial(GroupPtr actor, GroupPtr target) {
  std::vector<Elem> id(target->order());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<Elem>> perms(actor->order(), id);
  return GroupAction(std::move(actor), std::move(target), std::move(perms));
}

bool GroupAction::is_trivial() const {
  for (const auto& p : perms_)
    for (Elem h = 0; h < static_cast<Elem>(p.size()); ++h)
      if (p[h] != h) return false;
  return true;
}

// ---------------------------------------------------------------------------

GroupPtr semidirect_product(const GroupPtr& actor, const GroupPtr& target, const GroupAction& action) {
  const int ng = actor->order();
  const int nh = target->order();
  const int n = ng * nh;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    const Elem h = pair_first(x, ng), g = pair_second(x, ng);
    for (Elem y = 0; y < n; ++y) {
      const Elem h2 = pair_first(y, ng), g2 = pair_second(y, ng);
      table[x][y] = encode_pair(target->mul(h, action(g, h2)), actor->mul(g, g2), ng);
    }
  }
  const std::string name = action.is_trivial() ? target->name() + "x" + actor->name()
                                               : target->name() + "x|" + actor->name();
  return FiniteGroup::validate(name, table);
}

GroupPtr direct_product(const GroupPtr& h, const GroupPtr& g) {
  return semidirect_product(g, h, GroupAction::trivial(g, h));
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::UnknownGroup, "cyclic group of order " + std::to_string(n));
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup::validate("Z" + std::to_string(n), table);
}

GroupPtr group_from_permutations(std::string name, int degree, const std::vector<std::vector<int>>& generators) {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> elems{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& s : generators) {
        if (!is_permutation_of_range(s, degree)) throw Error(ErrorCode::InvalidInput, "generator is not a permutation");
        std::vector<int> q(degree);
        for (int i = 0; i < degree; ++i) q[i] = s[p[i]];
        if (elems.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  const std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
  std::map<std::vector<int>, Elem> index;
  for (Elem i = 0; i < static_cast<Elem>(sorted.size()); ++i) index[sorted[i]] = i;
  const int n = static_cast<int>(sorted.size());
  // (a·b)(x) = a(b(x)): compose right to left
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> q(degree);
      for (int i = 0; i < degree; ++i) q[i] = sorted[a][sorted[b][i]];
      table[a][b] = index.at(q);
    }
  return FiniteGroup::validate(std::move(name), table);
}

GroupPtr symmetric_group(int degree) {
  if (degree < 1) throw Error(ErrorCode::UnknownGroup, "S" + std::to_string(degree));
  std::vector<std::vector<int>> gens;
  if (degree >= 2) {
    std::vector<int> swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    gens = {swap, cycle};
  }
  return group_from_permutations("S" + std::to_string(degree), degree, gens);
}

GroupPtr builtin_group(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'S')) {
    const std::string digits = name.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) && digits.size() <= 3) {
      const int n = std::stoi(digits);
      if (name[0] == 'Z' && n >= 1) return cyclic_group(n);
      if (name[0] == 'S' && n >= 1 && n <= 5) return symmetric_group(n);
    }
  }
  if (name == "V4") {
    auto z2 = cyclic_group(2);
    auto v = direct_product(z2, z2);
    return FiniteGroup::validate("V4", v->table());
  }
  throw Error(ErrorCode::UnknownGroup, "no builtin group named '" + name + "'");
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> cls(g.order(), -1);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (cls[x] >= 0) continue;
    std::set<Elem> members;
    for (Elem y = 0; y < g.order(); ++y) members.insert(g.conj(y, x));
    for (Elem m : members) cls[m] = static_cast<int>(classes.size());
    classes.emplace_back(members.begin(), members.end());
  }
  return classes;
}

KernelImage hom_kernel_image(const GroupHom& f) {
  KernelImage out;
  std::set<Elem> image;
  for (Elem x = 0; x < f.dom()->order(); ++x) {
    if (f(x) == 0) out.kernel.push_back(x);
    image.insert(f(x));
  }
  out.image.assign(image.begin(), image.end());
  return out;
}

std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : gens) {
      const Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<char> covered(g.order(), 0);
  covered[0] = 1;
  for (Elem x = 1; x < g.order(); ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    std::fill(covered.begin(), covered.end(), 0);
    for (Elem y : generated_subgroup(g, gens)) covered[y] = 1;
  }
  return gens;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elems) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : elems) in[x] = 1;
  if (!in[0]) return false;
  for (Elem a : elems) {
    if (!in[g.inv(a)]) return false;
    for (Elem b : elems)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const Elem> elems) {
  if (!is_subgroup(g, elems)) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : elems) in[x] = 1;
  for (Elem y = 0; y < g.order(); ++y)
    for (Elem x : elems)
      if (!in[g.conj(y, x)]) return false;
  return true;
}

GroupPtr subgroup(const FiniteGroup& g, std::string name, std::span<const Elem> elems) {
  if (elems.empty() || elems[0] != 0 || !is_subgroup(g, elems))
    throw Error(ErrorCode::InvalidInput, "not a subgroup listed identity-first");
  std::map<Elem, Elem> local;
  for (Elem i = 0; i < static_cast<Elem>(elems.size()); ++i) local[elems[i]] = i;
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = local.at(g.mul(elems[a], elems[b]));
  return FiniteGroup::validate(std::move(name), table);
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint fp;
  fp.order = g.order();
  fp.abelian = g.is_abelian();
  for (Elem x = 0; x < g.order(); ++x) ++fp.order_census[g.element_order(x)];
  return fp;
}

}  // namespace cech2
