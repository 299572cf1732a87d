#pragma once

// Finite groups as dense multiplication tables. Elements are indices
// 0..n-1 and element 0 is always the identity.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cech2 {

using Elem = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  /// Checks identity-at-zero, associativity (all n^3 triples) and inverses.
  /// Throws Error on the first violation with its witness.
  static GroupPtr validate(std::string name, const std::vector<std::vector<Elem>>& table);
  /// For tables whose associativity is inherited from an ambient group
  /// (subgroups of products). Checks shape, identity and inverses only.
  static GroupPtr inherited(std::string name, const std::vector<std::vector<Elem>>& table);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  Elem power(Elem a, long long k) const;
  int element_order(Elem a) const;
  bool is_abelian() const;
  std::vector<std::vector<Elem>> table() const;

 private:
  static GroupPtr build(std::string name, const std::vector<std::vector<Elem>>& table, bool associativity);
  FiniteGroup(std::string name, int order, std::vector<Elem> table, std::vector<Elem> inverse)
      : name_(std::move(name)), order_(order), table_(std::move(table)), inverse_(std::move(inverse)) {}

  std::string name_;
  int order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
};

class GroupHom {
 public:
  static GroupHom validate(GroupPtr dom, GroupPtr cod, std::vector<Elem> map);
  /// The homomorphism sending everything to the identity.
  static GroupHom trivial(GroupPtr dom, GroupPtr cod);
  static GroupHom identity(GroupPtr g);

  const GroupPtr& dom() const { return dom_; }
  const GroupPtr& cod() const { return cod_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem x) const { return map_[x]; }

  bool injective() const;
  bool surjective() const;

  /// this ∘ first
  GroupHom after(const GroupHom& first) const;

 private:
  GroupHom(GroupPtr dom, GroupPtr cod, std::vector<Elem> map)
      : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {}

  GroupPtr dom_;
  GroupPtr cod_;
  std::vector<Elem> map_;
};

/// Left action of `actor` on `target` by automorphisms: perms[g][h] = g·h.
class GroupAction {
 public:
  static GroupAction validate(GroupPtr actor, GroupPtr target, std::vector<std::vector<Elem>> perms);
  static GroupAction trivial(GroupPtr actor, GroupPtr target);

  const GroupPtr& actor() const { return actor_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<std::vector<Elem>>& perms() const { return perms_; }
  Elem operator()(Elem g, Elem h) const { return perms_[g][h]; }
  bool is_trivial() const;

 private:
  GroupAction(GroupPtr actor, GroupPtr target, std::vector<std::vector<Elem>> perms)
      : actor_(std::move(actor)), target_(std::move(target)), perms_(std::move(perms)) {}

  GroupPtr actor_;
  GroupPtr target_;
  std::vector<std::vector<Elem>> perms_;
};

// Pair encoding for semidirect and direct products: (h, g) -> h * |G| + g.
inline Elem encode_pair(Elem h, Elem g, int order_g) { return h * order_g + g; }
inline Elem pair_first(Elem x, int order_g) { return x / order_g; }
inline Elem pair_second(Elem x, int order_g) { return x % order_g; }

/// H ⋊ G on pairs (h, g) with (h,g)(h',g') = (h·α(g)(h'), gg').
GroupPtr semidirect_product(const GroupPtr& actor, const GroupPtr& target, const GroupAction& action);
/// H × G with the same pair encoding (trivial action).
GroupPtr direct_product(const GroupPtr& h, const GroupPtr& g);

GroupPtr cyclic_group(int n);
/// Closure of a set of permutations of {0..degree-1}. Elements are sorted
/// lexicographically as permutation vectors, so the identity is element 0.
GroupPtr group_from_permutations(std::string name, int degree, const std::vector<std::vector<int>>& generators);
GroupPtr symmetric_group(int degree);
/// Z<n> for n >= 1, S3, S4, V4 (Klein four). Throws UnknownGroup otherwise.
GroupPtr builtin_group(const std::string& name);

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);

struct KernelImage {
  std::vector<Elem> kernel;
  std::vector<Elem> image;
};
KernelImage hom_kernel_image(const GroupHom& f);

/// Smallest subgroup containing `gens`, as a sorted element list.
std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);
/// Greedy generating set: scans elements in index order, keeping those not
/// already in the span of the previous ones.
std::vector<Elem> generating_set(const FiniteGroup& g);
bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elems);
bool is_normal_subgroup(const FiniteGroup& g, std::span<const Elem> elems);
/// Subgroup re-indexed in the order given by `elems` (which must start with 0).
GroupPtr subgroup(const FiniteGroup& g, std::string name, std::span<const Elem> elems);

/// Isomorphism invariants used as a cheap stand-in for full isomorphism tests.
struct Fingerprint {
  int order = 0;
  bool abelian = false;
  std::map<int, int> order_census;
  bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const FiniteGroup& g);

}  // namespace cech2
