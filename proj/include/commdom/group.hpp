#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commdom/subset_mask.hpp"

namespace commdom {

using Element = std::uint32_t;

/// Default upper bound on the order of any Cayley table.
inline constexpr std::size_t kDefaultOrderCap = 4096;

/// A finite group given by its Cayley table. Elements are indices 0..n-1;
/// labels are for display only.
class GroupTable {
public:
  GroupTable() = default;

  /// Builds a table from a row-major multiplication table. The identity and
  /// inverse map are derived from the table; nothing is validated here.
  GroupTable(std::size_t order, std::vector<Element> mul, std::vector<std::string> labels,
             std::string descriptor, std::size_t cap = kDefaultOrderCap);

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Element identity() const { return identity_; }
  Element inverse(Element x) const { return inverse_[x]; }
  const std::vector<Element>& table() const { return mul_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_[x]; }
  const std::string& descriptor() const { return descriptor_; }

  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  void set_descriptor(std::string d) { descriptor_ = std::move(d); }
  void set_labels(std::vector<std::string> labels);

private:
  std::size_t order_ = 0;
  std::vector<Element> mul_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::string descriptor_;
};

/// Returns every group-axiom violation of the table; an empty list certifies a
/// group. Associativity is checked exhaustively up to order 512 and on 10^5
/// seeded random triples above that.
std::vector<std::string> validate(std::size_t order, const std::vector<Element>& mul,
                                  std::optional<Element> identity = std::nullopt);
std::vector<std::string> validate(const GroupTable& g);

SubsetMask centralizer(const GroupTable& g, Element x);
SubsetMask center(const GroupTable& g);
std::size_t element_order(const GroupTable& g, Element x);

/// Cyclic subgroup generated by x.
SubsetMask cyclic_subgroup(const GroupTable& g, Element x);

/// Smallest subgroup containing the given elements.
SubsetMask subgroup_closure(const GroupTable& g, const SubsetMask& generators);

bool is_subgroup(const GroupTable& g, const SubsetMask& s);
bool is_abelian(const GroupTable& g);
bool is_abelian_subset(const GroupTable& g, const SubsetMask& s);

/// Map from element order to number of elements of that order.
std::map<std::size_t, std::size_t> order_histogram(const GroupTable& g);

struct MaximalCyclic {
  std::vector<SubsetMask> subgroups;  ///< in order of least generator index
  std::size_t total = 0;              ///< T
  std::size_t central = 0;            ///< U: those contained in Z(G)
};
MaximalCyclic maximal_cyclic_subgroups(const GroupTable& g);

/// Deduplicated {C(x) : x in G}, ordered by the least x producing each.
std::vector<SubsetMask> distinct_centralizers(const GroupTable& g);

/// True iff C(x) is abelian for every noncentral x. Abelian input returns true
/// vacuously.
bool is_ac_group(const GroupTable& g);

struct SylowFactor {
  std::size_t prime = 0;
  SubsetMask subgroup;
};

/// For each prime p dividing |G|, the elements of p-power order. Returned only
/// when each such set is a subgroup of full p-part order, which characterizes
/// nilpotence. The trivial group yields an empty list.
std::optional<std::vector<SylowFactor>> nilpotent_decomposition(const GroupTable& g);

/// Componentwise product. Element (i, j) has index i * |b| + j.
GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                          std::size_t cap = kDefaultOrderCap);

/// Re-tables the subgroup given by the mask; elements keep ascending order.
GroupTable subgroup_table(const GroupTable& g, const SubsetMask& s, std::string descriptor = {});

struct GroupInvariants {
  std::size_t order = 0;
  SubsetMask center;
  std::size_t center_size = 0;
  bool is_abelian = false;
  std::size_t least_prime = 0;         ///< 0 for the trivial group
  std::size_t cent_count = 0;          ///< |cent(G)|
  std::size_t nacent_count = 0;        ///< non-abelian members of cent(G)
  std::size_t order2_centralizers = 0; ///< t
  std::size_t max_cyclic_total = 0;    ///< T
  std::size_t max_cyclic_central = 0;  ///< U
  std::size_t max_excess = 0;          ///< M = max_{x not central} |C(x)| - |Z|
  std::size_t min_excess = 0;          ///< d = min_{x not central} |C(x)| - |Z|
  bool is_ac_group = false;
  bool is_nilpotent = false;
};

GroupInvariants compute_invariants(const GroupTable& g);

/// Order, order histogram, center size and |cent(G)|. Stands in for
/// isomorphism when recognising small named groups.
struct Fingerprint {
  std::size_t order = 0;
  std::map<std::size_t, std::size_t> histogram;
  std::size_t center_size = 0;
  std::size_t cent_count = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const GroupTable& g);

}  // namespace commdom
