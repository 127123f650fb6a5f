#pragma once

#include <memory>
#include <string>
#include <vector>

namespace framecraft {

using Element = int;
using CayleyTable = std::vector<std::vector<Element>>;

/// A finite group given by its Cayley table. Immutable once built; identity
/// and inverse tables are derived eagerly.
class FiniteGroup {
 public:
  /// Groups above this order get a sampled associativity check.
  static constexpr int kExhaustiveAssociativityLimit = 512;
  static constexpr int kAssociativitySamples = 100000;

  /// Validates the table (Latin square, identity, associativity) and throws
  /// Error{NotAGroup} with the witnessing indices otherwise.
  static FiniteGroup from_table(CayleyTable table, std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(table_.size()); }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element identity() const { return identity_; }
  Element inverse(Element a) const { return inverse_[a]; }
  const CayleyTable& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element a) const { return labels_[a]; }

  /// Same Cayley table (labels ignored).
  bool same_as(const FiniteGroup& other) const { return table_ == other.table_; }

  /// Order of the element a.
  int element_order(Element a) const;

 private:
  FiniteGroup() = default;

  CayleyTable table_;
  std::vector<std::string> labels_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(CayleyTable table, std::vector<std::string> labels = {});

/// Greedy generating set: each element not yet reached becomes a generator.
std::vector<Element> generating_set(const FiniteGroup& g);

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// Direct product G x H; element (g, h) has index g * |H| + h.
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// A subgroup K <= G. K carries its own indexing (`induced`), related to the
/// parent through `parent_of`.
class SubgroupEmbedding {
 public:
  /// K indexed in the sorted order of `members`.
  static SubgroupEmbedding from_members(GroupPtr parent, std::vector<Element> members);

  /// K = image of an injective homomorphism sub -> parent; K keeps sub's indexing.
  static SubgroupEmbedding from_homomorphism(GroupPtr parent, GroupPtr sub,
                                             std::vector<Element> parent_of);

  const GroupPtr& parent() const { return parent_; }
  const GroupPtr& induced() const { return induced_; }
  const std::vector<Element>& member_indices() const { return members_; }
  Element parent_of(Element k) const { return parent_of_[k]; }
  /// K-index of a parent element, or -1 if it is not in K.
  Element sub_index(Element x) const { return sub_index_[x]; }
  bool contains(Element x) const { return sub_index_[x] >= 0; }
  int index() const { return parent_->order() / induced_->order(); }

 private:
  SubgroupEmbedding() = default;
  void finish();

  GroupPtr parent_;
  GroupPtr induced_;
  std::vector<Element> members_;
  std::vector<Element> parent_of_;
  std::vector<Element> sub_index_;
};

/// Right cosets Kx of K in G with a cross section tau. Every x in G is
/// uniquely xi * tau(Kx) with xi in K.
class CosetDecomposition {
 public:
  const SubgroupEmbedding& embedding() const { return embedding_; }
  int num_cosets() const { return static_cast<int>(cosets_.size()); }
  const std::vector<std::vector<Element>>& cosets() const { return cosets_; }
  Element representative(int coset) const { return cross_section_[coset]; }
  const std::vector<Element>& cross_section() const { return cross_section_; }
  int coset_of(Element x) const { return coset_of_[x]; }

  /// K-index xi with x = xi * tau(Kx).
  Element offset_of(Element x) const { return offset_[x]; }
  /// Parent element xi * tau(coset) for K-index xi.
  Element compose(Element k_index, int coset) const;

 private:
  friend CosetDecomposition right_cosets(const SubgroupEmbedding&);
  friend CosetDecomposition with_cross_section(const CosetDecomposition&, std::vector<Element>);
  explicit CosetDecomposition(SubgroupEmbedding e) : embedding_(std::move(e)) {}
  void finish();

  SubgroupEmbedding embedding_;
  std::vector<std::vector<Element>> cosets_;
  std::vector<Element> cross_section_;
  std::vector<int> coset_of_;
  std::vector<Element> offset_;
};

/// Cosets with the minimal parent index of each coset as its representative.
CosetDecomposition right_cosets(const SubgroupEmbedding& embedding);

/// Same cosets, different cross section (one representative per coset, in coset order).
CosetDecomposition with_cross_section(const CosetDecomposition& base,
                                      std::vector<Element> representatives);

/// K-indices eta_c with tau'(Kx_c) = eta_c * tau(Kx_c).
std::vector<Element> cross_section_shift(const CosetDecomposition& from,
                                         const CosetDecomposition& to);

/// A left action of a group on {0, ..., n-1}.
class GroupAction {
 public:
  GroupAction(GroupPtr group, int set_size, std::vector<std::vector<int>> table);

  const GroupPtr& group() const { return group_; }
  int set_size() const { return set_size_; }
  int apply(Element g, int x) const { return table_[g][x]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  GroupPtr group_;
  int set_size_;
  std::vector<std::vector<int>> table_;
};

bool is_two_transitive(const GroupAction& action);

/// Finds an injective homomorphism sub -> parent whose image is exactly
/// `members`; throws InvalidSubgroup when none exists.
std::vector<Element> find_isomorphism_onto(const FiniteGroup& sub, const FiniteGroup& parent,
                                           const std::vector<Element>& members);

}  // namespace framecraft
