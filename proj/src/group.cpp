#include "framecraft/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "framecraft/error.hpp"

namespace framecraft {

namespace {

bool is_permutation_of_range(const std::vector<int>& row, int n) {
  std::vector<char> seen(n, 0);
  for (int v : row) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<char> reached(g.order(), 0);
  reached[g.identity()] = 1;
  for (Element x = 0; x < g.order(); ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    std::deque<Element> queue;
    for (Element y = 0; y < g.order(); ++y)
      if (reached[y]) queue.push_back(y);
    while (!queue.empty()) {
      const Element y = queue.front();
      queue.pop_front();
      for (Element s : gens) {
        const Element z = g.mul(y, s);
        if (!reached[z]) {
          reached[z] = 1;
          queue.push_back(z);
        }
      }
    }
  }
  return gens;
}

FiniteGroup FiniteGroup::from_table(CayleyTable table, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty multiplication table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorCode::NotAGroup, "multiplication table is not square", {a});
    if (!is_permutation_of_range(table[a], n))
      throw Error(ErrorCode::NotAGroup, "row " + std::to_string(a) + " is not a permutation", {a});
  }
  for (int b = 0; b < n; ++b) {
    std::vector<int> col(n);
    for (int a = 0; a < n; ++a) col[a] = table[a][b];
    if (!is_permutation_of_range(col, n))
      throw Error(ErrorCode::NotAGroup, "column " + std::to_string(b) + " is not a permutation", {b});
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorCode::NotAGroup, "no identity element");

  auto check = [&](int a, int b, int c) {
    if (table[table[a][b]][c] != table[a][table[b][c]])
      throw Error(ErrorCode::NotAGroup,
                  "associativity fails for (" + std::to_string(a) + ", " + std::to_string(b) +
                      ", " + std::to_string(c) + ")",
                  {a, b, c});
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < kAssociativitySamples; ++s) check(pick(rng), pick(rng), pick(rng));
  }

  FiniteGroup g;
  g.identity_ = identity;
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity) g.inverse_[a] = b;
  if (labels.empty()) {
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  } else if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::NotAGroup, "label count does not match the group order");
  }
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  return g;
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

GroupPtr make_group(CayleyTable table, std::vector<std::string> labels) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(table), std::move(labels)));
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = h.order();
  const int n = g.order() * m;
  CayleyTable table(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = "(" + g.label(a / m) + "," + h.label(a % m) + ")";
    for (int b = 0; b < n; ++b)
      table[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  }
  return make_group(std::move(table), std::move(labels));
}

SubgroupEmbedding SubgroupEmbedding::from_members(GroupPtr parent, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const int n = parent->order();
  for (Element x : members)
    if (x < 0 || x >= n) throw Error(ErrorCode::InvalidSubgroup, "member index out of range", {x});
  if (members.empty() || !std::binary_search(members.begin(), members.end(), parent->identity()))
    throw Error(ErrorCode::InvalidSubgroup, "subgroup must contain the identity");
  const int k = static_cast<int>(members.size());
  std::vector<int> local(n, -1);
  for (int i = 0; i < k; ++i) local[members[i]] = i;
  CayleyTable table(k, std::vector<Element>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Element p = parent->mul(members[i], members[j]);
      if (local[p] < 0)
        throw Error(ErrorCode::InvalidSubgroup, "members are not closed under multiplication",
                    {members[i], members[j]});
      table[i][j] = local[p];
    }
  std::vector<std::string> labels;
  for (Element x : members) labels.push_back(parent->label(x));

  SubgroupEmbedding e;
  e.parent_ = std::move(parent);
  e.induced_ = make_group(std::move(table), std::move(labels));
  e.parent_of_ = members;
  e.members_ = std::move(members);
  e.finish();
  return e;
}

SubgroupEmbedding SubgroupEmbedding::from_homomorphism(GroupPtr parent, GroupPtr sub,
                                                       std::vector<Element> parent_of) {
  const int k = sub->order();
  if (static_cast<int>(parent_of.size()) != k)
    throw Error(ErrorCode::InvalidSubgroup, "embedding map has the wrong length");
  for (Element x : parent_of)
    if (x < 0 || x >= parent->order())
      throw Error(ErrorCode::InvalidSubgroup, "embedding image out of range", {x});
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (parent_of[sub->mul(a, b)] != parent->mul(parent_of[a], parent_of[b]))
        throw Error(ErrorCode::InvalidSubgroup, "embedding map is not a homomorphism", {a, b});
  SubgroupEmbedding e;
  e.members_ = parent_of;
  std::sort(e.members_.begin(), e.members_.end());
  if (std::adjacent_find(e.members_.begin(), e.members_.end()) != e.members_.end())
    throw Error(ErrorCode::InvalidSubgroup, "embedding map is not injective");
  e.parent_ = std::move(parent);
  e.induced_ = std::move(sub);
  e.parent_of_ = std::move(parent_of);
  e.finish();
  return e;
}

void SubgroupEmbedding::finish() {
  if (parent_->order() % induced_->order() != 0)
    throw Error(ErrorCode::InvalidSubgroup, "subgroup order does not divide the group order");
  sub_index_.assign(parent_->order(), -1);
  for (int i = 0; i < static_cast<int>(parent_of_.size()); ++i) sub_index_[parent_of_[i]] = i;
}

Element CosetDecomposition::compose(Element k_index, int coset) const {
  return embedding_.parent()->mul(embedding_.parent_of(k_index), cross_section_[coset]);
}

void CosetDecomposition::finish() {
  const auto& g = *embedding_.parent();
  offset_.assign(g.order(), -1);
  for (int c = 0; c < num_cosets(); ++c) {
    const Element t_inv = g.inverse(cross_section_[c]);
    for (Element x : cosets_[c]) offset_[x] = embedding_.sub_index(g.mul(x, t_inv));
  }
  // (k, c) -> k tau(c) must hit every element exactly once.
  std::vector<int> hits(g.order(), 0);
  for (int c = 0; c < num_cosets(); ++c)
    for (Element k = 0; k < embedding_.induced()->order(); ++k) ++hits[compose(k, c)];
  for (Element x = 0; x < g.order(); ++x)
    if (hits[x] != 1 || offset_[x] < 0)
      throw Error(ErrorCode::InvalidSubgroup, "cross section does not give a bijection", {x});
}

CosetDecomposition right_cosets(const SubgroupEmbedding& embedding) {
  CosetDecomposition d(embedding);
  const auto& g = *embedding.parent();
  d.coset_of_.assign(g.order(), -1);
  for (Element x = 0; x < g.order(); ++x) {
    if (d.coset_of_[x] >= 0) continue;
    std::vector<Element> coset;
    for (Element k : embedding.member_indices()) coset.push_back(g.mul(k, x));
    std::sort(coset.begin(), coset.end());
    const int id = d.num_cosets();
    for (Element y : coset) d.coset_of_[y] = id;
    d.cosets_.push_back(std::move(coset));
    d.cross_section_.push_back(x);
  }
  d.finish();
  return d;
}

CosetDecomposition with_cross_section(const CosetDecomposition& base,
                                      std::vector<Element> representatives) {
  if (static_cast<int>(representatives.size()) != base.num_cosets())
    throw Error(ErrorCode::InvalidSubgroup, "need one representative per coset");
  for (int c = 0; c < base.num_cosets(); ++c) {
    const Element r = representatives[c];
    if (r < 0 || r >= base.embedding().parent()->order() || base.coset_of(r) != c)
      throw Error(ErrorCode::InvalidSubgroup, "representative lies outside its coset", {c, r});
  }
  CosetDecomposition d(base.embedding());
  d.cosets_ = base.cosets_;
  d.coset_of_ = base.coset_of_;
  d.cross_section_ = std::move(representatives);
  d.finish();
  return d;
}

std::vector<Element> cross_section_shift(const CosetDecomposition& from,
                                         const CosetDecomposition& to) {
  const auto& g = *from.embedding().parent();
  std::vector<Element> shift(from.num_cosets());
  for (int c = 0; c < from.num_cosets(); ++c)
    shift[c] = from.embedding().sub_index(g.mul(to.representative(c), g.inverse(from.representative(c))));
  return shift;
}

GroupAction::GroupAction(GroupPtr group, int set_size, std::vector<std::vector<int>> table)
    : group_(std::move(group)), set_size_(set_size), table_(std::move(table)) {
  const auto& g = *group_;
  if (set_size_ < 0 || static_cast<int>(table_.size()) != g.order())
    throw Error(ErrorCode::InvalidAction, "action table needs one row per group element");
  for (int a = 0; a < g.order(); ++a)
    if (static_cast<int>(table_[a].size()) != set_size_ || !is_permutation_of_range(table_[a], set_size_))
      throw Error(ErrorCode::InvalidAction, "action row is not a permutation", {a});
  for (int x = 0; x < set_size_; ++x)
    if (table_[g.identity()][x] != x) throw Error(ErrorCode::InvalidAction, "identity does not act trivially", {x});
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int x = 0; x < set_size_; ++x)
        if (table_[g.mul(a, b)][x] != table_[a][table_[b][x]])
          throw Error(ErrorCode::InvalidAction, "action is not compatible with multiplication", {a, b, x});
}

bool is_two_transitive(const GroupAction& action) {
  const int n = action.set_size();
  if (n <= 1) return true;
  // Transitive on ordered pairs of distinct points iff the orbit of (0, 1) is all of them.
  std::vector<char> seen(n * n, 0);
  int count = 0;
  for (Element g = 0; g < action.group()->order(); ++g) {
    const int key = action.apply(g, 0) * n + action.apply(g, 1);
    if (!seen[key]) {
      seen[key] = 1;
      ++count;
    }
  }
  return count == n * (n - 1);
}

std::vector<Element> find_isomorphism_onto(const FiniteGroup& sub, const FiniteGroup& parent,
                                           const std::vector<Element>& members) {
  std::vector<Element> target = members;
  std::sort(target.begin(), target.end());
  if (static_cast<int>(target.size()) != sub.order())
    throw Error(ErrorCode::InvalidSubgroup, "member count does not match the group order");
  const auto gens = generating_set(sub);
  std::vector<Element> images(gens.size(), -1);

  auto extend = [&]() -> std::vector<Element> {
    std::vector<Element> phi(sub.order(), -1);
    phi[sub.identity()] = parent.identity();
    std::deque<Element> queue{sub.identity()};
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (size_t i = 0; i < gens.size(); ++i) {
        const Element y = sub.mul(x, gens[i]);
        const Element img = parent.mul(phi[x], images[i]);
        if (phi[y] < 0) {
          phi[y] = img;
          queue.push_back(y);
        } else if (phi[y] != img) {
          return {};
        }
      }
    }
    std::vector<Element> image = phi;
    std::sort(image.begin(), image.end());
    if (image != target) return {};
    return phi;
  };

  std::function<std::vector<Element>(size_t)> search = [&](size_t i) -> std::vector<Element> {
    if (i == gens.size()) return extend();
    const int order = sub.element_order(gens[i]);
    for (Element cand : target) {
      if (parent.element_order(cand) != order) continue;
      images[i] = cand;
      auto phi = search(i + 1);
      if (!phi.empty()) return phi;
    }
    return {};
  };

  if (gens.empty()) {
    if (target.size() == 1 && target[0] == parent.identity()) return {parent.identity()};
    throw Error(ErrorCode::InvalidSubgroup, "no isomorphism onto the given members");
  }
  auto phi = search(0);
  if (phi.empty()) throw Error(ErrorCode::InvalidSubgroup, "no isomorphism onto the given members");
  return phi;
}

}  // namespace framecraft
