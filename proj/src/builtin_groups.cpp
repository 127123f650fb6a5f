#include "framecraft/builtin_groups.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "framecraft/error.hpp"

namespace framecraft {

namespace {

constexpr int kMaxCyclic = 4096;
constexpr int kMaxDihedral = 2048;
constexpr int kMaxSymmetric = 5;

int parse_positive(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1)
    throw Error(ErrorCode::UnsupportedGroup, "bad group size in '" + std::string(whole) + "'");
  return value;
}

std::string power_label(const std::string& base, int k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

GroupPtr cyclic(int n) {
  CayleyTable table(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "e" : power_label("g", a);
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return make_group(std::move(table), std::move(labels));
}

GroupPtr dihedral(int n) {
  const int order = 2 * n;
  CayleyTable table(order, std::vector<Element>(order));
  std::vector<std::string> labels(order);
  for (int x = 0; x < order; ++x) {
    const int s = x / n, k = x % n;
    const std::string word = power_label("a", k) + (s ? "b" : "");
    labels[x] = word.empty() ? "e" : word;
    for (int y = 0; y < order; ++y) {
      const int t = y / n, l = y % n;
      const int rot = ((k + (s ? -l : l)) % n + n) % n;
      table[x][y] = ((s + t) % 2) * n + rot;
    }
  }
  return make_group(std::move(table), std::move(labels));
}

GroupPtr symmetric(int n) {
  const auto perms = symmetric_permutations(n);
  const int order = static_cast<int>(perms.size());
  CayleyTable table(order, std::vector<Element>(order));
  std::vector<std::string> labels(order);
  std::vector<int> composed(n);
  for (int a = 0; a < order; ++a) {
    for (int v : perms[a]) labels[a] += static_cast<char>('0' + v);
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
      const auto it = std::lower_bound(perms.begin(), perms.end(), composed);
      table[a][b] = static_cast<int>(it - perms.begin());
    }
  }
  return make_group(std::move(table), std::move(labels));
}

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "cyclic:" + std::to_string(n);
    case Kind::Dihedral: return "dihedral:" + std::to_string(n);
    case Kind::Symmetric: return "symmetric:" + std::to_string(n);
    case Kind::Product: return "product:" + factors[0].to_string() + "x" + factors[1].to_string();
  }
  return {};
}

GroupSpec parse_group_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::UnsupportedGroup, "unknown group '" + std::string(text) + "'");
  const auto head = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  GroupSpec spec;
  if (head == "product") {
    spec.kind = GroupSpec::Kind::Product;
    for (size_t pos = rest.find('x'); pos != std::string_view::npos; pos = rest.find('x', pos + 1)) {
      try {
        GroupSpec left = parse_group_spec(rest.substr(0, pos));
        GroupSpec right = parse_group_spec(rest.substr(pos + 1));
        spec.factors = {std::move(left), std::move(right)};
        return spec;
      } catch (const Error&) {
      }
    }
    throw Error(ErrorCode::UnsupportedGroup, "cannot split product '" + std::string(text) + "'");
  }
  spec.n = parse_positive(rest, text);
  if (head == "cyclic" && spec.n <= kMaxCyclic) {
    spec.kind = GroupSpec::Kind::Cyclic;
  } else if (head == "dihedral" && spec.n <= kMaxDihedral) {
    spec.kind = GroupSpec::Kind::Dihedral;
  } else if (head == "symmetric" && spec.n <= kMaxSymmetric) {
    spec.kind = GroupSpec::Kind::Symmetric;
  } else {
    throw Error(ErrorCode::UnsupportedGroup, "unsupported group '" + std::string(text) + "'");
  }
  return spec;
}

bool looks_like_group_spec(std::string_view text) {
  for (std::string_view head : {"cyclic:", "dihedral:", "symmetric:", "product:"})
    if (text.substr(0, head.size()) == head) return true;
  return false;
}

GroupPtr builtin_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return cyclic(spec.n);
    case GroupSpec::Kind::Dihedral: return dihedral(spec.n);
    case GroupSpec::Kind::Symmetric: return symmetric(spec.n);
    case GroupSpec::Kind::Product:
      return direct_product(*builtin_group(spec.factors[0]), *builtin_group(spec.factors[1]));
  }
  throw Error(ErrorCode::UnsupportedGroup, "unknown group kind");
}

GroupPtr builtin_group(std::string_view spec) { return builtin_group(parse_group_spec(spec)); }

std::vector<std::vector<int>> symmetric_permutations(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

GroupAction symmetric_natural_action(int n) {
  if (n < 1 || n > kMaxSymmetric)
    throw Error(ErrorCode::UnsupportedGroup, "symmetric groups are available for n <= 5");
  return GroupAction(symmetric(n), n, symmetric_permutations(n));
}

}  // namespace framecraft
