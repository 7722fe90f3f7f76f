#include "twomode/isomorphism.hpp"

#include <algorithm>

namespace twomode {

std::string rooted_canonical_form(const Graph& tree, NodeId root) {
  const RootedTree t = root_tree(tree, root);
  std::vector<std::string> code(tree.size());
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    std::vector<std::string> parts;
    parts.reserve(t.children[*it].size());
    for (NodeId c : t.children[*it]) parts.push_back(std::move(code[c]));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ")";
    code[*it] = std::move(s);
  }
  return code[root];
}

std::vector<std::size_t> degree_multiset(const Graph& g) {
  std::vector<std::size_t> out(g.size());
  for (NodeId v = 0; v < g.size(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool rooted_isomorphic(const Graph& a, NodeId root_a, const Graph& b, NodeId root_b) {
  if (a.size() != b.size() || !is_tree(a) || !is_tree(b)) return false;
  if (a.degree(root_a) != b.degree(root_b)) return false;
  if (degree_multiset(a) != degree_multiset(b)) return false;
  return rooted_canonical_form(a, root_a) == rooted_canonical_form(b, root_b);
}

}  // namespace twomode
