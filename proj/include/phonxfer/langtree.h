// Copyright 2026 The phonxfer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHONXFER_LANGTREE_H_
#define PHONXFER_LANGTREE_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace phonxfer {

enum class NodeKind { kRoot, kFamily, kBranch, kLanguage };

const char* to_string(NodeKind kind);

// Phylogenetic distance: depth_a + depth_b - 2 * depth_lca, i.e. the number
// of parent-child steps on the path between the two nodes.
struct TreeDistance {
  int value = 0;
  std::string lca_name;
  int depth_a = 0;
  int depth_b = 0;
  int depth_lca = 0;
};

// Rooted tree of language families, branches and languages. Names are
// unique; language nodes are leaves.
//
// Text format, one node per line:
//
//   Root
//   <TAB>Indo-European<TAB>family
//   <TAB><TAB>Slavic
//   <TAB><TAB><TAB>Bulgarian<TAB>language
//
// Depth is the number of leading TABs and a child follows its parent. The
// optional kind after a TAB is one of root, family, branch, language; when
// omitted it is root at depth 0, language for leaves, family at depth 1 and
// branch elsewhere. Blank lines and lines starting with '#' are ignored.
class LanguageTree {
 public:
  static LanguageTree parse(std::string_view text,
                            std::string_view source = "tree");

  std::size_t size() const { return nodes_.size(); }
  const std::string& root() const { return nodes_.front().name; }
  bool contains(std::string_view name) const;

  // Node names in file (pre-)order.
  std::vector<std::string> names() const;
  NodeKind kind(std::string_view name) const;
  // Empty for the root.
  std::string parent(std::string_view name) const;

  // Edges from the root; depth(root) == 0.
  int depth(std::string_view name) const;
  // Deepest node that is an ancestor-or-self of both.
  std::string lca(std::string_view a, std::string_view b) const;
  TreeDistance distance(std::string_view a, std::string_view b) const;

  // Re-renders the tree in the text format above with explicit kinds.
  std::string serialize() const;

 private:
  struct Node {
    std::string name;
    NodeKind kind;
    int parent;  // -1 for the root
    int depth;
  };

  int index_of(std::string_view name) const;
  // Node indices from the root down to `node`.
  std::vector<int> root_path(int node) const;

  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> index_;
};

inline LanguageTree parse_tree(std::string_view text,
                               std::string_view source = "tree") {
  return LanguageTree::parse(text, source);
}

}  // namespace phonxfer

#endif  // PHONXFER_LANGTREE_H_
