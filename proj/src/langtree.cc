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

#include "phonxfer/langtree.h"

#include <algorithm>
#include <optional>

#include "phonxfer/error.h"
#include "phonxfer/text_io.h"
#include "phonxfer/unicode.h"

namespace phonxfer {

namespace {

std::optional<NodeKind> parse_kind(std::string_view s) {
  if (s == "root") return NodeKind::kRoot;
  if (s == "family") return NodeKind::kFamily;
  if (s == "branch") return NodeKind::kBranch;
  if (s == "language") return NodeKind::kLanguage;
  return std::nullopt;
}

}  // namespace

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kRoot:
      return "root";
    case NodeKind::kFamily:
      return "family";
    case NodeKind::kBranch:
      return "branch";
    case NodeKind::kLanguage:
      return "language";
  }
  return "?";
}

LanguageTree LanguageTree::parse(std::string_view text,
                                 std::string_view source) {
  const std::string src(source);
  LanguageTree tree;
  std::vector<std::optional<NodeKind>> declared;
  std::vector<std::size_t> line_of;
  std::vector<int> path;  // node index at each depth of the current chain

  for (const Line& line : split_lines(text)) {
    std::string_view rest = line.text;
    std::size_t tabs = rest.find_first_not_of('\t');
    if (tabs == std::string_view::npos || is_blank(rest)) continue;
    rest.remove_prefix(tabs);
    if (rest.front() == '#') continue;
    if (!unicode::is_valid_utf8(rest)) {
      throw ParseError(src, line.number, "invalid UTF-8");
    }

    std::optional<NodeKind> kind;
    std::size_t sep = rest.find('\t');
    std::string name(trim(rest.substr(0, sep)));
    if (sep != std::string_view::npos) {
      std::string_view kind_text = trim(rest.substr(sep + 1));
      kind = parse_kind(kind_text);
      if (!kind) {
        throw ParseError(src, line.number,
                         "unknown node kind '" + std::string(kind_text) + "'");
      }
    }
    name = unicode::nfc(name);
    if (name.empty()) throw ParseError(src, line.number, "empty node name");

    const int depth = static_cast<int>(tabs);
    if (depth == 0 && !tree.nodes_.empty()) {
      throw ParseError(src, line.number,
                       "multiple roots ('" + tree.root() + "' and '" + name +
                           "')");
    }
    if (path.empty() && depth > 0) {
      throw ParseError(src, line.number, "the first node must not be indented");
    }
    if (depth > static_cast<int>(path.size())) {
      throw ParseError(src, line.number,
                       "indentation jumps from depth " +
                           std::to_string(path.size() - 1) + " to " +
                           std::to_string(depth));
    }
    if (depth == 0 && kind && *kind != NodeKind::kRoot) {
      throw ParseError(src, line.number, "the root must have kind 'root'");
    }
    if (depth > 0 && kind == NodeKind::kRoot) {
      throw ParseError(src, line.number, "only the top node may be 'root'");
    }
    const int index = static_cast<int>(tree.nodes_.size());
    auto [pos, inserted] = tree.index_.emplace(name, index);
    if (!inserted) {
      throw ParseError(src, line.number,
                       "duplicate node name '" + name + "' (first on line " +
                           std::to_string(line_of[pos->second]) + ")");
    }
    path.resize(depth);
    const int parent = depth == 0 ? -1 : path.back();
    tree.nodes_.push_back({name, NodeKind::kRoot, parent, depth});
    declared.push_back(kind);
    line_of.push_back(line.number);
    path.push_back(index);
  }
  if (tree.nodes_.empty()) throw InputError(src + ": empty tree");

  std::vector<bool> has_children(tree.nodes_.size(), false);
  for (const Node& n : tree.nodes_) {
    if (n.parent >= 0) has_children[n.parent] = true;
  }
  for (std::size_t i = 0; i < tree.nodes_.size(); ++i) {
    Node& n = tree.nodes_[i];
    if (declared[i]) {
      n.kind = *declared[i];
    } else if (n.depth == 0) {
      n.kind = NodeKind::kRoot;
    } else if (!has_children[i]) {
      n.kind = NodeKind::kLanguage;
    } else {
      n.kind = n.depth == 1 ? NodeKind::kFamily : NodeKind::kBranch;
    }
    if (n.kind == NodeKind::kLanguage && has_children[i]) {
      throw ParseError(src, line_of[i],
                       "language '" + n.name + "' must be a leaf");
    }
  }
  return tree;
}

bool LanguageTree::contains(std::string_view name) const {
  return index_.count(std::string(name)) > 0;
}

int LanguageTree::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw InputError("unknown tree node '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<std::string> LanguageTree::names() const {
  std::vector<std::string> out;
  out.reserve(nodes_.size());
  for (const Node& n : nodes_) out.push_back(n.name);
  return out;
}

NodeKind LanguageTree::kind(std::string_view name) const {
  return nodes_[index_of(name)].kind;
}

std::string LanguageTree::parent(std::string_view name) const {
  const int p = nodes_[index_of(name)].parent;
  return p < 0 ? std::string() : nodes_[p].name;
}

int LanguageTree::depth(std::string_view name) const {
  return nodes_[index_of(name)].depth;
}

std::vector<int> LanguageTree::root_path(int node) const {
  std::vector<int> path;
  for (int i = node; i >= 0; i = nodes_[i].parent) path.push_back(i);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string LanguageTree::lca(std::string_view a, std::string_view b) const {
  std::vector<int> pa = root_path(index_of(a));
  std::vector<int> pb = root_path(index_of(b));
  std::size_t common = 0;
  while (common < pa.size() && common < pb.size() &&
         pa[common] == pb[common]) {
    ++common;
  }
  return nodes_[pa[common - 1]].name;
}

TreeDistance LanguageTree::distance(std::string_view a,
                                    std::string_view b) const {
  TreeDistance d;
  d.lca_name = lca(a, b);
  d.depth_a = depth(a);
  d.depth_b = depth(b);
  d.depth_lca = depth(d.lca_name);
  d.value = d.depth_a + d.depth_b - 2 * d.depth_lca;
  return d;
}

std::string LanguageTree::serialize() const {
  std::string out;
  for (const Node& n : nodes_) {
    out.append(static_cast<std::size_t>(n.depth), '\t');
    out += n.name;
    out += '\t';
    out += to_string(n.kind);
    out += '\n';
  }
  return out;
}

}  // namespace phonxfer
