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

// Independent reference implementations used by unit and acceptance tests.
// Deliberately naive; none of them call into the library under test.

#ifndef PHONXFER_TESTS_ORACLES_H_
#define PHONXFER_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// Plain memoized recursion over suffixes.
inline std::size_t edit_distance(const std::u32string& a,
                                 const std::u32string& b) {
  std::vector<std::vector<int>> memo(a.size() + 1,
                                     std::vector<int>(b.size() + 1, -1));
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> int {
    if (i == a.size()) return static_cast<int>(b.size() - j);
    if (j == b.size()) return static_cast<int>(a.size() - i);
    int& m = memo[i][j];
    if (m >= 0) return m;
    int best = self(self, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
    best = std::min(best, self(self, i + 1, j) + 1);
    best = std::min(best, self(self, i, j + 1) + 1);
    return m = best;
  };
  return static_cast<std::size_t>(rec(rec, 0, 0));
}

// Textbook angular similarity from raw counts via arccos.
inline double angular(const std::map<std::string, double>& a,
                      const std::map<std::string, double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (const auto& [k, v] : a) {
    na += v * v;
    auto it = b.find(k);
    if (it != b.end()) dot += v * it->second;
  }
  for (const auto& [k, v] : b) nb += v * v;
  double c = dot / (std::sqrt(na) * std::sqrt(nb));
  c = std::clamp(c, -1.0, 1.0);
  return 1.0 - 2.0 * std::acos(c) / kPi;
}

// Undirected BFS path lengths from `from` over a parent array.
inline std::vector<int> bfs(const std::vector<int>& parent, int from) {
  const int n = static_cast<int>(parent.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      adj[i].push_back(parent[i]);
      adj[parent[i]].push_back(i);
    }
  }
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

// Random tree: parent[i] < i, rendered in the tab-indented format.
struct RandomTree {
  std::vector<int> parent;
  std::vector<std::string> names;
  std::string text;
};

inline RandomTree random_tree(std::mt19937_64& rng, int n) {
  RandomTree t;
  t.parent.assign(n, -1);
  for (int i = 1; i < n; ++i) {
    t.parent[i] = std::uniform_int_distribution<int>(0, i - 1)(rng);
  }
  std::vector<std::vector<int>> kids(n);
  for (int i = 1; i < n; ++i) kids[t.parent[i]].push_back(i);
  for (int i = 0; i < n; ++i) t.names.push_back("N" + std::to_string(i));
  auto emit = [&](auto&& self, int u, int depth) -> void {
    t.text += std::string(depth, '\t') + t.names[u] + "\n";
    for (int v : kids[u]) self(self, v, depth + 1);
  };
  emit(emit, 0, 0);
  return t;
}

// Phonemized utterances as plain phone lists.
using Utts = std::vector<std::vector<std::string>>;
using Features = std::map<std::string, std::vector<char>>;

inline std::map<std::string, double> neighbours(const Utts& utts,
                                                const std::string& phone,
                                                int offset) {
  std::map<std::string, double> out;
  for (const auto& u : utts) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != phone) continue;
      long j = static_cast<long>(i) + offset;
      if (j < 0 || j >= static_cast<long>(u.size())) continue;
      out[u[j]] += 1;
    }
  }
  return out;
}

inline double side_score(const std::map<std::string, double>& a,
                         const std::map<std::string, double>& b) {
  if (a.empty() || b.empty()) return 0.0;
  return angular(a, b);
}

struct OracleEntry {
  std::string source;
  int similarity = 0;
  bool self = false;
};

// Lexicographic max of (similarity, averaged context score, -codepoint)
// over all source phones. Skip mode only. Averages closer than `tol` tie.
inline std::map<std::string, OracleEntry> mapping(const Utts& target,
                                                  const Utts& source,
                                                  const Features& feats,
                                                  double tol = 1e-9) {
  std::map<std::string, int> tinv, sinv;
  for (const auto& u : target)
    for (const auto& p : u) tinv[p]++;
  for (const auto& u : source)
    for (const auto& p : u) sinv[p]++;
  std::map<std::string, OracleEntry> out;
  for (const auto& [t, n] : tinv) {
    OracleEntry e;
    if (sinv.count(t)) {
      e = {t, static_cast<int>(feats.at(t).size()), true};
      out[t] = e;
      continue;
    }
    struct Cand {
      std::string s;
      int sim;
      double avg;
    };
    std::vector<Cand> cands;
    for (const auto& [s, m] : sinv) {
      int sim = 0;
      for (std::size_t k = 0; k < feats.at(t).size(); ++k) {
        sim += feats.at(t)[k] == feats.at(s)[k];
      }
      double f = side_score(neighbours(target, t, -1), neighbours(source, s, -1));
      double b = side_score(neighbours(target, t, 1), neighbours(source, s, 1));
      cands.push_back({s, sim, (f + b) / 2});
    }
    int top = 0;
    for (const auto& c : cands) top = std::max(top, c.sim);
    double top_avg = -1.0;
    for (const auto& c : cands) {
      if (c.sim == top) top_avg = std::max(top_avg, c.avg);
    }
    int count_top = 0;
    for (const auto& c : cands) count_top += c.sim == top;
    // Candidates are in codepoint order, so the first qualifier wins.
    const Cand* best = nullptr;
    for (const auto& c : cands) {
      if (c.sim != top) continue;
      if (count_top > 1 && c.avg < top_avg - tol) continue;
      best = &c;
      break;
    }
    e.source = best->s;
    e.similarity = top;
    out[t] = e;
  }
  return out;
}

}  // namespace oracle

#endif  // PHONXFER_TESTS_ORACLES_H_
