#include "sgp/green.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sgp/kernels.hpp"

namespace sgp {

namespace {

// Iterative Tarjan; returns component id per node (ids in discovery order).
std::vector<int> scc_partition(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack_pos;
  std::vector<char> on_stack(n, 0);
  int counter = 0, comps = 0;

  struct Frame {
    int node;
    std::size_t edge;
  };
  std::vector<Frame> call;
  std::vector<int> tarjan_stack;

  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) {
      continue;
    }
    call.push_back({root, 0});
    num[root] = low[root] = counter++;
    tarjan_stack.push_back(root);
    on_stack[root] = 1;

    while (!call.empty()) {
      auto& frame = call.back();
      int const v = frame.node;
      if (frame.edge < adj[v].size()) {
        int const w = adj[v][frame.edge++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          tarjan_stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            int const w = tarjan_stack.back();
            tarjan_stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
        call.pop_back();
        if (!call.empty()) {
          int const parent = call.back().node;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  return comp;
}

}  // namespace

bool r_leq(const FiniteSemigroup& s, int a, int b) {
  if (a == b) {
    return true;
  }
  for (int x = 0; x < s.order(); ++x) {
    if (s.product(b, x) == a) {
      return true;
    }
  }
  return false;
}

RPoset r_poset(const FiniteSemigroup& s) {
  int const n = s.order();
  auto const ideals = n >= 64 ? kernels::right_ideal_sets_parallel(s)
                              : kernels::right_ideal_sets_serial(s);

  // Route 1: partition by equality of the sets aS^1.
  std::vector<int> class_by_sets(n, -1);
  {
    std::map<std::vector<std::uint64_t>, int> seen;
    for (int a = 0; a < n; ++a) {
      std::vector<std::uint64_t> row(
          ideals.bits.begin() + static_cast<std::size_t>(a) * ideals.words_per_row,
          ideals.bits.begin()
              + static_cast<std::size_t>(a + 1) * ideals.words_per_row);
      auto [it, fresh] = seen.emplace(std::move(row), -1);
      if (fresh) {
        it->second = a;  // keep the first representative, renumber below
      }
      class_by_sets[a] = it->second;
    }
  }

  // Route 2: SCCs of the right Cayley graph a -> as.
  std::vector<std::vector<int>> adj(n);
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
      int const ax = s.product(a, x);
      if (!seen[ax] && ax != a) {
        seen[ax] = 1;
        adj[a].push_back(ax);
      }
    }
  }
  auto const scc = scc_partition(n, adj);

  // Cross-validation: the two routes must induce the same partition.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool const same_sets = class_by_sets[a] == class_by_sets[b];
      bool const same_scc = scc[a] == scc[b];
      if (same_sets != same_scc) {
        throw std::logic_error("r_poset: SCC and right-ideal partitions disagree");
      }
    }
  }

  RPoset poset;
  poset.n_elements = n;
  poset.class_of.assign(n, -1);
  // Canonical ids: classes ordered by smallest member.
  for (int a = 0; a < n; ++a) {
    if (class_by_sets[a] == a) {
      poset.class_of[a] = static_cast<int>(poset.classes.size());
      poset.classes.push_back({});
    }
  }
  for (int a = 0; a < n; ++a) {
    int const rep = class_by_sets[a];
    poset.class_of[a] = poset.class_of[rep];
    poset.classes[poset.class_of[a]].push_back(a);
  }

  int const m = poset.num_classes();
  poset.leq.assign(m, std::vector<char>(m, 0));
  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < m; ++d) {
      poset.leq[c][d] =
          ideals.row_subset(poset.classes[c][0], poset.classes[d][0]) ? 1 : 0;
    }
  }

  // Cross-validation: containment order equals condensation reachability.
  {
    std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
    for (int c = 0; c < m; ++c) {
      reach[c][c] = 1;
    }
    // reach[d][c] = class c reachable from class d in the Cayley graph means
    // (members of c) are in (members of d)S^1, i.e. c <= d.
    for (int d = 0; d < m; ++d) {
      std::vector<int> queue{poset.classes[d][0]};
      std::vector<char> seen(n, 0);
      seen[poset.classes[d][0]] = 1;
      while (!queue.empty()) {
        int const v = queue.back();
        queue.pop_back();
        reach[d][poset.class_of[v]] = 1;
        for (int w : adj[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    for (int c = 0; c < m; ++c) {
      for (int d = 0; d < m; ++d) {
        if ((poset.leq[c][d] != 0) != (reach[d][c] != 0)) {
          throw std::logic_error(
              "r_poset: containment order and reachability disagree");
        }
      }
    }
  }

  // Antisymmetry is structural (distinct classes have distinct sets); check
  // it anyway, the one-time cost is negligible.
  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < m; ++d) {
      if (c != d && poset.leq[c][d] && poset.leq[d][c]) {
        throw std::logic_error("r_poset: order not antisymmetric");
      }
    }
  }

  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < m; ++d) {
      if (!poset.strictly_below(c, d)) {
        continue;
      }
      bool cover = true;
      for (int e = 0; e < m && cover; ++e) {
        if (e != c && e != d && poset.strictly_below(c, e)
            && poset.strictly_below(e, d)) {
          cover = false;
        }
      }
      if (cover) {
        poset.hasse.emplace_back(c, d);
      }
    }
  }
  std::sort(poset.hasse.begin(), poset.hasse.end());
  return poset;
}

int RPoset::height() const {
  int const m = num_classes();
  std::vector<int> longest(m, 0);
  // leq is transitive, so a DP over classes sorted by number of classes
  // below is a topological order.
  std::vector<int> order(m);
  for (int c = 0; c < m; ++c) {
    order[c] = c;
  }
  auto below_count = [&](int c) {
    int k = 0;
    for (int d = 0; d < m; ++d) {
      if (strictly_below(d, c)) ++k;
    }
    return k;
  };
  std::vector<int> key(m);
  for (int c = 0; c < m; ++c) {
    key[c] = below_count(c);
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return key[a] < key[b]; });
  int best = 0;
  for (int c : order) {
    longest[c] = 1;
    for (int d = 0; d < m; ++d) {
      if (strictly_below(d, c)) {
        longest[c] = std::max(longest[c], longest[d] + 1);
      }
    }
    best = std::max(best, longest[c]);
  }
  return best;
}

namespace {

// Exact maximum independent set on <= 20 vertices, branch and bound.
int max_antichain_small(int m, const std::vector<std::uint32_t>& incomparable) {
  int best = 0;
  // P = candidate set still available.
  std::function<void(std::uint32_t, int)> go = [&](std::uint32_t pool,
                                                   int chosen) {
    if (chosen + __builtin_popcount(pool) <= best) {
      return;
    }
    if (pool == 0) {
      best = std::max(best, chosen);
      return;
    }
    int const v = __builtin_ctz(pool);
    go(pool & incomparable[v], chosen + 1);     // take v
    go(pool & ~(std::uint32_t{1} << v), chosen);  // skip v
  };
  go((m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1), 0);
  return best;
}

// Dilworth via Koenig: maximum antichain = m - maximum matching in the
// bipartite graph of the strict order.
int max_antichain_matching(const RPoset& poset) {
  int const m = poset.num_classes();
  std::vector<std::vector<int>> edges(m);
  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < m; ++d) {
      if (poset.strictly_below(c, d)) {
        edges[c].push_back(d);
      }
    }
  }
  std::vector<int> match_right(m, -1);
  std::vector<char> used;
  std::function<bool(int)> augment = [&](int v) {
    for (int w : edges[v]) {
      if (used[w]) continue;
      used[w] = 1;
      if (match_right[w] == -1 || augment(match_right[w])) {
        match_right[w] = v;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int v = 0; v < m; ++v) {
    used.assign(m, 0);
    if (augment(v)) {
      ++matching;
    }
  }
  return m - matching;
}

}  // namespace

int antichain_width(const RPoset& poset) {
  int const m = poset.num_classes();
  if (m <= 20) {
    std::vector<std::uint32_t> incomparable(m, 0);
    for (int c = 0; c < m; ++c) {
      for (int d = 0; d < m; ++d) {
        if (c != d && !poset.below(c, d) && !poset.below(d, c)) {
          incomparable[c] |= std::uint32_t{1} << d;
        }
      }
    }
    return max_antichain_small(m, incomparable);
  }
  return max_antichain_matching(poset);
}

std::string to_dot(const RPoset& poset, const FiniteSemigroup& s) {
  std::ostringstream out;
  out << "digraph rposet {\n  node [shape=box];\n";
  for (int c = 0; c < poset.num_classes(); ++c) {
    out << "  c" << c << " [label=\"";
    for (std::size_t i = 0; i < poset.classes[c].size(); ++i) {
      if (i) out << ", ";
      out << s.name(poset.classes[c][i]);
    }
    out << "\"];\n";
  }
  for (auto const& [lo, hi] : poset.hasse) {
    out << "  c" << lo << " -> c" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::optional<int> local_right_identity(const FiniteSemigroup& s, int a) {
  for (int b = 0; b < s.order(); ++b) {
    if (s.product(a, b) == a) {
      return b;
    }
  }
  return std::nullopt;
}

bool exists_lri(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    if (local_right_identity(s, a)) {
      return true;
    }
  }
  return false;
}

bool all_have_lri(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    if (!local_right_identity(s, a)) {
      return false;
    }
  }
  return true;
}

bool all_have_lri_within(const FiniteSemigroup& s, const FiniteSubset& within) {
  for (int a : within.members) {
    bool found = false;
    for (int b : within.members) {
      if (s.product(a, b) == a) {
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool is_r_trivial(const FiniteSemigroup& s) {
  auto const poset = r_poset(s);
  return poset.num_classes() == s.order();
}

SubsetCheck is_r_preserving(const FiniteSemigroup& s, const FiniteSubset& t) {
  if (!t.is_closed()) {
    throw std::invalid_argument("is_r_preserving: subset not closed");
  }
  SubsetCheck result;
  result.negative_exhaustive = true;
  result.budget = s.order();
  for (int a : t.members) {
    for (int b : t.members) {
      if (a == b) {
        continue;
      }
      int s_witness = -1;
      for (int x = 0; x < s.order(); ++x) {
        if (s.product(b, x) == a) {
          s_witness = x;
          break;
        }
      }
      if (s_witness == -1) {
        continue;  // a not below b in S
      }
      bool in_t = false;
      for (int u : t.members) {
        if (s.product(b, u) == a) {
          in_t = true;
          break;
        }
      }
      if (!in_t) {
        result.status = SubsetCheck::Status::No;
        result.witness = {Term::fin(a), Term::fin(b), Term::fin(s_witness)};
        return result;
      }
    }
  }
  result.status = SubsetCheck::Status::Yes;
  return result;
}

SubsetCheck is_right_unitary(const FiniteSemigroup& s, const FiniteSubset& t) {
  if (!t.is_closed()) {
    throw std::invalid_argument("is_right_unitary: subset not closed");
  }
  SubsetCheck result;
  result.negative_exhaustive = true;
  result.budget = s.order();
  for (int a : t.members) {
    for (int b = 0; b < s.order(); ++b) {
      if (t.contains(s.product(a, b)) && !t.contains(b)) {
        result.status = SubsetCheck::Status::No;
        result.witness = {Term::fin(a), Term::fin(b)};
        return result;
      }
    }
  }
  result.status = SubsetCheck::Status::Yes;
  return result;
}

bool replay_chain(const SymbolicSemigroup& s, const ChainWitness& w) {
  if (w.elements.size() < 2
      || w.multipliers.size() != w.elements.size() - 1) {
    return false;
  }
  for (std::size_t i = 0; i + 1 < w.elements.size(); ++i) {
    if (w.multipliers[i]) {
      if (s.mul(w.elements[i + 1], *w.multipliers[i]) != w.elements[i]) {
        return false;
      }
    } else if (w.elements[i] != w.elements[i + 1]) {
      return false;
    }
  }
  return true;
}

std::optional<ChainWitness> find_ascending_chain(const FiniteSemigroup& s,
                                                 int length) {
  if (length < 2) {
    throw std::invalid_argument("find_ascending_chain: length must be >= 2");
  }
  auto const poset = r_poset(s);
  int const m = poset.num_classes();
  if (poset.height() < length) {
    return std::nullopt;
  }

  // Longest chain ending at each class, then walk one of length `length`
  // downwards, smallest class id first for determinism.
  std::vector<int> longest(m, 0);
  std::vector<int> order(m);
  for (int c = 0; c < m; ++c) order[c] = c;
  std::vector<int> key(m, 0);
  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < m; ++d) {
      if (poset.strictly_below(d, c)) ++key[c];
    }
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return key[a] < key[b]; });
  for (int c : order) {
    longest[c] = 1;
    for (int d = 0; d < m; ++d) {
      if (poset.strictly_below(d, c)) {
        longest[c] = std::max(longest[c], longest[d] + 1);
      }
    }
  }

  int top = -1;
  for (int c = 0; c < m; ++c) {
    if (longest[c] >= length && (top == -1 || longest[c] > longest[top])) {
      top = c;
    }
  }
  std::vector<int> chain_classes{top};
  while (static_cast<int>(chain_classes.size()) < length) {
    int const cur = chain_classes.back();
    for (int d = 0; d < m; ++d) {
      if (poset.strictly_below(d, cur) && longest[d] == longest[cur] - 1) {
        chain_classes.push_back(d);
        break;
      }
    }
  }
  std::reverse(chain_classes.begin(), chain_classes.end());

  ChainWitness w;
  for (int c : chain_classes) {
    w.elements.push_back(Term::fin(poset.classes[c][0]));
  }
  for (int i = 0; i + 1 < length; ++i) {
    int const lower = poset.classes[chain_classes[i]][0];
    int const upper = poset.classes[chain_classes[i + 1]][0];
    std::optional<Term> mult;
    for (int x = 0; x < s.order(); ++x) {
      if (s.product(upper, x) == lower) {
        mult = Term::fin(x);
        break;
      }
    }
    if (!mult) {
      throw std::logic_error("find_ascending_chain: class order without witness");
    }
    w.multipliers.push_back(mult);
    w.strictness.push_back(
        StepEvidence{true, static_cast<std::uint64_t>(s.order())});
  }
  return w;
}

namespace {

// Bounded strict R-order graph.  Nodes are the enumeration prefix,
// optionally closed under right-multiplication by the enumerated
// multipliers (breadth-first, deterministic, capped at 4x budget).
struct BoundedOrder {
  std::vector<Term> nodes;
  std::vector<Term> multipliers;
  // below_witness[u][v] = multiplier index m with nodes[v]*m == nodes[u],
  // or -1.  u <= v within budget iff u == v or below_witness[u][v] >= 0.
  std::vector<std::vector<int>> below_witness;

  bool strict(int u, int v) const {
    return u != v && below_witness[u][v] >= 0 && below_witness[v][u] < 0;
  }
};

BoundedOrder bounded_order(const SymbolicSemigroup& s, std::uint64_t budget,
                           ChainSearchMode mode) {
  BoundedOrder g;
  g.nodes = s.prefix(budget);
  g.multipliers = g.nodes;
  std::map<Term, int> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    index.emplace(g.nodes[i], static_cast<int>(i));
  }

  if (mode == ChainSearchMode::ExpandProducts) {
    std::size_t const cap = g.nodes.size() * 4;
    for (std::size_t v = 0; v < g.nodes.size() && g.nodes.size() < cap; ++v) {
      for (auto const& m : g.multipliers) {
        auto p = s.mul(g.nodes[v], m);
        if (!index.count(p)) {
          index.emplace(p, static_cast<int>(g.nodes.size()));
          g.nodes.push_back(std::move(p));
          if (g.nodes.size() >= cap) {
            break;
          }
        }
      }
    }
  }

  int const n = static_cast<int>(g.nodes.size());
  g.below_witness.assign(n, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) {
    for (std::size_t m = 0; m < g.multipliers.size(); ++m) {
      auto const p = s.mul(g.nodes[v], g.multipliers[m]);
      auto const it = index.find(p);
      if (it != index.end() && g.below_witness[it->second][v] < 0) {
        g.below_witness[it->second][v] = static_cast<int>(m);
      }
    }
  }
  return g;
}

}  // namespace

namespace detail {

std::optional<std::vector<int>> longest_path_chain(
    int n, const std::function<bool(int, int)>& edge, int length) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> indegree(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && edge(u, v)) {
        adj[u][v] = 1;
        ++indegree[v];
      }
    }
  }

  // Kahn's algorithm; a complete order is a topological sort.
  std::vector<int> topo;
  std::vector<int> degree = indegree;
  std::vector<char> emitted(n, 0);
  for (bool progress = true; progress;) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if (!emitted[v] && degree[v] == 0) {
        topo.push_back(v);
        emitted[v] = 1;
        progress = true;
        for (int w = 0; w < n; ++w) {
          if (adj[v][w]) {
            --degree[w];
          }
        }
      }
    }
  }

  if (static_cast<int>(topo.size()) == n) {
    // Exact: longest chain ending at each node.
    std::vector<int> longest(n, 1);
    for (int v : topo) {
      for (int w = 0; w < n; ++w) {
        if (adj[w][v]) {
          longest[v] = std::max(longest[v], longest[w] + 1);
        }
      }
    }
    int end = -1;
    for (int v = 0; v < n; ++v) {
      if (longest[v] >= length) {
        end = v;
        break;
      }
    }
    if (end == -1) {
      return std::nullopt;
    }
    std::vector<int> path{end};
    int need = length - 1;
    while (need > 0) {
      int const cur = path.back();
      for (int w = 0; w < n; ++w) {
        if (adj[w][cur] && longest[w] >= need) {
          path.push_back(w);
          --need;
          break;
        }
      }
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Budget truncation produced an apparent cycle; fall back to capped DFS.
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::uint64_t expansions = 0;
  std::uint64_t const cap = 2'000'000;
  std::function<bool(int)> extend = [&](int v) -> bool {
    path.push_back(v);
    on_path[v] = 1;
    if (static_cast<int>(path.size()) == length) {
      return true;
    }
    for (int w = 0; w < n; ++w) {
      if (on_path[w] || !adj[v][w]) {
        continue;
      }
      if (++expansions > cap) {
        break;
      }
      if (extend(w)) {
        return true;
      }
    }
    on_path[v] = 0;
    path.pop_back();
    return false;
  };
  for (int seed = 0; seed < n; ++seed) {
    if (++expansions > cap) {
      break;
    }
    if (extend(seed)) {
      return path;
    }
  }
  return std::nullopt;
}

}  // namespace detail

std::optional<ChainWitness> find_ascending_chain(const SymbolicSemigroup& s,
                                                 int length,
                                                 std::uint64_t budget,
                                                 ChainSearchMode mode) {
  if (length < 2) {
    throw std::invalid_argument("find_ascending_chain: length must be >= 2");
  }
  if (budget == 0) {
    throw std::invalid_argument("find_ascending_chain: budget must be > 0");
  }
  auto const g = bounded_order(s, budget, mode);
  int const n = static_cast<int>(g.nodes.size());
  auto const path = detail::longest_path_chain(
      n, [&](int u, int v) { return g.strict(u, v); }, length);
  if (!path) {
    return std::nullopt;
  }

  ChainWitness w;
  for (int v : *path) {
    w.elements.push_back(g.nodes[v]);
  }
  for (int i = 0; i + 1 < length; ++i) {
    int const mult = g.below_witness[(*path)[i]][(*path)[i + 1]];
    w.multipliers.push_back(g.multipliers[mult]);
    w.strictness.push_back(StepEvidence{false, budget});
  }
  return w;
}

BoundedFind r_leq_bounded(const SymbolicSemigroup& s, const Term& a,
                          const Term& b, std::uint64_t budget) {
  if (budget == 0) {
    throw std::invalid_argument("r_leq_bounded: budget must be > 0");
  }
  BoundedFind result;
  result.budget = budget;
  if (a == b) {
    result.kind = BoundedFind::Kind::Equal;
    return result;
  }
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto const m = s.at(i);
    if (!m) {
      break;
    }
    if (s.mul(b, *m) == a) {
      result.kind = BoundedFind::Kind::Yes;
      result.witness = *m;
      return result;
    }
  }
  result.kind = BoundedFind::Kind::NoWitnessWithinBudget;
  return result;
}

BoundedFind local_right_identity_bounded(const SymbolicSemigroup& s,
                                         const Term& a, std::uint64_t budget) {
  BoundedFind result;
  result.budget = budget;
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto const b = s.at(i);
    if (!b) {
      break;
    }
    if (s.mul(a, *b) == a) {
      result.kind = BoundedFind::Kind::Yes;
      result.witness = *b;
      return result;
    }
  }
  result.kind = BoundedFind::Kind::NoWitnessWithinBudget;
  return result;
}

LriAggregate exists_lri_bounded(const SymbolicSemigroup& s,
                                std::uint64_t budget) {
  LriAggregate agg;
  agg.budget = budget;
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto const a = s.at(i);
    if (!a) {
      break;
    }
    auto const r = local_right_identity_bounded(s, *a, budget);
    if (r.kind == BoundedFind::Kind::Yes) {
      agg.verdict = Bounded3::True;
      agg.witness = *a;
      return agg;
    }
  }
  agg.verdict = Bounded3::Unknown;
  return agg;
}

LriAggregate all_have_lri_bounded(const SymbolicSemigroup& s,
                                  std::uint64_t budget) {
  LriAggregate agg;
  agg.budget = budget;
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto const a = s.at(i);
    if (!a) {
      // Finite universe exhausted: the claim is exhaustive after all.
      agg.verdict = Bounded3::True;
      return agg;
    }
    auto const r = local_right_identity_bounded(s, *a, budget);
    if (r.kind != BoundedFind::Kind::Yes) {
      agg.verdict = Bounded3::Unknown;
      agg.witness = *a;  // first element with no LRI found within budget
      return agg;
    }
  }
  agg.verdict = Bounded3::True;
  return agg;
}

bool validate_closure(const SymbolicSubsemigroup& t, std::uint64_t budget) {
  std::uint64_t const side = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::sqrt(double(budget))));
  auto const members = t.sub.prefix(side);
  for (auto const& a : members) {
    if (!t.contains(a)) {
      return false;
    }
    for (auto const& b : members) {
      if (!t.contains(t.parent.mul(a, b))) {
        return false;
      }
    }
  }
  return true;
}

SubsetCheck is_r_preserving_bounded(const SymbolicSubsemigroup& t,
                                    std::uint64_t budget) {
  if (!validate_closure(t, budget)) {
    throw std::invalid_argument("is_r_preserving_bounded: subset not closed");
  }
  SubsetCheck result;
  result.budget = budget;
  auto const members = t.sub.prefix(budget);
  auto const s_mults = t.parent.prefix(budget);
  auto const t_mults = members;
  for (auto const& a : members) {
    for (auto const& b : members) {
      if (a == b) {
        continue;
      }
      const Term* s_witness = nullptr;
      for (auto const& x : s_mults) {
        if (t.parent.mul(b, x) == a) {
          s_witness = &x;
          break;
        }
      }
      if (!s_witness) {
        continue;
      }
      bool in_t = false;
      for (auto const& u : t_mults) {
        if (t.parent.mul(b, u) == a) {
          in_t = true;
          break;
        }
      }
      if (!in_t) {
        result.status = SubsetCheck::Status::No;
        result.witness = {a, b, *s_witness};
        return result;
      }
    }
  }
  result.status = SubsetCheck::Status::YesUpToBudget;
  return result;
}

SubsetCheck is_right_unitary_bounded(const SymbolicSubsemigroup& t,
                                     std::uint64_t budget) {
  if (!validate_closure(t, budget)) {
    throw std::invalid_argument("is_right_unitary_bounded: subset not closed");
  }
  SubsetCheck result;
  result.budget = budget;
  auto const members = t.sub.prefix(budget);
  auto const others = t.parent.prefix(budget);
  for (auto const& a : members) {
    for (auto const& b : others) {
      if (t.contains(t.parent.mul(a, b)) && !t.contains(b)) {
        result.status = SubsetCheck::Status::No;
        result.witness = {a, b};
        return result;
      }
    }
  }
  result.status = SubsetCheck::Status::YesUpToBudget;
  return result;
}

LriAggregate all_have_lri_within_bounded(const SymbolicSubsemigroup& t,
                                         std::uint64_t budget) {
  LriAggregate agg;
  agg.budget = budget;
  auto const members = t.sub.prefix(budget);
  for (auto const& a : members) {
    bool found = false;
    for (auto const& b : members) {
      if (t.parent.mul(a, b) == a) {
        found = true;
        break;
      }
    }
    if (!found) {
      agg.verdict = Bounded3::Unknown;
      agg.witness = a;
      return agg;
    }
  }
  agg.verdict = Bounded3::True;
  return agg;
}

}  // namespace sgp
