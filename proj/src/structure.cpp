#include "ssg/structure.hpp"

#include <algorithm>
#include <map>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

// Tarjan's algorithm with an explicit stack; sinks have no out-arcs here.
// Returns components in emission order (reverse topological).
std::vector<std::vector<VertexId>> tarjan(const Game& game) {
  const auto n = game.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> out;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::size_t counter = 0;

  auto arcs = [&](VertexId v) -> const std::vector<VertexId>& {
    static const std::vector<VertexId> none;
    return game.is_sink(v) ? none : game.successors(v);
  };

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = arcs(f.v);
      if (f.next < succ.size()) {
        const VertexId w = succ[f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace

StructureReport analyze(const Game& game) {
  const auto n = game.size();
  StructureReport r;
  auto emitted = tarjan(game);
  const auto c = emitted.size();
  r.components.resize(c);
  r.scc_of.assign(n, 0);
  for (std::size_t e = 0; e < c; ++e) {
    const std::size_t id = c - 1 - e;
    for (VertexId v : emitted[e]) r.scc_of[v] = id;
    r.components[id] = std::move(emitted[e]);
  }
  r.component_cyclic.assign(c, false);
  for (std::size_t id = 0; id < c; ++id) {
    const auto& comp = r.components[id];
    if (comp.size() > 1) {
      r.component_cyclic[id] = true;
    } else if (!game.is_sink(comp[0])) {
      const auto& succ = game.successors(comp[0]);
      r.component_cyclic[id] = std::find(succ.begin(), succ.end(), comp[0]) != succ.end();
    }
  }

  r.condensation.assign(c, {});
  r.cycle_outdegree.assign(n, 0);
  for (VertexId x = 0; x < n; ++x) {
    if (game.is_sink(x)) continue;
    for (VertexId y : distinct_successors(game, x)) {
      if (r.scc_of[x] != r.scc_of[y]) {
        r.condensation[r.scc_of[x]].push_back(r.scc_of[y]);
      } else if (r.component_cyclic[r.scc_of[x]]) {
        r.cycle_arcs.push_back({x, y});
        ++r.cycle_outdegree[x];
      }
    }
  }
  for (auto& succ : r.condensation) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }

  for (VertexId x = 0; x < n; ++x) {
    const std::size_t d = r.cycle_outdegree[x];
    const Kind k = game.kind(x);
    if (is_positional(k)) {
      if (d >= 2) r.fork_positional.emplace_back(x, d);
      if (d >= 2) r.k_p += d - 1;
      if (d >= 2 && k == Kind::Max) r.is_max_acyclic = false;
      if (d >= 2 && k == Kind::Min) r.is_min_acyclic = false;
    } else if (k == Kind::Ave && d >= 2) {
      r.fork_average.push_back(x);
      r.k_a += d - 1;
    }
  }
  r.is_acyclic = r.cycle_arcs.empty();
  r.is_pos_acyclic = r.is_max_acyclic && r.is_min_acyclic;
  r.is_almost_acyclic = r.k_p == 0 && r.k_a == 0;

  std::size_t non_sink_components = 0;
  for (const auto& comp : r.components) {
    if (!game.is_sink(comp[0])) ++non_sink_components;
  }
  r.is_strongly_connected = non_sink_components == 1;
  return r;
}

ComponentGame component_game(const Game& game, const StructureReport& report,
                             std::size_t component, const ValueVector* solved) {
  ComponentGame cg;
  cg.component = component;
  const auto& members = report.components[component];
  cg.members = members.size();
  cg.global = members;
  std::map<VertexId, VertexId> local;
  for (VertexId i = 0; i < members.size(); ++i) local[members[i]] = i;

  std::vector<VertexId> frontier;
  for (VertexId x : members) {
    if (game.is_sink(x)) continue;
    for (VertexId y : game.successors(x)) {
      if (report.scc_of[y] != component) frontier.push_back(y);
    }
  }
  std::sort(frontier.begin(), frontier.end());
  frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
  for (VertexId y : frontier) {
    local[y] = static_cast<VertexId>(cg.global.size());
    cg.global.push_back(y);
  }

  std::vector<Vertex> vertices;
  vertices.reserve(cg.global.size());
  for (VertexId i = 0; i < cg.global.size(); ++i) {
    const VertexId g = cg.global[i];
    if (i < cg.members) {
      Vertex v = game.vertex(g);
      for (VertexId& y : v.successors) y = local.at(y);
      vertices.push_back(std::move(v));
    } else {
      Rational value = game.is_sink(g) ? game.sink_value(g)
                       : solved != nullptr ? (*solved)(g)
                                           : Rational(0);
      vertices.push_back(Vertex{Kind::Sink, std::move(value), {i}});
    }
  }
  cg.game = Game(std::move(vertices));
  return cg;
}

void fill_frontier(ComponentGame& cg, const ValueVector& solved) {
  for (std::size_t i = cg.members; i < cg.global.size(); ++i) {
    cg.game.vertex(static_cast<VertexId>(i)).value = solved(cg.global[i]);
  }
}

std::vector<ComponentGame> scc_subgames(const Game& game) {
  const StructureReport report = analyze(game);
  std::vector<ComponentGame> out;
  out.reserve(report.components.size());
  for (std::size_t id = report.components.size(); id-- > 0;) {
    out.push_back(component_game(game, report, id));
  }
  return out;
}

namespace {

bool acyclic_without(const Game& game, const std::vector<char>& removed) {
  const auto n = game.size();
  std::vector<std::size_t> indegree(n, 0);
  auto live = [&](VertexId v) { return !game.is_sink(v) && !removed[v]; };
  for (VertexId x = 0; x < n; ++x) {
    if (!live(x)) continue;
    for (VertexId y : game.successors(x)) {
      if (live(y)) ++indegree[y];
    }
  }
  std::vector<VertexId> ready;
  std::size_t live_count = 0;
  for (VertexId x = 0; x < n; ++x) {
    if (!live(x)) continue;
    ++live_count;
    if (indegree[x] == 0) ready.push_back(x);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const VertexId x = ready.back();
    ready.pop_back();
    ++seen;
    for (VertexId y : game.successors(x)) {
      if (live(y) && --indegree[y] == 0) ready.push_back(y);
    }
  }
  return seen == live_count;
}

}  // namespace

bool is_feedback_vertex_set(const Game& game, std::span<const VertexId> removed) {
  std::vector<char> mask(game.size(), 0);
  for (VertexId x : removed) {
    if (x >= game.size()) throw InputError("vertex " + std::to_string(x) + " out of range");
    mask[x] = 1;
  }
  return acyclic_without(game, mask);
}

std::optional<std::vector<VertexId>> feedback_vertex_set(const Game& game, std::size_t k_max) {
  // A minimum set only ever contains vertices that lie on some cycle.
  const StructureReport report = analyze(game);
  std::vector<VertexId> candidates;
  for (VertexId x = 0; x < game.size(); ++x) {
    if (!game.is_sink(x) && report.component_cyclic[report.scc_of[x]]) candidates.push_back(x);
  }
  std::vector<char> mask(game.size(), 0);
  const std::size_t limit = std::min(k_max, candidates.size());
  for (std::size_t size = 0; size <= limit; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      for (std::size_t i : pick) mask[candidates[i]] = 1;
      const bool ok = acyclic_without(game, mask);
      for (std::size_t i : pick) mask[candidates[i]] = 0;
      if (ok) {
        std::vector<VertexId> out;
        for (std::size_t i : pick) out.push_back(candidates[i]);
        return out;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == candidates.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace ssg
