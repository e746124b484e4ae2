#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssg::testing {

namespace {

std::vector<VertexId> owned(const Game& g, Kind owner) {
  std::vector<VertexId> out;
  for (VertexId x = 0; x < g.size(); ++x) {
    if (g.kind(x) == owner) out.push_back(x);
  }
  return out;
}

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Arcs of the Markov chain induced by a pair of choices.
std::vector<std::vector<VertexId>> chain(const Game& g, const Choice& mx, const Choice& mn) {
  std::vector<std::vector<VertexId>> out(g.size());
  for (VertexId x = 0; x < g.size(); ++x) {
    switch (g.kind(x)) {
      case Kind::Max: out[x] = {mx[x]}; break;
      case Kind::Min: out[x] = {mn[x]}; break;
      case Kind::Ave: out[x] = g.successors(x); break;
      case Kind::Sink: out[x] = {x}; break;
    }
  }
  return out;
}

std::vector<char> can_reach(const std::vector<std::vector<VertexId>>& arcs, const std::vector<char>& target) {
  const auto n = arcs.size();
  std::vector<char> reach = target;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (reach[x]) continue;
      for (VertexId y : arcs[x]) {
        if (reach[y]) {
          reach[x] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  return reach;
}

}  // namespace

void for_each_choice(const Game& g, Kind owner, const std::function<void(const Choice&)>& f) {
  const auto vs = owned(g, owner);
  std::vector<std::vector<VertexId>> options;
  for (VertexId x : vs) options.push_back(sorted_unique(g.successors(x)));
  Choice c(g.size(), kNoVertex);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vs.size()) {
      f(c);
      return;
    }
    for (VertexId y : options[i]) {
      c[vs[i]] = y;
      rec(i + 1);
    }
  };
  rec(0);
}

std::vector<Rational> naive_evaluate(const Game& g, const Choice& mx, const Choice& mn) {
  const auto n = g.size();
  const auto arcs = chain(g, mx, mn);
  std::vector<char> positive(n, 0);
  for (VertexId x = 0; x < n; ++x) positive[x] = g.is_sink(x) && g.sink_value(x) > 0;
  const auto live = can_reach(arcs, positive);

  // Unknowns: every non-sink vertex that can reach a positive sink.
  std::vector<int> index(n, -1);
  std::vector<VertexId> vars;
  for (VertexId x = 0; x < n; ++x) {
    if (!g.is_sink(x) && live[x]) {
      index[x] = static_cast<int>(vars.size());
      vars.push_back(x);
    }
  }
  const std::size_t m = vars.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    const VertexId x = vars[i];
    a[i][i] += 1;
    const Rational p = g.kind(x) == Kind::Ave ? Rational(1, 2) : Rational(1);
    for (VertexId y : arcs[x]) {
      if (g.is_sink(y)) {
        a[i][m] += p * g.sink_value(y);
      } else if (index[y] >= 0) {
        a[i][static_cast<std::size_t>(index[y])] -= p;
      }
    }
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw std::runtime_error("naive_evaluate: singular system");
    std::swap(a[piv], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& e : a[col]) e *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = col; k <= m; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> w(n, Rational(0));
  for (VertexId x = 0; x < n; ++x) {
    if (g.is_sink(x)) w[x] = g.sink_value(x);
  }
  for (std::size_t i = 0; i < m; ++i) w[vars[i]] = a[i][m];
  return w;
}

std::vector<Rational> brute_values(const Game& g) {
  std::vector<Rational> best;
  for_each_choice(g, Kind::Max, [&](const Choice& mx) {
    std::vector<Rational> worst;
    for_each_choice(g, Kind::Min, [&](const Choice& mn) {
      const auto v = naive_evaluate(g, mx, mn);
      if (worst.empty()) {
        worst = v;
      } else {
        for (std::size_t i = 0; i < v.size(); ++i) worst[i] = std::min(worst[i], v[i]);
      }
    });
    if (best.empty()) {
      best = worst;
    } else {
      for (std::size_t i = 0; i < worst.size(); ++i) best[i] = std::max(best[i], worst[i]);
    }
  });
  return best;
}

bool brute_stopping(const Game& g) {
  bool ok = true;
  std::vector<char> sinks(g.size(), 0);
  for (VertexId x = 0; x < g.size(); ++x) sinks[x] = g.is_sink(x);
  for_each_choice(g, Kind::Max, [&](const Choice& mx) {
    if (!ok) return;
    for_each_choice(g, Kind::Min, [&](const Choice& mn) {
      if (!ok) return;
      // A finite chain is absorbed with probability 1 exactly when every
      // state can reach an absorbing one.
      const auto reach = can_reach(chain(g, mx, mn), sinks);
      ok = std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
    });
  });
  return ok;
}

std::vector<std::set<VertexId>> simple_cycles(const Game& g) {
  std::vector<std::set<VertexId>> out;
  const auto n = static_cast<VertexId>(g.size());
  std::vector<VertexId> path;
  std::vector<char> on_path(n, 0);
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId v) {
    for (VertexId w : sorted_unique(g.successors(v))) {
      if (g.is_sink(w) || w < start) continue;
      if (w == start) {
        out.emplace_back(path.begin(), path.end());
      } else if (!on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        dfs(start, w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    if (g.is_sink(s)) continue;
    path = {s};
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
  return out;
}

std::size_t brute_min_fvs(const Game& g) {
  const auto cycles = simple_cycles(g);
  const auto n = g.size();
  std::size_t best = n;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    const bool hits = std::all_of(cycles.begin(), cycles.end(), [&](const std::set<VertexId>& c) {
      return std::any_of(c.begin(), c.end(), [&](VertexId v) { return (mask >> v) & 1; });
    });
    if (hits) best = size;
  }
  return best;
}

std::vector<Rational> fractions_in(const Rational& lo, const Rational& hi, long max_den) {
  std::set<Rational> out;
  for (long b = 1; b <= max_den; ++b) {
    // a ranges over ceil(lo*b) .. floor(hi*b); values here stay small.
    const long first = static_cast<long>(std::ceil(static_cast<double>(lo * b))) - 1;
    const long last = static_cast<long>(std::floor(static_cast<double>(hi * b))) + 1;
    for (long a = first; a <= last; ++a) {
      const Rational r(a, b);
      if (r >= lo && r <= hi) out.insert(r);
    }
  }
  return {out.begin(), out.end()};
}

ValueVector to_vector(const std::vector<Rational>& v) {
  ValueVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

}  // namespace ssg::testing
