#include "ssg/generator.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <vector>

#include "ssg/errors.hpp"
#include "ssg/eval.hpp"

namespace ssg {

namespace {

// mt19937_64 is fully specified; the standard distributions are not, so the
// draws are done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % n;
  }
  VertexId in(std::size_t lo, std::size_t hi) {  // [lo, hi)
    return static_cast<VertexId>(lo + below(hi - lo));
  }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

Kind draw_kind(Rng& rng, const Proportions& p, bool allow_sink) {
  const double weights[4] = {p.max, p.min, p.ave, allow_sink ? p.sink : 0.0};
  double total = 0;
  for (double w : weights) total += std::max(w, 0.0);
  if (total <= 0) throw InputError("generator proportions must have a positive entry");
  double r = rng.unit() * total;
  for (int i = 0; i < 4; ++i) {
    r -= std::max(weights[i], 0.0);
    if (r < 0) return static_cast<Kind>(i);
  }
  return allow_sink ? Kind::Sink : Kind::Ave;
}

Rational draw_sink_value(Rng& rng) {
  const auto den = static_cast<long>(1 + rng.below(4));
  const auto num = static_cast<long>(rng.below(static_cast<std::uint64_t>(den) + 1));
  return Rational(num, den);
}

Vertex make_sink(Rng& rng, VertexId self) { return Vertex{Kind::Sink, draw_sink_value(rng), {self}}; }

void sort_unique(std::vector<VertexId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Game random_game(const GeneratorSpec& s, Rng& rng) {
  const auto n = s.n;
  if (n == 0) throw InputError("RANDOM needs n >= 1");
  std::vector<Kind> kinds(n);
  bool has_sink = false;
  for (auto& k : kinds) {
    k = draw_kind(rng, s.proportions, true);
    has_sink = has_sink || k == Kind::Sink;
  }
  if (!has_sink) kinds[n - 1] = Kind::Sink;
  std::vector<Vertex> vs(n);
  for (VertexId x = 0; x < n; ++x) {
    if (kinds[x] == Kind::Sink) {
      vs[x] = make_sink(rng, x);
    } else if (kinds[x] == Kind::Ave) {
      vs[x] = Vertex{Kind::Ave, Rational(0), {rng.in(0, n), rng.in(0, n)}};
    } else {
      Vertex v{kinds[x], Rational(0), {}};
      const auto d = 1 + rng.below(3);
      for (std::uint64_t i = 0; i < d; ++i) v.successors.push_back(rng.in(0, n));
      sort_unique(v.successors);
      vs[x] = std::move(v);
    }
  }
  return Game(std::move(vs));
}

Game acyclic_game(const GeneratorSpec& s, Rng& rng) {
  const auto n = s.n;
  if (n == 0) throw InputError("ACYCLIC needs n >= 1");
  std::vector<Vertex> vs(n);
  for (VertexId x = 0; x < n; ++x) {
    const Kind k = x + 1 == n ? Kind::Sink : draw_kind(rng, s.proportions, true);
    if (k == Kind::Sink) {
      vs[x] = make_sink(rng, x);
    } else if (k == Kind::Ave) {
      vs[x] = Vertex{Kind::Ave, Rational(0), {rng.in(x + 1, n), rng.in(x + 1, n)}};
    } else {
      Vertex v{k, Rational(0), {}};
      const auto d = 1 + rng.below(3);
      for (std::uint64_t i = 0; i < d; ++i) v.successors.push_back(rng.in(x + 1, n));
      sort_unique(v.successors);
      vs[x] = std::move(v);
    }
  }
  return Game(std::move(vs));
}

// Non-sinks take ids [0, c), sinks [c, n). Returns c and the cycle successor
// of each non-sink along a random Hamiltonian cycle.
struct Backbone {
  std::size_t c = 0;
  std::vector<VertexId> next;
  std::vector<Kind> kinds;
};

Backbone backbone(const GeneratorSpec& s, Rng& rng, const char* family) {
  if (s.n < 2) throw InputError(std::string(family) + " needs n >= 2");
  std::size_t sinks = 0;
  for (std::size_t i = 0; i < s.n; ++i) {
    if (draw_kind(rng, s.proportions, true) == Kind::Sink) ++sinks;
  }
  sinks = std::clamp<std::size_t>(sinks, 1, s.n - 1);
  Backbone b;
  b.c = s.n - sinks;
  std::vector<VertexId> order(b.c);
  for (VertexId i = 0; i < b.c; ++i) order[i] = i;
  rng.shuffle(order);
  b.next.assign(b.c, 0);
  for (std::size_t i = 0; i < b.c; ++i) b.next[order[i]] = order[(i + 1) % b.c];
  b.kinds.resize(b.c);
  for (auto& k : b.kinds) k = draw_kind(rng, s.proportions, false);
  return b;
}

Game single_cycle_game(const GeneratorSpec& s, Rng& rng) {
  const Backbone b = backbone(s, rng, "SINGLE_CYCLE");
  const auto n = s.n;
  std::vector<Vertex> vs(n);
  bool leaks = false;
  for (VertexId x = 0; x < b.c; ++x) {
    const VertexId nx = b.next[x];
    if (b.kinds[x] == Kind::Ave) {
      if (rng.chance(0.9)) {
        vs[x] = Vertex{Kind::Ave, Rational(0), {nx, rng.in(b.c, n)}};
        if (rng.chance(0.5)) std::swap(vs[x].successors[0], vs[x].successors[1]);
        leaks = true;
      } else {
        vs[x] = Vertex{Kind::Ave, Rational(0), {nx, nx}};
      }
    } else {
      Vertex v{b.kinds[x], Rational(0), {nx}};
      const auto escapes = rng.below(3);
      for (std::uint64_t i = 0; i < escapes; ++i) v.successors.push_back(rng.in(b.c, n));
      sort_unique(v.successors);
      vs[x] = std::move(v);
    }
  }
  if (!leaks) {
    const VertexId x = rng.in(0, b.c);
    vs[x] = Vertex{Kind::Ave, Rational(0), {b.next[x], rng.in(b.c, n)}};
  }
  for (VertexId x = static_cast<VertexId>(b.c); x < n; ++x) vs[x] = make_sink(rng, x);
  return Game(std::move(vs));
}

Game max_acyclic_game(const GeneratorSpec& s, Rng& rng) {
  const Backbone b = backbone(s, rng, "MAX_ACYCLIC");
  const auto n = s.n;
  std::vector<Vertex> vs(n);
  for (VertexId x = 0; x < b.c; ++x) {
    const VertexId nx = b.next[x];
    switch (b.kinds[x]) {
      case Kind::Max: {
        Vertex v{Kind::Max, Rational(0), {nx}};
        const auto escapes = rng.below(3);
        for (std::uint64_t i = 0; i < escapes; ++i) v.successors.push_back(rng.in(b.c, n));
        sort_unique(v.successors);
        vs[x] = std::move(v);
        break;
      }
      case Kind::Min: {
        Vertex v{Kind::Min, Rational(0), {nx}};
        const auto extra = rng.below(3);
        for (std::uint64_t i = 0; i < extra; ++i) v.successors.push_back(rng.in(0, b.c));
        if (rng.chance(0.5)) v.successors.push_back(rng.in(b.c, n));
        sort_unique(v.successors);
        vs[x] = std::move(v);
        break;
      }
      default:
        vs[x] = Vertex{Kind::Ave, Rational(0), {nx, rng.in(0, n)}};
        break;
    }
  }
  for (VertexId x = static_cast<VertexId>(b.c); x < n; ++x) vs[x] = make_sink(rng, x);

  // Break sink-free traps one vertex at a time: an AVE keeps its cycle arc
  // and leaks to a sink; otherwise a positional vertex becomes such an AVE.
  // Neither change adds a MAX cycle arc.
  Game g(std::move(vs));
  while (true) {
    const StoppingReport r = check_stopping(g);
    if (r.stopping) break;
    VertexId pick = kNoVertex;
    for (VertexId x : r.witness) {
      if (g.kind(x) == Kind::Ave) {
        pick = x;
        break;
      }
    }
    if (pick == kNoVertex) pick = r.witness[rng.below(r.witness.size())];
    g.vertex(pick) = Vertex{Kind::Ave, Rational(0), {b.next[pick], rng.in(b.c, n)}};
  }
  return g;
}

Game dag_plus_k_game(const GeneratorSpec& s, Rng& rng) {
  const auto n = s.n, k = s.k;
  if (n < 2 * k + 1) throw InputError("DAG_PLUS_K needs n >= 2k + 1");
  const std::size_t m = n - 2 * k;
  auto h = [&](std::size_t j) { return static_cast<VertexId>(m + 2 * j); };
  std::vector<Vertex> vs(n);
  for (VertexId x = 0; x < m; ++x) {
    const Kind kind = x + 1 == m ? Kind::Sink : draw_kind(rng, s.proportions, true);
    if (kind == Kind::Sink) {
      vs[x] = make_sink(rng, x);
    } else if (kind == Kind::Ave) {
      // Only AVE vertices point back, and their other arc moves forward.
      const VertexId back = k > 0 && rng.chance(0.4) ? h(rng.below(k)) : rng.in(x + 1, m);
      vs[x] = Vertex{Kind::Ave, Rational(0), {back, rng.in(x + 1, m)}};
    } else {
      Vertex v{kind, Rational(0), {}};
      const auto d = 1 + rng.below(3);
      for (std::uint64_t i = 0; i < d; ++i) v.successors.push_back(rng.in(x + 1, m));
      sort_unique(v.successors);
      vs[x] = std::move(v);
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    const VertexId hj = h(j), uj = hj + 1;
    const Kind kind = draw_kind(rng, s.proportions, false);
    if (kind == Kind::Ave) {
      vs[hj] = Vertex{Kind::Ave, Rational(0), {uj, rng.in(0, m)}};
    } else {
      Vertex v{kind, Rational(0), {uj}};
      const auto d = 1 + rng.below(2);
      for (std::uint64_t i = 0; i < d; ++i) v.successors.push_back(rng.in(0, m));
      sort_unique(v.successors);
      vs[hj] = std::move(v);
    }
    vs[uj] = Vertex{Kind::Ave, Rational(0), {hj, rng.in(0, m)}};
  }
  return Game(std::move(vs));
}

Game caterpillar_game(std::size_t n) {
  if (n == 0) throw InputError("CATERPILLAR needs n >= 1");
  Game g;
  const auto zero = static_cast<VertexId>(n), one = static_cast<VertexId>(n + 1);
  for (VertexId i = 0; i < n; ++i) g.add_ave(zero, i + 1 < n ? i + 1 : one);
  g.add_sink(Rational(0));
  g.add_sink(Rational(1));
  return g;
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::Random: return "RANDOM";
    case Family::Acyclic: return "ACYCLIC";
    case Family::SingleCycle: return "SINGLE_CYCLE";
    case Family::MaxAcyclic: return "MAX_ACYCLIC";
    case Family::DagPlusK: return "DAG_PLUS_K";
    case Family::Caterpillar: return "CATERPILLAR";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Family f : {Family::Random, Family::Acyclic, Family::SingleCycle, Family::MaxAcyclic,
                   Family::DagPlusK, Family::Caterpillar}) {
    if (upper == to_string(f)) return f;
  }
  throw InputError("unknown family '" + std::string(name) + "'");
}

Game generate(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::Random: return random_game(spec, rng);
    case Family::Acyclic: return acyclic_game(spec, rng);
    case Family::SingleCycle: return single_cycle_game(spec, rng);
    case Family::MaxAcyclic: return max_acyclic_game(spec, rng);
    case Family::DagPlusK: return dag_plus_k_game(spec, rng);
    case Family::Caterpillar: return caterpillar_game(spec.n);
  }
  throw InputError("unknown family");
}

}  // namespace ssg
