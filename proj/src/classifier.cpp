#include "gnum/classifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "gnum/arith.hpp"
#include "gnum/cubefree.hpp"

namespace gnum {

namespace {

using Witness = std::map<std::string, std::uint64_t>;

bool all_odd(const HolderGraph& g) {
  for (const auto& v : g.vertices)
    if (v.p == 2) return false;
  return true;
}

int find_vertex(const HolderGraph& g, unsigned exponent) {
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    if (g.vertices[i].a == exponent) return i;
  return -1;
}

/// Smallest j with (1, j) in the profile of a single -> prime-power edge.
int min_order(const EdgeProfile& profile) {
  int best = 1 << 20;
  for (const auto& [i, j] : profile.pairs)
    if (i == 1) best = std::min(best, j);
  return best;
}

void match_square_free(const HolderGraph& g, std::vector<ComponentMatch>& out) {
  const auto& V = g.vertices;
  const int sz = static_cast<int>(V.size());
  const auto& E = g.edges;

  if (sz == 2 && E.size() == 1) {
    out.push_back({2,
                   "P2.ii",
                   {{"p", V[E[0].from].p}, {"q", V[E[0].to].p}}});
  }

  if (sz == 3 && E.size() == 2) {
    int mid = -1, apex = -1;
    for (int v = 0; v < sz; ++v) {
      if (g.in_degree(v) == 1 && g.out_degree(v) == 1) mid = v;
      if (g.out_degree(v) == 2) apex = v;
    }
    if (mid >= 0) {
      int a = -1, c = -1;
      for (const auto& e : E) {
        if (e.to == mid) a = e.from;
        if (e.from == mid) c = e.to;
      }
      out.push_back(
          {3, "P3.ii", {{"p", V[a].p}, {"q", V[mid].p}, {"r", V[c].p}}});
    }
    if (apex >= 0 && V[apex].p == 5) {
      Witness w;
      const char* keys[] = {"q", "r"};
      int k = 0;
      for (const auto& e : E) w[keys[k++]] = V[e.to].p;
      out.push_back({7, "T7.I", std::move(w)});
    }
  }

  if (sz == 3 && E.size() == 3) {
    // Three edges on three vertices: a transitive triangle.
    int apex = -1, mid = -1, sink = -1;
    for (int v = 0; v < sz; ++v) {
      if (g.out_degree(v) == 2) apex = v;
      if (g.in_degree(v) == 1 && g.out_degree(v) == 1) mid = v;
      if (g.in_degree(v) == 2) sink = v;
    }
    if (apex >= 0 && mid >= 0 && sink >= 0) {
      if (V[apex].p == 2)
        out.push_back(
            {6, "T6.II", {{"p", V[mid].p}, {"q", V[sink].p}}});
      if (V[apex].p == 3)
        out.push_back(
            {7, "T7.II", {{"q", V[mid].p}, {"r", V[sink].p}}});
    }
  }

  if (sz == 4 && E.size() == 3) {
    // Q graph: a -> b -> d, c -> d.
    int d = -1, b = -1;
    for (int v = 0; v < sz; ++v) {
      if (g.in_degree(v) == 2 && g.out_degree(v) == 0) d = v;
      if (g.in_degree(v) == 1 && g.out_degree(v) == 1) b = v;
    }
    if (d >= 0 && b >= 0 && g.has_edge(b, d)) {
      int a = -1, c = -1;
      for (const auto& e : E) {
        if (e.to == b) a = e.from;
        if (e.to == d && e.from != b) c = e.from;
      }
      out.push_back({6,
                     "T6.I",
                     {{"p", V[a].p},
                      {"q", V[b].p},
                      {"r", V[d].p},
                      {"s", V[c].p}}});
    }
    // Star with a tail: 3 -> p, 3 -> q, q -> r.
    int apex = -1;
    for (int v = 0; v < sz; ++v)
      if (g.out_degree(v) == 2 && g.in_degree(v) == 0 && V[v].p == 3) apex = v;
    if (apex >= 0) {
      const GraphEdge* tail = nullptr;
      for (const auto& e : E)
        if (e.from != apex) tail = &e;
      if (tail != nullptr && g.has_edge(apex, tail->from) &&
          !g.has_edge(apex, tail->to)) {
        int leaf = -1;
        for (const auto& e : E)
          if (e.from == apex && e.to != tail->from) leaf = e.to;
        out.push_back({7,
                       "T7.III",
                       {{"p", V[leaf].p},
                        {"q", V[tail->from].p},
                        {"r", V[tail->to].p}}});
      }
    }
  }
}

void match_square_single(const HolderGraph& g,
                         std::vector<ComponentMatch>& out) {
  if (g.edges.size() != 1) return;
  const int sq = find_vertex(g, 2);
  const int single = 1 - sq;
  const GraphEdge& e = g.edges[0];
  if (e.from != single || e.to != sq) return;
  const std::uint64_t p = g.vertices[sq].p, q = g.vertices[single].p;
  if (edge_strength(g, e) == Strength::weak) {
    out.push_back({3, "P3.i", {{"p", p}, {"q", q}}});
  } else {
    if (q == 3) out.push_back({6, "T6.III", {{"p", p}}});
    if (q == 5) out.push_back({7, "T7.IV", {{"p", p}}});
  }
}

void match_cube_single(const HolderGraph& g, std::vector<ComponentMatch>& out) {
  if (g.edges.size() != 1) return;
  const int cube = find_vertex(g, 3);
  const int single = 1 - cube;
  const GraphEdge& e = g.edges[0];
  if (e.from != single || e.to != cube) return;
  const std::uint64_t p = g.vertices[cube].p, q = g.vertices[single].p;
  switch (min_order(e.profile)) {
    case 3:  // q | p^3 - 1 but q does not divide p^2 - 1
      out.push_back({6, "T6.IV", {{"p", p}, {"q", q}}});
      break;
    case 2:  // q | p + 1
      out.push_back({7, "T7.V", {{"p", p}, {"q", q}}});
      break;
    default:
      break;
  }
}

void match_two_squares(const HolderGraph& g, std::vector<ComponentMatch>& out) {
  if (g.edges.size() != 1 || !all_odd(g)) return;
  const GraphEdge& e = g.edges[0];
  const std::uint64_t p = g.vertices[e.from].p, q = g.vertices[e.to].p;
  const EdgeProfile weak_pair{{{1, 2}}};          // p || q + 1
  const EdgeProfile square_pair{{{1, 2}, {2, 2}}};  // p^2 | q + 1
  if (e.profile == weak_pair)
    out.push_back({6, "T6.VI", {{"p", p}, {"q", q}}});
  if (e.profile == square_pair)
    out.push_back({7, "T7.VIII", {{"p", p}, {"q", q}}});
}

void match_square_two_singles(const HolderGraph& g,
                              std::vector<ComponentMatch>& out) {
  if (g.edges.size() != 2 || !all_odd(g)) return;
  const int sq = find_vertex(g, 2);
  const std::uint64_t p = g.vertices[sq].p;
  const GraphEdge &e1 = g.edges[0], &e2 = g.edges[1];
  auto touches_square = [&](const GraphEdge& e) {
    return e.from == sq || e.to == sq;
  };

  if (touches_square(e1) && touches_square(e2)) {
    // Lambda_6,II: q => p^2 weak together with p^2 -> r strong.
    const GraphEdge* in = e1.to == sq ? &e1 : e2.to == sq ? &e2 : nullptr;
    const GraphEdge* from = e1.from == sq ? &e1 : e2.from == sq ? &e2 : nullptr;
    if (in != nullptr && from != nullptr &&
        edge_strength(g, *in) == Strength::weak &&
        edge_strength(g, *from) == Strength::strong) {
      out.push_back({6,
                     "T6.V.c",
                     {{"p", p},
                      {"q", g.vertices[in->from].p},
                      {"r", g.vertices[from->to].p}}});
    }
    return;
  }

  const GraphEdge& sq_edge = touches_square(e1) ? e1 : e2;
  const GraphEdge& single_edge = touches_square(e1) ? e2 : e1;
  if (!touches_square(sq_edge) || touches_square(single_edge)) return;

  if (sq_edge.from == sq && sq_edge.to == single_edge.from) {
    // p^2 -> q -> r chains.
    const std::uint64_t qq = g.vertices[single_edge.from].p;
    const std::uint64_t r = g.vertices[single_edge.to].p;
    if (edge_strength(g, sq_edge) == Strength::weak)
      out.push_back({6, "T6.V.a", {{"p", p}, {"q", qq}, {"r", r}}});
    else
      out.push_back({7, "T7.VII", {{"p", p}, {"q", qq}, {"r", r}}});
  }
  if (sq_edge.to == sq && sq_edge.from == single_edge.from &&
      edge_strength(g, sq_edge) == Strength::weak) {
    // M_1(q): q => p^2 weak and q -> r.
    const std::uint64_t qq = g.vertices[sq_edge.from].p;
    const std::uint64_t r = g.vertices[single_edge.to].p;
    if (qq == 3)
      out.push_back({6, "T6.V.b", {{"p", p}, {"r", r}}});
    if (qq == 5)
      out.push_back({7, "T7.VI", {{"p", p}, {"r", r}}});
  }
}

void match_square_three_singles(const HolderGraph& g,
                                std::vector<ComponentMatch>& out) {
  // The only classified shape here is C.3, exactly when the count is 7.
  const CountResult r = count_component(g);
  if (r.exact() && r.value == 7) {
    Witness w{{"p", g.vertices[find_vertex(g, 2)].p}};
    const char* keys[] = {"q", "r", "s"};
    int k = 0;
    for (const auto& v : g.vertices)
      if (v.a == 1) w[keys[k++]] = v.p;
    out.push_back({7, "T7.IX", std::move(w)});
  }
}

}  // namespace

std::vector<ComponentMatch> component_matches(const HolderGraph& g) {
  std::vector<ComponentMatch> out;
  std::vector<unsigned> exps;
  for (const auto& v : g.vertices) exps.push_back(v.a);
  std::sort(exps.begin(), exps.end());

  if (g.square_free())
    match_square_free(g, out);
  else if (exps == std::vector<unsigned>{1, 2})
    match_square_single(g, out);
  else if (exps == std::vector<unsigned>{1, 3})
    match_cube_single(g, out);
  else if (exps == std::vector<unsigned>{2, 2})
    match_two_squares(g, out);
  else if (exps == std::vector<unsigned>{1, 1, 2})
    match_square_two_singles(g, out);
  else if (exps == std::vector<unsigned>{1, 1, 1, 2})
    match_square_three_singles(g, out);
  return out;
}

const std::vector<ClassificationRule>& rules() {
  static const std::vector<ClassificationRule> table = {
      {"CYC", 1, "gcd(n, phi(n)) = 1"},
      {"P2.i", 2, "an isolated square vertex p^2"},
      {"P2.ii", 2, "a component p -> q (q = 1 mod p)"},
      {"P3.i", 3, "a component q => p^2 weak (q | p+1, q not| p-1, p not| q-1)"},
      {"P3.ii", 3, "a component that is the chordless path p -> q -> r"},
      {"T6.I", 6, "square-free Q graph: p -> q -> r and s -> r"},
      {"T6.II", 6, "triangle with apex 2: 2 -> p, 2 -> q, p -> q"},
      {"T6.III", 6, "3 -> p^2 strong, no other relation"},
      {"T6.IV", 6, "q -> p^3 with q | p^3 - 1 and q not| p^2 - 1"},
      {"T6.V", 6,
       "one of Lambda_6,I (p^2 => q weak, q -> r), M_1(3) (3 => p^2 weak, "
       "3 -> r) or Lambda_6,II (q => p^2 weak, p^2 -> r strong)"},
      {"T6.VI", 6, "p^2 -> q^2 with p || q + 1"},
      {"T6.VII", 6, "coprime product of a g = 2 part and a g = 3 part"},
      {"T7.I", 7, "star with apex 5: 5 -> q, 5 -> r"},
      {"T7.II", 7, "triangle with apex 3: 3 -> q, 3 -> r, q -> r"},
      {"T7.III", 7, "3 -> p, 3 -> q, q -> r and 3 not| r - 1"},
      {"T7.IV", 7, "5 -> p^2 strong, no other relation"},
      {"T7.V", 7, "q -> p^3 with q | p + 1"},
      {"T7.VI", 7, "M_1(5): 5 => p^2 weak, 5 -> r"},
      {"T7.VII", 7, "p^2 -> q strong, q -> r"},
      {"T7.VIII", 7, "p^2 -> q^2 with p^2 | q + 1"},
      {"T7.IX", 7, "q, r => p^2 weak and p^2 => s weak, nothing else"},
  };
  return table;
}

const std::vector<std::string>& sub_clause_ids() {
  static const std::vector<std::string> ids = {
      "P2.i",   "P2.ii", "P3.i",   "P3.ii",  "T6.I",  "T6.II", "T6.III",
      "T6.IV",  "T6.V.a", "T6.V.b", "T6.V.c", "T6.VI", "T6.VII", "T7.I",
      "T7.II",  "T7.III", "T7.IV",  "T7.V",   "T7.VI", "T7.VII", "T7.VIII",
      "T7.IX"};
  return ids;
}

Verdict classify(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("classify: n must be positive");
  const Factorization f = factorize(n);
  for (const auto& [p, a] : f.entries)
    if (a >= 4) return {};

  const Decomposition d = decompose(build_graph(f));
  struct Part {
    ComponentMatch m;
    std::uint64_t n;
  };
  std::vector<Part> parts;
  for (const auto& v : d.isolated) {
    if (v.a == 1) continue;
    if (v.a == 2)
      parts.push_back({{2, "P2.i", {{"p", v.p}}}, v.p * v.p});
    else
      return {};  // an isolated cube contributes a factor of 5
  }
  for (const auto& c : d.components) {
    auto ms = component_matches(c);
    if (ms.empty()) return {};
    for (std::size_t i = 1; i < ms.size(); ++i)
      if (ms[i].g != ms[0].g)
        throw std::logic_error("classify: rules for different k both match " +
                               std::to_string(c.n()));
    parts.push_back({std::move(ms.front()), c.n()});
  }

  std::uint64_t product = 1;
  for (const auto& part : parts) product *= part.m.g;
  if (product == 1) return {1, "CYC", {}};
  if (product != 2 && product != 3 && product != 6 && product != 7) return {};
  if (parts.size() == 1)
    return {static_cast<int>(product), parts[0].m.rule, parts[0].m.witness};
  // Two parts with product 6: the 2 x 3 combination.
  Verdict v{6, "T6.VII", {}};
  for (const auto& part : parts)
    v.witness[part.m.g == 2 ? "n1" : "n2"] = part.n;
  return v;
}

std::vector<std::uint64_t> solve(int k, std::uint64_t max_n, unsigned jobs) {
  if (k == 4 || k == 5)
    throw UnclassifiedKError("solve: k = " + std::to_string(k) +
                             " is not covered by the encoded theorems");
  if (k != 1 && k != 2 && k != 3 && k != 6 && k != 7)
    throw std::invalid_argument("solve: g(n) = " + std::to_string(k) +
                                " has no solutions");
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  if (max_n == 0) return {};
  jobs = static_cast<unsigned>(
      std::min<std::uint64_t>(jobs, max_n));

  std::vector<std::vector<std::uint64_t>> found(jobs);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (max_n + jobs - 1) / jobs;
  for (unsigned t = 0; t < jobs; ++t) {
    const std::uint64_t lo = 1 + t * chunk;
    const std::uint64_t hi = std::min(max_n, lo + chunk - 1);
    pool.emplace_back([k, lo, hi, &out = found[t]] {
      for (std::uint64_t n = lo; n <= hi; ++n)
        if (classify(n).k == k) out.push_back(n);
    });
  }
  for (auto& th : pool) th.join();
  std::vector<std::uint64_t> result;
  for (auto& part : found)
    result.insert(result.end(), part.begin(), part.end());
  return result;
}

namespace {

/// First `count` primes = residue (mod modulus) below `bound`, skipping the
/// avoided congruence classes.
std::vector<std::uint64_t> progression_primes(
    std::uint64_t residue, std::uint64_t modulus,
    const std::vector<AvoidCongruence>& avoid, std::uint64_t bound,
    std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = residue == 0 ? modulus : residue;
       n <= bound && out.size() < count; n += modulus) {
    if (n < 2 || !is_prime(n)) continue;
    bool ok = true;
    for (const auto& c : avoid)
      if (n % c.modulus == c.residue % c.modulus) {
        ok = false;
        break;
      }
    if (ok) out.push_back(n);
  }
  return out;
}

const std::vector<std::uint64_t> kSmallOddPrimes = {
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

std::vector<std::uint64_t> odd_prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, a] : factorize(m).entries)
    if (p != 2) out.push_back(p);
  return out;
}

}  // namespace

std::optional<std::uint64_t> clause_witness(const std::string& id,
                                            std::uint64_t bound) {
  auto check = [&](std::uint64_t n) -> std::optional<std::uint64_t> {
    if (n == 0 || n > bound) return std::nullopt;
    if (classify(n).matched_rule == id) return n;
    return std::nullopt;
  };
  const std::size_t few = 5;

  if (id == "CYC") return check(1);
  if (id == "P2.i") {
    for (std::uint64_t p : {2, 3, 5, 7})
      if (auto w = check(p * p)) return w;
  } else if (id == "P2.ii") {
    for (std::uint64_t p : {2, 3, 5})
      for (std::uint64_t q : progression_primes(1, p, {}, bound, few))
        if (auto w = check(p * q)) return w;
  } else if (id == "P3.i") {
    for (std::uint64_t p : kSmallOddPrimes)
      for (std::uint64_t q : odd_prime_divisors(p + 1))
        if (auto w = check(p * p * q)) return w;
  } else if (id == "P3.ii") {
    for (std::uint64_t q : progression_primes(1, 3, {}, bound, few))
      for (std::uint64_t r : progression_primes(1, q, {{1, 3}}, bound, few))
        if (auto w = check(3 * q * r)) return w;
  } else if (id == "T6.I") {
    for (std::uint64_t q : progression_primes(1, 3, {}, bound, few))
      for (std::uint64_t s : kSmallOddPrimes) {
        if (s == q || s % 3 == 1 || s % q == 1 || q % s == 1) continue;
        for (std::uint64_t r :
             progression_primes(1, q * s, {{1, 3}}, bound, few))
          if (auto w = check(3 * q * s * r)) return w;
      }
  } else if (id == "T6.II") {
    for (std::uint64_t p : kSmallOddPrimes)
      for (std::uint64_t q : progression_primes(1, p, {}, bound, few))
        if (auto w = check(2 * p * q)) return w;
  } else if (id == "T6.III") {
    for (std::uint64_t p : progression_primes(1, 3, {}, bound, few))
      if (auto w = check(3 * p * p)) return w;
  } else if (id == "T6.IV") {
    for (std::uint64_t p : kSmallOddPrimes)
      for (std::uint64_t q : odd_prime_divisors(p * p + p + 1))
        if (auto w = check(p * p * p * q)) return w;
  } else if (id == "T6.V.a") {
    for (std::uint64_t p : kSmallOddPrimes)
      for (std::uint64_t q :
           progression_primes(1, p, {{1, p * p}}, bound, few))
        for (std::uint64_t r : progression_primes(1, q, {{1, p}}, bound, few))
          if (auto w = check(p * p * q * r)) return w;
  } else if (id == "T6.V.b") {
    for (std::uint64_t p : progression_primes(2, 3, {}, bound, few))
      for (std::uint64_t r : progression_primes(1, 3, {{1, p}}, bound, few))
        if (auto w = check(p * p * 3 * r)) return w;
  } else if (id == "T6.V.c") {
    for (std::uint64_t p : kSmallOddPrimes)
      for (std::uint64_t q : odd_prime_divisors(p + 1))
        for (std::uint64_t r :
             progression_primes(1, p * p, {{1, q}}, bound, few))
          if (auto w = check(p * p * q * r)) return w;
  } else if (id == "T6.VI") {
    for (std::uint64_t q : progression_primes(2, 3, {{8, 9}}, bound, few))
      if (auto w = check(9 * q * q)) return w;
  } else if (id == "T6.VII") {
    for (std::uint64_t b : progression_primes(1, 5, {{1, 3}}, bound, few))
      for (std::uint64_t c :
           progression_primes(1, b, {{1, 3}, {1, 5}}, bound, few))
        if (auto w = check(9 * 5 * b * c)) return w;
  } else if (id == "T7.I") {
    auto qs = progression_primes(1, 5, {}, bound, few);
    for (std::uint64_t q1 : qs)
      for (std::uint64_t q2 :
           progression_primes(1, 5, {{1, q1}}, bound, few))
        if (q2 > q1)
          if (auto w = check(5 * q1 * q2)) return w;
  } else if (id == "T7.II") {
    for (std::uint64_t q : progression_primes(1, 3, {}, bound, few))
      for (std::uint64_t r : progression_primes(1, 3 * q, {}, bound, few))
        if (auto w = check(3 * q * r)) return w;
  } else if (id == "T7.III") {
    for (std::uint64_t p : progression_primes(1, 3, {}, bound, few))
      for (std::uint64_t q : progression_primes(1, 3, {{1, p}}, bound, few)) {
        if (q == p) continue;
        for (std::uint64_t r :
             progression_primes(1, q, {{1, 3}, {1, p}}, bound, few))
          if (auto w = check(3 * p * q * r)) return w;
      }
  } else if (id == "T7.IV") {
    for (std::uint64_t p : progression_primes(1, 5, {}, bound, few))
      if (auto w = check(5 * p * p)) return w;
  } else if (id == "T7.V") {
    for (std::uint64_t p : kSmallOddPrimes)
      for (std::uint64_t q : odd_prime_divisors(p + 1))
        if (auto w = check(p * p * p * q)) return w;
  } else if (id == "T7.VI") {
    for (std::uint64_t p : progression_primes(4, 5, {}, bound, few))
      for (std::uint64_t r : progression_primes(1, 5, {{1, p}}, bound, few))
        if (auto w = check(p * p * 5 * r)) return w;
  } else if (id == "T7.VII") {
    for (std::uint64_t p : kSmallOddPrimes)
      for (std::uint64_t q : progression_primes(1, p * p, {}, bound, few))
        for (std::uint64_t r : progression_primes(1, q, {{1, p}}, bound, few))
          if (auto w = check(p * p * q * r)) return w;
  } else if (id == "T7.VIII") {
    for (std::uint64_t q : progression_primes(8, 9, {}, bound, few))
      if (auto w = check(9 * q * q)) return w;
  } else if (id == "T7.IX") {
    for (std::uint64_t p : progression_primes(14, 15, {}, bound, few))
      for (std::uint64_t s :
           progression_primes(1, p, {{1, p * p}, {1, 3}, {1, 5}}, bound, few))
        if (auto w = check(p * p * 3 * 5 * s)) return w;
  }
  return std::nullopt;
}

}  // namespace gnum
