// Acceptance suite: one line per criterion, PASS/FAIL with the measured
// runtime against the pinned budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <random>
#include <vector>

#include "gnum/census.hpp"
#include "gnum/classifier.hpp"
#include "gnum/cubefree.hpp"
#include "gnum/graph.hpp"
#include "gnum/holder.hpp"

using namespace gnum;

namespace {

int failures = 0;

void report(const char* name, bool ok, double seconds, double budget) {
  if (seconds > budget) ok = false;
  std::printf("%s - %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", name,
              seconds, budget);
  if (!ok) ++failures;
}

template <typename F>
void criterion(const char* name, double budget, F body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("  exception: %s\n", e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(name, ok, seconds, budget);
}

bool check_value(std::uint64_t n, std::uint64_t expect) {
  const CountResult r = count(n);
  if (r.exact() && r.value == expect) return true;
  std::printf("  count(%llu): expected %llu, got %s\n",
              (unsigned long long)n, (unsigned long long)expect,
              r.exact() ? std::to_string(r.value).c_str() : "unsupported");
  return false;
}

AbstractGraph random_regular(std::mt19937_64& rng, int max_v) {
  AbstractGraph g;
  const int n = 1 + static_cast<int>(rng() % max_v);
  g.labels.resize(n);
  for (int i = 0; i + 1 < n; ++i)
    if (rng() % 4 != 0) g.edges.emplace_back(i, i + 1 + rng() % (n - i - 1));
  return g;
}

}  // namespace

int main() {
  criterion("1: figure regression", 1.0, [] {
    bool ok = true;
    ok &= check_value(1827, 6);
    ok &= check_value(7575, 6);
    ok &= check_value(32661, 7);
    ok &= check_value(101695, 5);
    ok &= check_value(12615, 5);
    ok &= check_value(825, 5);
    ok &= check_value(12425, 8);
    return ok;
  });

  criterion("2: formula spot values", 5.0, [] {
    bool ok = true;
    ok &= check_value(147, 6);
    ok &= check_value(75, 3);
    ok &= check_value(18, 5);
    ok &= check_value(375, 7);
    ok &= check_value(2601, 7);
    ok &= check_value(45, 2);
    ok &= check_value(225, 6);
    ok &= check_value(351, 14);
    ok &= check_value(1225, 4);
    return ok;
  });

  criterion("3: Hoelder-formula consistency to 1e5", 60.0, [] {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
      const HolderGraph g = build_graph(factorize(n));
      if (!g.square_free()) continue;
      bool regular = true;
      for (int v = 0; v < (int)g.vertices.size(); ++v)
        if (g.out_degree(v) > 1) regular = false;
      const std::uint64_t value = g_holder(g);
      if (regular && central_subsets(g).size() != value) {
        std::printf("  central-subset mismatch at n = %llu\n",
                    (unsigned long long)n);
        return false;
      }
      const CountResult c = count(n);
      if (!c.exact() || c.value != value) {
        std::printf("  count/g_holder mismatch at n = %llu\n",
                    (unsigned long long)n);
        return false;
      }
    }
    // Multiplicativity on independent square-free pairs.
    std::mt19937_64 rng(20260825);
    int done = 0;
    while (done < 500) {
      const std::uint64_t a = rng() % 5000 + 2, b = rng() % 5000 + 2;
      if (gcd(a, b) != 1) continue;
      const HolderGraph ga = build_graph(factorize(a));
      const HolderGraph gb = build_graph(factorize(b));
      if (!ga.square_free() || !gb.square_free()) continue;
      const HolderGraph gab = build_graph(factorize(a * b));
      if (gab.edges.size() != ga.edges.size() + gb.edges.size()) continue;
      if (g_holder(gab) != g_holder(ga) * g_holder(gb)) {
        std::printf("  multiplicativity fails for %llu * %llu\n",
                    (unsigned long long)a, (unsigned long long)b);
        return false;
      }
      ++done;
    }
    return true;
  });

  criterion("4: splice identity and Fibonacci paths", 10.0, [] {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
      const AbstractGraph gamma = random_regular(rng, 8);
      const AbstractGraph lambda = random_regular(rng, 8);
      int sink = -1;
      for (int v = 0; v < gamma.size(); ++v)
        if (gamma.out_degree(v) == 0) sink = v;
      const int root = static_cast<int>(rng() % lambda.size());
      const std::uint64_t lhs = g_holder(splice(gamma, sink, lambda, root));
      const std::uint64_t rhs =
          g_holder(gamma) * g_holder(lambda) +
          g_holder(gamma.without_vertex(sink)) * g_rooted(lambda, root);
      if (lhs != rhs) {
        std::printf("  splice identity fails on trial %d\n", trial);
        return false;
      }
    }
    for (unsigned k = 1; k <= 20; ++k)
      if (g_holder(make_path(k)) != path_count(k)) {
        std::printf("  Fibonacci mismatch at k = %u\n", k);
        return false;
      }
    return true;
  });

  criterion("5: classification cross-validation to 1e5", 300.0, [] {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
      const CountResult r = count(n);
      if (!r.exact()) continue;
      const int k = classify(n).k;
      const bool in_set = r.value == 1 || r.value == 2 || r.value == 3 ||
                          r.value == 6 || r.value == 7;
      const bool agree = in_set ? k == (int)r.value : k == 0;
      if (!agree) {
        std::printf("  disagreement at n = %llu: count %llu, classify %d\n",
                    (unsigned long long)n, (unsigned long long)r.value, k);
        return false;
      }
    }
    return true;
  });

  criterion("6: census reproduces the square-free case analysis", 30.0, [] {
    const CensusReport six = admissible_squarefree(6);
    const CensusReport seven = admissible_squarefree(7);
    if (six.entries.size() != 2 || seven.entries.size() != 3) {
      std::printf("  expected 2 + 3 entries, got %zu + %zu\n",
                  six.entries.size(), seven.entries.size());
      return false;
    }
    bool shapes_ok = true;
    for (const auto& e : six.entries)
      shapes_ok &= (e.graph.size() == 4 && !e.label) ||
                   (e.graph.size() == 3 && e.label == 2);
    for (const auto& e : seven.entries)
      shapes_ok &= (e.graph.size() == 3 && e.graph.edges.size() == 2 &&
                    e.label == 5) ||
                   (e.graph.size() == 3 && e.graph.edges.size() == 3 &&
                    e.label == 3) ||
                   (e.graph.size() == 4 && e.label == 3);
    if (!shapes_ok) std::printf("  unexpected shape in the census\n");
    for (const auto& report : {six, seven})
      for (const auto& e : report.entries)
        if (classify(e.realization).k != report.params.target) {
          std::printf("  realization %llu misclassified\n",
                      (unsigned long long)e.realization);
          return false;
        }
    return shapes_ok;
  });

  criterion("7: every clause is realizable", 120.0, [] {
    bool ok = true;
    for (const auto& id : sub_clause_ids()) {
      const auto w = clause_witness(id, 100000000);
      if (!w) {
        std::printf("  no witness found for %s\n", id.c_str());
        ok = false;
        continue;
      }
      if (classify(*w).matched_rule != id) {
        std::printf("  witness %llu for %s classifies differently\n",
                    (unsigned long long)*w, id.c_str());
        ok = false;
      }
    }
    return ok;
  });

  std::printf("%s\n", failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS"
                                    : "ACCEPTANCE FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
