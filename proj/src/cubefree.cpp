#include "gnum/cubefree.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

#include "gnum/holder.hpp"

namespace gnum {

CountResult CountResult::make_exact(std::uint64_t v) {
  CountResult r;
  r.status = Status::exact;
  r.value = v;
  return r;
}

CountResult CountResult::make_unsupported(UnsupportedReason reason,
                                          std::optional<std::uint64_t> lb) {
  CountResult r;
  r.status = Status::unsupported;
  r.reason = reason;
  r.lower_bound = lb;
  return r;
}

std::string reason_string(UnsupportedReason r) {
  switch (r) {
    case UnsupportedReason::fourth_power: return "fourth-power";
    case UnsupportedReason::even_square_form: return "even-square-form";
    case UnsupportedReason::unclassified_shape: return "unclassified-shape";
    case UnsupportedReason::too_large: return "too-large";
  }
  return "?";
}

CountResult g_prime_power(std::uint64_t p, unsigned a) {
  if (!is_prime(p)) throw std::invalid_argument("g_prime_power: p not prime");
  switch (a) {
    case 1: return CountResult::make_exact(1);
    case 2: return CountResult::make_exact(2);
    case 3: return CountResult::make_exact(5);
    default:
      return CountResult::make_unsupported(UnsupportedReason::fourth_power, 14);
  }
}

namespace {

void require_odd_primes(std::initializer_list<std::uint64_t> ps,
                        const char* who) {
  for (std::uint64_t p : ps) {
    if (p == 2 || !is_prime(p))
      throw std::invalid_argument(std::string(who) + ": odd primes required");
  }
}

/// Exact division with a consistency check on the transcribed coefficients.
std::uint64_t exact_div(std::uint64_t num, std::uint64_t den) {
  assert(num % den == 0);
  return num / den;
}

}  // namespace

std::uint64_t g_2p2(std::uint64_t p) {
  require_odd_primes({p}, "g_2p2");
  return 5;
}

std::uint64_t g_p2q(std::uint64_t p, std::uint64_t q) {
  require_odd_primes({p, q}, "g_p2q");
  if (p == q) throw std::invalid_argument("g_p2q: distinct primes required");
  std::uint64_t g = 2;
  if (w(p - 1, q)) g += exact_div(q + 5, 2);
  g += w(p + 1, q);
  g += 2 * w(q - 1, p);
  g += w(q - 1, p * p);
  return g;
}

std::uint64_t g_p3q(std::uint64_t p, std::uint64_t q) {
  require_odd_primes({p, q}, "g_p3q");
  if (p == q) throw std::invalid_argument("g_p3q: distinct primes required");
  const std::uint64_t p2 = p * p, p3 = p2 * p;
  std::uint64_t g = 5;
  if (w(p - 1, q)) {
    // (q^2 + 13q + 36)/6 plus the companion (2/3) w_{q-1}(3) term; the two
    // are integral only in combination.
    g += exact_div(q * q + 13 * q + 36 + 4 * w(q - 1, 3), 6);
  }
  g += (p + 5) * w(q - 1, p);
  g += w((p + 1) * (p2 + p + 1), q) * (1 - w(p - 1, q));
  g += w(p + 1, q);
  g += 2 * w(q - 1, p2);
  g += w(q - 1, p3);
  return g;
}

std::uint64_t g_p2q2(std::uint64_t p, std::uint64_t q) {
  require_odd_primes({p, q}, "g_p2q2");
  if (p >= q) throw std::invalid_argument("g_p2q2: requires p < q");
  std::uint64_t g = 4;
  if (w(q - 1, p * p)) g += exact_div(p * p + p + 4, 2);
  g += (p + 6) * w(q - 1, p);
  g += 2 * w(q + 1, p);
  g += w(q + 1, p * p);
  return g;
}

std::uint64_t g_p2qr(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  require_odd_primes({p, q, r}, "g_p2qr");
  if (q >= r || p == q || p == r)
    throw std::invalid_argument("g_p2qr: distinct primes with q < r required");
  const std::uint64_t p2 = p * p;
  std::uint64_t h = 2;
  h += w(p2 - 1, q * r);
  h += 2 * w(r - 1, p * q);
  h += w(r - 1, p) * w(p - 1, q);
  h += w(r - 1, p2 * q);
  h += w(r - 1, p) * w(q - 1, p);
  h += 2 * w(q - 1, p);
  h += 3 * w(p - 1, q);
  h += 2 * w(r - 1, p);
  h += 2 * w(r - 1, q);
  h += w(r - 1, p2);
  h += w(q - 1, p2);
  h += w(p + 1, r);
  h += w(p + 1, q);

  std::uint64_t k = 0;
  if (w(p - 1, q * r)) k += exact_div(q * r + 1, 2);
  if (w(p - 1, r)) k += exact_div(r + 5, 2) * (1 + w(p - 1, q));
  k += (p2 - p) * w(q - 1, p2) * w(r - 1, p2);
  k += (p - 1) * (w(q - 1, p2) * w(r - 1, p) + w(r - 1, p2) * w(q - 1, p) +
                  2 * w(r - 1, p) * w(q - 1, p));
  if (w(p - 1, q) && w(r - 1, q)) k += exact_div((q - 1) * (q + 4), 2);
  k += exact_div(q - 1, 2) *
       (w(p + 1, q) * w(r - 1, q) + w(p - 1, q) + w(p - 1, q * r) +
        2 * w(r - 1, p * q) * w(p - 1, q));
  return h + k;
}

namespace {

// Annotated shape of a p^2 q r s graph, in terms of the underlying
// divisibilities. Used to separate the one exactly-valued shape from the
// shapes the analysis proves inadmissible.
struct QrsShape {
  std::uint64_t p;
  std::array<std::uint64_t, 3> singles;  // ascending

  int single_edges() const {  // edges within the square-free part
    int c = 0;
    for (std::uint64_t a : singles)
      for (std::uint64_t b : singles)
        if (a != b && (b - 1) % a == 0) ++c;
    return c;
  }
  bool weak_into_square(std::uint64_t v) const {
    return (p + 1) % v == 0 && (p - 1) % v != 0;
  }
  bool strong_into_square(std::uint64_t v) const { return (p - 1) % v == 0; }
  bool weak_out_of_square(std::uint64_t v) const {
    return (v - 1) % p == 0 && (v - 1) % (p * p) != 0;
  }
  bool strong_out_of_square(std::uint64_t v) const {
    return (v - 1) % (p * p) == 0;
  }
  bool square_related(std::uint64_t v) const {
    return (p * p - 1) % v == 0 || (v - 1) % p == 0;
  }
};

}  // namespace

CountResult g_p2qrs(std::uint64_t p, std::uint64_t q, std::uint64_t r,
                    std::uint64_t s) {
  require_odd_primes({p, q, r, s}, "g_p2qrs");
  QrsShape shape{p, {q, r, s}};
  std::sort(shape.singles.begin(), shape.singles.end());
  if (shape.singles[0] == shape.singles[1] ||
      shape.singles[1] == shape.singles[2] || p == shape.singles[0] ||
      p == shape.singles[1] || p == shape.singles[2])
    throw std::invalid_argument("g_p2qrs: distinct primes required");

  std::vector<std::uint64_t> weak_in, strong_in, weak_out, strong_out, apart;
  for (std::uint64_t v : shape.singles) {
    if (shape.strong_into_square(v)) strong_in.push_back(v);
    else if (shape.weak_into_square(v)) weak_in.push_back(v);
    if (shape.strong_out_of_square(v)) strong_out.push_back(v);
    else if (shape.weak_out_of_square(v)) weak_out.push_back(v);
    if (!shape.square_related(v)) apart.push_back(v);
  }
  const int inner = shape.single_edges();

  auto is_weak_in = [&](std::uint64_t v) {
    return std::find(weak_in.begin(), weak_in.end(), v) != weak_in.end();
  };

  // The exactly-solved shape: two weak arrows into the square, one weak
  // arrow out, and a relation-free square-free part.
  if (inner == 0 && weak_in.size() == 2 && strong_in.empty() &&
      weak_out.size() == 1 && strong_out.empty() && !is_weak_in(weak_out[0]))
    return CountResult::make_exact(7);

  // Same shape but with the outgoing arrow strong: provably >= 8.
  if (inner == 0 && weak_in.size() == 2 && strong_in.empty() &&
      weak_out.empty() && strong_out.size() == 1 && !is_weak_in(strong_out[0]))
    return CountResult::make_unsupported(UnsupportedReason::unclassified_shape,
                                         8);

  // One edge inside the square-free part, a weak arrow into the square from
  // an otherwise-unrelated prime, and one extra weak contact: >= 8.
  if (inner == 1 && strong_in.empty() && strong_out.empty()) {
    // identify the edge x -> y among the singles
    std::uint64_t x = 0, y = 0;
    for (std::uint64_t a : shape.singles)
      for (std::uint64_t b : shape.singles)
        if (a != b && (b - 1) % a == 0) x = a, y = b;
    std::uint64_t z = 0;
    for (std::uint64_t v : shape.singles)
      if (v != x && v != y) z = v;
    const bool z_weak = std::find(weak_in.begin(), weak_in.end(), z) !=
                        weak_in.end();
    if (z_weak) {
      const bool x_in = std::find(weak_in.begin(), weak_in.end(), x) !=
                        weak_in.end();
      const bool y_in = std::find(weak_in.begin(), weak_in.end(), y) !=
                        weak_in.end();
      const bool x_out = std::find(weak_out.begin(), weak_out.end(), x) !=
                         weak_out.end();
      const bool y_out = std::find(weak_out.begin(), weak_out.end(), y) !=
                         weak_out.end();
      if ((x_in + y_in + x_out + y_out) == 1 && weak_in.size() <= 2 &&
          weak_out.size() <= 1)
        return CountResult::make_unsupported(
            UnsupportedReason::unclassified_shape, 8);
    }
  }

  // Square-free part a directed path with a single weak arrow into the
  // square: >= 8.
  if (inner == 2 && weak_in.size() == 1 && strong_in.empty() &&
      weak_out.empty() && strong_out.empty() && apart.size() == 2) {
    bool path = false;  // some single with both an in- and an out-edge
    for (std::uint64_t v : shape.singles) {
      bool has_in = false, has_out = false;
      for (std::uint64_t u : shape.singles) {
        if (u == v) continue;
        if ((v - 1) % u == 0) has_in = true;
        if ((u - 1) % v == 0) has_out = true;
      }
      if (has_in && has_out) path = true;
    }
    if (path)
      return CountResult::make_unsupported(
          UnsupportedReason::unclassified_shape, 8);
  }

  return CountResult::make_unsupported(UnsupportedReason::unclassified_shape);
}

namespace {

bool contains_two(const HolderGraph& g) {
  return !g.vertices.empty() && g.vertices.front().p == 2;
}

}  // namespace

CountResult count_component(const HolderGraph& component) {
  std::vector<unsigned> exps;
  for (const auto& v : component.vertices) exps.push_back(v.a);
  std::sort(exps.begin(), exps.end());
  const auto& vs = component.vertices;

  for (unsigned a : exps)
    if (a >= 4)
      return CountResult::make_unsupported(UnsupportedReason::fourth_power, 14);

  if (component.square_free()) {
    if (vs.size() > 24)
      return CountResult::make_unsupported(UnsupportedReason::too_large);
    return CountResult::make_exact(g_holder(component));
  }

  auto prime_with_exp = [&](unsigned a) {
    for (const auto& v : vs)
      if (v.a == a) return v.p;
    return std::uint64_t{0};
  };
  auto singles = [&]() {
    std::vector<std::uint64_t> out;
    for (const auto& v : vs)
      if (v.a == 1) out.push_back(v.p);
    return out;
  };

  if (exps == std::vector<unsigned>{1, 2}) {
    const std::uint64_t p = prime_with_exp(2), q = prime_with_exp(1);
    if (q == 2) return CountResult::make_exact(g_2p2(p));
    if (p == 2)
      return CountResult::make_unsupported(UnsupportedReason::even_square_form);
    return CountResult::make_exact(g_p2q(p, q));
  }
  if (exps == std::vector<unsigned>{1, 3}) {
    const std::uint64_t p = prime_with_exp(3), q = prime_with_exp(1);
    if (contains_two(component))
      return CountResult::make_unsupported(UnsupportedReason::even_square_form);
    return CountResult::make_exact(g_p3q(p, q));
  }
  if (exps == std::vector<unsigned>{2, 2}) {
    if (contains_two(component))
      return CountResult::make_unsupported(UnsupportedReason::even_square_form);
    return CountResult::make_exact(g_p2q2(vs[0].p, vs[1].p));
  }
  if (exps == std::vector<unsigned>{1, 1, 2}) {
    if (contains_two(component))
      return CountResult::make_unsupported(UnsupportedReason::even_square_form);
    const std::uint64_t p = prime_with_exp(2);
    auto qs = singles();
    return CountResult::make_exact(
        g_p2qr(p, std::min(qs[0], qs[1]), std::max(qs[0], qs[1])));
  }
  if (exps == std::vector<unsigned>{1, 1, 1, 2}) {
    if (contains_two(component))
      return CountResult::make_unsupported(UnsupportedReason::even_square_form);
    const std::uint64_t p = prime_with_exp(2);
    auto qs = singles();
    return g_p2qrs(p, qs[0], qs[1], qs[2]);
  }
  return CountResult::make_unsupported(UnsupportedReason::unclassified_shape);
}

CountResult count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count: n must be positive");
  const Factorization f = factorize(n);
  for (const auto& [p, a] : f.entries)
    if (a >= 4)
      return CountResult::make_unsupported(UnsupportedReason::fourth_power, 14);

  const Decomposition d = decompose(build_graph(f));
  std::uint64_t total = 1;
  for (const auto& v : d.isolated) {
    const CountResult r = g_prime_power(v.p, v.a);
    if (!r.exact()) return r;
    total *= r.value;
  }
  const bool single_piece = d.components.size() == 1 && d.isolated.empty();
  for (const auto& comp : d.components) {
    const CountResult r = count_component(comp);
    if (!r.exact()) {
      // A proven component bound transfers to n only when the component
      // is all of n.
      return CountResult::make_unsupported(
          r.reason, single_piece ? r.lower_bound : std::nullopt);
    }
    total *= r.value;
  }
  return CountResult::make_exact(total);
}

}  // namespace gnum
