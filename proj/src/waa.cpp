#include "wsync/waa.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "wsync/error.hpp"

namespace wsync {

WaaCheck check_weakly_acyclic(const SemiAutomaton& a) {
  const std::size_t n = a.state_count();
  const std::size_t k = a.letter_count();

  std::vector<std::uint32_t> indeg(n, 0);
  for (StateId q = 0; q < n; ++q)
    for (LetterId x = 0; x < k; ++x) {
      StateId t = a.next(q, x);
      if (t != q) ++indeg[t];
    }

  std::priority_queue<StateId, std::vector<StateId>, std::greater<>> ready;
  for (StateId q = 0; q < n; ++q)
    if (indeg[q] == 0) ready.push(q);

  WaaCertificate cert;
  cert.order.reserve(n);
  cert.position.assign(n, 0);
  std::vector<bool> placed(n, false);
  while (!ready.empty()) {
    StateId q = ready.top();
    ready.pop();
    placed[q] = true;
    cert.position[q] = static_cast<std::uint32_t>(cert.order.size());
    cert.order.push_back(q);
    for (LetterId x = 0; x < k; ++x) {
      StateId t = a.next(q, x);
      if (t != q && --indeg[t] == 0) ready.push(t);
    }
  }
  if (cert.order.size() == n) return cert;

  // The unplaced states contain a cycle; every one of them keeps an
  // in-neighbour among the unplaced, so walking predecessors must repeat.
  StateId start = 0;
  while (placed[start]) ++start;
  auto predecessor = [&](StateId t) {
    for (StateId q = 0; q < n; ++q) {
      if (placed[q] || q == t) continue;
      for (LetterId x = 0; x < k; ++x)
        if (a.next(q, x) == t) return q;
    }
    raise(ErrorCode::invalid_argument, "internal: broken cycle walk");
  };
  std::vector<StateId> walk{start};
  std::vector<std::int32_t> seen_at(n, -1);
  seen_at[start] = 0;
  for (;;) {
    StateId p = predecessor(walk.back());
    if (seen_at[p] >= 0) {
      std::vector<StateId> cycle(walk.begin() + seen_at[p], walk.end());
      std::reverse(cycle.begin(), cycle.end());  // forward orientation
      return NotWaa{std::move(cycle)};
    }
    seen_at[p] = static_cast<std::int32_t>(walk.size());
    walk.push_back(p);
  }
}

WaaCertificate require_waa(const SemiAutomaton& a) {
  WaaCheck check = check_weakly_acyclic(a);
  if (auto* cert = std::get_if<WaaCertificate>(&check)) return std::move(*cert);
  raise(ErrorCode::waa_required, "automaton is not weakly acyclic");
}

bool is_weakly_acyclic(const SemiAutomaton& a) {
  return std::holds_alternative<WaaCertificate>(check_weakly_acyclic(a));
}

static void check_cert(const SemiAutomaton& a, const WaaCertificate& cert) {
  if (cert.state_count() != a.state_count())
    raise(ErrorCode::waa_required, "certificate does not match automaton");
}

StateSet maximal_states(const SemiAutomaton& a, const WaaCertificate& cert) {
  check_cert(a, cert);
  StateSet sinks(a.state_count());
  for (StateId q = 0; q < a.state_count(); ++q)
    if (is_sink(a, q)) sinks.set(q);
  return sinks;
}

namespace detail {

std::vector<std::uint32_t> distances_to_state(const SemiAutomaton& a, StateId target) {
  const std::size_t n = a.state_count();
  const std::size_t k = a.letter_count();
  constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();

  // CSR reverse adjacency keeps the BFS linear in |Sigma||Q|.
  std::vector<std::uint32_t> offset(n + 1, 0);
  for (StateId q = 0; q < n; ++q)
    for (LetterId x = 0; x < k; ++x) ++offset[a.next(q, x) + 1];
  for (std::size_t i = 1; i <= n; ++i) offset[i] += offset[i - 1];
  std::vector<StateId> sources(offset[n]);
  std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
  for (StateId q = 0; q < n; ++q)
    for (LetterId x = 0; x < k; ++x) sources[cursor[a.next(q, x)]++] = q;

  std::vector<std::uint32_t> dist(n, inf);
  dist[target] = 0;
  std::vector<StateId> queue{target};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    StateId t = queue[head];
    for (std::uint32_t i = offset[t]; i < offset[t + 1]; ++i) {
      StateId q = sources[i];
      if (dist[q] == inf) {
        dist[q] = dist[t] + 1;
        queue.push_back(q);
      }
    }
  }
  return dist;
}

Word walk_to_state(const SemiAutomaton& a, const std::vector<std::uint32_t>& distance,
                   StateId q, StateId target) {
  Word w = Word::epsilon(a.alphabet());
  while (q != target) {
    // Smallest letter staying on a shortest path gives the lex-least word.
    for (LetterId x = 0; x < a.letter_count(); ++x) {
      StateId t = a.next(q, x);
      if (distance[t] + 1 == distance[q]) {
        w.push_back(x);
        q = t;
        break;
      }
    }
  }
  return w;
}

}  // namespace detail

std::optional<StateId> synchronizing_state(const SemiAutomaton& a, const WaaCertificate& cert) {
  check_cert(a, cert);
  const std::size_t n = a.state_count();

  std::optional<StateId> sink;
  for (StateId q = 0; q < n; ++q) {
    if (!is_sink(a, q)) continue;
    if (sink) return std::nullopt;  // uniqueness violated
    sink = q;
  }
  if (!sink) return std::nullopt;

  auto dist = detail::distances_to_state(a, *sink);
  for (StateId q = 0; q < n; ++q)
    if (dist[q] == std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return sink;
}

std::optional<Word> build_synchronizing_word(const SemiAutomaton& a, const WaaCertificate& cert) {
  auto sink = synchronizing_state(a, cert);
  if (!sink) return std::nullopt;
  auto dist = detail::distances_to_state(a, *sink);

  Word result = Word::epsilon(a.alphabet());
  StateSet current = a.all_states();
  while (current.count() > 1) {
    StateId pick = *sink;
    std::uint32_t best_pos = std::numeric_limits<std::uint32_t>::max();
    current.for_each([&](StateId q) {
      if (q != *sink && cert.position[q] < best_pos) {
        best_pos = cert.position[q];
        pick = q;
      }
    });
    Word leg = detail::walk_to_state(a, dist, pick, *sink);
    for (LetterId x : leg.letters) current = image_letter(a, current, x);
    result.append(leg);
  }
  return result;
}

StateSet reachable_maximal_from(const SemiAutomaton& a, const WaaCertificate& cert,
                                const StateSet& from) {
  check_cert(a, cert);
  const std::size_t n = a.state_count();
  std::vector<bool> visited(n, false);
  std::vector<StateId> stack;
  from.for_each([&](StateId q) {
    visited[q] = true;
    stack.push_back(q);
  });
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (LetterId x = 0; x < a.letter_count(); ++x) {
      StateId t = a.next(q, x);
      if (!visited[t]) {
        visited[t] = true;
        stack.push_back(t);
      }
    }
  }
  StateSet sinks(n);
  for (StateId q = 0; q < n; ++q)
    if (visited[q] && is_sink(a, q)) sinks.set(q);
  return sinks;
}

}  // namespace wsync
