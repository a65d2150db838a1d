#include "catmouse/mouse_strategy.hpp"

#include <algorithm>
#include <stdexcept>

#include "catmouse/capture_number.hpp"
#include "catmouse/solver.hpp"

namespace catmouse {

namespace {

void check_probes(const Graph& g, std::span<const VertexId> cat) {
  if (cat.empty()) throw Error(ErrorKind::Precondition, "cat sequence is empty");
  for (VertexId c : cat)
    if (!g.contains(c)) throw Error(ErrorKind::Precondition, "probe is not a vertex of the graph");
}

// 1-based view of a probe sequence; out-of-range times read as "no probe".
class Timeline {
 public:
  explicit Timeline(std::span<const VertexId> probes) : probes_(probes) {}

  std::size_t length() const { return probes_.size(); }
  VertexId at(std::size_t time) const { return probes_[time - 1]; }
  bool probes(std::size_t time, VertexId v) const {
    return time >= 1 && time <= probes_.size() && probes_[time - 1] == v;
  }

 private:
  std::span<const VertexId> probes_;
};

void check_result(const Graph& g, std::span<const VertexId> cat, const MouseSequence& mouse, const char* who) {
  if (!beats(g, cat, mouse)) throw std::logic_error(std::string(who) + ": constructed walk does not beat the sequence");
}

}  // namespace

bool beats(const Graph& g, std::span<const VertexId> cat, std::span<const VertexId> mouse) {
  if (cat.size() != mouse.size()) return false;
  for (std::size_t i = 0; i < mouse.size(); ++i) {
    if (!g.contains(mouse[i]) || mouse[i] == cat[i]) return false;
    if (i > 0 && !g.adjacent(mouse[i - 1], mouse[i])) return false;
  }
  return true;
}

std::optional<MouseSequence> beat(const Graph& g, std::span<const VertexId> cat) {
  check_probes(g, cat);
  const EvasionDynamics dyn(g);

  std::vector<EvasionSet> alive;
  alive.reserve(cat.size());
  auto s = EvasionSet::all(g.size());
  for (VertexId c : cat) {
    alive.push_back(s.without(c));
    s = dyn.move(alive.back());
  }
  if (alive.back().empty()) return std::nullopt;

  MouseSequence mouse(cat.size());
  mouse.back() = alive.back().members().front();
  for (std::size_t i = cat.size() - 1; i-- > 0;) {
    const auto options = EvasionSet(alive[i].mask() & dyn.neighbour_mask(mouse[i + 1]));
    mouse[i] = options.members().front();
  }
  return mouse;
}

Tree canonical_tstar() {
  std::vector<Edge> edges;
  for (std::size_t arm = 0; arm < 3; ++arm) {
    edges.emplace_back(tstar::outer(arm), tstar::middle(arm));
    edges.emplace_back(tstar::middle(arm), tstar::inner(arm));
    edges.emplace_back(tstar::inner(arm), tstar::kHub);
  }
  return as_tree(Graph::from_edges(10, edges));
}

MouseSequence tstar_mouse(std::span<const VertexId> cat) {
  if (cat.empty()) throw Error(ErrorKind::Precondition, "cat sequence is empty");
  for (VertexId c : cat)
    if (c >= 10) throw Error(ErrorKind::Precondition, "probe is not a vertex of canonical T*");
  using namespace tstar;

  std::vector<VertexId> padded(cat.begin(), cat.end());
  if (padded.size() % 2 == 0) padded.push_back(outer(0));
  const Timeline c(padded);
  const auto len = c.length();
  std::vector<VertexId> m(len + 1);  // 1-based

  auto arm_of_middle = [](VertexId v) { return static_cast<std::size_t>((v - 2) / 3); };

  // Odd times.
  for (std::size_t i = 1; i <= len; i += 2) {
    if (c.at(i) != kHub) {
      m[i] = kHub;
      continue;
    }
    if (i > 1 && c.at(i - 2) == kHub) continue;  // inside a run already handled
    std::size_t last = i;
    while (last + 2 <= len && c.at(last + 2) == kHub) last += 2;
    std::size_t arm = 0;
    while (arm < 3 && (c.probes(i - 1, inner(arm)) || c.probes(last + 1, inner(arm)))) ++arm;
    if (arm == 3) throw std::logic_error("tstar_mouse: no free arm");
    for (std::size_t k = i; k <= last; k += 2) m[k] = middle(arm);
  }

  // Even times, between two odd positions.
  for (std::size_t i = 2; i < len; i += 2) {
    const auto before = m[i - 1], after = m[i + 1];
    if (before == kHub && after == kHub) {
      std::size_t arm = 0;
      while (c.at(i) == inner(arm)) ++arm;
      m[i] = inner(arm);
    } else if (before == after) {
      const auto arm = arm_of_middle(before);
      m[i] = c.at(i) != outer(arm) ? outer(arm) : inner(arm);
    } else {
      const auto arm = arm_of_middle(before == kHub ? after : before);
      m[i] = inner(arm);
    }
  }

  MouseSequence mouse(m.begin() + 1, m.begin() + 1 + static_cast<std::ptrdiff_t>(cat.size()));
  check_result(canonical_tstar(), cat, mouse, "tstar_mouse");
  return mouse;
}

MouseSequence undervisited_mouse(const Tree& t, VertexId v, std::span<const VertexId> cat) {
  if (t.size() < 3) throw Error(ErrorKind::Precondition, "undervisited_mouse requires at least three vertices");
  if (!t.contains(v) || t.degree(v) < 2)
    throw Error(ErrorKind::Precondition, "undervisited_mouse requires an internal vertex");
  check_probes(t, cat);
  const auto need = a_value(t, v);
  const auto visits = static_cast<std::size_t>(std::count(cat.begin(), cat.end(), v));
  if (visits >= need)
    throw Error(ErrorKind::Precondition, "vertex " + std::to_string(t.label(v)) + " is probed " +
                                             std::to_string(visits) + " times, a(v) = " + std::to_string(need));

  const Timeline c(cat);
  const auto len = c.length();
  std::vector<VertexId> m(len + 2);  // 1-based

  auto visits_at_parity = [&](std::size_t parity) {
    std::size_t count = 0;
    for (std::size_t i = parity == 1 ? 1 : 2; i <= len; i += 2) count += c.at(i) == v;
    return count;
  };

  if (need == 2) {
    // At most one probe of v, so one parity class never sees it.
    const std::size_t home = visits_at_parity(1) == 0 ? 1 : 0;
    const auto nbrs = t.neighbours(v);
    for (std::size_t i = 1; i <= len; ++i)
      m[i] = i % 2 == home ? v : (c.at(i) != nbrs[0] ? nbrs[0] : nbrs[1]);
  } else {
    std::vector<VertexId> hubs;  // internal neighbours u_j
    std::vector<VertexId> hides;  // w_j: a neighbour of u_j other than v
    for (VertexId u : t.neighbours(v)) {
      if (t.degree(u) < 2) continue;
      hubs.push_back(u);
      for (VertexId w : t.neighbours(u))
        if (w != v) {
          hides.push_back(w);
          break;
        }
    }
    const auto r = hubs.size();
    const std::size_t home = visits_at_parity(1) + 2 <= r ? 1 : 0;
    if (visits_at_parity(home) + 2 > r)
      throw std::logic_error("undervisited_mouse: both parities probe v more than r-2 times");

    auto hide_index = [&](VertexId w) {
      return static_cast<std::size_t>(std::find(hides.begin(), hides.end(), w) - hides.begin());
    };

    for (std::size_t i = home == 1 ? 1 : 2; i <= len; i += 2) {
      if (c.at(i) != v) {
        m[i] = v;
        continue;
      }
      if (c.probes(i - 2, v)) continue;
      std::size_t last = i;
      while (last + 2 <= len && c.at(last + 2) == v) last += 2;
      const auto k = (last - i) / 2;
      if (k + 3 > r)
        throw Error(ErrorKind::Precondition, "undervisited_mouse: run of " + std::to_string(k + 1) +
                                                 " probes exceeds r - 2 = " + std::to_string(r - 2));
      std::size_t j = 0;
      for (; j < r; ++j) {
        bool clear = true;
        for (std::size_t s = i - 1; s <= last + 1; s += 2) clear = clear && !c.probes(s, hubs[j]);
        if (clear) break;
      }
      if (j == r) throw std::logic_error("undervisited_mouse: no free hiding place");
      for (std::size_t s = i; s <= last; s += 2) m[s] = hides[j];
    }

    for (std::size_t i = home == 1 ? 2 : 1; i <= len; i += 2) {
      std::optional<std::size_t> hidden;
      for (std::size_t s : {i - 1, i + 1}) {
        if (s < 1 || s > len || m[s] == v) continue;
        const auto j = hide_index(m[s]);
        if (hidden && *hidden != j) throw std::logic_error("undervisited_mouse: inconsistent hiding places");
        hidden = j;
      }
      if (hidden) {
        m[i] = hubs[*hidden];
      } else {
        std::size_t j = 0;
        while (c.at(i) == hubs[j]) ++j;
        m[i] = hubs[j];
      }
    }
  }

  MouseSequence mouse(m.begin() + 1, m.begin() + 1 + static_cast<std::ptrdiff_t>(len));
  check_result(t, cat, mouse, "undervisited_mouse");
  return mouse;
}

}  // namespace catmouse
