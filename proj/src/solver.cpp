#include "ipctp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "ipctp/error.hpp"
#include "ipctp/schedule.hpp"
#include "ipctp/validate.hpp"
#include "precedence_graph.hpp"

namespace ipctp {

namespace {

constexpr Time kInf = detail::PrecedenceGraph::kInfinity;
constexpr Objective kNoBound = std::numeric_limits<Objective>::max();

}  // namespace

struct SearchContext::Scratch {
  detail::PrecedenceGraph graph;
  std::vector<Time> release;
  std::vector<Time> deadline;
  std::vector<int> unplaced;
};

SearchContext::SearchContext(const Instance& instance, const DerivedTables& derived)
    : inst_(instance), der_(derived), n_(instance.shipment_count()),
      yc_closure_(instance.yc_travel()),
      scratch_(std::make_unique<Scratch>()) {
  scratch_->release.assign(2 * n_, 0);
  // Unlocated tasks may sit between two waiting ones, so the workload bound
  // needs shortest paths, not the raw matrix.
  const auto m = yc_closure_.size();
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        yc_closure_(a, b) = std::min(yc_closure_(a, b), yc_closure_(a, k) + yc_closure_(k, b));
}

SearchContext::~SearchContext() = default;

SearchNode SearchContext::root() const {
  SearchNode node;
  node.location.assign(n_, -1);
  for (const auto& s : inst_.shipments())
    if (s.outbound()) node.location[s.id] = *s.fixed_location;
  node.qc.assign(n_, 0);
  node.qc_seq.assign(inst_.qc_count(), {});
  node.yc_seq.assign(inst_.yc_count(), {});
  node.qc_placed.assign(n_, 0);
  node.yc_placed.assign(n_, 0);
  node.order.assign(der_.interference_set.size(), -1);
  node.est.assign(2 * n_, 0);
  node.lst.assign(2 * n_, kInf);
  return node;
}

void SearchContext::assign_location(SearchNode& node, int shipment, int location) const {
  node.location[shipment] = location;
}

void SearchContext::assign_qc(SearchNode& node, int shipment, int crane) const {
  node.qc[shipment] = crane;
}

void SearchContext::append_qc(SearchNode& node, int crane, int shipment) const {
  node.qc_seq[crane - 1].push_back(shipment);
  node.qc_placed[shipment] = 1;
}

void SearchContext::append_yc(SearchNode& node, int crane, int shipment) const {
  node.yc_seq[crane - 1].push_back(shipment);
  node.yc_placed[shipment] = 1;
}

void SearchContext::decide_order(SearchNode& node, std::size_t tuple, Order order) const {
  node.order[tuple] = order == Order::i_first ? 0 : 1;
}

bool SearchContext::active(const SearchNode& node, std::size_t tuple) const {
  const auto& t = der_.interference_set[tuple];
  return node.qc[t.i] == t.v && node.qc[t.j] == t.w;
}

Time SearchContext::qc_setup(int a, int b) const { return der_.qc_empty_travel(a, b); }

Time SearchContext::yc_setup(const SearchNode& node, int a, int b) const {
  return inst_.yc_travel()(node.location[a], node.location[b]);
}

Time SearchContext::min_free_transfer(const SearchNode& node) const {
  std::vector<char> used(inst_.location_count(), 0);
  for (int s : inst_.inbound())
    if (node.location[s] >= 0) used[node.location[s]] = 1;
  Time best = kInf;
  for (int k : inst_.available_locations())
    if (!used[k]) best = std::min(best, inst_.yt_inbound_transfer()[k]);
  return best == kInf ? 0 : best;
}

bool SearchContext::build_and_pass(SearchNode& node, std::optional<Objective> upper_bound) {
  auto& g = scratch_->graph;
  auto& unplaced = scratch_->unplaced;
  const auto& ships = inst_.shipments();
  g.reset(2 * n_);

  const Time min_tt = min_free_transfer(node);
  for (const auto& s : ships) {
    if (s.inbound()) {
      const Time tt = node.location[s.id] >= 0 ? inst_.yt_inbound_transfer()[node.location[s.id]] : min_tt;
      g.add_arc(s.id, n_ + s.id, s.qc_time + tt);
    } else {
      g.add_arc(n_ + s.id, s.id, s.yc_time + *s.yt_outbound_time);
    }
  }

  // Sequenced prefixes, then arcs from the last sequenced task to every task
  // still waiting on the same crane.
  const auto crane_arcs = [&](const std::vector<int>& seq, int offset, auto duration, auto setup) {
    for (std::size_t k = 1; k < seq.size(); ++k)
      g.add_arc(offset + seq[k - 1], offset + seq[k], duration(seq[k - 1]) + setup(seq[k - 1], seq[k]));
    if (seq.empty() || unplaced.empty()) return;
    const int p = seq.back();
    Time m1 = kInf, m2 = kInf;
    int arg1 = -1;
    for (int u : unplaced) {
      const Time via = setup(p, u) + duration(u);
      if (via < m1) {
        m2 = m1;
        m1 = via;
        arg1 = u;
      } else if (via < m2) {
        m2 = via;
      }
    }
    for (int u : unplaced) {
      const Time alt = u == arg1 ? m2 : m1;
      g.add_arc(offset + p, offset + u, duration(p) + std::min(setup(p, u), alt));
    }
  };

  const auto q_dur = [&](int s) { return ships[s].qc_time; };
  const auto y_dur = [&](int s) { return ships[s].yc_time; };
  const auto q_setup = [&](int a, int b) { return qc_setup(a, b); };
  const auto y_setup = [&](int a, int b) { return yc_setup(node, a, b); };

  for (int c = 1; c <= inst_.qc_count(); ++c) {
    unplaced.clear();
    for (int s = 0; s < n_; ++s)
      if (node.qc[s] == c && !node.qc_placed[s]) unplaced.push_back(s);
    crane_arcs(node.qc_seq[c - 1], 0, q_dur, q_setup);
  }
  for (int c = 1; c <= inst_.yc_count(); ++c) {
    unplaced.clear();
    for (int s = 0; s < n_; ++s)
      if (node.location[s] >= 0 && inst_.yc_of(node.location[s]) == c && !node.yc_placed[s])
        unplaced.push_back(s);
    crane_arcs(node.yc_seq[c - 1], n_, y_dur, y_setup);
  }

  for (std::size_t k = 0; k < der_.interference_set.size(); ++k) {
    if (node.order[k] < 0 || !active(node, k)) continue;
    const auto& t = der_.interference_set[k];
    const int first = node.order[k] == 0 ? t.i : t.j;
    const int second = node.order[k] == 0 ? t.j : t.i;
    g.add_arc(first, second, ships[first].qc_time + t.delta);
  }

  if (!g.longest_path(scratch_->release, node.est)) return false;

  node.lower_bound = lower_bound(node);
  if (!upper_bound) {
    node.lst.assign(2 * n_, kInf);
    return true;
  }
  if (node.lower_bound >= *upper_bound) return false;

  // Any improving completion keeps every vessel within its share of the
  // remaining slack below the incumbent.
  std::vector<Time> vessel_lb(inst_.vessel_count(), 0);
  for (const auto& s : ships) {
    const int f = s.inbound() ? n_ + s.id : s.id;
    const Time end = node.est[f] + (s.inbound() ? s.yc_time : s.qc_time);
    vessel_lb[s.vessel] = std::max(vessel_lb[s.vessel], end);
  }
  Objective sum = 0;
  for (const auto& v : inst_.vessels()) sum += v.weight * vessel_lb[v.id];
  const Objective slack = *upper_bound - 1 - sum;
  if (slack < 0) return false;

  auto& deadline = scratch_->deadline;
  deadline.assign(2 * n_, kInf);
  for (const auto& s : ships) {
    const Time due = vessel_lb[s.vessel] + slack / inst_.vessels()[s.vessel].weight;
    if (s.inbound()) deadline[n_ + s.id] = due - s.yc_time;
    else deadline[s.id] = due - s.qc_time;
  }
  g.latest_starts(deadline, node.lst);
  for (int t = 0; t < 2 * n_; ++t)
    if (node.est[t] > node.lst[t]) return false;
  return true;
}

bool SearchContext::propagate(SearchNode& node, std::optional<Objective> upper_bound) {
  ++propagations_;
  for (int s = 0; s < n_; ++s)
    if (node.qc[s] == 0 && der_.eligible_qcs[s].size() == 1) node.qc[s] = der_.eligible_qcs[s][0];

  std::vector<char> used(inst_.location_count(), 0);
  int open = 0;
  for (int s : inst_.inbound()) {
    if (node.location[s] >= 0) used[node.location[s]] = 1;
    else ++open;
  }
  int free = 0;
  for (int k : inst_.available_locations()) free += used[k] ? 0 : 1;
  if (free < open) return false;

  const auto& ships = inst_.shipments();
  for (;;) {
    if (!build_and_pass(node, upper_bound)) return false;
    bool changed = false;
    for (std::size_t k = 0; k < der_.interference_set.size(); ++k) {
      if (node.order[k] >= 0 || !active(node, k)) continue;
      const auto& t = der_.interference_set[k];
      const bool ij = node.est[t.i] + ships[t.i].qc_time + t.delta <= node.lst[t.j];
      const bool ji = node.est[t.j] + ships[t.j].qc_time + t.delta <= node.lst[t.i];
      if (!ij && !ji) return false;
      if (!ij || !ji) {
        node.order[k] = ij ? 0 : 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return true;
}

Objective SearchContext::lower_bound(const SearchNode& node) const {
  const auto& ships = inst_.shipments();
  std::vector<Time> vessel_lb(inst_.vessel_count(), 0);
  for (const auto& s : ships) {
    const int f = s.inbound() ? n_ + s.id : s.id;
    const Time end = node.est[f] + (s.inbound() ? s.yc_time : s.qc_time);
    vessel_lb[s.vessel] = std::max(vessel_lb[s.vessel], end);
  }
  Objective sum = 0;
  for (const auto& v : inst_.vessels()) sum += v.weight * vessel_lb[v.id];
  Objective best = sum;

  // Whichever waiting task a crane finishes last cannot end before the crane
  // has worked through all of them.
  const Time min_tt = min_free_transfer(node);
  std::vector<int> waiting;
  const auto crane_bound = [&](int offset, auto duration, auto setup, auto tail) {
    if (waiting.empty()) return;
    Time start = kInf, work = 0, min_pair = kInf;
    for (int u : waiting) {
      start = std::min(start, node.est[offset + u]);
      work += duration(u);
      for (int w : waiting)
        if (w != u) min_pair = std::min(min_pair, setup(u, w));
    }
    if (min_pair == kInf) min_pair = 0;
    const Time finish = start + work + static_cast<Time>(waiting.size() - 1) * min_pair;
    Objective cand = kNoBound;
    for (int u : waiting) {
      const Time end = std::max(finish, node.est[offset + u] + duration(u)) + tail(u);
      const int v = ships[u].vessel;
      const Objective extra = inst_.vessels()[v].weight * std::max<Time>(0, end - vessel_lb[v]);
      cand = std::min(cand, sum + extra);
    }
    best = std::max(best, cand);
  };

  for (int c = 1; c <= inst_.qc_count(); ++c) {
    waiting.clear();
    for (int s = 0; s < n_; ++s)
      if (node.qc[s] == c && !node.qc_placed[s]) waiting.push_back(s);
    crane_bound(
        0, [&](int s) { return ships[s].qc_time; }, [&](int a, int b) { return qc_setup(a, b); },
        [&](int s) -> Time {
          if (ships[s].outbound()) return 0;
          const int loc = node.location[s];
          return (loc >= 0 ? inst_.yt_inbound_transfer()[loc] : min_tt) + ships[s].yc_time;
        });
  }
  for (int c = 1; c <= inst_.yc_count(); ++c) {
    waiting.clear();
    for (int s = 0; s < n_; ++s)
      if (node.location[s] >= 0 && inst_.yc_of(node.location[s]) == c && !node.yc_placed[s])
        waiting.push_back(s);
    crane_bound(
        n_, [&](int s) { return ships[s].yc_time; },
        [&](int a, int b) { return yc_closure_(node.location[a], node.location[b]); },
        [&](int s) -> Time {
          return ships[s].inbound() ? 0 : *ships[s].yt_outbound_time + ships[s].qc_time;
        });
  }
  return best;
}

namespace {

struct Decision {
  enum class Kind { location, qc, qc_next, yc_next, order } kind;
  int a;  // shipment, crane or tuple index
  int b;  // location, crane, shipment or order
};

using Clock = std::chrono::steady_clock;

struct Shared {
  Clock::time_point start;
  double time_limit = 0;
  std::atomic<Objective> upper_bound{kNoBound};
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex mutex;
  std::optional<Solution> incumbent;
  std::vector<TracePoint> trace;
  Objective open_bound = kNoBound;

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }

  std::optional<Objective> bound() const {
    const Objective ub = upper_bound.load();
    return ub == kNoBound ? std::nullopt : std::optional<Objective>(ub);
  }

  void note_open(Objective lb) {
    std::lock_guard lock(mutex);
    open_bound = std::min(open_bound, lb);
  }
};

}  // namespace

class SearchEngine {
 public:
  SearchEngine(const Instance& instance, const DerivedTables& derived, Shared& shared)
      : inst_(instance), der_(derived), ctx_(instance, derived), shared_(shared),
        n_(instance.shipment_count()) {}

  SearchContext& context() { return ctx_; }

  std::vector<Decision> branch(const SearchNode& node) const {
    const auto& ships = inst_.shipments();
    std::vector<Decision> out;

    // 1. Yard location of an inbound shipment (all share the same domain of
    //    free locations, so the lowest id is taken).
    for (int s : inst_.inbound()) {
      if (node.location[s] >= 0) continue;
      std::vector<char> used(inst_.location_count(), 0);
      for (int x : inst_.inbound())
        if (node.location[x] >= 0) used[node.location[x]] = 1;
      std::vector<int> free;
      for (int k : inst_.available_locations())
        if (!used[k]) free.push_back(k);
      std::stable_sort(free.begin(), free.end(), [&](int a, int b) {
        return inst_.yt_inbound_transfer()[a] < inst_.yt_inbound_transfer()[b];
      });
      for (int k : free) out.push_back({Decision::Kind::location, s, k});
      return out;
    }

    // 2. QC assignment, smallest domain first; cranes by current load.
    int pick = -1;
    for (int s = 0; s < n_; ++s)
      if (node.qc[s] == 0 &&
          (pick < 0 || der_.eligible_qcs[s].size() < der_.eligible_qcs[pick].size()))
        pick = s;
    if (pick >= 0) {
      std::vector<Time> load(inst_.qc_count() + 1, 0);
      for (int s = 0; s < n_; ++s)
        if (node.qc[s]) load[node.qc[s]] += ships[s].qc_time;
      auto cranes = der_.eligible_qcs[pick];
      std::stable_sort(cranes.begin(), cranes.end(), [&](int a, int b) { return load[a] < load[b]; });
      for (int c : cranes) out.push_back({Decision::Kind::qc, pick, c});
      return out;
    }

    // 3. Next task on the crane with the most remaining work.
    int best_crane = 0;
    bool best_is_qc = true;
    Time best_load = -1;
    for (int pass = 0; pass < 2; ++pass) {
      const bool is_qc = pass == 0;
      const int count = is_qc ? inst_.qc_count() : inst_.yc_count();
      for (int c = 1; c <= count; ++c) {
        Time load = 0;
        bool any = false;
        for (int s = 0; s < n_; ++s) {
          if (is_qc ? (node.qc[s] == c && !node.qc_placed[s])
                    : (inst_.yc_of(node.location[s]) == c && !node.yc_placed[s])) {
            load += is_qc ? ships[s].qc_time : ships[s].yc_time;
            any = true;
          }
        }
        if (any && load > best_load) {
          best_load = load;
          best_crane = c;
          best_is_qc = is_qc;
        }
      }
    }
    if (best_crane > 0) {
      std::vector<int> waiting;
      for (int s = 0; s < n_; ++s)
        if (best_is_qc ? (node.qc[s] == best_crane && !node.qc_placed[s])
                       : (inst_.yc_of(node.location[s]) == best_crane && !node.yc_placed[s]))
          waiting.push_back(s);
      const int offset = best_is_qc ? 0 : n_;
      const auto duration = [&](int s) { return best_is_qc ? ships[s].qc_time : ships[s].yc_time; };
      const auto setup = [&](int a, int b) {
        return best_is_qc ? der_.qc_empty_travel(a, b)
                          : inst_.yc_travel()(node.location[a], node.location[b]);
      };
      std::vector<int> candidates;
      for (int k : waiting) {
        // Earliest a task u can follow k, directly or behind another task.
        Time m1 = kInf, m2 = kInf;
        int arg1 = -1;
        for (int u : waiting) {
          if (u == k) continue;
          const Time via = setup(k, u) + duration(u);
          if (via < m1) {
            m2 = m1;
            m1 = via;
            arg1 = u;
          } else if (via < m2) {
            m2 = via;
          }
        }
        bool ok = true;
        for (int u : waiting) {
          if (u == k) continue;
          const Time gap = std::min(setup(k, u), u == arg1 ? m2 : m1);
          if (node.est[offset + k] + duration(k) + gap > node.lst[offset + u]) {
            ok = false;
            break;
          }
        }
        if (ok) candidates.push_back(k);
      }
      std::stable_sort(candidates.begin(), candidates.end(),
                       [&](int a, int b) { return node.est[offset + a] < node.est[offset + b]; });
      const auto kind = best_is_qc ? Decision::Kind::qc_next : Decision::Kind::yc_next;
      for (int k : candidates) out.push_back({kind, best_crane, k});
      if (out.empty()) out.push_back({Decision::Kind::order, -1, -1});  // dead end marker
      return out;
    }

    // 4. Interference tuples the current schedule violates.
    for (std::size_t k = 0; k < der_.interference_set.size(); ++k) {
      if (node.order[k] >= 0 || !ctx_.active(node, k)) continue;
      const auto& t = der_.interference_set[k];
      const Time si = node.est[t.i], sj = node.est[t.j];
      const bool ok = si + ships[t.i].qc_time + t.delta <= sj || sj + ships[t.j].qc_time + t.delta <= si;
      if (ok) continue;
      const int first = si <= sj ? 0 : 1;
      out.push_back({Decision::Kind::order, static_cast<int>(k), first});
      out.push_back({Decision::Kind::order, static_cast<int>(k), 1 - first});
      return out;
    }
    return out;
  }

  /// Applies the decision; false for the dead-end marker.
  bool apply(SearchNode& node, const Decision& d) const {
    switch (d.kind) {
      case Decision::Kind::location: ctx_.assign_location(node, d.a, d.b); break;
      case Decision::Kind::qc: ctx_.assign_qc(node, d.a, d.b); break;
      case Decision::Kind::qc_next: ctx_.append_qc(node, d.a, d.b); break;
      case Decision::Kind::yc_next: ctx_.append_yc(node, d.a, d.b); break;
      case Decision::Kind::order:
        if (d.a < 0) return false;
        ctx_.decide_order(node, d.a, d.b == 0 ? Order::i_first : Order::j_first);
        break;
    }
    ++node.depth;
    return true;
  }

  void dfs(const SearchNode& node) {
    if (shared_.stop.load()) {
      shared_.note_open(node.lower_bound);
      return;
    }
    if ((shared_.nodes.fetch_add(1) & 31) == 0 && shared_.elapsed() >= shared_.time_limit) {
      shared_.stop.store(true);
      shared_.note_open(node.lower_bound);
      return;
    }
    const auto decisions = branch(node);
    if (decisions.empty()) {
      record_leaf(node);
      return;
    }
    for (const auto& d : decisions) {
      SearchNode child = node;
      if (!apply(child, d)) continue;
      if (!ctx_.propagate(child, shared_.bound())) continue;
      if (shared_.stop.load()) {
        shared_.note_open(child.lower_bound);
        continue;
      }
      dfs(child);
    }
  }

  void record_leaf(const SearchNode& node) {
    std::lock_guard lock(shared_.mutex);
    if (node.lower_bound >= shared_.upper_bound.load()) return;

    Decisions d;
    for (int s : inst_.inbound()) d.yard_assignment[s] = node.location[s];
    for (int c = 1; c <= inst_.qc_count(); ++c) d.qc_sequences[c] = node.qc_seq[c - 1];
    for (int c = 1; c <= inst_.yc_count(); ++c) d.yc_sequences[c] = node.yc_seq[c - 1];
    for (std::size_t k = 0; k < der_.interference_set.size(); ++k) {
      if (!ctx_.active(node, k)) continue;
      const auto& t = der_.interference_set[k];
      Order o;
      if (node.order[k] >= 0) o = node.order[k] == 0 ? Order::i_first : Order::j_first;
      else o = node.est[t.i] < node.est[t.j] ? Order::i_first : Order::j_first;
      d.interference_order[t.key()] = o;
    }
    Solution sol = compute_schedule(inst_, der_, d);
    if (sol.objective != node.lower_bound)
      throw std::logic_error("leaf bound differs from its schedule objective");
    if (!validate(inst_, der_, sol).empty())
      throw std::logic_error("search produced a solution that fails validation");
    shared_.upper_bound.store(sol.objective);
    shared_.trace.push_back({shared_.elapsed(), sol.objective});
    shared_.incumbent = std::move(sol);
  }

 private:
  const Instance& inst_;
  const DerivedTables& der_;
  mutable SearchContext ctx_;
  Shared& shared_;
  int n_;
};

SolveResult solve(const Instance& instance, const DerivedTables& derived, const SolveParams& params) {
  if (!(params.time_limit > 0)) throw ConfigInvalid("time_limit must be positive");
  Shared shared;
  shared.start = Clock::now();
  shared.time_limit = params.time_limit;
  const int workers = std::max(1, params.workers);

  std::uint64_t propagations = 0;
  SearchEngine main(instance, derived, shared);
  SearchNode root = main.context().root();
  const bool feasible_root = main.context().propagate(root);

  if (feasible_root && workers == 1) {
    main.dfs(root);
    propagations = main.context().propagations();
  } else if (feasible_root) {
    // Split the tree into independent subtrees, keeping DFS order.
    std::vector<SearchNode> frontier{root};
    const std::size_t target = static_cast<std::size_t>(workers) * 8;
    while (frontier.size() < target) {
      bool expanded = false;
      for (std::size_t k = 0; k < frontier.size(); ++k) {
        const auto decisions = main.branch(frontier[k]);
        if (decisions.empty()) continue;
        std::vector<SearchNode> children;
        for (const auto& d : decisions) {
          SearchNode child = frontier[k];
          if (main.apply(child, d) && main.context().propagate(child)) children.push_back(std::move(child));
        }
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(k));
        frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(k),
                        std::make_move_iterator(children.begin()),
                        std::make_move_iterator(children.end()));
        expanded = true;
        break;
      }
      if (!expanded) break;
    }
    propagations = main.context().propagations();

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> worker_props{0};
    const auto run = [&] {
      SearchEngine engine(instance, derived, shared);
      for (std::size_t k; (k = next.fetch_add(1)) < frontier.size();) {
        SearchNode node = frontier[k];
        if (shared.stop.load()) {
          shared.note_open(node.lower_bound);
          continue;
        }
        if (!engine.context().propagate(node, shared.bound())) continue;
        engine.dfs(node);
      }
      worker_props += engine.context().propagations();
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    propagations += worker_props.load();
  }

  SolveResult result;
  auto& r = result.report;
  r.nodes = shared.nodes.load();
  r.propagations = propagations;
  r.wall_time = shared.elapsed();
  r.incumbent_trace = shared.trace;
  const bool finished = !shared.stop.load();
  if (shared.incumbent) {
    const Objective best = shared.incumbent->objective;
    r.best_objective = best;
    r.status = finished ? Status::optimal : Status::feasible;
    r.lower_bound = finished ? best : std::min(best, shared.open_bound);
    r.gap_percent = best == 0 ? 0.0 : static_cast<double>(best - r.lower_bound) * 100.0 / static_cast<double>(best);
    result.solution = shared.incumbent;
    result.solution->status = r.status;
  } else {
    r.status = finished ? Status::infeasible : Status::unknown;
    r.lower_bound = finished ? 0 : (shared.open_bound == kNoBound ? root.lower_bound : shared.open_bound);
  }
  return result;
}

std::string report_to_json(const SolveReport& report, bool include_timing) {
  nlohmann::json doc;
  doc["best_objective"] = report.best_objective ? nlohmann::json(*report.best_objective) : nlohmann::json();
  doc["lower_bound"] = report.lower_bound;
  doc["gap_percent"] = report.gap_percent ? nlohmann::json(*report.gap_percent) : nlohmann::json();
  doc["status"] = to_string(report.status);
  doc["nodes"] = report.nodes;
  doc["propagations"] = report.propagations;
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& p : report.incumbent_trace) {
    nlohmann::json e = {{"objective", p.objective}};
    if (include_timing) e["time"] = p.time;
    trace.push_back(e);
  }
  doc["incumbent_trace"] = trace;
  if (include_timing) doc["wall_time"] = report.wall_time;
  return doc.dump(2) + "\n";
}

}  // namespace ipctp
