#include "ipctp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>
#include <tuple>

#include "ipctp/error.hpp"
#include "ipctp/schedule.hpp"
#include "ipctp/validate.hpp"
#include "schedule_core.hpp"

namespace ipctp {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t factorial_sat(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= m; ++k) f = mul_sat(f, k);
  return f;
}

// Sequence slot of one crane: fixed prefix followed by a permutable tail.
struct Slot {
  std::vector<int>* seq;
  std::size_t prefix;
};

struct Best {
  Objective objective = std::numeric_limits<Objective>::max();
  std::tuple<std::uint64_t, std::uint64_t> rank{kSaturated, kSaturated};
  detail::DenseDecisions decisions;
  std::vector<std::pair<TupleKey, Order>> orders;
  std::uint64_t enumerated = 0;

  void offer(Objective obj, std::tuple<std::uint64_t, std::uint64_t> r,
             const detail::DenseDecisions& d, const std::vector<std::pair<TupleKey, Order>>& o) {
    if (obj < objective || (obj == objective && r < rank)) {
      objective = obj;
      rank = r;
      decisions = d;
      orders = o;
    }
  }
};

class Enumerator {
 public:
  Enumerator(const Instance& instance, const DerivedTables& derived,
             const OracleRestriction& restriction)
      : inst_(instance),
        der_(derived),
        res_(restriction),
        n_(instance.shipment_count()),
        eval_(instance, derived) {
    location_.assign(n_, -1);
    qc_.assign(n_, 0);
    for (const auto& s : inst_.shipments())
      if (s.outbound()) location_[s.id] = *s.fixed_location;
    used_.assign(inst_.location_count(), 0);
  }

  /// Visits every yard assignment; `f(index)` sees location_ filled in.
  template <typename F>
  void for_each_yard(F&& f) {
    std::uint64_t index = 0;
    yard_rec(0, index, f);
  }

  template <typename F>
  void for_each_qc(F&& f) {
    qc_rec(0, f);
  }

  /// Builds the per-crane slots for the current yard/QC choice. Returns
  /// false when a required prefix cannot be met.
  bool prepare() {
    dense_.location = location_;
    dense_.qc_seqs.assign(inst_.qc_count(), {});
    dense_.yc_seqs.assign(inst_.yc_count(), {});
    for (int s = 0; s < n_; ++s) {
      dense_.qc_seqs[qc_[s] - 1].push_back(s);
      dense_.yc_seqs[inst_.yc_of(location_[s]) - 1].push_back(s);
    }
    slots_.clear();
    for (int pass = 0; pass < 2; ++pass) {
      auto& seqs = pass == 0 ? dense_.qc_seqs : dense_.yc_seqs;
      const auto& prefixes = pass == 0 ? res_.qc_prefix : res_.yc_prefix;
      for (std::size_t c = 0; c < seqs.size(); ++c) {
        std::size_t plen = 0;
        auto it = prefixes.find(static_cast<int>(c) + 1);
        if (it != prefixes.end()) {
          const auto& prefix = it->second;
          auto rest = seqs[c];
          for (int s : prefix) {
            auto pos = std::find(rest.begin(), rest.end(), s);
            if (pos == rest.end()) return false;
            rest.erase(pos);
          }
          seqs[c] = prefix;
          seqs[c].insert(seqs[c].end(), rest.begin(), rest.end());
          plen = prefix.size();
        }
        if (seqs[c].size() - plen > 1) slots_.push_back({&seqs[c], plen});
      }
    }

    std::map<int, int> assignment;
    for (int s = 0; s < n_; ++s) assignment[s] = qc_[s];
    fixed_.clear();
    free_.clear();
    for (const auto& t : active_interferences(der_, assignment)) {
      auto it = res_.orders.find(t.key());
      if (it != res_.orders.end()) fixed_.push_back({t, it->second});
      else free_.push_back(t);
    }
    return true;
  }

  std::uint64_t count_current() const {
    std::uint64_t c = 1;
    for (const auto& slot : slots_) c = mul_sat(c, factorial_sat(slot.seq->size() - slot.prefix));
    for (std::size_t k = 0; k < free_.size(); ++k) c = mul_sat(c, 2);
    return c;
  }

  /// Evaluates every permutation and order of the prepared combination.
  void enumerate(std::uint64_t yard_index, Best& best) {
    yard_index_ = yard_index;
    perm_rec(0, best);
  }

 private:
  template <typename F>
  void yard_rec(std::size_t k, std::uint64_t& index, F& f) {
    const auto& inbound = inst_.inbound();
    if (k == inbound.size()) {
      f(index++);
      return;
    }
    const int s = inbound[k];
    auto fixed = res_.yard.find(s);
    for (int loc : inst_.available_locations()) {
      if (used_[loc]) continue;
      if (fixed != res_.yard.end() && fixed->second != loc) continue;
      used_[loc] = 1;
      location_[s] = loc;
      yard_rec(k + 1, index, f);
      used_[loc] = 0;
    }
    location_[s] = -1;
  }

  template <typename F>
  void qc_rec(int s, F& f) {
    if (s == n_) {
      f();
      return;
    }
    auto fixed = res_.qc.find(s);
    for (int c : der_.eligible_qcs[s]) {
      if (fixed != res_.qc.end() && fixed->second != c) continue;
      qc_[s] = c;
      qc_rec(s + 1, f);
    }
    qc_[s] = 0;
  }

  void perm_rec(std::size_t k, Best& best) {
    if (k == slots_.size()) {
      orders_rec(best);
      return;
    }
    auto& seq = *slots_[k].seq;
    const auto tail = seq.begin() + static_cast<std::ptrdiff_t>(slots_[k].prefix);
    std::sort(tail, seq.end());
    do {
      perm_rec(k + 1, best);
    } while (std::next_permutation(tail, seq.end()));
  }

  void orders_rec(Best& best) {
    const std::uint64_t masks = std::uint64_t{1} << free_.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      ++best.enumerated;
      const std::uint64_t local = local_counter_++;
      dense_.interference.clear();
      orders_.clear();
      for (const auto& [t, o] : fixed_) {
        add_order(t, o);
      }
      for (std::size_t b = 0; b < free_.size(); ++b)
        add_order(free_[b], (mask >> b) & 1 ? Order::j_first : Order::i_first);
      if (!eval_.evaluate(dense_, qc_start_, yc_start_)) continue;
      const Objective obj = eval_.objective(qc_start_, yc_start_);
      if (obj <= best.objective) best.offer(obj, {yard_index_, local}, dense_, orders_);
    }
  }

  void add_order(const InterferenceTuple& t, Order o) {
    orders_.push_back({t.key(), o});
    if (o == Order::i_first) dense_.interference.push_back({t.i, t.j, t.delta});
    else dense_.interference.push_back({t.j, t.i, t.delta});
  }

  const Instance& inst_;
  const DerivedTables& der_;
  const OracleRestriction& res_;
  int n_;
  detail::ScheduleEvaluator eval_;

  std::vector<int> location_;
  std::vector<int> qc_;
  std::vector<char> used_;
  detail::DenseDecisions dense_;
  std::vector<Slot> slots_;
  std::vector<std::pair<InterferenceTuple, Order>> fixed_;
  std::vector<InterferenceTuple> free_;
  std::vector<std::pair<TupleKey, Order>> orders_;
  std::vector<Time> qc_start_, yc_start_;
  std::uint64_t yard_index_ = 0;
  std::uint64_t local_counter_ = 0;
};

}  // namespace

std::uint64_t count_combinations(const Instance& instance, const DerivedTables& derived,
                                 const OracleRestriction& restriction) {
  Enumerator e(instance, derived, restriction);
  std::uint64_t total = 0;
  e.for_each_yard([&](std::uint64_t) {
    e.for_each_qc([&] {
      if (e.prepare()) total = add_sat(total, e.count_current());
    });
  });
  return total;
}

OracleResult brute_force(const Instance& instance, const DerivedTables& derived,
                         const OracleOptions& options) {
  const std::uint64_t combos = count_combinations(instance, derived, options.restriction);
  if (combos > options.limit)
    throw BudgetExceeded(std::to_string(combos) + " combinations exceed the budget of " +
                         std::to_string(options.limit));

  const int workers = std::max(1, options.workers);
  std::vector<Best> partial(workers);
  const auto run = [&](int worker) {
    Enumerator e(instance, derived, options.restriction);
    e.for_each_yard([&](std::uint64_t index) {
      if (index % static_cast<std::uint64_t>(workers) != static_cast<std::uint64_t>(worker)) return;
      e.for_each_qc([&] {
        if (e.prepare()) e.enumerate(index, partial[worker]);
      });
    });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  Best best;
  std::uint64_t enumerated = 0;
  for (auto& p : partial) {
    enumerated += p.enumerated;
    if (p.objective < best.objective || (p.objective == best.objective && p.rank < best.rank))
      best = std::move(p);
  }
  if (best.objective == std::numeric_limits<Objective>::max())
    throw NoFeasibleSolution("no acyclic decision combination exists");

  Decisions d;
  for (int s : instance.inbound()) d.yard_assignment[s] = best.decisions.location[s];
  for (int c = 1; c <= instance.qc_count(); ++c) d.qc_sequences[c] = best.decisions.qc_seqs[c - 1];
  for (int c = 1; c <= instance.yc_count(); ++c) d.yc_sequences[c] = best.decisions.yc_seqs[c - 1];
  for (const auto& [key, o] : best.orders) d.interference_order[key] = o;

  OracleResult result;
  result.best_solution = compute_schedule(instance, derived, d);
  result.best_solution.status = Status::optimal;
  result.best_objective = result.best_solution.objective;
  result.enumerated = enumerated;
  if (result.best_objective != best.objective || !validate(instance, derived, result.best_solution).empty())
    throw std::logic_error("oracle optimum failed re-validation");
  return result;
}

}  // namespace ipctp
