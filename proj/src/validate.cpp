#include "ipctp/validate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ipctp/schedule.hpp"

namespace ipctp {

namespace {

class Checker {
 public:
  Checker(const Instance& instance, const DerivedTables& derived, const Solution& sol)
      : inst_(instance), der_(derived), sol_(sol), n_(instance.shipment_count()) {}

  std::vector<Violation> run() {
    check_starts();
    check_yard();
    check_sequence_keys();
    check_qc_sequences();
    check_yc_sequences();
    check_transfer_times();
    check_yc_empty_and_timing();
    check_precedence();
    check_interference();
    check_completion();
    return std::move(out_);
  }

 private:
  void add(const char* family, const char* kind, std::vector<int> ids, const std::string& msg) {
    out_.push_back({family, kind, std::move(ids), msg});
  }

  static std::string str(std::initializer_list<std::string> parts) {
    std::string s;
    for (const auto& p : parts) s += p;
    return s;
  }
  static std::string num(long long v) { return std::to_string(v); }

  const Time* qc_start(int s) const {
    auto it = sol_.qc_start.find(s);
    return it == sol_.qc_start.end() || it->second < 0 ? nullptr : &it->second;
  }
  const Time* yc_start(int s) const {
    auto it = sol_.yc_start.find(s);
    return it == sol_.yc_start.end() || it->second < 0 ? nullptr : &it->second;
  }

  void check_starts() {
    for (int s = 0; s < n_; ++s) {
      for (const auto* starts : {&sol_.qc_start, &sol_.yc_start}) {
        const char* which = starts == &sol_.qc_start ? "QC" : "YC";
        auto it = starts->find(s);
        if (it == starts->end())
          add("bounds", "MissingStart", {s}, str({"shipment ", num(s), " has no ", which, " start"}));
        else if (it->second < 0)
          add("bounds", "NegativeStart", {s}, str({"shipment ", num(s), " starts before 0 on its ", which}));
      }
    }
  }

  // Location families 2-04 and 2-05. location_[s] is the yard location used by s or -1.
  void check_yard() {
    location_.assign(n_, -1);
    std::map<int, std::vector<int>> users;
    for (const auto& [s, loc] : sol_.yard_assignment) {
      const bool valid_ship = s >= 0 && s < n_ && inst_.shipment(s).inbound();
      const bool valid_loc = loc >= 0 && loc < inst_.location_count() &&
                             inst_.location(loc).reserved_for == Reservation::inbound_available;
      if (!valid_ship || !valid_loc) {
        add("2-05", "LocationCoverage", {s, loc},
            str({"shipment ", num(s), " cannot be assigned to location ", num(loc)}));
        continue;
      }
      location_[s] = loc;
      users[loc].push_back(s);
    }
    for (int s : inst_.inbound())
      if (!sol_.yard_assignment.count(s))
        add("2-05", "LocationCoverage", {s}, str({"inbound shipment ", num(s), " has no yard location"}));
    for (const auto& [loc, ships] : users)
      if (ships.size() > 1) {
        std::vector<int> ids{loc};
        ids.insert(ids.end(), ships.begin(), ships.end());
        add("2-04", "CapacityViolation", ids,
            str({"location ", num(loc), " stores ", num(ships.size()), " inbound shipments"}));
      }
    for (int s : inst_.outbound()) location_[s] = *inst_.shipment(s).fixed_location;
  }

  // Families 2-06 to 2-09: every crane has exactly one, possibly empty, sequence.
  void check_sequence_keys() {
    for (int c = 1; c <= inst_.qc_count(); ++c)
      if (!sol_.qc_sequences.count(c))
        add("2-06", "QcSequenceMissing", {c}, str({"QC ", num(c), " has no sequence"}));
    for (int c = 1; c <= inst_.yc_count(); ++c)
      if (!sol_.yc_sequences.count(c))
        add("2-07", "YcSequenceMissing", {c}, str({"YC ", num(c), " has no sequence"}));
    for (const auto& [c, seq] : sol_.qc_sequences)
      if (c < 1 || c > inst_.qc_count())
        add("2-08", "QcSequenceExtra", {c}, str({"sequence for unknown QC ", num(c)}));
    for (const auto& [c, seq] : sol_.yc_sequences)
      if (c < 1 || c > inst_.yc_count())
        add("2-09", "YcSequenceExtra", {c}, str({"sequence for unknown YC ", num(c)}));
  }

  // A sequence is well formed when it lists known shipments without repeats.
  bool well_formed(const std::vector<int>& seq) const {
    std::set<int> seen;
    for (int s : seq)
      if (s < 0 || s >= n_ || !seen.insert(s).second) return false;
    return true;
  }

  void check_qc_sequences() {
    qc_of_.assign(n_, 0);
    std::vector<std::set<int>> cranes(n_);
    for (const auto& [c, seq] : sol_.qc_sequences) {
      if (c < 1 || c > inst_.qc_count()) continue;
      if (!well_formed(seq)) {
        add("2-13", "QcSequenceFlow", {c}, str({"QC ", num(c), " sequence repeats or names unknown shipments"}));
        continue;
      }
      good_qc_.push_back(c);
      for (int s : seq) cranes[s].insert(c);
    }
    // Shipments on malformed sequences are still counted for assignment.
    for (const auto& [c, seq] : sol_.qc_sequences) {
      if (c < 1 || c > inst_.qc_count() || well_formed(seq)) continue;
      for (int s : seq)
        if (s >= 0 && s < n_) cranes[s].insert(c);
    }
    for (int s = 0; s < n_; ++s) {
      if (cranes[s].size() != 1) {
        add("2-10", "EligibilityViolation", {s},
            str({"shipment ", num(s), " is handled by ", num(cranes[s].size()), " QCs"}));
        continue;
      }
      const int c = *cranes[s].begin();
      const auto& elig = der_.eligible_qcs[s];
      if (!std::binary_search(elig.begin(), elig.end(), c)) {
        add("2-10", "EligibilityViolation", {s, c},
            str({"QC ", num(c), " is not eligible for shipment ", num(s)}));
        continue;
      }
      qc_of_[s] = c;
    }
  }

  void check_yc_sequences() {
    std::vector<std::set<int>> cranes(n_);
    for (const auto& [c, seq] : sol_.yc_sequences) {
      if (c < 1 || c > inst_.yc_count()) continue;
      const bool ok = well_formed(seq);
      if (!ok)
        add("2-14", "YcSequenceFlow", {c}, str({"YC ", num(c), " sequence repeats or names unknown shipments"}));
      else
        good_yc_.push_back(c);
      for (int s : seq)
        if (s >= 0 && s < n_) cranes[s].insert(c);
    }
    for (int s = 0; s < n_; ++s) {
      if (location_[s] < 0) continue;
      const int want = inst_.yc_of(location_[s]);
      if (cranes[s].size() != 1 || *cranes[s].begin() != want) {
        const bool in = inst_.shipment(s).inbound();
        add(in ? "2-11" : "2-12", in ? "InboundYcMembership" : "OutboundYcMembership", {s, want},
            str({"shipment ", num(s), " must be handled exactly once by YC ", num(want)}));
      }
    }
  }

  void check_transfer_times() {
    for (int s : inst_.inbound()) {
      if (location_[s] < 0) continue;
      const Time expect = inst_.yt_inbound_transfer()[location_[s]];
      auto it = sol_.yt_time.find(s);
      if (it == sol_.yt_time.end() || it->second != expect)
        add("2-15", "TransferTime", {s},
            str({"shipment ", num(s), " transfer time must be ", num(expect)}));
    }
  }

  void check_yc_empty_and_timing() {
    for (int c : good_yc_) {
      const auto& seq = sol_.yc_sequences.at(c);
      for (std::size_t k = 1; k < seq.size(); ++k) {
        const int a = seq[k - 1], b = seq[k];
        if (location_[a] < 0 || location_[b] < 0) continue;
        const bool ain = inst_.shipment(a).inbound(), bin = inst_.shipment(b).inbound();
        const Time expect = yc_setup(inst_, location_[a], location_[b]);
        Time setup = expect;
        if (ain || bin) {
          const char* family = ain && bin ? "2-17" : (ain ? "2-16" : "2-18");
          auto it = sol_.yc_empty.find({a, b});
          if (it == sol_.yc_empty.end() || it->second != expect)
            add(family, "YcEmptyTravel", {a, b},
                str({"YC empty travel ", num(a), "->", num(b), " must be ", num(expect)}));
          if (it != sol_.yc_empty.end()) setup = it->second;
        }
        const Time* sa = yc_start(a);
        const Time* sb = yc_start(b);
        if (!sa || !sb) continue;
        const char* family = ain ? "2-20" : (bin ? "2-21" : "2-22");
        const Time need = *sa + inst_.shipment(a).yc_time + setup;
        if (*sb < need)
          add(family, "YcSequenceTiming", {a, b},
              str({"YC start of ", num(b), " is ", num(*sb), ", needs >= ", num(need)}));
      }
    }
    for (int c : good_qc_) {
      const auto& seq = sol_.qc_sequences.at(c);
      for (std::size_t k = 1; k < seq.size(); ++k) {
        const int a = seq[k - 1], b = seq[k];
        const Time* sa = qc_start(a);
        const Time* sb = qc_start(b);
        if (!sa || !sb) continue;
        const Time need = *sa + inst_.shipment(a).qc_time + der_.qc_empty_travel(a, b);
        if (*sb < need)
          add("2-19", "QcSequenceTiming", {a, b},
              str({"QC start of ", num(b), " is ", num(*sb), ", needs >= ", num(need)}));
      }
    }
  }

  void check_precedence() {
    for (const auto& s : inst_.shipments()) {
      const Time* q = qc_start(s.id);
      const Time* y = yc_start(s.id);
      if (!q || !y) continue;
      if (s.outbound()) {
        const Time need = *y + s.yc_time + *s.yt_outbound_time;
        if (*q < need)
          add("2-23", "OutboundPrecedence", {s.id},
              str({"QC start of ", num(s.id), " is ", num(*q), ", needs >= ", num(need)}));
      } else {
        if (location_[s.id] < 0) continue;
        auto it = sol_.yt_time.find(s.id);
        const Time t = it != sol_.yt_time.end() ? it->second
                                                : inst_.yt_inbound_transfer()[location_[s.id]];
        const Time need = *q + s.qc_time + t;
        if (*y < need)
          add("2-24", "InboundPrecedence", {s.id},
              str({"YC start of ", num(s.id), " is ", num(*y), ", needs >= ", num(need)}));
      }
    }
  }

  void check_interference() {
    std::map<int, int> assignment;
    for (int s = 0; s < n_; ++s)
      if (qc_of_[s]) assignment[s] = qc_of_[s];
    for (const auto& t : active_interferences(der_, assignment)) {
      const std::vector<int> ids{t.i, t.j, t.v, t.w};
      const Time* si = qc_start(t.i);
      const Time* sj = qc_start(t.j);
      const auto it = sol_.interference_order.find(t.key());
      if (it == sol_.interference_order.end()) {
        add("2-26", "InterferenceOverlap", ids, "active interference tuple has no order");
        continue;
      }
      if (!si || !sj) continue;
      const Time ei = *si + inst_.shipment(t.i).qc_time;
      const Time ej = *sj + inst_.shipment(t.j).qc_time;
      if (*si < ej && *sj < ei) {
        add("2-26", "InterferenceOverlap", ids,
            str({"shipments ", num(t.i), " and ", num(t.j), " overlap on interfering QCs"}));
        continue;
      }
      const bool i_first = it->second == Order::i_first;
      const int f = i_first ? t.i : t.j;
      const Time sf = i_first ? *si : *sj;
      const Time sg = i_first ? *sj : *si;
      if (sg < sf) {
        add("2-25", "InterferenceOrder", ids, "recorded interference order contradicts start times");
        continue;
      }
      const Time need = sf + inst_.shipment(f).qc_time + t.delta;
      if (sg < need)
        add("2-27", "InterferenceViolation", ids,
            str({"second start ", num(sg), " needs >= ", num(need)}));
    }
  }

  void check_completion() {
    std::vector<Time> reported(inst_.vessel_count(), 0);
    bool complete = true;
    for (const auto& v : inst_.vessels()) {
      auto it = sol_.per_vessel_completion.find(v.id);
      if (it == sol_.per_vessel_completion.end()) complete = false;
      else reported[v.id] = it->second;
    }
    for (const auto& s : inst_.shipments()) {
      const Time* start = s.inbound() ? yc_start(s.id) : qc_start(s.id);
      const bool has = sol_.per_vessel_completion.count(s.vessel) > 0;
      const char* family = s.inbound() ? "2-03" : "2-02";
      const char* kind = s.inbound() ? "InboundCompletion" : "OutboundCompletion";
      if (!has) {
        add(family, kind, {s.vessel, s.id}, str({"vessel ", num(s.vessel), " has no completion time"}));
        continue;
      }
      if (!start) continue;
      const Time end = *start + (s.inbound() ? s.yc_time : s.qc_time);
      if (reported[s.vessel] < end)
        add(family, kind, {s.vessel, s.id},
            str({"vessel ", num(s.vessel), " completes at ", num(reported[s.vessel]),
                 " before shipment ", num(s.id), " ends at ", num(end)}));
    }
    if (!complete) return;
    Objective total = 0;
    for (const auto& v : inst_.vessels()) total += v.weight * reported[v.id];
    if (total != sol_.objective)
      add("2-01", "ObjectiveMismatch", {},
          str({"objective ", num(sol_.objective), " differs from weighted completions ", num(total)}));
  }

  const Instance& inst_;
  const DerivedTables& der_;
  const Solution& sol_;
  int n_;
  std::vector<int> location_;
  std::vector<int> qc_of_;
  std::vector<int> good_qc_;
  std::vector<int> good_yc_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate(const Instance& instance, const DerivedTables& derived,
                                const Solution& solution) {
  return Checker(instance, derived, solution).run();
}

std::string violations_to_json(const std::vector<Violation>& violations) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : violations)
    out.push_back({{"family", v.family}, {"kind", v.kind}, {"ids", v.ids}, {"message", v.message}});
  return out.dump(2) + "\n";
}

}  // namespace ipctp
