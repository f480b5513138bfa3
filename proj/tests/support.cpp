#include "support.hpp"

#include "ipctp/schedule.hpp"

namespace ipctp::testing {

std::vector<Fixture> validator_fixtures(const Instance& instance, const DerivedTables& derived) {
  const Solution base = compute_schedule(instance, derived, fixture_decisions());
  std::vector<Fixture> out;
  const auto add = [&](const char* family, const char* what, auto&& edit) {
    Solution s = base;
    edit(s);
    out.push_back({family, what, std::move(s)});
  };
  const auto w = [&](int vessel) { return instance.vessels()[vessel].weight; };

  add("2-01", "objective off by one", [](Solution& s) { s.objective += 1; });
  add("2-02", "outbound vessel completes early", [&](Solution& s) {
    s.per_vessel_completion[1] -= 1;
    s.objective -= w(1);
  });
  add("2-03", "inbound vessel completes early", [&](Solution& s) {
    s.per_vessel_completion[0] -= 1;
    s.objective -= w(0);
  });
  add("2-04", "two inbound shipments share a location", [](Solution& s) { s.yard_assignment[1] = 0; });
  add("2-05", "inbound shipment without location", [](Solution& s) { s.yard_assignment.erase(1); });
  add("2-06", "idle QC has no sequence", [](Solution& s) { s.qc_sequences.erase(3); });
  add("2-07", "idle YC has no sequence", [](Solution& s) { s.yc_sequences.erase(2); });
  add("2-08", "sequence for a QC that does not exist", [](Solution& s) { s.qc_sequences[4] = {}; });
  add("2-09", "sequence for a YC that does not exist", [](Solution& s) { s.yc_sequences[3] = {}; });
  add("2-10", "shipment on an ineligible QC", [](Solution& s) {
    s.qc_sequences[1] = {0};
    s.qc_sequences[3] = {3};
  });
  add("2-11", "inbound shipment on two YCs", [](Solution& s) { s.yc_sequences[2] = {0}; });
  add("2-12", "outbound shipment on two YCs", [](Solution& s) { s.yc_sequences[2] = {4}; });
  add("2-13", "QC sequence repeats a shipment", [](Solution& s) { s.qc_sequences[1] = {3, 0, 3}; });
  add("2-14", "YC sequence repeats a shipment", [](Solution& s) { s.yc_sequences[1] = {3, 2, 0, 1, 4, 4}; });
  add("2-15", "wrong transfer time", [](Solution& s) { s.yt_time[0] -= 1; });
  add("2-16", "missing inbound to outbound empty travel", [](Solution& s) { s.yc_empty.erase({1, 4}); });
  add("2-17", "missing inbound to inbound empty travel", [](Solution& s) { s.yc_empty.erase({0, 1}); });
  add("2-18", "missing outbound to inbound empty travel", [](Solution& s) { s.yc_empty.erase({2, 0}); });
  add("2-19", "QC successor starts early", [](Solution& s) { s.qc_start[0] -= 1; });
  add("2-20", "YC successor of an inbound starts early", [](Solution& s) { s.yc_start[4] -= 1; });
  add("2-21", "inbound YC successor of an outbound starts early", [](Solution& s) { s.yc_start[0] -= 1; });
  add("2-22", "outbound YC successor of an outbound starts early", [](Solution& s) { s.yc_start[2] -= 1; });
  add("2-23", "outbound QC before its yard handling ends", [](Solution& s) { s.qc_start[3] -= 1; });
  add("2-24", "inbound YC before its truck arrives", [](Solution& s) { s.yc_start[1] -= 1; });
  add("2-25", "recorded order contradicts start times", [](Solution& s) {
    s.interference_order[{0, 1, 1, 2}] = Order::j_first;
  });
  add("2-26", "interfering shipments overlap", [](Solution& s) { s.qc_start[1] = s.qc_start[0]; });
  add("2-27", "separation one short", [](Solution& s) { s.qc_start[1] -= 1; });
  return out;
}

}  // namespace ipctp::testing
