#include "ipctp/solution.hpp"

#include "ipctp/error.hpp"
#include "json_util.hpp"

namespace ipctp {

std::map<int, int> Decisions::qc_assignment() const {
  std::map<int, int> out;
  for (const auto& [crane, seq] : qc_sequences)
    for (int s : seq) out[s] = crane;
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::feasible: return "feasible";
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

Status status_from_string(const std::string& s) {
  if (s == "feasible") return Status::feasible;
  if (s == "optimal") return Status::optimal;
  if (s == "infeasible") return Status::infeasible;
  if (s == "unknown") return Status::unknown;
  throw FormatError("status: unknown value \"" + s + "\"");
}

namespace {

using nlohmann::json;

template <typename V>
json keyed(const std::map<int, V>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

int parse_key(const detail::JsonReader& where, const std::string& key) {
  try {
    std::size_t used = 0;
    const int k = std::stoi(key, &used);
    if (used == key.size()) return k;
  } catch (const std::exception&) {
  }
  where.fail(key, "object keys must be integer ids");
}

std::map<int, std::vector<int>> read_sequences(const detail::JsonReader& r, const std::string& key) {
  std::map<int, std::vector<int>> out;
  const auto obj = r.object(key);
  for (const auto& [k, v] : obj.raw().items()) {
    std::vector<int> seq;
    for (auto x : obj.child(k).int64_list()) seq.push_back(static_cast<int>(x));
    out[parse_key(obj, k)] = std::move(seq);
  }
  return out;
}

std::map<int, Time> read_times(const detail::JsonReader& r, const std::string& key) {
  std::map<int, Time> out;
  if (!r.has(key)) return out;
  const auto obj = r.object(key);
  for (const auto& [k, v] : obj.raw().items()) out[parse_key(obj, k)] = obj.get_int64(k);
  return out;
}

}  // namespace

std::string solution_to_json(const Solution& solution) {
  json doc;
  doc["yard_assignment"] = keyed(solution.yard_assignment);
  doc["qc_sequences"] = keyed(solution.qc_sequences);
  doc["yc_sequences"] = keyed(solution.yc_sequences);

  json orders = json::array();
  for (const auto& [key, order] : solution.interference_order)
    orders.push_back({{"i", key[0]},
                      {"j", key[1]},
                      {"v", key[2]},
                      {"w", key[3]},
                      {"first", order == Order::i_first ? "i" : "j"}});
  doc["interference_order"] = orders;

  json starts = json::object();
  for (const auto& [s, t] : solution.qc_start) starts[std::to_string(s)]["qc"] = t;
  for (const auto& [s, t] : solution.yc_start) starts[std::to_string(s)]["yc"] = t;
  doc["starts"] = starts;

  doc["yt_time"] = keyed(solution.yt_time);
  json empty = json::array();
  for (const auto& [pair, t] : solution.yc_empty)
    empty.push_back({{"from", pair.first}, {"to", pair.second}, {"time", t}});
  doc["yc_empty"] = empty;
  doc["objective"] = solution.objective;
  doc["per_vessel_completion"] = keyed(solution.per_vessel_completion);
  doc["status"] = to_string(solution.status);
  return doc.dump(2) + "\n";
}

Solution solution_from_json(const std::string& text) {
  const auto doc = detail::parse_json(text);
  detail::JsonReader root(doc, "");
  Solution sol;

  const auto yard = root.object("yard_assignment");
  for (const auto& [k, v] : yard.raw().items())
    sol.yard_assignment[parse_key(yard, k)] = yard.get_int(k);
  sol.qc_sequences = read_sequences(root, "qc_sequences");
  sol.yc_sequences = read_sequences(root, "yc_sequences");

  for (const auto& e : root.array("interference_order")) {
    const TupleKey key{e.get_int("i"), e.get_int("j"), e.get_int("v"), e.get_int("w")};
    const auto first = e.get_string("first");
    if (first != "i" && first != "j") e.fail("first", "expected \"i\" or \"j\"");
    sol.interference_order[key] = first == "i" ? Order::i_first : Order::j_first;
  }

  const auto starts = root.object("starts");
  for (const auto& [k, v] : starts.raw().items()) {
    const int s = parse_key(starts, k);
    const auto entry = starts.object(k);
    if (entry.has("qc")) sol.qc_start[s] = entry.get_int64("qc");
    if (entry.has("yc")) sol.yc_start[s] = entry.get_int64("yc");
  }

  sol.yt_time = read_times(root, "yt_time");
  if (root.has("yc_empty"))
    for (const auto& e : root.array("yc_empty"))
      sol.yc_empty[{e.get_int("from"), e.get_int("to")}] = e.get_int64("time");
  sol.objective = root.get_int64("objective");
  sol.per_vessel_completion = read_times(root, "per_vessel_completion");
  sol.status = root.has("status") ? status_from_string(root.get_string("status")) : Status::unknown;
  return sol;
}

Solution load_solution(const std::string& path) {
  return solution_from_json(detail::read_file(path));
}

void save_solution(const Solution& solution, const std::string& path) {
  detail::write_file(path, solution_to_json(solution));
}

}  // namespace ipctp
