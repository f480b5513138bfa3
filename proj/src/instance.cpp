#include "ipctp/instance.hpp"

#include <fstream>
#include <sstream>

#include "ipctp/error.hpp"
#include "json_util.hpp"

namespace ipctp {

namespace {

std::string at(const char* what, int id) {
  std::ostringstream out;
  out << what << "[" << id << "]";
  return out.str();
}

}  // namespace

Instance::Instance(std::vector<Vessel> vessels, std::vector<Shipment> shipments,
                   std::vector<YardLocation> yard_locations, Geometry geometry,
                   Matrix<Time> yc_travel, std::vector<Time> yt_inbound_transfer)
    : vessels_(std::move(vessels)),
      shipments_(std::move(shipments)),
      locations_(std::move(yard_locations)),
      geometry_(geometry),
      yc_travel_(std::move(yc_travel)),
      transfer_(std::move(yt_inbound_transfer)) {
  check();
  for (const auto& s : shipments_) (s.inbound() ? inbound_ : outbound_).push_back(s.id);
  for (const auto& l : locations_)
    if (l.reserved_for == Reservation::inbound_available) available_.push_back(l.id);
}

void Instance::check() const {
  const auto fail = [](const std::string& msg) { throw InstanceInvalid(msg); };

  if (geometry_.total_bays < 1) fail("geometry.B_T must be positive");
  if (geometry_.qc_count < 1) fail("geometry.QC_T must be positive");
  if (geometry_.yc_count < 1) fail("geometry.yc_count must be positive");
  if (geometry_.safety_distance < 0) fail("geometry.delta must be nonnegative");
  if (geometry_.qc_unit_travel < 0) fail("geometry.s_qc must be nonnegative");

  for (int v = 0; v < vessel_count(); ++v) {
    if (vessels_[v].id != v) fail(at("vessels", v) + ".id must equal its position");
    if (vessels_[v].weight <= 0) fail(at("vessels", v) + ".weight must be positive");
  }

  const int nl = location_count();
  for (int k = 0; k < nl; ++k) {
    const auto& l = locations_[k];
    if (l.id != k) fail(at("yard_locations", k) + ".id must equal its position");
    if (l.yc < 1 || l.yc > geometry_.yc_count)
      fail(at("yard_locations", k) + ".yc out of range");
  }

  std::vector<int> referenced(nl, 0);
  for (int i = 0; i < shipment_count(); ++i) {
    const auto& s = shipments_[i];
    const auto where = at("shipments", i);
    if (s.id != i) fail(where + ".id must equal its position");
    if (s.vessel < 0 || s.vessel >= vessel_count()) fail(where + ".vessel unknown");
    if (s.bay < 1 || s.bay > geometry_.total_bays) fail(where + ".bay outside [1, B_T]");
    if (s.containers <= 0) fail(where + ".containers must be positive");
    if (s.qc_time <= 0) fail(where + ".qc_time must be positive");
    if (s.yc_time <= 0) fail(where + ".yc_time must be positive");
    if (s.outbound()) {
      if (!s.fixed_location || !s.yt_outbound_time)
        fail(where + ": outbound shipment needs fixed_location and yt_outbound_time");
      const int l = *s.fixed_location;
      if (l < 0 || l >= nl) fail(where + ".fixed_location unknown");
      if (locations_[l].reserved_for != Reservation::outbound_fixed)
        fail(where + ".fixed_location is not outbound-fixed");
      if (*s.yt_outbound_time < 0) fail(where + ".yt_outbound_time must be nonnegative");
      ++referenced[l];
    } else if (s.fixed_location || s.yt_outbound_time) {
      fail(where + ": inbound shipment cannot carry fixed_location/yt_outbound_time");
    }
  }
  for (int k = 0; k < nl; ++k)
    if (locations_[k].reserved_for == Reservation::outbound_fixed && referenced[k] != 1)
      fail(at("yard_locations", k) + " must be referenced by exactly one outbound shipment");

  if (static_cast<int>(yc_travel_.size()) != nl) fail("travel.tyc must be |L| x |L|");
  for (int k = 0; k < nl; ++k) {
    if (yc_travel_(k, k) != 0) fail("travel.tyc must have a zero diagonal");
    for (int l = 0; l < nl; ++l) {
      if (yc_travel_(k, l) < 0) fail("travel.tyc must be nonnegative");
      if (yc_travel_(k, l) != yc_travel_(l, k)) fail("travel.tyc must be symmetric");
    }
  }
  if (static_cast<int>(transfer_.size()) != nl) fail("travel.tt must have |L| entries");
  for (Time t : transfer_)
    if (t < 0) fail("travel.tt must be nonnegative");
}

std::string to_string(Direction d) { return d == Direction::inbound ? "inbound" : "outbound"; }

std::string to_string(Field f) {
  switch (f) {
    case Field::A: return "A";
    case Field::B: return "B";
    case Field::C: return "C";
  }
  return "?";
}

std::string to_string(Reservation r) {
  return r == Reservation::inbound_available ? "inbound-available" : "outbound-fixed";
}

std::string instance_to_json(const Instance& instance) {
  using nlohmann::json;
  json doc;
  json vessels = json::array();
  for (const auto& v : instance.vessels()) vessels.push_back({{"id", v.id}, {"weight", v.weight}});
  doc["vessels"] = vessels;

  json shipments = json::array();
  for (const auto& s : instance.shipments()) {
    json j = {{"id", s.id},           {"vessel", s.vessel},   {"direction", to_string(s.direction)},
              {"bay", s.bay},         {"containers", s.containers},
              {"qc_time", s.qc_time}, {"yc_time", s.yc_time}};
    if (s.fixed_location) j["fixed_location"] = *s.fixed_location;
    if (s.yt_outbound_time) j["yt_outbound_time"] = *s.yt_outbound_time;
    shipments.push_back(j);
  }
  doc["shipments"] = shipments;

  json locations = json::array();
  for (const auto& l : instance.yard_locations())
    locations.push_back({{"id", l.id},
                         {"yc", l.yc},
                         {"block_group", l.block_group},
                         {"field", to_string(l.field)},
                         {"reserved_for", to_string(l.reserved_for)}});
  doc["yard_locations"] = locations;

  const auto& g = instance.geometry();
  doc["geometry"] = {{"B_T", g.total_bays},
                     {"QC_T", g.qc_count},
                     {"yc_count", g.yc_count},
                     {"delta", g.safety_distance},
                     {"s_qc", g.qc_unit_travel}};

  const int nl = instance.location_count();
  json tyc = json::array();
  for (int k = 0; k < nl; ++k) {
    json row = json::array();
    for (int l = 0; l < nl; ++l) row.push_back(instance.yc_travel()(k, l));
    tyc.push_back(row);
  }
  doc["travel"] = {{"tyc", tyc}, {"tt", instance.yt_inbound_transfer()}};
  return doc.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  using detail::JsonReader;
  const auto doc = detail::parse_json(text);
  JsonReader root(doc, "");

  std::vector<Vessel> vessels;
  for (const auto& v : root.array("vessels"))
    vessels.push_back({v.get_int("id"), v.get_int64("weight")});

  std::vector<Shipment> shipments;
  for (const auto& s : root.array("shipments")) {
    Shipment sh;
    sh.id = s.get_int("id");
    sh.vessel = s.get_int("vessel");
    const auto dir = s.get_string("direction");
    if (dir == "inbound") sh.direction = Direction::inbound;
    else if (dir == "outbound") sh.direction = Direction::outbound;
    else s.fail("direction", "expected \"inbound\" or \"outbound\"");
    sh.bay = s.get_int("bay");
    sh.containers = s.get_int("containers");
    sh.qc_time = s.get_int64("qc_time");
    sh.yc_time = s.get_int64("yc_time");
    if (s.has("fixed_location")) sh.fixed_location = s.get_int("fixed_location");
    if (s.has("yt_outbound_time")) sh.yt_outbound_time = s.get_int64("yt_outbound_time");
    shipments.push_back(sh);
  }

  std::vector<YardLocation> locations;
  for (const auto& l : root.array("yard_locations")) {
    YardLocation loc;
    loc.id = l.get_int("id");
    loc.yc = l.get_int("yc");
    loc.block_group = l.get_int("block_group");
    const auto field = l.get_string("field");
    if (field == "A") loc.field = Field::A;
    else if (field == "B") loc.field = Field::B;
    else if (field == "C") loc.field = Field::C;
    else l.fail("field", "expected one of A, B, C");
    const auto res = l.get_string("reserved_for");
    if (res == "inbound-available") loc.reserved_for = Reservation::inbound_available;
    else if (res == "outbound-fixed") loc.reserved_for = Reservation::outbound_fixed;
    else l.fail("reserved_for", "expected \"inbound-available\" or \"outbound-fixed\"");
    locations.push_back(loc);
  }

  const auto geo = root.object("geometry");
  Geometry g;
  g.total_bays = geo.get_int("B_T");
  g.qc_count = geo.get_int("QC_T");
  g.yc_count = geo.get_int("yc_count");
  g.safety_distance = geo.get_int("delta");
  g.qc_unit_travel = geo.get_int64("s_qc");

  const auto travel = root.object("travel");
  const auto rows = travel.array("tyc");
  Matrix<Time> tyc(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto row = rows[k].int64_list();
    if (row.size() != rows.size()) rows[k].fail("", "tyc must be square");
    for (std::size_t l = 0; l < row.size(); ++l) tyc(k, l) = row[l];
  }
  const auto tt = travel.get_int64_list("tt");

  return Instance(std::move(vessels), std::move(shipments), std::move(locations), g,
                  std::move(tyc), tt);
}

Instance load_instance(const std::string& path) {
  return instance_from_json(detail::read_file(path));
}

void save_instance(const Instance& instance, const std::string& path) {
  detail::write_file(path, instance_to_json(instance));
}

}  // namespace ipctp
