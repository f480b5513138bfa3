#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ipctp/matrix.hpp"

namespace ipctp {

using Time = std::int64_t;
using Objective = std::int64_t;

enum class Direction { inbound, outbound };
enum class Field { A, B, C };
enum class Reservation { inbound_available, outbound_fixed };

struct Vessel {
  int id = 0;
  std::int64_t weight = 1;
};

/// A group of containers handled as one batch by one QC and one YC.
struct Shipment {
  int id = 0;
  int vessel = 0;
  Direction direction = Direction::inbound;
  int bay = 1;
  int containers = 1;
  Time qc_time = 1;
  Time yc_time = 1;
  std::optional<int> fixed_location;     // outbound only
  std::optional<Time> yt_outbound_time;  // outbound only

  bool inbound() const { return direction == Direction::inbound; }
  bool outbound() const { return direction == Direction::outbound; }
};

struct YardLocation {
  int id = 0;
  int yc = 1;
  int block_group = 0;
  Field field = Field::A;
  Reservation reserved_for = Reservation::inbound_available;
};

struct Geometry {
  int total_bays = 1;
  int qc_count = 1;
  int yc_count = 1;
  int safety_distance = 0;
  Time qc_unit_travel = 0;
};

/// Immutable problem data. Ids of vessels, shipments and yard locations are
/// their positions (0-based); quay and yard crane ids are 1-based.
/// The constructor checks every structural invariant and throws
/// InstanceInvalid on the first one that fails.
class Instance {
 public:
  Instance(std::vector<Vessel> vessels, std::vector<Shipment> shipments,
           std::vector<YardLocation> yard_locations, Geometry geometry,
           Matrix<Time> yc_travel, std::vector<Time> yt_inbound_transfer);

  const std::vector<Vessel>& vessels() const { return vessels_; }
  const std::vector<Shipment>& shipments() const { return shipments_; }
  const std::vector<YardLocation>& yard_locations() const { return locations_; }
  const Geometry& geometry() const { return geometry_; }
  const Matrix<Time>& yc_travel() const { return yc_travel_; }
  const std::vector<Time>& yt_inbound_transfer() const { return transfer_; }

  int shipment_count() const { return static_cast<int>(shipments_.size()); }
  int location_count() const { return static_cast<int>(locations_.size()); }
  int vessel_count() const { return static_cast<int>(vessels_.size()); }
  int qc_count() const { return geometry_.qc_count; }
  int yc_count() const { return geometry_.yc_count; }

  const Shipment& shipment(int id) const { return shipments_.at(id); }
  const YardLocation& location(int id) const { return locations_.at(id); }
  int yc_of(int location) const { return locations_.at(location).yc; }

  /// C_u, C_l and L_u, each sorted by id.
  const std::vector<int>& inbound() const { return inbound_; }
  const std::vector<int>& outbound() const { return outbound_; }
  const std::vector<int>& available_locations() const { return available_; }

 private:
  void check() const;

  std::vector<Vessel> vessels_;
  std::vector<Shipment> shipments_;
  std::vector<YardLocation> locations_;
  Geometry geometry_;
  Matrix<Time> yc_travel_;
  std::vector<Time> transfer_;
  std::vector<int> inbound_;
  std::vector<int> outbound_;
  std::vector<int> available_;
};

std::string to_string(Direction d);
std::string to_string(Field f);
std::string to_string(Reservation r);

/// Canonical JSON encoding (sorted keys, two-space indent).
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace ipctp
