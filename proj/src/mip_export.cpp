#include "ipctp/mip_export.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "ipctp/error.hpp"
#include "ipctp/schedule.hpp"

namespace ipctp {

namespace {

using Sense = MipModel::Sense;

std::string join_name(const std::string& kind, std::initializer_list<int> ids) {
  std::string s = kind;
  for (int id : ids) s += "_" + std::to_string(id);
  return s;
}

class Builder {
 public:
  Builder(const Instance& instance, const DerivedTables& derived, const MipOptions& options)
      : inst_(instance), der_(derived), opt_(options), n_(instance.shipment_count()) {
    m_.big_m = options.big_m ? *options.big_m : default_big_m(instance, derived);
    m_.dummy_first = 0;
    m_.dummy_last = n_ + 1;
    for (const auto& s : inst_.shipments()) {
      std::set<int> ycs;
      if (s.inbound())
        for (int k : inst_.available_locations()) ycs.insert(inst_.yc_of(k));
      else
        ycs.insert(inst_.yc_of(*s.fixed_location));
      yc_options_.push_back(ycs);
    }
  }

  MipModel build() {
    declare_variables();
    emit_rows();
    for (const auto& v : inst_.vessels()) m_.objective.push_back({var("Cmax_" + std::to_string(v.id)), 1});
    return std::move(m_);
  }

 private:
  int add_var(const std::string& kind, std::initializer_list<int> ids, bool binary) {
    const std::string name = join_name(kind, ids);
    m_.index[name] = static_cast<int>(m_.variables.size());
    m_.variables.push_back({name, binary, kind, std::vector<int>(ids)});
    return m_.index[name];
  }

  int var(const std::string& name) const { return m_.index.at(name); }

  std::optional<int> maybe(const std::string& name) const {
    auto it = m_.index.find(name);
    if (it == m_.index.end()) return std::nullopt;
    return it->second;
  }

  bool qc_ok(int mip_id, int q) const {
    if (mip_id == 0 || mip_id == n_ + 1) return true;
    const auto& e = der_.eligible_qcs[mip_id - 1];
    return std::find(e.begin(), e.end(), q) != e.end();
  }

  bool yc_ok(int mip_id, int c) const {
    if (mip_id == 0 || mip_id == n_ + 1) return true;
    return yc_options_[mip_id - 1].count(c) > 0;
  }

  std::optional<int> z(int q, int i, int j) const { return maybe(join_name("z", {i, j, q})); }
  std::optional<int> v(int c, int i, int j) const { return maybe(join_name("v", {i, j, c})); }

  void declare_variables() {
    const auto& in = inst_.inbound();
    const auto& lu = inst_.available_locations();
    const int last = n_ + 1;
    for (int i : in)
      for (int k : lu) add_var("x", {i + 1, k}, true);
    for (int q = 1; q <= inst_.qc_count(); ++q)
      for (int i = 0; i <= n_; ++i)
        for (int j = 1; j <= last; ++j)
          if (i != j && qc_ok(i, q) && qc_ok(j, q)) add_var("z", {i, j, q}, true);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (i != j) add_var("qz", {i, j}, true);
    for (int c = 1; c <= inst_.yc_count(); ++c)
      for (int i = 0; i <= n_; ++i)
        for (int j = 1; j <= last; ++j)
          if (i != j && yc_ok(i, c) && yc_ok(j, c)) add_var("v", {i, j, c}, true);
    for (int i : in)
      for (int j : in)
        if (i != j)
          for (int k : lu)
            for (int l : lu)
              if (k != l) add_var("theta", {i + 1, k, j + 1, l}, true);
    for (int i = 1; i <= n_; ++i) add_var("sqc", {i}, false);
    for (int i = 1; i <= n_; ++i) add_var("syc", {i}, false);
    for (int i : in) add_var("t", {i + 1}, false);
    for (const auto& a : inst_.shipments())
      for (const auto& b : inst_.shipments())
        if (a.id != b.id && (a.inbound() || b.inbound())) add_var("sy", {a.id + 1, b.id + 1}, false);
    for (const auto& s : inst_.vessels()) add_var("Cmax", {s.id}, false);
  }

  void row(const std::string& family, std::vector<MipModel::Term> terms, Sense sense, std::int64_t rhs) {
    if (opt_.disabled_families.count(family)) return;
    std::erase_if(terms, [](const MipModel::Term& t) { return t.coef == 0; });
    if (terms.empty()) return;
    std::string name = "c" + family + "_" + std::to_string(++counter_[family]);
    std::replace(name.begin(), name.end(), '-', '_');
    m_.rows.push_back({std::move(name), family, std::move(terms), sense, rhs});
  }

  void emit_rows() {
    const auto& ships = inst_.shipments();
    const auto& in = inst_.inbound();
    const auto& lu = inst_.available_locations();
    const std::int64_t M = m_.big_m;
    const int last = n_ + 1;
    const auto x = [&](int s, int k) { return var(join_name("x", {s + 1, k})); };
    const auto sqc = [&](int s) { return var(join_name("sqc", {s + 1})); };
    const auto syc = [&](int s) { return var(join_name("syc", {s + 1})); };
    const auto sy = [&](int a, int b) { return var(join_name("sy", {a + 1, b + 1})); };
    const auto qz = [&](int a, int b) { return var(join_name("qz", {a + 1, b + 1})); };

    // Weighted vessel completion.
    for (const auto& s : ships) {
      const std::int64_t w = inst_.vessels()[s.vessel].weight;
      const int cmax = var("Cmax_" + std::to_string(s.vessel));
      if (s.outbound()) row("2-02", {{cmax, 1}, {sqc(s.id), -w}}, Sense::ge, w * s.qc_time);
      else row("2-03", {{cmax, 1}, {syc(s.id), -w}}, Sense::ge, w * s.yc_time);
    }

    // Location capacity and coverage.
    for (int k : lu) {
      std::vector<MipModel::Term> t;
      for (int i : in) t.push_back({x(i, k), 1});
      row("2-04", t, Sense::le, 1);
    }
    for (int i : in) {
      std::vector<MipModel::Term> t;
      for (int k : lu) t.push_back({x(i, k), 1});
      row("2-05", t, Sense::eq, 1);
    }

    // Dummy first and last shipments on every crane.
    for (int q = 1; q <= inst_.qc_count(); ++q) {
      std::vector<MipModel::Term> t;
      for (int j = 1; j <= last; ++j)
        if (auto zz = z(q, 0, j)) t.push_back({*zz, 1});
      row("2-06", t, Sense::eq, 1);
    }
    for (int c = 1; c <= inst_.yc_count(); ++c) {
      std::vector<MipModel::Term> t;
      for (int j = 1; j <= last; ++j)
        if (auto vv = v(c, 0, j)) t.push_back({*vv, 1});
      row("2-07", t, Sense::eq, 1);
    }
    for (int q = 1; q <= inst_.qc_count(); ++q) {
      std::vector<MipModel::Term> t;
      for (int i = 0; i <= n_; ++i)
        if (auto zz = z(q, i, last)) t.push_back({*zz, 1});
      row("2-08", t, Sense::eq, 1);
    }
    for (int c = 1; c <= inst_.yc_count(); ++c) {
      std::vector<MipModel::Term> t;
      for (int i = 0; i <= n_; ++i)
        if (auto vv = v(c, i, last)) t.push_back({*vv, 1});
      row("2-09", t, Sense::eq, 1);
    }

    // One eligible QC per shipment.
    for (int i = 1; i <= n_; ++i) {
      std::vector<MipModel::Term> t;
      for (int q : der_.eligible_qcs[i - 1])
        for (int j = 1; j <= last; ++j)
          if (auto zz = z(q, i, j)) t.push_back({*zz, 1});
      row("2-10", t, Sense::eq, 1);
    }

    // YC membership: inbound follows its location's crane, outbound is fixed.
    for (int i : in) {
      for (int c = 1; c <= inst_.yc_count(); ++c) {
        std::vector<MipModel::Term> t;
        for (int j = 1; j <= last; ++j)
          if (auto vv = v(c, i + 1, j)) t.push_back({*vv, 1});
        for (int k : lu)
          if (inst_.yc_of(k) == c) t.push_back({x(i, k), -1});
        row("2-11", t, Sense::eq, 0);
      }
    }
    for (int i : inst_.outbound()) {
      const int c = inst_.yc_of(*ships[i].fixed_location);
      std::vector<MipModel::Term> t;
      for (int j = 1; j <= last; ++j)
        if (auto vv = v(c, i + 1, j)) t.push_back({*vv, 1});
      row("2-12", t, Sense::eq, 1);
    }

    // Flow conservation on every crane.
    for (int i = 1; i <= n_; ++i) {
      for (int q : der_.eligible_qcs[i - 1]) {
        std::vector<MipModel::Term> t;
        for (int j = 0; j <= n_; ++j)
          if (auto zz = z(q, j, i)) t.push_back({*zz, 1});
        for (int j = 1; j <= last; ++j)
          if (auto zz = z(q, i, j)) t.push_back({*zz, -1});
        row("2-13", t, Sense::eq, 0);
      }
    }
    for (int i = 1; i <= n_; ++i) {
      for (int c : yc_options_[i - 1]) {
        std::vector<MipModel::Term> t;
        for (int j = 0; j <= n_; ++j)
          if (auto vv = v(c, j, i)) t.push_back({*vv, 1});
        for (int j = 1; j <= last; ++j)
          if (auto vv = v(c, i, j)) t.push_back({*vv, -1});
        row("2-14", t, Sense::eq, 0);
      }
    }

    // Transfer time and YC empty travel.
    for (int i : in) {
      std::vector<MipModel::Term> t{{var(join_name("t", {i + 1})), 1}};
      for (int k : lu) t.push_back({x(i, k), -inst_.yt_inbound_transfer()[k]});
      row("2-15", t, Sense::eq, 0);
    }
    const auto& tyc = inst_.yc_travel();
    for (int i : in) {
      for (int j : inst_.outbound()) {
        const int lj = *ships[j].fixed_location;
        std::vector<MipModel::Term> t{{sy(i, j), 1}};
        for (int m : lu) t.push_back({x(i, m), -tyc(m, lj)});
        row("2-16", t, Sense::eq, 0);
      }
    }
    for (int i : in) {
      for (int j : in) {
        if (i == j) continue;
        std::vector<MipModel::Term> t{{sy(i, j), 1}};
        for (int k : lu)
          for (int l : lu)
            if (k != l) t.push_back({var(join_name("theta", {i + 1, k, j + 1, l})), -tyc(k, l)});
        row("2-17", t, Sense::eq, 0);
        for (int k : lu) {
          for (int l : lu) {
            if (k == l) continue;
            const int th = var(join_name("theta", {i + 1, k, j + 1, l}));
            row("2-17", {{th, 1}, {x(i, k), -1}, {x(j, l), -1}}, Sense::ge, -1);
            row("2-17", {{th, 2}, {x(i, k), -1}, {x(j, l), -1}}, Sense::le, 0);
          }
        }
      }
    }
    for (int i : inst_.outbound()) {
      const int li = *ships[i].fixed_location;
      for (int j : in) {
        std::vector<MipModel::Term> t{{sy(i, j), 1}};
        for (int m : lu) t.push_back({x(j, m), -tyc(li, m)});
        row("2-18", t, Sense::eq, 0);
      }
    }

    // Consecutive tasks on a crane.
    for (int q = 1; q <= inst_.qc_count(); ++q)
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if (auto zz = z(q, i + 1, j + 1))
            row("2-19", {{sqc(j), 1}, {sqc(i), -1}, {*zz, -M}}, Sense::ge,
                ships[i].qc_time + der_.qc_empty_travel(i, j) - M);
    for (int c = 1; c <= inst_.yc_count(); ++c) {
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
          auto vv = v(c, i + 1, j + 1);
          if (!vv) continue;
          const auto& a = ships[i];
          const auto& b = ships[j];
          if (a.inbound())
            row("2-20", {{syc(j), 1}, {syc(i), -1}, {*vv, -M}, {sy(i, j), -1}}, Sense::ge, a.yc_time - M);
          else if (b.inbound())
            row("2-21", {{syc(j), 1}, {syc(i), -1}, {*vv, -M}, {sy(i, j), -1}}, Sense::ge, a.yc_time - M);
          else
            row("2-22", {{syc(j), 1}, {syc(i), -1}, {*vv, -M}}, Sense::ge,
                a.yc_time + tyc(*a.fixed_location, *b.fixed_location) - M);
        }
      }
    }

    // Handoffs between QC and YC.
    for (int i : inst_.outbound())
      row("2-23", {{sqc(i), 1}, {syc(i), -1}}, Sense::ge, ships[i].yc_time + *ships[i].yt_outbound_time);
    for (int i : in)
      row("2-24", {{syc(i), 1}, {sqc(i), -1}, {var(join_name("t", {i + 1})), -1}}, Sense::ge, ships[i].qc_time);

    // QC order and interference.
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j) row("2-25", {{sqc(i), 1}, {sqc(j), -1}, {qz(i, j), M}}, Sense::le, M - ships[i].qc_time);
    const auto handled_by = [&](int s, int q) {
      std::vector<MipModel::Term> t;
      for (int u = 0; u <= n_; ++u)
        if (auto zz = z(q, u, s + 1)) t.push_back({*zz, 1});
      return t;
    };
    for (const auto& tup : der_.interference_set) {
      auto on_v = handled_by(tup.i, tup.v);
      auto on_w = handled_by(tup.j, tup.w);
      std::vector<MipModel::Term> both = on_v;
      both.insert(both.end(), on_w.begin(), on_w.end());

      auto t26 = both;
      t26.push_back({qz(tup.i, tup.j), -1});
      t26.push_back({qz(tup.j, tup.i), -1});
      row("2-26", t26, Sense::le, 1);

      // Separation for whichever shipment goes first.
      for (int side = 0; side < 2; ++side) {
        const int first = side == 0 ? tup.i : tup.j;
        const int second = side == 0 ? tup.j : tup.i;
        std::vector<MipModel::Term> t{{sqc(first), 1}, {sqc(second), -1}, {qz(first, second), M}};
        for (const auto& term : both) t.push_back({term.var, M});
        row("2-27", t, Sense::le, 3 * M - ships[first].qc_time - tup.delta);
      }
    }
  }

  const Instance& inst_;
  const DerivedTables& der_;
  const MipOptions& opt_;
  int n_;
  std::vector<std::set<int>> yc_options_;
  std::map<std::string, int> counter_;
  MipModel m_;
};


}  // namespace

std::optional<int> MipModel::find(const std::string& name) const {
  auto it = index.find(name);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t MipModel::family_rows(const std::string& family) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const Row& r) { return r.family == family; }));
}

std::int64_t default_big_m(const Instance& instance, const DerivedTables& derived) {
  const int n = instance.shipment_count();
  Time work = 0, max_task = 0;
  for (const auto& s : instance.shipments()) {
    work += s.qc_time + s.yc_time;
    max_task = std::max({max_task, s.qc_time, s.yc_time});
  }
  Time qc_gap = 0, yc_gap = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) qc_gap = std::max(qc_gap, derived.qc_empty_travel(a, b));
  for (const auto& t : derived.interference_set) qc_gap = std::max(qc_gap, t.delta);
  for (Time tt : instance.yt_inbound_transfer()) qc_gap = std::max(qc_gap, tt);
  const auto& tyc = instance.yc_travel();
  for (std::size_t a = 0; a < tyc.size(); ++a)
    for (std::size_t b = 0; b < tyc.size(); ++b) yc_gap = std::max(yc_gap, tyc(a, b));
  for (const auto& s : instance.shipments())
    if (s.outbound()) yc_gap = std::max(yc_gap, *s.yt_outbound_time);
  const Time horizon = work + n * qc_gap + n * yc_gap;
  return horizon + max_task + std::max(qc_gap, yc_gap);
}

MipModel build_mip(const Instance& instance, const DerivedTables& derived, const MipOptions& options) {
  return Builder(instance, derived, options).build();
}

std::string mip_to_lp(const MipModel& model) {
  std::ostringstream out;
  const auto write_terms = [&](const std::vector<MipModel::Term>& terms) {
    int on_line = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto& t = terms[k];
      const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
      if (k > 0 || t.coef < 0) out << (t.coef < 0 ? " - " : " + ");
      else out << " ";
      if (mag != 1) out << mag << " ";
      out << model.variables[t.var].name;
      if (++on_line == 8 && k + 1 < terms.size()) {
        out << "\n   ";
        on_line = 0;
      }
    }
  };

  out << "\\ IPCTP model, big-M " << model.big_m << "\n";
  out << "Minimize\n obj:";
  write_terms(model.objective);
  out << "\nSubject To\n";
  for (const auto& r : model.rows) {
    out << " " << r.name << ":";
    write_terms(r.terms);
    out << (r.sense == MipModel::Sense::le ? " <= " : r.sense == MipModel::Sense::ge ? " >= " : " = ")
        << r.rhs << "\n";
  }
  out << "Bounds\n";
  for (const auto& v : model.variables)
    if (!v.binary) out << " " << v.name << " >= 0\n";
  out << "Binaries\n";
  for (const auto& v : model.variables)
    if (v.binary) out << " " << v.name << "\n";
  out << "End\n";
  return out.str();
}

std::string mip_mapping_json(const MipModel& model) {
  nlohmann::json doc;
  doc["big_m"] = model.big_m;
  doc["dummy_first"] = model.dummy_first;
  doc["dummy_last"] = model.dummy_last;
  doc["shipment_offset"] = 1;
  auto& vars = doc["variables"] = nlohmann::json::array();
  for (const auto& v : model.variables)
    vars.push_back({{"name", v.name}, {"kind", v.kind}, {"ids", v.ids}, {"binary", v.binary}});
  std::map<std::string, std::size_t> families;
  for (const auto& r : model.rows) ++families[r.family];
  doc["family_rows"] = families;
  return doc.dump(2) + "\n";
}

std::vector<double> mip_point_from_solution(const Instance& instance, const DerivedTables& derived,
                                            const MipModel& model, const Solution& solution) {
  std::vector<double> values(model.variables.size(), 0.0);
  const auto set = [&](const std::string& name, double value) {
    if (auto k = model.find(name)) values[*k] = value;
    else throw InvalidDecisions("solution uses a variable absent from the model: " + name);
  };
  const int n = instance.shipment_count();
  const int last = n + 1;
  const auto& ships = instance.shipments();

  std::vector<int> location(n, -1);
  for (const auto& s : ships)
    if (s.outbound()) location[s.id] = *s.fixed_location;
  for (const auto& [i, k] : solution.yard_assignment) {
    location[i] = k;
    set(join_name("x", {i + 1, k}), 1);
  }
  const auto chain = [&](const std::string& kind, int crane, const std::vector<int>& seq) {
    int prev = 0;
    for (int s : seq) {
      set(join_name(kind, {prev, s + 1, crane}), 1);
      prev = s + 1;
    }
    set(join_name(kind, {prev, last, crane}), 1);
  };
  for (int q = 1; q <= instance.qc_count(); ++q) {
    auto it = solution.qc_sequences.find(q);
    chain("z", q, it == solution.qc_sequences.end() ? std::vector<int>{} : it->second);
  }
  for (int c = 1; c <= instance.yc_count(); ++c) {
    auto it = solution.yc_sequences.find(c);
    chain("v", c, it == solution.yc_sequences.end() ? std::vector<int>{} : it->second);
  }
  for (const auto& [key, order] : solution.interference_order) {
    const int first = order == Order::i_first ? key[0] : key[1];
    const int second = order == Order::i_first ? key[1] : key[0];
    set(join_name("qz", {first + 1, second + 1}), 1);
  }
  for (const auto& in : instance.inbound())
    for (const auto& jn : instance.inbound())
      if (in != jn && location[in] >= 0 && location[jn] >= 0 && location[in] != location[jn])
        set(join_name("theta", {in + 1, location[in], jn + 1, location[jn]}), 1);
  for (const auto& [i, t] : solution.qc_start) set(join_name("sqc", {i + 1}), static_cast<double>(t));
  for (const auto& [i, t] : solution.yc_start) set(join_name("syc", {i + 1}), static_cast<double>(t));
  for (int i : instance.inbound())
    if (location[i] >= 0) set(join_name("t", {i + 1}), static_cast<double>(instance.yt_inbound_transfer()[location[i]]));
  for (const auto& a : ships)
    for (const auto& b : ships)
      if (a.id != b.id && (a.inbound() || b.inbound()) && location[a.id] >= 0 && location[b.id] >= 0)
        set(join_name("sy", {a.id + 1, b.id + 1}), static_cast<double>(yc_setup(instance, location[a.id], location[b.id])));
  for (const auto& v : instance.vessels()) {
    auto it = solution.per_vessel_completion.find(v.id);
    const Time c = it == solution.per_vessel_completion.end() ? 0 : it->second;
    set("Cmax_" + std::to_string(v.id), static_cast<double>(v.weight * c));
  }
  (void)derived;
  return values;
}

std::vector<std::string> check_mip_point(const MipModel& model, const std::vector<double>& values, double tol) {
  std::vector<std::string> broken;
  for (const auto& r : model.rows) {
    double lhs = 0;
    for (const auto& t : r.terms) lhs += static_cast<double>(t.coef) * values.at(t.var);
    const double rhs = static_cast<double>(r.rhs);
    const bool ok = r.sense == MipModel::Sense::le   ? lhs <= rhs + tol
                    : r.sense == MipModel::Sense::ge ? lhs >= rhs - tol
                                                     : std::abs(lhs - rhs) <= tol;
    if (!ok) broken.push_back(r.name);
  }
  return broken;
}

std::map<std::string, double> parse_mip_values(const std::string& text) {
  std::map<std::string, double> values;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string name, value, extra;
    fields >> name >> value;
    if (value.empty() || (fields >> extra))
      throw FormatError("line " + std::to_string(number) + ": expected '<name> <value>'");
    try {
      std::size_t used = 0;
      const double v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      values[name] = v;
    } catch (const std::exception&) {
      throw FormatError("line " + std::to_string(number) + ": '" + value + "' is not a number");
    }
  }
  return values;
}

Solution solution_from_mip_values(const Instance& instance, const DerivedTables& derived,
                                  const MipModel& model, const std::map<std::string, double>& values) {
  const auto on = [&](const std::string& name) {
    auto it = values.find(name);
    return it != values.end() && it->second > 0.5;
  };
  const auto value = [&](const std::string& name) {
    auto it = values.find(name);
    return it == values.end() ? 0.0 : it->second;
  };
  const int n = instance.shipment_count();
  Decisions d;
  for (int i : instance.inbound())
    for (int k : instance.available_locations())
      if (on(join_name("x", {i + 1, k}))) d.yard_assignment[i] = k;

  const auto follow = [&](const std::string& kind, int crane) {
    std::vector<int> seq;
    int cur = 0;
    for (int step = 0; step <= n; ++step) {
      int next = -1;
      for (int j = 1; j <= n + 1; ++j)
        if (j != cur && on(join_name(kind, {cur, j, crane}))) {
          next = j;
          break;
        }
      if (next < 0 || next == n + 1) break;
      seq.push_back(next - 1);
      cur = next;
    }
    return seq;
  };
  for (int q = 1; q <= instance.qc_count(); ++q) d.qc_sequences[q] = follow("z", q);
  for (int c = 1; c <= instance.yc_count(); ++c) d.yc_sequences[c] = follow("v", c);

  for (const auto& t : active_interferences(derived, d.qc_assignment())) {
    Order o;
    if (on(join_name("qz", {t.i + 1, t.j + 1}))) o = Order::i_first;
    else if (on(join_name("qz", {t.j + 1, t.i + 1}))) o = Order::j_first;
    else o = value(join_name("sqc", {t.i + 1})) <= value(join_name("sqc", {t.j + 1})) ? Order::i_first : Order::j_first;
    d.interference_order[t.key()] = o;
  }
  (void)model;
  return compute_schedule(instance, derived, d);
}

}  // namespace ipctp
