#include "ipctp/gantt.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ipctp {

namespace {

struct Bar {
  int shipment;
  Time start;
  Time end;
  bool inbound;
};

struct Lane {
  std::string label;
  std::vector<Bar> bars;
};

std::vector<Lane> lanes_of(const Instance& instance, const Solution& solution) {
  std::vector<Lane> lanes;
  const auto add = [&](const std::string& label, const std::map<int, std::vector<int>>& seqs, int crane,
                       const std::map<int, Time>& starts, bool qc) {
    Lane lane{label + std::to_string(crane), {}};
    auto it = seqs.find(crane);
    if (it != seqs.end()) {
      for (int s : it->second) {
        auto st = starts.find(s);
        if (st == starts.end()) continue;
        const auto& sh = instance.shipment(s);
        lane.bars.push_back({s, st->second, st->second + (qc ? sh.qc_time : sh.yc_time), sh.inbound()});
      }
    }
    lanes.push_back(std::move(lane));
  };
  for (int q = 1; q <= instance.qc_count(); ++q) add("QC", solution.qc_sequences, q, solution.qc_start, true);
  for (int c = 1; c <= instance.yc_count(); ++c) add("YC", solution.yc_sequences, c, solution.yc_start, false);
  return lanes;
}

Time horizon_of(const std::vector<Lane>& lanes) {
  Time h = 1;
  for (const auto& l : lanes)
    for (const auto& b : l.bars) h = std::max(h, b.end);
  return h;
}

}  // namespace

std::string gantt_text(const Instance& instance, const Solution& solution, int width) {
  const auto lanes = lanes_of(instance, solution);
  const Time horizon = horizon_of(lanes);
  width = std::max(width, 10);
  const auto col = [&](Time t) { return static_cast<int>(t * width / horizon); };
  std::ostringstream out;
  for (const auto& lane : lanes) {
    std::string row(static_cast<std::size_t>(width), '.');
    for (const auto& b : lane.bars) {
      const int from = col(b.start);
      const int to = std::max(from + 1, col(b.end));
      for (int c = from; c < to && c < width; ++c) row[c] = static_cast<char>('0' + b.shipment % 10);
    }
    out << lane.label << (lane.label.size() < 4 ? " " : "") << " |" << row << "|\n";
  }
  out << "horizon " << horizon << ", objective " << solution.objective << "\n";
  return out.str();
}

std::string gantt_svg(const Instance& instance, const Solution& solution) {
  const auto lanes = lanes_of(instance, solution);
  const Time horizon = horizon_of(lanes);
  const int left = 50, lane_h = 24, chart_w = 800;
  const int height = static_cast<int>(lanes.size()) * lane_h + 40;
  const auto x = [&](Time t) { return left + static_cast<double>(t) * chart_w / static_cast<double>(horizon); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << left + chart_w + 20 << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"11\">\n";
  for (std::size_t k = 0; k < lanes.size(); ++k) {
    const int y = 10 + static_cast<int>(k) * lane_h;
    out << "  <text x=\"4\" y=\"" << y + 15 << "\">" << lanes[k].label << "</text>\n";
    for (const auto& b : lanes[k].bars) {
      out << "  <rect x=\"" << x(b.start) << "\" y=\"" << y << "\" width=\"" << x(b.end) - x(b.start)
          << "\" height=\"" << lane_h - 4 << "\" fill=\"" << (b.inbound ? "#6a9fd4" : "#e39b5b")
          << "\" stroke=\"#333\"><title>shipment " << b.shipment << " [" << b.start << ", " << b.end
          << ")</title></rect>\n";
      out << "  <text x=\"" << x(b.start) + 2 << "\" y=\"" << y + 14 << "\">" << b.shipment << "</text>\n";
    }
  }
  out << "  <text x=\"" << left << "\" y=\"" << height - 8 << "\">0</text>\n";
  out << "  <text x=\"" << left + chart_w - 30 << "\" y=\"" << height - 8 << "\">" << horizon << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace ipctp
