#pragma once

#include <string>

#include "ipctp/instance.hpp"
#include "ipctp/solution.hpp"

namespace ipctp {

/// One text row per crane; each task drawn as a run of its shipment id
/// (last digit) scaled to `width` columns.
std::string gantt_text(const Instance& instance, const Solution& solution, int width = 80);

/// Standalone SVG chart of the same rows.
std::string gantt_svg(const Instance& instance, const Solution& solution);

}  // namespace ipctp
