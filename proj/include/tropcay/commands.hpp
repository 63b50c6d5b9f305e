#pragma once

// Subcommand implementations behind the CLI. Each returns a report that
// embeds the canonical input.

#include <optional>
#include <string>

#include "tropcay/io.hpp"

namespace tropcay::cli {

struct ArrangementOptions {
  bool poly = false;
  bool cells = false;
  bool dual = false;  // all three when none is set
};

struct RicardoOptions {
  std::optional<RationalVector> wages;
  std::optional<RationalVector> prices;
  bool equilibrate = false;
};

io::Json cmd_arrangement(const io::InputDocument& doc, ArrangementOptions opts);
io::Json cmd_covector(const io::InputDocument& doc, const RationalVector& point);
io::Json cmd_tconv(const io::InputDocument& doc);
io::Json cmd_mixed(const io::InputDocument& doc);
io::Json cmd_ricardo(const io::InputDocument& doc, const RicardoOptions& opts);

enum class PlotKind { Arrangement, Mixed };
std::string cmd_plot(const io::InputDocument& doc, PlotKind what);

// Mixed subdivision behind the mixed and plot commands. A matrix input is
// read as n copies of the triangle's vertices lifted by the columns.
MixedSubdivision mixed_subdivision_of(const io::InputDocument& doc);

}  // namespace tropcay::cli
