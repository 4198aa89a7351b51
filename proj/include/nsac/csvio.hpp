#pragma once

#include <string>
#include <vector>

#include "nsac/run.hpp"

namespace nsac {

// Fixed 17-significant-digit float rendering so repeated runs of the same
// configuration produce byte-identical files.
std::string format_g17(double x);

void write_snapshot_csv(const std::string& path, const Snapshot& snap);
void write_series_csv(const std::string& path, const std::vector<SeriesRow>& series);

// Readers for the check command. Snapshot times are reconstructed as step*dt.
std::vector<SeriesRow> read_series_csv(const std::string& path);
Snapshot read_snapshot_csv(const std::string& path, int step, double dt);

}  // namespace nsac
