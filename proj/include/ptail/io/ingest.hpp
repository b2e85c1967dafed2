#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "ptail/sample.hpp"

namespace ptail::io {

// Delimited-text ingestion of one numeric column. The min-threshold filter is
// applied before the rescale divisor (so thresholds are in original units).
struct IngestSpec {
    std::string path;                      // "-" reads stdin
    std::string column = "0";              // 0-based index, or a name (needs header)
    char delimiter = ',';
    bool header = false;
    std::optional<double> min_threshold;   // keep values >= c
    std::optional<double> rescale;         // divide kept values by this
};

std::vector<double> load_values(std::istream& in, const IngestSpec& spec);
SortedSample load_sample(const IngestSpec& spec);

}  // namespace ptail::io
