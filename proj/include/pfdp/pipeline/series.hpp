#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfdp::pipeline {

/// Observed real-valued series. Labels (e.g. dates) are opaque strings and
/// are either absent or one per value.
struct TimeSeries {
    std::vector<std::string> labels;
    std::vector<double> values;
};

/**
 * Parses CSV with a header row containing a `value` column and optionally a
 * `date` column; other columns are ignored. Blank lines and lines starting
 * with '#' are skipped.
 *
 * Throws ParseError naming the line for malformed or non-finite values and
 * DomainError when fewer than 3 values are present.
 */
[[nodiscard]] TimeSeries load_series(std::istream& in);

}  // namespace pfdp::pipeline
