#include "pfdp/pipeline/series.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <optional>

#include "pfdp/errors.hpp"

namespace pfdp::pipeline {
namespace {

std::string strip(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return std::string(s);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        fields.push_back(strip(std::string_view(line).substr(start, comma - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

}  // namespace

TimeSeries load_series(std::istream& in) {
    TimeSeries series;
    std::optional<std::size_t> value_col;
    std::optional<std::size_t> date_col;
    bool have_header = false;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string trimmed = strip(line);
        if (trimmed.empty() || trimmed.front() == '#') {
            continue;
        }
        const auto fields = split(trimmed);
        if (!have_header) {
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (fields[i] == "value") {
                    value_col = i;
                } else if (fields[i] == "date") {
                    date_col = i;
                }
            }
            if (!value_col) {
                throw ParseError(line_no, "header has no 'value' column");
            }
            have_header = true;
            continue;
        }
        if (fields.size() <= *value_col || (date_col && fields.size() <= *date_col)) {
            throw ParseError(line_no, "too few fields");
        }
        const std::string& text = fields[*value_col];
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
            throw ParseError(line_no, "value is not a number: '" + text + "'");
        }
        if (!std::isfinite(v)) {
            throw ParseError(line_no, "value is not finite");
        }
        series.values.push_back(v);
        if (date_col) {
            series.labels.push_back(fields[*date_col]);
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing header row");
    }
    if (series.values.size() < 3) {
        throw DomainError("series needs at least 3 values, got " +
                          std::to_string(series.values.size()));
    }
    return series;
}

}  // namespace pfdp::pipeline
