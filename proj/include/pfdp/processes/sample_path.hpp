#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pfdp/processes/params.hpp"

namespace pfdp::processes {

enum class ModelTag { kundu, maxar, maxar_higher, external };

[[nodiscard]] std::string_view to_string(ModelTag tag) noexcept;

struct StreamSeed {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
};

using ModelParams = std::variant<std::monostate, KunduOrderParams, MaxArParams, HigherMaxArParams>;

/// A trajectory with values in (0,1) and where it came from.
struct SamplePath {
    std::vector<double> values;
    ModelTag model_tag = ModelTag::external;
    std::optional<StreamSeed> seed;
    ModelParams params;
    /// Set when a max-AR path was started from a fixed value instead of the
    /// stationary law.
    std::optional<double> fixed_start;

    /// Throws DomainError if empty or any value is outside (0,1).
    void validate() const;
};

/// {model_tag, params, master_seed, stream_id, n, values}; seed fields are
/// null for external paths.
[[nodiscard]] nlohmann::ordered_json to_json(const SamplePath& path);

/// One value per row under header `x`, 17 significant digits. Each metadata
/// line is written first, prefixed by "# ".
void write_csv(const SamplePath& path, std::ostream& out,
               const std::vector<std::string>& metadata = {});

/// Reads a single numeric column headed `x` or `value` (comment lines starting
/// with '#' are skipped). Throws ParseError naming the line.
[[nodiscard]] SamplePath read_path_csv(std::istream& in);

/// Round-trip decimal text for a double ("%.17g").
[[nodiscard]] std::string format_full(double v);

}  // namespace pfdp::processes
