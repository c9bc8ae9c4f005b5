#include "pfdp/processes/sample_path.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "pfdp/errors.hpp"

namespace pfdp::processes {
namespace {

nlohmann::ordered_json params_json(const SamplePath& path) {
    using nlohmann::ordered_json;
    return std::visit(
        [&](const auto& p) -> ordered_json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, KunduOrderParams>) {
                return {{"alphas", p.alphas()},
                        {"direction", p.direction() == Direction::forward ? "forward" : "reverse"}};
            } else if constexpr (std::is_same_v<T, MaxArParams>) {
                ordered_json j{{"alpha", p.alpha()}, {"delta", p.delta()}};
                if (path.fixed_start) {
                    j["start"] = *path.fixed_start;
                } else {
                    j["start"] = "stationary";
                }
                return j;
            } else {
                return {{"inner_exponents", p.inner_exponents()},
                        {"innovation_exponent", p.innovation_exponent()},
                        {"start_values", p.start_values()}};
            }
        },
        path.params);
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.pop_back();
    }
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
        ++i;
    }
    return s.substr(i);
}

}  // namespace

std::string_view to_string(ModelTag tag) noexcept {
    switch (tag) {
        case ModelTag::kundu:
            return "kundu";
        case ModelTag::maxar:
            return "maxar";
        case ModelTag::maxar_higher:
            return "maxar_higher";
        case ModelTag::external:
            return "external";
    }
    return "external";
}

void SamplePath::validate() const {
    if (values.empty()) {
        throw DomainError("sample path is empty");
    }
    for (double v : values) {
        if (!(v > 0.0 && v < 1.0)) {
            throw DomainError("sample path value outside (0,1)");
        }
    }
}

std::string format_full(double v) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return {buf, static_cast<std::size_t>(len)};
}

nlohmann::ordered_json to_json(const SamplePath& path) {
    nlohmann::ordered_json j;
    j["model_tag"] = to_string(path.model_tag);
    j["params"] = params_json(path);
    if (path.seed) {
        j["master_seed"] = path.seed->master_seed;
        j["stream_id"] = path.seed->stream_id;
    } else {
        j["master_seed"] = nullptr;
        j["stream_id"] = nullptr;
    }
    j["n"] = path.values.size();
    j["values"] = path.values;
    return j;
}

void write_csv(const SamplePath& path, std::ostream& out, const std::vector<std::string>& metadata) {
    for (const auto& line : metadata) {
        out << "# " << line << '\n';
    }
    out << "x\n";
    for (double v : path.values) {
        out << format_full(v) << '\n';
    }
}

SamplePath read_path_csv(std::istream& in) {
    SamplePath path;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!have_header) {
            if (line != "x" && line != "value") {
                throw ParseError(line_no, "expected a single column headed 'x' or 'value'");
            }
            have_header = true;
            continue;
        }
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc{} || ptr != line.data() + line.size()) {
            throw ParseError(line_no, "not a number: '" + line + "'");
        }
        path.values.push_back(v);
    }
    if (!have_header) {
        throw ParseError(line_no, "missing header");
    }
    return path;
}

}  // namespace pfdp::processes
