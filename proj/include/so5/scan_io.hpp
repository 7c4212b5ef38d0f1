#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "so5/asymptotics.hpp"

namespace so5::scan_io {

enum class Spacing { Geometric, Linear };
enum class Format { CSV, JSON };

struct ScanConfig {
    std::uint64_t x_lo = 1;
    std::uint64_t x_hi = 1;
    int points = 1;
    Spacing spacing = Spacing::Geometric;
    std::string out_path;  // empty = caller writes the returned text itself
    Format format = Format::CSV;
};

inline constexpr const char* kCsvHeader =
    "x,S_exact,main_term,second_paper,second_component,resid_paper,resid_component,"
    "resid_norm";

// Grid of scan points per the config.
std::vector<std::uint64_t> scan_grid(const ScanConfig& cfg);

// Rendered scan output; byte-deterministic for a fixed config (decimal
// fields carry 10 significant digits).
std::string render_scan(const ScanConfig& cfg);

// Renders and writes to cfg.out_path (or returns the text when the path is
// empty).  Throws IoError when the file cannot be written.
std::string emit_scan(const ScanConfig& cfg);

// CSV parsing for the round-trip checks.
std::vector<asymptotics::SummatoryRow> parse_scan_csv(const std::string& text);

}  // namespace so5::scan_io
