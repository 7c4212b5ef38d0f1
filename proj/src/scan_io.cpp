#include "so5/scan_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "so5/errors.hpp"

namespace so5::scan_io {

namespace {

using u64 = std::uint64_t;

std::string fmt10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fmt_u64(u64 v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%" PRIu64, v);
    return buf;
}

}  // namespace

std::vector<std::uint64_t> scan_grid(const ScanConfig& cfg) {
    if (cfg.x_lo < 1 || cfg.x_lo > cfg.x_hi) throw DomainError("scan: bad range");
    if (cfg.points < 1) throw DomainError("scan: points must be >= 1");
    if (cfg.spacing == Spacing::Geometric)
        return asymptotics::geometric_grid(cfg.x_lo, cfg.x_hi, cfg.points);
    std::vector<u64> xs;
    xs.reserve(static_cast<std::size_t>(cfg.points));
    if (cfg.points == 1) {
        xs.push_back(cfg.x_lo);
        return xs;
    }
    for (int i = 0; i < cfg.points; ++i) {
        long double step = static_cast<long double>(cfg.x_hi - cfg.x_lo) * i / (cfg.points - 1);
        xs.push_back(cfg.x_lo + static_cast<u64>(step + 0.5L));
    }
    xs.back() = cfg.x_hi;
    return xs;
}

std::string render_scan(const ScanConfig& cfg) {
    std::vector<u64> xs = scan_grid(cfg);
    std::vector<asymptotics::SummatoryRow> rows = asymptotics::residual_scan(xs);
    std::ostringstream out;
    if (cfg.format == Format::CSV) {
        out << kCsvHeader << '\n';
        for (const auto& r : rows) {
            out << fmt_u64(r.x) << ',' << fmt_u64(r.s_exact) << ',' << fmt10(r.main)
                << ',' << fmt10(r.second_paper) << ',' << fmt10(r.second_component)
                << ',' << fmt10(r.resid_paper) << ',' << fmt10(r.resid_component)
                << ',' << fmt10(r.resid_norm) << '\n';
        }
        return out.str();
    }
    // JSON mirror of the CSV columns, written by hand so the bytes are
    // identical run to run
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << "  {\"x\": " << fmt_u64(r.x) << ", \"S_exact\": " << fmt_u64(r.s_exact)
            << ", \"main_term\": " << fmt10(r.main)
            << ", \"second_paper\": " << fmt10(r.second_paper)
            << ", \"second_component\": " << fmt10(r.second_component)
            << ", \"resid_paper\": " << fmt10(r.resid_paper)
            << ", \"resid_component\": " << fmt10(r.resid_component)
            << ", \"resid_norm\": " << fmt10(r.resid_norm) << "}"
            << (i + 1 < rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
    return out.str();
}

std::string emit_scan(const ScanConfig& cfg) {
    std::string text = render_scan(cfg);
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw IoError("emit_scan: cannot open " + cfg.out_path);
        f << text;
        if (!f) throw IoError("emit_scan: write failed for " + cfg.out_path);
    }
    return text;
}

std::vector<asymptotics::SummatoryRow> parse_scan_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw IoError("parse_scan_csv: bad header");
    std::vector<asymptotics::SummatoryRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        asymptotics::SummatoryRow r;
        char* p = line.data();
        char* end = nullptr;
        auto next_u64 = [&]() {
            u64 v = std::strtoull(p, &end, 10);
            p = (*end == ',') ? end + 1 : end;
            return v;
        };
        auto next_d = [&]() {
            double v = std::strtod(p, &end);
            p = (*end == ',') ? end + 1 : end;
            return v;
        };
        r.x = next_u64();
        r.s_exact = next_u64();
        r.main = next_d();
        r.second_paper = next_d();
        r.second_component = next_d();
        r.resid_paper = next_d();
        r.resid_component = next_d();
        r.resid_norm = next_d();
        rows.push_back(r);
    }
    return rows;
}

}  // namespace so5::scan_io
