#pragma once

#include <json.hpp>

#include "fk/continuum.hpp"
#include "fk/search.hpp"
#include "fk/shape_io.hpp"
#include "fk/spectral.hpp"
#include "fk/symmetry.hpp"
#include "fk/walk.hpp"

namespace fk {

inline constexpr int kSchemaVersion = 1;

// {"lambda_d": ..., "residual": ..., "iterations": ..., "eigenfunction":
//  [[x, y, value], ...]} with cells sorted by (y, x)
inline nlohmann::json report_to_json(const SpectralReport& rep) {
    nlohmann::json ef = nlohmann::json::array();
    for (std::size_t i = 0; i < rep.cells.size(); ++i)
        ef.push_back({rep.cells[i].x, rep.cells[i].y, rep.eigenfunction[i]});
    return nlohmann::json{
        {"schema", kSchemaVersion},
        {"lambda_d", rep.lambda_d},
        {"residual", rep.residual},
        {"iterations", rep.iterations},
        {"method", rep.method == SpectralMethod::power ? "power" : "dense"},
        {"eigenfunction", std::move(ef)}};
}

inline nlohmann::json outcome_to_json(const Subgraph& input,
                                      const SymmetrizationOutcome& o) {
    nlohmann::json flags;
    flags["disconnected_slices"] = o.flags.disconnected_slices;
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : o.flags.mutual_nonwalling) pairs.push_back({a, b});
    flags["mutual_nonwalling"] = std::move(pairs);
    nlohmann::json j{{"schema", kSchemaVersion},
                     {"input", shape_to_json(input)},
                     {"output", shape_to_json(o.output)},
                     {"lambda_before", o.lambda_before},
                     {"lambda_after", o.lambda_after},
                     {"strict_certificates", std::move(flags)},
                     {"strict", o.flags.any()}};
    if (o.transported) {
        nlohmann::json tf = nlohmann::json::array();
        for (std::size_t i = 0; i < o.output.cells().size(); ++i)
            tf.push_back({o.output.cells()[i].x, o.output.cells()[i].y,
                          (*o.transported)[i]});
        j["transported"] = std::move(tf);
    }
    return j;
}

inline nlohmann::json record_to_json(const MinimizerRecord& rec) {
    nlohmann::json mins = nlohmann::json::array();
    for (std::size_t i = 0; i < rec.minimizers.size(); ++i) {
        const MinimizerAudit& a = rec.audited[i];
        mins.push_back({{"cells", shape_to_json(rec.minimizers[i])["cells"]},
                        {"text", emit_text(rec.minimizers[i])},
                        {"audit",
                         {{"connected", a.connected},
                          {"strongly_connected", a.strongly_connected},
                          {"walled_in", a.walled_in},
                          {"simply_connected", a.simply_connected}}}});
    }
    return nlohmann::json{
        {"schema", kSchemaVersion},
        {"n", rec.n},
        {"lambda_min", rec.lambda_min},
        {"enumerated_count", rec.enumerated_count},
        {"mode", rec.mode == SearchMode::exhaustive ? "exhaustive" : "pruned"},
        {"minimizers", std::move(mins)}};
}

inline const char* status_name(BoundStatus s) {
    switch (s) {
        case BoundStatus::holds: return "holds";
        case BoundStatus::holds_within_uncertainty: return "holds_within_uncertainty";
        case BoundStatus::violated: return "violated";
        case BoundStatus::out_of_domain: return "out_of_domain";
    }
    return "unknown";
}

inline nlohmann::json sandwich_to_json(const SandwichReport& rep) {
    auto est = [](const FdEstimate& e) {
        return nlohmann::json{{"value", e.value},
                              {"uncertainty", e.uncertainty},
                              {"coarse", e.coarse},
                              {"fine", e.fine}};
    };
    auto side = [](const SandwichSide& s) {
        return nlohmann::json{{"rhs_central", s.rhs_central},
                              {"rhs_lo", s.rhs_lo},
                              {"rhs_hi", s.rhs_hi},
                              {"margin_central", s.margin_central},
                              {"status", status_name(s.status)}};
    };
    return nlohmann::json{{"schema", kSchemaVersion},
                          {"n", rep.n},
                          {"lambda_d", rep.lambda_discrete},
                          {"lambda_gstar", est(rep.star)},
                          {"lambda_dilated", est(rep.ball)},
                          {"upper", side(rep.upper)},
                          {"lower", side(rep.lower)}};
}

inline nlohmann::json disks_to_json(const std::vector<DiskReport>& reports) {
    nlohmann::json rows = nlohmann::json::array();
    for (const DiskReport& r : reports) {
        nlohmann::json row{{"n", r.n},
                           {"lambda_discrete", r.lambda_discrete},
                           {"target", r.lambda_continuum_target},
                           {"symdiff_area", r.symdiff_area},
                           {"centroid", {r.centroid_x, r.centroid_y}}};
        if (r.lambda_fd != 0.0) row["lambda_fd"] = r.lambda_fd;
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"schema", kSchemaVersion}, {"disks", std::move(rows)}};
}

inline nlohmann::json decay_to_json(const DecayReport& rep) {
    return nlohmann::json{{"schema", kSchemaVersion},
                          {"slope_fit", rep.slope_fit},
                          {"slope_expected", rep.slope_expected},
                          {"diverges", rep.diverges},
                          {"lambda_g", rep.lambda_g},
                          {"lambda_h", rep.lambda_h},
                          {"window", {rep.window_lo, rep.window_hi}}};
}

// CSV with header k, p_exact, p_mc, band; missing columns stay empty
inline std::string curves_to_csv(const SurvivalCurve* exact,
                                 const SurvivalCurve* mc) {
    const int K = exact ? exact->steps() : mc->steps();
    std::string out = "k,p_exact,p_mc,band\n";
    char buf[96];
    for (int k = 0; k <= K; ++k) {
        out += std::to_string(k);
        out += ',';
        if (exact) {
            std::snprintf(buf, sizeof buf, "%.17g", exact->p[std::size_t(k)]);
            out += buf;
        }
        out += ',';
        if (mc) {
            std::snprintf(buf, sizeof buf, "%.17g", mc->p[std::size_t(k)]);
            out += buf;
        }
        out += ',';
        if (mc) {
            std::snprintf(buf, sizeof buf, "%.17g",
                          mc_band(mc->p[std::size_t(k)], mc->trials));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace fk
